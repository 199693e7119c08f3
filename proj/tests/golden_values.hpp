// Generated by tests/oracle/generate_goldens.py (mpmath, 50 digits). Do not edit.
#pragma once
namespace golden {
inline constexpr double gamma_1_75 = 9.1906252684888323385e-1;
inline constexpr double besselj_third_2_5 = 1.9832093341860812468e-1;
inline constexpr double bessely_0_1 = 8.8256964215676957983e-2;
inline constexpr double bessely_quarter_5 = -2.1892412704208206577e-1;
inline constexpr double besselj0_zero1 = 2.4048255576957727686;
inline constexpr double besselj_third_zero1 = 2.9025862484169524802;
inline constexpr double besselj_third_zero2 = 6.0327470572658419594;
inline constexpr double hyp0f1_2_1 = 1.5906368546373290634;
inline constexpr double hyp1f2_1_2_3_m2 = 7.170200131194574972e-1;
inline constexpr double hyp1f2_large = 8.9504010465470878238e-4;
inline constexpr double airy_ai_2 = 3.4924130423274379135e-2;
inline constexpr double airy_bi_2 = 3.2980949999782147103;
inline constexpr double airy_ai_m7 = 1.8428083525050563728e-1;
inline constexpr double airy_ai_15 = 2.164962520737992299e-18;
inline constexpr double jbasis_half_n1_x05 = 1.2247397520322658972;
inline constexpr double jbasis_half_n3_x07 = 1.0672355236893574675;
inline constexpr double jbasis_quarter_n2_x03 = -5.6090374975386801825e-2;
inline constexpr double eigen_half_n1 = 4.7390663978432991982;
inline constexpr double moments_tenth_m1 = 2.5742452689463066539e-1;
inline constexpr double moments_tenth_sd = 1.854331920378190739e-1;
inline constexpr double moments_tenth_skew = 8.2739028861634859616e-1;
inline constexpr double moments_tenth_kurt = 3.1212968861622748568;
inline constexpr double moments_half_m1 = 3.867821531727386163e-1;
inline constexpr double moments_half_sd = 1.918430017953491639e-1;
inline constexpr double moments_half_skew = 3.2792553234327831301e-1;
inline constexpr double moments_half_kurt = 2.4539999412704373613;
inline constexpr double fb_cn_half_gamma1_n3 = 3.274269489824480099e-2;
inline constexpr double fb_cn_half_gamma04_n3 = 6.2943962190400140282e-2;
}  // namespace golden
