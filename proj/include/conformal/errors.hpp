#pragma once

#include <stdexcept>
#include <string>

namespace conformal {

// Base of every error the library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonConvergence : Error { using Error::Error; };
struct NonFinite : Error { using Error::Error; };
struct NoSignChange : Error { using Error::Error; };
struct PoleError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct IndexError : Error { using Error::Error; };
struct UnmatchedCase : Error { using Error::Error; };
struct Divergent : Error { using Error::Error; };
struct NotExplicit : Error { using Error::Error; };
struct UnknownEntry : Error { using Error::Error; };
struct DegenerateRoot : Error { using Error::Error; };
struct DivisionNearZero : Error { using Error::Error; };

}  // namespace conformal
