#include <cmath>
#include <sstream>

#include "doctest.h"
#include "table_io.hpp"

using namespace conformal::cli;

TEST_CASE("format_number: shortest round trip") {
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(-2.5e-12) == "-2.5e-12");
    const double third = 1.0 / 3.0;
    CHECK(std::stod(format_number(third)) == third);
    CHECK(format_number(std::nan("")) == "nan");
    CHECK(format_number(-INFINITY) == "-inf");
}

TEST_CASE("write_csv") {
    Table t;
    t.header = {"x", "name", "y"};
    t.add({0.5, std::string("a"), 2.0});
    t.add({1.0, std::string("b"), 0.125});
    std::ostringstream out;
    write_csv(t, out);
    CHECK(out.str() == "x,name,y\n0.5,a,2\n1,b,0.125\n");
    CHECK_THROWS(t.add({1.0}));
}

TEST_CASE("write_svg: fixed viewBox and one path per numeric column") {
    Table t;
    t.header = {"x", "y1", "label", "y2"};
    for (int i = 0; i <= 10; ++i) t.add({0.1 * i, std::sin(i), std::string("s"), i == 5 ? NAN : 0.5 * i});
    std::ostringstream a, b;
    write_svg(t, "demo <plot>", a);
    write_svg(t, "demo <plot>", b);
    const std::string s = a.str();
    CHECK(s == b.str());
    CHECK(s.find("viewBox=\"0 0 800 600\"") != std::string::npos);
    CHECK(s.find("demo &lt;plot&gt;") != std::string::npos);
    std::size_t paths = 0;
    for (auto pos = s.find("<path"); pos != std::string::npos; pos = s.find("<path", pos + 1)) ++paths;
    CHECK(paths == 2);
    CHECK(s.find("href") == std::string::npos);
}

TEST_CASE("parse_index_range") {
    CHECK(parse_index_range("3") == std::vector<std::size_t>{3});
    CHECK(parse_index_range("1..4") == std::vector<std::size_t>{1, 2, 3, 4});
    CHECK(parse_index_range("1,3,5") == std::vector<std::size_t>{1, 3, 5});
    CHECK_THROWS_AS(parse_index_range("0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_index_range("4..2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_index_range("a"), std::invalid_argument);
}
