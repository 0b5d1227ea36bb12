#include <catch2/catch_amalgamated.hpp>

#include "snyder/series_parser.hpp"

using namespace snyder;

namespace {

ExactComplex r(long n, long d = 1) { return ExactComplex::rational(n, d); }

template <typename F>
parse_error capture(F&& f) {
    try {
        f();
    } catch (const parse_error& e) {
        return e;
    }
    FAIL("expected a parse error");
    return parse_error("unreachable", 0);
}

} // namespace

TEST_CASE("simple expressions") {
    TruncatedSeries s = parse_series("-u/2", 3);
    REQUIRE(s.at(0) == r(0));
    REQUIRE(s.at(1) == r(-1, 2));
    REQUIRE(s.at(2) == r(0));

    REQUIRE(parse_series("0", 2).is_zero());
    REQUIRE(parse_series("1", 2).at(0) == r(1));
    REQUIRE(parse_series("u^2", 3).at(2) == r(1));
    REQUIRE(parse_series("u*u*u", 3).at(3) == r(1));
    REQUIRE(parse_series("2/3", 1).at(0) == r(2, 3));
}

TEST_CASE("corner kernel expression") {
    // 1/(1+sqrt(1+u)) expands to 1/2 - u/8 + u^2/16 + ...
    TruncatedSeries s = parse_series("1/(1+sqrt(1+u))", 2);
    REQUIRE(s.at(0) == r(1, 2));
    REQUIRE(s.at(1) == r(-1, 8));
    REQUIRE(s.at(2) == r(1, 16));
}

TEST_CASE("rational literal binds tighter than division") {
    // 3/4^2 = (3/4)^2
    REQUIRE(parse_series("3/4^2", 1).at(0) == r(9, 16));
    // but u/2^2 is u/(2^2) since u/2 is not a rational literal
    REQUIRE(parse_series("u/2^2", 2).at(1) == r(1, 4));
}

TEST_CASE("precedence and grouping") {
    TruncatedSeries s = parse_series("1+2*u^2", 3);
    REQUIRE(s.at(0) == r(1));
    REQUIRE(s.at(1) == r(0));
    REQUIRE(s.at(2) == r(2));
    REQUIRE(parse_series("(1+u)^2", 2) == parse_series("1+2*u+u^2", 2));
    REQUIRE(parse_series("1 - -u", 2) == parse_series("1+u", 2));
    REQUIRE(parse_series(" - u / 2 ", 2) == parse_series("-u/2", 2));
}

TEST_CASE("sqrt round trips") {
    TruncatedSeries s = parse_series("sqrt(1-u)", 4);
    REQUIRE(s == (TruncatedSeries::one(4) - TruncatedSeries::variable(4)).sqrt());
    REQUIRE(series_equal_mod(s * s, parse_series("1-u", 4), 4));
}

TEST_CASE("unterminated sqrt reports the end offset") {
    parse_error e = capture([] { parse_series("sqrt(u", 3); });
    REQUIRE(e.offset() == 7);
    REQUIRE(std::string(e.what()).find("offset 7") != std::string::npos);
}

TEST_CASE("sqrt of a series vanishing at zero is rejected") {
    parse_error e = capture([] { parse_series("sqrt(u)", 3); });
    REQUIRE(std::string(e.what()).find("zero constant term") != std::string::npos);
    REQUIRE(e.offset() == 1);
}

TEST_CASE("lexical errors") {
    REQUIRE_THROWS_AS(parse_series("phi", 2), parse_error);
    REQUIRE_THROWS_AS(parse_series("1 ? 2", 2), parse_error);
    REQUIRE_THROWS_AS(parse_series("", 2), parse_error);
    REQUIRE_THROWS_AS(parse_series("1 + ", 2), parse_error);
    REQUIRE_THROWS_AS(parse_series("u u", 2), parse_error);
    REQUIRE_THROWS_AS(parse_series("(1+u", 2), parse_error);
    REQUIRE_THROWS_AS(parse_series("1/0", 2), parse_error);
    REQUIRE_THROWS_AS(parse_series("1/u", 2), parse_error);
    REQUIRE_THROWS_AS(parse_series("u^99999", 2), parse_error);
    REQUIRE_THROWS_AS(parse_series("u^u", 2), parse_error);
}

TEST_CASE("offsets are one based") {
    parse_error e1 = capture([] { parse_series("?", 2); });
    REQUIRE(e1.offset() == 1);
    parse_error e2 = capture([] { parse_series("u + ?", 2); });
    REQUIRE(e2.offset() == 5);
}
