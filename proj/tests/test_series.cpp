#include <catch2/catch_amalgamated.hpp>

#include "snyder/series.hpp"

#include <random>

using namespace snyder;

namespace {

TruncatedSeries coeffs(std::initializer_list<ExactComplex> v) {
    return TruncatedSeries::from_coeffs(std::vector<ExactComplex>(v));
}

ExactComplex r(long n, long d = 1) { return ExactComplex::rational(n, d); }

} // namespace

TEST_CASE("square root of 1 - u") {
    TruncatedSeries s = TruncatedSeries::one(3) - TruncatedSeries::variable(3);
    TruncatedSeries root = s.sqrt();
    REQUIRE(root == coeffs({r(1), r(-1, 2), r(-1, 8), r(-1, 16)}));
    REQUIRE(series_equal_mod(root * root, s, 3));
}

TEST_CASE("geometric reciprocal") {
    TruncatedSeries s = TruncatedSeries::one(2) - TruncatedSeries::variable(2);
    REQUIRE(s.reciprocal() == coeffs({r(1), r(1), r(1)}));
}

TEST_CASE("derivative") {
    TruncatedSeries u2 = TruncatedSeries::variable(3) * TruncatedSeries::variable(3);
    TruncatedSeries d = u2.derivative();
    REQUIRE(d == coeffs({r(0), r(2), r(0)}));
    REQUIRE_THROWS_AS(TruncatedSeries::one(0).derivative(), error);
}

TEST_CASE("sqrt preconditions") {
    REQUIRE_THROWS_AS(TruncatedSeries::variable(3).sqrt(), error);
    TruncatedSeries two = TruncatedSeries::constant(ExactComplex(2), 3);
    REQUIRE_THROWS_AS(two.sqrt(), error);
    TruncatedSeries imag = TruncatedSeries::constant(ExactComplex::i(), 3);
    REQUIRE_THROWS_AS(imag.sqrt(), error);
    TruncatedSeries q = TruncatedSeries::constant(r(9, 4), 2) + TruncatedSeries::variable(2);
    REQUIRE(q.sqrt().at(0) == r(3, 2));
    REQUIRE(series_equal_mod(q.sqrt() * q.sqrt(), q, 2));
}

TEST_CASE("reciprocal precondition") {
    REQUIRE_THROWS_AS(TruncatedSeries::variable(2).reciprocal(), error);
}

TEST_CASE("order bookkeeping") {
    TruncatedSeries a(4);
    REQUIRE(a.order == 4);
    REQUIRE(a.is_zero());
    REQUIRE(a.valuation() == 5);
    TruncatedSeries u = TruncatedSeries::variable(4);
    REQUIRE(u.valuation() == 1);
    REQUIRE(u.shift_up(2).order == 6);
    REQUIRE(u.shift_up(2).valuation() == 3);
    REQUIRE(u.truncated(0).is_zero());
    REQUIRE_THROWS_AS(u.truncated(9), error);
    // arithmetic narrows to the weakest input order
    REQUIRE((TruncatedSeries::one(5) + TruncatedSeries::one(3)).order == 3);
    REQUIRE((TruncatedSeries::one(5) * TruncatedSeries::one(3)).order == 3);
}

TEST_CASE("comparison mod a power") {
    TruncatedSeries a = TruncatedSeries::one(4);
    TruncatedSeries b = TruncatedSeries::one(4) + TruncatedSeries::variable(4).shift_up(3).truncated(4);
    REQUIRE(series_equal_mod(a, b, 3));
    REQUIRE_FALSE(series_equal_mod(a, b, 4));
    REQUIRE_THROWS_AS(series_equal_mod(a, b, 5), error);
}

TEST_CASE("series rendering") {
    REQUIRE(coeffs({r(1), r(-1, 2), r(-1, 8)}).str() == "1, -1/2, -1/8");
    REQUIRE(TruncatedSeries::zero(1).str() == "0, 0");
}

TEST_CASE("algebra laws on random series") {
    const int K = 6;
    std::mt19937_64 rng(0x5eed1003ULL);
    auto rnd = [&](bool unit_head) {
        TruncatedSeries s(K);
        for (int n = 0; n <= K; ++n) {
            mpq_class q(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 5));
            q.canonicalize();
            s.c[static_cast<std::size_t>(n)] = ExactComplex(q);
        }
        if (unit_head) s.c[0] = ExactComplex(1);
        return s;
    };
    for (int t = 0; t < 60; ++t) {
        TruncatedSeries a = rnd(false), b = rnd(false), c = rnd(false);
        REQUIRE(a * b == b * a);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a + (-a) == TruncatedSeries::zero(K));

        TruncatedSeries g = rnd(true);
        REQUIRE(g * g.reciprocal() == TruncatedSeries::one(K));
        REQUIRE(g.sqrt() * g.sqrt() == g);
        REQUIRE(g.pow(3) == g * g * g);
    }
}

TEST_CASE("derivative is a derivation") {
    const int K = 6;
    std::mt19937_64 rng(0x5eed1004ULL);
    auto rnd = [&]() {
        TruncatedSeries s(K);
        for (int n = 0; n <= K; ++n) {
            mpq_class q(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 4));
            q.canonicalize();
            s.c[static_cast<std::size_t>(n)] = ExactComplex(q);
        }
        return s;
    };
    for (int t = 0; t < 40; ++t) {
        TruncatedSeries a = rnd(), b = rnd();
        // (ab)' = a'b + ab', both sides reliable to order K-1
        TruncatedSeries lhs = (a * b).derivative();
        TruncatedSeries rhs = a.derivative() * b.truncated(K - 1) + a.truncated(K - 1) * b.derivative();
        REQUIRE(lhs == rhs);
    }
}
