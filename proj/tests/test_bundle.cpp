#include <catch2/catch_amalgamated.hpp>

#include "snyder/bundle.hpp"

#include <random>

using namespace snyder;

namespace {

ExactComplex r(long n, long d = 1) { return ExactComplex::rational(n, d); }

TruncatedSeries poly(std::initializer_list<ExactComplex> v) {
    return TruncatedSeries::from_coeffs(std::vector<ExactComplex>(v));
}

TruncatedSeries scaled_u(const ExactComplex& c, int K) {
    return TruncatedSeries::variable(K).scaled(c);
}

} // namespace

TEST_CASE("generator series must vanish at zero") {
    REQUIRE_THROWS_AS(TransformSpec(TruncatedSeries::one(3), TruncatedSeries::zero(3)), error);
    REQUIRE_THROWS_AS(TransformSpec(TruncatedSeries::zero(3), TruncatedSeries::one(3)), error);
    REQUIRE_NOTHROW(TransformSpec(TruncatedSeries::zero(3), scaled_u(r(-1, 2), 3)));
    REQUIRE_THROWS_AS(g1_from_F(TruncatedSeries::one(3), 3), error);
}

TEST_CASE("coordinate kernel ladder") {
    TruncatedSeries F = scaled_u(r(-1, 2), 2);
    REQUIRE(g1_from_F(F, 2) == poly({r(1), r(-1, 2), r(-1, 8)}));

    REQUIRE(g1_from_F(TruncatedSeries::zero(2), 2) == TruncatedSeries::one(2));

    // F = c u gives 1 + c u - c^2 u^2 / 2
    ExactComplex c = r(2, 3);
    TruncatedSeries g = g1_from_F(scaled_u(c, 2), 2);
    REQUIRE(g == poly({r(1), c, -(c * c) * r(1, 2)}));
}

TEST_CASE("momentum kernel ladder") {
    TruncatedSeries F = scaled_u(r(-1, 2), 2);
    REQUIRE(g3_from_F(F, 2) == poly({r(1), r(1, 2), r(3, 8)}));
    REQUIRE(g3_from_F(TruncatedSeries::zero(2), 2) == TruncatedSeries::one(2));
    ExactComplex c = r(3, 5);
    REQUIRE(series_equal_mod(g3_from_F(scaled_u(c, 1), 1), poly({r(1), -c}), 1));
}

TEST_CASE("dilation kernel ladder") {
    REQUIRE(g2_from_F(TruncatedSeries::zero(3), 2).is_zero());
    // first ladder step gives the constant 2 dF/du at u = 0
    ExactComplex c = r(4, 7);
    REQUIRE(g2_from_F(scaled_u(c, 2), 1).at(0) == ExactComplex(2) * c);
}

TEST_CASE("order preconditions") {
    TruncatedSeries F = scaled_u(r(1, 3), 2);
    REQUIRE_THROWS_AS(g1_from_F(F, 3), error);
    REQUIRE_THROWS_AS(g3_from_F(F, 3), error);
    REQUIRE_THROWS_AS(g2_from_F(F, 2), error); // needs order K + 1
    REQUIRE_NOTHROW(g2_from_F(F, 1));
    REQUIRE_THROWS_AS(phi_bundle(TransformSpec(TruncatedSeries::zero(2), F), 2), error);
}

TEST_CASE("canonical transform bundle") {
    const int K = 6;
    TransformSpec spec(TruncatedSeries::zero(K + 1), scaled_u(r(-1, 2), K + 1));
    SeriesBundle b = phi_bundle(spec, K);
    TruncatedSeries target = (TruncatedSeries::one(K) - TruncatedSeries::variable(K)).sqrt();
    REQUIRE(b.phi1 == target);
    REQUIRE(b.phi2.is_zero());
    REQUIRE(b.phi3.is_zero());
    REQUIRE(b.g1 == b.phi1);
    // g3 = 1/g1 and the dilation closed form both hold
    REQUIRE(b.g1 * b.g3 == TruncatedSeries::one(K));
}

TEST_CASE("identity transform bundle") {
    const int K = 4;
    TransformSpec spec(TruncatedSeries::zero(K + 1), TruncatedSeries::zero(K + 1));
    SeriesBundle b = phi_bundle(spec, K);
    REQUIRE(b.phi1 == TruncatedSeries::one(K));
    REQUIRE(b.phi2 == TruncatedSeries::one(K));
    REQUIRE(b.phi3.is_zero());
}

TEST_CASE("pair identity holds for transform bundles") {
    const int K = 6;
    std::mt19937_64 rng(0x5eed1005ULL);
    for (int t = 0; t < 30; ++t) {
        TruncatedSeries F = TruncatedSeries::zero(K + 2);
        for (int deg = 1; deg <= 3; ++deg) {
            mpq_class q(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 5));
            q.canonicalize();
            F.c[static_cast<std::size_t>(deg)] = ExactComplex(q);
        }
        SeriesBundle b = phi_bundle(TransformSpec(TruncatedSeries::zero(K + 2), F), K);
        REQUIRE(phi_pair_identity_holds(b.phi1, b.phi2, K - 1));
        // a deliberate perturbation must break it
        REQUIRE_FALSE(
            phi_pair_identity_holds(b.phi1, b.phi2 + TruncatedSeries::variable(K), K - 1));
    }
}

TEST_CASE("bundle from the coordinate kernel alone") {
    const int K = 5;
    TruncatedSeries phi1 = (TruncatedSeries::one(K + 1) - TruncatedSeries::variable(K + 1)).sqrt();
    SeriesBundle b = bundle_from_phi1(phi1, K);
    REQUIRE(b.phi1 == phi1.truncated(K));
    REQUIRE(b.phi2.is_zero());
    REQUIRE(b.g1 * b.g3 == TruncatedSeries::one(K));
    REQUIRE(phi_pair_identity_holds(b.phi1, b.phi2, K - 1));

    SeriesBundle unit = bundle_from_phi1(TruncatedSeries::one(K + 1), K);
    REQUIRE(unit.phi2 == TruncatedSeries::one(K));
    REQUIRE(unit.g2.is_zero());

    REQUIRE_THROWS_AS(bundle_from_phi1(TruncatedSeries::one(K), K), error);
    REQUIRE_THROWS_AS(
        bundle_from_phi1(TruncatedSeries::constant(ExactComplex(2), K + 1), K), error);
}

TEST_CASE("inverting the coordinate kernel map") {
    const int K = 6;
    TruncatedSeries target = (TruncatedSeries::one(K) - TruncatedSeries::variable(K)).sqrt();
    TruncatedSeries F = solve_F_for_phi1(target, K);
    REQUIRE(F.at(1) == r(-1, 2));
    for (int n = 2; n <= K; ++n) REQUIRE(F.at(n) == r(0));
    REQUIRE(g1_from_F(F, K) == target);

    // round trip through a generic kernel
    std::mt19937_64 rng(0x5eed1006ULL);
    for (int t = 0; t < 20; ++t) {
        TruncatedSeries want = TruncatedSeries::one(K);
        for (int n = 1; n <= K; ++n) {
            mpq_class q(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 5));
            q.canonicalize();
            want.c[static_cast<std::size_t>(n)] = ExactComplex(q);
        }
        TruncatedSeries Fw = solve_F_for_phi1(want, K);
        REQUIRE(g1_from_F(Fw, K) == want);
    }

    REQUIRE_THROWS_AS(solve_F_for_phi1(TruncatedSeries::variable(K), K), error);
}
