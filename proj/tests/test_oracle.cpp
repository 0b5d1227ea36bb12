#include <catch2/catch_amalgamated.hpp>

#include "snyder/rep_oracle.hpp"

using namespace snyder;

TEST_CASE("column letter matrices close under the so bracket") {
    REQUIRE(oracle_j_bracket_check(Metric::lorentzian(2)));
    REQUIRE(oracle_j_bracket_check(Metric::euclidean(2)));
    REQUIRE(oracle_j_bracket_check(Metric::lorentzian(3)));
    REQUIRE(oracle_j_bracket_check(Metric::euclidean(3)));
    REQUIRE(oracle_j_bracket_check(Metric::lorentzian(4)));
    REQUIRE(oracle_j_bracket_check(Metric::euclidean(4)));
}

TEST_CASE("oracle validates small scalar-kernel models") {
    Metric m = Metric::lorentzian(2);
    Realization R = build_snyder_original(m, 4);
    OracleReport rep = rep_oracle(R, 3);
    REQUIRE(rep.ok);
    REQUIRE(rep.model == "snyder-original");
    REQUIRE(rep.dim == 2);
    REQUIRE(rep.dpoly == 3);
    // monomials of degree <= 3 in two variables, no column index
    REQUIRE(rep.basis_size == 10);
    // three canonical-pair relations plus R1..R3, all index tuples
    REQUIRE(rep.records.size() == 3 * 4 + 4 + 8 + 16);
    for (const OracleRecord& rec : rep.records) REQUIRE(rec.ok);

    Realization Rp = build_model(ModelKind::snyder_phi, m, 6);
    REQUIRE(rep_oracle(Rp, 3).ok);
}

TEST_CASE("oracle validates letter-carrying models") {
    Metric m3 = Metric::lorentzian(3);
    Realization E = build_extended_snyder(m3, 4);
    OracleReport rep = rep_oracle(E, 2);
    REQUIRE(rep.ok);
    // 20 monomials of degree <= 2 in three variables, tensored with 3 columns
    REQUIRE(rep.basis_size == 30);
    REQUIRE(rep_oracle(build_kappa_extended(m3, 4), 2).ok);
    REQUIRE(rep_oracle(build_kappa_poincare_natural(m3, 4), 2).ok);
    REQUIRE(rep_oracle(build_kappa_mixed(m3, 4), 2).ok);

    Metric e2 = Metric::euclidean(2);
    REQUIRE(rep_oracle(build_extended_snyder(e2, 4), 3).ok);
}

TEST_CASE("oracle accepts custom exact parameter values") {
    Metric m = Metric::lorentzian(2);
    OracleParams par;
    par.beta = mpq_class(2, 5);
    par.a = {mpq_class(1, 3), mpq_class(1, 9)};
    REQUIRE(rep_oracle(build_kappa_mixed(m, 4), 3, &par).ok);
    REQUIRE(rep_oracle(build_extended_snyder(m, 4), 2, &par).ok);
    REQUIRE(rep_oracle(build_snyder_original(m, 4), 3, &par).ok);
}

TEST_CASE("oracle detects injected faults") {
    Metric m = Metric::lorentzian(2);

    OracleReport flip = rep_oracle(build_extended_snyder(m, 4), 2, nullptr,
                                   Mutation::flip_xhat_term);
    REQUIRE_FALSE(flip.ok);
    bool r1_failed = false;
    for (const OracleRecord& rec : flip.records)
        if (!rec.ok && rec.name == "R1") r1_failed = true;
    REQUIRE(r1_failed);

    // the kernel fault enters at parameter weight four, so the probe space
    // must hold degree-four polynomials to see it
    Realization Rp = build_model(ModelKind::snyder_phi, m, 6);
    REQUIRE(rep_oracle(Rp, 4).ok);
    REQUIRE_FALSE(rep_oracle(Rp, 4, nullptr, Mutation::phi2_plus_u).ok);

    REQUIRE_FALSE(rep_oracle(build_kappa_mixed(m, 4), 2, nullptr,
                             Mutation::drop_a_term)
                      .ok);
}

TEST_CASE("oracle rejects unusable configurations") {
    REQUIRE_THROWS_AS(rep_oracle(build_snyder_original(Metric::lorentzian(5), 2), 2),
                      error);
    Metric m = Metric::lorentzian(2);
    REQUIRE_THROWS_AS(rep_oracle(build_snyder_original(m, 4), 0), error);

    OracleParams bad;
    bad.beta = mpq_class(1, 7);
    bad.a = {mpq_class(0)}; // wrong length for d = 2
    REQUIRE_THROWS_AS(rep_oracle(build_snyder_original(m, 4), 2, &bad), error);

    // a stored kernel bundle whose series order cannot cover the probe degree
    SeriesBundle shallow = bundle_from_phi1(default_phi1(3), 2);
    Realization Rs = build_snyder_phi(shallow, m, 4);
    REQUIRE_THROWS_AS(rep_oracle(Rs, 3), error);

    // mutations that do not apply to a model are rejected
    REQUIRE_THROWS_AS(rep_oracle(build_snyder_original(m, 4), 2, nullptr,
                                 Mutation::flip_xhat_term),
                      error);
}
