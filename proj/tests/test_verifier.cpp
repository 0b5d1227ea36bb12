#include <catch2/catch_amalgamated.hpp>

#include "snyder/verifier.hpp"

using namespace snyder;

namespace {

int expected_instances(const Realization& R) {
    const int d = R.metric.d;
    int n = d * d            // coordinate pair bracket
          + d * d * d        // rotation against coordinate
          + d * d * d * d;   // rotation against rotation
    if (R.has_tensor()) n += d * d * d * d + 2 * d * d * d; // letter sector
    return n;
}

} // namespace

TEST_CASE("full catalogue passes at small dimension") {
    Metric m = Metric::lorentzian(2);
    for (ModelKind kind : model_catalogue()) {
        const int D = model_family(kind) == RelationFamily::snyder ? 6 : 4;
        Realization R = build_model(kind, m, D);
        VerificationReport rep = verify(R, model_relations(R), D);
        INFO("model " << model_to_string(kind));
        REQUIRE(rep.ok);
        REQUIRE(static_cast<int>(rep.records.size()) == expected_instances(R));
        for (const RelationRecord& rec : rep.records) {
            REQUIRE(rec.ok);
            REQUIRE(rec.residual_terms == 0);
        }
    }
}

TEST_CASE("euclidean signature verifies too") {
    Metric m = Metric::euclidean(2);
    Realization R = build_extended_snyder(m, 6);
    REQUIRE(verify(R, model_relations(R), 6).ok);
    Realization K = build_kappa_extended(m, 4);
    REQUIRE(verify(K, model_relations(K), 4).ok);
}

TEST_CASE("canonical pair relations hold for any model") {
    Metric m = Metric::lorentzian(3);
    Realization R = build_snyder_original(m, 4);
    VerificationReport rep = verify(R, heisenberg_relations(), 4);
    REQUIRE(rep.ok);
    REQUIRE(rep.records.size() == 27);
}

TEST_CASE("verification can be run below the build grade") {
    Metric m = Metric::lorentzian(2);
    Realization R = build_extended_snyder(m, 6);
    REQUIRE(verify(R, model_relations(R), 4).ok);
    REQUIRE_THROWS_AS(verify(R, model_relations(R), 8), error);
}

TEST_CASE("fault injection is detected and localized") {
    Metric m = Metric::lorentzian(2);
    Realization R = build_extended_snyder(m, 4, Mutation::flip_xhat_term);
    VerificationReport rep = verify(R, model_relations(R), 4);
    REQUIRE_FALSE(rep.ok);
    int fails = 0;
    for (const RelationRecord& rec : rep.records) {
        if (!rec.ok) {
            ++fails;
            // the flipped tensor term only disturbs the coordinate bracket
            REQUIRE(rec.name == "R1");
            REQUIRE(rec.residual_terms > 0);
            REQUIRE(rec.max_residual_weight >= 2);
        }
    }
    REQUIRE(fails > 0);

    Realization R2 = build_kappa_mixed(m, 4, Mutation::drop_a_term);
    REQUIRE_FALSE(verify(R2, model_relations(R2), 4).ok);

    SeriesBundle b = bundle_from_phi1(default_phi1(3), 2);
    Realization R3 = build_snyder_phi(b, m, 4, Mutation::phi2_plus_u);
    REQUIRE_FALSE(verify(R3, model_relations(R3), 4).ok);
}

TEST_CASE("reports serialize deterministically") {
    Metric m = Metric::lorentzian(2);
    Realization R = build_snyder_original(m, 4);
    VerificationReport rep1 = verify(R, model_relations(R), 4);
    VerificationReport rep2 = verify(R, model_relations(R), 4);
    std::string j1 = report_to_json(rep1, false).dump(2);
    std::string j2 = report_to_json(rep2, false).dump(2);
    REQUIRE(j1 == j2);

    nlohmann::ordered_json j = report_to_json(rep1, false);
    // exact schema: top level keys in order
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    REQUIRE(keys == std::vector<std::string>{"model", "dim", "grade", "relations", "ok",
                                             "elapsed_ms"});
    REQUIRE(j["model"] == "snyder-original");
    REQUIRE(j["dim"] == 2);
    REQUIRE(j["grade"] == 4);
    REQUIRE(j["ok"] == true);
    REQUIRE(j["elapsed_ms"] == 0);
    REQUIRE(j["relations"].is_array());
    REQUIRE_FALSE(j["relations"].empty());
    std::vector<std::string> rkeys;
    for (auto it = j["relations"][0].begin(); it != j["relations"][0].end(); ++it)
        rkeys.push_back(it.key());
    REQUIRE(rkeys == std::vector<std::string>{"name", "indices", "residual_terms", "ok"});
}

TEST_CASE("text report summarizes failures") {
    Metric m = Metric::lorentzian(2);
    Realization ok = build_snyder_original(m, 4);
    VerificationReport rep = verify(ok, model_relations(ok), 4);
    std::string text = report_to_text(rep);
    REQUIRE(text.find("ok (") != std::string::npos);
    REQUIRE(text.find("FAIL") == std::string::npos);

    Realization bad = build_extended_snyder(m, 4, Mutation::flip_xhat_term);
    VerificationReport brep = verify(bad, model_relations(bad), 4);
    std::string btext = report_to_text(brep);
    REQUIRE(btext.find("FAIL R1") != std::string::npos);
    REQUIRE(btext.find("FAILED (") != std::string::npos);
}

TEST_CASE("series identity suite") {
    IdentityReport rep = check_series_identities(6);
    REQUIRE(rep.ok);
    REQUIRE(rep.records.size() == 4);
    std::vector<std::string> names;
    for (const auto& rec : rep.records) {
        names.push_back(rec.name);
        REQUIRE(rec.ok);
    }
    REQUIRE(names == std::vector<std::string>{"kernel-product", "dilation-closed-form",
                                              "pair-identity", "dilation-two-routes"});

    // the deliberate fault only breaks the pair identity
    IdentityReport bad = check_series_identities(6, true);
    REQUIRE_FALSE(bad.ok);
    for (const auto& rec : bad.records) {
        if (rec.name == "pair-identity")
            REQUIRE_FALSE(rec.ok);
        else
            REQUIRE(rec.ok);
    }

    REQUIRE_THROWS_AS(check_series_identities(1), error);
}
