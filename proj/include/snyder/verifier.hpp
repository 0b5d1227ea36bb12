#pragma once

#include "snyder/realization.hpp"

#include <json.hpp>

#include <chrono>
#include <functional>
#include <random>
#include <utility>

namespace snyder {

// A relation instance template: given a realization and a concrete index
// tuple, produce the left and right sides as algebra elements. The verifier
// subtracts them and demands exact emptiness after truncation.
using ElementTemplate =
    std::function<AlgebraElement(const Realization&, const std::vector<int>&)>;

struct RelationSpec {
    std::string name;
    int arity = 0;
    ElementTemplate lhs;
    ElementTemplate rhs;
};

struct RelationRecord {
    std::string name;
    std::vector<int> indices;
    int residual_terms = 0;
    int max_residual_weight = 0;
    bool ok = false;
};

struct VerificationReport {
    std::string model;
    int dim = 0;
    int grade = 0;
    std::vector<RelationRecord> records;
    bool ok = false;
    long elapsed_ms = 0;
};

namespace detail {

inline Coefficient beta_sq(int d) {
    return Coefficient::beta_power(d, 2, ExactComplex(1));
}

inline Coefficient a_comp(int d, int mu) {
    return Coefficient::a_component(d, mu, ExactComplex(1));
}

// i * (eta_ac M~_bd - eta_ad M~_bc - eta_bc M~_ad + eta_bd M~_ac) for any
// antisymmetric table of elements provided through `entry`.
inline AlgebraElement so_rhs(const Metric& m, int grade,
                             const std::function<AlgebraElement(int, int)>& entry,
                             int a, int b, int c, int dd) {
    AlgebraElement rhs = AlgebraElement::zero(m, grade);
    auto add = [&](int eta, int r, int s, int sign) {
        if (eta == 0) return;
        rhs += entry(r, s).scaled(ExactComplex(eta * sign));
    };
    add(m.eta(a, c), b, dd, 1);
    add(m.eta(a, dd), b, c, -1);
    add(m.eta(b, c), a, dd, -1);
    add(m.eta(b, dd), a, c, 1);
    return rhs.scaled(ExactComplex::i());
}

} // namespace detail

// Target relations for the model carried by the realization. Names:
//   R1  bracket of two deformed coordinates
//   R2  bracket of a rotation element with a deformed coordinate
//   R3  bracket of two rotation elements (so-type)
//   R4  bracket of two tensor letters (so-type), tensor models only
//   R5x/R5p  tensor letters commute with the undeformed phase space
inline std::vector<RelationSpec> model_relations(const Realization& R) {
    const RelationFamily fam = model_family(R.kind);
    const bool tensor = model_has_tensor(R.kind);
    std::vector<RelationSpec> out;

    out.push_back({"R1", 2,
        [](const Realization& r, const std::vector<int>& ix) {
            return commutator(r.xhat[ix[0]], r.xhat[ix[1]]);
        },
        [fam](const Realization& r, const std::vector<int>& ix) {
            const int d = r.metric.d;
            const int mu = ix[0], nu = ix[1];
            AlgebraElement rhs = AlgebraElement::zero(r.metric, r.grade);
            if (fam != RelationFamily::snyder) {
                rhs += r.xhat[nu].scaled_by(detail::a_comp(d, mu));
                rhs -= r.xhat[mu].scaled_by(detail::a_comp(d, nu));
            }
            if (fam != RelationFamily::kappa_beta0)
                rhs += r.M[mu][nu].scaled_by(detail::beta_sq(d));
            return rhs.scaled(ExactComplex::i());
        }});

    out.push_back({"R2", 3,
        [](const Realization& r, const std::vector<int>& ix) {
            return commutator(r.M[ix[0]][ix[1]], r.xhat[ix[2]]);
        },
        [fam](const Realization& r, const std::vector<int>& ix) {
            const int d = r.metric.d;
            const int mu = ix[0], nu = ix[1], lam = ix[2];
            AlgebraElement rhs = r.xhat[mu].scaled(ExactComplex(r.metric.eta(nu, lam)))
                               - r.xhat[nu].scaled(ExactComplex(r.metric.eta(mu, lam)));
            if (fam != RelationFamily::snyder) {
                rhs += r.M[nu][lam].scaled_by(detail::a_comp(d, mu));
                rhs -= r.M[mu][lam].scaled_by(detail::a_comp(d, nu));
            }
            return rhs.scaled(-ExactComplex::i());
        }});

    out.push_back({"R3", 4,
        [](const Realization& r, const std::vector<int>& ix) {
            return commutator(r.M[ix[0]][ix[1]], r.M[ix[2]][ix[3]]);
        },
        [](const Realization& r, const std::vector<int>& ix) {
            return detail::so_rhs(r.metric, r.grade,
                                  [&](int a, int b) { return r.M[a][b]; },
                                  ix[0], ix[1], ix[2], ix[3]);
        }});

    if (tensor) {
        out.push_back({"R4", 4,
            [](const Realization& r, const std::vector<int>& ix) {
                return commutator(AlgebraElement::xhat_or_zero(r.metric, r.grade, ix[0], ix[1]),
                                  AlgebraElement::xhat_or_zero(r.metric, r.grade, ix[2], ix[3]));
            },
            [](const Realization& r, const std::vector<int>& ix) {
                return detail::so_rhs(r.metric, r.grade,
                                      [&](int a, int b) {
                                          return AlgebraElement::xhat_or_zero(r.metric, r.grade, a, b);
                                      },
                                      ix[0], ix[1], ix[2], ix[3]);
            }});
        auto zero_rhs = [](const Realization& r, const std::vector<int>&) {
            return AlgebraElement::zero(r.metric, r.grade);
        };
        out.push_back({"R5x", 3,
            [](const Realization& r, const std::vector<int>& ix) {
                return commutator(AlgebraElement::xhat_or_zero(r.metric, r.grade, ix[0], ix[1]),
                                  AlgebraElement::x(r.metric, r.grade, ix[2]));
            },
            zero_rhs});
        out.push_back({"R5p", 3,
            [](const Realization& r, const std::vector<int>& ix) {
                return commutator(AlgebraElement::xhat_or_zero(r.metric, r.grade, ix[0], ix[1]),
                                  AlgebraElement::p(r.metric, r.grade, ix[2]));
            },
            zero_rhs});
    }
    return out;
}

// Sanity relations of the undeformed phase space; hold for any realization.
inline std::vector<RelationSpec> heisenberg_relations() {
    std::vector<RelationSpec> out;
    out.push_back({"R-Heis-xp", 2,
        [](const Realization& r, const std::vector<int>& ix) {
            return commutator(AlgebraElement::x(r.metric, r.grade, ix[0]),
                              AlgebraElement::p(r.metric, r.grade, ix[1]));
        },
        [](const Realization& r, const std::vector<int>& ix) {
            return AlgebraElement::scalar(r.metric, r.grade,
                                          ExactComplex::i() * ExactComplex(r.metric.eta(ix[0], ix[1])));
        }});
    auto zero_rhs = [](const Realization& r, const std::vector<int>&) {
        return AlgebraElement::zero(r.metric, r.grade);
    };
    out.push_back({"R-Heis-xx", 2,
        [](const Realization& r, const std::vector<int>& ix) {
            return commutator(AlgebraElement::x(r.metric, r.grade, ix[0]),
                              AlgebraElement::x(r.metric, r.grade, ix[1]));
        },
        zero_rhs});
    out.push_back({"R-Heis-pp", 2,
        [](const Realization& r, const std::vector<int>& ix) {
            return commutator(AlgebraElement::p(r.metric, r.grade, ix[0]),
                              AlgebraElement::p(r.metric, r.grade, ix[1]));
        },
        zero_rhs});
    return out;
}

// Runs every relation over every index tuple (repeats included) and records
// the exact residual size after truncation at parameter weight D.
inline VerificationReport verify(const Realization& R,
                                 const std::vector<RelationSpec>& relations, int D) {
    if (R.grade < D) throw error("realization grade below requested check grade");
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.model = model_to_string(R.kind);
    rep.dim = R.metric.d;
    rep.grade = R.grade;
    rep.ok = true;
    for (const RelationSpec& rel : relations) {
        std::vector<int> ix(static_cast<std::size_t>(rel.arity), 0);
        for (;;) {
            AlgebraElement res = (rel.lhs(R, ix) - rel.rhs(R, ix)).truncated(D);
            RelationRecord rec;
            rec.name = rel.name;
            rec.indices = ix;
            rec.residual_terms = static_cast<int>(res.terms.size());
            rec.max_residual_weight = res.max_param_weight();
            rec.ok = res.is_zero();
            rep.ok = rep.ok && rec.ok;
            rep.records.push_back(std::move(rec));
            int k = rel.arity - 1;
            while (k >= 0 && ++ix[static_cast<std::size_t>(k)] == R.metric.d) {
                ix[static_cast<std::size_t>(k)] = 0;
                --k;
            }
            if (k < 0) break;
        }
    }
    rep.elapsed_ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                           std::chrono::steady_clock::now() - t0)
                                           .count());
    return rep;
}

inline nlohmann::ordered_json report_to_json(const VerificationReport& rep,
                                             bool with_elapsed = true) {
    nlohmann::ordered_json j;
    j["model"] = rep.model;
    j["dim"] = rep.dim;
    j["grade"] = rep.grade;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const RelationRecord& r : rep.records) {
        nlohmann::ordered_json e;
        e["name"] = r.name;
        e["indices"] = r.indices;
        e["residual_terms"] = r.residual_terms;
        e["ok"] = r.ok;
        arr.push_back(std::move(e));
    }
    j["relations"] = std::move(arr);
    j["ok"] = rep.ok;
    j["elapsed_ms"] = with_elapsed ? rep.elapsed_ms : 0L;
    return j;
}

inline std::string report_to_text(const VerificationReport& rep) {
    std::string out = "model " + rep.model + " dim " + std::to_string(rep.dim) +
                      " grade " + std::to_string(rep.grade) + "\n";
    int fails = 0;
    for (const RelationRecord& r : rep.records) {
        if (r.ok) continue;
        ++fails;
        out += "  FAIL " + r.name + " [";
        for (std::size_t k = 0; k < r.indices.size(); ++k) {
            if (k) out += ",";
            out += std::to_string(r.indices[k]);
        }
        out += "] residual_terms=" + std::to_string(r.residual_terms) +
               " max_weight=" + std::to_string(r.max_residual_weight) + "\n";
    }
    out += rep.ok ? "ok (" + std::to_string(rep.records.size()) + " instances)\n"
                  : "FAILED (" + std::to_string(fails) + " of " +
                        std::to_string(rep.records.size()) + " instances)\n";
    out += "elapsed_ms " + std::to_string(rep.elapsed_ms) + "\n";
    return out;
}

struct IdentityRecord {
    std::string name;
    bool ok = false;
};

struct IdentityReport {
    std::vector<IdentityRecord> records;
    bool ok = true;
};

// Property suite over the kernel recurrences: runs the canonical example plus
// deterministic pseudo-random polynomial transforms and checks, modulo u^K,
//   kernel-product      g1 * g3 == 1
//   dilation-closed-form g2 == 2 g1' g1 / (g1 - 2u g1')
//   pair-identity       phi2 (phi1 - 2u phi1') == 1 + 2 phi1' phi1
//   dilation-two-routes phi2 from the recurrence ladder matches phi2 derived
//                       from phi1 alone
// `mutate_phi2` injects a deliberate fault (phi2 + u) ahead of the pair
// identity to prove the check can fail.
inline IdentityReport check_series_identities(int K, bool mutate_phi2 = false) {
    if (K < 2) throw error("series identity suite needs order at least 2");
    IdentityReport rep;
    bool ok_product = true, ok_closed = true, ok_pair = true, ok_routes = true;

    std::mt19937_64 rng(0x5eed0001ULL);
    auto rnd_rat = [&rng]() {
        long num = static_cast<long>(rng() % 9) - 4;
        long den = 1 + static_cast<long>(rng() % 5);
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    };

    const int n_samples = 50;
    for (int t = 0; t < n_samples; ++t) {
        TruncatedSeries F = TruncatedSeries::zero(K + 2);
        if (t == 0) {
            F.c[1] = ExactComplex::rational(-1, 2);
        } else {
            for (int deg = 1; deg <= 3 && deg <= K + 2; ++deg)
                F.c[static_cast<std::size_t>(deg)] = ExactComplex(rnd_rat());
        }

        TruncatedSeries g1hi = g1_from_F(F, K + 1);
        TruncatedSeries g3hi = g3_from_F(F, K + 1);
        TruncatedSeries g2 = g2_from_F(F, K);

        ok_product = ok_product &&
                     series_equal_mod(g1hi * g3hi, TruncatedSeries::one(K + 1), K);

        TruncatedSeries dg1 = g1hi.derivative();
        TruncatedSeries num = (dg1 * g1hi.truncated(K)).scaled(ExactComplex(2));
        TruncatedSeries den = g1hi.truncated(K)
                            - dg1.shift_up(1).truncated(K).scaled(ExactComplex(2));
        ok_closed = ok_closed && series_equal_mod(g2, num * den.reciprocal(), K);

        SeriesBundle b = phi_bundle(TransformSpec(TruncatedSeries::zero(K + 2), F), K);
        SeriesBundle b2 = bundle_from_phi1(g1hi, K);
        ok_routes = ok_routes && series_equal_mod(b.phi2, b2.phi2, K);

        TruncatedSeries phi2 = b.phi2;
        if (mutate_phi2) phi2 = phi2 + TruncatedSeries::variable(K);
        ok_pair = ok_pair && phi_pair_identity_holds(b.phi1, phi2, K - 1);
    }

    auto push = [&rep](const char* name, bool ok) {
        rep.records.push_back({name, ok});
        rep.ok = rep.ok && ok;
    };
    push("kernel-product", ok_product);
    push("dilation-closed-form", ok_closed);
    push("pair-identity", ok_pair);
    push("dilation-two-routes", ok_routes);
    return rep;
}

} // namespace snyder
