#pragma once

#include <optional>
#include <string>
#include <vector>

#include "snyder/bundle.hpp"
#include "snyder/element.hpp"

namespace snyder {

enum class ModelKind {
    snyder_original,
    snyder_phi,
    extended_snyder,
    extended_snyder_phi,
    kappa_extended,
    kappa_mixed,
    kappa_poincare_natural,
};

// Which commutator family the model's coordinates close under.
enum class RelationFamily { snyder, kappa, kappa_beta0 };

// Deliberate fault injections for exercising the failure paths.
enum class Mutation { none, flip_xhat_term, phi2_plus_u, drop_a_term };

inline std::string model_to_string(ModelKind k) {
    switch (k) {
        case ModelKind::snyder_original: return "snyder-original";
        case ModelKind::snyder_phi: return "snyder-phi";
        case ModelKind::extended_snyder: return "extended-snyder";
        case ModelKind::extended_snyder_phi: return "extended-snyder-phi";
        case ModelKind::kappa_extended: return "kappa-extended";
        case ModelKind::kappa_mixed: return "kappa-mixed";
        case ModelKind::kappa_poincare_natural: return "kappa-poincare-natural";
    }
    throw error("unknown model kind");
}

inline const std::vector<ModelKind>& model_catalogue() {
    static const std::vector<ModelKind> all = {
        ModelKind::snyder_original,     ModelKind::snyder_phi,
        ModelKind::extended_snyder,     ModelKind::extended_snyder_phi,
        ModelKind::kappa_extended,      ModelKind::kappa_mixed,
        ModelKind::kappa_poincare_natural,
    };
    return all;
}

inline ModelKind model_from_string(const std::string& s) {
    for (ModelKind k : model_catalogue())
        if (model_to_string(k) == s) return k;
    throw error("unknown model '" + s + "'");
}

inline Mutation mutation_from_string(const std::string& s) {
    if (s.empty() || s == "none") return Mutation::none;
    if (s == "flip-xhat-term") return Mutation::flip_xhat_term;
    if (s == "phi2-plus-u") return Mutation::phi2_plus_u;
    if (s == "drop-a-term") return Mutation::drop_a_term;
    throw error("unknown mutation '" + s + "'");
}

// Models whose coordinates carry a tensor-letter correction term.
inline bool model_has_tensor(ModelKind k) {
    switch (k) {
        case ModelKind::extended_snyder:
        case ModelKind::extended_snyder_phi:
        case ModelKind::kappa_extended:
        case ModelKind::kappa_poincare_natural: return true;
        default: return false;
    }
}

inline RelationFamily model_family(ModelKind k) {
    switch (k) {
        case ModelKind::kappa_extended:
        case ModelKind::kappa_mixed: return RelationFamily::kappa;
        case ModelKind::kappa_poincare_natural: return RelationFamily::kappa_beta0;
        default: return RelationFamily::snyder;
    }
}

inline bool mutation_supported(ModelKind k, Mutation m) {
    switch (m) {
        case Mutation::none: return true;
        case Mutation::flip_xhat_term: return model_has_tensor(k);
        case Mutation::phi2_plus_u:
            return k == ModelKind::snyder_phi || k == ModelKind::extended_snyder_phi;
        case Mutation::drop_a_term: return model_family(k) != RelationFamily::snyder;
    }
    return false;
}

// A concrete realization: coordinate elements, rotation generators, and the
// kernel bundle when the model was built from series data.
struct Realization {
    ModelKind kind;
    Metric metric;
    int grade = 0;
    std::vector<AlgebraElement> xhat;
    std::vector<std::vector<AlgebraElement>> M;
    std::optional<SeriesBundle> bundle;

    bool has_tensor() const { return model_has_tensor(kind); }
    RelationFamily family() const { return model_family(kind); }
};

// Series order needed to saturate parameter grade D when u stands for a
// weight-2 parameter block.
inline int order_for_grade(int D) { return D / 2; }

// Substitute u -> base into a truncated series (Horner form). base must carry
// parameter weight >= 2 in every term so the substitution closes at the grade.
inline AlgebraElement series_element(const TruncatedSeries& s, const AlgebraElement& base) {
    const Metric& m = base.metric;
    const int D = base.grade;
    int need = order_for_grade(D);
    if (s.order < need) throw error("series order too low for grade");
    TruncatedSeries st = s.truncated(need);
    AlgebraElement r = AlgebraElement::scalar(m, D, st.at(need));
    for (int k = need - 1; k >= 0; --k) {
        r = multiply(r, base);
        r += AlgebraElement::scalar(m, D, st.at(k));
    }
    return r;
}

// beta^2 p^2, the scalar argument of the one-parameter kernels.
inline AlgebraElement u_argument(const Metric& m, int D) {
    return p_squared(m, D).scaled_by(Coefficient::beta_power(m.d, 2));
}

// a^2 - beta^2, the quadratic parameter combination of the kappa family.
inline Coefficient kappa_quadratic(const Metric& m) {
    return Coefficient::a_squared(m) - Coefficient::beta_power(m.d, 2);
}

// (a^2 - beta^2) p^2.
inline AlgebraElement w_argument(const Metric& m, int D) {
    return p_squared(m, D).scaled_by(kappa_quadratic(m));
}

// 1/(1 + sqrt(1+u)).
inline TruncatedSeries corner_kernel(int K) {
    TruncatedSeries one = TruncatedSeries::one(K);
    return (one + (one + TruncatedSeries::variable(K)).sqrt()).reciprocal();
}

// sqrt(1+u).
inline TruncatedSeries root_kernel(int K) {
    return (TruncatedSeries::one(K) + TruncatedSeries::variable(K)).sqrt();
}

// 1/(phi1 + sqrt(phi1^2 + u)), the tensor-term kernel of the phi family.
inline TruncatedSeries family_corner_kernel(const TruncatedSeries& phi1) {
    TruncatedSeries root = (phi1 * phi1 + TruncatedSeries::variable(phi1.order)).sqrt();
    return (phi1 + root).reciprocal();
}

// Default coordinate kernel sqrt(1-u) for phi models built without series
// input; matches the kappa family's a = 0 limit.
inline TruncatedSeries default_phi1(int K) {
    return (TruncatedSeries::one(K) - TruncatedSeries::variable(K)).sqrt();
}

namespace detail {

inline std::vector<std::vector<AlgebraElement>> lorentz_matrix(const Metric& m, int D,
                                                               bool with_letters) {
    std::vector<std::vector<AlgebraElement>> M(
        static_cast<std::size_t>(m.d),
        std::vector<AlgebraElement>(static_cast<std::size_t>(m.d), AlgebraElement::zero(m, D)));
    for (int mu = 0; mu < m.d; ++mu) {
        for (int nu = mu + 1; nu < m.d; ++nu) {
            AlgebraElement e =
                multiply(AlgebraElement::x(m, D, mu), AlgebraElement::p(m, D, nu)) -
                multiply(AlgebraElement::x(m, D, nu), AlgebraElement::p(m, D, mu));
            if (with_letters) e += AlgebraElement::xhat(m, D, mu, nu);
            M[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)] = e;
            M[static_cast<std::size_t>(nu)][static_cast<std::size_t>(mu)] = -e;
        }
    }
    return M;
}

// sum_alpha eta^{alphaalpha} M_{mu alpha} a_alpha
inline AlgebraElement m_row_dot_a(const std::vector<std::vector<AlgebraElement>>& M,
                                  const Metric& met, int D, int mu) {
    AlgebraElement r = AlgebraElement::zero(met, D);
    for (int al = 0; al < met.d; ++al) {
        if (al == mu) continue;
        Coefficient co = Coefficient::a_component(met.d, al, ExactComplex(met.eta(al, al)));
        r += M[static_cast<std::size_t>(mu)][static_cast<std::size_t>(al)].scaled_by(co);
    }
    return r;
}

inline void require_mutation(ModelKind k, Mutation mu) {
    if (!mutation_supported(k, mu))
        throw error("mutation not applicable to model " + model_to_string(k));
}

} // namespace detail

// Coordinates x_mu + beta^2 (x.p) p_mu with rotation generators x^p - p^x.
inline Realization build_snyder_original(const Metric& m, int D, Mutation mu = Mutation::none) {
    detail::require_mutation(ModelKind::snyder_original, mu);
    Realization R{ModelKind::snyder_original, m, D, {}, {}, std::nullopt};
    Coefficient b2 = Coefficient::beta_power(m.d, 2);
    AlgebraElement xp = dot_xp(m, D);
    for (int i = 0; i < m.d; ++i) {
        AlgebraElement e = AlgebraElement::x(m, D, i);
        e += multiply(xp, AlgebraElement::p(m, D, i)).scaled_by(b2);
        R.xhat.push_back(e);
    }
    R.M = detail::lorentz_matrix(m, D, false);
    return R;
}

// Coordinates x phi1 + beta^2 (x.p) p phi2 + beta^2 p phi3.
inline Realization build_snyder_phi(const SeriesBundle& bundle, const Metric& m, int D,
                                    Mutation mu = Mutation::none) {
    detail::require_mutation(ModelKind::snyder_phi, mu);
    Realization R{ModelKind::snyder_phi, m, D, {}, {}, bundle};
    TruncatedSeries phi2 = bundle.phi2;
    if (mu == Mutation::phi2_plus_u) phi2 = phi2 + TruncatedSeries::variable(phi2.order);
    Coefficient b2 = Coefficient::beta_power(m.d, 2);
    AlgebraElement base = u_argument(m, D);
    AlgebraElement e1 = series_element(bundle.phi1, base);
    AlgebraElement e2 = series_element(phi2, base);
    AlgebraElement e3 = series_element(bundle.phi3, base);
    AlgebraElement xp = dot_xp(m, D);
    for (int i = 0; i < m.d; ++i) {
        AlgebraElement e = multiply(AlgebraElement::x(m, D, i), e1);
        e += multiply(multiply(xp, AlgebraElement::p(m, D, i)), e2).scaled_by(b2);
        e += multiply(AlgebraElement::p(m, D, i), e3).scaled_by(b2);
        R.xhat.push_back(e);
    }
    R.M = detail::lorentz_matrix(m, D, false);
    if (mu == Mutation::phi2_plus_u) R.bundle->phi2 = phi2;
    return R;
}

// Tensor extension: x + beta^2 (x.p) p - beta^2 xh.p / (1 + sqrt(1+u)).
inline Realization build_extended_snyder(const Metric& m, int D, Mutation mu = Mutation::none) {
    detail::require_mutation(ModelKind::extended_snyder, mu);
    Realization R{ModelKind::extended_snyder, m, D, {}, {}, std::nullopt};
    Coefficient b2 = Coefficient::beta_power(m.d, 2);
    AlgebraElement base = u_argument(m, D);
    AlgebraElement corner = series_element(corner_kernel(order_for_grade(D)), base);
    AlgebraElement xp = dot_xp(m, D);
    ExactComplex sign = mu == Mutation::flip_xhat_term ? ExactComplex(1) : ExactComplex(-1);
    for (int i = 0; i < m.d; ++i) {
        AlgebraElement e = AlgebraElement::x(m, D, i);
        e += multiply(xp, AlgebraElement::p(m, D, i)).scaled_by(b2);
        e += multiply(xhat_row_dot_p(m, D, i), corner).scaled_by(b2.scaled(sign));
        R.xhat.push_back(e);
    }
    R.M = detail::lorentz_matrix(m, D, true);
    return R;
}

// Tensor family: x phi1 + beta^2 (x.p) p phi2 - beta^2 xh.p / (phi1 + sqrt(phi1^2+u)).
inline Realization build_extended_snyder_phi(const SeriesBundle& bundle, const Metric& m, int D,
                                             Mutation mu = Mutation::none) {
    detail::require_mutation(ModelKind::extended_snyder_phi, mu);
    if (!bundle.phi3.is_zero())
        throw error("scalar kernel term not supported for the tensor family");
    Realization R{ModelKind::extended_snyder_phi, m, D, {}, {}, bundle};
    TruncatedSeries phi2 = bundle.phi2;
    if (mu == Mutation::phi2_plus_u) phi2 = phi2 + TruncatedSeries::variable(phi2.order);
    Coefficient b2 = Coefficient::beta_power(m.d, 2);
    AlgebraElement base = u_argument(m, D);
    AlgebraElement e1 = series_element(bundle.phi1, base);
    AlgebraElement e2 = series_element(phi2, base);
    AlgebraElement corner = series_element(family_corner_kernel(bundle.phi1), base);
    AlgebraElement xp = dot_xp(m, D);
    ExactComplex sign = mu == Mutation::flip_xhat_term ? ExactComplex(1) : ExactComplex(-1);
    for (int i = 0; i < m.d; ++i) {
        AlgebraElement e = multiply(AlgebraElement::x(m, D, i), e1);
        e += multiply(multiply(xp, AlgebraElement::p(m, D, i)), e2).scaled_by(b2);
        e += multiply(xhat_row_dot_p(m, D, i), corner).scaled_by(b2.scaled(sign));
        R.xhat.push_back(e);
    }
    R.M = detail::lorentz_matrix(m, D, true);
    if (mu == Mutation::phi2_plus_u) R.bundle->phi2 = phi2;
    return R;
}

namespace detail {

// Shared kappa-family assembly: x sqrt(1+arg) + M.a + q xh.p / (1 + sqrt(1+arg))
// where arg = q p^2 for the quadratic q, and the tensor term is optional.
inline Realization build_kappa_like(ModelKind kind, const Coefficient& q, const Metric& m, int D,
                                    Mutation mu) {
    require_mutation(kind, mu);
    Realization R{kind, m, D, {}, {}, std::nullopt};
    bool tensor = model_has_tensor(kind);
    AlgebraElement base = p_squared(m, D).scaled_by(q);
    int K = order_for_grade(D);
    AlgebraElement root = series_element(root_kernel(K), base);
    AlgebraElement corner = tensor ? series_element(corner_kernel(K), base)
                                   : AlgebraElement::zero(m, D);
    ExactComplex sign = mu == Mutation::flip_xhat_term ? ExactComplex(-1) : ExactComplex(1);
    R.M = lorentz_matrix(m, D, tensor);
    for (int i = 0; i < m.d; ++i) {
        AlgebraElement e = multiply(AlgebraElement::x(m, D, i), root);
        if (mu != Mutation::drop_a_term) e += m_row_dot_a(R.M, m, D, i);
        if (tensor)
            e += multiply(xhat_row_dot_p(m, D, i), corner).scaled_by(q.scaled(sign));
        R.xhat.push_back(e);
    }
    return R;
}

} // namespace detail

// Full kappa family realization over the tensor extension.
inline Realization build_kappa_extended(const Metric& m, int D, Mutation mu = Mutation::none) {
    return detail::build_kappa_like(ModelKind::kappa_extended, kappa_quadratic(m), m, D, mu);
}

// Kappa family with plain rotation generators and no tensor term.
inline Realization build_kappa_mixed(const Metric& m, int D, Mutation mu = Mutation::none) {
    return detail::build_kappa_like(ModelKind::kappa_mixed, kappa_quadratic(m), m, D, mu);
}

// beta = 0 reduction of the kappa extension.
inline Realization build_kappa_poincare_natural(const Metric& m, int D,
                                                Mutation mu = Mutation::none) {
    return detail::build_kappa_like(ModelKind::kappa_poincare_natural, Coefficient::a_squared(m),
                                    m, D, mu);
}

// Catalogue dispatch. Phi models take their kernel from `bundle` or fall back
// to the sqrt(1-u) default.
inline Realization build_model(ModelKind kind, const Metric& m, int D,
                               const std::optional<SeriesBundle>& bundle = std::nullopt,
                               Mutation mu = Mutation::none) {
    switch (kind) {
        case ModelKind::snyder_original: return build_snyder_original(m, D, mu);
        case ModelKind::snyder_phi:
        case ModelKind::extended_snyder_phi: {
            SeriesBundle b =
                bundle ? *bundle : bundle_from_phi1(default_phi1(order_for_grade(D) + 1),
                                                    order_for_grade(D));
            return kind == ModelKind::snyder_phi ? build_snyder_phi(b, m, D, mu)
                                                 : build_extended_snyder_phi(b, m, D, mu);
        }
        case ModelKind::extended_snyder: return build_extended_snyder(m, D, mu);
        case ModelKind::kappa_extended: return build_kappa_extended(m, D, mu);
        case ModelKind::kappa_mixed: return build_kappa_mixed(m, D, mu);
        case ModelKind::kappa_poincare_natural: return build_kappa_poincare_natural(m, D, mu);
    }
    throw error("unknown model kind");
}

// Reads the kernel series back from a scalar-shaped realization:
//   x_mu s1 + beta^2 (x.p) p_mu s2 + beta^2 p_mu s3.
// Requires d >= 2 and tensor-free coordinates; every component must rebuild
// exactly from the extracted series.
inline SeriesBundle extract_phis(const Realization& R) {
    const Metric& m = R.metric;
    const int D = R.grade;
    const int K = order_for_grade(D);
    MonoLayout l = MonoLayout::of(m.d);
    for (const AlgebraElement& e : R.xhat)
        if (e.max_xhat_degree() != 0)
            throw error("tensor letters present; element not of scalar coordinate shape");

    const AlgebraElement& e0 = R.xhat.at(0);
    auto coeff_of = [&](const PackedMonomial& mono) -> ExactComplex {
        auto it = e0.terms.find(mono);
        return it == e0.terms.end() ? ExactComplex() : it->second;
    };
    // probe direction distinct from component 0
    const int nu = 1;
    const ExactComplex eta_nu(m.eta(nu, nu));

    TruncatedSeries s1(K), s2(K), s3(K);
    for (int k = 0; k <= K; ++k) {
        // x_0 beta^{2k} p_nu^{2k}  <-  s1_k (p^2)^k picks eta_nu^k
        PackedMonomial mono;
        mono.v[static_cast<std::size_t>(l.off_beta())] = static_cast<std::uint8_t>(2 * k);
        mono.v[static_cast<std::size_t>(l.off_x() + 0)] = 1;
        mono.v[static_cast<std::size_t>(l.off_p() + nu)] = static_cast<std::uint8_t>(2 * k);
        mono.finalize(l);
        ExactComplex c1 = coeff_of(mono);
        s1.c[static_cast<std::size_t>(k)] = (k % 2 == 0) ? c1 : c1 * eta_nu;
    }
    for (int k = 0; k + 1 <= K; ++k) {
        // x_nu p_nu^{2k+1} p_0 beta^{2k+2}  <-  s2_k via the (x.p) p_0 block
        PackedMonomial mono;
        mono.v[static_cast<std::size_t>(l.off_beta())] = static_cast<std::uint8_t>(2 * k + 2);
        mono.v[static_cast<std::size_t>(l.off_x() + nu)] = 1;
        mono.v[static_cast<std::size_t>(l.off_p() + nu)] = static_cast<std::uint8_t>(2 * k + 1);
        mono.v[static_cast<std::size_t>(l.off_p() + 0)] = 1;
        mono.finalize(l);
        ExactComplex c = coeff_of(mono);
        s2.c[static_cast<std::size_t>(k)] = (k % 2 == 0) ? c * eta_nu : c;
        // p_0 p_nu^{2k} beta^{2k+2}  <-  s3_k
        PackedMonomial mono3;
        mono3.v[static_cast<std::size_t>(l.off_beta())] = static_cast<std::uint8_t>(2 * k + 2);
        mono3.v[static_cast<std::size_t>(l.off_p() + 0)] = 1;
        mono3.v[static_cast<std::size_t>(l.off_p() + nu)] = static_cast<std::uint8_t>(2 * k);
        mono3.finalize(l);
        ExactComplex c3 = coeff_of(mono3);
        s3.c[static_cast<std::size_t>(k)] = (k % 2 == 0) ? c3 : c3 * eta_nu;
    }

    // rebuild every component and demand exact agreement
    Coefficient b2 = Coefficient::beta_power(m.d, 2);
    AlgebraElement base = u_argument(m, D);
    AlgebraElement e1 = series_element(s1, base);
    AlgebraElement e2 = series_element(s2, base);
    AlgebraElement e3 = series_element(s3, base);
    AlgebraElement xp = dot_xp(m, D);
    for (int i = 0; i < m.d; ++i) {
        AlgebraElement rebuilt = multiply(AlgebraElement::x(m, D, i), e1);
        rebuilt += multiply(multiply(xp, AlgebraElement::p(m, D, i)), e2).scaled_by(b2);
        rebuilt += multiply(AlgebraElement::p(m, D, i), e3).scaled_by(b2);
        if (!(rebuilt == R.xhat.at(static_cast<std::size_t>(i))))
            throw error("element not of scalar coordinate shape, or components disagree");
    }
    return SeriesBundle{s1, s2, s3, TruncatedSeries::zero(K), TruncatedSeries::zero(K),
                        TruncatedSeries::zero(K)};
}

// Symmetrization x -> (x + adjoint(x))/2 applied to the whole realization.
inline Realization hermitize(const Realization& R) {
    Realization H{R.kind, R.metric, R.grade, {}, {}, std::nullopt};
    const ExactComplex half = ExactComplex::rational(1, 2);
    for (const AlgebraElement& e : R.xhat) H.xhat.push_back((e + adjoint(e)).scaled(half));
    for (const auto& row : R.M) {
        std::vector<AlgebraElement> hrow;
        for (const AlgebraElement& e : row) hrow.push_back((e + adjoint(e)).scaled(half));
        H.M.push_back(std::move(hrow));
    }
    return H;
}

// Parameter specializations, applied element-wise.
inline Realization specialize_a_zero(const Realization& R) {
    Realization S{R.kind, R.metric, R.grade, {}, {}, R.bundle};
    for (const auto& e : R.xhat) S.xhat.push_back(e.specialize_a_zero());
    for (const auto& row : R.M) {
        std::vector<AlgebraElement> srow;
        for (const auto& e : row) srow.push_back(e.specialize_a_zero());
        S.M.push_back(std::move(srow));
    }
    return S;
}

inline Realization specialize_beta_zero(const Realization& R) {
    Realization S{R.kind, R.metric, R.grade, {}, {}, R.bundle};
    for (const auto& e : R.xhat) S.xhat.push_back(e.specialize_beta_zero());
    for (const auto& row : R.M) {
        std::vector<AlgebraElement> srow;
        for (const auto& e : row) srow.push_back(e.specialize_beta_zero());
        S.M.push_back(std::move(srow));
    }
    return S;
}

} // namespace snyder
