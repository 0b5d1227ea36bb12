#pragma once

#include "snyder/realization.hpp"

namespace snyder {

// Conjugation context: the generator element G built from F0(u) + (x.p) F(u)
// with u expanded to beta^2 p^2. The exponential is never materialized; only
// iterated commutators with G are taken.
struct TransformContext {
    TransformSpec spec;
    Metric metric;
    int grade = 0;
    AlgebraElement G;
};

inline TransformContext make_context(const TransformSpec& spec, const Metric& m, int D) {
    int need = order_for_grade(D);
    if (spec.F.order < need || spec.F0.order < need)
        throw error("series order too low for grade");
    AlgebraElement base = u_argument(m, D);
    AlgebraElement G = series_element(spec.F0, base);
    G += multiply(dot_xp(m, D), series_element(spec.F, base));
    if (G.max_xhat_degree() != 0) throw error("conjugation generator contains tensor letters");
    if (!G.terms.empty() && G.terms.begin()->first.pweight < 2)
        throw error("conjugation generator must vanish at zeroth parameter order");
    return TransformContext{spec, m, D, G};
}

// Conjugation sum A + [iG,A] + [iG,[iG,A]]/2! + ...; every commutator with G
// raises the minimum parameter weight by at least 2, so the sum stops on its
// own below the grade.
inline AlgebraElement transform(const TransformContext& ctx, const AlgebraElement& A) {
    ctx.G.check_compatible(A);
    AlgebraElement result = A;
    AlgebraElement term = A;
    const ExactComplex i = ExactComplex::i();
    mpz_class fact = 1;
    for (int n = 1;; ++n) {
        term = commutator(ctx.G, term).scaled(i);
        if (term.is_zero()) break;
        if (n > ctx.grade + 2) throw error("conjugation series failed to terminate");
        fact *= n;
        mpq_class invf(1, fact);
        invf.canonicalize();
        result += term.scaled(ExactComplex(invf));
    }
    return result;
}

// Conjugates every element of a realization. Conjugation is an automorphism,
// so the result satisfies the same relations; the kernel bundle is dropped
// because the series shape generally changes.
inline Realization transform_realization(const TransformContext& ctx, const Realization& R) {
    Realization T{R.kind, R.metric, R.grade, {}, {}, std::nullopt};
    for (const AlgebraElement& e : R.xhat) T.xhat.push_back(transform(ctx, e));
    for (const auto& row : R.M) {
        std::vector<AlgebraElement> trow;
        for (const AlgebraElement& e : row) trow.push_back(transform(ctx, e));
        T.M.push_back(std::move(trow));
    }
    return T;
}

// Scalar kernel induced by a transform with nonzero scalar part: conjugates
// the basic quadratic realization and reads the pure-momentum component back.
inline TruncatedSeries phi3_from_spec(const TransformContext& ctx) {
    Realization R = build_snyder_original(ctx.metric, ctx.grade);
    Realization T = transform_realization(ctx, R);
    return extract_phis(T).phi3;
}

} // namespace snyder
