#pragma once

#include "snyder/realization.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>

// Independent cross-check of the model relations: realize the generators as
// concrete operators on polynomials tensored with a column index, substitute
// exact rational parameter values, and apply every relation residual to every
// basis vector. The series kernels are expanded here from binomial closed
// forms (or a direct quadratic coefficient solve), not through the symbolic
// engine, so the two routes share no code beyond scalar arithmetic.

namespace snyder {

struct OracleParams {
    mpq_class beta;
    std::vector<mpq_class> a;

    static OracleParams defaults(int d) {
        OracleParams p;
        p.beta = mpq_class(1, 7);
        p.a.assign(static_cast<std::size_t>(d), mpq_class(0));
        p.a[0] = mpq_class(1, 11);
        return p;
    }
};

struct OracleRecord {
    std::string name;
    std::vector<int> indices;
    bool ok = false;
};

struct OracleReport {
    std::string model;
    int dim = 0;
    int dpoly = 0;
    int basis_size = 0;
    std::vector<OracleRecord> records;
    bool ok = true;
    long elapsed_ms = 0;
};

namespace odetail {

constexpr int kMaxVars = 6;
constexpr int kExpCap = 15;

// One operator summand in normal form: multiply by x^xe on the left, act on
// the column index with one antisymmetric-letter matrix (jmu,jnu) if set, and
// differentiate by pe on the right. All scalar phases (including those of the
// momentum operators) are folded into c at construction time.
struct OTerm {
    ExactComplex c{1};
    std::array<std::uint8_t, kMaxVars> xe{};
    std::int8_t jmu = -1, jnu = -1;
    std::array<std::uint8_t, kMaxVars> pe{};
};

using OOp = std::vector<OTerm>;
using OState = std::map<std::uint32_t, ExactComplex>;

inline std::uint32_t pack_key(const std::array<int, kMaxVars>& e, int col) {
    std::uint32_t k = static_cast<std::uint32_t>(col);
    for (int i = 0; i < kMaxVars; ++i)
        k |= static_cast<std::uint32_t>(e[static_cast<std::size_t>(i)]) << (3 + 4 * i);
    return k;
}

inline void unpack_key(std::uint32_t k, std::array<int, kMaxVars>& e, int& col) {
    col = static_cast<int>(k & 7u);
    for (int i = 0; i < kMaxVars; ++i)
        e[static_cast<std::size_t>(i)] = static_cast<int>((k >> (3 + 4 * i)) & 15u);
}

inline void add_amp(OState& st, std::uint32_t key, const ExactComplex& v) {
    if (v.is_zero()) return;
    auto it = st.find(key);
    if (it == st.end()) {
        st.emplace(key, v);
    } else {
        it->second += v;
        if (it->second.is_zero()) st.erase(it);
    }
}

// Momentum factor appended on the right: raises pe and multiplies the phase
// (-i * eta_mumu) carried by one derivative operator.
inline void append_p(OTerm& t, const Metric& m, int mu) {
    t.pe[static_cast<std::size_t>(mu)] =
        static_cast<std::uint8_t>(t.pe[static_cast<std::size_t>(mu)] + 1);
    t.c = t.c * ExactComplex(mpq_class(0), mpq_class(-m.eta(mu, mu)));
}

inline OState apply(const Metric& m, const OOp& op, const OState& st) {
    OState out;
    std::array<int, kMaxVars> me{};
    for (const OTerm& t : op) {
        for (const auto& [key, amp] : st) {
            int col = 0;
            unpack_key(key, me, col);
            bool dead = false;
            mpz_class fall = 1;
            for (int i = 0; i < m.d; ++i) {
                const int p = t.pe[static_cast<std::size_t>(i)];
                if (p > me[static_cast<std::size_t>(i)]) {
                    dead = true;
                    break;
                }
                for (int j = 0; j < p; ++j) fall *= me[static_cast<std::size_t>(i)] - j;
            }
            if (dead) continue;
            ExactComplex v = amp * t.c;
            if (fall != 1) v = v * ExactComplex(mpq_class(fall));
            std::array<int, kMaxVars> ne = me;
            for (int i = 0; i < m.d; ++i) {
                ne[static_cast<std::size_t>(i)] -= t.pe[static_cast<std::size_t>(i)];
                ne[static_cast<std::size_t>(i)] += t.xe[static_cast<std::size_t>(i)];
                if (ne[static_cast<std::size_t>(i)] > kExpCap)
                    throw error("oracle monomial degree overflow");
            }
            if (t.jmu < 0) {
                add_amp(out, pack_key(ne, col), v);
            } else {
                // letter action on the column: J e_b = i(eta_{mu b} e_nu - eta_{nu b} e_mu),
                // the sign that closes under the bracket with the same structure
                // constants as the abstract letters
                if (col == t.jnu)
                    add_amp(out, pack_key(ne, t.jmu),
                            v * ExactComplex(mpq_class(0), mpq_class(-m.eta(t.jnu, t.jnu))));
                if (col == t.jmu)
                    add_amp(out, pack_key(ne, t.jnu),
                            v * ExactComplex(mpq_class(0), mpq_class(m.eta(t.jmu, t.jmu))));
            }
        }
    }
    return out;
}

inline OState state_sub(OState a, const OState& b) {
    for (const auto& [k, v] : b) add_amp(a, k, -v);
    return a;
}

inline void state_accum(OState& a, const OState& b, const ExactComplex& f) {
    for (const auto& [k, v] : b) add_amp(a, k, v * f);
}

inline OState commut_state(const Metric& m, const OOp& A, const OOp& B, const OState& e) {
    return state_sub(apply(m, A, apply(m, B, e)), apply(m, B, apply(m, A, e)));
}

inline mpq_class q_pow(const mpq_class& q, int k) {
    mpq_class r = 1;
    for (int j = 0; j < k; ++j) r *= q;
    return r;
}

// Coefficients of the binomial expansion of (1+u)^(1/2).
inline std::vector<ExactComplex> root_coeffs(int kmax) {
    std::vector<ExactComplex> c(static_cast<std::size_t>(kmax) + 1);
    mpq_class cur = 1;
    for (int k = 0; k <= kmax; ++k) {
        c[static_cast<std::size_t>(k)] = ExactComplex(cur);
        cur *= mpq_class(1 - 2 * k, 2 * (k + 1));
        cur.canonicalize();
    }
    return c;
}

// 1/(1 + sqrt(1+u)) = sum_{m>=1} binom(1/2, m) u^(m-1): shift of the root
// expansion, an exact identity obtained by rationalizing the denominator.
inline std::vector<ExactComplex> corner_coeffs(int kmax) {
    std::vector<ExactComplex> r = root_coeffs(kmax + 1);
    std::vector<ExactComplex> c(static_cast<std::size_t>(kmax) + 1);
    for (int k = 0; k <= kmax; ++k) c[static_cast<std::size_t>(k)] = r[static_cast<std::size_t>(k) + 1];
    return c;
}

// 1/(phi1 + sqrt(phi1^2+u)) = (sqrt(phi1^2+u) - phi1)/u, with the square root
// found by a direct coefficient solve of s^2 = phi1^2 + u, s(0) = 1.
inline std::vector<ExactComplex> family_corner_coeffs(const TruncatedSeries& phi1, int kmax) {
    const int n = kmax + 1;
    if (phi1.order < n) throw error("kernel series order too low for oracle");
    std::vector<ExactComplex> r(static_cast<std::size_t>(n) + 1, ExactComplex(0));
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= j; ++i)
            if (i <= phi1.order && j - i <= phi1.order)
                r[static_cast<std::size_t>(j)] += phi1.at(i) * phi1.at(j - i);
    r[1] += ExactComplex(1);
    if (!(r[0] == ExactComplex(1))) throw error("kernel series must start at one");
    std::vector<ExactComplex> s(static_cast<std::size_t>(n) + 1, ExactComplex(0));
    s[0] = ExactComplex(1);
    const ExactComplex half = ExactComplex::rational(1, 2);
    for (int j = 1; j <= n; ++j) {
        ExactComplex acc = r[static_cast<std::size_t>(j)];
        for (int i = 1; i < j; ++i) acc -= s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(j - i)];
        s[static_cast<std::size_t>(j)] = acc * half;
    }
    std::vector<ExactComplex> c(static_cast<std::size_t>(kmax) + 1);
    for (int k = 0; k <= kmax; ++k)
        c[static_cast<std::size_t>(k)] = s[static_cast<std::size_t>(k) + 1] - phi1.at(k + 1);
    return c;
}

// Kernel series evaluated at u -> q * p^2 as a sum of pure-momentum operator
// terms; enumerates multi-exponents of (p^2)^k with multinomial weights.
inline OOp series_p_op(const Metric& m, const std::vector<ExactComplex>& coeffs,
                       const mpq_class& q) {
    OOp op;
    std::vector<mpz_class> fact(coeffs.size() + 1, 1);
    for (std::size_t i = 1; i < fact.size(); ++i) fact[i] = fact[i - 1] * static_cast<long>(i);
    for (int k = 0; k < static_cast<int>(coeffs.size()); ++k) {
        if (coeffs[static_cast<std::size_t>(k)].is_zero()) continue;
        std::vector<int> kv(static_cast<std::size_t>(m.d), 0);
        // enumerate compositions of k over d slots
        std::function<void(int, int)> rec = [&](int pos, int left) {
            if (pos == m.d - 1) {
                kv[static_cast<std::size_t>(pos)] = left;
                mpz_class denom = 1;
                for (int i = 0; i < m.d; ++i) denom *= fact[static_cast<std::size_t>(kv[static_cast<std::size_t>(i)])];
                mpq_class mult(fact[static_cast<std::size_t>(k)], denom);
                mult.canonicalize();
                // contraction factor of p^2 = sum_mu eta^mumu p_mu p_mu
                for (int i = 0; i < m.d; ++i)
                    if (m.eta(i, i) < 0 && (kv[static_cast<std::size_t>(i)] % 2) != 0) mult = -mult;
                OTerm t;
                t.c = coeffs[static_cast<std::size_t>(k)] * ExactComplex(mult * q_pow(q, k));
                for (int i = 0; i < m.d; ++i)
                    for (int j = 0; j < 2 * kv[static_cast<std::size_t>(i)]; ++j) append_p(t, m, i);
                op.push_back(std::move(t));
                return;
            }
            for (int take = 0; take <= left; ++take) {
                kv[static_cast<std::size_t>(pos)] = take;
                rec(pos + 1, left - take);
            }
        };
        rec(0, k);
    }
    return op;
}

// prefix (x-part, optional letter, momentum factors) composed with a
// pure-momentum series operator on the right.
inline void append_series_product(OOp& out, const OTerm& prefix, const OOp& series) {
    for (const OTerm& s : series) {
        OTerm t = prefix;
        t.c = t.c * s.c;
        for (int i = 0; i < kMaxVars; ++i)
            t.pe[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(
                t.pe[static_cast<std::size_t>(i)] + s.pe[static_cast<std::size_t>(i)]);
        out.push_back(std::move(t));
    }
}

struct OracleOps {
    std::vector<OOp> xh;
    std::vector<std::vector<OOp>> M;
    bool letters = false;
};

inline OOp gen_x(int mu) {
    OTerm t;
    t.xe[static_cast<std::size_t>(mu)] = 1;
    return {t};
}

inline OOp gen_p(const Metric& m, int mu) {
    OTerm t;
    append_p(t, m, mu);
    return {t};
}

inline OOp gen_j(const Metric& m, int mu, int nu) {
    m.check_index(mu);
    m.check_index(nu);
    if (mu == nu) return {};
    OTerm t;
    t.jmu = static_cast<std::int8_t>(mu);
    t.jnu = static_cast<std::int8_t>(nu);
    return {t};
}

// x_mu p_nu - x_nu p_mu
inline OOp wedge_op(const Metric& m, int mu, int nu) {
    OOp op;
    OTerm t1;
    t1.xe[static_cast<std::size_t>(mu)] = 1;
    append_p(t1, m, nu);
    op.push_back(t1);
    OTerm t2;
    t2.xe[static_cast<std::size_t>(nu)] = 1;
    append_p(t2, m, mu);
    t2.c = -t2.c;
    op.push_back(t2);
    return op;
}

inline OOp rotation_op(const Metric& m, int mu, int nu, bool with_letter) {
    OOp op = wedge_op(m, mu, nu);
    if (with_letter && mu != nu) {
        OOp j = gen_j(m, mu, nu);
        op.insert(op.end(), j.begin(), j.end());
    }
    return op;
}

} // namespace odetail

// Pure matrix check: the column-action letter matrices close under the
// so-type bracket, for every index tuple.
inline bool oracle_j_bracket_check(const Metric& m) {
    const int d = m.d;
    auto mat = [&](int mu, int nu) {
        std::vector<ExactComplex> J(static_cast<std::size_t>(d * d), ExactComplex(0));
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) {
                mpq_class v = 0;
                if (r == nu) v += m.eta(mu, c);
                if (r == mu) v -= m.eta(nu, c);
                J[static_cast<std::size_t>(r * d + c)] = ExactComplex(mpq_class(0), v);
            }
        return J;
    };
    auto mul = [&](const std::vector<ExactComplex>& A, const std::vector<ExactComplex>& B) {
        std::vector<ExactComplex> C(static_cast<std::size_t>(d * d), ExactComplex(0));
        for (int r = 0; r < d; ++r)
            for (int k = 0; k < d; ++k) {
                const ExactComplex& a = A[static_cast<std::size_t>(r * d + k)];
                if (a.is_zero()) continue;
                for (int c = 0; c < d; ++c)
                    C[static_cast<std::size_t>(r * d + c)] += a * B[static_cast<std::size_t>(k * d + c)];
            }
        return C;
    };
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c)
                for (int e = 0; e < d; ++e) {
                    auto Jab = mat(a, b), Jce = mat(c, e);
                    auto lhs = mul(Jab, Jce);
                    auto rhs_m = mul(Jce, Jab);
                    const ExactComplex i = ExactComplex::i();
                    std::vector<ExactComplex> want(static_cast<std::size_t>(d * d), ExactComplex(0));
                    auto acc = [&](int eta, int r, int s, int sign) {
                        if (eta == 0) return;
                        auto Jrs = mat(r, s);
                        ExactComplex f = i * ExactComplex(eta * sign);
                        for (std::size_t k = 0; k < want.size(); ++k) want[k] += Jrs[k] * f;
                    };
                    acc(m.eta(a, c), b, e, 1);
                    acc(m.eta(a, e), b, c, -1);
                    acc(m.eta(b, c), a, e, -1);
                    acc(m.eta(b, e), a, c, 1);
                    for (std::size_t k = 0; k < want.size(); ++k) {
                        ExactComplex com = lhs[k] - rhs_m[k];
                        if (!(com == want[k])) return false;
                    }
                }
    return true;
}

namespace odetail {

inline OracleOps build_ops(const Realization& R, int kmax, const OracleParams& par,
                           Mutation mutation) {
    const Metric& m = R.metric;
    const int d = m.d;
    const mpq_class b2 = par.beta * par.beta;
    mpq_class a2 = 0;
    for (int mu = 0; mu < d; ++mu) a2 += mpq_class(m.eta(mu, mu)) * par.a[static_cast<std::size_t>(mu)] * par.a[static_cast<std::size_t>(mu)];
    detail::require_mutation(R.kind, mutation);

    OracleOps ops;
    ops.letters = model_has_tensor(R.kind);
    const mpq_class tensor_flip = (mutation == Mutation::flip_xhat_term) ? mpq_class(-1) : mpq_class(1);

    // series data
    std::vector<ExactComplex> s_phi1, s_phi2, s_phi3, s_corner;
    mpq_class q;
    switch (R.kind) {
    case ModelKind::snyder_original:
    case ModelKind::extended_snyder:
        q = b2;
        s_corner = corner_coeffs(kmax);
        break;
    case ModelKind::snyder_phi:
    case ModelKind::extended_snyder_phi: {
        q = b2;
        if (!R.bundle) throw error("kernel bundle required for oracle");
        TruncatedSeries phi1 = R.bundle->phi1;
        TruncatedSeries phi2 = R.bundle->phi2;
        TruncatedSeries phi3 = R.bundle->phi3;
        if (mutation == Mutation::phi2_plus_u)
            phi2 = phi2 + TruncatedSeries::variable(phi2.order);
        if (phi1.order < kmax) throw error("kernel series order too low for oracle");
        auto take = [&](const TruncatedSeries& s) {
            std::vector<ExactComplex> c(static_cast<std::size_t>(kmax) + 1, ExactComplex(0));
            for (int k = 0; k <= kmax && k <= s.order; ++k) c[static_cast<std::size_t>(k)] = s.at(k);
            return c;
        };
        s_phi1 = take(phi1);
        s_phi2 = take(phi2);
        s_phi3 = take(phi3);
        if (R.kind == ModelKind::extended_snyder_phi)
            s_corner = family_corner_coeffs(phi1, kmax);
        break;
    }
    case ModelKind::kappa_extended:
    case ModelKind::kappa_mixed:
        q = a2 - b2;
        s_corner = corner_coeffs(kmax);
        break;
    case ModelKind::kappa_poincare_natural:
        q = a2;
        s_corner = corner_coeffs(kmax);
        break;
    }

    const OOp root = series_p_op(m, root_coeffs(kmax), q);
    const OOp corner_series = s_corner.empty() ? OOp{} : series_p_op(m, s_corner, q);
    OOp sphi1, sphi2, sphi3;
    if (!s_phi1.empty()) {
        sphi1 = series_p_op(m, s_phi1, q);
        sphi2 = series_p_op(m, s_phi2, q);
        sphi3 = series_p_op(m, s_phi3, q);
    }

    for (int mu = 0; mu < d; ++mu) {
        OOp xh;
        if (R.kind == ModelKind::snyder_original || R.kind == ModelKind::extended_snyder) {
            OTerm t0;
            t0.xe[static_cast<std::size_t>(mu)] = 1;
            xh.push_back(t0);
            for (int nu = 0; nu < d; ++nu) {
                OTerm t;
                t.xe[static_cast<std::size_t>(nu)] = 1;
                append_p(t, m, nu);
                append_p(t, m, mu);
                t.c = t.c * ExactComplex(b2 * m.eta(nu, nu));
                xh.push_back(std::move(t));
            }
        } else if (R.kind == ModelKind::snyder_phi || R.kind == ModelKind::extended_snyder_phi) {
            OTerm t0;
            t0.xe[static_cast<std::size_t>(mu)] = 1;
            append_series_product(xh, t0, sphi1);
            for (int nu = 0; nu < d; ++nu) {
                OTerm t;
                t.xe[static_cast<std::size_t>(nu)] = 1;
                append_p(t, m, nu);
                append_p(t, m, mu);
                t.c = t.c * ExactComplex(b2 * m.eta(nu, nu));
                append_series_product(xh, t, sphi2);
            }
            OTerm t3;
            append_p(t3, m, mu);
            t3.c = t3.c * ExactComplex(b2);
            append_series_product(xh, t3, sphi3);
        } else {
            // kappa family: x sqrt(1 + q p^2) + rotation-row dotted into a
            OTerm t0;
            t0.xe[static_cast<std::size_t>(mu)] = 1;
            append_series_product(xh, t0, root);
            if (mutation != Mutation::drop_a_term) {
                for (int al = 0; al < d; ++al) {
                    mpq_class fac = mpq_class(m.eta(al, al)) * par.a[static_cast<std::size_t>(al)];
                    if (fac == 0) continue;
                    if (ops.letters && al != mu) {
                        OTerm tj;
                        tj.jmu = static_cast<std::int8_t>(mu);
                        tj.jnu = static_cast<std::int8_t>(al);
                        tj.c = ExactComplex(fac);
                        xh.push_back(std::move(tj));
                    }
                    OTerm tw1;
                    tw1.xe[static_cast<std::size_t>(mu)] = 1;
                    append_p(tw1, m, al);
                    tw1.c = tw1.c * ExactComplex(fac);
                    xh.push_back(std::move(tw1));
                    OTerm tw2;
                    tw2.xe[static_cast<std::size_t>(al)] = 1;
                    append_p(tw2, m, mu);
                    tw2.c = tw2.c * ExactComplex(-fac);
                    xh.push_back(std::move(tw2));
                }
            }
        }
        // tensor-letter corner term (present in every letter-carrying model)
        if (ops.letters) {
            mpq_class front;
            if (R.kind == ModelKind::extended_snyder || R.kind == ModelKind::extended_snyder_phi)
                front = -b2;
            else
                front = q; // kappa-extended and the beta=0 reduction use the quadratic parameter
            front *= tensor_flip;
            for (int al = 0; al < d; ++al) {
                if (al == mu) continue;
                OTerm pre;
                pre.jmu = static_cast<std::int8_t>(mu);
                pre.jnu = static_cast<std::int8_t>(al);
                append_p(pre, m, al);
                pre.c = pre.c * ExactComplex(front * m.eta(al, al));
                append_series_product(xh, pre, corner_series);
            }
        }
        ops.xh.push_back(std::move(xh));
    }

    ops.M.assign(static_cast<std::size_t>(d), std::vector<OOp>(static_cast<std::size_t>(d)));
    for (int mu = 0; mu < d; ++mu)
        for (int nu = 0; nu < d; ++nu)
            ops.M[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)] =
                rotation_op(m, mu, nu, ops.letters);

    return ops;
}

} // namespace odetail

inline OracleReport rep_oracle(const Realization& R, int Dpoly,
                               const OracleParams* samples = nullptr,
                               Mutation mutation = Mutation::none) {
    using namespace odetail;
    const Metric& m = R.metric;
    const int d = m.d;
    if (d > 4) throw error("representation oracle supports dimension at most 4");
    if (Dpoly < 1) throw error("oracle polynomial degree must be positive");
    const auto t0 = std::chrono::steady_clock::now();

    OracleParams par = samples ? *samples : OracleParams::defaults(d);
    if (static_cast<int>(par.a.size()) != d) throw error("oracle parameter vector has wrong length");

    int kmax = (Dpoly + 3) / 2;
    if (R.bundle) kmax = std::min(kmax, std::max(0, R.bundle->phi1.order - 1));
    if (kmax < (Dpoly + 1) / 2) throw error("kernel series order too low for oracle");

    OracleOps ops = build_ops(R, kmax, par, mutation);
    const RelationFamily fam = model_family(R.kind);

    // basis: monomials of total degree <= Dpoly, tensored with a column index
    // when letter matrices appear
    std::vector<std::uint32_t> basis;
    const int ncols = ops.letters ? d : 1;
    {
        std::array<int, kMaxVars> e{};
        std::function<void(int, int)> rec = [&](int pos, int left) {
            if (pos == d) {
                for (int col = 0; col < ncols; ++col) basis.push_back(pack_key(e, col));
                return;
            }
            for (int take = 0; take <= left; ++take) {
                e[static_cast<std::size_t>(pos)] = take;
                rec(pos + 1, left - take);
            }
            e[static_cast<std::size_t>(pos)] = 0;
        };
        rec(0, Dpoly);
        if (basis.size() > 20000) throw error("oracle basis size overflow");
    }

    OracleReport rep;
    rep.model = model_to_string(R.kind);
    rep.dim = d;
    rep.dpoly = Dpoly;
    rep.basis_size = static_cast<int>(basis.size());

    const ExactComplex I = ExactComplex::i();
    auto a_val = [&](int mu) { return ExactComplex(par.a[static_cast<std::size_t>(mu)]); };
    const ExactComplex b2c = ExactComplex(par.beta * par.beta);

    struct ORel {
        std::string name;
        int arity;
        std::function<OState(const std::vector<int>&, const OState&)> residual;
    };
    std::vector<ORel> rels;

    rels.push_back({"R-Heis-xp", 2, [&](const std::vector<int>& ix, const OState& e) {
        OState res = commut_state(m, gen_x(ix[0]), gen_p(m, ix[1]), e);
        state_accum(res, e, -(I * ExactComplex(m.eta(ix[0], ix[1]))));
        return res;
    }});
    rels.push_back({"R-Heis-xx", 2, [&](const std::vector<int>& ix, const OState& e) {
        return commut_state(m, gen_x(ix[0]), gen_x(ix[1]), e);
    }});
    rels.push_back({"R-Heis-pp", 2, [&](const std::vector<int>& ix, const OState& e) {
        return commut_state(m, gen_p(m, ix[0]), gen_p(m, ix[1]), e);
    }});

    rels.push_back({"R1", 2, [&](const std::vector<int>& ix, const OState& e) {
        const int mu = ix[0], nu = ix[1];
        OState res = commut_state(m, ops.xh[static_cast<std::size_t>(mu)],
                                  ops.xh[static_cast<std::size_t>(nu)], e);
        if (fam != RelationFamily::snyder) {
            state_accum(res, apply(m, ops.xh[static_cast<std::size_t>(nu)], e), -(I * a_val(mu)));
            state_accum(res, apply(m, ops.xh[static_cast<std::size_t>(mu)], e), I * a_val(nu));
        }
        if (fam != RelationFamily::kappa_beta0)
            state_accum(res, apply(m, ops.M[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)], e),
                        -(I * b2c));
        return res;
    }});
    rels.push_back({"R2", 3, [&](const std::vector<int>& ix, const OState& e) {
        const int mu = ix[0], nu = ix[1], lam = ix[2];
        OState res = commut_state(m, ops.M[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)],
                                  ops.xh[static_cast<std::size_t>(lam)], e);
        state_accum(res, apply(m, ops.xh[static_cast<std::size_t>(mu)], e),
                    I * ExactComplex(m.eta(nu, lam)));
        state_accum(res, apply(m, ops.xh[static_cast<std::size_t>(nu)], e),
                    -(I * ExactComplex(m.eta(mu, lam))));
        if (fam != RelationFamily::snyder) {
            state_accum(res, apply(m, ops.M[static_cast<std::size_t>(nu)][static_cast<std::size_t>(lam)], e),
                        I * a_val(mu));
            state_accum(res, apply(m, ops.M[static_cast<std::size_t>(mu)][static_cast<std::size_t>(lam)], e),
                        -(I * a_val(nu)));
        }
        return res;
    }});
    auto so_residual = [&](const std::vector<int>& ix, const OState& e,
                           const std::function<const OOp&(int, int)>& entry) {
        OState res = commut_state(m, entry(ix[0], ix[1]), entry(ix[2], ix[3]), e);
        auto acc = [&](int eta, int r, int s, int sign) {
            if (eta == 0) return;
            state_accum(res, apply(m, entry(r, s), e), -(I * ExactComplex(eta * sign)));
        };
        acc(m.eta(ix[0], ix[2]), ix[1], ix[3], 1);
        acc(m.eta(ix[0], ix[3]), ix[1], ix[2], -1);
        acc(m.eta(ix[1], ix[2]), ix[0], ix[3], -1);
        acc(m.eta(ix[1], ix[3]), ix[0], ix[2], 1);
        return res;
    };
    rels.push_back({"R3", 4, [&, so_residual](const std::vector<int>& ix, const OState& e) {
        return so_residual(ix, e, [&](int a, int b) -> const OOp& {
            return ops.M[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        });
    }});
    std::vector<std::vector<OOp>> jops;
    if (ops.letters) {
        jops.assign(static_cast<std::size_t>(d), std::vector<OOp>(static_cast<std::size_t>(d)));
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                jops[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = gen_j(m, a, b);
        rels.push_back({"R4", 4, [&, so_residual](const std::vector<int>& ix, const OState& e) {
            return so_residual(ix, e, [&](int a, int b) -> const OOp& {
                return jops[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            });
        }});
        rels.push_back({"R5x", 3, [&](const std::vector<int>& ix, const OState& e) {
            return commut_state(m, jops[static_cast<std::size_t>(ix[0])][static_cast<std::size_t>(ix[1])],
                                gen_x(ix[2]), e);
        }});
        rels.push_back({"R5p", 3, [&](const std::vector<int>& ix, const OState& e) {
            return commut_state(m, jops[static_cast<std::size_t>(ix[0])][static_cast<std::size_t>(ix[1])],
                                gen_p(m, ix[2]), e);
        }});
    }

    for (const ORel& rel : rels) {
        std::vector<int> ix(static_cast<std::size_t>(rel.arity), 0);
        for (;;) {
            bool ok = true;
            for (std::uint32_t bkey : basis) {
                OState e;
                e.emplace(bkey, ExactComplex(1));
                if (!rel.residual(ix, e).empty()) {
                    ok = false;
                    break;
                }
            }
            rep.records.push_back({rel.name, ix, ok});
            rep.ok = rep.ok && ok;
            int k = rel.arity - 1;
            while (k >= 0 && ++ix[static_cast<std::size_t>(k)] == d) {
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

} // namespace snyder
