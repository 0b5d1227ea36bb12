#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <map>
#include <string>
#include <vector>

#include "snyder/coefficient.hpp"
#include "snyder/metric.hpp"
#include "snyder/rational.hpp"

namespace snyder {

// Byte layout of one normally ordered monomial over the generator alphabet
//   beta | a_0..a_{d-1} | xh pairs (lex) | x_0..x_{d-1} | p_0..p_{d-1}
// Exponents are small non-negative integers; the tensor letters are indexed by
// lexicographic pairs (mu,nu), mu < nu.
struct MonoLayout {
    int d = 0;
    int pairs = 0;
    int len = 0;

    static MonoLayout of(int d) {
        MonoLayout l;
        l.d = d;
        l.pairs = d * (d - 1) / 2;
        l.len = 1 + 3 * d + l.pairs;
        return l;
    }

    int off_beta() const { return 0; }
    int off_a() const { return 1; }
    int off_xh() const { return 1 + d; }
    int off_x() const { return 1 + d + pairs; }
    int off_p() const { return 1 + 2 * d + pairs; }

    int pair_index(int mu, int nu) const {
        return mu * d - mu * (mu + 1) / 2 + (nu - mu - 1);
    }

    std::pair<int, int> pair_of(int idx) const {
        for (int mu = 0; mu < d - 1; ++mu) {
            int row = d - 1 - mu;
            if (idx < row) return {mu, mu + 1 + idx};
            idx -= row;
        }
        throw error("tensor pair index out of range");
    }
};

inline constexpr int kMonoBytes = 40; // covers d <= 6 (len 34)
inline constexpr int kMaxExponent = 120;

struct PackedMonomial {
    std::array<std::uint8_t, kMonoBytes> v{};
    std::uint8_t len = 0;
    std::int16_t pweight = 0; // cached parameter weight

    void finalize(const MonoLayout& l) {
        len = static_cast<std::uint8_t>(l.len);
        int w = v[0];
        for (int k = 0; k < l.d; ++k) w += v[static_cast<std::size_t>(l.off_a() + k)];
        pweight = static_cast<std::int16_t>(w);
    }

    std::uint8_t at(int i) const { return v[static_cast<std::size_t>(i)]; }

    void bump(int i, int delta) {
        int nv = static_cast<int>(v[static_cast<std::size_t>(i)]) + delta;
        if (nv < 0 || nv > kMaxExponent) throw error("monomial exponent out of range");
        v[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(nv);
    }

    friend bool operator<(const PackedMonomial& a, const PackedMonomial& b) {
        if (a.pweight != b.pweight) return a.pweight < b.pweight;
        return std::memcmp(a.v.data(), b.v.data(), a.len) < 0;
    }
    friend bool operator==(const PackedMonomial& a, const PackedMonomial& b) {
        return a.pweight == b.pweight && std::memcmp(a.v.data(), b.v.data(), a.len) == 0;
    }
};

// Counts straightening recursion entries; tests use it to bound the rewrite.
inline thread_local long straighten_steps = 0;

// Element of the graded algebra: exact complex combination of normally ordered
// monomials, truncated at a fixed parameter-weight grade.
class AlgebraElement {
public:
    Metric metric;
    int grade = 0;
    std::map<PackedMonomial, ExactComplex> terms;

    AlgebraElement(const Metric& m, int grade) : metric(m), grade(grade) {
        if (grade < 0) throw error("negative grade");
    }

    MonoLayout layout() const { return MonoLayout::of(metric.d); }

    static AlgebraElement zero(const Metric& m, int grade) { return AlgebraElement(m, grade); }

    static AlgebraElement scalar(const Metric& m, int grade, const ExactComplex& c) {
        AlgebraElement e(m, grade);
        if (!c.is_zero()) {
            PackedMonomial mono;
            mono.finalize(e.layout());
            e.terms.emplace(mono, c);
        }
        return e;
    }

    static AlgebraElement x(const Metric& m, int grade, int mu) {
        m.check_index(mu);
        AlgebraElement e(m, grade);
        MonoLayout l = e.layout();
        PackedMonomial mono;
        mono.bump(l.off_x() + mu, 1);
        mono.finalize(l);
        e.terms.emplace(mono, ExactComplex(1));
        return e;
    }

    static AlgebraElement p(const Metric& m, int grade, int mu) {
        m.check_index(mu);
        AlgebraElement e(m, grade);
        MonoLayout l = e.layout();
        PackedMonomial mono;
        mono.bump(l.off_p() + mu, 1);
        mono.finalize(l);
        e.terms.emplace(mono, ExactComplex(1));
        return e;
    }

    // Antisymmetric tensor letter: xhat(nu,mu) = -xhat(mu,nu); mu == nu rejected.
    static AlgebraElement xhat(const Metric& m, int grade, int mu, int nu) {
        m.check_index(mu);
        m.check_index(nu);
        if (mu == nu) throw error("tensor generator needs distinct indices");
        ExactComplex c(1);
        if (mu > nu) {
            std::swap(mu, nu);
            c = ExactComplex(-1);
        }
        AlgebraElement e(m, grade);
        MonoLayout l = e.layout();
        PackedMonomial mono;
        mono.bump(l.off_xh() + l.pair_index(mu, nu), 1);
        mono.finalize(l);
        e.terms.emplace(mono, c);
        return e;
    }

    // Zero for mu == nu, otherwise the tensor letter; for index-formula sums.
    static AlgebraElement xhat_or_zero(const Metric& m, int grade, int mu, int nu) {
        if (mu == nu) return zero(m, grade);
        return xhat(m, grade, mu, nu);
    }

    bool is_zero() const { return terms.empty(); }
    int num_terms() const { return static_cast<int>(terms.size()); }

    void add_term(const PackedMonomial& mono, const ExactComplex& c) {
        if (c.is_zero() || mono.pweight > grade) return;
        auto [it, inserted] = terms.emplace(mono, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    void check_compatible(const AlgebraElement& o) const {
        if (metric != o.metric) throw error("metric mismatch between elements");
        if (grade != o.grade) throw error("grade mismatch between elements");
    }

    AlgebraElement& operator+=(const AlgebraElement& o) {
        check_compatible(o);
        for (const auto& [m, c] : o.terms) add_term(m, c);
        return *this;
    }
    AlgebraElement& operator-=(const AlgebraElement& o) {
        check_compatible(o);
        for (const auto& [m, c] : o.terms) add_term(m, -c);
        return *this;
    }

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }

    AlgebraElement operator-() const {
        AlgebraElement r(metric, grade);
        for (const auto& [m, c] : terms) r.terms.emplace(m, -c);
        return r;
    }

    AlgebraElement scaled(const ExactComplex& s) const {
        AlgebraElement r(metric, grade);
        if (s.is_zero()) return r;
        for (const auto& [m, c] : terms) r.terms.emplace(m, c * s);
        return r;
    }

    // Multiply by a parameter polynomial; graded truncation applies.
    AlgebraElement scaled_by(const Coefficient& co) const {
        if (co.d != metric.d) throw error("coefficient dimension mismatch");
        AlgebraElement r(metric, grade);
        MonoLayout l = layout();
        for (const auto& [pe, v] : co.entries) {
            int wpe = pe.weight();
            for (const auto& [m, c] : terms) {
                if (m.pweight + wpe > grade) continue;
                PackedMonomial mono = m;
                mono.bump(l.off_beta(), pe.beta);
                for (int k = 0; k < l.d; ++k) mono.bump(l.off_a() + k, pe.a[static_cast<std::size_t>(k)]);
                mono.finalize(l);
                add_to(r, mono, c * v);
            }
        }
        return r;
    }

    AlgebraElement truncated(int new_grade) const {
        AlgebraElement r(metric, new_grade);
        for (const auto& [m, c] : terms)
            if (m.pweight <= new_grade) r.terms.emplace(m, c);
        return r;
    }

    AlgebraElement with_grade(int new_grade) const {
        if (new_grade < grade) return truncated(new_grade);
        AlgebraElement r(metric, new_grade);
        r.terms = terms;
        return r;
    }

    // a -> 0: drop monomials with any a-exponent.
    AlgebraElement specialize_a_zero() const {
        MonoLayout l = layout();
        AlgebraElement r(metric, grade);
        for (const auto& [m, c] : terms) {
            bool keep = true;
            for (int k = 0; k < l.d && keep; ++k)
                if (m.at(l.off_a() + k) != 0) keep = false;
            if (keep) r.terms.emplace(m, c);
        }
        return r;
    }

    // beta -> 0: drop monomials with a beta power.
    AlgebraElement specialize_beta_zero() const {
        MonoLayout l = layout();
        AlgebraElement r(metric, grade);
        for (const auto& [m, c] : terms)
            if (m.at(l.off_beta()) == 0) r.terms.emplace(m, c);
        return r;
    }

    int max_param_weight() const {
        int w = 0;
        for (const auto& [m, c] : terms) w = std::max(w, static_cast<int>(m.pweight));
        return w;
    }

    bool all_beta_even() const {
        MonoLayout l = layout();
        for (const auto& [m, c] : terms)
            if (m.at(l.off_beta()) % 2 != 0) return false;
        return true;
    }

    int max_degree(int off, int count) const {
        int deg = 0;
        for (const auto& [m, c] : terms) {
            int s = 0;
            for (int k = 0; k < count; ++k) s += m.at(off + k);
            deg = std::max(deg, s);
        }
        return deg;
    }
    int max_xhat_degree() const { MonoLayout l = layout(); return max_degree(l.off_xh(), l.pairs); }
    int max_x_degree() const { MonoLayout l = layout(); return max_degree(l.off_x(), l.d); }
    int max_p_degree() const { MonoLayout l = layout(); return max_degree(l.off_p(), l.d); }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.metric == b.metric && a.grade == b.grade && a.terms == b.terms;
    }
    friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

    std::string str() const { return render(false); }

    std::string render(bool tensor_as_coordinate) const {
        if (terms.empty()) return "0";
        MonoLayout l = layout();
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms) {
            std::string mono = monomial_str(l, m, tensor_as_coordinate);
            char sign = '+';
            std::string mag;
            if (c.is_real()) {
                sign = sgn(c.re) < 0 ? '-' : '+';
                mpq_class av = abs(c.re);
                mag = (av == 1 && !mono.empty()) ? "" : av.get_str();
            } else if (sgn(c.re) == 0) {
                sign = sgn(c.im) < 0 ? '-' : '+';
                mpq_class av = abs(c.im);
                mag = (av == 1) ? "i" : av.get_str() + "i";
            } else {
                mag = c.str();
            }
            std::string piece = mag;
            if (!mono.empty()) {
                if (!piece.empty()) piece += " ";
                piece += mono;
            }
            if (piece.empty()) piece = "1";
            if (first) {
                out = (sign == '-') ? "-" + piece : piece;
                first = false;
            } else {
                out += (sign == '-') ? " - " : " + ";
                out += piece;
            }
        }
        return out;
    }

private:
    static void add_to(AlgebraElement& e, const PackedMonomial& m, const ExactComplex& c) {
        e.add_term(m, c);
    }

    std::string monomial_str(const MonoLayout& l, const PackedMonomial& m,
                             bool tensor_as_coordinate) const {
        std::string s;
        auto emit = [&s](const std::string& name, int e) {
            if (e == 0) return;
            if (!s.empty()) s += " ";
            s += name;
            if (e != 1) s += "^" + std::to_string(e);
        };
        emit("b", m.at(l.off_beta()));
        for (int k = 0; k < l.d; ++k) emit("a[" + std::to_string(k) + "]", m.at(l.off_a() + k));
        const std::string tensor = tensor_as_coordinate ? "x[" : "xh[";
        for (int idx = 0; idx < l.pairs; ++idx) {
            int e = m.at(l.off_xh() + idx);
            if (e == 0) continue;
            auto [mu, nu] = l.pair_of(idx);
            emit(tensor + std::to_string(mu) + "," + std::to_string(nu) + "]", e);
        }
        for (int k = 0; k < l.d; ++k) emit("x[" + std::to_string(k) + "]", m.at(l.off_x() + k));
        for (int k = 0; k < l.d; ++k) emit("p[" + std::to_string(k) + "]", m.at(l.off_p() + k));
        return s;
    }
};

namespace detail {

// [J_e, J_f] for lex pairs e=(mu,nu), f=(rho,sigma): sum of tensor letters with
// +-i coefficients; diagonal metric keeps at most two survivors.
inline void tensor_bracket(const Metric& met, const MonoLayout& l, int e, int f,
                           std::vector<std::pair<int, ExactComplex>>& out) {
    out.clear();
    auto [mu, nu] = l.pair_of(e);
    auto [rho, sigma] = l.pair_of(f);
    auto push = [&](int alpha, int beta, const ExactComplex& c) {
        if (alpha == beta) return;
        ExactComplex v = c;
        int a = alpha, b = beta;
        if (a > b) {
            std::swap(a, b);
            v = -v;
        }
        int idx = l.pair_index(a, b);
        for (auto& [j, w] : out) {
            if (j == idx) {
                w += v;
                return;
            }
        }
        out.emplace_back(idx, v);
    };
    const ExactComplex i = ExactComplex::i();
    auto signed_i = [&i](int eta, int s) { return eta * s > 0 ? i : -i; };
    if (mu == rho) push(nu, sigma, signed_i(met.eta(mu, rho), +1));
    if (mu == sigma) push(nu, rho, signed_i(met.eta(mu, sigma), -1));
    if (nu == rho) push(mu, sigma, signed_i(met.eta(nu, rho), -1));
    if (nu == sigma) push(mu, rho, signed_i(met.eta(nu, sigma), +1));
    for (std::size_t k = 0; k < out.size();) {
        if (out[k].second.is_zero()) out.erase(out.begin() + static_cast<long>(k));
        else ++k;
    }
}

// Rewrites an arbitrary tensor-letter word into the canonical basis.
// sink receives (sorted word, coefficient) branches.
template <typename Sink>
void straighten_word(const Metric& met, const MonoLayout& l, std::vector<std::uint8_t> word,
                     ExactComplex coeff, Sink&& sink) {
    ++straighten_steps;
    std::size_t i = 0;
    for (; i + 1 < word.size(); ++i)
        if (word[i] > word[i + 1]) break;
    if (i + 1 >= word.size()) {
        sink(word, coeff);
        return;
    }
    std::vector<std::pair<int, ExactComplex>> bracket;
    tensor_bracket(met, l, word[i], word[i + 1], bracket);
    std::vector<std::uint8_t> swapped = word;
    std::swap(swapped[i], swapped[i + 1]);
    straighten_word(met, l, std::move(swapped), coeff, sink);
    for (const auto& [j, c] : bracket) {
        std::vector<std::uint8_t> contracted;
        contracted.reserve(word.size() - 1);
        contracted.insert(contracted.end(), word.begin(), word.begin() + static_cast<long>(i));
        contracted.push_back(static_cast<std::uint8_t>(j));
        contracted.insert(contracted.end(), word.begin() + static_cast<long>(i) + 2, word.end());
        straighten_word(met, l, std::move(contracted), coeff * c, sink);
    }
}

} // namespace detail

// Product in the algebra: tensor letters straightened into the lex basis,
// momenta commuted past coordinates per index, everything truncated at the
// common grade.
inline AlgebraElement multiply(const AlgebraElement& A, const AlgebraElement& B) {
    A.check_compatible(B);
    const Metric& met = A.metric;
    const int grade = A.grade;
    MonoLayout l = A.layout();
    AlgebraElement out(met, grade);

    std::vector<std::uint8_t> wa, wb, word;
    std::vector<std::pair<std::vector<std::uint8_t>, ExactComplex>> xh_branches;
    struct IdxCorr {
        int index;
        std::vector<ExactComplex> factors; // factors[k] for k commutations
    };
    std::vector<IdxCorr> corr;

    for (const auto& [ma, ca] : A.terms) {
        for (const auto& [mb, cb] : B.terms) {
            int pw = ma.pweight + mb.pweight;
            if (pw > grade) continue;
            ExactComplex c0 = ca * cb;

            // tensor-letter part
            word.clear();
            for (int idx = 0; idx < l.pairs; ++idx)
                for (int r = 0; r < ma.at(l.off_xh() + idx); ++r)
                    word.push_back(static_cast<std::uint8_t>(idx));
            std::size_t la = word.size();
            for (int idx = 0; idx < l.pairs; ++idx)
                for (int r = 0; r < mb.at(l.off_xh() + idx); ++r)
                    word.push_back(static_cast<std::uint8_t>(idx));
            xh_branches.clear();
            if (la == 0 || la == word.size()) {
                xh_branches.emplace_back(word, ExactComplex(1));
            } else {
                detail::straighten_word(met, l, word, ExactComplex(1),
                                        [&](const std::vector<std::uint8_t>& w, const ExactComplex& c) {
                                            xh_branches.emplace_back(w, c);
                                        });
            }

            // per-index commutation factors for p^a x^b -> sum_k f_k x^{b-k} p^{a-k}
            corr.clear();
            for (int k = 0; k < l.d; ++k) {
                int pa = ma.at(l.off_p() + k);
                int xb = mb.at(l.off_x() + k);
                if (pa == 0 || xb == 0) continue;
                IdxCorr ic;
                ic.index = k;
                ic.factors.emplace_back(1);
                ExactComplex step_i = met.eta(k, k) > 0 ? -ExactComplex::i() : ExactComplex::i();
                ExactComplex f(1);
                int kmax = std::min(pa, xb);
                for (int k2 = 0; k2 < kmax; ++k2) {
                    mpq_class ratio(static_cast<long>(pa - k2) * (xb - k2), k2 + 1);
                    ratio.canonicalize();
                    f = f * ExactComplex(ratio) * step_i;
                    ic.factors.push_back(f);
                }
                corr.push_back(std::move(ic));
            }

            // base exponents (k = 0 everywhere)
            PackedMonomial base;
            for (int k = 0; k < l.len; ++k) {
                int sum = static_cast<int>(ma.at(k)) + static_cast<int>(mb.at(k));
                if (sum > kMaxExponent) throw error("monomial exponent out of range");
                base.v[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(sum);
            }
            // clear xh slots; rewritten per branch
            for (int idx = 0; idx < l.pairs; ++idx) base.v[static_cast<std::size_t>(l.off_xh() + idx)] = 0;

            auto emit_with_xh = [&](const PackedMonomial& partial, const ExactComplex& c) {
                for (const auto& [w, cxh] : xh_branches) {
                    PackedMonomial mono = partial;
                    for (std::uint8_t letter : w) mono.bump(l.off_xh() + letter, 1);
                    mono.finalize(l);
                    out.add_term(mono, c * cxh);
                }
            };

            // enumerate correction choices (odometer over active indices)
            std::size_t ncombo = 1;
            for (const IdxCorr& ic : corr) ncombo *= ic.factors.size();
            for (std::size_t combo = 0; combo < ncombo; ++combo) {
                PackedMonomial mono = base;
                ExactComplex c = c0;
                std::size_t rem = combo;
                for (const IdxCorr& ic : corr) {
                    std::size_t k = rem % ic.factors.size();
                    rem /= ic.factors.size();
                    if (k != 0) {
                        mono.bump(l.off_x() + ic.index, -static_cast<int>(k));
                        mono.bump(l.off_p() + ic.index, -static_cast<int>(k));
                        c = c * ic.factors[k];
                    }
                }
                emit_with_xh(mono, c);
            }
        }
    }
    return out;
}

inline AlgebraElement commutator(const AlgebraElement& A, const AlgebraElement& B) {
    return multiply(A, B) - multiply(B, A);
}

// Conjugate-transpose: coefficients conjugated, generator words reversed and
// renormalized (x, p, tensor letters are each self-adjoint).
inline AlgebraElement adjoint(const AlgebraElement& A) {
    const Metric& met = A.metric;
    const int grade = A.grade;
    MonoLayout l = A.layout();
    AlgebraElement out(met, grade);
    for (const auto& [m, c] : A.terms) {
        AlgebraElement pblock(met, grade);
        {
            PackedMonomial mono;
            mono.v[0] = m.at(l.off_beta());
            for (int k = 0; k < l.d; ++k) {
                mono.v[static_cast<std::size_t>(l.off_a() + k)] = m.at(l.off_a() + k);
                mono.v[static_cast<std::size_t>(l.off_p() + k)] = m.at(l.off_p() + k);
            }
            mono.finalize(l);
            pblock.terms.emplace(mono, c.conj());
        }
        AlgebraElement xblock(met, grade);
        {
            PackedMonomial mono;
            for (int k = 0; k < l.d; ++k)
                mono.v[static_cast<std::size_t>(l.off_x() + k)] = m.at(l.off_x() + k);
            mono.finalize(l);
            xblock.terms.emplace(mono, ExactComplex(1));
        }
        AlgebraElement piece = multiply(pblock, xblock);
        for (int idx = l.pairs - 1; idx >= 0; --idx) {
            int e = m.at(l.off_xh() + idx);
            for (int r = 0; r < e; ++r) {
                auto [mu, nu] = l.pair_of(idx);
                piece = multiply(piece, AlgebraElement::xhat(met, grade, mu, nu));
            }
        }
        out += piece;
    }
    return out;
}

// Commutative polynomial in coordinates and parameters; the image of the
// vacuum action where momenta annihilate the unit.
struct CommutativePolynomial {
    Metric metric;
    int grade = 0;
    std::map<PackedMonomial, ExactComplex> terms;

    std::string str() const {
        AlgebraElement tmp(metric, grade);
        tmp.terms = terms;
        return tmp.render(true);
    }

    friend bool operator==(const CommutativePolynomial& a, const CommutativePolynomial& b) {
        return a.metric == b.metric && a.terms == b.terms;
    }
};

// Keep only the momentum-free part: A acting on the unit of the coordinate
// module.
inline CommutativePolynomial act_on_unity(const AlgebraElement& A) {
    MonoLayout l = A.layout();
    CommutativePolynomial out{A.metric, A.grade, {}};
    for (const auto& [m, c] : A.terms) {
        bool pfree = true;
        for (int k = 0; k < l.d && pfree; ++k)
            if (m.at(l.off_p() + k) != 0) pfree = false;
        if (pfree) out.terms.emplace(m, c);
    }
    return out;
}

// Contractions with the inverse diagonal metric (eta^{mumu} = eta_{mumu}).

inline AlgebraElement dot_xp(const Metric& m, int grade) {
    AlgebraElement r(m, grade);
    for (int mu = 0; mu < m.d; ++mu)
        r += multiply(AlgebraElement::x(m, grade, mu), AlgebraElement::p(m, grade, mu))
                 .scaled(ExactComplex(m.eta(mu, mu)));
    return r;
}

inline AlgebraElement dot_px(const Metric& m, int grade) {
    AlgebraElement r(m, grade);
    for (int mu = 0; mu < m.d; ++mu)
        r += multiply(AlgebraElement::p(m, grade, mu), AlgebraElement::x(m, grade, mu))
                 .scaled(ExactComplex(m.eta(mu, mu)));
    return r;
}

inline AlgebraElement p_squared(const Metric& m, int grade) {
    AlgebraElement r(m, grade);
    for (int mu = 0; mu < m.d; ++mu)
        r += multiply(AlgebraElement::p(m, grade, mu), AlgebraElement::p(m, grade, mu))
                 .scaled(ExactComplex(m.eta(mu, mu)));
    return r;
}

// sum_alpha eta^{alphaalpha} a_alpha p_alpha
inline AlgebraElement a_dot_p(const Metric& m, int grade) {
    AlgebraElement r(m, grade);
    for (int mu = 0; mu < m.d; ++mu) {
        Coefficient co = Coefficient::a_component(m.d, mu, ExactComplex(m.eta(mu, mu)));
        r += AlgebraElement::p(m, grade, mu).scaled_by(co);
    }
    return r;
}

// sum_alpha eta^{alphaalpha} xhat_{mu alpha} p_alpha
inline AlgebraElement xhat_row_dot_p(const Metric& m, int grade, int mu) {
    AlgebraElement r(m, grade);
    for (int al = 0; al < m.d; ++al) {
        if (al == mu) continue;
        r += multiply(AlgebraElement::xhat(m, grade, mu, al), AlgebraElement::p(m, grade, al))
                 .scaled(ExactComplex(m.eta(al, al)));
    }
    return r;
}

// sum_alpha eta^{alphaalpha} a_alpha xhat_{mu alpha}
inline AlgebraElement xhat_row_dot_a(const Metric& m, int grade, int mu) {
    AlgebraElement r(m, grade);
    for (int al = 0; al < m.d; ++al) {
        if (al == mu) continue;
        Coefficient co = Coefficient::a_component(m.d, al, ExactComplex(m.eta(al, al)));
        r += AlgebraElement::xhat(m, grade, mu, al).scaled_by(co);
    }
    return r;
}

} // namespace snyder
