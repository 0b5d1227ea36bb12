#pragma once

#include <map>
#include <string>
#include <vector>

#include "snyder/metric.hpp"
#include "snyder/rational.hpp"

namespace snyder {

// Monomial in the deformation parameters: beta^k a_0^{e_0} ... a_{d-1}^{e_{d-1}}.
// Parameter weight = k + sum e_mu; graded truncation drops anything above the
// working grade.
struct ParamExponent {
    int beta = 0;
    std::vector<int> a;

    explicit ParamExponent(int d) : a(static_cast<std::size_t>(d), 0) {}

    int dim() const { return static_cast<int>(a.size()); }

    int weight() const {
        int w = beta;
        for (int e : a) w += e;
        return w;
    }

    bool is_unit() const { return weight() == 0; }

    friend ParamExponent operator*(const ParamExponent& x, const ParamExponent& y) {
        ParamExponent r = x;
        r.beta += y.beta;
        for (std::size_t k = 0; k < r.a.size(); ++k) r.a[k] += y.a[k];
        return r;
    }

    friend bool operator==(const ParamExponent& x, const ParamExponent& y) {
        return x.beta == y.beta && x.a == y.a;
    }

    // Order: parameter weight first, then beta power, then a-powers lexicographic.
    friend bool operator<(const ParamExponent& x, const ParamExponent& y) {
        int wx = x.weight(), wy = y.weight();
        if (wx != wy) return wx < wy;
        if (x.beta != y.beta) return x.beta < y.beta;
        return x.a < y.a;
    }

    std::string str() const {
        std::string s;
        auto pow_part = [&s](const std::string& name, int e) {
            if (e == 0) return;
            if (!s.empty()) s += " ";
            s += name;
            if (e != 1) s += "^" + std::to_string(e);
        };
        pow_part("b", beta);
        for (std::size_t k = 0; k < a.size(); ++k)
            pow_part("a[" + std::to_string(k) + "]", a[k]);
        return s;
    }
};

// Finite sum of parameter monomials with exact complex values.
// All arithmetic is truncated at a caller-supplied grade.
struct Coefficient {
    int d = 0;
    std::map<ParamExponent, ExactComplex> entries;

    explicit Coefficient(int d) : d(d) {}

    static Coefficient zero(int d) { return Coefficient(d); }

    static Coefficient scalar(int d, const ExactComplex& v) {
        Coefficient c(d);
        if (!v.is_zero()) c.entries.emplace(ParamExponent(d), v);
        return c;
    }

    static Coefficient one(int d) { return scalar(d, ExactComplex(1)); }

    static Coefficient beta_power(int d, int k, const ExactComplex& v = ExactComplex(1)) {
        Coefficient c(d);
        if (!v.is_zero()) {
            ParamExponent e(d);
            e.beta = k;
            c.entries.emplace(e, v);
        }
        return c;
    }

    static Coefficient a_component(int d, int mu, const ExactComplex& v = ExactComplex(1)) {
        if (mu < 0 || mu >= d) throw error("parameter index out of range");
        Coefficient c(d);
        if (!v.is_zero()) {
            ParamExponent e(d);
            e.a[static_cast<std::size_t>(mu)] = 1;
            c.entries.emplace(e, v);
        }
        return c;
    }

    // sum_mu eta_mumu a_mu^2
    static Coefficient a_squared(const Metric& m) {
        Coefficient c(m.d);
        for (int mu = 0; mu < m.d; ++mu) {
            ParamExponent e(m.d);
            e.a[static_cast<std::size_t>(mu)] = 2;
            c.entries.emplace(e, ExactComplex(m.eta(mu, mu)));
        }
        return c;
    }

    bool is_zero() const { return entries.empty(); }
    int num_terms() const { return static_cast<int>(entries.size()); }

    int max_weight() const {
        int w = 0;
        for (const auto& [e, v] : entries) w = std::max(w, e.weight());
        return w;
    }

    void add_term(const ParamExponent& e, const ExactComplex& v) {
        if (v.is_zero()) return;
        auto [it, inserted] = entries.emplace(e, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero()) entries.erase(it);
        }
    }

    friend Coefficient operator+(const Coefficient& x, const Coefficient& y) {
        if (x.d != y.d) throw error("coefficient dimension mismatch");
        Coefficient r = x;
        for (const auto& [e, v] : y.entries) r.add_term(e, v);
        return r;
    }

    friend Coefficient operator-(const Coefficient& x, const Coefficient& y) {
        if (x.d != y.d) throw error("coefficient dimension mismatch");
        Coefficient r = x;
        for (const auto& [e, v] : y.entries) r.add_term(e, -v);
        return r;
    }

    Coefficient mul(const Coefficient& y, int grade) const {
        if (d != y.d) throw error("coefficient dimension mismatch");
        Coefficient r(d);
        for (const auto& [ex, vx] : entries) {
            int wx = ex.weight();
            if (wx > grade) continue;
            for (const auto& [ey, vy] : y.entries) {
                if (wx + ey.weight() > grade) continue;
                r.add_term(ex * ey, vx * vy);
            }
        }
        return r;
    }

    Coefficient scaled(const ExactComplex& v) const {
        Coefficient r(d);
        if (v.is_zero()) return r;
        for (const auto& [e, w] : entries) r.entries.emplace(e, w * v);
        return r;
    }

    Coefficient conjugate() const {
        Coefficient r(d);
        for (const auto& [e, v] : entries) r.entries.emplace(e, v.conj());
        return r;
    }

    Coefficient truncated(int grade) const {
        Coefficient r(d);
        for (const auto& [e, v] : entries)
            if (e.weight() <= grade) r.entries.emplace(e, v);
        return r;
    }

    friend bool operator==(const Coefficient& x, const Coefficient& y) {
        return x.d == y.d && x.entries == y.entries;
    }
    friend bool operator!=(const Coefficient& x, const Coefficient& y) { return !(x == y); }

    std::string str() const {
        if (entries.empty()) return "0";
        std::string s;
        for (const auto& [e, v] : entries) {
            std::string mono = e.str();
            std::string val = v.str();
            if (!s.empty()) s += " + ";
            if (mono.empty()) {
                s += val;
            } else if (val == "1") {
                s += mono;
            } else if (val == "-1") {
                s += "-" + mono;
            } else {
                s += val + " " + mono;
            }
        }
        return s;
    }
};

} // namespace snyder
