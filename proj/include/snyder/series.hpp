#pragma once

#include <string>
#include <vector>

#include "snyder/rational.hpp"

namespace snyder {

// Power series in one variable u, truncated at a fixed order K: coefficients
// c_0..c_K are exact complex rationals. Every arithmetic result carries the
// weakest order of its inputs.
struct TruncatedSeries {
    int order = 0;
    std::vector<ExactComplex> c; // size order+1

    TruncatedSeries() : order(0), c(1) {}

    explicit TruncatedSeries(int K) : order(K), c(static_cast<std::size_t>(K) + 1) {
        if (K < 0) throw error("negative series order");
    }

    static TruncatedSeries zero(int K) { return TruncatedSeries(K); }

    static TruncatedSeries constant(const ExactComplex& v, int K) {
        TruncatedSeries s(K);
        s.c[0] = v;
        return s;
    }

    static TruncatedSeries one(int K) { return constant(ExactComplex(1), K); }

    static TruncatedSeries variable(int K) {
        TruncatedSeries s(K);
        if (K >= 1) s.c[1] = ExactComplex(1);
        return s;
    }

    static TruncatedSeries from_coeffs(std::vector<ExactComplex> coeffs) {
        if (coeffs.empty()) throw error("empty coefficient list");
        TruncatedSeries s(static_cast<int>(coeffs.size()) - 1);
        s.c = std::move(coeffs);
        return s;
    }

    const ExactComplex& at(int n) const {
        if (n < 0 || n > order) throw error("series coefficient index out of range");
        return c[static_cast<std::size_t>(n)];
    }

    bool is_zero() const {
        for (const auto& v : c)
            if (!v.is_zero()) return false;
        return true;
    }

    // Index of the first nonzero coefficient; order+1 when zero.
    int valuation() const {
        for (int n = 0; n <= order; ++n)
            if (!c[static_cast<std::size_t>(n)].is_zero()) return n;
        return order + 1;
    }

    TruncatedSeries truncated(int K) const {
        if (K > order) throw error("cannot extend series order by truncation");
        TruncatedSeries s(K);
        for (int n = 0; n <= K; ++n) s.c[static_cast<std::size_t>(n)] = c[static_cast<std::size_t>(n)];
        return s;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        int K = std::min(a.order, b.order);
        TruncatedSeries s(K);
        for (int n = 0; n <= K; ++n)
            s.c[static_cast<std::size_t>(n)] = a.c[static_cast<std::size_t>(n)] + b.c[static_cast<std::size_t>(n)];
        return s;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        int K = std::min(a.order, b.order);
        TruncatedSeries s(K);
        for (int n = 0; n <= K; ++n)
            s.c[static_cast<std::size_t>(n)] = a.c[static_cast<std::size_t>(n)] - b.c[static_cast<std::size_t>(n)];
        return s;
    }

    TruncatedSeries operator-() const {
        TruncatedSeries s(order);
        for (int n = 0; n <= order; ++n) s.c[static_cast<std::size_t>(n)] = -c[static_cast<std::size_t>(n)];
        return s;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        int K = std::min(a.order, b.order);
        TruncatedSeries s(K);
        for (int i = 0; i <= K; ++i) {
            if (a.c[static_cast<std::size_t>(i)].is_zero()) continue;
            for (int j = 0; i + j <= K; ++j) {
                if (b.c[static_cast<std::size_t>(j)].is_zero()) continue;
                s.c[static_cast<std::size_t>(i + j)] +=
                    a.c[static_cast<std::size_t>(i)] * b.c[static_cast<std::size_t>(j)];
            }
        }
        return s;
    }

    TruncatedSeries scaled(const ExactComplex& v) const {
        TruncatedSeries s(order);
        for (int n = 0; n <= order; ++n) s.c[static_cast<std::size_t>(n)] = c[static_cast<std::size_t>(n)] * v;
        return s;
    }

    // d/du; the result is reliable only to one order less.
    TruncatedSeries derivative() const {
        if (order == 0) throw error("derivative needs order >= 1");
        TruncatedSeries s(order - 1);
        for (int n = 1; n <= order; ++n)
            s.c[static_cast<std::size_t>(n - 1)] = c[static_cast<std::size_t>(n)] * ExactComplex(n);
        return s;
    }

    // Multiply by u^k; raises the reliable order by k.
    TruncatedSeries shift_up(int k) const {
        if (k < 0) throw error("negative shift");
        TruncatedSeries s(order + k);
        for (int n = 0; n <= order; ++n) s.c[static_cast<std::size_t>(n + k)] = c[static_cast<std::size_t>(n)];
        return s;
    }

    TruncatedSeries pow(int e) const {
        if (e < 0) throw error("negative series power");
        TruncatedSeries r = one(order);
        for (int k = 0; k < e; ++k) r = r * *this;
        return r;
    }

    TruncatedSeries reciprocal() const {
        if (c[0].is_zero()) throw error("reciprocal of series with zero constant term");
        TruncatedSeries s(order);
        ExactComplex inv0 = c[0].inverse();
        s.c[0] = inv0;
        for (int n = 1; n <= order; ++n) {
            ExactComplex acc;
            for (int j = 1; j <= n; ++j)
                acc += c[static_cast<std::size_t>(j)] * s.c[static_cast<std::size_t>(n - j)];
            s.c[static_cast<std::size_t>(n)] = -(acc * inv0);
        }
        return s;
    }

    // Branch with positive constant term; the constant term must be a real
    // rational with an exact rational square root.
    TruncatedSeries sqrt() const {
        if (c[0].is_zero()) throw error("sqrt of series with zero constant term");
        if (!c[0].is_real()) throw error("sqrt of series with non-real constant term");
        auto r0 = exact_sqrt(c[0].re);
        if (!r0) throw error("sqrt of series with non-square constant term");
        TruncatedSeries s(order);
        s.c[0] = ExactComplex(*r0);
        ExactComplex inv2b0 = (ExactComplex(2) * s.c[0]).inverse();
        for (int n = 1; n <= order; ++n) {
            ExactComplex acc = c[static_cast<std::size_t>(n)];
            for (int j = 1; j < n; ++j)
                acc -= s.c[static_cast<std::size_t>(j)] * s.c[static_cast<std::size_t>(n - j)];
            s.c[static_cast<std::size_t>(n)] = acc * inv2b0;
        }
        return s;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.order == b.order && a.c == b.c;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

    std::string str() const {
        std::string s;
        for (int n = 0; n <= order; ++n) {
            if (n) s += ", ";
            s += c[static_cast<std::size_t>(n)].str();
        }
        return s;
    }
};

// Coefficient-wise agreement through u^n.
inline bool series_equal_mod(const TruncatedSeries& a, const TruncatedSeries& b, int n) {
    if (a.order < n || b.order < n) throw error("series order too low for requested comparison");
    for (int k = 0; k <= n; ++k)
        if (a.at(k) != b.at(k)) return false;
    return true;
}

} // namespace snyder
