#pragma once

#include "snyder/series.hpp"

namespace snyder {

// Generator data for a similarity transform: scalar part F0(u) and dilation
// part F(u), both required to vanish at u = 0.
struct TransformSpec {
    TruncatedSeries F0;
    TruncatedSeries F;

    TransformSpec(TruncatedSeries F0_in, TruncatedSeries F_in)
        : F0(std::move(F0_in)), F(std::move(F_in)) {
        if (!F0.at(0).is_zero() || !F.at(0).is_zero())
            throw error("transform generator series must vanish at u = 0");
    }
};

// Kernel functions of a coordinate realization, all truncated at one order:
// phi1..phi3 shape the coordinate, g1..g3 are the ladder sums behind them.
struct SeriesBundle {
    TruncatedSeries phi1;
    TruncatedSeries phi2;
    TruncatedSeries phi3;
    TruncatedSeries g1;
    TruncatedSeries g2;
    TruncatedSeries g3;
};

namespace detail {

// d/du tolerant of order-0 input (where the result is the zero series).
inline TruncatedSeries safe_du(const TruncatedSeries& s) {
    if (s.order == 0) return TruncatedSeries::zero(0);
    return s.derivative();
}

// u * d/du, exact to the input order.
inline TruncatedSeries u_du(const TruncatedSeries& s) {
    return safe_du(s).shift_up(1).truncated(s.order);
}

} // namespace detail

// Ladder sum sum_n h_n / n! with h_0 = 1, h_{n+1} = sign * F * (h_n -+ 2 u h_n').
// The iterates gain one power of u per step, so the sum is finite at any order.
inline TruncatedSeries ladder_sum(const TruncatedSeries& F, int K, int sign) {
    if (!F.at(0).is_zero()) throw error("transform generator series must vanish at u = 0");
    TruncatedSeries Fk = F.truncated(K);
    TruncatedSeries cur = TruncatedSeries::one(K);
    TruncatedSeries sum = cur;
    mpz_class fact = 1;
    for (int n = 1; n <= K + 1; ++n) {
        TruncatedSeries inner =
            sign > 0 ? cur - detail::u_du(cur).scaled(ExactComplex(2))
                     : cur + detail::u_du(cur).scaled(ExactComplex(2));
        cur = Fk * inner;
        if (sign < 0) cur = -cur;
        if (cur.is_zero()) break;
        fact *= n;
        mpq_class invf(1, fact);
        invf.canonicalize();
        sum = sum + cur.scaled(ExactComplex(invf));
    }
    return sum;
}

// Coordinate kernel: pre F.order >= K.
inline TruncatedSeries g1_from_F(const TruncatedSeries& F, int K) {
    if (F.order < K) throw error("series order too low for requested kernel");
    return ladder_sum(F, K, +1);
}

// Momentum kernel: pre F.order >= K.
inline TruncatedSeries g3_from_F(const TruncatedSeries& F, int K) {
    if (F.order < K) throw error("series order too low for requested kernel");
    return ladder_sum(F, K, -1);
}

// Dilation kernel: pre F.order >= K + 1 (one derivative is consumed).
inline TruncatedSeries g2_from_F(const TruncatedSeries& F, int K) {
    if (F.order < K + 1) throw error("series order too low for requested kernel");
    if (!F.at(0).is_zero()) throw error("transform generator series must vanish at u = 0");
    const int Kw = K + 1;
    TruncatedSeries Fk = F.truncated(Kw);
    TruncatedSeries Fd = Fk.derivative(); // order K
    TruncatedSeries g1cur = TruncatedSeries::one(Kw);
    TruncatedSeries g2cur = Fd.scaled(ExactComplex(2)); // iterate n = 1
    TruncatedSeries sum = g2cur;
    mpz_class fact = 1;
    for (int n = 1; n <= K + 2; ++n) {
        g1cur = Fk * (g1cur - detail::u_du(g1cur).scaled(ExactComplex(2)));
        TruncatedSeries du = detail::safe_du(g2cur);
        TruncatedSeries next =
            (Fd * g1cur).scaled(ExactComplex(2)) +
            (Fd * g2cur).shift_up(1).scaled(ExactComplex(2)) -
            g2cur * Fk -
            (du * Fk).shift_up(1).scaled(ExactComplex(2));
        g2cur = next.truncated(std::min(K, next.order));
        if (g2cur.is_zero()) break;
        fact *= (n + 1);
        mpq_class invf(1, fact);
        invf.canonicalize();
        sum = sum + g2cur.scaled(ExactComplex(invf));
    }
    return sum.truncated(std::min(K, sum.order));
}

// Kernel triple induced by a pure dilation transform (scalar part zero).
// pre: F.order >= K + 1. phi3 stays zero here; a nonzero scalar part feeds it
// through the conjugation engine instead.
inline SeriesBundle phi_bundle(const TransformSpec& spec, int K) {
    const TruncatedSeries& F = spec.F;
    if (F.order < K + 1) throw error("series order too low for requested kernel");
    TruncatedSeries g1 = g1_from_F(F, K);
    TruncatedSeries g2 = g2_from_F(F, K);
    TruncatedSeries g3 = g3_from_F(F, K);
    TruncatedSeries phi2 =
        g2 + g3 + (g2 * g3 * g3).shift_up(1).truncated(K);
    return SeriesBundle{g1, phi2, TruncatedSeries::zero(K), g1, g2, g3};
}

// Defining constraint linking the coordinate and dilation kernels:
//   phi2 (phi1 - 2u phi1') = 1 + 2 phi1' phi1, checked through u^n.
inline bool phi_pair_identity_holds(const TruncatedSeries& phi1, const TruncatedSeries& phi2,
                                    int n) {
    TruncatedSeries d = detail::safe_du(phi1);
    TruncatedSeries lhs = phi2 * (phi1 - d.shift_up(1).truncated(phi1.order).scaled(ExactComplex(2)));
    TruncatedSeries rhs = TruncatedSeries::one(phi1.order) + (d * phi1).scaled(ExactComplex(2));
    int avail = std::min(lhs.order, rhs.order);
    if (n > avail) throw error("series order too low for requested comparison");
    return series_equal_mod(lhs, rhs, n);
}

// Full bundle determined by the coordinate kernel alone.
// pre: phi1.order >= K + 1 and phi1(0) = 1.
inline SeriesBundle bundle_from_phi1(const TruncatedSeries& phi1_in, int K) {
    if (phi1_in.order < K + 1) throw error("series order too low for requested kernel");
    if (phi1_in.at(0) != ExactComplex(1))
        throw error("coordinate kernel must have constant term 1");
    TruncatedSeries p1w = phi1_in.truncated(K + 1);
    TruncatedSeries p1d = p1w.derivative(); // order K
    TruncatedSeries p1 = p1w.truncated(K);
    TruncatedSeries denom = p1 - p1d.shift_up(1).truncated(K).scaled(ExactComplex(2));
    TruncatedSeries num = TruncatedSeries::one(K) + (p1d * p1w).scaled(ExactComplex(2));
    TruncatedSeries phi2 = num.truncated(K) * denom.reciprocal();
    TruncatedSeries g1 = p1;
    TruncatedSeries g3 = g1.reciprocal();
    TruncatedSeries g2 = (p1d * p1w).scaled(ExactComplex(2)).truncated(K) * denom.reciprocal();
    return SeriesBundle{p1, phi2, TruncatedSeries::zero(K), g1, g2, g3};
}

// Inverts the coordinate kernel map: finds F with g1_from_F(F, K) = target
// through u^K. pre: target.order >= K, target(0) = 1. The map is unit
// triangular in the coefficients, so filling order by order is exact.
inline TruncatedSeries solve_F_for_phi1(const TruncatedSeries& target, int K) {
    if (target.order < K) throw error("series order too low for requested kernel");
    if (target.at(0) != ExactComplex(1))
        throw error("coordinate kernel must have constant term 1");
    TruncatedSeries F = TruncatedSeries::zero(K);
    for (int n = 1; n <= K; ++n) {
        TruncatedSeries g = g1_from_F(F, K);
        F.c[static_cast<std::size_t>(n)] += target.at(n) - g.at(n);
    }
    return F;
}

} // namespace snyder
