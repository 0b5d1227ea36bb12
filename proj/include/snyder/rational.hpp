#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "snyder/errors.hpp"

namespace snyder {

// Complex number with arbitrary-precision rational real and imaginary parts.
// Both parts are kept canonical: lowest terms, positive denominator.
struct ExactComplex {
    mpq_class re;
    mpq_class im;

    ExactComplex() : re(0), im(0) {}
    ExactComplex(long n) : re(n), im(0) {}
    explicit ExactComplex(const mpq_class& r) : re(r), im(0) { re.canonicalize(); }
    ExactComplex(const mpq_class& r, const mpq_class& i) : re(r), im(i) {
        re.canonicalize();
        im.canonicalize();
    }

    static ExactComplex rational(long num, long den) {
        if (den == 0) throw error("rational with zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return ExactComplex(q);
    }

    static ExactComplex i() { return ExactComplex(mpq_class(0), mpq_class(1)); }
    static ExactComplex imag_units(int k); // i^k, defined below

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }

    ExactComplex operator-() const { return ExactComplex(mpq_class(-re), mpq_class(-im)); }

    ExactComplex& operator+=(const ExactComplex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    ExactComplex& operator-=(const ExactComplex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }

    friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
    friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }

    friend ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
        const bool ar = sgn(a.im) == 0;
        const bool br = sgn(b.im) == 0;
        if (ar && br) return ExactComplex(mpq_class(a.re * b.re), mpq_class(0));
        if (ar) return ExactComplex(mpq_class(a.re * b.re), mpq_class(a.re * b.im));
        if (br) return ExactComplex(mpq_class(a.re * b.re), mpq_class(a.im * b.re));
        return ExactComplex(mpq_class(a.re * b.re - a.im * b.im),
                            mpq_class(a.re * b.im + a.im * b.re));
    }

    ExactComplex& operator*=(const ExactComplex& o) { return *this = *this * o; }

    ExactComplex conj() const { return ExactComplex(re, mpq_class(-im)); }

    ExactComplex inverse() const {
        if (is_zero()) throw error("division by zero");
        if (sgn(im) == 0) return ExactComplex(mpq_class(1 / re), mpq_class(0));
        mpq_class n = re * re + im * im;
        return ExactComplex(mpq_class(re / n), mpq_class(-im / n));
    }

    friend ExactComplex operator/(const ExactComplex& a, const ExactComplex& b) {
        return a * b.inverse();
    }

    friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const ExactComplex& a, const ExactComplex& b) { return !(a == b); }

    // Canonical rendering: "0", "3/4", "i", "-2i", "(1/2-1/3i)".
    std::string str() const {
        if (is_zero()) return "0";
        if (sgn(im) == 0) return re.get_str();
        if (sgn(re) == 0) return imag_str(im);
        std::string s = "(" + re.get_str();
        if (sgn(im) > 0) s += "+";
        s += imag_str(im) + ")";
        return s;
    }

private:
    static std::string imag_str(const mpq_class& v) {
        if (v == 1) return "i";
        if (v == -1) return "-i";
        return v.get_str() + "i";
    }
};

inline ExactComplex ExactComplex::imag_units(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return ExactComplex(1);
        case 1: return ExactComplex::i();
        case 2: return ExactComplex(-1);
        default: return -ExactComplex::i();
    }
}

// Exact square root of a non-negative rational, if one exists.
inline std::optional<mpq_class> exact_sqrt(const mpq_class& q) {
    if (sgn(q) < 0) return std::nullopt;
    if (sgn(q) == 0) return mpq_class(0);
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    mpq_class r(rn, rd);
    r.canonicalize();
    return r;
}

// 1/n! as an exact scalar.
inline ExactComplex inverse_factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    mpq_class q(1, f);
    q.canonicalize();
    return ExactComplex(q);
}

} // namespace snyder
