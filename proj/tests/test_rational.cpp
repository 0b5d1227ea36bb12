#include <catch2/catch_amalgamated.hpp>

#include "snyder/rational.hpp"

#include <random>

using namespace snyder;

TEST_CASE("exact complex basics") {
    ExactComplex z;
    REQUIRE(z.is_zero());
    REQUIRE(z.is_real());
    REQUIRE(ExactComplex(3).re == 3);
    REQUIRE(ExactComplex::rational(1, 2) + ExactComplex::rational(1, 2) == ExactComplex(1));
    REQUIRE(ExactComplex::rational(-4, 8) == ExactComplex::rational(-1, 2));
    REQUIRE(ExactComplex::rational(1, -2) == ExactComplex::rational(-1, 2));
}

TEST_CASE("imaginary unit arithmetic") {
    const ExactComplex i = ExactComplex::i();
    REQUIRE(i * i == ExactComplex(-1));
    REQUIRE(i * i * i * i == ExactComplex(1));
    REQUIRE(ExactComplex::imag_units(0) == ExactComplex(1));
    REQUIRE(ExactComplex::imag_units(1) == i);
    REQUIRE(ExactComplex::imag_units(2) == ExactComplex(-1));
    REQUIRE(ExactComplex::imag_units(3) == -i);
    REQUIRE(ExactComplex::imag_units(-1) == -i);
    REQUIRE(ExactComplex::imag_units(7) == -i);
}

TEST_CASE("conjugation and inverse") {
    ExactComplex z(mpq_class(2, 3), mpq_class(-1, 5));
    REQUIRE(z.conj().conj() == z);
    REQUIRE(z * z.inverse() == ExactComplex(1));
    REQUIRE((z / z) == ExactComplex(1));
    REQUIRE(ExactComplex::i().conj() == -ExactComplex::i());
    REQUIRE_THROWS_AS(ExactComplex().inverse(), error);
}

TEST_CASE("scalar rendering") {
    REQUIRE(ExactComplex().str() == "0");
    REQUIRE(ExactComplex::rational(3, 4).str() == "3/4");
    REQUIRE(ExactComplex::i().str() == "i");
    REQUIRE((-ExactComplex::i()).str() == "-i");
    REQUIRE(ExactComplex(mpq_class(0), mpq_class(-2)).str() == "-2i");
    REQUIRE(ExactComplex(mpq_class(1, 2), mpq_class(-1, 3)).str() == "(1/2-1/3i)");
    REQUIRE(ExactComplex(mpq_class(1, 2), mpq_class(1, 3)).str() == "(1/2+1/3i)");
}

TEST_CASE("exact square roots") {
    REQUIRE(exact_sqrt(mpq_class(9, 4)).value() == mpq_class(3, 2));
    REQUIRE(exact_sqrt(mpq_class(0)).value() == 0);
    REQUIRE(exact_sqrt(mpq_class(1)).value() == 1);
    REQUIRE_FALSE(exact_sqrt(mpq_class(2)).has_value());
    REQUIRE_FALSE(exact_sqrt(mpq_class(-1)).has_value());
    REQUIRE_FALSE(exact_sqrt(mpq_class(4, 3)).has_value());
}

TEST_CASE("inverse factorials") {
    REQUIRE(inverse_factorial(0) == ExactComplex(1));
    REQUIRE(inverse_factorial(1) == ExactComplex(1));
    REQUIRE(inverse_factorial(5) == ExactComplex::rational(1, 120));
}

TEST_CASE("field axioms on random values") {
    std::mt19937_64 rng(0x5eed1001ULL);
    auto rnd = [&rng]() {
        mpq_class re(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 7));
        mpq_class im(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 7));
        re.canonicalize();
        im.canonicalize();
        return ExactComplex(re, im);
    };
    for (int t = 0; t < 200; ++t) {
        ExactComplex a = rnd(), b = rnd(), c = rnd();
        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE((a * b).conj() == a.conj() * b.conj());
        if (!a.is_zero()) REQUIRE(a * a.inverse() == ExactComplex(1));
    }
}
