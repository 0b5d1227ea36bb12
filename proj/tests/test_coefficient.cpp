#include <catch2/catch_amalgamated.hpp>

#include "snyder/coefficient.hpp"

#include <random>

using namespace snyder;

TEST_CASE("parameter polynomial addition") {
    const int d = 4;
    Coefficient half_b2 = Coefficient::beta_power(d, 2, ExactComplex::rational(1, 2));
    REQUIRE(half_b2 + half_b2 == Coefficient::beta_power(d, 2));

    Coefficient x = Coefficient::a_component(d, 1, ExactComplex::rational(3, 7));
    REQUIRE(x + Coefficient::zero(d) == x);

    Coefficient pos = Coefficient::a_component(d, 0, ExactComplex::rational(3, 4));
    Coefficient neg = Coefficient::a_component(d, 0, ExactComplex::rational(-3, 4));
    REQUIRE((pos + neg).is_zero());
    REQUIRE((pos + neg).num_terms() == 0);
}

TEST_CASE("graded multiplication") {
    const int d = 4;
    Coefficient b2 = Coefficient::beta_power(d, 2);
    REQUIRE(b2.mul(b2, 4) == Coefficient::beta_power(d, 4));
    REQUIRE(b2.mul(b2, 3).is_zero());

    Coefficient ia0 = Coefficient::a_component(d, 0, ExactComplex::i());
    Coefficient sq = ia0.mul(ia0, 2);
    REQUIRE(sq.num_terms() == 1);
    Coefficient expected(d);
    ParamExponent e(d);
    e.a[0] = 2;
    expected.add_term(e, ExactComplex(-1));
    REQUIRE(sq == expected);
}

TEST_CASE("conjugation") {
    const int d = 3;
    Coefficient ib2 = Coefficient::beta_power(d, 2, ExactComplex::i());
    REQUIRE(ib2.conjugate() == Coefficient::beta_power(d, 2, -ExactComplex::i()));
    Coefficient real = Coefficient::scalar(d, ExactComplex::rational(3, 5));
    REQUIRE(real.conjugate() == real);
    Coefficient mixed = Coefficient::a_component(d, 1, ExactComplex(mpq_class(1), mpq_class(1)));
    REQUIRE(mixed.conjugate() == Coefficient::a_component(d, 1, ExactComplex(mpq_class(1), mpq_class(-1))));
    REQUIRE(mixed.conjugate().conjugate() == mixed);
}

TEST_CASE("metric contraction of the vector parameter") {
    Metric lor = Metric::lorentzian(2);
    // a^2 = eta^{00} a0^2 + eta^{11} a1^2 = -a0^2 + a1^2
    Coefficient a2 = Coefficient::a_squared(lor);
    ParamExponent e0(2), e1(2);
    e0.a[0] = 2;
    e1.a[1] = 2;
    Coefficient expected(2);
    expected.add_term(e0, ExactComplex(-1));
    expected.add_term(e1, ExactComplex(1));
    REQUIRE(a2 == expected);

    Metric euc = Metric::euclidean(2);
    Coefficient a2e = Coefficient::a_squared(euc);
    Coefficient expected_e(2);
    expected_e.add_term(e0, ExactComplex(1));
    expected_e.add_term(e1, ExactComplex(1));
    REQUIRE(a2e == expected_e);
}

TEST_CASE("dimension mismatch is rejected") {
    Coefficient a = Coefficient::beta_power(3, 2);
    Coefficient b = Coefficient::beta_power(4, 2);
    REQUIRE_THROWS_AS(a + b, error);
    REQUIRE_THROWS_AS(a.mul(b, 4), error);
}

TEST_CASE("ring axioms with truncation on random coefficients") {
    const int d = 3;
    const int grade = 4;
    std::mt19937_64 rng(0x5eed1002ULL);
    auto rnd = [&]() {
        Coefficient c(d);
        for (int t = 0; t < 3; ++t) {
            ParamExponent e(d);
            e.beta = static_cast<int>(rng() % 3);
            e.a[rng() % d] = static_cast<int>(rng() % 2);
            mpq_class q(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 5));
            q.canonicalize();
            c.add_term(e, ExactComplex(q));
        }
        return c;
    };
    for (int t = 0; t < 100; ++t) {
        Coefficient a = rnd(), b = rnd(), c = rnd();
        REQUIRE(a.mul(b, grade) == b.mul(a, grade));
        REQUIRE(a.mul(b, grade).mul(c, grade) == a.mul(b.mul(c, grade), grade));
        REQUIRE(a.mul(b + c, grade) == a.mul(b, grade) + a.mul(c, grade));
        // truncating factors first never changes the truncated product
        REQUIRE(a.truncated(grade).mul(b.truncated(grade), grade) == a.mul(b, grade));
        REQUIRE(a.conjugate().conjugate() == a);
    }
}

TEST_CASE("weight bookkeeping") {
    const int d = 4;
    Coefficient b2 = Coefficient::beta_power(d, 2);
    REQUIRE(b2.max_weight() == 2);
    Coefficient mixed = b2 + Coefficient::a_component(d, 2);
    REQUIRE(mixed.max_weight() == 2);
    REQUIRE(mixed.truncated(1) == Coefficient::a_component(d, 2));
    REQUIRE(Coefficient::a_squared(Metric::lorentzian(d)).max_weight() == 2);
}
