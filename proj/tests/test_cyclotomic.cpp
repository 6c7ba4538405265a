#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcgcert/cyclotomic.hpp"

#include <random>

using mcgcert::Cyclotomic;
using mcgcert::Rational;

namespace {

Cyclotomic random_element(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    Cyclotomic c;
    for (int i = 0; i < Cyclotomic::Degree; ++i)
        c.coeff(i) = Rational(num(rng), den(rng));
    return c;
}

}  // namespace

TEST_CASE("trivial roots of unity") {
    CHECK(Cyclotomic::root_of_unity(1) == Cyclotomic::one());
    CHECK(Cyclotomic::root_of_unity(2) == -Cyclotomic::one());
    CHECK(Cyclotomic::root_of_unity(2).pow(2) == Cyclotomic::one());
}

TEST_CASE("unsupported root order throws") {
    CHECK_THROWS_AS(Cyclotomic::root_of_unity(7), mcgcert::Error);
    CHECK_THROWS_AS(Cyclotomic::root_of_unity(8), mcgcert::Error);
    CHECK_THROWS_AS(Cyclotomic::root_of_unity(0), mcgcert::Error);
}

TEST_CASE("zeta_5 satisfies its minimal polynomial") {
    Cyclotomic z5 = Cyclotomic::root_of_unity(5);
    Cyclotomic sum = Cyclotomic::one();
    for (int k = 1; k <= 4; ++k) sum += z5.pow(k);
    CHECK(sum.is_zero());
    CHECK(z5.pow(5) == Cyclotomic::one());
    CHECK(z5.root_of_unity_order() == 5);
}

TEST_CASE("zeta_60 has exact order 60") {
    Cyclotomic z = Cyclotomic::zeta_pow(1);
    CHECK(z.root_of_unity_order() == 60);
    Cyclotomic p = Cyclotomic::one();
    for (int k = 1; k < 60; ++k) {
        p *= z;
        CHECK(p == Cyclotomic::zeta_pow(k));
        CHECK(p != Cyclotomic::one());
    }
    p *= z;
    CHECK(p == Cyclotomic::one());
}

TEST_CASE("golden ratio identities") {
    Cyclotomic phi = Cyclotomic::golden_ratio();
    CHECK(phi * phi == phi + Cyclotomic::one());
    CHECK(phi.conj() == phi);  // real number
    Cyclotomic sqrt5 = Rational(2) * phi - Cyclotomic::one();
    CHECK(sqrt5 * sqrt5 == Cyclotomic(5));
    CHECK(phi * (phi - Cyclotomic::one()) == Cyclotomic::one());  // phi^-1 = phi - 1
}

TEST_CASE("conjugation is the automorphism zeta -> zeta^-1") {
    Cyclotomic z = Cyclotomic::zeta_pow(1);
    CHECK(z.conj() == Cyclotomic::zeta_pow(59));
    CHECK(z.conj() * z == Cyclotomic::one());

    std::mt19937 rng(7);
    for (int t = 0; t < 25; ++t) {
        Cyclotomic a = random_element(rng);
        Cyclotomic b = random_element(rng);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK((a + b).conj() == a.conj() + b.conj());
        CHECK(a.conj().conj() == a);
    }
}

TEST_CASE("inverse and division") {
    CHECK(Cyclotomic::zeta_pow(7).inverse() == Cyclotomic::zeta_pow(53));
    CHECK_THROWS_AS(Cyclotomic::zero().inverse(), mcgcert::Error);

    std::mt19937 rng(11);
    int tried = 0;
    while (tried < 25) {
        Cyclotomic a = random_element(rng);
        if (a.is_zero()) continue;
        ++tried;
        CHECK(a * a.inverse() == Cyclotomic::one());
        CHECK((a / a) == Cyclotomic::one());
    }
    CHECK(Cyclotomic::zeta_pow(1).pow(-1) == Cyclotomic::zeta_pow(59));
}

TEST_CASE("field axioms on pseudorandom elements") {
    std::mt19937 rng(42);
    for (int t = 0; t < 40; ++t) {
        Cyclotomic a = random_element(rng);
        Cyclotomic b = random_element(rng);
        Cyclotomic c = random_element(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Cyclotomic::zero() == a);
        CHECK(a * Cyclotomic::one() == a);
        CHECK(a - a == Cyclotomic::zero());
    }
}

TEST_CASE("rational detection") {
    CHECK(Cyclotomic(3).is_rational());
    CHECK(Cyclotomic(3).rational_value() == 3);
    Cyclotomic z = Cyclotomic::zeta_pow(1);
    CHECK(!z.is_rational());
    CHECK_THROWS_AS(z.rational_value(), mcgcert::Error);
    // zeta^30 = -1 is rational even though the exponent is not 0
    CHECK(Cyclotomic::zeta_pow(30).is_rational());
    CHECK(Cyclotomic::zeta_pow(30).rational_value() == -1);
}

TEST_CASE("root of unity detection") {
    for (int k = 0; k < 60; ++k)
        CHECK(Cyclotomic::zeta_pow(k).as_root_of_unity() == k);
    CHECK(!Cyclotomic(2).as_root_of_unity().has_value());
    CHECK(!(Cyclotomic::zeta_pow(3) + Cyclotomic::one()).as_root_of_unity().has_value());
    CHECK(Cyclotomic::zeta_pow(30).root_of_unity_order() == 2);
    CHECK(Cyclotomic::zeta_pow(12).root_of_unity_order() == 5);
}

TEST_CASE("printing") {
    CHECK(Cyclotomic::zero().to_string() == "0");
    CHECK(Cyclotomic(1).to_string() == "1");
    CHECK((-Cyclotomic::one()).to_string() == "-1");
    CHECK(Cyclotomic::zeta_pow(1).to_string() == "z");
    Cyclotomic e = Cyclotomic::zeta_pow(2) - Cyclotomic(1);
    CHECK(e.to_string() == "z^2 - 1");
}

TEST_CASE("ordering is a total order on coefficients") {
    Cyclotomic a = Cyclotomic::zeta_pow(1);
    Cyclotomic b = Cyclotomic::zeta_pow(2);
    CHECK(((a < b) || (b < a)));
    CHECK(!(a < a));
}
