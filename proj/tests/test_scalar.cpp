#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gbgg/errors.hpp"
#include "gbgg/scalar.hpp"

using namespace gbgg;

TEST_CASE("rational arithmetic is exact and canonical") {
    Scalar a = Scalar::rational(2, 4);
    CHECK(a.str() == "1/2");
    Scalar b = Scalar::rational(-3, 6);
    CHECK(b.str() == "-1/2");
    CHECK((a + b).is_zero());
    CHECK((a * Scalar::rational(2)).is_one());
    CHECK((a - b).str() == "1");
    CHECK((a / b).str() == "-1");
    CHECK(a.inverse().str() == "2");
    CHECK((-a).str() == "-1/2");

    // A short telescoping product that floats would mangle.
    Scalar t = Scalar::rational(1);
    for (long k = 1; k <= 12; ++k) t *= Scalar::rational(k, k + 1);
    CHECK(t == Scalar::rational(1, 13));
}

TEST_CASE("rational field accessors") {
    Field rat = Field::rationals();
    CHECK(rat.kind() == ScalarKind::Rational);
    CHECK(rat.characteristic() == 0);
    CHECK(rat.zero().is_zero());
    CHECK(rat.one().is_one());
    CHECK(rat.fraction(3, 4) == Scalar::rational(3, 4));
    CHECK(Scalar().is_zero());
}

TEST_CASE("prime field arithmetic") {
    Field f5 = Field::prime(5);
    CHECK(f5.characteristic() == 5);
    Scalar a = f5.integer(3);
    Scalar b = f5.integer(4);
    CHECK((a + b).residue() == 2);
    CHECK((a * b).residue() == 2);
    CHECK((a - b).residue() == 4);
    CHECK(a.inverse().residue() == 2);  // 3*2 = 6 = 1 mod 5
    CHECK((b / a).residue() == 3);      // 4 * 3^-1 = 8 = 3
    CHECK(f5.integer(-1).residue() == 4);
    CHECK(f5.integer(10).is_zero());
}

TEST_CASE("field construction rejects bad primes") {
    CHECK_THROWS_AS(Field::prime(6), std::invalid_argument);
    CHECK_THROWS_AS(Field::prime(1), std::invalid_argument);
    CHECK_THROWS_AS(Field::prime(-5), std::invalid_argument);
    CHECK_THROWS_AS(Field::prime(1000003), std::invalid_argument);  // above the cap
    CHECK_NOTHROW(Field::prime(999983));
}

TEST_CASE("mixed-field operations are rejected") {
    Scalar a = Scalar::rational(1, 2);
    Scalar b = Scalar::prime_field(2, 5);
    CHECK_THROWS_AS(a + b, ScalarMismatchError);
    CHECK_THROWS_AS(a * b, ScalarMismatchError);
    Scalar c = Scalar::prime_field(2, 7);
    CHECK_THROWS_AS(b + c, ScalarMismatchError);
}

TEST_CASE("division by zero is rejected in both fields") {
    CHECK_THROWS_AS(Scalar::rational(1) / Scalar::rational(0), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::rational(0).inverse(), std::invalid_argument);
    Field f5 = Field::prime(5);
    CHECK_THROWS_AS(f5.one() / f5.zero(), std::invalid_argument);
}

TEST_CASE("reduction to a prime field") {
    Scalar a = Scalar::rational(7, 3);
    Scalar r = a.to_prime_field(5);
    // 7/3 = 2 * 3^-1 = 2 * 2 = 4 mod 5
    CHECK(r.residue() == 4);
    CHECK(Scalar::rational(-1).to_prime_field(7).residue() == 6);
    // Denominator divisible by p has no image.
    CHECK_THROWS_AS(Scalar::rational(1, 5).to_prime_field(5), ScalarMismatchError);
}

TEST_CASE("string forms") {
    CHECK(Scalar::rational(0).str() == "0");
    CHECK(Scalar::rational(-7).str() == "-7");
    CHECK(Scalar::rational(22, -4).str() == "-11/2");
    CHECK(Scalar::prime_field(9, 7).str() == "2");
}
