#include "gbgg/scalar.hpp"

namespace gbgg {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long f = 2; f * f <= p; ++f)
        if (p % f == 0) return false;
    return true;
}

long mod_positive(long v, long p) {
    long r = v % p;
    return r < 0 ? r + p : r;
}

// Extended Euclid; requires gcd(a, p) == 1.
long mod_inverse(long a, long p) {
    long t = 0, new_t = 1;
    long r = p, new_r = a;
    while (new_r != 0) {
        long quot = r / new_r;
        long tmp = t - quot * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - quot * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw ScalarMismatchError("element not invertible mod " + std::to_string(p));
    return mod_positive(t, p);
}

}  // namespace

Field Field::prime(long p) {
    if (p > 1000000) throw std::invalid_argument("prime modulus too large: " + std::to_string(p));
    if (!is_prime(p)) throw std::invalid_argument("modulus is not prime: " + std::to_string(p));
    return Field(ScalarKind::PrimeField, p);
}

Scalar Field::zero() const { return integer(0); }

Scalar Field::one() const { return integer(1); }

Scalar Field::integer(long n) const {
    if (kind_ == ScalarKind::Rational) return Scalar::rational(n);
    return Scalar::prime_field(n, p_);
}

Scalar Field::fraction(long num, long den) const {
    if (kind_ == ScalarKind::Rational) return Scalar::rational(num, den);
    return Scalar::prime_field(num, p_) / Scalar::prime_field(den, p_);
}

std::string Field::name() const {
    if (kind_ == ScalarKind::Rational) return "Q";
    return "F" + std::to_string(p_);
}

Scalar Scalar::rational(const mpq_class& value) {
    Scalar s;
    s.kind_ = ScalarKind::Rational;
    // The input need not be canonical (negative denominator, common factors),
    // but whole-rational GMP operations require canonical operands. Copy the
    // two integer parts instead, then canonicalize the result.
    mpz_set(mpq_numref(s.rat_.get_mpq_t()), mpq_numref(value.get_mpq_t()));
    mpz_set(mpq_denref(s.rat_.get_mpq_t()), mpq_denref(value.get_mpq_t()));
    s.rat_.canonicalize();
    return s;
}

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    return rational(mpq_class(num, den));
}

Scalar Scalar::prime_field(long value, long p) {
    Field::prime(p);  // validates
    Scalar s;
    s.kind_ = ScalarKind::PrimeField;
    s.rat_ = 0;
    s.value_ = mod_positive(value, p);
    s.p_ = p;
    return s;
}

Field Scalar::field() const {
    return kind_ == ScalarKind::Rational ? Field::rationals() : Field::prime(p_);
}

bool Scalar::is_zero() const {
    return kind_ == ScalarKind::Rational ? rat_ == 0 : value_ == 0;
}

bool Scalar::is_one() const {
    return kind_ == ScalarKind::Rational ? rat_ == 1 : value_ == 1;
}

void Scalar::check_same_field(const Scalar& other) const {
    if (kind_ != other.kind_ || p_ != other.p_)
        throw ScalarMismatchError("scalar kinds differ: " + field().name() + " vs " +
                                  other.field().name());
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (kind_ == ScalarKind::Rational)
        s.rat_ = -rat_;
    else
        s.value_ = value_ == 0 ? 0 : p_ - value_;
    return s;
}

Scalar Scalar::operator+(const Scalar& other) const {
    Scalar s = *this;
    s += other;
    return s;
}

Scalar Scalar::operator-(const Scalar& other) const {
    Scalar s = *this;
    s -= other;
    return s;
}

Scalar Scalar::operator*(const Scalar& other) const {
    Scalar s = *this;
    s *= other;
    return s;
}

Scalar& Scalar::operator+=(const Scalar& other) {
    check_same_field(other);
    if (kind_ == ScalarKind::Rational)
        rat_ += other.rat_;
    else
        value_ = (value_ + other.value_) % p_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
    check_same_field(other);
    if (kind_ == ScalarKind::Rational)
        rat_ -= other.rat_;
    else
        value_ = mod_positive(value_ - other.value_, p_);
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
    check_same_field(other);
    if (kind_ == ScalarKind::Rational)
        rat_ *= other.rat_;
    else
        value_ = (value_ * other.value_) % p_;  // p <= 1e6 keeps the product in range
    return *this;
}

Scalar Scalar::operator/(const Scalar& other) const {
    check_same_field(other);
    if (other.is_zero()) throw std::invalid_argument("division by zero");
    if (kind_ == ScalarKind::Rational) return rational(mpq_class(rat_ / other.rat_));
    return *this * other.inverse();
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::invalid_argument("zero has no inverse");
    if (kind_ == ScalarKind::Rational) return rational(mpq_class(1 / rat_));
    return prime_field(mod_inverse(value_, p_), p_);
}

bool Scalar::operator==(const Scalar& other) const {
    if (kind_ != other.kind_ || p_ != other.p_) return false;
    return kind_ == ScalarKind::Rational ? rat_ == other.rat_ : value_ == other.value_;
}

const mpq_class& Scalar::rat() const {
    if (kind_ != ScalarKind::Rational) throw ScalarMismatchError("not a rational scalar");
    return rat_;
}

long Scalar::residue() const {
    if (kind_ != ScalarKind::PrimeField) throw ScalarMismatchError("not a prime-field scalar");
    return value_;
}

Scalar Scalar::to_prime_field(long p) const {
    if (kind_ == ScalarKind::PrimeField) {
        if (p_ != p) throw ScalarMismatchError("residue already lives in another prime field");
        return *this;
    }
    mpz_class num = rat_.get_num(), den = rat_.get_den();
    long n = mpz_class(num % p).get_si();
    long d = mpz_class(den % p).get_si();
    if (mod_positive(d, p) == 0)
        throw ScalarMismatchError("bad reduction: denominator divisible by " + std::to_string(p));
    return prime_field(n, p) / prime_field(d, p);
}

std::string Scalar::str() const {
    if (kind_ == ScalarKind::PrimeField) return std::to_string(value_);
    if (rat_.get_den() == 1) return rat_.get_num().get_str();
    return rat_.get_num().get_str() + "/" + rat_.get_den().get_str();
}

}  // namespace gbgg
