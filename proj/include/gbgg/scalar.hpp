#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "gbgg/errors.hpp"

namespace gbgg {

enum class ScalarKind { Rational, PrimeField };

class Scalar;

/// Descriptor of the coefficient field: exact rationals or a prime field F_p.
/// Every container (matrix, exterior element, algebra) carries one so that
/// zero/one elements of the right kind can be made without an exemplar.
class Field {
public:
    static Field rationals() { return Field(ScalarKind::Rational, 0); }
    static Field prime(long p);

    ScalarKind kind() const { return kind_; }
    /// 0 for the rationals, p for F_p.
    long characteristic() const { return p_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar integer(long n) const;
    Scalar fraction(long num, long den) const;

    bool operator==(const Field& other) const = default;

    std::string name() const;

private:
    Field(ScalarKind kind, long p) : kind_(kind), p_(p) {}
    ScalarKind kind_;
    long p_;
};

/// Exact field scalar: a reduced arbitrary-precision rational, or a residue
/// in F_p with its modulus. The two kinds never mix in arithmetic; doing so
/// raises ScalarMismatchError.
class Scalar {
public:
    Scalar() : kind_(ScalarKind::Rational), rat_(0) {}

    static Scalar rational(const mpq_class& value);
    static Scalar rational(long num, long den = 1);
    static Scalar prime_field(long value, long p);

    ScalarKind kind() const { return kind_; }
    Field field() const;
    long characteristic() const { return p_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& other) const;
    Scalar operator-(const Scalar& other) const;
    Scalar operator*(const Scalar& other) const;
    Scalar operator/(const Scalar& other) const;
    Scalar& operator+=(const Scalar& other);
    Scalar& operator-=(const Scalar& other);
    Scalar& operator*=(const Scalar& other);

    Scalar inverse() const;

    bool operator==(const Scalar& other) const;
    bool operator!=(const Scalar& other) const { return !(*this == other); }

    /// Rational payload. Only valid for the rational kind.
    const mpq_class& rat() const;
    /// Residue in [0, p). Only valid for the prime-field kind.
    long residue() const;

    /// Reduce a rational scalar mod p. Throws ScalarMismatchError if the
    /// denominator vanishes mod p (bad reduction).
    Scalar to_prime_field(long p) const;

    /// Canonical text: "n" for integers, "n/d" otherwise; residue for F_p.
    std::string str() const;

private:
    void check_same_field(const Scalar& other) const;

    ScalarKind kind_;
    mpq_class rat_;
    long value_ = 0;
    long p_ = 0;
};

}  // namespace gbgg
