#pragma once

#include <vector>

#include "gbgg/scalar.hpp"

namespace gbgg {

/// Dense univariate polynomial over a fixed field; coefficient 0 is the constant
/// term and leading zeros are stripped eagerly (the zero polynomial keeps no
/// coefficients and has degree -1).
class Polynomial {
public:
    explicit Polynomial(const Field& field) : field_(field) {}
    Polynomial(const Field& field, std::vector<Scalar> coeffs);

    static Polynomial constant(const Scalar& value);
    /// a + b t
    static Polynomial linear(const Scalar& a, const Scalar& b);

    const Field& field() const { return field_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const Scalar& coeff(int i) const;
    const Scalar& lead() const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial scaled(const Scalar& factor) const;
    bool operator==(const Polynomial& other) const;

    Scalar eval(const Scalar& t) const;
    /// Monic associate (zero stays zero).
    Polynomial monic() const;
    /// Remainder of this modulo other (other nonzero).
    Polynomial mod(const Polynomial& other) const;

private:
    Field field_;
    std::vector<Scalar> coeffs_;
    void strip();
};

/// Monic gcd via the Euclidean algorithm.
Polynomial poly_gcd(Polynomial a, Polynomial b);

/// All rational roots of a nonzero rational polynomial, ascending. Root finding
/// enumerates divisors of the cleared-denominator constant and leading terms, so
/// it gives up (returns what it has plus `complete = false`) when those integers
/// are too large to factor by trial division.
struct RationalRoots {
    std::vector<Scalar> roots;
    bool complete = true;
};
RationalRoots rational_roots(const Polynomial& p);

}  // namespace gbgg
