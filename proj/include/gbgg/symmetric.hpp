#pragma once

#include <string>

#include "gbgg/combinatorics.hpp"
#include "gbgg/matrix.hpp"

namespace gbgg {

/// Element of the degree-m symmetric power of a k-dimensional space, stored as
/// coordinates over the monomial basis of non-decreasing m-tuples. A monomial
/// basis element is a sorted word with coefficient 1; products carry no
/// multinomial normalization (w * w is the basis monomial w^2, not 2 w^2).
class SymmetricElement {
public:
    SymmetricElement(int ambient_dim, int degree, const Field& field);  // the zero element

    /// Monomial w_{i0} * ... * w_{i(m-1)}; indices may come in any order.
    static SymmetricElement basis(int ambient_dim, const IndexTuple& indices, const Field& field);
    static SymmetricElement from_vector(int ambient_dim, const Vec& coords, const Field& field);
    static SymmetricElement from_coordinates(int ambient_dim, int degree, const Vec& coords,
                                             const Field& field);

    int ambient_dim() const { return k_; }
    int degree() const { return m_; }
    const Field& field() const { return field_; }
    int space_dim() const { return static_cast<int>(coords_.size()); }
    const Vec& coordinates() const { return coords_; }
    Scalar coefficient(const IndexTuple& indices) const;
    bool is_zero() const;

    SymmetricElement operator+(const SymmetricElement& other) const;
    SymmetricElement operator-(const SymmetricElement& other) const;
    SymmetricElement operator-() const;
    SymmetricElement scaled(const Scalar& factor) const;
    bool operator==(const SymmetricElement& other) const;

    std::string str() const;

private:
    int k_, m_;
    Field field_;
    Vec coords_;

    void check_compatible(const SymmetricElement& other) const;
};

/// Symmetric product; degrees add, monomials merge by sorted concatenation.
SymmetricElement sym_multiply(const SymmetricElement& a, const SymmetricElement& b);

}  // namespace gbgg
