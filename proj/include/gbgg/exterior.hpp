#pragma once

#include <string>

#include "gbgg/combinatorics.hpp"
#include "gbgg/matrix.hpp"

namespace gbgg {

/// Shared lexicographic basis caches (thread safe, built on first use).
const SubsetBasis& cached_subset_basis(int n, int k);
const MultisetBasis& cached_multiset_basis(int n, int k);

/// Element of the degree-n exterior power of a q-dimensional space, stored as
/// coordinates over the lexicographic basis of strictly increasing n-tuples.
class ExteriorElement {
public:
    ExteriorElement(int ambient_dim, int degree, const Field& field);  // the zero element

    /// Basis monomial e_{i0} ^ ... ^ e_{i(n-1)}. Indices may come in any order;
    /// the element is sign-normalized, and a repeated index gives zero.
    static ExteriorElement basis(int ambient_dim, const IndexTuple& indices, const Field& field);
    /// Degree-one element with the given coordinates.
    static ExteriorElement from_vector(int ambient_dim, const Vec& coords, const Field& field);
    static ExteriorElement from_coordinates(int ambient_dim, int degree, const Vec& coords,
                                            const Field& field);

    int ambient_dim() const { return q_; }
    int degree() const { return n_; }
    const Field& field() const { return field_; }
    /// Dimension of the ambient exterior power, binomial(q, n).
    int space_dim() const { return static_cast<int>(coords_.size()); }
    const Vec& coordinates() const { return coords_; }
    Scalar coefficient(const IndexTuple& indices) const;
    bool is_zero() const;

    ExteriorElement operator+(const ExteriorElement& other) const;
    ExteriorElement operator-(const ExteriorElement& other) const;
    ExteriorElement operator-() const;
    ExteriorElement scaled(const Scalar& factor) const;
    bool operator==(const ExteriorElement& other) const;

    std::string str() const;

private:
    int q_, n_;
    Field field_;
    Vec coords_;

    void check_compatible(const ExteriorElement& other) const;
};

/// Exterior product; degrees add.
ExteriorElement wedge(const ExteriorElement& a, const ExteriorElement& b);

/// Left contraction with the dual basis covector e_i^*, lowering the degree by one.
ExteriorElement contract(int dual_index, const ExteriorElement& element);

}  // namespace gbgg
