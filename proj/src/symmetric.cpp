#include "gbgg/symmetric.hpp"

#include <algorithm>
#include <sstream>

#include "gbgg/exterior.hpp"

namespace gbgg {

SymmetricElement::SymmetricElement(int ambient_dim, int degree, const Field& field)
    : k_(ambient_dim), m_(degree), field_(field) {
    if (ambient_dim < 0 || degree < 0) throw DimensionError("symmetric element: negative parameters");
    coords_.assign(static_cast<size_t>(binomial(ambient_dim + degree - 1, degree)), field.zero());
}

SymmetricElement SymmetricElement::basis(int ambient_dim, const IndexTuple& indices,
                                         const Field& field) {
    SymmetricElement out(ambient_dim, static_cast<int>(indices.size()), field);
    for (int i : indices)
        if (i < 0 || i >= ambient_dim)
            throw DimensionError("basis index " + std::to_string(i) + " outside ambient dimension " +
                                 std::to_string(ambient_dim));
    IndexTuple sorted = indices;
    std::sort(sorted.begin(), sorted.end());
    const MultisetBasis& basis_set = cached_multiset_basis(ambient_dim, out.m_);
    out.coords_[basis_set.position(sorted)] = field.one();
    return out;
}

SymmetricElement SymmetricElement::from_vector(int ambient_dim, const Vec& coords,
                                               const Field& field) {
    return from_coordinates(ambient_dim, 1, coords, field);
}

SymmetricElement SymmetricElement::from_coordinates(int ambient_dim, int degree, const Vec& coords,
                                                    const Field& field) {
    SymmetricElement out(ambient_dim, degree, field);
    if (coords.size() != out.coords_.size())
        throw DimensionError("coordinate vector has length " + std::to_string(coords.size()) +
                             ", expected " + std::to_string(out.coords_.size()));
    for (const auto& c : coords)
        if (c.field() != field) throw ScalarMismatchError("coordinate field mismatch");
    out.coords_ = coords;
    return out;
}

Scalar SymmetricElement::coefficient(const IndexTuple& indices) const {
    const MultisetBasis& basis_set = cached_multiset_basis(k_, m_);
    int pos = basis_set.position(indices);
    if (pos < 0) throw DimensionError("not a non-decreasing basis tuple");
    return coords_[pos];
}

bool SymmetricElement::is_zero() const {
    for (const auto& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

void SymmetricElement::check_compatible(const SymmetricElement& other) const {
    if (k_ != other.k_ || m_ != other.m_)
        throw DimensionError("symmetric elements live in different spaces");
    if (field_ != other.field_) throw ScalarMismatchError("symmetric element field mismatch");
}

SymmetricElement SymmetricElement::operator+(const SymmetricElement& other) const {
    check_compatible(other);
    SymmetricElement out = *this;
    for (size_t t = 0; t < coords_.size(); ++t) out.coords_[t] += other.coords_[t];
    return out;
}

SymmetricElement SymmetricElement::operator-(const SymmetricElement& other) const {
    check_compatible(other);
    SymmetricElement out = *this;
    for (size_t t = 0; t < coords_.size(); ++t) out.coords_[t] -= other.coords_[t];
    return out;
}

SymmetricElement SymmetricElement::operator-() const {
    SymmetricElement out = *this;
    for (auto& c : out.coords_) c = -c;
    return out;
}

SymmetricElement SymmetricElement::scaled(const Scalar& factor) const {
    SymmetricElement out = *this;
    for (auto& c : out.coords_) c *= factor;
    return out;
}

bool SymmetricElement::operator==(const SymmetricElement& other) const {
    return k_ == other.k_ && m_ == other.m_ && field_ == other.field_ && coords_ == other.coords_;
}

std::string SymmetricElement::str() const {
    const MultisetBasis& basis_set = cached_multiset_basis(k_, m_);
    std::ostringstream os;
    bool first = true;
    for (int t = 0; t < space_dim(); ++t) {
        if (coords_[t].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (m_ == 0) {
            os << coords_[t].str();
            continue;
        }
        if (!coords_[t].is_one()) os << coords_[t].str() << "*";
        const IndexTuple& tuple = basis_set.tuple(t);
        for (size_t s = 0; s < tuple.size(); ++s) os << (s ? "*" : "") << "w" << tuple[s];
    }
    if (first) os << "0";
    return os.str();
}

SymmetricElement sym_multiply(const SymmetricElement& a, const SymmetricElement& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionError("sym_multiply: ambient dimensions differ");
    if (a.field() != b.field()) throw ScalarMismatchError("sym_multiply: field mismatch");
    int k = a.ambient_dim();
    int m = a.degree() + b.degree();
    const MultisetBasis& basis_a = cached_multiset_basis(k, a.degree());
    const MultisetBasis& basis_b = cached_multiset_basis(k, b.degree());
    const MultisetBasis& basis_out = cached_multiset_basis(k, m);
    Vec coords(static_cast<size_t>(basis_out.size()), a.field().zero());
    for (int i = 0; i < basis_a.size(); ++i) {
        const Scalar& ca = a.coordinates()[i];
        if (ca.is_zero()) continue;
        for (int j = 0; j < basis_b.size(); ++j) {
            const Scalar& cb = b.coordinates()[j];
            if (cb.is_zero()) continue;
            IndexTuple merged = basis_a.tuple(i);
            for (int idx : basis_b.tuple(j)) merged = multiset_insert(idx, merged);
            coords[basis_out.position(merged)] += ca * cb;
        }
    }
    return SymmetricElement::from_coordinates(k, m, coords, a.field());
}

}  // namespace gbgg
