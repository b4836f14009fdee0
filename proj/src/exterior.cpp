#include "gbgg/exterior.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace gbgg {

const SubsetBasis& cached_subset_basis(int n, int k) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, SubsetBasis> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(n, k);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, SubsetBasis(n, k)).first;
    return it->second;
}

const MultisetBasis& cached_multiset_basis(int n, int k) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, MultisetBasis> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(n, k);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, MultisetBasis(n, k)).first;
    return it->second;
}

ExteriorElement::ExteriorElement(int ambient_dim, int degree, const Field& field)
    : q_(ambient_dim), n_(degree), field_(field) {
    if (ambient_dim < 0 || degree < 0) throw DimensionError("exterior element: negative parameters");
    coords_.assign(static_cast<size_t>(binomial(ambient_dim, degree)), field.zero());
}

ExteriorElement ExteriorElement::basis(int ambient_dim, const IndexTuple& indices,
                                       const Field& field) {
    ExteriorElement out(ambient_dim, static_cast<int>(indices.size()), field);
    for (int i : indices)
        if (i < 0 || i >= ambient_dim)
            throw DimensionError("basis index " + std::to_string(i) + " outside ambient dimension " +
                                 std::to_string(ambient_dim));
    // Normalize by sorting one index at a time, so repeated indices collapse to
    // zero. wedge_insert computes e_i ^ e_T, so fold from the right to get
    // e_{i1} ^ (e_{i2} ^ (... ^ e_{in})).
    int sign = 1;
    IndexTuple sorted;
    for (auto it = indices.rbegin(); it != indices.rend(); ++it) {
        SignedMerge step = wedge_insert(*it, sorted);
        if (step.sign == 0) return out;
        sign *= step.sign;
        sorted = std::move(step.merged);
    }
    const SubsetBasis& basis_set = cached_subset_basis(ambient_dim, out.n_);
    int pos = basis_set.position(sorted);
    out.coords_[pos] = sign == 1 ? field.one() : -field.one();
    return out;
}

ExteriorElement ExteriorElement::from_vector(int ambient_dim, const Vec& coords,
                                             const Field& field) {
    return from_coordinates(ambient_dim, 1, coords, field);
}

ExteriorElement ExteriorElement::from_coordinates(int ambient_dim, int degree, const Vec& coords,
                                                  const Field& field) {
    ExteriorElement out(ambient_dim, degree, field);
    if (coords.size() != out.coords_.size())
        throw DimensionError("coordinate vector has length " + std::to_string(coords.size()) +
                             ", expected " + std::to_string(out.coords_.size()));
    for (const auto& c : coords)
        if (c.field() != field) throw ScalarMismatchError("coordinate field mismatch");
    out.coords_ = coords;
    return out;
}

Scalar ExteriorElement::coefficient(const IndexTuple& indices) const {
    const SubsetBasis& basis_set = cached_subset_basis(q_, n_);
    int pos = basis_set.position(indices);
    if (pos < 0) throw DimensionError("not a strictly increasing basis tuple");
    return coords_[pos];
}

bool ExteriorElement::is_zero() const {
    for (const auto& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

void ExteriorElement::check_compatible(const ExteriorElement& other) const {
    if (q_ != other.q_ || n_ != other.n_)
        throw DimensionError("exterior elements live in different spaces");
    if (field_ != other.field_) throw ScalarMismatchError("exterior element field mismatch");
}

ExteriorElement ExteriorElement::operator+(const ExteriorElement& other) const {
    check_compatible(other);
    ExteriorElement out = *this;
    for (size_t t = 0; t < coords_.size(); ++t) out.coords_[t] += other.coords_[t];
    return out;
}

ExteriorElement ExteriorElement::operator-(const ExteriorElement& other) const {
    check_compatible(other);
    ExteriorElement out = *this;
    for (size_t t = 0; t < coords_.size(); ++t) out.coords_[t] -= other.coords_[t];
    return out;
}

ExteriorElement ExteriorElement::operator-() const {
    ExteriorElement out = *this;
    for (auto& c : out.coords_) c = -c;
    return out;
}

ExteriorElement ExteriorElement::scaled(const Scalar& factor) const {
    ExteriorElement out = *this;
    for (auto& c : out.coords_) c *= factor;
    return out;
}

bool ExteriorElement::operator==(const ExteriorElement& other) const {
    return q_ == other.q_ && n_ == other.n_ && field_ == other.field_ && coords_ == other.coords_;
}

std::string ExteriorElement::str() const {
    const SubsetBasis& basis_set = cached_subset_basis(q_, n_);
    std::ostringstream os;
    bool first = true;
    for (int t = 0; t < space_dim(); ++t) {
        if (coords_[t].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (n_ == 0) {
            os << coords_[t].str();
            continue;
        }
        if (!coords_[t].is_one()) os << coords_[t].str() << "*";
        const IndexTuple& tuple = basis_set.tuple(t);
        for (size_t s = 0; s < tuple.size(); ++s) os << (s ? "^" : "") << "e" << tuple[s];
    }
    if (first) os << "0";
    return os.str();
}

ExteriorElement wedge(const ExteriorElement& a, const ExteriorElement& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionError("wedge: ambient dimensions differ");
    if (a.field() != b.field()) throw ScalarMismatchError("wedge: field mismatch");
    int q = a.ambient_dim();
    ExteriorElement out(q, a.degree() + b.degree(), a.field());
    if (a.degree() + b.degree() > q) return out;  // the target power is zero
    const SubsetBasis& basis_a = cached_subset_basis(q, a.degree());
    const SubsetBasis& basis_b = cached_subset_basis(q, b.degree());
    const SubsetBasis& basis_out = cached_subset_basis(q, a.degree() + b.degree());
    Vec coords(static_cast<size_t>(basis_out.size()), a.field().zero());
    for (int i = 0; i < basis_a.size(); ++i) {
        const Scalar& ca = a.coordinates()[i];
        if (ca.is_zero()) continue;
        for (int j = 0; j < basis_b.size(); ++j) {
            const Scalar& cb = b.coordinates()[j];
            if (cb.is_zero()) continue;
            SignedMerge merged = wedge_merge(basis_a.tuple(i), basis_b.tuple(j));
            if (merged.sign == 0) continue;
            Scalar term = ca * cb;
            if (merged.sign < 0) term = -term;
            coords[basis_out.position(merged.merged)] += term;
        }
    }
    return ExteriorElement::from_coordinates(q, a.degree() + b.degree(), coords, a.field());
}

ExteriorElement contract(int dual_index, const ExteriorElement& element) {
    int q = element.ambient_dim();
    int n = element.degree();
    if (dual_index < 0 || dual_index >= q) throw DimensionError("contract: index out of range");
    ExteriorElement out(q, n == 0 ? 0 : n - 1, element.field());
    if (n == 0) return out;
    const SubsetBasis& basis_in = cached_subset_basis(q, n);
    const SubsetBasis& basis_out = cached_subset_basis(q, n - 1);
    Vec coords(static_cast<size_t>(basis_out.size()), element.field().zero());
    for (int t = 0; t < basis_in.size(); ++t) {
        const Scalar& c = element.coordinates()[t];
        if (c.is_zero()) continue;
        const IndexTuple& tuple = basis_in.tuple(t);
        for (size_t pos = 0; pos < tuple.size(); ++pos) {
            if (tuple[pos] != dual_index) continue;
            Scalar term = pos % 2 == 0 ? c : -c;
            coords[basis_out.position(tuple_erase(tuple, static_cast<int>(pos)))] += term;
            break;
        }
    }
    return ExteriorElement::from_coordinates(q, n - 1, coords, element.field());
}

}  // namespace gbgg
