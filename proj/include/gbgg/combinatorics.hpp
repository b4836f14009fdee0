#pragma once

#include <map>
#include <vector>

#include "gbgg/errors.hpp"

namespace gbgg {

/// Ordered tuple of basis indices. Strictly increasing for exterior monomials,
/// non-decreasing for symmetric ones.
using IndexTuple = std::vector<int>;

/// Exact binomial coefficient; 0 when k < 0 or k > n. Throws on negative n.
long long binomial(int n, int k);

/// All strictly increasing k-tuples drawn from {0, ..., n-1}, in lexicographic order.
std::vector<IndexTuple> subsets_lex(int n, int k);

/// All non-decreasing k-tuples drawn from {0, ..., n-1}, in lexicographic order.
std::vector<IndexTuple> multisets_lex(int n, int k);

/// Merge a single index into a strictly increasing tuple, tracking the sign of the
/// permutation that sorts (index, tuple...). Returns 0 if the index already occurs.
struct SignedMerge {
    int sign = 0;  // +1, -1, or 0 on collision
    IndexTuple merged;
};
SignedMerge wedge_insert(int index, const IndexTuple& tuple);

/// Merge two strictly increasing tuples, tracking the sign of the permutation that
/// sorts their concatenation. Returns 0 if the tuples share an index.
SignedMerge wedge_merge(const IndexTuple& left, const IndexTuple& right);

/// Insert an index into a non-decreasing tuple, keeping it sorted.
IndexTuple multiset_insert(int index, const IndexTuple& tuple);

/// Remove the entry at a position from a tuple.
IndexTuple tuple_erase(const IndexTuple& tuple, int position);

/// Lexicographic basis of strictly increasing k-tuples from {0,...,n-1},
/// with O(log) lookup from tuple to position.
class SubsetBasis {
public:
    SubsetBasis(int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }
    int size() const { return static_cast<int>(tuples_.size()); }
    const IndexTuple& tuple(int position) const { return tuples_.at(position); }
    /// Position of a tuple, or -1 if it is not a basis element.
    int position(const IndexTuple& tuple) const;

private:
    int n_, k_;
    std::vector<IndexTuple> tuples_;
    std::map<IndexTuple, int> index_;
};

/// Lexicographic basis of non-decreasing k-tuples from {0,...,n-1}.
class MultisetBasis {
public:
    MultisetBasis(int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }
    int size() const { return static_cast<int>(tuples_.size()); }
    const IndexTuple& tuple(int position) const { return tuples_.at(position); }
    int position(const IndexTuple& tuple) const;

private:
    int n_, k_;
    std::vector<IndexTuple> tuples_;
    std::map<IndexTuple, int> index_;
};

}  // namespace gbgg
