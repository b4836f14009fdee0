#include "gbgg/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace gbgg {

long long binomial(int n, int k) {
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long result = 1;
    for (int i = 1; i <= k; ++i) {
        // Exact at every step: result * (n-k+i) is divisible by i here.
        result = result * (n - k + i) / i;
    }
    return result;
}

namespace {

// Shared generator: tuples from {0,...,n-1} of length k, lexicographic.
// strict = true gives strictly increasing tuples, false gives non-decreasing ones.
std::vector<IndexTuple> tuples_lex(int n, int k, bool strict) {
    if (n < 0 || k < 0) throw std::invalid_argument("tuple basis: negative parameters");
    std::vector<IndexTuple> out;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    if (strict && k > n) return out;
    if (n == 0) return out;
    IndexTuple current(k);
    for (int i = 0; i < k; ++i) current[i] = strict ? i : 0;
    while (true) {
        out.push_back(current);
        // Find the rightmost position that can still advance.
        int pos = k - 1;
        while (pos >= 0) {
            int limit = strict ? n - (k - pos) : n - 1;
            if (current[pos] < limit) break;
            --pos;
        }
        if (pos < 0) break;
        ++current[pos];
        for (int i = pos + 1; i < k; ++i)
            current[i] = strict ? current[i - 1] + 1 : current[pos];
    }
    return out;
}

}  // namespace

std::vector<IndexTuple> subsets_lex(int n, int k) { return tuples_lex(n, k, true); }

std::vector<IndexTuple> multisets_lex(int n, int k) { return tuples_lex(n, k, false); }

SignedMerge wedge_insert(int index, const IndexTuple& tuple) {
    SignedMerge result;
    result.merged.reserve(tuple.size() + 1);
    int sign = 1;
    bool placed = false;
    for (int entry : tuple) {
        if (!placed) {
            if (entry == index) return {0, {}};
            if (entry > index) {
                result.merged.push_back(index);
                placed = true;
            } else {
                sign = -sign;  // index moves past this entry
            }
        }
        result.merged.push_back(entry);
    }
    if (!placed) result.merged.push_back(index);
    result.sign = sign;
    return result;
}

SignedMerge wedge_merge(const IndexTuple& left, const IndexTuple& right) {
    SignedMerge result;
    result.merged.reserve(left.size() + right.size());
    size_t i = 0, j = 0;
    int sign = 1;
    while (i < left.size() && j < right.size()) {
        if (left[i] == right[j]) return {0, {}};
        if (left[i] < right[j]) {
            result.merged.push_back(left[i++]);
        } else {
            // right[j] jumps over the remaining entries of left
            if ((left.size() - i) % 2 == 1) sign = -sign;
            result.merged.push_back(right[j++]);
        }
    }
    while (i < left.size()) result.merged.push_back(left[i++]);
    while (j < right.size()) result.merged.push_back(right[j++]);
    result.sign = sign;
    return result;
}

IndexTuple multiset_insert(int index, const IndexTuple& tuple) {
    IndexTuple out = tuple;
    out.insert(std::upper_bound(out.begin(), out.end(), index), index);
    return out;
}

IndexTuple tuple_erase(const IndexTuple& tuple, int position) {
    if (position < 0 || position >= static_cast<int>(tuple.size()))
        throw std::out_of_range("tuple_erase: bad position");
    IndexTuple out = tuple;
    out.erase(out.begin() + position);
    return out;
}

SubsetBasis::SubsetBasis(int n, int k) : n_(n), k_(k), tuples_(subsets_lex(n, k)) {
    for (int i = 0; i < static_cast<int>(tuples_.size()); ++i) index_[tuples_[i]] = i;
}

int SubsetBasis::position(const IndexTuple& tuple) const {
    auto it = index_.find(tuple);
    return it == index_.end() ? -1 : it->second;
}

MultisetBasis::MultisetBasis(int n, int k) : n_(n), k_(k), tuples_(multisets_lex(n, k)) {
    for (int i = 0; i < static_cast<int>(tuples_.size()); ++i) index_[tuples_[i]] = i;
}

int MultisetBasis::position(const IndexTuple& tuple) const {
    auto it = index_.find(tuple);
    return it == index_.end() ? -1 : it->second;
}

}  // namespace gbgg
