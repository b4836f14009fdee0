#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gbgg/form_algebra.hpp"

namespace gbgg {

/// The realized complex at a point W of the Grassmannian:
///   Sigma^r W -> Sigma^(r-1) W (x) H^1 -> ... -> Sigma^(r-n) W (x) H^n
/// with n = min(r, d), shortened further (and flagged truncated) when the algebra
/// stores fewer degrees than d.
struct ComplexInstance {
    int r = 0;
    int n = 0;  // number of maps actually built
    bool truncated = false;
    ExactMatrix W;
    std::vector<ExactMatrix> mu;  // mu[i] maps term i to term i+1
    std::vector<int> source_dims;
    std::vector<int> target_dims;

    explicit ComplexInstance(ExactMatrix basis) : W(std::move(basis)) {}
};

/// Matrix of mu_i on the monomial basis of Sigma^(r-i) W tensored with the basis
/// of H^i: delete one symmetric factor, multiply it onto the form component, sum
/// over the deleted position. Basis layout is word-major (word index times h[i]
/// plus form index).
ExactMatrix build_mu(const FormAlgebra& a, const ExactMatrix& W, int r, int i);

/// Builds all maps and checks mu_(i+1) * mu_i = 0; a nonzero composite on a
/// validated algebra throws InternalError.
ComplexInstance build_complex(const FormAlgebra& a, const ExactMatrix& W, int r);

struct ExactnessReport {
    bool injective_at_0 = false;
    std::vector<bool> exact_middle;  // term i for 1 <= i <= n-1
    int coker_dim = 0;
    std::vector<int> ranks;  // rank of each mu_i
    bool all_exact() const {
        if (!injective_at_0) return false;
        for (bool e : exact_middle)
            if (!e) return false;
        return true;
    }
};

/// Decides exactness by rank arithmetic: exact at term i iff
/// rank(mu_i) + rank(mu_(i-1)) equals the dimension of term i.
ExactnessReport exactness_at(const ComplexInstance& c);

struct SampleReport {
    int n_exact = 0;
    int n_total = 0;
    /// Sample index and subspace basis of the first inexact sample, if any.
    std::optional<std::pair<int, ExactMatrix>> first_failure;
};

/// Samples W on the Grassmannian of 2k-planes and tallies exactness of the
/// level-r complex at each sample. Deterministic for a fixed seed.
SampleReport generic_exactness_sample(const FormAlgebra& a, int k, int r, int samples,
                                      std::uint64_t seed);

/// True iff the k = 1 complex at <w> has, step by step, the same kernels and
/// images as the multiply-by-w complex H^0 -> H^1 -> ... read straight off the
/// algebra (the two differ by the nonzero scalars r - i).
bool derivative_complex_check(const FormAlgebra& a, const Vec& w, int r);

}  // namespace gbgg
