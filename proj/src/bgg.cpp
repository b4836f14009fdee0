#include "gbgg/bgg.hpp"

namespace gbgg {

namespace {

void check_point(const FormAlgebra& a, const ExactMatrix& W, int r) {
    a.ensure_valid();
    if (W.cols() != a.q())
        throw DimensionError("W has " + std::to_string(W.cols()) + " columns, expected q = " +
                             std::to_string(a.q()));
    if (W.rows() < 1 || W.rows() > W.cols()) throw DimensionError("W must be a k x q basis with 1 <= k <= q");
    if (W.field() != a.field()) throw ScalarMismatchError("W and algebra fields differ");
    if (W.rank() != W.rows()) throw DimensionError("W is rank deficient");
    if (r < 1) throw DimensionError("r must be at least 1");
}

}  // namespace

ExactMatrix build_mu(const FormAlgebra& a, const ExactMatrix& W, int r, int i) {
    check_point(a, W, r);
    int n = std::min(r, a.available_degree());
    if (i < 0 || i >= n)
        throw DimensionError("mu index " + std::to_string(i) + " outside 0.." + std::to_string(n - 1));
    int k = W.rows();
    const std::vector<int>& h = a.h();
    const MultisetBasis& words_src = cached_multiset_basis(k, r - i);
    const MultisetBasis& words_dst = cached_multiset_basis(k, r - i - 1);
    // Multiplication by each spanning vector of W, computed once per call.
    std::vector<ExactMatrix> row_mult;
    row_mult.reserve(k);
    for (int t = 0; t < k; ++t) row_mult.push_back(a.mult_by(i, W.row(t)));
    ExactMatrix m(words_dst.size() * h[i + 1], words_src.size() * h[i], a.field());
    for (int word_pos = 0; word_pos < words_src.size(); ++word_pos) {
        const IndexTuple& word = words_src.tuple(word_pos);
        for (int ell = 0; ell < static_cast<int>(word.size()); ++ell) {
            int dst_word = words_dst.position(tuple_erase(word, ell));
            const ExactMatrix& factor = row_mult[word[ell]];
            for (int alpha = 0; alpha < h[i]; ++alpha) {
                int col = word_pos * h[i] + alpha;
                for (int row = 0; row < h[i + 1]; ++row) {
                    const Scalar& value = factor.at(row, alpha);
                    if (value.is_zero()) continue;
                    int dst = dst_word * h[i + 1] + row;
                    m.set(dst, col, m.at(dst, col) + value);
                }
            }
        }
    }
    return m;
}

ComplexInstance build_complex(const FormAlgebra& a, const ExactMatrix& W, int r) {
    check_point(a, W, r);
    ComplexInstance c(W);
    c.r = r;
    c.n = std::min(r, a.available_degree());
    c.truncated = c.n < std::min(r, a.d());
    for (int i = 0; i < c.n; ++i) {
        c.mu.push_back(build_mu(a, W, r, i));
        c.source_dims.push_back(c.mu.back().cols());
        c.target_dims.push_back(c.mu.back().rows());
    }
    for (int i = 0; i + 1 < c.n; ++i) {
        if (!(c.mu[i + 1] * c.mu[i]).is_zero())
            throw InternalError("mu_" + std::to_string(i + 1) + " * mu_" + std::to_string(i) +
                                " is nonzero on a validated algebra (r = " + std::to_string(r) +
                                ", k = " + std::to_string(W.rows()) + ")");
    }
    return c;
}

ExactnessReport exactness_at(const ComplexInstance& c) {
    ExactnessReport report;
    report.ranks.reserve(c.mu.size());
    for (const ExactMatrix& m : c.mu) report.ranks.push_back(m.rank());
    if (c.mu.empty()) return report;
    report.injective_at_0 = report.ranks[0] == c.source_dims[0];
    for (int i = 1; i < c.n; ++i)
        report.exact_middle.push_back(report.ranks[i] + report.ranks[i - 1] == c.source_dims[i]);
    report.coker_dim = c.target_dims[c.n - 1] - report.ranks[c.n - 1];
    return report;
}

SampleReport generic_exactness_sample(const FormAlgebra& a, int k, int r, int samples,
                                      std::uint64_t seed) {
    a.ensure_valid();
    if (k < 1 || 2 * k > a.q())
        throw DimensionError("sampling G_{2k} needs 1 <= 2k <= q, got k = " + std::to_string(k));
    if (samples < 1) throw DimensionError("need at least one sample");
    SampleReport report;
    report.n_total = samples;
    for (int s = 0; s < samples; ++s) {
        ExactMatrix W = random_subspace(a.q(), 2 * k, mix_seed(seed, static_cast<std::uint64_t>(s)),
                                        a.field());
        ExactnessReport e = exactness_at(build_complex(a, W, r));
        if (e.all_exact())
            ++report.n_exact;
        else if (!report.first_failure)
            report.first_failure = std::make_pair(s, W);
    }
    return report;
}

bool derivative_complex_check(const FormAlgebra& a, const Vec& w, int r) {
    a.ensure_valid();
    bool nonzero = false;
    for (const Scalar& c : w)
        if (!c.is_zero()) nonzero = true;
    if (!nonzero) throw DimensionError("derivative complex needs a nonzero vector");
    ExactMatrix W = ExactMatrix::from_rows({w}, a.field());
    ComplexInstance c = build_complex(a, W, r);
    // Over a 1-dimensional W every symmetric power is a line, so term i of the
    // complex is H^i on the nose and mu_i should match multiplication by w up to
    // the scalar r - i.
    auto same_colspace = [](const ExactMatrix& x, const ExactMatrix& y) {
        int rx = x.rank(), ry = y.rank();
        return rx == ry && x.hstack(y).rank() == rx;
    };
    for (int i = 0; i < c.n; ++i) {
        ExactMatrix direct = a.mult_by(i, w);
        if (c.mu[i].rows() != direct.rows() || c.mu[i].cols() != direct.cols())
            throw InternalError("derivative complex shape mismatch at step " + std::to_string(i));
        if (!same_colspace(c.mu[i], direct)) return false;
        if (!same_colspace(c.mu[i].kernel(), direct.kernel())) return false;
    }
    return true;
}

}  // namespace gbgg
