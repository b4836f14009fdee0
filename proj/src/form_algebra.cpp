#include "gbgg/form_algebra.hpp"

#include <sstream>

namespace gbgg {

namespace {

// Matrix of wedging by e_j, as a map from degree-i to degree-(i+1) exterior power.
ExactMatrix wedge_matrix(int q, int i, int j, const Field& field) {
    const SubsetBasis& src = cached_subset_basis(q, i);
    const SubsetBasis& dst = cached_subset_basis(q, i + 1);
    ExactMatrix m(dst.size(), src.size(), field);
    for (int col = 0; col < src.size(); ++col) {
        SignedMerge merged = wedge_insert(j, src.tuple(col));
        if (merged.sign == 0) continue;
        m.set(dst.position(merged.merged), col,
              merged.sign == 1 ? field.one() : -field.one());
    }
    return m;
}

// Quotient of F^N by the row space of S: projection (h x N), lift (N x h) picking
// the free-column representatives, where h = N - rank(S).
struct QuotientMaps {
    int rank;
    ExactMatrix proj;
    ExactMatrix lift;
};

QuotientMaps quotient_by_rowspace(const ExactMatrix& span_rows) {
    const Field& field = span_rows.field();
    int n_cols = span_rows.cols();
    ExactMatrix reduced = span_rows;
    std::vector<int> pivots = reduced.rref();
    std::vector<bool> is_pivot(n_cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < n_cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    int h = static_cast<int>(free_cols.size());
    QuotientMaps maps{static_cast<int>(pivots.size()), ExactMatrix(h, n_cols, field),
                      ExactMatrix(n_cols, h, field)};
    for (int s = 0; s < h; ++s) {
        maps.proj.set(s, free_cols[s], field.one());
        maps.lift.set(free_cols[s], s, field.one());
        for (size_t t = 0; t < pivots.size(); ++t)
            maps.proj.set(s, pivots[t], -reduced.at(static_cast<int>(t), free_cols[s]));
    }
    return maps;
}

}  // namespace

FormAlgebra::FormAlgebra(int d, std::vector<int> h, std::vector<std::vector<ExactMatrix>> mult)
    : d_(d), h_(std::move(h)), field_(Field::rationals()), mult_(std::move(mult)) {
    if (h_.size() < 2) throw DimensionError("dimension list must cover degrees 0 and 1");
    if (h_[0] != 1) throw DimensionError("h[0] must be 1");
    for (int dim : h_)
        if (dim < 0) throw DimensionError("negative graded dimension");
    int navail = available_degree();
    if (d_ < navail)
        throw DimensionError("declared dimension d = " + std::to_string(d_) +
                             " smaller than the stored degree range " + std::to_string(navail));
    if (q() < 1) throw DimensionError("irregularity q = h[1] must be at least 1");
    if (static_cast<int>(mult_.size()) != std::max(0, navail - 1))
        throw DimensionError("expected " + std::to_string(std::max(0, navail - 1)) +
                             " multiplication blocks, got " + std::to_string(mult_.size()));
    for (int i = 1; i < navail; ++i) {
        const auto& block = mult_[i - 1];
        if (static_cast<int>(block.size()) != q())
            throw DimensionError("multiplication block " + std::to_string(i) + " must have q = " +
                                 std::to_string(q()) + " matrices");
        for (const ExactMatrix& m : block) {
            if (m.rows() != h_[i + 1] || m.cols() != h_[i])
                throw DimensionError("structure matrix for degree " + std::to_string(i) +
                                     " has shape " + std::to_string(m.rows()) + "x" +
                                     std::to_string(m.cols()) + ", expected " +
                                     std::to_string(h_[i + 1]) + "x" + std::to_string(h_[i]));
            if (m.field() != field_)
                throw ScalarMismatchError("structure matrices must be rational");
        }
    }
    report_ = run_validation();
}

const ExactMatrix& FormAlgebra::structure_matrix(int i, int j) const {
    if (i < 1 || i >= available_degree())
        throw DimensionError("no structure matrix for degree " + std::to_string(i));
    if (j < 0 || j >= q()) throw DimensionError("basis vector index out of range");
    return mult_[i - 1][j];
}

ExactMatrix FormAlgebra::mult_by(int i, const Vec& v) const {
    if (static_cast<int>(v.size()) != q())
        throw DimensionError("vector length " + std::to_string(v.size()) + " does not match q");
    if (i == 0) {
        ExactMatrix m(q(), 1, field_);
        for (int t = 0; t < q(); ++t) m.set(t, 0, v[t]);
        return m;
    }
    if (i < 1 || i >= available_degree())
        throw DimensionError("multiplication degree " + std::to_string(i) + " unavailable");
    ExactMatrix out(h_[i + 1], h_[i], field_);
    for (int j = 0; j < q(); ++j) {
        if (v[j].is_zero()) continue;
        out = out + structure_matrix(i, j).scaled(v[j]);
    }
    return out;
}

ValidationReport FormAlgebra::run_validation() const {
    int navail = available_degree();
    for (int i = 0; i + 2 <= navail; ++i) {
        for (int j = 0; j < q(); ++j) {
            for (int l = j; l < q(); ++l) {
                // Composite of multiplication by e_l on H^i then e_j on H^(i+1);
                // at i = 0 the inner map is the canonical H^0 -> H^1.
                ExactMatrix lhs = i == 0 ? ExactMatrix::from_columns({structure_matrix(1, j).col(l)}, field_)
                                         : structure_matrix(i + 1, j) * structure_matrix(i, l);
                ExactMatrix rhs = i == 0 ? ExactMatrix::from_columns({structure_matrix(1, l).col(j)}, field_)
                                         : structure_matrix(i + 1, l) * structure_matrix(i, j);
                ExactMatrix sum = lhs + rhs;
                // j = l covers the diagonal constraint v*(v*alpha) = 0, which in
                // characteristic zero follows from anticommutativity but is checked
                // outright so the report never depends on 2 being invertible.
                if (j == l) sum = lhs;
                if (sum.is_zero()) continue;
                for (int a = 0; a < sum.cols(); ++a) {
                    bool hit = false;
                    for (int row = 0; row < sum.rows(); ++row)
                        if (!sum.at(row, a).is_zero()) hit = true;
                    if (!hit) continue;
                    std::ostringstream os;
                    if (j == l)
                        os << "square constraint violated: e" << j << " * (e" << j << " * b" << a
                           << ") nonzero on H^" << i;
                    else
                        os << "anticommutativity violated: e" << j << " * (e" << l << " * b" << a
                           << ") != -e" << l << " * (e" << j << " * b" << a << ") on H^" << i;
                    return {false, os.str()};
                }
            }
        }
    }
    return {true, ""};
}

void FormAlgebra::ensure_valid() const {
    if (!report_.valid) throw std::invalid_argument("invalid form algebra: " + report_.message);
}

bool FormAlgebra::operator==(const FormAlgebra& other) const {
    if (d_ != other.d_ || h_ != other.h_ || mult_.size() != other.mult_.size()) return false;
    for (size_t i = 0; i < mult_.size(); ++i) {
        if (mult_[i].size() != other.mult_[i].size()) return false;
        for (size_t j = 0; j < mult_[i].size(); ++j)
            if (!(mult_[i][j] == other.mult_[i][j])) return false;
    }
    return true;
}

FormAlgebra FormAlgebra::fixture_abelian(int q) {
    if (q < 1) throw DimensionError("fixture_abelian needs q >= 1");
    Field field = Field::rationals();
    std::vector<int> h(q + 1);
    for (int i = 0; i <= q; ++i) h[i] = static_cast<int>(binomial(q, i));
    std::vector<std::vector<ExactMatrix>> mult;
    for (int i = 1; i < q; ++i) {
        std::vector<ExactMatrix> block;
        block.reserve(q);
        for (int j = 0; j < q; ++j) block.push_back(wedge_matrix(q, i, j, field));
        mult.push_back(std::move(block));
    }
    return FormAlgebra(q, std::move(h), std::move(mult));
}

FormAlgebra FormAlgebra::fixture_product_of_curves(int g1, int g2) {
    if (g1 < 1 || g2 < 1) throw DimensionError("fixture_product_of_curves needs g1, g2 >= 1");
    Field field = Field::rationals();
    int q = g1 + g2;
    std::vector<int> h = {1, q, g1 * g2};
    std::vector<ExactMatrix> block;
    block.reserve(q);
    for (int j = 0; j < q; ++j) {
        // H^2 basis: (s, t) -> s*g2 + t with s indexing V1 = <e_0..e_{g1-1}> and
        // t indexing V2 = <e_{g1}..e_{q-1}>. Multiplication keeps only the mixed part.
        ExactMatrix m(g1 * g2, q, field);
        for (int l = 0; l < q; ++l) {
            if (j < g1 && l >= g1)
                m.set(j * g2 + (l - g1), l, field.one());
            else if (j >= g1 && l < g1)
                m.set(l * g2 + (j - g1), l, -field.one());
        }
        block.push_back(std::move(m));
    }
    std::vector<std::vector<ExactMatrix>> mult;
    mult.push_back(std::move(block));
    return FormAlgebra(2, std::move(h), std::move(mult));
}

FormAlgebra FormAlgebra::fixture_quotient(int q, int d,
                                          const std::vector<ExteriorElement>& kernel_basis,
                                          int depth) {
    if (q < 1) throw DimensionError("fixture_quotient needs q >= 1");
    if (d < 2) throw DimensionError("fixture_quotient needs d >= 2");
    if (depth != 2 && depth != 3) throw DimensionError("fixture_quotient depth must be 2 or 3");
    if (depth == 3 && d < 3) throw DimensionError("depth 3 needs d >= 3");
    Field field = Field::rationals();
    int lambda2 = static_cast<int>(binomial(q, 2));
    std::vector<Vec> kernel_rows;
    for (const ExteriorElement& v : kernel_basis) {
        if (v.ambient_dim() != q || v.degree() != 2)
            throw DimensionError("kernel basis entries must be bivectors in ambient dimension " +
                                 std::to_string(q));
        if (v.field() != field) throw ScalarMismatchError("kernel basis must be rational");
        kernel_rows.push_back(v.coordinates());
    }
    ExactMatrix span2 = ExactMatrix::from_rows(kernel_rows, field);
    if (kernel_rows.empty()) span2 = ExactMatrix(0, lambda2, field);
    QuotientMaps q2 = quotient_by_rowspace(span2);
    if (q2.rank != static_cast<int>(kernel_basis.size()))
        throw DimensionError("dependent kernel basis");

    std::vector<int> h = {1, q, lambda2 - q2.rank};
    std::vector<ExactMatrix> block1;
    block1.reserve(q);
    for (int j = 0; j < q; ++j) block1.push_back(q2.proj * wedge_matrix(q, 1, j, field));
    std::vector<std::vector<ExactMatrix>> mult;
    mult.push_back(std::move(block1));

    if (depth == 3) {
        int lambda3 = static_cast<int>(binomial(q, 3));
        std::vector<Vec> ideal_rows;
        for (int j = 0; j < q; ++j) {
            ExteriorElement ej = ExteriorElement::basis(q, {j}, field);
            for (const ExteriorElement& v : kernel_basis)
                ideal_rows.push_back(wedge(ej, v).coordinates());
        }
        ExactMatrix span3 = ideal_rows.empty() ? ExactMatrix(0, lambda3, field)
                                               : ExactMatrix::from_rows(ideal_rows, field);
        QuotientMaps q3 = quotient_by_rowspace(span3);
        h.push_back(lambda3 - q3.rank);
        std::vector<ExactMatrix> block2;
        block2.reserve(q);
        for (int j = 0; j < q; ++j)
            block2.push_back(q3.proj * wedge_matrix(q, 2, j, field) * q2.lift);
        mult.push_back(std::move(block2));
    }
    return FormAlgebra(d, std::move(h), std::move(mult));
}

PsiMap psi(const FormAlgebra& a, int n) {
    if (n < 1 || n > a.available_degree())
        throw std::invalid_argument("psi degree " + std::to_string(n) + " unavailable (have 1.." +
                                    std::to_string(a.available_degree()) + ")");
    a.ensure_valid();
    int q = a.q();
    const SubsetBasis& basis = cached_subset_basis(q, n);
    ExactMatrix m(a.h()[n], basis.size(), a.field());
    for (int col = 0; col < basis.size(); ++col) {
        const IndexTuple& tuple = basis.tuple(col);
        Vec alpha(q, a.field().zero());
        alpha[tuple[n - 1]] = a.field().one();
        for (int s = n - 2; s >= 0; --s) {
            int degree = n - 1 - s;  // alpha currently lives in H^degree
            alpha = a.structure_matrix(degree, tuple[s]).apply(alpha);
        }
        for (int row = 0; row < m.rows(); ++row) m.set(row, col, alpha[row]);
    }
    return PsiMap{n, std::move(m)};
}

}  // namespace gbgg
