#include "gbgg/bivector.hpp"

namespace gbgg {

Bivector::Bivector(const ExteriorElement& element)
    : q_(element.ambient_dim()), matrix_(element.ambient_dim(), element.ambient_dim(), element.field()) {
    if (element.degree() != 2)
        throw DimensionError("bivector needs a degree-2 element, got degree " +
                             std::to_string(element.degree()));
    const SubsetBasis& basis = cached_subset_basis(q_, 2);
    for (int t = 0; t < basis.size(); ++t) {
        const Scalar& c = element.coordinates()[t];
        if (c.is_zero()) continue;
        const IndexTuple& pair = basis.tuple(t);
        matrix_.set(pair[0], pair[1], c);
        matrix_.set(pair[1], pair[0], -c);
    }
}

Bivector::Bivector(int ambient_dim, ExactMatrix skew) : q_(ambient_dim), matrix_(std::move(skew)) {
    if (matrix_.rows() != q_ || matrix_.cols() != q_)
        throw DimensionError("skew matrix must be q x q");
    for (int i = 0; i < q_; ++i) {
        if (!matrix_.at(i, i).is_zero()) throw DimensionError("skew matrix has a nonzero diagonal");
        for (int j = i + 1; j < q_; ++j)
            if (matrix_.at(j, i) != -matrix_.at(i, j))
                throw DimensionError("matrix is not skew-symmetric at (" + std::to_string(i) + "," +
                                     std::to_string(j) + ")");
    }
}

Bivector Bivector::zero(int ambient_dim, const Field& field) {
    return Bivector(ambient_dim, ExactMatrix(ambient_dim, ambient_dim, field));
}

ExteriorElement Bivector::element() const {
    const SubsetBasis& basis = cached_subset_basis(q_, 2);
    Vec coords(static_cast<size_t>(basis.size()), field().zero());
    for (int t = 0; t < basis.size(); ++t) {
        const IndexTuple& pair = basis.tuple(t);
        coords[t] = matrix_.at(pair[0], pair[1]);
    }
    return ExteriorElement::from_coordinates(q_, 2, coords, field());
}

Bivector Bivector::operator+(const Bivector& other) const {
    if (q_ != other.q_) throw DimensionError("bivector ambient dimensions differ");
    return Bivector(q_, matrix_ + other.matrix_);
}

Bivector Bivector::scaled(const Scalar& factor) const {
    return Bivector(q_, matrix_.scaled(factor));
}

bool Bivector::operator==(const Bivector& other) const {
    return q_ == other.q_ && matrix_ == other.matrix_;
}

int bivector_rank(const Bivector& v) {
    int rank = v.matrix().rank();
    if (rank % 2 != 0) throw InternalError("skew matrix produced an odd rank");
    return rank;
}

namespace {

Scalar pfaffian_on(const ExactMatrix& m, std::vector<int> active) {
    if (active.empty()) return m.field().one();
    Scalar acc = m.field().zero();
    int first = active.front();
    for (size_t t = 1; t < active.size(); ++t) {
        const Scalar& value = m.at(first, active[t]);
        if (value.is_zero()) continue;
        std::vector<int> rest;
        rest.reserve(active.size() - 2);
        for (size_t s = 1; s < active.size(); ++s)
            if (s != t) rest.push_back(active[s]);
        Scalar term = value * pfaffian_on(m, std::move(rest));
        if (t % 2 == 0) term = -term;
        acc += term;
    }
    return acc;
}

}  // namespace

Scalar pfaffian(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("pfaffian needs a square matrix");
    if (m.rows() % 2 != 0) throw DimensionError("pfaffian needs even dimension");
    for (int i = 0; i < m.rows(); ++i) {
        if (!m.at(i, i).is_zero()) throw DimensionError("pfaffian needs a zero diagonal");
        for (int j = i + 1; j < m.cols(); ++j)
            if (m.at(j, i) != -m.at(i, j)) throw DimensionError("pfaffian needs a skew matrix");
    }
    std::vector<int> active(m.rows());
    for (int i = 0; i < m.rows(); ++i) active[i] = i;
    return pfaffian_on(m, std::move(active));
}

std::vector<Vec> skew_normal_form(const Bivector& v) {
    const Field& field = v.field();
    int q = v.ambient_dim();
    ExactMatrix work = v.matrix();
    std::vector<Vec> vectors;
    while (true) {
        int pi = -1, pj = -1;
        for (int i = 0; i < q && pi < 0; ++i)
            for (int j = i + 1; j < q; ++j)
                if (!work.at(i, j).is_zero()) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        Scalar c = work.at(pi, pj);
        Vec x = work.row(pi), y = work.row(pj);
        // Peel off (x/c) ^ y; rows and columns pi, pj of the remainder vanish.
        Scalar c_inv = c.inverse();
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < q; ++j)
                work.set(i, j, work.at(i, j) - c_inv * (x[i] * y[j] - y[i] * x[j]));
        Vec x_scaled = x;
        for (Scalar& s : x_scaled) s *= c_inv;
        vectors.push_back(std::move(x_scaled));
        vectors.push_back(std::move(y));
    }
    // The contract promises an exact recomposition and independent vectors; a
    // failure here is a bug in the elimination above.
    Bivector recomposed = Bivector::zero(q, field);
    for (size_t t = 0; t + 1 < vectors.size(); t += 2) {
        ExteriorElement pair = wedge(ExteriorElement::from_vector(q, vectors[t], field),
                                     ExteriorElement::from_vector(q, vectors[t + 1], field));
        recomposed = recomposed + Bivector(pair);
    }
    if (!(recomposed == v)) throw InternalError("skew normal form does not recompose its input");
    if (!vectors.empty()) {
        ExactMatrix stacked = ExactMatrix::from_rows(vectors, field);
        if (stacked.rank() != static_cast<int>(vectors.size()))
            throw InternalError("skew normal form produced dependent vectors");
    }
    return vectors;
}

bool secant_membership(const Bivector& v, int k) {
    if (k < 0) throw DimensionError("secant level must be non-negative");
    int q = v.ambient_dim();
    bool by_rank = bivector_rank(v) <= 2 * k;
    if (q <= 8) {
        // Rank <= 2k for a skew matrix is the vanishing of every principal
        // Pfaffian of size 2k+2; vacuously true when 2k+2 exceeds q.
        bool by_pfaffians = true;
        if (2 * k + 2 <= q) {
            for (const IndexTuple& subset : subsets_lex(q, 2 * k + 2)) {
                std::vector<int> ids(subset.begin(), subset.end());
                if (!pfaffian(v.matrix().submatrix(ids, ids)).is_zero()) {
                    by_pfaffians = false;
                    break;
                }
            }
        }
        if (by_rank != by_pfaffians)
            throw InternalError("secant membership routes disagree at k = " + std::to_string(k));
    }
    return by_rank;
}

bool decomposable(const ExteriorElement& w) {
    if (w.is_zero()) return false;
    int n = w.degree();
    if (n <= 1) return true;
    int q = w.ambient_dim();
    // Support of w: span of all (n-1)-fold contractions. It is the smallest
    // subspace U with w in L^n U, so its dimension is n exactly when w splits.
    std::vector<Vec> rows;
    for (const IndexTuple& subset : subsets_lex(q, n - 1)) {
        ExteriorElement c = w;
        for (int idx : subset) c = contract(idx, c);
        rows.push_back(c.coordinates());
    }
    return ExactMatrix::from_rows(rows, w.field()).rank() == n;
}

ExteriorElement pencil_witness(const Bivector& v, const FormAlgebra& a) {
    if (v.ambient_dim() != a.q())
        throw DimensionError("bivector ambient dimension does not match the algebra");
    if (v.field() != a.field()) throw ScalarMismatchError("bivector field does not match the algebra");
    if (v.is_zero()) throw std::invalid_argument("pencil witness needs a nonzero bivector");
    PsiMap psi2 = psi(a, 2);
    Vec image = psi2.matrix.apply(v.element().coordinates());
    for (const Scalar& c : image)
        if (!c.is_zero()) throw std::invalid_argument("bivector is not in the kernel of psi_2");
    int k = bivector_rank(v) / 2;
    if (k >= a.d())
        throw std::invalid_argument("rank " + std::to_string(2 * k) +
                                    " bivector needs k < d = " + std::to_string(a.d()));
    if (k + 1 > a.available_degree())
        throw std::invalid_argument("psi_" + std::to_string(k + 1) +
                                    " unavailable on this algebra (stored degrees stop at " +
                                    std::to_string(a.available_degree()) + ")");
    std::vector<Vec> nf = skew_normal_form(v);
    // Paper indexing v_1..v_2k: take the odd-indexed vectors and close with v_2k.
    // In the 0-based list that is positions 0, 2, ..., 2k-2 and finally 2k-1.
    ExteriorElement witness = ExteriorElement::from_vector(a.q(), nf[0], a.field());
    for (int t = 2; t <= 2 * k - 2; t += 2)
        witness = wedge(witness, ExteriorElement::from_vector(a.q(), nf[t], a.field()));
    witness = wedge(witness, ExteriorElement::from_vector(a.q(), nf[2 * k - 1], a.field()));
    if (!decomposable(witness))
        throw VerificationError("pencil witness is not decomposable");
    Vec high = psi(a, k + 1).matrix.apply(witness.coordinates());
    for (const Scalar& c : high)
        if (!c.is_zero())
            throw VerificationError("psi_" + std::to_string(k + 1) +
                                    " does not vanish on the pencil witness");
    return witness;
}

std::vector<Bivector> kernel_bivectors(const FormAlgebra& a) {
    ExactMatrix kernel = psi(a, 2).matrix.kernel();
    std::vector<Bivector> out;
    out.reserve(kernel.cols());
    for (int j = 0; j < kernel.cols(); ++j)
        out.emplace_back(ExteriorElement::from_coordinates(a.q(), 2, kernel.col(j), a.field()));
    return out;
}

}  // namespace gbgg
