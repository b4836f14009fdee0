#include "gbgg/matrix.hpp"

#include <limits>
#include <sstream>

#include "gbgg/errors.hpp"

namespace gbgg {

ExactMatrix::ExactMatrix(int rows, int cols, const Field& field)
    : rows_(rows), cols_(cols), field_(field) {
    if (rows < 0 || cols < 0) throw DimensionError("matrix dimensions must be non-negative");
    data_.assign(static_cast<size_t>(rows) * cols, field.zero());
}

ExactMatrix ExactMatrix::identity(int n, const Field& field) {
    ExactMatrix m(n, n, field);
    for (int i = 0; i < n; ++i) m.entry(i, i) = field.one();
    return m;
}

ExactMatrix ExactMatrix::from_columns(const std::vector<Vec>& columns, const Field& field) {
    int cols = static_cast<int>(columns.size());
    int rows = cols == 0 ? 0 : static_cast<int>(columns[0].size());
    ExactMatrix m(rows, cols, field);
    for (int j = 0; j < cols; ++j) {
        if (static_cast<int>(columns[j].size()) != rows)
            throw DimensionError("from_columns: ragged column lengths");
        for (int i = 0; i < rows; ++i) m.set(i, j, columns[j][i]);
    }
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<Vec>& rows, const Field& field) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    ExactMatrix m(r, c, field);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw DimensionError("from_rows: ragged row lengths");
        for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

void ExactMatrix::check_bounds(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw DimensionError("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                             ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
}

const Scalar& ExactMatrix::at(int i, int j) const {
    check_bounds(i, j);
    return entry(i, j);
}

void ExactMatrix::set(int i, int j, const Scalar& value) {
    check_bounds(i, j);
    if (value.field() != field_)
        throw ScalarMismatchError("entry field " + value.field().name() + " differs from matrix field " +
                                  field_.name());
    entry(i, j) = value;
}

Vec ExactMatrix::row(int i) const {
    if (i < 0 || i >= rows_) throw DimensionError("row index out of range");
    Vec out(cols_, field_.zero());
    for (int j = 0; j < cols_; ++j) out[j] = entry(i, j);
    return out;
}

Vec ExactMatrix::col(int j) const {
    if (j < 0 || j >= cols_) throw DimensionError("column index out of range");
    Vec out(rows_, field_.zero());
    for (int i = 0; i < rows_; ++i) out[i] = entry(i, j);
    return out;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& other) const {
    if (cols_ != other.rows_)
        throw DimensionError("matmul shape mismatch: " + std::to_string(cols_) + " vs " +
                             std::to_string(other.rows_));
    if (field_ != other.field_) throw ScalarMismatchError("matmul field mismatch");
    ExactMatrix out(rows_, other.cols_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& a = entry(i, k);
            if (a.is_zero()) continue;  // the factors here are mostly sparse
            for (int j = 0; j < other.cols_; ++j) {
                const Scalar& b = other.entry(k, j);
                if (b.is_zero()) continue;
                out.entry(i, j) += a * b;
            }
        }
    return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("matrix sum shape mismatch");
    if (field_ != other.field_) throw ScalarMismatchError("matrix sum field mismatch");
    ExactMatrix out = *this;
    for (size_t t = 0; t < data_.size(); ++t) out.data_[t] += other.data_[t];
    return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("matrix diff shape mismatch");
    if (field_ != other.field_) throw ScalarMismatchError("matrix diff field mismatch");
    ExactMatrix out = *this;
    for (size_t t = 0; t < data_.size(); ++t) out.data_[t] -= other.data_[t];
    return out;
}

bool ExactMatrix::operator==(const ExactMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && field_ == other.field_ &&
           data_ == other.data_;
}

Vec ExactMatrix::apply(const Vec& vector) const {
    if (static_cast<int>(vector.size()) != cols_) throw DimensionError("apply: vector length mismatch");
    Vec out(rows_, field_.zero());
    for (int j = 0; j < cols_; ++j) {
        if (vector[j].is_zero()) continue;
        for (int i = 0; i < rows_; ++i) {
            if (entry(i, j).is_zero()) continue;
            out[i] += entry(i, j) * vector[j];
        }
    }
    return out;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix out(cols_, rows_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.entry(j, i) = entry(i, j);
    return out;
}

ExactMatrix ExactMatrix::scaled(const Scalar& factor) const {
    ExactMatrix out = *this;
    for (auto& v : out.data_) v *= factor;
    return out;
}

ExactMatrix ExactMatrix::vstack(const ExactMatrix& other) const {
    if (cols_ != other.cols_) throw DimensionError("vstack column mismatch");
    if (field_ != other.field_) throw ScalarMismatchError("vstack field mismatch");
    ExactMatrix out(rows_ + other.rows_, cols_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.entry(i, j) = entry(i, j);
    for (int i = 0; i < other.rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.entry(rows_ + i, j) = other.entry(i, j);
    return out;
}

ExactMatrix ExactMatrix::hstack(const ExactMatrix& other) const {
    if (rows_ != other.rows_) throw DimensionError("hstack row mismatch");
    if (field_ != other.field_) throw ScalarMismatchError("hstack field mismatch");
    ExactMatrix out(rows_, cols_ + other.cols_, field_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) out.entry(i, j) = entry(i, j);
        for (int j = 0; j < other.cols_; ++j) out.entry(i, cols_ + j) = other.entry(i, j);
    }
    return out;
}

ExactMatrix ExactMatrix::submatrix(const std::vector<int>& row_ids,
                                   const std::vector<int>& col_ids) const {
    ExactMatrix out(static_cast<int>(row_ids.size()), static_cast<int>(col_ids.size()), field_);
    for (size_t i = 0; i < row_ids.size(); ++i)
        for (size_t j = 0; j < col_ids.size(); ++j) {
            check_bounds(row_ids[i], col_ids[j]);
            out.entry(static_cast<int>(i), static_cast<int>(j)) = entry(row_ids[i], col_ids[j]);
        }
    return out;
}

bool ExactMatrix::is_zero() const {
    for (const auto& v : data_)
        if (!v.is_zero()) return false;
    return true;
}

std::vector<int> ExactMatrix::rref() {
    std::vector<int> pivots;
    int pivot_row = 0;
    for (int col = 0; col < cols_ && pivot_row < rows_; ++col) {
        int found = -1;
        for (int i = pivot_row; i < rows_; ++i) {
            if (!entry(i, col).is_zero()) {
                found = i;
                break;
            }
        }
        if (found < 0) continue;
        if (found != pivot_row)
            for (int j = 0; j < cols_; ++j) std::swap(entry(found, j), entry(pivot_row, j));
        Scalar inv = entry(pivot_row, col).inverse();
        for (int j = col; j < cols_; ++j) entry(pivot_row, j) *= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == pivot_row || entry(i, col).is_zero()) continue;
            Scalar factor = entry(i, col);
            for (int j = col; j < cols_; ++j) entry(i, j) -= factor * entry(pivot_row, j);
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    return pivots;
}

int ExactMatrix::rank() const {
    ExactMatrix copy = *this;
    return static_cast<int>(copy.rref().size());
}

ExactMatrix ExactMatrix::kernel() const {
    ExactMatrix reduced = *this;
    std::vector<int> pivots = reduced.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<int> free_cols;
    for (int j = 0; j < cols_; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    ExactMatrix out(cols_, static_cast<int>(free_cols.size()), field_);
    for (size_t t = 0; t < free_cols.size(); ++t) {
        int fc = free_cols[t];
        out.entry(fc, static_cast<int>(t)) = field_.one();
        for (size_t r = 0; r < pivots.size(); ++r)
            out.entry(pivots[r], static_cast<int>(t)) = -reduced.entry(static_cast<int>(r), fc);
    }
    return out;
}

Scalar ExactMatrix::determinant() const {
    if (rows_ != cols_) throw DimensionError("determinant of a non-square matrix");
    ExactMatrix work = *this;
    Scalar det = field_.one();
    for (int col = 0; col < cols_; ++col) {
        int found = -1;
        for (int i = col; i < rows_; ++i) {
            if (!work.entry(i, col).is_zero()) {
                found = i;
                break;
            }
        }
        if (found < 0) return field_.zero();
        if (found != col) {
            for (int j = 0; j < cols_; ++j) std::swap(work.entry(found, j), work.entry(col, j));
            det = -det;
        }
        det *= work.entry(col, col);
        Scalar inv = work.entry(col, col).inverse();
        for (int i = col + 1; i < rows_; ++i) {
            if (work.entry(i, col).is_zero()) continue;
            Scalar factor = work.entry(i, col) * inv;
            for (int j = col; j < cols_; ++j) work.entry(i, j) -= factor * work.entry(col, j);
        }
    }
    return det;
}

ExactMatrix ExactMatrix::to_prime_field(long p) const {
    ExactMatrix out(rows_, cols_, Field::prime(p));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.entry(i, j) = entry(i, j).to_prime_field(p);
    return out;
}

std::string ExactMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << "[";
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << entry(i, j).str();
        os << "]\n";
    }
    return os.str();
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 finalizer over the combined word; cheap and well scrambled.
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

DeterministicRng::DeterministicRng(std::uint64_t seed) : gen_(seed) {}

std::uint64_t DeterministicRng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("DeterministicRng::below(0)");
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t word;
    do {
        word = gen_();
    } while (word >= limit);
    return word % bound;
}

long DeterministicRng::range(long lo, long hi) {
    if (lo > hi) throw std::invalid_argument("DeterministicRng::range: empty interval");
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

ExactMatrix random_subspace(int q, int k, std::uint64_t seed, const Field& field) {
    if (k < 0 || q < 0 || k > q)
        throw DimensionError("random_subspace: need 0 <= k <= q, got k=" + std::to_string(k) +
                             " q=" + std::to_string(q));
    DeterministicRng rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        ExactMatrix m(k, q, field);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < q; ++j) {
                // Wide integer range so that samples miss thin special loci
                // (inexactness loci are low-degree hypersurfaces; the miss
                // probability scales with the reciprocal of the range).
                if (field.kind() == ScalarKind::Rational)
                    m.set(i, j, Scalar::rational(rng.range(-1000000, 1000000)));
                else
                    m.set(i, j, Scalar::prime_field(
                                    static_cast<long>(rng.below(
                                        static_cast<std::uint64_t>(field.characteristic()))),
                                    field.characteristic()));
            }
        if (m.rank() == k) return m;
    }
    throw InternalError("random_subspace: no full-rank sample after 64 attempts");
}

}  // namespace gbgg
