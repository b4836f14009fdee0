#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gbgg/scalar.hpp"

namespace gbgg {

using Vec = std::vector<Scalar>;

/// Dense matrix over a fixed field, with exact elimination routines. All entries
/// stay in the field passed at construction; mixing fields throws.
class ExactMatrix {
public:
    ExactMatrix(int rows, int cols, const Field& field);

    static ExactMatrix identity(int n, const Field& field);
    /// Matrix whose columns are the given vectors (all of equal length).
    static ExactMatrix from_columns(const std::vector<Vec>& columns, const Field& field);
    static ExactMatrix from_rows(const std::vector<Vec>& rows, const Field& field);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return field_; }

    const Scalar& at(int i, int j) const;
    void set(int i, int j, const Scalar& value);

    Vec row(int i) const;
    Vec col(int j) const;

    ExactMatrix operator*(const ExactMatrix& other) const;
    ExactMatrix operator+(const ExactMatrix& other) const;
    ExactMatrix operator-(const ExactMatrix& other) const;
    bool operator==(const ExactMatrix& other) const;

    Vec apply(const Vec& vector) const;
    ExactMatrix transpose() const;
    ExactMatrix scaled(const Scalar& factor) const;

    /// Rows of this matrix followed by rows of other (same column count).
    ExactMatrix vstack(const ExactMatrix& other) const;
    /// Columns of this matrix followed by columns of other (same row count).
    ExactMatrix hstack(const ExactMatrix& other) const;
    ExactMatrix submatrix(const std::vector<int>& row_ids, const std::vector<int>& col_ids) const;

    bool is_zero() const;

    /// In-place reduction to reduced row echelon form. Pivoting is deterministic:
    /// the first nonzero entry in column order. Returns the pivot column list.
    std::vector<int> rref();

    int rank() const;
    /// Canonical kernel basis, one vector per free column of the reduced form,
    /// returned as the columns of the result.
    ExactMatrix kernel() const;
    Scalar determinant() const;

    /// Entry-wise reduction mod p; throws ScalarMismatchError on a bad denominator.
    ExactMatrix to_prime_field(long p) const;

    std::string str() const;

private:
    int rows_, cols_;
    Field field_;
    std::vector<Scalar> data_;  // row-major

    Scalar& entry(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const Scalar& entry(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }
    void check_bounds(int i, int j) const;
};

/// Deterministic stream splitter: derives an independent seed from (seed, index).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

/// A uniformly seeded k x q matrix of full rank k: integers in [-10^6, 10^6] over
/// the rationals (wide enough that thin special loci are missed), or arbitrary
/// residues over a prime field. Resamples until the rank is k (caps at 64
/// attempts, then throws InternalError).
ExactMatrix random_subspace(int q, int k, std::uint64_t seed, const Field& field);

/// Portable bounded draw from an mt19937_64 stream (rejection sampling, so the
/// result does not depend on library-specific distribution internals).
class DeterministicRng {
public:
    explicit DeterministicRng(std::uint64_t seed);
    /// Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound);
    /// Uniform integer in [lo, hi] inclusive.
    long range(long lo, long hi);

private:
    std::mt19937_64 gen_;  // raw word stream is fully pinned by the standard
};

}  // namespace gbgg
