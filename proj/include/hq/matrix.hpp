#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hq/scalar.hpp"

namespace hq {

using Vec = std::vector<Scalar>;

class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    Matrix(size_t rows, size_t cols, std::vector<Scalar> entries);
    static Matrix identity(size_t n);
    static Matrix from_rows(const std::vector<Vec>& rows);
    static Matrix from_columns(size_t rows, const std::vector<Vec>& cols);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Scalar& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Scalar& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    const std::vector<Scalar>& entries() const { return a_; }

    Vec row(size_t i) const;
    Vec col(size_t j) const;
    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    Vec operator*(const Vec& v) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero() const;
    bool is_identity() const;
    Matrix pow(unsigned e) const;

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

struct RrefResult {
    Matrix form;
    size_t rank = 0;
    std::vector<size_t> pivots;
};

// Reduced row-echelon form; the pivot in each column is the first nonzero
// entry at or below the current row.
RrefResult rref(const Matrix& m);
size_t rank(const Matrix& m);
std::vector<Vec> kernel(const Matrix& m);
// One solution of m*x = b, or nullopt when b is outside the column space.
std::optional<Vec> solve(const Matrix& m, const Vec& b);
std::optional<Matrix> inverse(const Matrix& m);

bool is_zero(const Vec& v);

// Sparse vector with strictly increasing indices and nonzero entries.
using SparseVec = std::vector<std::pair<uint32_t, Scalar>>;

SparseVec sparse_axpy(const SparseVec& x, const Scalar& a, const SparseVec& y);  // x + a*y

// Incremental echelon basis of a subspace, used for ranks of large sparse
// systems. Each stored row is normalized so that its pivot entry is 1 and
// its pivot is its smallest index.
class RowReducer {
public:
    // Reduces v against the basis; returns the remainder (zero on pivot columns).
    SparseVec reduce(SparseVec v) const;
    // Inserts v; returns true when the rank grew.
    bool insert(SparseVec v);
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    size_t rank() const { return rows_.size(); }
    const std::vector<SparseVec>& rows() const { return rows_; }

private:
    std::vector<SparseVec> rows_;
    std::vector<int64_t> pivot_row_;  // pivot column -> row index, -1 when free
};

}  // namespace hq
