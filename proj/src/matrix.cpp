#include "hq/matrix.hpp"

namespace hq {

Matrix::Matrix(size_t rows, size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows * cols) throw Error("DimensionMismatch", "entry count != rows*cols");
}

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
    size_t c = rows.empty() ? 0 : rows[0].size();
    Matrix m(rows.size(), c);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw Error("DimensionMismatch", "ragged rows");
        for (size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_columns(size_t rows, const std::vector<Vec>& cols) {
    Matrix m(rows, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw Error("DimensionMismatch", "ragged columns");
        for (size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Vec Matrix::row(size_t i) const { return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }

Vec Matrix::col(size_t j) const {
    Vec v(rows_);
    for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw Error("DimensionMismatch", "matrix product");
    Matrix r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o(k, j);
                if (!b.is_zero()) r(i, j) += a * b;
            }
        }
    return r;
}

Vec Matrix::operator*(const Vec& v) const {
    if (cols_ != v.size()) throw Error("DimensionMismatch", "matrix-vector product");
    Vec r(rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!v[j].is_zero() && !(*this)(i, j).is_zero()) r[i] += (*this)(i, j) * v[j];
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("DimensionMismatch", "matrix sum");
    Matrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("DimensionMismatch", "matrix difference");
    Matrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const { return rows_ == cols_ && *this == identity(rows_); }

Matrix Matrix::pow(unsigned e) const {
    Matrix acc = identity(rows_), base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

RrefResult rref(const Matrix& m) {
    RrefResult res{m, 0, {}};
    Matrix& a = res.form;
    size_t r = 0;
    for (size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        size_t p = r;
        while (p < a.rows() && a(p, c).is_zero()) ++p;
        if (p == a.rows()) continue;
        if (p != r)
            for (size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
        Scalar inv = a(r, c).inv();
        for (size_t j = c; j < a.cols(); ++j)
            if (!a(r, j).is_zero()) a(r, j) *= inv;
        for (size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            Scalar f = a(i, c);
            for (size_t j = c; j < a.cols(); ++j)
                if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

size_t rank(const Matrix& m) {
    RowReducer red;
    for (size_t i = 0; i < m.rows(); ++i) {
        SparseVec v;
        for (size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) v.emplace_back(static_cast<uint32_t>(j), m(i, j));
        red.insert(std::move(v));
    }
    return red.rank();
}

std::vector<Vec> kernel(const Matrix& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : rr.pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols());
        v[f] = 1;
        for (size_t i = 0; i < rr.pivots.size(); ++i) v[rr.pivots[i]] = -rr.form(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (b.size() != m.rows()) throw Error("DimensionMismatch", "solve: rhs length");
    Matrix aug(m.rows(), m.cols() + 1);
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    RrefResult rr = rref(aug);
    if (!rr.pivots.empty() && rr.pivots.back() == m.cols()) return std::nullopt;
    Vec x(m.cols());
    for (size_t i = 0; i < rr.pivots.size(); ++i) x[rr.pivots[i]] = rr.form(i, m.cols());
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    RrefResult rr = rref(aug);
    if (rr.rank < n || rr.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv(i, j) = rr.form(i, n + j);
    return inv;
}

SparseVec sparse_axpy(const SparseVec& x, const Scalar& a, const SparseVec& y) {
    SparseVec out;
    out.reserve(x.size() + y.size());
    size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.push_back(x[i++]);
        } else if (i == x.size() || y[j].first < x[i].first) {
            out.emplace_back(y[j].first, a * y[j].second);
            ++j;
        } else {
            Scalar s = x[i].second + a * y[j].second;
            if (!s.is_zero()) out.emplace_back(x[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    return out;
}

SparseVec RowReducer::reduce(SparseVec v) const {
    size_t k = 0;
    while (k < v.size()) {
        uint32_t c = v[k].first;
        if (c < pivot_row_.size() && pivot_row_[c] >= 0) {
            const SparseVec& row = rows_[pivot_row_[c]];
            Scalar f = -v[k].second;
            // Entries before position k are untouched: the row starts at c.
            SparseVec head(v.begin(), v.begin() + k);
            SparseVec tail(v.begin() + k, v.end());
            tail = sparse_axpy(tail, f, row);
            head.insert(head.end(), tail.begin(), tail.end());
            v = std::move(head);
        } else {
            ++k;
        }
    }
    return v;
}

bool RowReducer::insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    uint32_t c = v.front().first;
    Scalar inv = v.front().second.inv();
    for (auto& e : v) e.second *= inv;
    if (pivot_row_.size() <= c) pivot_row_.resize(c + 1, -1);
    pivot_row_[c] = static_cast<int64_t>(rows_.size());
    rows_.push_back(std::move(v));
    return true;
}

}  // namespace hq
