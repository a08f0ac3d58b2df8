// Dense exact rational matrices: reduced row echelon form with caller-chosen
// column scan order, determinants, linear solves, kernels, and seeded random
// integer matrices.

#ifndef OKBODY_MATRIX_HPP
#define OKBODY_MATRIX_HPP

#include "okbody/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace okb {

class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

    RatMatrix(size_t rows, size_t cols, std::vector<Rat> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_)
            throw std::invalid_argument("RatMatrix: entry count does not match shape");
    }

    static RatMatrix identity(size_t n) {
        RatMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static RatMatrix from_rows(const std::vector<RatVec>& rows) {
        if (rows.empty()) return RatMatrix(0, 0);
        RatMatrix m(rows.size(), rows[0].size());
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_)
                throw std::invalid_argument("RatMatrix::from_rows: ragged rows");
            for (size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rat& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const Rat& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    RatVec row(size_t i) const {
        return RatVec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }

    RatVec col(size_t j) const {
        RatVec c(rows_);
        for (size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
        return c;
    }

    RatMatrix transpose() const {
        RatMatrix t(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    RatMatrix operator*(const RatMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("RatMatrix: shape mismatch in product");
        RatMatrix p(rows_, o.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                if (at(i, k) == 0) continue;
                for (size_t j = 0; j < o.cols_; ++j) p.at(i, j) += at(i, k) * o.at(k, j);
            }
        return p;
    }

    RatVec apply(const RatVec& v) const {
        if (v.size() != cols_) throw std::invalid_argument("RatMatrix::apply: length mismatch");
        RatVec w(rows_, Rat(0));
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                if (at(i, j) != 0) w[i] += at(i, j) * v[j];
        return w;
    }

    bool operator==(const RatMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> data_;
};

struct RrefResult {
    RatMatrix reduced;
    std::vector<size_t> pivot_columns;  // in scan order
};

/// Gauss–Jordan elimination scanning columns in the given order. Pivots are
/// the first usable column (in scan order) of each surviving row; row space
/// is preserved exactly. A zero matrix yields an empty pivot list.
inline RrefResult rref(RatMatrix m, const std::vector<size_t>& column_order) {
    if (column_order.size() != m.cols())
        throw std::invalid_argument("rref: column_order must be a permutation of the columns");
    std::vector<bool> seen(m.cols(), false);
    for (size_t c : column_order) {
        if (c >= m.cols() || seen[c])
            throw std::invalid_argument("rref: column_order must be a permutation of the columns");
        seen[c] = true;
    }

    std::vector<size_t> pivots;
    size_t next_row = 0;
    for (size_t c : column_order) {
        if (next_row >= m.rows()) break;
        size_t pr = next_row;
        while (pr < m.rows() && m.at(pr, c) == 0) ++pr;
        if (pr == m.rows()) continue;
        if (pr != next_row)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(next_row, j));
        Rat inv = m.at(next_row, c);
        for (size_t j = 0; j < m.cols(); ++j) m.at(next_row, j) /= inv;
        for (size_t r = 0; r < m.rows(); ++r) {
            if (r == next_row || m.at(r, c) == 0) continue;
            Rat f = m.at(r, c);
            for (size_t j = 0; j < m.cols(); ++j) m.at(r, j) -= f * m.at(next_row, j);
        }
        pivots.push_back(c);
        ++next_row;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::vector<size_t> natural_order(size_t n) {
    std::vector<size_t> o(n);
    for (size_t i = 0; i < n; ++i) o[i] = i;
    return o;
}

inline RrefResult rref(const RatMatrix& m) { return rref(m, natural_order(m.cols())); }

inline size_t rank(const RatMatrix& m) { return rref(m).pivot_columns.size(); }

inline Rat determinant(RatMatrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    Rat det(1);
    size_t n = m.rows();
    for (size_t c = 0; c < n; ++c) {
        size_t pr = c;
        while (pr < n && m.at(pr, c) == 0) ++pr;
        if (pr == n) return Rat(0);
        if (pr != c) {
            for (size_t j = 0; j < n; ++j) std::swap(m.at(pr, j), m.at(c, j));
            det = -det;
        }
        det *= m.at(c, c);
        for (size_t r = c + 1; r < n; ++r) {
            if (m.at(r, c) == 0) continue;
            Rat f = m.at(r, c) / m.at(c, c);
            for (size_t j = c; j < n; ++j) m.at(r, j) -= f * m.at(c, j);
        }
    }
    return det;
}

/// Unique solution of a square system, or nullopt if the matrix is singular.
inline std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b) {
    if (a.rows() != a.cols() || b.size() != a.rows())
        throw std::invalid_argument("solve: shape mismatch");
    size_t n = a.rows();
    RatMatrix aug(n, n + 1);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n) = b[i];
    }
    RrefResult r = rref(aug);
    if (r.pivot_columns.size() != n) return std::nullopt;
    for (size_t i = 0; i < n; ++i)
        if (r.pivot_columns[i] == n) return std::nullopt;
    RatVec x(n);
    for (size_t i = 0; i < n; ++i) x[r.pivot_columns[i]] = r.reduced.at(i, n);
    return x;
}

inline std::optional<RatMatrix> inverse(const RatMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse: matrix not square");
    size_t n = a.rows();
    RatMatrix aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = 1;
    }
    RrefResult r = rref(aug);
    for (size_t i = 0; i < n; ++i)
        if (i >= r.pivot_columns.size() || r.pivot_columns[i] != i) return std::nullopt;
    RatMatrix inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv.at(i, j) = r.reduced.at(i, n + j);
    return inv;
}

/// Basis of { x : a·x = 0 }, one vector per free column.
inline std::vector<RatVec> kernel_basis(const RatMatrix& a) {
    RrefResult r = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (size_t c : r.pivot_columns) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        RatVec v(a.cols(), Rat(0));
        v[free] = 1;
        for (size_t i = 0; i < r.pivot_columns.size(); ++i)
            v[r.pivot_columns[i]] = -r.reduced.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

// ============================================================================
// Seeded random matrices
// ============================================================================

/// Unit diagonal, strictly-lower entries uniform in [-bound, bound].
/// Invertible by construction; deterministic in the seed.
inline RatMatrix random_unit_lower_triangular(size_t n, long long bound, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_unit_lower_triangular: n must be >= 1");
    if (bound < 2) throw std::invalid_argument("random_unit_lower_triangular: bound must be >= 2");
    SeededRng rng(seed);
    RatMatrix m = RatMatrix::identity(n);
    for (size_t i = 1; i < n; ++i)
        for (size_t j = 0; j < i; ++j) m.at(i, j) = rng.int_in(-bound, bound);
    return m;
}

/// Full random integer entries, resampled until the determinant is nonzero.
inline RatMatrix random_invertible(size_t n, long long bound, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_invertible: n must be >= 1");
    if (bound < 1) throw std::invalid_argument("random_invertible: bound must be >= 1");
    SeededRng rng(seed);
    while (true) {
        RatMatrix m(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) m.at(i, j) = rng.int_in(-bound, bound);
        if (determinant(m) != 0) return m;
    }
}

}  // namespace okb

#endif  // OKBODY_MATRIX_HPP
