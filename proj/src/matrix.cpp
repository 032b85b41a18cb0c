#include <torcox/matrix.hpp>

namespace torcox {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : init) {
        if (r.size() != cols_) throw DimensionMismatchError("IntMatrix: ragged initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<VecZ>& cols, std::size_t rows_hint) {
    std::size_t r = cols.empty() ? rows_hint : cols.front().size();
    IntMatrix m(r, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != r) throw DimensionMismatchError("from_columns: ragged input");
        for (std::size_t i = 0; i < r; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<VecZ>& rows, std::size_t cols_hint) {
    std::size_t c = rows.empty() ? cols_hint : rows.front().size();
    IntMatrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw DimensionMismatchError("from_rows: ragged input");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

VecZ IntMatrix::row(std::size_t i) const {
    VecZ r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
}

VecZ IntMatrix::col(std::size_t j) const {
    VecZ c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

std::vector<VecZ> IntMatrix::columns() const {
    std::vector<VecZ> cs;
    cs.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) cs.push_back(col(j));
    return cs;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionMismatchError("matrix product: inner dimension mismatch");
    IntMatrix p(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) p(i, j) += a * rhs(k, j);
        }
    return p;
}

VecZ IntMatrix::operator*(const VecZ& v) const {
    if (cols_ != v.size()) throw DimensionMismatchError("matrix-vector product: dimension mismatch");
    VecZ r(rows_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
}

IntMatrix IntMatrix::hcat(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ && rhs.cols_ != 0 && cols_ != 0)
        throw DimensionMismatchError("hcat: row count mismatch");
    std::size_t r = cols_ ? rows_ : rhs.rows_;
    IntMatrix m(r, cols_ + rhs.cols_);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < rhs.cols_; ++j) m(i, cols_ + j) = rhs(i, j);
    }
    return m;
}

IntMatrix IntMatrix::submatrix_rows(const std::vector<std::size_t>& keep) const {
    IntMatrix m(keep.size(), cols_);
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(keep[i], j);
    return m;
}

IntMatrix IntMatrix::submatrix_cols(const std::vector<std::size_t>& keep) const {
    IntMatrix m(rows_, keep.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < keep.size(); ++j) m(i, j) = (*this)(i, keep[j]);
    return m;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t j, const Int& c) {
    if (c == 0) return;
    for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) += c * (*this)(j, k);
}

void IntMatrix::add_col_multiple(std::size_t i, std::size_t j, const Int& c) {
    if (c == 0) return;
    for (std::size_t k = 0; k < rows_; ++k) (*this)(k, i) += c * (*this)(k, j);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t k = 0; k < rows_; ++k) (*this)(k, j) = -(*this)(k, j);
}

// Bareiss fraction-free elimination: exact integer determinant without
// rational intermediates.
Int IntMatrix::det() const {
    if (rows_ != cols_) throw DimensionMismatchError("det: matrix not square");
    std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix a = *this;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::size_t IntMatrix::rank() const {
    IntMatrix a = *this;
    std::size_t rk = 0;
    for (std::size_t col = 0; col < cols_ && rk < rows_; ++col) {
        std::size_t p = rk;
        while (p < rows_ && a(p, col) == 0) ++p;
        if (p == rows_) continue;
        a.swap_rows(rk, p);
        for (std::size_t i = rk + 1; i < rows_; ++i) {
            if (a(i, col) == 0) continue;
            // Integer cross-multiplication keeps the elimination exact.
            Int pivot = a(rk, col), entry = a(i, col);
            for (std::size_t j = col; j < cols_; ++j) a(i, j) = a(i, j) * pivot - entry * a(rk, j);
        }
        ++rk;
    }
    return rk;
}

std::string IntMatrix::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) s += "; ";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) s += " ";
            s += (*this)(i, j).str();
        }
    }
    return s + "]";
}

}  // namespace torcox
