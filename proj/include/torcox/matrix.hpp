#ifndef TORCOX_MATRIX_HPP
#define TORCOX_MATRIX_HPP

#include <torcox/numeric.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace torcox {

/**
 * Dense integer matrix with exact entries.  Row-major storage, value
 * semantics.  Columns are the preferred carrier for lattice generators: the
 * column lattice of A is the subgroup of Z^rows spanned by A's columns.
 */
class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}
    IntMatrix(std::initializer_list<std::initializer_list<Int>> init);

    static IntMatrix identity(std::size_t n);
    /** Matrix whose columns are the given vectors (all of equal length). */
    static IntMatrix from_columns(const std::vector<VecZ>& cols, std::size_t rows_hint = 0);
    /** Matrix whose rows are the given vectors (all of equal length). */
    static IntMatrix from_rows(const std::vector<VecZ>& rows, std::size_t cols_hint = 0);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    VecZ row(std::size_t i) const;
    VecZ col(std::size_t j) const;
    std::vector<VecZ> columns() const;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    VecZ operator*(const VecZ& v) const;
    bool operator==(const IntMatrix& rhs) const = default;

    /** Horizontal concatenation [this | rhs]. */
    IntMatrix hcat(const IntMatrix& rhs) const;
    IntMatrix submatrix_rows(const std::vector<std::size_t>& keep) const;
    IntMatrix submatrix_cols(const std::vector<std::size_t>& keep) const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    /** row i += c * row j */
    void add_row_multiple(std::size_t i, std::size_t j, const Int& c);
    /** col i += c * col j */
    void add_col_multiple(std::size_t i, std::size_t j, const Int& c);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

    /** Exact determinant (square only), by fraction-free elimination. */
    Int det() const;
    /** Rank over Q. */
    std::size_t rank() const;

    std::string to_string() const;

  private:
    std::size_t rows_, cols_;
    std::vector<Int> data_;
};

}  // namespace torcox

#endif
