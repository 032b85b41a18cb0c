#include <torcox/normal_form.hpp>

#include <algorithm>
#include <stdexcept>

namespace torcox {

VecZ SmithForm::torsion() const {
    VecZ t;
    for (const Int& d : diagonal)
        if (d >= 2) t.push_back(d);
    return t;
}

namespace {

// Smallest-|value| nonzero entry of a in the trailing block starting at t;
// ties resolved row-first then column-first.  Returns false if block is zero.
bool find_pivot(const IntMatrix& a, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best = 0;
    for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            Int v = abs(a(i, j));
            if (!found || v < best) {
                found = true;
                best = v;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

SmithForm smith_form(const IntMatrix& input) {
    SmithForm f;
    f.s = input;
    f.u = IntMatrix::identity(input.rows());
    f.v = IntMatrix::identity(input.cols());
    IntMatrix& s = f.s;
    std::size_t n = std::min(input.rows(), input.cols());

    for (std::size_t t = 0; t < n; ++t) {
        std::size_t pi, pj;
        if (!find_pivot(s, t, pi, pj)) break;
        s.swap_rows(t, pi);
        f.u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        f.v.swap_cols(t, pj);

        for (;;) {
            // Clear column t below the pivot.
            bool dirty = false;
            for (std::size_t i = t + 1; i < s.rows(); ++i) {
                if (s(i, t) == 0) continue;
                Int q = floor_div(s(i, t), s(t, t));
                s.add_row_multiple(i, t, -q);
                f.u.add_row_multiple(i, t, -q);
                if (s(i, t) != 0) {
                    // Remainder became the smaller pivot; rotate it up.
                    s.swap_rows(t, i);
                    f.u.swap_rows(t, i);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // Clear row t right of the pivot.
            for (std::size_t j = t + 1; j < s.cols(); ++j) {
                if (s(t, j) == 0) continue;
                Int q = floor_div(s(t, j), s(t, t));
                s.add_col_multiple(j, t, -q);
                f.v.add_col_multiple(j, t, -q);
                if (s(t, j) != 0) {
                    s.swap_cols(t, j);
                    f.v.swap_cols(t, j);
                    dirty = true;
                }
            }
            if (!dirty) break;
        }

        // Enforce divisibility of the remaining block by the pivot: a bad
        // entry is folded into row t and the elimination rerun.
        bool redo = true;
        while (redo) {
            redo = false;
            for (std::size_t i = t + 1; i < s.rows() && !redo; ++i)
                for (std::size_t j = t + 1; j < s.cols() && !redo; ++j)
                    if (s(i, j) % s(t, t) != 0) {
                        s.add_row_multiple(t, i, Int(1));
                        f.u.add_row_multiple(t, i, Int(1));
                        for (;;) {
                            bool moved = false;
                            for (std::size_t jj = t + 1; jj < s.cols(); ++jj) {
                                if (s(t, jj) == 0) continue;
                                if (abs(s(t, jj)) < abs(s(t, t))) {
                                    s.swap_cols(t, jj);
                                    f.v.swap_cols(t, jj);
                                }
                                Int q = floor_div(s(t, jj), s(t, t));
                                s.add_col_multiple(jj, t, -q);
                                f.v.add_col_multiple(jj, t, -q);
                                if (s(t, jj) != 0) moved = true;
                            }
                            for (std::size_t ii = t + 1; ii < s.rows(); ++ii) {
                                if (s(ii, t) == 0) continue;
                                Int q = floor_div(s(ii, t), s(t, t));
                                s.add_row_multiple(ii, t, -q);
                                f.u.add_row_multiple(ii, t, -q);
                                if (s(ii, t) != 0) {
                                    s.swap_rows(t, ii);
                                    f.u.swap_rows(t, ii);
                                    moved = true;
                                }
                            }
                            if (!moved) break;
                        }
                        redo = true;
                    }
        }

        if (s(t, t) < 0) {
            s.negate_row(t);
            f.u.negate_row(t);
        }
    }

    f.diagonal.resize(n);
    for (std::size_t i = 0; i < n; ++i) f.diagonal[i] = s(i, i);
    f.rank = 0;
    for (const Int& d : f.diagonal)
        if (d != 0) ++f.rank;
    return f;
}

HermiteForm hermite_form(const IntMatrix& input) {
    HermiteForm f;
    f.h = input;
    f.v = IntMatrix::identity(input.cols());
    IntMatrix& h = f.h;
    std::size_t c = 0;  // next column to receive a pivot
    for (std::size_t r = 0; r < h.rows() && c < h.cols(); ++r) {
        // Gather the gcd of row r over columns >= c into column c.
        for (;;) {
            std::size_t best = h.cols();
            for (std::size_t j = c; j < h.cols(); ++j)
                if (h(r, j) != 0 && (best == h.cols() || abs(h(r, j)) < abs(h(r, best)))) best = j;
            if (best == h.cols()) break;  // row is zero from column c on
            h.swap_cols(c, best);
            f.v.swap_cols(c, best);
            bool cleared = true;
            for (std::size_t j = c + 1; j < h.cols(); ++j) {
                if (h(r, j) == 0) continue;
                Int q = floor_div(h(r, j), h(r, c));
                h.add_col_multiple(j, c, -q);
                f.v.add_col_multiple(j, c, -q);
                if (h(r, j) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (h(r, c) == 0) continue;  // no pivot in this row
        if (h(r, c) < 0) {
            h.negate_col(c);
            f.v.negate_col(c);
        }
        // Reduce earlier columns against the new pivot: 0 <= entry < pivot.
        for (std::size_t j = 0; j < c; ++j) {
            Int q = floor_div(h(r, j), h(r, c));
            h.add_col_multiple(j, c, -q);
            f.v.add_col_multiple(j, c, -q);
        }
        ++c;
    }
    f.rank = c;
    return f;
}

IntMatrix lattice_basis(const IntMatrix& a) {
    HermiteForm f = hermite_form(a);
    std::vector<std::size_t> keep(f.rank);
    for (std::size_t j = 0; j < f.rank; ++j) keep[j] = j;
    return f.h.submatrix_cols(keep);
}

IntMatrix kernel_lattice(const IntMatrix& a) {
    HermiteForm f = hermite_form(a);
    std::vector<std::size_t> zero_cols;
    for (std::size_t j = f.rank; j < f.h.cols(); ++j) zero_cols.push_back(j);
    return f.v.submatrix_cols(zero_cols);
}

namespace {

std::optional<VecQ> solve_rational_impl(const IntMatrix& a, VecQ rhs) {
    std::size_t m = a.rows(), n = a.cols();
    if (rhs.size() != m) throw DimensionMismatchError("solve_rational: rhs length mismatch");
    // Augmented rational elimination.
    std::vector<VecQ> w(m, VecQ(n, Rat(0)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) w[i][j] = a(i, j);
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < m; ++col) {
        std::size_t p = r;
        while (p < m && w[p][col] == 0) ++p;
        if (p == m) continue;
        std::swap(w[r], w[p]);
        std::swap(rhs[r], rhs[p]);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || w[i][col] == 0) continue;
            Rat factor = w[i][col] / w[r][col];
            for (std::size_t j = col; j < n; ++j) w[i][j] -= factor * w[r][j];
            rhs[i] -= factor * rhs[r];
        }
        pivot_col.push_back(col);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        if (rhs[i] != 0) return std::nullopt;
    VecQ x(n, Rat(0));
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = rhs[i] / w[i][pivot_col[i]];
    return x;
}

}  // namespace

std::optional<VecQ> solve_rational(const IntMatrix& a, const VecZ& b) {
    VecQ rhs(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) rhs[i] = b[i];
    return solve_rational_impl(a, std::move(rhs));
}

std::optional<VecQ> solve_rational_q(const IntMatrix& a, const VecQ& b) {
    return solve_rational_impl(a, b);
}

std::optional<VecZ> solve_integer(const IntMatrix& a, const VecZ& b) {
    if (b.size() != a.rows()) throw DimensionMismatchError("solve_integer: rhs length mismatch");
    HermiteForm f = hermite_form(a);
    // Pivot row of each nonzero column, strictly increasing.
    std::vector<std::size_t> pivot_row(f.rank);
    for (std::size_t j = 0; j < f.rank; ++j) {
        std::size_t i = 0;
        while (f.h(i, j) == 0) ++i;
        pivot_row[j] = i;
    }
    VecZ y(a.cols(), Int(0));
    VecZ residual = b;
    std::size_t j = 0;
    for (std::size_t rrow = 0; rrow < a.rows(); ++rrow) {
        if (j < f.rank && pivot_row[j] == rrow) {
            if (residual[rrow] % f.h(rrow, j) != 0) return std::nullopt;
            y[j] = residual[rrow] / f.h(rrow, j);
            if (y[j] != 0)
                for (std::size_t i = rrow; i < a.rows(); ++i) residual[i] -= y[j] * f.h(i, j);
            ++j;
        } else if (residual[rrow] != 0) {
            return std::nullopt;
        }
    }
    return f.v * y;
}

bool in_column_lattice(const IntMatrix& a, const VecZ& x) {
    return solve_integer(a, x).has_value();
}

bool same_column_lattice(const IntMatrix& a, const IntMatrix& b) {
    return lattice_basis(a) == lattice_basis(b);
}

IntMatrix lattice_intersection(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw DimensionMismatchError("lattice_intersection: ambient mismatch");
    // x in both lattices: x = a u = b v, i.e. (u; v) in ker [a | -b].
    IntMatrix neg_b = b;
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) neg_b(i, j) = -b(i, j);
    IntMatrix combined = a.hcat(neg_b);
    IntMatrix ker = kernel_lattice(combined);
    std::vector<std::size_t> ucoords(a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i) ucoords[i] = i;
    IntMatrix gens = a * ker.submatrix_rows(ucoords);
    return lattice_basis(gens);
}

IntMatrix lattice_saturation(const IntMatrix& a) {
    // span(a) = orthogonal complement of ker(a^T . ) taken twice.
    IntMatrix ker = kernel_lattice(a.transpose());  // vectors orthogonal to all columns of a
    return kernel_lattice(ker.transpose());
}

IntMatrix inverse_unimodular(const IntMatrix& u) {
    if (u.rows() != u.cols()) throw DimensionMismatchError("inverse_unimodular: matrix not square");
    Int d = u.det();
    if (d != 1 && d != -1) throw std::invalid_argument("inverse_unimodular: determinant not +-1");
    std::size_t n = u.rows();
    IntMatrix inv(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        VecZ e(n, Int(0));
        e[j] = 1;
        auto x = solve_integer(u, e);
        if (!x) throw std::logic_error("inverse_unimodular: solve failed on unimodular input");
        for (std::size_t i = 0; i < n; ++i) inv(i, j) = (*x)[i];
    }
    return inv;
}

}  // namespace torcox
