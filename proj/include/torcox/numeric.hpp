#ifndef TORCOX_NUMERIC_HPP
#define TORCOX_NUMERIC_HPP

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace torcox {

// All arithmetic in this library is exact: arbitrary-precision integers for
// lattice data, arbitrary-precision rationals wherever division is needed.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using VecZ = std::vector<Int>;
using VecQ = std::vector<Rat>;

struct DimensionMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline Int floor_div(const Int& a, const Int& b) {
    Int q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

/** gcd of a full vector; 0 for the zero vector, always nonnegative. */
inline Int vec_gcd(const VecZ& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    return g;
}

/** Divide a nonzero vector by the gcd of its entries. */
inline VecZ primitivize(VecZ v) {
    Int g = vec_gcd(v);
    if (g > 1) {
        for (Int& x : v) x /= g;
    }
    return v;
}

inline bool is_zero(const VecZ& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

inline Int dot(const VecZ& a, const VecZ& b) {
    if (a.size() != b.size()) throw DimensionMismatchError("dot: length mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot_q(const VecQ& a, const VecZ& b) {
    if (a.size() != b.size()) throw DimensionMismatchError("dot_q: length mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline VecZ vec_add(const VecZ& a, const VecZ& b) {
    if (a.size() != b.size()) throw DimensionMismatchError("vec_add: length mismatch");
    VecZ r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline VecZ vec_sub(const VecZ& a, const VecZ& b) {
    if (a.size() != b.size()) throw DimensionMismatchError("vec_sub: length mismatch");
    VecZ r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline VecZ vec_scale(const Int& c, const VecZ& a) {
    VecZ r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

/** Render as "(a, b, c)"; the textual form used across reports and tests. */
inline std::string to_string(const VecZ& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s + ")";
}

}  // namespace torcox

#endif
