#pragma once

// Exact integer / rational linear algebra. Every other header builds on the
// types here; nothing in the library touches floating point.

#include "reflexkit/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace reflexkit {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// N is the lattice holding polytope vertices, M = Hom(N, Z) holds facet normals.
enum class Lattice { N, M };

constexpr Lattice dual_lattice(Lattice l) noexcept {
    return l == Lattice::N ? Lattice::M : Lattice::N;
}

inline const char* to_string(Lattice l) noexcept { return l == Lattice::N ? "N" : "M"; }

template <class T>
struct Point {
    std::vector<T> coords;
    Lattice ambient = Lattice::N;

    Point() = default;
    explicit Point(std::size_t n, Lattice lattice = Lattice::N) : coords(n), ambient(lattice) {}
    Point(std::vector<T> c, Lattice lattice = Lattice::N)
        : coords(std::move(c)), ambient(lattice) {}
    Point(std::initializer_list<T> c, Lattice lattice = Lattice::N)
        : coords(c), ambient(lattice) {}

    std::size_t size() const noexcept { return coords.size(); }
    T& operator[](std::size_t i) { return coords[i]; }
    const T& operator[](std::size_t i) const { return coords[i]; }

    bool is_zero() const {
        return std::all_of(coords.begin(), coords.end(), [](const T& x) { return x == 0; });
    }

    Point& operator+=(const Point& o) {
        for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
        return *this;
    }
    Point& operator-=(const Point& o) {
        for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
        return *this;
    }
    Point& operator*=(const T& s) {
        for (auto& x : coords) x *= s;
        return *this;
    }
    friend Point operator+(Point a, const Point& b) { return a += b; }
    friend Point operator-(Point a, const Point& b) { return a -= b; }
    friend Point operator*(const T& s, Point a) { return a *= s; }
    friend Point operator-(Point a) {
        for (auto& x : a.coords) x = -x;
        return a;
    }

    // Equality and ordering ignore the ambient tag: they compare coordinates.
    friend bool operator==(const Point& a, const Point& b) { return a.coords == b.coords; }
    friend bool operator<(const Point& a, const Point& b) {
        return std::lexicographical_compare(a.coords.begin(), a.coords.end(), b.coords.begin(),
                                            b.coords.end());
    }

    friend std::ostream& operator<<(std::ostream& os, const Point& p) {
        os << '(';
        for (std::size_t i = 0; i < p.coords.size(); ++i) os << (i ? "," : "") << p.coords[i];
        return os << ')';
    }
};

using LatticePoint = Point<Integer>;
using RationalPoint = Point<Rational>;

inline RationalPoint to_rational(const LatticePoint& p) {
    RationalPoint r(p.size(), p.ambient);
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = Rational(p[i]);
    return r;
}

inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

inline std::string to_string(const Integer& x) { return x.str(); }
inline std::string to_string(const Rational& q) {
    return is_integral(q) ? numerator(q).str() : numerator(q).str() + "/" + denominator(q).str();
}

// ---------------------------------------------------------------------------
// Matrix

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        for (const auto& r : rows) {
            if (r.size() != cols_) throw PreconditionError("ragged_matrix", "ragged matrix rows");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    template <class P>
    static Matrix from_rows(std::span<const P> points) {
        Matrix m(points.size(), points.empty() ? 0 : points.front().size());
        for (std::size_t i = 0; i < m.rows_; ++i) {
            if (points[i].size() != m.cols_)
                throw PreconditionError("dimension_mismatch", "rows of different length");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = T(points[i][j]);
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
    }
    const std::vector<T>& data() const noexcept { return data_; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }
    // row[dst] += k * row[src]
    void add_row(std::size_t dst, std::size_t src, const T& k) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
    }
    // col[dst] += k * col[src]
    void add_col(std::size_t dst, std::size_t src, const T& k) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
    }
    void negate_row(std::size_t r) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
    }
    void negate_col(std::size_t c) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw PreconditionError("dimension_mismatch", "matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    // Shape first, then row-major entries.
    friend bool operator<(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
        if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
        return std::lexicographical_compare(a.data_.begin(), a.data_.end(), b.data_.begin(),
                                            b.data_.end());
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

inline RationalMatrix to_rational(const IntMatrix& a) {
    RationalMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = Rational(a(i, j));
    return r;
}

// T * v, with v read as a column vector.
template <class T>
Point<T> apply(const Matrix<T>& t, const Point<T>& v) {
    if (t.cols() != v.size())
        throw PreconditionError("dimension_mismatch", "transform does not match point dimension");
    Point<T> out(t.rows(), v.ambient);
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j) out[i] += t(i, j) * v[j];
    return out;
}

// ---------------------------------------------------------------------------
// Pairing

template <class T>
T dot(const Point<T>& x, const Point<T>& y) {
    T s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

// <x, y> for x and y in mutually dual lattices.
template <class T>
T pairing(const Point<T>& x, const Point<T>& y) {
    if (x.size() != y.size())
        throw PreconditionError("dimension_mismatch",
                                "pairing of vectors of dimension " + std::to_string(x.size()) +
                                    " and " + std::to_string(y.size()));
    if (x.ambient == y.ambient)
        throw PreconditionError("same_ambient",
                                std::string("pairing needs one vector in N and one in M, got two in ") +
                                    to_string(x.ambient));
    return dot(x, y);
}

inline LatticePoint primitive(const LatticePoint& v) {
    Integer g = 0;
    for (const auto& x : v.coords) g = gcd(g, x);
    if (g == 0) throw PreconditionError("zero_vector", "primitive() of the zero vector");
    LatticePoint out = v;
    for (auto& x : out.coords) x /= g;
    return out;
}

inline bool is_primitive(const LatticePoint& v) {
    Integer g = 0;
    for (const auto& x : v.coords) g = gcd(g, x);
    return g == 1;
}

// ---------------------------------------------------------------------------
// Determinant, rank, inverse

template <class T>
T determinant(const Matrix<T>& a) {
    if (!a.is_square())
        throw PreconditionError("non_square", "determinant of a " + std::to_string(a.rows()) + "x" +
                                                  std::to_string(a.cols()) + " matrix");
    const std::size_t n = a.rows();
    if (n == 0) return T(1);
    Matrix<T> m = a;
    T sign = 1;
    if constexpr (std::is_same_v<T, Integer>) {
        // Bareiss fraction-free elimination; every division is exact.
        Integer prev = 1;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (m(k, k) == 0) {
                std::size_t p = k + 1;
                while (p < n && m(p, k) == 0) ++p;
                if (p == n) return 0;
                m.swap_rows(k, p);
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i) {
                for (std::size_t j = k + 1; j < n; ++j)
                    m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
                m(i, k) = 0;
            }
            prev = m(k, k);
        }
        return sign * m(n - 1, n - 1);
    } else {
        T det = 1;
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t p = k;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            if (p != k) {
                m.swap_rows(k, p);
                sign = -sign;
            }
            det *= m(k, k);
            for (std::size_t i = k + 1; i < n; ++i) {
                if (m(i, k) == 0) continue;
                T f = m(i, k) / m(k, k);
                for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
            }
        }
        return sign * det;
    }
}

// Reduced row echelon form over Q. Returns the pivot columns.
inline std::vector<std::size_t> row_reduce(RationalMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(r, p);
        const Rational inv = 1 / m(r, c);
        for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            m.add_row(i, r, Rational(-m(i, c)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class T>
std::size_t rank(const Matrix<T>& a) {
    RationalMatrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = Rational(a(i, j));
    return row_reduce(m).size();
}

template <class P>
std::size_t rank_of_points(std::span<const P> points) {
    if (points.empty()) return 0;
    return rank(Matrix<Rational>::from_rows(points));
}

inline RationalMatrix inverse(const RationalMatrix& a) {
    if (!a.is_square()) throw PreconditionError("non_square", "inverse of a non-square matrix");
    const std::size_t n = a.rows();
    RationalMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = 1;
    }
    auto piv = row_reduce(aug);
    if (piv.size() < n || piv.back() >= n)
        throw PreconditionError("singular", "matrix is singular");
    RationalMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

// Coordinates c with sum_i c_i * basis[i] = x. The basis vectors need not span
// the whole space, but x must lie in their span.
template <class P>
std::vector<Rational> coordinates_in(std::span<const P> basis, const P& x) {
    const std::size_t k = basis.size();
    const std::size_t n = x.size();
    RationalMatrix aug(n, k + 1);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < n; ++i) aug(i, j) = Rational(basis[j][i]);
    for (std::size_t i = 0; i < n; ++i) aug(i, k) = Rational(x[i]);
    auto piv = row_reduce(aug);
    if (piv.size() != k || (!piv.empty() && piv.back() == k)) {
        if (!piv.empty() && piv.back() == k)
            throw PreconditionError("not_in_span", "vector is not in the span of the basis");
        throw PreconditionError("dependent_vectors", "basis vectors are linearly dependent");
    }
    std::vector<Rational> c(k);
    for (std::size_t r = 0; r < k; ++r) c[piv[r]] = aug(r, k);
    return c;
}

// ---------------------------------------------------------------------------
// Hermite and Smith normal forms

struct HermiteForm {
    IntMatrix h;  // row echelon, positive pivots, entries above a pivot reduced into [0, pivot)
    IntMatrix u;  // unimodular with u * input == h
    std::size_t rank = 0;
};

inline HermiteForm hermite_normal_form(const IntMatrix& a) {
    HermiteForm out{a, IntMatrix::identity(a.rows()), 0};
    IntMatrix& h = out.h;
    IntMatrix& u = out.u;
    const std::size_t m = a.rows();
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < m; ++c) {
        bool have_pivot = false;
        for (;;) {
            std::size_t best = m;
            for (std::size_t i = r; i < m; ++i)
                if (h(i, c) != 0 && (best == m || abs(h(i, c)) < abs(h(best, c)))) best = i;
            if (best == m) break;
            have_pivot = true;
            h.swap_rows(r, best);
            u.swap_rows(r, best);
            bool clean = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (h(i, c) == 0) continue;
                const Integer q = h(i, c) / h(r, c);
                h.add_row(i, r, Integer(-q));
                u.add_row(i, r, Integer(-q));
                if (h(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (!have_pivot) continue;
        if (h(r, c) < 0) {
            h.negate_row(r);
            u.negate_row(r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            const Integer q = floor_div(h(i, c), h(r, c));
            if (q == 0) continue;
            h.add_row(i, r, Integer(-q));
            u.add_row(i, r, Integer(-q));
        }
        ++r;
    }
    out.rank = r;
    return out;
}

struct SmithForm {
    IntMatrix d;                    // diagonal, d_i | d_{i+1}, d_i >= 0
    IntMatrix u;                    // unimodular, u * input * v == d
    IntMatrix v;                    // unimodular
    IntMatrix v_inverse;            // v^-1, tracked alongside v
    std::vector<Integer> diagonal;  // min(rows, cols) entries
    std::size_t rank = 0;
};

inline SmithForm smith_normal_form(const IntMatrix& a) {
    const std::size_t m = a.rows();
    const std::size_t k = a.cols();
    SmithForm out{a, IntMatrix::identity(m), IntMatrix::identity(k), IntMatrix::identity(k), {}, 0};
    IntMatrix& d = out.d;

    auto row_add = [&](std::size_t dst, std::size_t src, const Integer& q) {
        d.add_row(dst, src, q);
        out.u.add_row(dst, src, q);
    };
    auto row_swap = [&](std::size_t x, std::size_t y) {
        d.swap_rows(x, y);
        out.u.swap_rows(x, y);
    };
    // Column op col_dst += q col_src, i.e. right-multiplication by E; v^-1 gets E^-1 from the left.
    auto col_add = [&](std::size_t dst, std::size_t src, const Integer& q) {
        d.add_col(dst, src, q);
        out.v.add_col(dst, src, q);
        out.v_inverse.add_row(src, dst, Integer(-q));
    };
    auto col_swap = [&](std::size_t x, std::size_t y) {
        d.swap_cols(x, y);
        out.v.swap_cols(x, y);
        out.v_inverse.swap_rows(x, y);
    };

    for (std::size_t t = 0; t < std::min(m, k); ++t) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        std::size_t pi = m, pj = k;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < k; ++j)
                if (d(i, j) != 0 && (pi == m || abs(d(i, j)) < abs(d(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi == m) break;
        row_swap(t, pi);
        col_swap(t, pj);

        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (d(i, t) == 0) continue;
                row_add(i, t, Integer(-(d(i, t) / d(t, t))));
                if (d(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < k; ++j) {
                if (d(t, j) == 0) continue;
                col_add(j, t, Integer(-(d(t, j) / d(t, t))));
                if (d(t, j) != 0) dirty = true;
            }
            if (dirty) {
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < m; ++i)
                    if (d(i, t) != 0 && abs(d(i, t)) < abs(d(bi, bj))) {
                        bi = i;
                        bj = t;
                    }
                for (std::size_t j = t + 1; j < k; ++j)
                    if (d(t, j) != 0 && abs(d(t, j)) < abs(d(bi, bj))) {
                        bi = t;
                        bj = j;
                    }
                row_swap(t, bi);
                col_swap(t, bj);
                continue;
            }
            // Row and column cleared; enforce divisibility of the trailing block.
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < k; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == m) break;
            row_add(t, bad, Integer(1));
        }
        if (d(t, t) < 0) {
            d.negate_row(t);
            out.u.negate_row(t);
        }
    }
    for (std::size_t t = 0; t < std::min(m, k); ++t) {
        out.diagonal.push_back(d(t, t));
        if (d(t, t) != 0) ++out.rank;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Lattice helpers

// e_1*, ..., e_n* with <e_i, e_j*> = delta_ij. Computed as the rows of the
// inverse transpose of the matrix whose rows are the e_i.
template <class T>
std::vector<RationalPoint> dual_basis(std::span<const Point<T>> basis) {
    const std::size_t n = basis.size();
    for (const auto& b : basis)
        if (b.size() != n)
            throw PreconditionError("dimension_mismatch", "dual_basis needs n vectors in dimension n");
    RationalMatrix b = RationalMatrix::from_rows(basis);
    if (determinant(b) == 0)
        throw PreconditionError("singular", "dual_basis of linearly dependent vectors");
    RationalMatrix inv = inverse(b);
    const Lattice amb = n ? dual_lattice(basis.front().ambient) : Lattice::M;
    std::vector<RationalPoint> out;
    for (std::size_t j = 0; j < n; ++j) {
        RationalPoint e(n, amb);
        for (std::size_t i = 0; i < n; ++i) e[i] = inv(i, j);
        out.push_back(std::move(e));
    }
    return out;
}

template <class T>
std::vector<RationalPoint> dual_basis(const std::vector<Point<T>>& basis) {
    return dual_basis(std::span<const Point<T>>(basis));
}

// Index of the lattice generated by `gens` inside its saturation.
inline Integer cone_multiplicity(std::span<const LatticePoint> gens) {
    if (gens.empty()) return 1;
    IntMatrix a = IntMatrix::from_rows(gens);
    SmithForm s = smith_normal_form(a);
    if (s.rank != gens.size())
        throw PreconditionError("dependent_generators", "cone generators are linearly dependent");
    Integer mult = 1;
    for (const auto& x : s.diagonal)
        if (x != 0) mult *= x;
    return mult;
}

inline Integer cone_multiplicity(const std::vector<LatticePoint>& gens) {
    return cone_multiplicity(std::span<const LatticePoint>(gens));
}

// A Z-basis of N ∩ span(vectors).
inline std::vector<LatticePoint> saturation_basis(std::span<const LatticePoint> vectors) {
    if (vectors.empty()) return {};
    IntMatrix a = IntMatrix::from_rows(vectors);
    SmithForm s = smith_normal_form(a);
    // a = u^-1 d v^-1, so the row space of a is spanned by the first `rank` rows of v^-1.
    std::vector<LatticePoint> out;
    for (std::size_t r = 0; r < s.rank; ++r)
        out.emplace_back(s.v_inverse.row(r), vectors.front().ambient);
    return out;
}

// Product of `steps` bounded elementary row operations (additions with
// multiplier in [-2, 2], swaps, negations), drawn from `rng`.
template <class Rng>
IntMatrix random_unimodular(std::size_t n, Rng& rng, std::size_t steps = 12) {
    IntMatrix t = IntMatrix::identity(n);
    if (n == 0) return t;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> kind(0, 5);
    std::uniform_int_distribution<int> mult(1, 2);
    std::uniform_int_distribution<int> coin(0, 1);
    for (std::size_t s = 0; s < steps; ++s) {
        const std::size_t i = pick(rng);
        const std::size_t j = pick(rng);
        const int op = kind(rng);
        if (op == 0) {
            t.swap_rows(i, j);
        } else if (op == 1) {
            t.negate_row(i);
        } else if (i != j) {
            const int k = mult(rng) * (coin(rng) ? 1 : -1);
            t.add_row(i, j, Integer(k));
        }
    }
    return t;
}

inline bool is_unimodular(const IntMatrix& t) {
    if (!t.is_square()) return false;
    const Integer d = determinant(t);
    return d == 1 || d == -1;
}

// Inverse of a unimodular matrix, as an integer matrix.
inline IntMatrix unimodular_inverse(const IntMatrix& t) {
    if (!is_unimodular(t)) throw PreconditionError("not_unimodular", "matrix is not unimodular");
    RationalMatrix inv = inverse(to_rational(t));
    IntMatrix out(t.rows(), t.cols());
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j) out(i, j) = numerator(inv(i, j));
    return out;
}

} // namespace reflexkit
