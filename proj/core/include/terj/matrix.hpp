#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "terj/rational.hpp"

namespace terj {

/// Vector of exact rationals.
using Vec = std::vector<Rational>;

/// Dense matrix of exact rationals representing a linear operator in the
/// column-action convention: entry (r, c) is the coefficient of basis vector
/// r in the image of basis vector c, so operators compose as matrix products
/// and act on coordinate columns by apply().
class Matrix {
public:
    Matrix() = default;
    /// rows x cols zero matrix.
    Matrix(int rows, int cols);
    /// From rows literal: Matrix{{1,2},{3,4}}.
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(int n);
    static Matrix diagonal(const Vec& entries);
    /// Zero matrix with a single 1 at (r, c).
    static Matrix unit(int rows, int cols, int r, int c);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Rational& operator()(int r, int c) const { return data_[index(r, c)]; }
    Rational& operator()(int r, int c) { return data_[index(r, c)]; }
    /// Bounds-checked access; throws OutOfRange.
    const Rational& at(int r, int c) const;
    Rational& at(int r, int c);

    bool is_zero() const;
    bool is_identity() const;
    bool is_diagonal() const;
    bool is_symmetric() const;

    Matrix transpose() const;
    Rational trace() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Rational& s);
    Matrix operator-() const;

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
    friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
    /// Matrix product; throws ShapeMismatch on inner-dimension mismatch.
    friend Matrix operator*(const Matrix& a, const Matrix& b);

    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    /// Image of a coordinate column: (M v)[r] = sum_c M(r,c) v[c].
    Vec apply(const Vec& v) const;

    /// Row-major flattening to a vector of length rows*cols (used to treat
    /// operators as elements of an ambient coordinate space).
    Vec flatten() const;
    static Matrix unflatten(const Vec& v, int rows, int cols);

    /// Submatrix on the given row and column index lists.
    Matrix select(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const;

    std::string str() const;

private:
    std::size_t index(int r, int c) const {
        return static_cast<std::size_t>(r) * cols_ + c;
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

/// Kronecker product with the left factor major: the tensor basis vector
/// e_i (x) e_j maps to flat index i*B.rows + j on rows (same on columns), so
/// kron(X, Y) acts as X on the first factor and Y on the second.
Matrix kron(const Matrix& a, const Matrix& b);

/// Commutator [X, Y] = XY - YX; throws ShapeMismatch unless both are square
/// of the same size.
Matrix commutator(const Matrix& x, const Matrix& y);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

} // namespace terj
