#pragma once

#include "hombracket/rational.hpp"

#include <initializer_list>
#include <vector>

namespace hombracket {

/// Coordinate vector over the rationals. Immutable-style value type; every
/// operation returns a fresh value.
class Vec {
public:
    Vec() = default;
    explicit Vec(int n) : c_(static_cast<size_t>(n)) {}
    explicit Vec(std::vector<Rational> coords) : c_(std::move(coords)) {}
    Vec(std::initializer_list<Rational> coords) : c_(coords) {}

    static Vec basis(int n, int i);

    int size() const { return static_cast<int>(c_.size()); }
    const Rational& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
    Rational& operator[](int i) { return c_[static_cast<size_t>(i)]; }

    bool is_zero() const;
    bool operator==(const Vec& o) const { return c_ == o.c_; }

    Vec& operator+=(const Vec& o);
    Vec& operator-=(const Vec& o);
    Vec& operator*=(const Rational& s);
    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(const Rational& s, Vec v) { return v *= s; }
    friend Vec operator-(Vec v);

    std::string str() const;

private:
    std::vector<Rational> c_;
};

/// Dense rational matrix. Rows and columns are 0-based.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}
    /// Row-major construction from integer literals, mostly for tests.
    static Matrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);
    static Matrix identity(int n);
    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }
    static Matrix diagonal(const std::vector<Rational>& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Rational& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }
    Rational& operator()(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }

    Matrix transpose() const;
    Vec column(int j) const;
    Vec apply(const Vec& v) const; // matrix * column vector

    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
    bool is_zero() const;
    bool is_identity() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Rational& s);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Rational& s, Matrix m) { return m *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);

    std::string str() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> e_;
};

/// Exact inverse via fraction-free Gauss-Jordan elimination on an integer
/// scaling of the input. Throws DimensionMismatch on a non-square input and
/// NotInvertible when the determinant vanishes.
Matrix invert(const Matrix& m);

/// Exact rank via Bareiss fraction-free elimination with full pivoting.
int rank(const Matrix& m);

/// Basis of the right kernel { v : m v = 0 }, one Vec per free column of the
/// reduced row echelon form. Deterministic for identical inputs.
std::vector<Vec> kernel_basis(const Matrix& m);

/// Determinant of the square submatrix picked out by `row_idx` x `col_idx`.
Rational minor_det(const Matrix& m, const std::vector<int>& row_idx,
                   const std::vector<int>& col_idx);

/// Integer power of a square matrix; negative exponents go through invert().
Matrix matrix_power(const Matrix& m, int k);

/// An invertible twist with its cached inverse. dual() is the matrix of the
/// induced map on covector coordinates (the transpose), dual_inverse() the
/// matrix of the inverse-dual.
class TwistMap {
public:
    explicit TwistMap(Matrix forward);
    static TwistMap identity(int n) { return TwistMap(Matrix::identity(n)); }

    int dim() const { return fwd_.rows(); }
    const Matrix& forward() const { return fwd_; }
    const Matrix& inverse() const { return inv_; }
    Matrix dual() const { return fwd_.transpose(); }
    Matrix dual_inverse() const { return inv_.transpose(); }
    Matrix power(int k) const { return matrix_power(fwd_, k); }
    bool is_identity() const { return fwd_.is_identity(); }

    bool operator==(const TwistMap& o) const { return fwd_ == o.fwd_; }

private:
    Matrix fwd_, inv_;
};

} // namespace hombracket
