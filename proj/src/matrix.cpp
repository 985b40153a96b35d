#include "hombracket/matrix.hpp"

#include "hombracket/errors.hpp"

#include <numeric>
#include <sstream>

namespace hombracket {

Vec Vec::basis(int n, int i) {
    Vec v(n);
    v[i] = 1;
    return v;
}

bool Vec::is_zero() const {
    for (const auto& x : c_)
        if (x != 0)
            return false;
    return true;
}

Vec& Vec::operator+=(const Vec& o) {
    if (size() != o.size())
        throw DimensionMismatch("vector sizes differ");
    for (int i = 0; i < size(); ++i)
        c_[i] += o.c_[i];
    return *this;
}

Vec& Vec::operator-=(const Vec& o) {
    if (size() != o.size())
        throw DimensionMismatch("vector sizes differ");
    for (int i = 0; i < size(); ++i)
        c_[i] -= o.c_[i];
    return *this;
}

Vec& Vec::operator*=(const Rational& s) {
    for (auto& x : c_)
        x *= s;
    return *this;
}

Vec operator-(Vec v) {
    for (auto& x : v.c_)
        x = -x;
    return v;
}

std::string Vec::str() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < size(); ++i)
        os << (i ? ", " : "") << c_[i];
    os << ")";
    return os.str();
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows.begin()->size()) : 0;
    Matrix m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c)
            throw DimensionMismatch("ragged row list");
        int j = 0;
        for (long long v : row)
            m(i, j++) = v;
        ++i;
    }
    return m;
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::diagonal(const std::vector<Rational>& d) {
    Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (int i = 0; i < m.rows(); ++i)
        m(i, i) = d[static_cast<size_t>(i)];
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

Vec Matrix::column(int j) const {
    Vec v(rows_);
    for (int i = 0; i < rows_; ++i)
        v[i] = (*this)(i, j);
    return v;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_)
        throw DimensionMismatch("matrix-vector size mismatch");
    Vec out(rows_);
    for (int i = 0; i < rows_; ++i) {
        Rational acc = 0;
        for (int j = 0; j < cols_; ++j)
            acc += (*this)(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (x != 0)
            return false;
    return true;
}

bool Matrix::is_identity() const {
    if (!is_square())
        return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if ((*this)(i, j) != Rational(i == j ? 1 : 0))
                return false;
    return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatch("matrix shapes differ");
    for (size_t i = 0; i < e_.size(); ++i)
        e_[i] += o.e_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatch("matrix shapes differ");
    for (size_t i = 0; i < e_.size(); ++i)
        e_[i] -= o.e_[i];
    return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
    for (auto& x : e_)
        x *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("matrix product shapes differ");
    Matrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0)
                continue;
            for (int j = 0; j < b.cols(); ++j)
                out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < cols_; ++j)
            os << (j ? " " : "") << (*this)(i, j);
    }
    os << "]";
    return os.str();
}

namespace {

// Clears denominators row by row: returns B with integer entries and the
// per-row scale s so that B = diag(s) * m.
struct ScaledInt {
    std::vector<std::vector<BigInt>> b;
    std::vector<BigInt> row_scale;
};

ScaledInt to_integer_rows(const Matrix& m) {
    ScaledInt out;
    out.b.assign(static_cast<size_t>(m.rows()), std::vector<BigInt>(static_cast<size_t>(m.cols())));
    out.row_scale.assign(static_cast<size_t>(m.rows()), 1);
    for (int i = 0; i < m.rows(); ++i) {
        BigInt l = 1;
        for (int j = 0; j < m.cols(); ++j)
            l = boost::multiprecision::lcm(l, denominator(m(i, j)));
        out.row_scale[static_cast<size_t>(i)] = l;
        for (int j = 0; j < m.cols(); ++j)
            out.b[i][j] = numerator(m(i, j)) * (l / denominator(m(i, j)));
    }
    return out;
}

BigInt exact_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if (q * b != a)
        throw Error("internal: inexact division in fraction-free elimination");
    return q;
}

} // namespace

Matrix invert(const Matrix& m) {
    if (!m.is_square())
        throw DimensionMismatch("invert: matrix is not square");
    const int n = m.rows();
    if (n == 0)
        return Matrix(0, 0);

    // Work on the integer matrix B = diag(s) * m; then m^-1 = B^-1 * diag(s).
    ScaledInt si = to_integer_rows(m);
    std::vector<std::vector<BigInt>> a(static_cast<size_t>(n), std::vector<BigInt>(2 * static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            a[i][j] = si.b[i][j];
        a[i][static_cast<size_t>(n) + i] = 1;
    }

    // One-step fraction-free Gauss-Jordan: after step k every entry is an
    // integer and the previous pivot divides exactly. The left block ends as
    // det(B) * I, the right block as det(B) * B^-1.
    BigInt prev = 1;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (a[i][k] != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            throw NotInvertible("invert: matrix is singular");
        if (piv != k)
            std::swap(a[piv], a[k]);
        const BigInt p = a[k][k];
        for (int i = 0; i < n; ++i) {
            if (i == k)
                continue;
            const BigInt f = a[i][k];
            for (int j = 0; j < 2 * n; ++j) {
                if (j == k) {
                    a[i][j] = 0;
                    continue;
                }
                a[i][j] = exact_div(p * a[i][j] - f * a[k][j], prev);
            }
        }
        prev = p;
    }
    BigInt det = a[0][0]; // all diagonal entries equal det(B) now
    const BigInt det_sign = det < 0 ? -1 : 1;
    det *= det_sign;
    Matrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv(i, j) = Rational(det_sign * a[i][static_cast<size_t>(n) + j] *
                                     si.row_scale[static_cast<size_t>(j)],
                                 det);
    return inv;
}

int rank(const Matrix& m) {
    const int r = m.rows(), c = m.cols();
    if (r == 0 || c == 0)
        return 0;
    ScaledInt si = to_integer_rows(m);
    auto& a = si.b;
    int rk = 0;
    BigInt prev = 1;
    const int steps = std::min(r, c);
    for (int k = 0; k < steps; ++k) {
        // full pivot search (any nonzero entry in the trailing block)
        int pi = -1, pj = -1;
        for (int j = k; j < c && pi < 0; ++j)
            for (int i = k; i < r; ++i)
                if (a[i][j] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0)
            break;
        if (pi != k)
            std::swap(a[pi], a[k]);
        if (pj != k)
            for (int i = 0; i < r; ++i)
                std::swap(a[i][pj], a[i][k]);
        const BigInt p = a[k][k];
        for (int i = k + 1; i < r; ++i) {
            const BigInt f = a[i][k];
            for (int j = k + 1; j < c; ++j)
                a[i][j] = exact_div(p * a[i][j] - f * a[k][j], prev);
            a[i][k] = 0;
        }
        prev = p;
        ++rk;
    }
    return rk;
}

std::vector<Vec> kernel_basis(const Matrix& m) {
    const int r = m.rows(), c = m.cols();
    // plain rational reduced row echelon form
    std::vector<std::vector<Rational>> a(static_cast<size_t>(r), std::vector<Rational>(static_cast<size_t>(c)));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            a[i][j] = m(i, j);
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < c && row < r; ++col) {
        int piv = -1;
        for (int i = row; i < r; ++i)
            if (a[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(a[piv], a[row]);
        const Rational p = a[row][col];
        for (int j = 0; j < c; ++j)
            a[row][j] /= p;
        for (int i = 0; i < r; ++i) {
            if (i == row || a[i][col] == 0)
                continue;
            const Rational f = a[i][col];
            for (int j = 0; j < c; ++j)
                a[i][j] -= f * a[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(static_cast<size_t>(c), false);
    for (int pc : pivot_col)
        is_pivot[static_cast<size_t>(pc)] = true;
    std::vector<Vec> basis;
    for (int free = 0; free < c; ++free) {
        if (is_pivot[static_cast<size_t>(free)])
            continue;
        Vec v(c);
        v[free] = 1;
        for (size_t pr = 0; pr < pivot_col.size(); ++pr)
            v[pivot_col[pr]] = -a[pr][static_cast<size_t>(free)];
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational minor_det(const Matrix& m, const std::vector<int>& row_idx, const std::vector<int>& col_idx) {
    const int n = static_cast<int>(row_idx.size());
    if (n != static_cast<int>(col_idx.size()))
        throw DimensionMismatch("minor_det: index sets differ in size");
    if (n == 0)
        return 1;
    if (n == 1)
        return m(row_idx[0], col_idx[0]);
    if (n == 2)
        return m(row_idx[0], col_idx[0]) * m(row_idx[1], col_idx[1]) -
               m(row_idx[0], col_idx[1]) * m(row_idx[1], col_idx[0]);
    // Laplace expansion along the first row; fine at the small sizes used here.
    Rational acc = 0;
    std::vector<int> sub_rows(row_idx.begin() + 1, row_idx.end());
    for (int j = 0; j < n; ++j) {
        if (m(row_idx[0], col_idx[j]) == 0)
            continue;
        std::vector<int> sub_cols;
        sub_cols.reserve(static_cast<size_t>(n) - 1);
        for (int jj = 0; jj < n; ++jj)
            if (jj != j)
                sub_cols.push_back(col_idx[jj]);
        Rational term = m(row_idx[0], col_idx[j]) * minor_det(m, sub_rows, sub_cols);
        if (j % 2 != 0)
            term = -term;
        acc += term;
    }
    return acc;
}

Matrix matrix_power(const Matrix& m, int k) {
    if (!m.is_square())
        throw DimensionMismatch("matrix_power: matrix is not square");
    Matrix base = k >= 0 ? m : invert(m);
    int e = k >= 0 ? k : -k;
    Matrix acc = Matrix::identity(m.rows());
    for (int i = 0; i < e; ++i)
        acc = acc * base;
    return acc;
}

TwistMap::TwistMap(Matrix forward) : fwd_(std::move(forward)), inv_(invert(fwd_)) {}

} // namespace hombracket
