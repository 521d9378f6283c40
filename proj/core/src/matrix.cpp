#include "terj/matrix.hpp"

#include <sstream>

#include "terj/errors.hpp"

namespace terj {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw OutOfRange("negative matrix dimension");
    data_.assign(static_cast<std::size_t>(rows) * cols, Rational());
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ > 0 ? static_cast<int>(rows.begin()->size()) : 0;
    data_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cols_)
            throw ShapeMismatch("ragged matrix literal");
        for (const auto& x : row) data_.push_back(x);
    }
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::diagonal(const Vec& entries) {
    Matrix m(static_cast<int>(entries.size()), static_cast<int>(entries.size()));
    for (int i = 0; i < m.rows_; ++i) m(i, i) = entries[i];
    return m;
}

Matrix Matrix::unit(int rows, int cols, int r, int c) {
    Matrix m(rows, cols);
    m.at(r, c) = 1;
    return m;
}

const Rational& Matrix::at(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw OutOfRange("matrix index out of range");
    return data_[index(r, c)];
}

Rational& Matrix::at(int r, int c) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw OutOfRange("matrix index out of range");
    return data_[index(r, c)];
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (!is_square()) return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if ((*this)(r, c) != Rational(r == c ? 1 : 0)) return false;
    return true;
}

bool Matrix::is_diagonal() const {
    if (!is_square()) return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (r != c && !(*this)(r, c).is_zero()) return false;
    return true;
}

bool Matrix::is_symmetric() const {
    if (!is_square()) return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = r + 1; c < cols_; ++c)
            if ((*this)(r, c) != (*this)(c, r)) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

Rational Matrix::trace() const {
    if (!is_square()) throw ShapeMismatch("trace of non-square matrix");
    Rational t;
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw ShapeMismatch("matrix addition shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw ShapeMismatch("matrix subtraction shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
    for (auto& x : data_) x *= s;
    return *this;
}

Matrix Matrix::operator-() const {
    Matrix m(*this);
    for (auto& x : m.data_) x = -x;
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
        throw ShapeMismatch("matrix product inner dimension mismatch");
    Matrix r(a.rows_, b.cols_);
    // i-k-j order with zero skipping: representation matrices here are sparse.
    for (int i = 0; i < a.rows_; ++i) {
        for (int k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                const Rational& bkj = b(k, j);
                if (bkj.is_zero()) continue;
                r(i, j) += aik * bkj;
            }
        }
    }
    return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Vec Matrix::apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw ShapeMismatch("matrix-vector shape mismatch");
    Vec out(static_cast<std::size_t>(rows_));
    for (int c = 0; c < cols_; ++c) {
        if (v[c].is_zero()) continue;
        for (int r = 0; r < rows_; ++r) {
            const Rational& m = (*this)(r, c);
            if (!m.is_zero()) out[r] += m * v[c];
        }
    }
    return out;
}

Vec Matrix::flatten() const {
    return data_;
}

Matrix Matrix::unflatten(const Vec& v, int rows, int cols) {
    if (static_cast<int>(v.size()) != rows * cols)
        throw ShapeMismatch("unflatten size mismatch");
    Matrix m(rows, cols);
    m.data_ = v;
    return m;
}

Matrix Matrix::select(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const {
    Matrix m(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
    for (int r = 0; r < m.rows_; ++r)
        for (int c = 0; c < m.cols_; ++c)
            m(r, c) = at(row_idx[r], col_idx[c]);
    return m;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (int ar = 0; ar < a.rows(); ++ar)
        for (int ac = 0; ac < a.cols(); ++ac) {
            const Rational& av = a(ar, ac);
            if (av.is_zero()) continue;
            for (int br = 0; br < b.rows(); ++br)
                for (int bc = 0; bc < b.cols(); ++bc) {
                    const Rational& bv = b(br, bc);
                    if (bv.is_zero()) continue;
                    k(ar * b.rows() + br, ac * b.cols() + bc) = av * bv;
                }
        }
    return k;
}

Matrix commutator(const Matrix& x, const Matrix& y) {
    if (!x.is_square() || !y.is_square() || x.rows() != y.rows())
        throw ShapeMismatch("commutator requires equal square matrices");
    return x * y - y * x;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << "[";
    for (int r = 0; r < m.rows(); ++r) {
        if (r > 0) os << "; ";
        for (int c = 0; c < m.cols(); ++c) {
            if (c > 0) os << " ";
            os << m(r, c);
        }
    }
    os << "]";
    return os;
}

} // namespace terj
