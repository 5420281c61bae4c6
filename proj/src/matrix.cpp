#include "ambiskew/matrix.hpp"

#include "ambiskew/errors.hpp"

namespace ambiskew {

namespace {

void require_shape(bool ok, const char* what)
{
    if (!ok) {
        throw InvalidArgument(std::string("matrix shape mismatch in ") + what);
    }
}

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
        std::size_t p = row;
        while (p < m.rows() && m(p, c).is_zero()) {
            ++p;
        }
        if (p == m.rows()) {
            continue;
        }
        if (p != row) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                std::swap(m(p, j), m(row, j));
            }
        }
        const Scalar inv = m(row, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) {
            m(row, j) *= inv;
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, c).is_zero()) {
                continue;
            }
            const Scalar f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) {
                if (!m(row, j).is_zero()) {
                    m(i, j) -= f * m(row, j);
                }
            }
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

} // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, Scalar(field_))
{
}

Matrix Matrix::identity(Field field, std::size_t n)
{
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = Scalar::integer(field, 1);
    }
    return m;
}

Matrix Matrix::diagonal(Field field, const Vector& d)
{
    Matrix m(std::move(field), d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        m(i, i) = d[i];
    }
    return m;
}

Matrix Matrix::from_columns(Field field, std::size_t rows, const std::vector<Vector>& cols)
{
    Matrix m(std::move(field), rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        require_shape(cols[j].size() == rows, "from_columns");
        for (std::size_t i = 0; i < rows; ++i) {
            m(i, j) = cols[j][i];
        }
    }
    return m;
}

Vector Matrix::column(std::size_t j) const
{
    Vector v(rows_, Scalar(field_));
    for (std::size_t i = 0; i < rows_; ++i) {
        v[i] = (*this)(i, j);
    }
    return v;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    require_shape(r0 + nr <= rows_ && c0 + nc <= cols_, "block");
    Matrix b(field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
        for (std::size_t j = 0; j < nc; ++j) {
            b(i, j) = (*this)(r0 + i, c0 + j);
        }
    }
    return b;
}

Matrix Matrix::transpose() const
{
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

bool Matrix::is_zero() const
{
    for (const auto& x : data_) {
        if (!x.is_zero()) {
            return false;
        }
    }
    return true;
}

Matrix& Matrix::operator+=(const Matrix& rhs)
{
    require_shape(rows_ == rhs.rows_ && cols_ == rhs.cols_, "addition");
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] += rhs.data_[k];
    }
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs)
{
    require_shape(rows_ == rhs.rows_ && cols_ == rhs.cols_, "subtraction");
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] -= rhs.data_[k];
    }
    return *this;
}

Matrix& Matrix::operator*=(const Scalar& c)
{
    for (auto& x : data_) {
        x *= c;
    }
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    require_shape(a.cols_ == b.rows_, "product");
    Matrix c(a.field_ ? a.field_ : b.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (!b(k, j).is_zero()) {
                    c(i, j) += x * b(k, j);
                }
            }
        }
    }
    return c;
}

Vector operator*(const Matrix& a, const Vector& v)
{
    require_shape(a.cols_ == v.size(), "matrix-vector product");
    Vector out(a.rows_, Scalar(a.field_));
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (!a(i, k).is_zero() && !v[k].is_zero()) {
                out[i] += a(i, k) * v[k];
            }
        }
    }
    return out;
}

bool operator==(const Matrix& a, const Matrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix Matrix::pow(unsigned n) const
{
    require_shape(rows_ == cols_, "power");
    Matrix result = identity(field_, rows_);
    Matrix base = *this;
    while (n) {
        if (n & 1U) {
            result = result * base;
        }
        n >>= 1U;
        if (n) {
            base = base * base;
        }
    }
    return result;
}

std::vector<std::vector<std::string>> Matrix::to_strings() const
{
    std::vector<std::vector<std::string>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out[i].push_back((*this)(i, j).to_string());
        }
    }
    return out;
}

std::size_t rank(Matrix m)
{
    return rref(m).size();
}

std::vector<Vector> kernel(Matrix m)
{
    const auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) {
        is_pivot[p] = true;
    }
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) {
            continue;
        }
        Vector v(m.cols(), Scalar(m.field()));
        v[f] = Scalar::integer(m.field(), 1);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = -m(r, f);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix inverse(const Matrix& m)
{
    require_shape(m.rows() == m.cols(), "inverse");
    const std::size_t n = m.rows();
    Matrix aug(m.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            aug(i, j) = m(i, j);
        }
        aug(i, n + i) = Scalar::integer(m.field(), 1);
    }
    const auto pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] >= n) {
        throw MathRefusal("matrix is singular");
    }
    return aug.block(0, n, n, n);
}

std::optional<Vector> solve(const Matrix& a, const Vector& b)
{
    require_shape(a.rows() == b.size(), "solve");
    Matrix aug(a.field(), a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            aug(i, j) = a(i, j);
        }
        aug(i, a.cols()) = b[i];
    }
    const auto pivots = rref(aug);
    Vector x(a.cols(), Scalar(a.field()));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == a.cols()) {
            return std::nullopt;
        }
        x[pivots[r]] = aug(r, a.cols());
    }
    return x;
}

} // namespace ambiskew
