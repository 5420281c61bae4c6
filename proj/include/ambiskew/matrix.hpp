#pragma once

#include <string>
#include <vector>

#include "ambiskew/scalar.hpp"

namespace ambiskew {

using Vector = std::vector<Scalar>;

/// Dense matrix over the coefficient field, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(Field field, std::size_t rows, std::size_t cols);

    static Matrix identity(Field field, std::size_t n);
    static Matrix diagonal(Field field, const Vector& d);
    static Matrix from_columns(Field field, std::size_t rows, const std::vector<Vector>& cols);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector column(std::size_t j) const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    Matrix transpose() const;
    bool is_zero() const;

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(const Scalar& c);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Scalar& c) { return a *= c; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& v);
    friend bool operator==(const Matrix& a, const Matrix& b);

    Matrix pow(unsigned n) const;

    // Row-major entries in canonical text.
    std::vector<std::vector<std::string>> to_strings() const;

private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

std::size_t rank(Matrix m);
// Basis of the right kernel, one vector per free column.
std::vector<Vector> kernel(Matrix m);
// Throws MathRefusal when singular.
Matrix inverse(const Matrix& m);
// x with a x = b, if any.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

} // namespace ambiskew
