#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "superbracket/field.hpp"

namespace superbracket {

/// Dense vector of scalars over one field.
class Vector {
  public:
    Vector() = default;
    Vector(const Field& field, std::size_t size) : field_(field), data_(size, Scalar::zero(field)) {}
    Vector(const Field& field, std::initializer_list<long> values);
    Vector(const Field& field, std::vector<Scalar> values);

    static Vector unit(const Field& field, std::size_t size, std::size_t index);

    const Field& field() const { return field_; }
    std::size_t size() const { return data_.size(); }
    Scalar& operator[](std::size_t i) { return data_[i]; }
    const Scalar& operator[](std::size_t i) const { return data_[i]; }
    auto begin() const { return data_.begin(); }
    auto end() const { return data_.end(); }

    bool is_zero() const;

    Vector& operator+=(const Vector& rhs);
    Vector& operator-=(const Vector& rhs);
    Vector& operator*=(const Scalar& s);
    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    friend Vector operator*(const Scalar& s, Vector v) { return v *= s; }
    Vector operator-() const;

    friend bool operator==(const Vector& a, const Vector& b);
    friend bool operator!=(const Vector& a, const Vector& b) { return !(a == b); }

    std::string to_string() const;

  private:
    Field field_ = Field::rationals();
    std::vector<Scalar> data_;
};

/// Dense row-major matrix.
class Matrix {
  public:
    Matrix() = default;
    Matrix(const Field& field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field))
    {
    }
    Matrix(const Field& field, std::initializer_list<std::initializer_list<long>> rows);

    static Matrix identity(const Field& field, std::size_t n);
    static Matrix diagonal(const Vector& d);
    /// Matrix whose columns are the given vectors (all of length `rows`).
    static Matrix from_columns(const Field& field, std::size_t rows, const std::vector<Vector>& cols);
    static Matrix from_rows(const Field& field, std::size_t cols, const std::vector<Vector>& rows);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    Matrix transpose() const;
    bool is_zero() const;
    Scalar trace() const;

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(const Scalar& s);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Scalar& s, Matrix m) { return m *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& v);
    Matrix operator-() const;

    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::string to_string() const;

  private:
    Field field_ = Field::rationals();
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Matrix commutator(const Matrix& a, const Matrix& b);
Matrix power(const Matrix& m, unsigned exponent);
/// Block-diagonal sum.
Matrix direct_sum(const Matrix& a, const Matrix& b);

} // namespace superbracket
