#include "superbracket/matrix.hpp"

#include <sstream>

#include "superbracket/errors.hpp"

namespace superbracket {

namespace {

void require(bool ok, const char* what)
{
    if (!ok)
        throw DimensionError(what);
}

} // namespace

Vector::Vector(const Field& field, std::initializer_list<long> values) : field_(field)
{
    data_.reserve(values.size());
    for (long v : values)
        data_.emplace_back(field, v);
}

Vector::Vector(const Field& field, std::vector<Scalar> values) : field_(field), data_(std::move(values))
{
    for (const auto& s : data_)
        if (!(s.field() == field))
            throw FieldError("vector entry from another field");
}

Vector Vector::unit(const Field& field, std::size_t size, std::size_t index)
{
    Vector v(field, size);
    v[index] = Scalar::one(field);
    return v;
}

bool Vector::is_zero() const
{
    for (const auto& s : data_)
        if (!s.is_zero())
            return false;
    return true;
}

Vector& Vector::operator+=(const Vector& rhs)
{
    require(size() == rhs.size(), "vector sizes differ");
    for (std::size_t i = 0; i < size(); ++i)
        data_[i] += rhs.data_[i];
    return *this;
}

Vector& Vector::operator-=(const Vector& rhs)
{
    require(size() == rhs.size(), "vector sizes differ");
    for (std::size_t i = 0; i < size(); ++i)
        data_[i] -= rhs.data_[i];
    return *this;
}

Vector& Vector::operator*=(const Scalar& s)
{
    for (auto& x : data_)
        x *= s;
    return *this;
}

Vector Vector::operator-() const
{
    Vector r = *this;
    for (auto& x : r.data_)
        x = -x;
    return r;
}

bool operator==(const Vector& a, const Vector& b)
{
    return a.field_ == b.field_ && a.data_ == b.data_;
}

std::string Vector::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < size(); ++i)
        os << (i ? ", " : "") << data_[i].to_string();
    os << ')';
    return os.str();
}

Matrix::Matrix(const Field& field, std::initializer_list<std::initializer_list<long>> rows)
    : field_(field), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
{
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        require(r.size() == cols_, "ragged matrix literal");
        for (long v : r)
            data_.emplace_back(field, v);
    }
}

Matrix Matrix::identity(const Field& field, std::size_t n)
{
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = Scalar::one(field);
    return m;
}

Matrix Matrix::diagonal(const Vector& d)
{
    Matrix m(d.field(), d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        m(i, i) = d[i];
    return m;
}

Matrix Matrix::from_columns(const Field& field, std::size_t rows, const std::vector<Vector>& cols)
{
    Matrix m(field, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        require(cols[c].size() == rows, "column length mismatch");
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = cols[c][r];
    }
    return m;
}

Matrix Matrix::from_rows(const Field& field, std::size_t cols, const std::vector<Vector>& rows)
{
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require(rows[r].size() == cols, "row length mismatch");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

Vector Matrix::row(std::size_t r) const
{
    Vector v(field_, cols_);
    for (std::size_t c = 0; c < cols_; ++c)
        v[c] = (*this)(r, c);
    return v;
}

Vector Matrix::column(std::size_t c) const
{
    Vector v(field_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

Matrix Matrix::transpose() const
{
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const
{
    for (const auto& s : data_)
        if (!s.is_zero())
            return false;
    return true;
}

Scalar Matrix::trace() const
{
    require(is_square(), "trace of non-square matrix");
    Scalar t = Scalar::zero(field_);
    for (std::size_t i = 0; i < rows_; ++i)
        t += (*this)(i, i);
    return t;
}

Matrix& Matrix::operator+=(const Matrix& rhs)
{
    require(rows_ == rhs.rows_ && cols_ == rhs.cols_, "matrix shapes differ");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] += rhs.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs)
{
    require(rows_ == rhs.rows_ && cols_ == rhs.cols_, "matrix shapes differ");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] -= rhs.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(const Scalar& s)
{
    for (auto& x : data_)
        x *= s;
    return *this;
}

Matrix Matrix::operator-() const
{
    Matrix r = *this;
    for (auto& x : r.data_)
        x = -x;
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    require(a.cols_ == b.rows_, "matrix product shape mismatch");
    Matrix p(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                p(i, j) += aik * b(k, j);
        }
    return p;
}

Vector operator*(const Matrix& a, const Vector& v)
{
    require(a.cols_ == v.size(), "matrix-vector shape mismatch");
    Vector r(a.field_, a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k)
            if (!v[k].is_zero())
                r[i] += a(i, k) * v[k];
    return r;
}

bool operator==(const Matrix& a, const Matrix& b)
{
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < cols_; ++c)
            os << (c ? ", " : "") << (*this)(r, c).to_string();
        os << ']';
    }
    os << ']';
    return os.str();
}

Matrix commutator(const Matrix& a, const Matrix& b)
{
    return a * b - b * a;
}

Matrix power(const Matrix& m, unsigned exponent)
{
    require(m.is_square(), "power of non-square matrix");
    Matrix r = Matrix::identity(m.field(), m.rows());
    for (unsigned i = 0; i < exponent; ++i)
        r = r * m;
    return r;
}

Matrix direct_sum(const Matrix& a, const Matrix& b)
{
    Matrix s(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            s(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
            s(a.rows() + r, a.cols() + c) = b(r, c);
    return s;
}

} // namespace superbracket
