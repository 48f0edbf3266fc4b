#include "superbracket/linalg.hpp"

#include <stdexcept>

#include "superbracket/errors.hpp"

namespace superbracket::linalg {

Echelon rref(const Matrix& m)
{
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t sel = row;
        while (sel < a.rows() && a(sel, col).is_zero())
            ++sel;
        if (sel == a.rows())
            continue;
        if (sel != row)
            for (std::size_t c = 0; c < a.cols(); ++c)
                std::swap(a(sel, c), a(row, c));
        Scalar inv = a(row, col).inverse();
        for (std::size_t c = col; c < a.cols(); ++c)
            a(row, c) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col).is_zero())
                continue;
            Scalar factor = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c)
                if (!a(row, c).is_zero())
                    a(r, c) -= factor * a(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m)
{
    return rref(m).pivots.size();
}

std::vector<Vector> kernel_basis(const Matrix& m)
{
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vector v(m.field(), m.cols());
        v[free] = Scalar::one(m.field());
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            v[e.pivots[i]] = -e.reduced(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> solve_linear(const Matrix& m, const Vector& b)
{
    if (m.rows() != b.size())
        throw DimensionError("solve_linear: right-hand side has " + std::to_string(b.size()) + " entries, matrix has " +
                             std::to_string(m.rows()) + " rows");
    Matrix aug(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    Echelon e = rref(aug);
    if (!e.pivots.empty() && e.pivots.back() == m.cols())
        return std::nullopt;
    Vector x(m.field(), m.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
        x[e.pivots[i]] = e.reduced(i, m.cols());
    return x;
}

std::vector<Vector> eigenspace(const Matrix& m, const Scalar& lambda)
{
    if (!m.is_square())
        throw DimensionError("eigenspace of a non-square matrix");
    return kernel_basis(m - lambda * Matrix::identity(m.field(), m.rows()));
}

Scalar determinant(const Matrix& m)
{
    if (!m.is_square())
        throw DimensionError("determinant of a non-square matrix");
    Matrix a = m;
    Scalar det = Scalar::one(m.field());
    std::size_t n = a.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && a(sel, col).is_zero())
            ++sel;
        if (sel == n)
            return Scalar::zero(m.field());
        if (sel != col) {
            for (std::size_t c = 0; c < n; ++c)
                std::swap(a(sel, c), a(col, c));
            det = -det;
        }
        det *= a(col, col);
        Scalar inv = a(col, col).inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a(r, col).is_zero())
                continue;
            Scalar factor = a(r, col) * inv;
            for (std::size_t c = col; c < n; ++c)
                a(r, c) -= factor * a(col, c);
        }
    }
    return det;
}

Matrix inverse(const Matrix& m)
{
    if (!m.is_square())
        throw DimensionError("inverse of a non-square matrix");
    std::size_t n = m.rows();
    Matrix aug(m.field(), n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            aug(r, c) = m(r, c);
        aug(r, n + r) = Scalar::one(m.field());
    }
    Echelon e = rref(aug);
    if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1))
        throw std::domain_error("matrix is singular");
    Matrix inv(m.field(), n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv(r, c) = e.reduced(r, n + c);
    return inv;
}

bool is_invertible(const Matrix& m)
{
    return m.is_square() && rank(m) == m.rows();
}

std::vector<Vector> span_basis(const Field& field, std::size_t dim, const std::vector<Vector>& vectors)
{
    if (vectors.empty())
        return {};
    Echelon e = rref(Matrix::from_rows(field, dim, vectors));
    std::vector<Vector> basis;
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
        basis.push_back(e.reduced.row(i));
    return basis;
}

std::optional<Vector> coordinates(const std::vector<Vector>& basis, const Vector& v)
{
    if (basis.empty()) {
        if (v.is_zero())
            return Vector(v.field(), 0);
        return std::nullopt;
    }
    return solve_linear(Matrix::from_columns(v.field(), v.size(), basis), v);
}

bool in_span(const std::vector<Vector>& basis, const Vector& v)
{
    return coordinates(basis, v).has_value();
}

Matrix stack(const std::vector<Matrix>& ms)
{
    if (ms.empty())
        throw DimensionError("stack of no matrices");
    std::size_t rows = 0;
    for (const auto& m : ms) {
        if (m.cols() != ms.front().cols())
            throw DimensionError("stacked matrices differ in column count");
        rows += m.rows();
    }
    Matrix s(ms.front().field(), rows, ms.front().cols());
    std::size_t at = 0;
    for (const auto& m : ms)
        for (std::size_t r = 0; r < m.rows(); ++r, ++at)
            for (std::size_t c = 0; c < m.cols(); ++c)
                s(at, c) = m(r, c);
    return s;
}

std::vector<Vector> common_kernel(const std::vector<Matrix>& ms)
{
    return kernel_basis(stack(ms));
}

} // namespace superbracket::linalg
