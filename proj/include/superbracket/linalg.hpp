#pragma once

#include <optional>
#include <vector>

#include "superbracket/matrix.hpp"

namespace superbracket::linalg {

/// Reduced row echelon form together with its pivot columns.
///
/// Pivoting is deterministic: columns are scanned left to right and the
/// first row (at or below the current one) with a nonzero entry is used.
/// Every basis and certificate downstream inherits this ordering.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis of {v : Mv = 0}. One vector per free column in increasing order,
/// with that free variable set to 1 and the other free variables 0.
std::vector<Vector> kernel_basis(const Matrix& m);

/// One particular solution of Mx = b, or nullopt if inconsistent.
std::optional<Vector> solve_linear(const Matrix& m, const Vector& b);

/// kernel_basis(M - lambda * Id).
std::vector<Vector> eigenspace(const Matrix& m, const Scalar& lambda);

Scalar determinant(const Matrix& m);
/// Throws std::domain_error when singular.
Matrix inverse(const Matrix& m);
bool is_invertible(const Matrix& m);

/// Echelon (RREF row) basis of the span of the given vectors.
std::vector<Vector> span_basis(const Field& field, std::size_t dim, const std::vector<Vector>& vectors);

bool in_span(const std::vector<Vector>& basis, const Vector& v);

/// Coordinates of v in a linearly independent family, or nullopt if v lies
/// outside its span.
std::optional<Vector> coordinates(const std::vector<Vector>& basis, const Vector& v);

/// Common kernel of several matrices with the same column count.
std::vector<Vector> common_kernel(const std::vector<Matrix>& ms);

/// Stack matrices vertically.
Matrix stack(const std::vector<Matrix>& ms);

} // namespace superbracket::linalg
