#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "superbracket/errors.hpp"
#include "superbracket/superalgebra.hpp"

namespace superbracket {

/// sl(2,k) in the basis (E, H, F): [E,F] = H, [H,E] = 2E, [H,F] = -2F.
SuperAlgebra sl2_algebra(const Field& field);

/// E, H, F as coordinate vectors in the even part of some host algebra.
struct Sl2Triple {
    Vector e, h, f;
};

/// The triple (E, H, F) = (e_0, e_1, e_2) of sl2_algebra().
Sl2Triple standard_triple(const Field& field);

/// [E,F] = H, [H,E] = 2E, [H,F] = -2F inside the even part of g.
bool verify_triple(const SuperAlgebra& g, const Sl2Triple& t);

enum class TripleSearchStatus {
    Found,
    /// Exhaustive search over F_p found nothing: g0 is not split.
    NotSplit,
    /// Bounded search gave up; nothing is claimed about split-ness.
    Undetermined,
};

struct TripleSearchOptions {
    /// Prime fields up to this size are searched exhaustively.
    std::uint64_t max_exhaustive_prime = 13;
    /// Otherwise candidates are the basis vectors, then integer
    /// combinations with coefficients in [-rational_bound, rational_bound],
    /// by max-norm then lexicographically.
    long rational_bound = 4;
};

struct TripleSearchResult {
    TripleSearchStatus status = TripleSearchStatus::Undetermined;
    std::optional<Sl2Triple> triple;
    std::string note;
};

/// Looks for x in g0 whose ad(x) has nonzero eigenvalues +-nu in k, sets
/// H = 2x/nu and solves for E, F in the +-2 eigenspaces of ad(H).
/// Requires a 3-dimensional simple even part (PreconditionError otherwise).
TripleSearchResult find_sl2_triple(const SuperAlgebra& g, const TripleSearchOptions& options = {});

/// Parameters of the weight module V(m, alpha, beta), dim m+1.
struct IrrepSpec {
    unsigned m = 0;
    Scalar alpha;
    Scalar beta;
};

/// Canonical spec for char 0 / small dims: alpha = [m], beta = 0.
IrrepSpec integral_spec(unsigned m, const Field& field);

/// Images of E, H, F under a representation.
struct RepMatrices {
    Matrix e, h, f;
    const Field& field() const { return e.field(); }
    std::size_t dim() const { return e.rows(); }
};

struct IrrepSpecError : Error {
    IrrepSpecError(const std::string& clause, const std::string& what) : Error(what), clause(clause) {}
    /// "b" (char 0), "c-dim" (dim <= p), "c-small" (dim < p), "c-boundary" (dim = p, integral alpha).
    std::string clause;
};

/// The module with basis e_0..e_m and
///   H e_i = (alpha - 2[i]) e_i,
///   E e_0 = 0,  E e_i = [i](alpha - [i] + 1) e_{i-1},
///   F e_i = e_{i+1} (i < m),  F e_m = beta e_0.
/// No admissibility checks; see build_irrep.
RepMatrices weight_module(unsigned m, const Scalar& alpha, const Scalar& beta);

/// weight_module after enforcing the constraints irreducible modules obey.
RepMatrices build_irrep(const IrrepSpec& spec, const Field& field);

bool satisfies_triple_relations(const RepMatrices& rep);

RepMatrices trivial_rep(std::size_t dim, const Field& field);
RepMatrices direct_sum(const RepMatrices& a, const RepMatrices& b);
/// basis^-1 rho basis.
RepMatrices conjugate(const RepMatrices& rep, const Matrix& basis);
/// rho(E), rho(H), rho(F) for a triple in the even part of g acting on g1.
RepMatrices rep_from_algebra(const SuperAlgebra& g, const Sl2Triple& t);

/// Subspace of sl(2,k), in (E,H,F) coordinates, killing e_i.
std::vector<Vector> annihilator(const IrrepSpec& spec, std::size_t i, const Field& field);

/// (H + Id)^2 + 4 F E.
Matrix casimir(const RepMatrices& rep);

enum class JacobsonVerdict { SufficientForCompleteReducibility, Inconclusive, CharZero };
std::string to_string(JacobsonVerdict v);

JacobsonVerdict jacobson_test(const RepMatrices& rep);

/// Echelon basis of the smallest submodule containing the vectors.
std::vector<Vector> generated_submodule(const RepMatrices& rep, const std::vector<Vector>& vectors);

struct Summand {
    /// v, Fv, ..., F^m v for a highest-weight vector v.
    std::vector<Vector> basis;
    IrrepSpec spec;
};

/// Splits a completely reducible module (jacobson_test Sufficient or
/// CharZero) into irreducibles, ordered by highest weight descending then
/// echelon order within each weight.
std::vector<Summand> decompose(const RepMatrices& rep);

struct CompositionSeries {
    /// Bases of V_1 < V_2 < ... < V_n = V.
    std::vector<std::vector<Vector>> flag;
    std::vector<std::size_t> factor_dims;
    /// Largest submodule on which E, H, F all vanish.
    std::vector<Vector> trivial_submodule;
};

/// Greedy series: each step adds the least-dimensional irreducible
/// submodule of the current quotient. Over F_p candidate generators are
/// enumerated projectively; `budget` caps that enumeration (BudgetError).
CompositionSeries composition_series(const RepMatrices& rep, std::size_t budget = 200000);

/// Whether a nonzero proper submodule exists. Needs rho(E) nilpotent.
bool has_proper_submodule(const RepMatrices& rep, std::size_t budget = 200000);

} // namespace superbracket
