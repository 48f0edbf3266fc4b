#pragma once

#include <cstdint>
#include <vector>

#include "superbracket/constructions.hpp"

namespace superbracket {

struct PSolutionSpace {
    std::size_t dim = 0;
    /// Echelon in the flattening (u <= v lexicographic, then x).
    std::vector<PTensor> basis;
};

/// All symmetric P : V x V -> g0 turning g0 + V into a Lie superalgebra.
///
/// Relations (cyclic sum P(u,v)w = 0, equivariance of P) are linear in P,
/// and so is the char-3 cubic identity once expanded per monomial, so the
/// solution set is exactly the kernel of one stacked linear system. The
/// unknowns are P(u,v)_x for u <= v; equations are generated only for
/// sorted index patterns. Characteristic 2 is rejected.
PSolutionSpace p_solution_space(const SuperAlgebra& even, const std::vector<Matrix>& action);
/// 3-dim even part in the basis (E, H, F).
PSolutionSpace p_solution_space(const SuperAlgebra& even, const RepMatrices& rep);

/// The stacked system itself; columns follow the unknown order above.
Matrix p_relation_system(const SuperAlgebra& even, const std::vector<Matrix>& action);

struct SweepRow {
    std::uint64_t p = 0;
    /// Irrep dimensions, non-increasing.
    std::vector<unsigned> composition;
    std::size_t dim = 0;
    PSolutionSpace space;
    RepMatrices rep;
};

/// Every direct sum of irreducibles V(m, [m], 0), m+1 <= p, of total
/// dimension <= max_odd_dim, against sl(2, F_p). Rows are ordered by total
/// dimension, then composition in decreasing lexicographic order.
/// p must be 5 or 7 and max_odd_dim <= 8 (BudgetError otherwise).
std::vector<SweepRow> enumerate_reps_and_solve(std::uint64_t p, std::size_t max_odd_dim);

} // namespace superbracket
