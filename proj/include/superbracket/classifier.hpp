#pragma once

#include <optional>
#include <string>

#include "superbracket/sl2rep.hpp"
#include "superbracket/superalgebra.hpp"

namespace superbracket {

enum class CaseTag { A, B, C, NotApplicable, Undetermined };
std::string to_string(CaseTag tag);

struct ClassificationResult {
    CaseTag tag = CaseTag::NotApplicable;
    std::string reason;
    /// dim of the odd supercentre.
    std::size_t centre_dim = 0;
    /// B and C: canonical model -> g, already checked.
    std::optional<MorphismCertificate> certificate;
    std::optional<SuperAlgebra> canonical;
    /// char p > 0 with P nonzero: the restrictedness corollary applies.
    bool restricted_corollary_applies = false;
};

struct ClassifyOptions {
    TripleSearchOptions triple;
};

/// Decides which of the three cases g falls under:
///   A: {g1, g1} = 0,
///   B: g = g0 + (g0 + k) + Z(g)   (the double of g0 with phi = id),
///   C: g = osp(1|2) + Z(g).
/// Works on the quotient g1 / Z1, Z1 the odd supercentre: it is 2-dim in
/// case C and 4-dim in case B. Inputs outside standard mode, or whose even
/// part is not 3-dim simple, come back NotApplicable. Throws
/// PreconditionError if g does not validate.
ClassificationResult classify(const SuperAlgebra& g, const ClassifyOptions& options = {});

/// g is simple iff it is osp(1|2) (case C, no centre) or g1 = 0.
bool is_simple_superalgebra(const SuperAlgebra& g, const ClassifyOptions& options = {});

} // namespace superbracket
