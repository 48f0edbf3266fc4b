#pragma once

#include <vector>

#include "superbracket/errors.hpp"
#include "superbracket/sl2rep.hpp"
#include "superbracket/superalgebra.hpp"

namespace superbracket {

/// Symmetric map g1 x g1 -> g0 as a dense tensor, (u*d1 + v)*d0 + x.
class PTensor {
  public:
    PTensor(const Field& field, std::size_t dim_odd, std::size_t dim_even);

    std::size_t dim_odd() const { return d1_; }
    std::size_t dim_even() const { return d0_; }
    const Scalar& operator()(std::size_t u, std::size_t v, std::size_t x) const { return data_[(u * d1_ + v) * d0_ + x]; }
    /// Writes both (u,v) and (v,u).
    void set(std::size_t u, std::size_t v, std::size_t x, const Scalar& value);
    bool is_zero() const;

  private:
    std::size_t d1_, d0_;
    std::vector<Scalar> data_;
};

PTensor p_tensor_of(const SuperAlgebra& g);

struct AssemblyError : Error {
    AssemblyError(const std::string& what, ValidationReport report) : Error(what), report(std::move(report)) {}
    ValidationReport report;
};

/// g0 + V with rho(e_x) = action[x] and the given P, in the natural mode
/// of the field. Validates and throws AssemblyError on any violation.
SuperAlgebra assemble(const SuperAlgebra& even, const std::vector<Matrix>& action, const PTensor& p);
/// Same, with a 3-dim even part whose basis is read as (E, H, F).
SuperAlgebra assemble(const SuperAlgebra& even, const RepMatrices& rep, const PTensor& p);

/// Quadratic form q on V0 and symplectic form omega on V1.
struct BilinearFormPair {
    Matrix q;
    Matrix omega;
};

/// The operators on V0 + V1 that are super-skew for B = q + omega, in the
/// echelon basis of the solution space (End(V) flattened row-major).
SuperAlgebra build_osp(const BilinearFormPair& forms);

/// sl(2) + k^2, standard action, P(e0,e0) = 2E, P(e0,e1) = -H, P(e1,e1) = -2F.
SuperAlgebra build_osp12(const Field& field);

/// g + (g' + Z_g(g')) with g' = g as a Lie algebra and phi an automorphism.
/// Odd basis: the basis of g', then an echelon basis of Z_g(g').
SuperAlgebra build_double(const SuperAlgebra& g, const Matrix& phi);

/// Appends z odd basis vectors that bracket to zero with everything.
SuperAlgebra add_centre(const SuperAlgebra& g, std::size_t z);

/// Over F_3: sl(2) acting on (e0, e1, v), checked in Char3 mode.
SuperAlgebra build_char3_example();
/// Over F_2: sl(2) acting on a copy of itself by ad, x^2 = (ab + ac + bc) H.
SuperAlgebra build_char2_example();

} // namespace superbracket
