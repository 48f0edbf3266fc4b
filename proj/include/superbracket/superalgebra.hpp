#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "superbracket/matrix.hpp"

namespace superbracket {

/// Which axiom list a superalgebra is checked against.
///
/// Standard: super-antisymmetry and super-Jacobi, char not 2 or 3.
/// Char3: Standard plus {x,{x,x}} = 0 on odd x, char 3 only.
/// Char2: squaring-map formulation, char 2 only.
enum class AxiomMode { Standard, Char3, Char2 };

std::string to_string(AxiomMode mode);
AxiomMode parse_axiom_mode(const std::string& text);
/// The mode a field of this characteristic must use.
AxiomMode natural_mode(const Field& field);

/// Finite-dimensional Lie superalgebra g0 + g1 given by structure constants.
///
/// Basis e_0..e_{d0-1} of g0 and v_0..v_{d1-1} of g1. Stored tensors:
///   bracket(i,j,k): coefficient of e_k in [e_i, e_j]        (antisymmetric in i,j)
///   action(x,v,w):  coefficient of v_w in e_x(v_v)
///   p(u,v,x):       coefficient of e_x in {v_u, v_v}          (symmetric in u,v)
///   square(v,w,x):  Char2 only, coefficient of e_x at t_v t_w in (sum t_a v_a)^2, v <= w
///
/// Symmetries are structural: the builder writes both mirrored slots, so a
/// built algebra cannot violate them. Values are immutable after build().
class SuperAlgebra {
  public:
    class Builder {
      public:
        Builder(const Field& field, std::size_t dim_even, std::size_t dim_odd, AxiomMode mode);

        /// Sets [e_i, e_j] component k and mirrors -value into [e_j, e_i].
        Builder& bracket(std::size_t i, std::size_t j, std::size_t k, const Scalar& value);
        Builder& action(std::size_t x, std::size_t v, std::size_t w, const Scalar& value);
        /// Sets {v_u, v_v} component x and its mirror. Not allowed in Char2 mode.
        Builder& p(std::size_t u, std::size_t v, std::size_t x, const Scalar& value);
        /// Char2 only; (v, w) is unordered.
        Builder& square(std::size_t v, std::size_t w, std::size_t x, const Scalar& value);

        /// Throws ModeError on a mode/characteristic mismatch.
        SuperAlgebra build() const;

      private:
        friend class SuperAlgebra;
        Field field_;
        std::size_t d0_, d1_;
        AxiomMode mode_;
        std::vector<Scalar> c_, a_, p_, s_;
    };

    const Field& field() const { return field_; }
    std::size_t dim_even() const { return d0_; }
    std::size_t dim_odd() const { return d1_; }
    AxiomMode mode() const { return mode_; }

    const Scalar& bracket(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * d0_ + j) * d0_ + k]; }
    const Scalar& action(std::size_t x, std::size_t v, std::size_t w) const { return a_[(x * d1_ + v) * d1_ + w]; }
    const Scalar& p(std::size_t u, std::size_t v, std::size_t x) const { return p_[(u * d1_ + v) * d0_ + x]; }
    const Scalar& square(std::size_t v, std::size_t w, std::size_t x) const;

    /// ad(e_i) on g0; column j is [e_i, e_j].
    Matrix ad(std::size_t i) const;
    /// rho(e_x) on g1; column v is e_x(v_v).
    Matrix rho(std::size_t x) const;
    std::vector<Matrix> action_matrices() const;

    Vector bracket_even(const Vector& x, const Vector& y) const;
    Vector act(const Vector& x, const Vector& v) const;
    Vector p_of(const Vector& u, const Vector& v) const;
    /// Char2 only: v^2 as a quadratic form in the coordinates of v.
    Vector square_of(const Vector& v) const;
    /// ad of an arbitrary even vector.
    Matrix ad_of(const Vector& x) const;
    Matrix rho_of(const Vector& x) const;

    bool p_is_zero() const;
    /// The Lie algebra g0 on its own (d1 = 0), same mode.
    SuperAlgebra even_part() const;

    friend bool operator==(const SuperAlgebra&, const SuperAlgebra&);

  private:
    SuperAlgebra() = default;
    Field field_ = Field::rationals();
    std::size_t d0_ = 0, d1_ = 0;
    AxiomMode mode_ = AxiomMode::Standard;
    std::vector<Scalar> c_, a_, p_, s_;
};

struct Violation {
    /// One of: jacobi_even, representation, relation_1, relation_2,
    /// cubic_axiom, char2_square.
    std::string identity;
    std::vector<std::size_t> witness;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks every axiom for the algebra's mode and lists all failures.
ValidationReport validate(const SuperAlgebra& g);

struct GradedBasis {
    std::vector<Vector> even;
    std::vector<Vector> odd;
};

/// Echelon bases of Z(g) in g0 and in g1.
GradedBasis supercentre(const SuperAlgebra& g);

/// Echelon basis of span{P(u, w) : u in U, w in W} inside g0.
std::vector<Vector> p_span(const SuperAlgebra& g, const std::vector<Vector>& u_basis,
                           const std::vector<Vector>& w_basis);
/// [g0, S] contained in S.
bool is_ideal(const SuperAlgebra& g, const std::vector<Vector>& subspace);

/// K(x, y) = tr(ad x ad y) on g0.
Matrix killing_form(const SuperAlgebra& g);
/// det K != 0; requires dim g0 = 3 (DimensionError otherwise).
bool is_simple_3dim(const SuperAlgebra& g);

/// Candidate graded-linear map source -> target; columns are images of
/// the source basis vectors.
struct MorphismCertificate {
    SuperAlgebra source;
    SuperAlgebra target;
    Matrix even;
    Matrix odd;
};

struct MorphismCheck {
    bool ok = false;
    /// shape, singular_even, singular_odd, bracket_even, action, p_map, squaring
    std::string failure;
    std::vector<std::size_t> witness;
};

/// Verifies phi{x,y} = {phi x, phi y} on all basis pairs and that both
/// blocks are invertible.
MorphismCheck check_morphism(const MorphismCertificate& cert);

/// The algebra written in the basis given by the columns of a_even and
/// a_odd, so (a_even, a_odd) is an isomorphism from the result onto g.
SuperAlgebra change_basis(const SuperAlgebra& g, const Matrix& a_even, const Matrix& a_odd);

} // namespace superbracket
