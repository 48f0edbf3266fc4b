#include "superbracket/classifier.hpp"

#include "superbracket/constructions.hpp"
#include "superbracket/linalg.hpp"

namespace superbracket {

std::string to_string(CaseTag tag)
{
    switch (tag) {
    case CaseTag::A:
        return "A";
    case CaseTag::B:
        return "B";
    case CaseTag::C:
        return "C";
    case CaseTag::NotApplicable:
        return "not_applicable";
    case CaseTag::Undetermined:
        return "undetermined";
    }
    return "not_applicable";
}

namespace {

ClassificationResult not_applicable(std::string reason)
{
    ClassificationResult r;
    r.tag = CaseTag::NotApplicable;
    r.reason = std::move(reason);
    return r;
}

// span of rho(x) v over all basis x, v.
std::vector<Vector> action_image(const SuperAlgebra& g)
{
    std::vector<Vector> cols;
    for (const auto& m : g.action_matrices())
        for (std::size_t c = 0; c < m.cols(); ++c)
            cols.push_back(m.column(c));
    return linalg::span_basis(g.field(), g.dim_odd(), cols);
}

Matrix odd_block(const Field& f, std::size_t d1, const std::vector<Vector>& cols)
{
    return Matrix::from_columns(f, d1, cols);
}

void certify(ClassificationResult& r, SuperAlgebra canonical, const SuperAlgebra& g, Matrix even, Matrix odd)
{
    MorphismCertificate cert{canonical, g, std::move(even), std::move(odd)};
    auto check = check_morphism(cert);
    if (!check.ok)
        throw Error("classifier built a certificate that fails check_morphism (" + check.failure + ")");
    r.certificate = std::move(cert);
    r.canonical = std::move(canonical);
}

// Odd part modulo the centre is the standard module.
void classify_osp(ClassificationResult& r, const SuperAlgebra& g, const std::vector<Vector>& centre,
                  const ClassifyOptions& options)
{
    const Field& f = g.field();
    std::size_t d1 = g.dim_odd();
    auto search = find_sl2_triple(g, options.triple);
    if (search.status == TripleSearchStatus::Undetermined) {
        r.tag = CaseTag::Undetermined;
        r.reason = "sl2-triple search exhausted its budget: " + search.note;
        return;
    }
    if (search.status == TripleSearchStatus::NotSplit) {
        // A faithful 2-dim module forces g0 to be split.
        r = not_applicable("2-dim odd quotient over a non-split even part; check inputs/characteristic");
        return;
    }
    const Sl2Triple& t = *search.triple;
    RepMatrices rho = rep_from_algebra(g, t);

    // e0: the highest-weight vector of the non-central summand.
    auto w = action_image(g);
    Matrix wm = Matrix::from_columns(f, d1, w);
    Matrix shifted = rho.h - Matrix::identity(f, d1);
    auto coeffs = linalg::common_kernel({rho.e * wm, shifted * wm});
    if (w.size() != 2 || coeffs.size() != 1) {
        r = not_applicable("odd quotient of dim 2 is not the standard module; check inputs/characteristic");
        return;
    }
    Vector e0 = wm * coeffs[0];
    Vector e1 = rho.f * e0;
    auto gamma_coords = linalg::coordinates({t.h}, g.p_of(e0, e1));
    if (!gamma_coords || (*gamma_coords)[0].is_zero()) {
        r = not_applicable("P(e0, e1) is not a nonzero multiple of H; check inputs/characteristic");
        return;
    }
    Scalar gamma = (*gamma_coords)[0];
    Scalar gamma_inv = gamma.inverse();

    // With E' = -gamma E, F' = -F / gamma and e1' = -e1 / gamma the
    // constants become those of osp(1|2): P(e0,e0) = 2E', P(e0,e1') = -H,
    // P(e1',e1') = -2F'.
    Matrix even = Matrix::from_columns(f, 3, {-(gamma * t.e), t.h, -(gamma_inv * t.f)});
    std::vector<Vector> odd_cols{e0, -(gamma_inv * e1)};
    odd_cols.insert(odd_cols.end(), centre.begin(), centre.end());
    r.tag = CaseTag::C;
    certify(r, add_centre(build_osp12(f), centre.size()), g, even, odd_block(f, d1, odd_cols));
}

// Odd part modulo the centre is adjoint + trivial.
void classify_double(ClassificationResult& r, const SuperAlgebra& g, const std::vector<Vector>& centre)
{
    const Field& f = g.field();
    std::size_t d1 = g.dim_odd();
    auto w = action_image(g);
    auto invariants = linalg::common_kernel(g.action_matrices());
    if (w.size() != 3 || invariants.size() != centre.size() + 1) {
        r = not_applicable("odd quotient of dim 4 is not adjoint plus trivial; check inputs/characteristic");
        return;
    }
    const Vector* v = nullptr;
    for (const auto& cand : invariants)
        if (!linalg::in_span(centre, cand)) {
            v = &cand;
            break;
        }

    // theta : g0 -> g1 with theta ad(x) = rho(x) theta; unknowns theta(r, c)
    // flattened r*3 + c.
    std::vector<Vector> rows;
    for (std::size_t x = 0; x < 3; ++x) {
        Matrix adx = g.ad(x);
        Matrix rhox = g.rho(x);
        for (std::size_t row = 0; row < d1; ++row)
            for (std::size_t c = 0; c < 3; ++c) {
                Vector eq(f, d1 * 3);
                for (std::size_t k = 0; k < 3; ++k)
                    eq[row * 3 + k] += adx(k, c);
                for (std::size_t k = 0; k < d1; ++k)
                    eq[k * 3 + c] -= rhox(row, k);
                rows.push_back(eq);
            }
    }
    auto sols = linalg::kernel_basis(Matrix::from_rows(f, d1 * 3, rows));
    if (sols.size() != 1) {
        r = not_applicable("no unique equivariant map from g0 onto the adjoint summand; check inputs/characteristic");
        return;
    }
    std::vector<Vector> theta;
    for (std::size_t c = 0; c < 3; ++c) {
        Vector col(f, d1);
        for (std::size_t row = 0; row < d1; ++row)
            col[row] = sols[0][row * 3 + c];
        theta.push_back(col);
    }
    auto lam = linalg::coordinates({Vector::unit(f, 3, 0)}, g.p_of(*v, theta[0]));
    if (!lam || (*lam)[0].is_zero()) {
        r = not_applicable("P(v, theta(e_0)) is not a nonzero multiple of e_0; check inputs/characteristic");
        return;
    }
    // P(v, theta(e_i)) = lambda e_i; rescale v so lambda becomes 1.
    Scalar lam_inv = (*lam)[0].inverse();
    std::vector<Vector> odd_cols = theta;
    odd_cols.push_back(lam_inv * *v);
    odd_cols.insert(odd_cols.end(), centre.begin(), centre.end());

    SuperAlgebra even_part = g.even_part();
    SuperAlgebra dbl = build_double(even_part, Matrix::identity(f, 3));
    r.tag = CaseTag::B;
    certify(r, add_centre(dbl, centre.size()), g, Matrix::identity(f, 3), odd_block(f, d1, odd_cols));
}

} // namespace

ClassificationResult classify(const SuperAlgebra& g, const ClassifyOptions& options)
{
    if (g.mode() != AxiomMode::Standard)
        return not_applicable("axiom mode " + to_string(g.mode()) +
                              ": the classification needs characteristic other than 2 and 3");
    if (g.dim_even() != 3)
        return not_applicable("even part has dimension " + std::to_string(g.dim_even()) + ", not 3");
    if (!is_simple_3dim(g))
        return not_applicable("even part is not simple (degenerate Killing form)");
    auto report = validate(g);
    if (!report.ok())
        throw PreconditionError("classify needs a valid Lie superalgebra; " + std::to_string(report.violations.size()) +
                                " violations, first: " + report.violations.front().identity);

    auto centre = supercentre(g).odd;
    ClassificationResult r;
    r.centre_dim = centre.size();
    r.restricted_corollary_applies = g.field().characteristic() != 0 && !g.p_is_zero();
    if (g.p_is_zero()) {
        r.tag = CaseTag::A;
        return r;
    }

    // Action and P descend to g1 / Z1: Z1 is killed by g0 and pairs to zero.
    for (const auto& z : centre)
        for (std::size_t x = 0; x < 3; ++x)
            if (!g.act(Vector::unit(g.field(), 3, x), z).is_zero())
                throw Error("supercentre vector moved by the even part");
    std::vector<Vector> all_odd;
    for (std::size_t i = 0; i < g.dim_odd(); ++i)
        all_odd.push_back(Vector::unit(g.field(), g.dim_odd(), i));
    if (!p_span(g, centre, all_odd).empty())
        throw Error("supercentre vector pairs nontrivially under P");

    std::size_t quotient = g.dim_odd() - centre.size();
    if (quotient == 2)
        classify_osp(r, g, centre, options);
    else if (quotient == 4)
        classify_double(r, g, centre);
    else
        return not_applicable("odd part modulo the centre has dimension " + std::to_string(quotient) +
                              " with P nonzero; classification theorem violated, check inputs/characteristic");
    if (r.tag == CaseTag::NotApplicable || r.tag == CaseTag::Undetermined)
        r.centre_dim = centre.size();
    return r;
}

bool is_simple_superalgebra(const SuperAlgebra& g, const ClassifyOptions& options)
{
    auto r = classify(g, options);
    switch (r.tag) {
    case CaseTag::C:
        return r.centre_dim == 0;
    case CaseTag::A:
        return g.dim_odd() == 0;
    case CaseTag::B:
        return false;
    default:
        throw PreconditionError("classification not available: " + r.reason);
    }
}

} // namespace superbracket
