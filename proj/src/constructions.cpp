#include "superbracket/constructions.hpp"

#include "superbracket/linalg.hpp"

namespace superbracket {

PTensor::PTensor(const Field& field, std::size_t dim_odd, std::size_t dim_even)
    : d1_(dim_odd), d0_(dim_even), data_(dim_odd * dim_odd * dim_even, Scalar::zero(field))
{
}

void PTensor::set(std::size_t u, std::size_t v, std::size_t x, const Scalar& value)
{
    if (u >= d1_ || v >= d1_ || x >= d0_)
        throw DimensionError("PTensor index out of range");
    data_[(u * d1_ + v) * d0_ + x] = value;
    data_[(v * d1_ + u) * d0_ + x] = value;
}

bool PTensor::is_zero() const
{
    for (const auto& s : data_)
        if (!s.is_zero())
            return false;
    return true;
}

PTensor p_tensor_of(const SuperAlgebra& g)
{
    PTensor t(g.field(), g.dim_odd(), g.dim_even());
    for (std::size_t u = 0; u < g.dim_odd(); ++u)
        for (std::size_t v = u; v < g.dim_odd(); ++v)
            for (std::size_t x = 0; x < g.dim_even(); ++x)
                t.set(u, v, x, g.p(u, v, x));
    return t;
}

namespace {

void copy_even(const SuperAlgebra& even, SuperAlgebra::Builder& b)
{
    std::size_t n = even.dim_even();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                b.bracket(i, j, k, even.bracket(i, j, k));
}

void set_action(SuperAlgebra::Builder& b, std::size_t x, const Matrix& rho)
{
    for (std::size_t v = 0; v < rho.cols(); ++v)
        for (std::size_t w = 0; w < rho.rows(); ++w)
            b.action(x, v, w, rho(w, v));
}

} // namespace

SuperAlgebra assemble(const SuperAlgebra& even, const std::vector<Matrix>& action, const PTensor& p)
{
    const Field& f = even.field();
    std::size_t n = even.dim_even();
    std::size_t m = p.dim_odd();
    if (action.size() != n || p.dim_even() != n)
        throw DimensionError("assemble: need one action matrix per even basis vector and P valued in g0");
    for (const auto& a : action)
        if (a.rows() != m || a.cols() != m)
            throw DimensionError("assemble: action matrices must be " + std::to_string(m) + "x" + std::to_string(m));
    AxiomMode mode = natural_mode(f);
    if (mode == AxiomMode::Char2)
        throw ModeError("assemble takes P directly; char 2 algebras are given by a squaring map");
    SuperAlgebra::Builder b(f, n, m, mode);
    copy_even(even, b);
    for (std::size_t x = 0; x < n; ++x)
        set_action(b, x, action[x]);
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = u; v < m; ++v)
            for (std::size_t x = 0; x < n; ++x)
                b.p(u, v, x, p(u, v, x));
    SuperAlgebra g = b.build();
    auto report = validate(g);
    if (!report.ok()) {
        std::string what = "assembled data is not a Lie superalgebra (" + std::to_string(report.violations.size()) +
                           " violations, first: " + report.violations.front().identity + ")";
        throw AssemblyError(what, std::move(report));
    }
    return g;
}

SuperAlgebra assemble(const SuperAlgebra& even, const RepMatrices& rep, const PTensor& p)
{
    if (even.dim_even() != 3)
        throw DimensionError("assemble with RepMatrices needs a 3-dim even part in the basis (E, H, F)");
    return assemble(even, std::vector<Matrix>{rep.e, rep.h, rep.f}, p);
}

// ---------------------------------------------------------------------------
// osp(V, B)

SuperAlgebra build_osp(const BilinearFormPair& forms)
{
    const Field& f = forms.q.field();
    if (f.characteristic() == 2)
        throw ModeError("osp is not built in characteristic 2");
    std::size_t d0 = forms.q.rows(), d1 = forms.omega.rows();
    if (!forms.q.is_square() || !forms.omega.is_square())
        throw DimensionError("forms must be square");
    if (!(forms.q == forms.q.transpose()))
        throw PreconditionError("q must be symmetric");
    if (!(forms.omega.transpose() == -forms.omega))
        throw PreconditionError("omega must be antisymmetric");
    if (d1 % 2 != 0)
        throw PreconditionError("the symplectic part needs even dimension");
    if (!linalg::is_invertible(forms.q) || !linalg::is_invertible(forms.omega))
        throw PreconditionError("forms must be non-degenerate");

    std::size_t n = d0 + d1;
    Matrix form = direct_sum(forms.q, forms.omega);
    auto parity = [&](std::size_t i) { return i < d0 ? 0 : 1; };

    // Unknown entries of an operator X, flattened r*n + c. For each parity
    // of X: entries of the other parity vanish, and for basis i, j
    //   B(X e_i, e_j) + (-1)^{|X||i|} B(e_i, X e_j) = 0.
    auto solve_sector = [&](int sector) {
        std::vector<Vector> rows;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if ((parity(r) ^ parity(c)) != sector)
                    rows.push_back(Vector::unit(f, n * n, r * n + c));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Vector eq(f, n * n);
                Scalar sign = (sector && parity(i)) ? Scalar(f, -1) : Scalar::one(f);
                for (std::size_t k = 0; k < n; ++k) {
                    eq[k * n + i] += form(k, j);        // (X^T B)_{ij}
                    eq[k * n + j] += sign * form(i, k); // (B X)_{ij}
                }
                rows.push_back(eq);
            }
        std::vector<Matrix> ops;
        for (const auto& v : linalg::kernel_basis(Matrix::from_rows(f, n * n, rows))) {
            Matrix op(f, n, n);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    op(r, c) = v[r * n + c];
            ops.push_back(op);
        }
        return ops;
    };
    auto even = solve_sector(0);
    auto odd = solve_sector(1);
    if (even.size() != d0 * (d0 - (d0 ? 1 : 0)) / 2 + d1 * (d1 + 1) / 2 || odd.size() != d0 * d1)
        throw Error("osp: solution space has unexpected dimension");

    auto flatten = [&](const Matrix& m) {
        Vector v(f, n * n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                v[r * n + c] = m(r, c);
        return v;
    };
    auto basis_matrix = [&](const std::vector<Matrix>& ops) {
        std::vector<Vector> cols;
        for (const auto& o : ops)
            cols.push_back(flatten(o));
        return Matrix::from_columns(f, n * n, cols);
    };
    Matrix even_basis = basis_matrix(even), odd_basis = basis_matrix(odd);
    auto coords = [&](const Matrix& basis, const Matrix& m) {
        auto c = linalg::solve_linear(basis, flatten(m));
        if (!c)
            throw Error("osp: bracket left the solution space");
        return *c;
    };

    std::size_t de = even.size(), dd = odd.size();
    SuperAlgebra::Builder b(f, de, dd, natural_mode(f));
    for (std::size_t i = 0; i < de; ++i)
        for (std::size_t j = i + 1; j < de; ++j) {
            Vector c = coords(even_basis, even[i] * even[j] - even[j] * even[i]);
            for (std::size_t k = 0; k < de; ++k)
                b.bracket(i, j, k, c[k]);
        }
    for (std::size_t x = 0; x < de; ++x)
        for (std::size_t v = 0; v < dd; ++v) {
            Vector c = coords(odd_basis, even[x] * odd[v] - odd[v] * even[x]);
            for (std::size_t w = 0; w < dd; ++w)
                b.action(x, v, w, c[w]);
        }
    for (std::size_t u = 0; u < dd; ++u)
        for (std::size_t v = u; v < dd; ++v) {
            Vector c = coords(even_basis, odd[u] * odd[v] + odd[v] * odd[u]);
            for (std::size_t x = 0; x < de; ++x)
                b.p(u, v, x, c[x]);
        }
    return b.build();
}

SuperAlgebra build_osp12(const Field& field)
{
    if (field.characteristic() == 2)
        throw ModeError("osp(1|2) is not built in characteristic 2");
    SuperAlgebra sl2 = sl2_algebra(field);
    SuperAlgebra::Builder b(field, 3, 2, natural_mode(field));
    copy_even(sl2, b);
    RepMatrices std_rep = weight_module(1, Scalar::one(field), Scalar::zero(field));
    set_action(b, 0, std_rep.e);
    set_action(b, 1, std_rep.h);
    set_action(b, 2, std_rep.f);
    b.p(0, 0, 0, Scalar(field, 2));  // P(e0,e0) = 2E
    b.p(0, 1, 1, Scalar(field, -1)); // P(e0,e1) = -H
    b.p(1, 1, 2, Scalar(field, -2)); // P(e1,e1) = -2F
    return b.build();
}

// ---------------------------------------------------------------------------
// Double

SuperAlgebra build_double(const SuperAlgebra& g, const Matrix& phi)
{
    const Field& f = g.field();
    std::size_t n = g.dim_even();
    if (natural_mode(f) == AxiomMode::Char2)
        throw ModeError("the double is not built in characteristic 2");
    if (phi.rows() != n || phi.cols() != n)
        throw DimensionError("phi must be square of the even dimension");
    if (!linalg::is_invertible(phi))
        throw PreconditionError("phi is not invertible");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vector ei = Vector::unit(f, n, i), ej = Vector::unit(f, n, j);
            if (!(phi * g.bracket_even(ei, ej) == g.bracket_even(phi * ei, phi * ej)))
                throw PreconditionError("phi is not a Lie algebra homomorphism");
        }
    Matrix phi_inv = linalg::inverse(phi);

    // Z_g(g'): f with f ad(x) = ad(phi x) f for all basis x; f flattened r*n + c.
    std::vector<Vector> rows;
    for (std::size_t x = 0; x < n; ++x) {
        Matrix adx = g.ad(x);
        Matrix adphi = g.ad_of(phi.column(x));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                Vector eq(f, n * n);
                for (std::size_t k = 0; k < n; ++k) {
                    eq[r * n + k] += adx(k, c);
                    eq[k * n + c] -= adphi(r, k);
                }
                rows.push_back(eq);
            }
    }
    std::vector<Matrix> centraliser;
    for (const auto& v : linalg::kernel_basis(Matrix::from_rows(f, n * n, rows))) {
        Matrix op(f, n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                op(r, c) = v[r * n + c];
        centraliser.push_back(op);
    }

    std::size_t z = centraliser.size();
    SuperAlgebra::Builder b(f, n, n + z, natural_mode(f));
    copy_even(g, b);
    for (std::size_t x = 0; x < n; ++x) {
        Matrix rho(f, n + z, n + z);
        Matrix adphi = g.ad_of(phi.column(x));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                rho(r, c) = adphi(r, c);
        set_action(b, x, rho);
    }
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t k = 0; k < z; ++k) {
            Vector val = phi_inv * (centraliser[k] * (phi_inv * Vector::unit(f, n, v)));
            for (std::size_t x = 0; x < n; ++x)
                b.p(v, n + k, x, val[x]);
        }
    return b.build();
}

SuperAlgebra add_centre(const SuperAlgebra& g, std::size_t z)
{
    std::size_t n = g.dim_even(), m = g.dim_odd();
    const Field& f = g.field();
    SuperAlgebra::Builder b(f, n, m + z, g.mode());
    copy_even(g, b);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t v = 0; v < m; ++v)
            for (std::size_t w = 0; w < m; ++w)
                b.action(x, v, w, g.action(x, v, w));
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = u; v < m; ++v)
            for (std::size_t x = 0; x < n; ++x) {
                if (g.mode() == AxiomMode::Char2)
                    b.square(u, v, x, g.square(u, v, x));
                else
                    b.p(u, v, x, g.p(u, v, x));
            }
    return b.build();
}

// ---------------------------------------------------------------------------
// Small-characteristic examples

SuperAlgebra build_char3_example()
{
    Field f = Field::prime(3);
    auto s = [&](long v) { return Scalar(f, v); };
    SuperAlgebra::Builder b(f, 3, 3, AxiomMode::Char3);
    copy_even(sl2_algebra(f), b);
    // Basis (e0, e1, v).
    Matrix e = Matrix::from_rows(f, 3, {Vector(f, {0, 1, 0}), Vector(f, {0, 0, 1}), Vector(f, {0, 0, 0})});
    Matrix h = Matrix::diagonal(Vector(f, {1, -1, 0}));
    Matrix fm = Matrix::from_rows(f, 3, {Vector(f, {0, 0, 1}), Vector(f, {1, 0, 0}), Vector(f, {0, 0, 0})});
    set_action(b, 0, e);
    set_action(b, 1, h);
    set_action(b, 2, fm);
    b.p(0, 0, 0, s(1));  // P(e0,e0) = E
    b.p(0, 1, 1, s(1));  // P(e0,e1) = H
    b.p(1, 1, 2, s(-1)); // P(e1,e1) = -F
    b.p(2, 0, 2, s(1));  // P(v,e0) = F
    b.p(2, 2, 1, s(1));  // P(v,v) = H
    b.p(2, 1, 0, s(-1)); // P(v,e1) = -E
    return b.build();
}

SuperAlgebra build_char2_example()
{
    Field f = Field::prime(2);
    SuperAlgebra sl2 = sl2_algebra(f);
    SuperAlgebra::Builder b(f, 3, 3, AxiomMode::Char2);
    copy_even(sl2, b);
    for (std::size_t x = 0; x < 3; ++x)
        set_action(b, x, sl2.ad(x));
    // (a phi(E) + b phi(H) + c phi(F))^2 = (ab + ac + bc) H
    Scalar one = Scalar::one(f);
    b.square(0, 1, 1, one);
    b.square(0, 2, 1, one);
    b.square(1, 2, 1, one);
    return b.build();
}

} // namespace superbracket
