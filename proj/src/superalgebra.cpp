#include "superbracket/superalgebra.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "superbracket/errors.hpp"
#include "superbracket/linalg.hpp"

namespace superbracket {

std::string to_string(AxiomMode mode)
{
    switch (mode) {
    case AxiomMode::Standard:
        return "standard";
    case AxiomMode::Char3:
        return "char3";
    case AxiomMode::Char2:
        return "char2";
    }
    return "standard";
}

AxiomMode parse_axiom_mode(const std::string& text)
{
    if (text == "standard")
        return AxiomMode::Standard;
    if (text == "char3")
        return AxiomMode::Char3;
    if (text == "char2")
        return AxiomMode::Char2;
    throw ModeError("unknown axiom mode '" + text + "'");
}

AxiomMode natural_mode(const Field& field)
{
    switch (field.characteristic()) {
    case 2:
        return AxiomMode::Char2;
    case 3:
        return AxiomMode::Char3;
    default:
        return AxiomMode::Standard;
    }
}

// ---------------------------------------------------------------------------
// Builder

SuperAlgebra::Builder::Builder(const Field& field, std::size_t dim_even, std::size_t dim_odd, AxiomMode mode)
    : field_(field), d0_(dim_even), d1_(dim_odd), mode_(mode),
      c_(d0_ * d0_ * d0_, Scalar::zero(field)),
      a_(d0_ * d1_ * d1_, Scalar::zero(field)),
      p_(d1_ * d1_ * d0_, Scalar::zero(field)),
      s_(d1_ * d1_ * d0_, Scalar::zero(field))
{
}

SuperAlgebra::Builder& SuperAlgebra::Builder::bracket(std::size_t i, std::size_t j, std::size_t k, const Scalar& value)
{
    if (i >= d0_ || j >= d0_ || k >= d0_)
        throw DimensionError("bracket index out of range");
    if (i == j) {
        if (!value.is_zero())
            throw DimensionError("[e_i, e_i] must vanish");
        return *this;
    }
    c_[(i * d0_ + j) * d0_ + k] = value;
    c_[(j * d0_ + i) * d0_ + k] = -value;
    return *this;
}

SuperAlgebra::Builder& SuperAlgebra::Builder::action(std::size_t x, std::size_t v, std::size_t w, const Scalar& value)
{
    if (x >= d0_ || v >= d1_ || w >= d1_)
        throw DimensionError("action index out of range");
    a_[(x * d1_ + v) * d1_ + w] = value;
    return *this;
}

SuperAlgebra::Builder& SuperAlgebra::Builder::p(std::size_t u, std::size_t v, std::size_t x, const Scalar& value)
{
    if (mode_ == AxiomMode::Char2)
        throw ModeError("in char2 mode the odd bracket is derived from the squaring map");
    if (u >= d1_ || v >= d1_ || x >= d0_)
        throw DimensionError("p_map index out of range");
    p_[(u * d1_ + v) * d0_ + x] = value;
    p_[(v * d1_ + u) * d0_ + x] = value;
    return *this;
}

SuperAlgebra::Builder& SuperAlgebra::Builder::square(std::size_t v, std::size_t w, std::size_t x, const Scalar& value)
{
    if (mode_ != AxiomMode::Char2)
        throw ModeError("squaring map is only meaningful in char2 mode");
    if (v >= d1_ || w >= d1_ || x >= d0_)
        throw DimensionError("squaring index out of range");
    if (v > w)
        std::swap(v, w);
    s_[(v * d1_ + w) * d0_ + x] = value;
    return *this;
}

SuperAlgebra SuperAlgebra::Builder::build() const
{
    auto ch = field_.characteristic();
    switch (mode_) {
    case AxiomMode::Standard:
        if (ch == 2 || ch == 3)
            throw ModeError("standard axiom mode needs characteristic other than 2 and 3, field is " + field_.to_string());
        break;
    case AxiomMode::Char3:
        if (ch != 3)
            throw ModeError("char3 axiom mode needs characteristic 3, field is " + field_.to_string());
        break;
    case AxiomMode::Char2:
        if (ch != 2)
            throw ModeError("char2 axiom mode needs characteristic 2, field is " + field_.to_string());
        break;
    }
    SuperAlgebra g;
    g.field_ = field_;
    g.d0_ = d0_;
    g.d1_ = d1_;
    g.mode_ = mode_;
    g.c_ = c_;
    g.a_ = a_;
    g.p_ = p_;
    g.s_ = s_;
    if (mode_ == AxiomMode::Char2) {
        // Polarization P(x,y) = (x+y)^2 + x^2 + y^2: off-diagonal squaring
        // coefficients survive, the diagonal cancels in characteristic 2.
        for (std::size_t v = 0; v < d1_; ++v)
            for (std::size_t w = 0; w < d1_; ++w)
                for (std::size_t x = 0; x < d0_; ++x) {
                    Scalar val = v == w ? Scalar::zero(field_) : s_[(std::min(v, w) * d1_ + std::max(v, w)) * d0_ + x];
                    g.p_[(v * d1_ + w) * d0_ + x] = val;
                }
    }
    return g;
}

// ---------------------------------------------------------------------------
// Accessors

const Scalar& SuperAlgebra::square(std::size_t v, std::size_t w, std::size_t x) const
{
    if (v > w)
        std::swap(v, w);
    return s_[(v * d1_ + w) * d0_ + x];
}

Matrix SuperAlgebra::ad(std::size_t i) const
{
    Matrix m(field_, d0_, d0_);
    for (std::size_t j = 0; j < d0_; ++j)
        for (std::size_t k = 0; k < d0_; ++k)
            m(k, j) = bracket(i, j, k);
    return m;
}

Matrix SuperAlgebra::rho(std::size_t x) const
{
    Matrix m(field_, d1_, d1_);
    for (std::size_t v = 0; v < d1_; ++v)
        for (std::size_t w = 0; w < d1_; ++w)
            m(w, v) = action(x, v, w);
    return m;
}

std::vector<Matrix> SuperAlgebra::action_matrices() const
{
    std::vector<Matrix> out;
    out.reserve(d0_);
    for (std::size_t x = 0; x < d0_; ++x)
        out.push_back(rho(x));
    return out;
}

Matrix SuperAlgebra::ad_of(const Vector& x) const
{
    Matrix m(field_, d0_, d0_);
    for (std::size_t i = 0; i < d0_; ++i)
        if (!x[i].is_zero())
            m += x[i] * ad(i);
    return m;
}

Matrix SuperAlgebra::rho_of(const Vector& x) const
{
    Matrix m(field_, d1_, d1_);
    for (std::size_t i = 0; i < d0_; ++i)
        if (!x[i].is_zero())
            m += x[i] * rho(i);
    return m;
}

Vector SuperAlgebra::bracket_even(const Vector& x, const Vector& y) const
{
    Vector r(field_, d0_);
    for (std::size_t i = 0; i < d0_; ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < d0_; ++j) {
            if (y[j].is_zero())
                continue;
            Scalar xy = x[i] * y[j];
            for (std::size_t k = 0; k < d0_; ++k)
                r[k] += xy * bracket(i, j, k);
        }
    }
    return r;
}

Vector SuperAlgebra::act(const Vector& x, const Vector& v) const
{
    return rho_of(x) * v;
}

Vector SuperAlgebra::p_of(const Vector& u, const Vector& v) const
{
    Vector r(field_, d0_);
    for (std::size_t a = 0; a < d1_; ++a) {
        if (u[a].is_zero())
            continue;
        for (std::size_t b = 0; b < d1_; ++b) {
            if (v[b].is_zero())
                continue;
            Scalar uv = u[a] * v[b];
            for (std::size_t x = 0; x < d0_; ++x)
                r[x] += uv * p(a, b, x);
        }
    }
    return r;
}

Vector SuperAlgebra::square_of(const Vector& v) const
{
    if (mode_ != AxiomMode::Char2)
        throw ModeError("square_of needs char2 mode");
    Vector r(field_, d0_);
    for (std::size_t a = 0; a < d1_; ++a)
        for (std::size_t b = a; b < d1_; ++b) {
            Scalar t = v[a] * v[b];
            if (t.is_zero())
                continue;
            for (std::size_t x = 0; x < d0_; ++x)
                r[x] += t * square(a, b, x);
        }
    return r;
}

bool SuperAlgebra::p_is_zero() const
{
    return std::all_of(p_.begin(), p_.end(), [](const Scalar& s) { return s.is_zero(); });
}

SuperAlgebra SuperAlgebra::even_part() const
{
    SuperAlgebra g;
    g.field_ = field_;
    g.d0_ = d0_;
    g.d1_ = 0;
    g.mode_ = mode_;
    g.c_ = c_;
    return g;
}

bool operator==(const SuperAlgebra& a, const SuperAlgebra& b)
{
    return a.field_ == b.field_ && a.d0_ == b.d0_ && a.d1_ == b.d1_ && a.mode_ == b.mode_ && a.c_ == b.c_ &&
           a.a_ == b.a_ && a.p_ == b.p_ && a.s_ == b.s_;
}

// ---------------------------------------------------------------------------
// Validation

namespace {

Vector even_unit(const SuperAlgebra& g, std::size_t i)
{
    return Vector::unit(g.field(), g.dim_even(), i);
}

Vector odd_unit(const SuperAlgebra& g, std::size_t i)
{
    return Vector::unit(g.field(), g.dim_odd(), i);
}

// P(v_u, v_v) applied to v_w.
Vector p_apply(const SuperAlgebra& g, std::size_t u, std::size_t v, std::size_t w)
{
    Vector r(g.field(), g.dim_odd());
    for (std::size_t x = 0; x < g.dim_even(); ++x) {
        const Scalar& c = g.p(u, v, x);
        if (c.is_zero())
            continue;
        for (std::size_t t = 0; t < g.dim_odd(); ++t)
            r[t] += c * g.action(x, w, t);
    }
    return r;
}

void check_even_jacobi(const SuperAlgebra& g, ValidationReport& report)
{
    std::size_t n = g.dim_even();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                auto ei = even_unit(g, i), ej = even_unit(g, j), ek = even_unit(g, k);
                Vector sum = g.bracket_even(ei, g.bracket_even(ej, ek)) + g.bracket_even(ej, g.bracket_even(ek, ei)) +
                             g.bracket_even(ek, g.bracket_even(ei, ej));
                if (!sum.is_zero())
                    report.violations.push_back({"jacobi_even", {i, j, k}, "cyclic sum = " + sum.to_string()});
            }
}

void check_representation(const SuperAlgebra& g, ValidationReport& report)
{
    std::size_t n = g.dim_even();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Matrix lhs = g.rho_of(g.bracket_even(even_unit(g, i), even_unit(g, j)));
            Matrix rhs = commutator(g.rho(i), g.rho(j));
            if (lhs != rhs)
                report.violations.push_back(
                    {"representation", {i, j}, "rho([x,y]) = " + lhs.to_string() + " but [rho x, rho y] = " + rhs.to_string()});
        }
}

void check_relation_1(const SuperAlgebra& g, ValidationReport& report)
{
    std::size_t m = g.dim_odd();
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = u; v < m; ++v)
            for (std::size_t w = v; w < m; ++w) {
                Vector sum = p_apply(g, u, v, w) + p_apply(g, v, w, u) + p_apply(g, w, u, v);
                if (!sum.is_zero())
                    report.violations.push_back({"relation_1", {u, v, w}, "cyclic sum = " + sum.to_string()});
            }
}

void check_relation_2(const SuperAlgebra& g, ValidationReport& report)
{
    std::size_t n = g.dim_even(), m = g.dim_odd();
    for (std::size_t x = 0; x < n; ++x) {
        Matrix rx = g.rho(x);
        for (std::size_t u = 0; u < m; ++u)
            for (std::size_t v = u; v < m; ++v) {
                auto eu = odd_unit(g, u), ev = odd_unit(g, v);
                Vector lhs = g.bracket_even(even_unit(g, x), g.p_of(eu, ev));
                Vector rhs = g.p_of(rx * eu, ev) + g.p_of(eu, rx * ev);
                if (lhs != rhs)
                    report.violations.push_back(
                        {"relation_2", {x, u, v}, "[x,P(u,v)] = " + lhs.to_string() + " but P(xu,v)+P(u,xv) = " + rhs.to_string()});
            }
    }
}

// {x,{x,x}} = 0 as a polynomial identity in the coordinates of x: the
// coefficient of t_a t_b t_c (a <= b <= c) is the sum of P(v_i,v_j)(v_k)
// over the distinct orderings (i,j,k) of the multiset {a,b,c}.
void check_cubic_axiom(const SuperAlgebra& g, ValidationReport& report)
{
    std::size_t m = g.dim_odd();
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a; b < m; ++b)
            for (std::size_t c = b; c < m; ++c) {
                std::array<std::size_t, 3> idx{a, b, c};
                Vector sum(g.field(), m);
                do {
                    sum += p_apply(g, idx[0], idx[1], idx[2]);
                } while (std::next_permutation(idx.begin(), idx.end()));
                if (!sum.is_zero())
                    report.violations.push_back({"cubic_axiom", {a, b, c}, "monomial coefficient = " + sum.to_string()});
            }
}

// {x^2, y} = {x, {x, y}} for odd x, expanded coefficientwise in the
// coordinates of x. Witness is (a, b, parity of y, index of y).
void check_char2_square(const SuperAlgebra& g, ValidationReport& report)
{
    std::size_t n = g.dim_even(), m = g.dim_odd();
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a; b < m; ++b) {
            Vector sab(g.field(), n);
            for (std::size_t x = 0; x < n; ++x)
                sab[x] = g.square(a, b, x);
            auto va = odd_unit(g, a), vb = odd_unit(g, b);
            // y even: [x^2, y] = -P(x, y(x)).
            for (std::size_t j = 0; j < n; ++j) {
                auto ej = even_unit(g, j);
                Vector lhs = g.bracket_even(sab, ej);
                Vector rhs = -g.p_of(va, g.act(ej, vb));
                if (a != b)
                    rhs -= g.p_of(vb, g.act(ej, va));
                if (lhs != rhs)
                    report.violations.push_back({"char2_square", {a, b, 0, j},
                                                 "y even: {x^2,y} coefficient " + lhs.to_string() +
                                                     " but {x,{x,y}} coefficient " + rhs.to_string()});
            }
            // y odd: x^2(y) = -P(x,y)(x).
            for (std::size_t c = 0; c < m; ++c) {
                auto vc = odd_unit(g, c);
                Vector lhs = g.act(sab, vc);
                Vector rhs = -g.act(g.p_of(va, vc), vb);
                if (a != b)
                    rhs -= g.act(g.p_of(vb, vc), va);
                if (lhs != rhs)
                    report.violations.push_back({"char2_square", {a, b, 1, c},
                                                 "y odd: {x^2,y} coefficient " + lhs.to_string() +
                                                     " but {x,{x,y}} coefficient " + rhs.to_string()});
            }
        }
}

} // namespace

ValidationReport validate(const SuperAlgebra& g)
{
    ValidationReport report;
    check_even_jacobi(g, report);
    check_representation(g, report);
    switch (g.mode()) {
    case AxiomMode::Standard:
        check_relation_1(g, report);
        check_relation_2(g, report);
        break;
    case AxiomMode::Char3:
        check_relation_1(g, report);
        check_relation_2(g, report);
        check_cubic_axiom(g, report);
        break;
    case AxiomMode::Char2:
        check_char2_square(g, report);
        break;
    }
    return report;
}

// ---------------------------------------------------------------------------
// Centre, ideals, Killing form

GradedBasis supercentre(const SuperAlgebra& g)
{
    const Field& f = g.field();
    std::size_t n = g.dim_even(), m = g.dim_odd();
    GradedBasis z;

    if (n > 0) {
        // x0 -> [x0, e_j] and x0 -> x0(v_a), stacked.
        std::vector<Matrix> blocks;
        for (std::size_t j = 0; j < n; ++j)
            blocks.push_back(-g.ad(j));
        for (std::size_t a = 0; a < m; ++a) {
            Matrix block(f, m, n);
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t w = 0; w < m; ++w)
                    block(w, x) = g.action(x, a, w);
            blocks.push_back(block);
        }
        z.even = linalg::span_basis(f, n, linalg::common_kernel(blocks));
    }
    if (m > 0) {
        // v -> e_j(v) and v -> P(v, v_a), stacked.
        std::vector<Matrix> blocks;
        for (std::size_t j = 0; j < n; ++j)
            blocks.push_back(g.rho(j));
        for (std::size_t a = 0; a < m; ++a) {
            Matrix block(f, n, m);
            for (std::size_t v = 0; v < m; ++v)
                for (std::size_t x = 0; x < n; ++x)
                    block(x, v) = g.p(v, a, x);
            blocks.push_back(block);
        }
        z.odd = linalg::span_basis(f, m, linalg::common_kernel(blocks));
    }
    return z;
}

std::vector<Vector> p_span(const SuperAlgebra& g, const std::vector<Vector>& u_basis, const std::vector<Vector>& w_basis)
{
    std::vector<Vector> images;
    for (const auto& u : u_basis)
        for (const auto& w : w_basis) {
            if (u.size() != g.dim_odd() || w.size() != g.dim_odd())
                throw DimensionError("p_span: vectors must live in the odd part");
            images.push_back(g.p_of(u, w));
        }
    return linalg::span_basis(g.field(), g.dim_even(), images);
}

bool is_ideal(const SuperAlgebra& g, const std::vector<Vector>& subspace)
{
    for (std::size_t i = 0; i < g.dim_even(); ++i)
        for (const auto& s : subspace)
            if (!linalg::in_span(subspace, g.bracket_even(even_unit(g, i), s)))
                return false;
    return true;
}

Matrix killing_form(const SuperAlgebra& g)
{
    std::size_t n = g.dim_even();
    std::vector<Matrix> ads;
    for (std::size_t i = 0; i < n; ++i)
        ads.push_back(g.ad(i));
    Matrix k(g.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            k(i, j) = (ads[i] * ads[j]).trace();
            k(j, i) = k(i, j);
        }
    return k;
}

bool is_simple_3dim(const SuperAlgebra& g)
{
    if (g.dim_even() != 3)
        throw DimensionError("simplicity test is only decided for 3-dimensional even parts");
    return !linalg::determinant(killing_form(g)).is_zero();
}

// ---------------------------------------------------------------------------
// Morphisms

MorphismCheck check_morphism(const MorphismCertificate& cert)
{
    const SuperAlgebra& s = cert.source;
    const SuperAlgebra& t = cert.target;
    std::size_t n = s.dim_even(), m = s.dim_odd();
    MorphismCheck r;
    if (!(s.field() == t.field()) || t.dim_even() != n || t.dim_odd() != m || cert.even.rows() != n ||
        cert.even.cols() != n || cert.odd.rows() != m || cert.odd.cols() != m) {
        r.failure = "shape";
        return r;
    }
    if (!linalg::is_invertible(cert.even)) {
        r.failure = "singular_even";
        return r;
    }
    if (!linalg::is_invertible(cert.odd)) {
        r.failure = "singular_odd";
        return r;
    }
    const Field& f = s.field();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vector lhs = cert.even * s.bracket_even(Vector::unit(f, n, i), Vector::unit(f, n, j));
            Vector rhs = t.bracket_even(cert.even.column(i), cert.even.column(j));
            if (lhs != rhs) {
                r.failure = "bracket_even";
                r.witness = {i, j};
                return r;
            }
        }
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = u; v < m; ++v) {
            Vector lhs = cert.even * s.p_of(Vector::unit(f, m, u), Vector::unit(f, m, v));
            Vector rhs = t.p_of(cert.odd.column(u), cert.odd.column(v));
            if (lhs != rhs) {
                r.failure = "p_map";
                r.witness = {u, v};
                return r;
            }
        }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t v = 0; v < m; ++v) {
            Vector lhs = cert.odd * s.act(Vector::unit(f, n, x), Vector::unit(f, m, v));
            Vector rhs = t.act(cert.even.column(x), cert.odd.column(v));
            if (lhs != rhs) {
                r.failure = "action";
                r.witness = {x, v};
                return r;
            }
        }
    if (s.mode() == AxiomMode::Char2 && t.mode() == AxiomMode::Char2)
        for (std::size_t u = 0; u < m; ++u) {
            Vector lhs = cert.even * s.square_of(Vector::unit(f, m, u));
            Vector rhs = t.square_of(cert.odd.column(u));
            if (lhs != rhs) {
                r.failure = "squaring";
                r.witness = {u};
                return r;
            }
        }
    r.ok = true;
    return r;
}

SuperAlgebra change_basis(const SuperAlgebra& g, const Matrix& a_even, const Matrix& a_odd)
{
    std::size_t n = g.dim_even(), m = g.dim_odd();
    if (a_even.rows() != n || a_even.cols() != n || a_odd.rows() != m || a_odd.cols() != m)
        throw DimensionError("change_basis: block shapes do not match the algebra");
    const Field& f = g.field();
    Matrix inv_even = linalg::inverse(a_even);
    Matrix inv_odd = linalg::inverse(a_odd);

    SuperAlgebra::Builder b(f, n, m, g.mode());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vector br = inv_even * g.bracket_even(a_even.column(i), a_even.column(j));
            for (std::size_t k = 0; k < n; ++k)
                b.bracket(i, j, k, br[k]);
        }
    for (std::size_t x = 0; x < n; ++x) {
        Matrix rx = inv_odd * g.rho_of(a_even.column(x)) * a_odd;
        for (std::size_t v = 0; v < m; ++v)
            for (std::size_t w = 0; w < m; ++w)
                b.action(x, v, w, rx(w, v));
    }
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = u; v < m; ++v) {
            Vector pv = inv_even * g.p_of(a_odd.column(u), a_odd.column(v));
            for (std::size_t x = 0; x < n; ++x) {
                if (g.mode() == AxiomMode::Char2) {
                    if (u != v)
                        b.square(u, v, x, pv[x]);
                } else {
                    b.p(u, v, x, pv[x]);
                }
            }
        }
    if (g.mode() == AxiomMode::Char2)
        for (std::size_t u = 0; u < m; ++u) {
            Vector sq = inv_even * g.square_of(a_odd.column(u));
            for (std::size_t x = 0; x < n; ++x)
                b.square(u, u, x, sq[x]);
        }
    return b.build();
}

} // namespace superbracket
