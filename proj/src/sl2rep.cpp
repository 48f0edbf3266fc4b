#include "superbracket/sl2rep.hpp"

#include <algorithm>

#include "superbracket/errors.hpp"
#include "superbracket/linalg.hpp"

namespace superbracket {

SuperAlgebra sl2_algebra(const Field& field)
{
    SuperAlgebra::Builder b(field, 3, 0, natural_mode(field));
    b.bracket(0, 2, 1, Scalar(field, 1));  // [E,F] = H
    b.bracket(1, 0, 0, Scalar(field, 2));  // [H,E] = 2E
    b.bracket(1, 2, 2, Scalar(field, -2)); // [H,F] = -2F
    return b.build();
}

Sl2Triple standard_triple(const Field& field)
{
    return {Vector::unit(field, 3, 0), Vector::unit(field, 3, 1), Vector::unit(field, 3, 2)};
}

bool verify_triple(const SuperAlgebra& g, const Sl2Triple& t)
{
    const Field& f = g.field();
    Scalar two(f, 2);
    return g.bracket_even(t.e, t.f) == t.h && g.bracket_even(t.h, t.e) == two * t.e &&
           g.bracket_even(t.h, t.f) == -(two * t.f);
}

// ---------------------------------------------------------------------------
// Triple search

namespace {

// Coefficient c1 of t in det(t - A) for a 3x3 matrix: sum of principal 2x2 minors.
Scalar principal_minor_sum(const Matrix& a)
{
    return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0) + a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0) + a(1, 1) * a(2, 2) -
           a(1, 2) * a(2, 1);
}

std::optional<Sl2Triple> triple_from_candidate(const SuperAlgebra& g, const Vector& x)
{
    const Field& f = g.field();
    if (x.is_zero())
        return std::nullopt;
    Matrix ad = g.ad_of(x);
    if (!ad.trace().is_zero() || !linalg::determinant(ad).is_zero())
        return std::nullopt;
    // det(t - ad x) = t (t^2 + c1): the nonzero eigenvalues are +-sqrt(-c1).
    Scalar nu_sq = -principal_minor_sum(ad);
    if (nu_sq.is_zero())
        return std::nullopt;
    auto nu = nu_sq.sqrt();
    if (!nu)
        return std::nullopt;
    Scalar two(f, 2);
    Vector h = (two / *nu) * x;
    Matrix ad_h = g.ad_of(h);
    auto plus = linalg::eigenspace(ad_h, two);
    auto minus = linalg::eigenspace(ad_h, -two);
    if (plus.size() != 1 || minus.size() != 1)
        return std::nullopt;
    Vector e = plus[0];
    Vector f0 = minus[0];
    auto c = linalg::coordinates({h}, g.bracket_even(e, f0));
    if (!c || (*c)[0].is_zero())
        return std::nullopt;
    Sl2Triple t{e, h, (*c)[0].inverse() * f0};
    if (!verify_triple(g, t))
        return std::nullopt;
    return t;
}

} // namespace

TripleSearchResult find_sl2_triple(const SuperAlgebra& g, const TripleSearchOptions& options)
{
    if (g.dim_even() != 3 || !is_simple_3dim(g))
        throw PreconditionError("find_sl2_triple needs a 3-dimensional simple even part");
    const Field& f = g.field();
    TripleSearchResult result;

    auto p = f.characteristic();
    if (p != 0 && p <= options.max_exhaustive_prime) {
        // Every vector of F_p^3, lexicographic in residues.
        for (std::uint64_t a = 0; a < p; ++a)
            for (std::uint64_t b = 0; b < p; ++b)
                for (std::uint64_t c = 0; c < p; ++c) {
                    Vector x(f, {static_cast<long>(a), static_cast<long>(b), static_cast<long>(c)});
                    if (auto t = triple_from_candidate(g, x)) {
                        result.status = TripleSearchStatus::Found;
                        result.triple = std::move(t);
                        return result;
                    }
                }
        result.status = TripleSearchStatus::NotSplit;
        result.note = "exhaustive search over " + f.to_string() + " found no split semisimple element";
        return result;
    }

    // Basis vectors first, then integer combinations by growing max-norm.
    for (std::size_t i = 0; i < 3; ++i)
        if (auto t = triple_from_candidate(g, Vector::unit(f, 3, i))) {
            result.status = TripleSearchStatus::Found;
            result.triple = std::move(t);
            return result;
        }
    long bound = options.rational_bound;
    for (long norm = 1; norm <= bound; ++norm)
        for (long a = -norm; a <= norm; ++a)
            for (long b = -norm; b <= norm; ++b)
                for (long c = -norm; c <= norm; ++c) {
                    if (std::max({std::labs(a), std::labs(b), std::labs(c)}) != norm)
                        continue;
                    if (auto t = triple_from_candidate(g, Vector(f, {a, b, c}))) {
                        result.status = TripleSearchStatus::Found;
                        result.triple = std::move(t);
                        return result;
                    }
                }
    result.status = TripleSearchStatus::Undetermined;
    result.note = "no triple among integer combinations with coefficients in [-" + std::to_string(bound) + ", " +
                  std::to_string(bound) + "] (triple budget)";
    return result;
}

// ---------------------------------------------------------------------------
// Modules

IrrepSpec integral_spec(unsigned m, const Field& field)
{
    return {m, int_image(static_cast<long>(m), field), Scalar::zero(field)};
}

RepMatrices weight_module(unsigned m, const Scalar& alpha, const Scalar& beta)
{
    const Field& f = alpha.field();
    std::size_t n = m + 1;
    RepMatrices r{Matrix(f, n, n), Matrix(f, n, n), Matrix(f, n, n)};
    for (std::size_t i = 0; i < n; ++i) {
        Scalar ii = int_image(static_cast<long>(i), f);
        r.h(i, i) = alpha - Scalar(f, 2) * ii;
        if (i >= 1)
            r.e(i - 1, i) = ii * (alpha - (ii - Scalar::one(f)));
        if (i + 1 < n)
            r.f(i + 1, i) = Scalar::one(f);
    }
    r.f(0, m) += beta;
    return r;
}

RepMatrices build_irrep(const IrrepSpec& spec, const Field& field)
{
    if (!(spec.alpha.field() == field) || !(spec.beta.field() == field))
        throw FieldError("irrep parameters live in another field");
    std::uint64_t p = field.characteristic();
    Scalar m_img = int_image(static_cast<long>(spec.m), field);
    if (p == 0) {
        if (spec.alpha != m_img || !spec.beta.is_zero())
            throw IrrepSpecError("b", "in characteristic 0 an irreducible module has alpha = dim - 1 and beta = 0");
    } else {
        std::uint64_t dim = spec.m + 1ULL;
        if (dim > p)
            throw IrrepSpecError("c-dim", "in characteristic " + std::to_string(p) + " irreducible modules have dim <= p");
        if (dim < p && (spec.alpha != m_img || !spec.beta.is_zero()))
            throw IrrepSpecError("c-small", "when dim < p an irreducible module has alpha = dim - 1 and beta = 0");
        if (dim == p && is_integer_in_field(spec.alpha) && spec.alpha != m_img)
            throw IrrepSpecError("c-boundary", "when dim = p and alpha is an integer, alpha = dim - 1");
    }
    return weight_module(spec.m, spec.alpha, spec.beta);
}

bool satisfies_triple_relations(const RepMatrices& r)
{
    Scalar two(r.field(), 2);
    return commutator(r.e, r.f) == r.h && commutator(r.h, r.e) == two * r.e && commutator(r.h, r.f) == -(two * r.f);
}

RepMatrices trivial_rep(std::size_t dim, const Field& field)
{
    return {Matrix(field, dim, dim), Matrix(field, dim, dim), Matrix(field, dim, dim)};
}

RepMatrices direct_sum(const RepMatrices& a, const RepMatrices& b)
{
    return {direct_sum(a.e, b.e), direct_sum(a.h, b.h), direct_sum(a.f, b.f)};
}

RepMatrices conjugate(const RepMatrices& rep, const Matrix& basis)
{
    Matrix inv = linalg::inverse(basis);
    return {inv * rep.e * basis, inv * rep.h * basis, inv * rep.f * basis};
}

RepMatrices rep_from_algebra(const SuperAlgebra& g, const Sl2Triple& t)
{
    return {g.rho_of(t.e), g.rho_of(t.h), g.rho_of(t.f)};
}

std::vector<Vector> annihilator(const IrrepSpec& spec, std::size_t i, const Field& field)
{
    if (i > spec.m)
        throw DimensionError("annihilator: basis index beyond dim");
    RepMatrices r = build_irrep(spec, field);
    Matrix images = Matrix::from_columns(field, r.dim(), {r.e.column(i), r.h.column(i), r.f.column(i)});
    return linalg::span_basis(field, 3, linalg::kernel_basis(images));
}

Matrix casimir(const RepMatrices& r)
{
    Matrix shifted = r.h + Matrix::identity(r.field(), r.dim());
    return shifted * shifted + Scalar(r.field(), 4) * (r.f * r.e);
}

std::string to_string(JacobsonVerdict v)
{
    switch (v) {
    case JacobsonVerdict::SufficientForCompleteReducibility:
        return "sufficient";
    case JacobsonVerdict::Inconclusive:
        return "inconclusive";
    case JacobsonVerdict::CharZero:
        return "char_zero";
    }
    return "inconclusive";
}

JacobsonVerdict jacobson_test(const RepMatrices& rep)
{
    std::uint64_t p = rep.field().characteristic();
    if (p == 0)
        return JacobsonVerdict::CharZero;
    auto k = static_cast<unsigned>(p - 1);
    if (power(rep.e, k).is_zero() && power(rep.f, k).is_zero())
        return JacobsonVerdict::SufficientForCompleteReducibility;
    return JacobsonVerdict::Inconclusive;
}

std::vector<Vector> generated_submodule(const RepMatrices& rep, const std::vector<Vector>& vectors)
{
    const Field& f = rep.field();
    std::size_t n = rep.dim();
    auto basis = linalg::span_basis(f, n, vectors);
    for (;;) {
        std::vector<Vector> grown = basis;
        for (const auto& v : basis) {
            grown.push_back(rep.e * v);
            grown.push_back(rep.h * v);
            grown.push_back(rep.f * v);
        }
        auto next = linalg::span_basis(f, n, grown);
        if (next.size() == basis.size())
            return basis;
        basis = std::move(next);
    }
}

std::vector<Summand> decompose(const RepMatrices& rep)
{
    auto verdict = jacobson_test(rep);
    if (verdict == JacobsonVerdict::Inconclusive)
        throw PreconditionError("decompose needs a module known to be completely reducible");
    const Field& f = rep.field();
    std::size_t n = rep.dim();
    std::uint64_t p = f.characteristic();

    std::vector<Summand> out;
    std::vector<Vector> all;
    for (long m = static_cast<long>(n) - 1; m >= 0; --m) {
        if (p != 0 && static_cast<std::uint64_t>(m) >= p)
            continue;
        Scalar weight = int_image(m, f);
        Matrix shifted = rep.h - weight * Matrix::identity(f, n);
        for (const auto& v : linalg::common_kernel({rep.e, shifted})) {
            Summand s;
            s.spec = integral_spec(static_cast<unsigned>(m), f);
            Vector cur = v;
            for (long i = 0; i <= m; ++i) {
                s.basis.push_back(cur);
                all.push_back(cur);
                cur = rep.f * cur;
            }
            if (!cur.is_zero())
                throw Error("decompose: F^(m+1) does not kill a highest-weight vector; not a valid completely reducible module");
            out.push_back(std::move(s));
        }
    }
    if (all.size() != n || linalg::rank(Matrix::from_columns(f, n, all)) != n)
        throw Error("decompose: summands fail to exhaust the module");
    return out;
}

// ---------------------------------------------------------------------------
// Composition series

namespace {

// Quotient of a module by a submodule given in echelon form. The
// complement is spanned by unit vectors at the non-pivot positions.
struct Quotient {
    RepMatrices rep;
    std::vector<std::size_t> free_positions;
};

Vector reduce_mod(const std::vector<Vector>& echelon, const std::vector<std::size_t>& pivots, Vector v)
{
    for (std::size_t i = 0; i < echelon.size(); ++i)
        if (!v[pivots[i]].is_zero())
            v -= v[pivots[i]] * echelon[i];
    return v;
}

std::vector<std::size_t> pivots_of(const std::vector<Vector>& echelon)
{
    std::vector<std::size_t> pivots;
    for (const auto& row : echelon) {
        std::size_t j = 0;
        while (row[j].is_zero())
            ++j;
        pivots.push_back(j);
    }
    return pivots;
}

Quotient quotient(const RepMatrices& rep, const std::vector<Vector>& sub)
{
    const Field& f = rep.field();
    std::size_t n = rep.dim();
    auto pivots = pivots_of(sub);
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < n; ++j)
        if (std::find(pivots.begin(), pivots.end(), j) == pivots.end())
            free.push_back(j);
    std::size_t q = free.size();
    auto project = [&](const Matrix& m) {
        Matrix out(f, q, q);
        for (std::size_t c = 0; c < q; ++c) {
            Vector img = reduce_mod(sub, pivots, m.column(free[c]));
            for (std::size_t r = 0; r < q; ++r)
                out(r, c) = img[free[r]];
        }
        return out;
    };
    return {{project(rep.e), project(rep.h), project(rep.f)}, free};
}

// Nonzero vectors of span(basis) up to scalars, first nonzero coefficient 1.
std::vector<Vector> projective_points(const Field& f, std::size_t dim, const std::vector<Vector>& basis, std::size_t budget)
{
    std::uint64_t p = f.characteristic();
    std::size_t k = basis.size();
    double count = 0;
    for (std::size_t i = 0; i < k; ++i)
        count = count * static_cast<double>(p) + 1;
    if (count > static_cast<double>(budget))
        throw BudgetError("projective enumeration of a " + std::to_string(k) + "-dim space over " + f.to_string() +
                          " exceeds budget " + std::to_string(budget));
    std::vector<Vector> out;
    for (std::size_t lead = 0; lead < k; ++lead) {
        std::size_t tail = k - lead - 1;
        std::vector<std::uint64_t> coeff(tail, 0);
        for (;;) {
            Vector v = basis[lead];
            for (std::size_t t = 0; t < tail; ++t)
                if (coeff[t])
                    v += Scalar(f, static_cast<long>(coeff[t])) * basis[lead + 1 + t];
            out.push_back(v);
            std::size_t pos = 0;
            while (pos < tail && ++coeff[pos] == p)
                coeff[pos++] = 0;
            if (pos == tail)
                break;
        }
    }
    (void)dim;
    return out;
}

bool nilpotent(const Matrix& m)
{
    return power(m, static_cast<unsigned>(m.rows())).is_zero();
}

// Candidate generators of irreducible submodules, in a fixed order.
std::vector<Vector> submodule_generators(const RepMatrices& rep, std::size_t budget)
{
    const Field& f = rep.field();
    std::size_t n = rep.dim();
    if (nilpotent(rep.e)) {
        // Every nonzero submodule meets ker E.
        auto kernel = linalg::kernel_basis(rep.e);
        if (f.characteristic() != 0)
            return projective_points(f, n, kernel, budget);
        // Characteristic 0: ker E splits into H-eigenlines with weights
        // 0..n-1, and each such vector generates an irreducible.
        std::vector<Vector> out;
        for (long w = 0; w < static_cast<long>(n); ++w) {
            Matrix shifted = rep.h - int_image(w, f) * Matrix::identity(f, n);
            for (auto& v : linalg::common_kernel({rep.e, shifted}))
                out.push_back(std::move(v));
        }
        return out;
    }
    if (f.characteristic() == 0)
        throw PreconditionError("composition series over Q needs rho(E) nilpotent");
    std::vector<Vector> units;
    for (std::size_t i = 0; i < n; ++i)
        units.push_back(Vector::unit(f, n, i));
    return projective_points(f, n, units, budget);
}

// Least-dimensional irreducible submodule (smallest cyclic submodule).
std::vector<Vector> minimal_submodule(const RepMatrices& rep, std::size_t budget)
{
    auto trivial = linalg::common_kernel({rep.e, rep.h, rep.f});
    if (!trivial.empty())
        return linalg::span_basis(rep.field(), rep.dim(), {trivial.front()});
    std::vector<Vector> best;
    for (const auto& v : submodule_generators(rep, budget)) {
        auto sub = generated_submodule(rep, {v});
        if (best.empty() || sub.size() < best.size())
            best = std::move(sub);
    }
    return best;
}

} // namespace

CompositionSeries composition_series(const RepMatrices& rep, std::size_t budget)
{
    const Field& f = rep.field();
    std::size_t n = rep.dim();
    CompositionSeries out;
    out.trivial_submodule = linalg::span_basis(f, n, linalg::common_kernel({rep.e, rep.h, rep.f}));

    std::vector<Vector> current;
    while (current.size() < n) {
        Quotient q = quotient(rep, current);
        auto piece = minimal_submodule(q.rep, budget);
        std::vector<Vector> grown = current;
        for (const auto& v : piece) {
            Vector lifted(f, n);
            for (std::size_t r = 0; r < q.free_positions.size(); ++r)
                lifted[q.free_positions[r]] = v[r];
            grown.push_back(lifted);
        }
        current = linalg::span_basis(f, n, grown);
        out.factor_dims.push_back(piece.size());
        out.flag.push_back(current);
    }
    return out;
}

bool has_proper_submodule(const RepMatrices& rep, std::size_t budget)
{
    if (!nilpotent(rep.e))
        throw PreconditionError("has_proper_submodule needs rho(E) nilpotent");
    std::size_t n = rep.dim();
    if (n <= 1)
        return false;
    auto kernel = linalg::kernel_basis(rep.e);
    if (rep.field().characteristic() == 0)
        return kernel.size() > 1 || generated_submodule(rep, kernel).size() < n;
    for (const auto& v : projective_points(rep.field(), n, kernel, budget))
        if (generated_submodule(rep, {v}).size() < n)
            return true;
    return false;
}

} // namespace superbracket
