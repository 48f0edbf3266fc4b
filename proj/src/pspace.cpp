#include "superbracket/pspace.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "superbracket/linalg.hpp"

namespace superbracket {

namespace {

struct Unknowns {
    std::size_t d1, d0;

    std::size_t pair(std::size_t u, std::size_t v) const
    {
        if (u > v)
            std::swap(u, v);
        // Row-major index of (u, v) among pairs with u <= v.
        return u * d1 - u * (u - 1) / 2 + (v - u);
    }
    std::size_t operator()(std::size_t u, std::size_t v, std::size_t x) const { return pair(u, v) * d0 + x; }
    std::size_t count() const { return d1 * (d1 + 1) / 2 * d0; }
};

void check_inputs(const SuperAlgebra& even, const std::vector<Matrix>& action)
{
    if (even.field().characteristic() == 2)
        throw ModeError("the P-relation system is not set up in characteristic 2");
    if (action.size() != even.dim_even())
        throw DimensionError("one action matrix per even basis vector is required");
    std::size_t m = action.empty() ? 0 : action.front().rows();
    for (const auto& a : action)
        if (a.rows() != m || a.cols() != m)
            throw DimensionError("action matrices must be square of equal size");
}

} // namespace

Matrix p_relation_system(const SuperAlgebra& even, const std::vector<Matrix>& action)
{
    check_inputs(even, action);
    const Field& f = even.field();
    std::size_t d0 = even.dim_even();
    std::size_t d1 = action.empty() ? 0 : action.front().rows();
    Unknowns idx{d1, d0};
    std::size_t n = idx.count();
    std::vector<Vector> rows;

    // P(u,v)w + P(v,w)u + P(w,u)v = 0 for u <= v <= w, component y.
    // P(a,b)c has y-component sum_x P(a,b)_x rho(x)(y, c).
    for (std::size_t u = 0; u < d1; ++u)
        for (std::size_t v = u; v < d1; ++v)
            for (std::size_t w = v; w < d1; ++w)
                for (std::size_t y = 0; y < d1; ++y) {
                    Vector eq(f, n);
                    const std::size_t cyc[3][3] = {{u, v, w}, {v, w, u}, {w, u, v}};
                    for (const auto& c : cyc)
                        for (std::size_t x = 0; x < d0; ++x)
                            eq[idx(c[0], c[1], x)] += action[x](y, c[2]);
                    if (!eq.is_zero())
                        rows.push_back(std::move(eq));
                }

    // [e_x, P(u,v)] = P(e_x u, v) + P(u, e_x v) for u <= v, component z.
    for (std::size_t x = 0; x < d0; ++x)
        for (std::size_t u = 0; u < d1; ++u)
            for (std::size_t v = u; v < d1; ++v)
                for (std::size_t z = 0; z < d0; ++z) {
                    Vector eq(f, n);
                    for (std::size_t y = 0; y < d0; ++y)
                        eq[idx(u, v, y)] += even.bracket(x, y, z);
                    for (std::size_t a = 0; a < d1; ++a) {
                        eq[idx(a, v, z)] -= action[x](a, u);
                        eq[idx(u, a, z)] -= action[x](a, v);
                    }
                    if (!eq.is_zero())
                        rows.push_back(std::move(eq));
                }

    // Characteristic 3: P(t,t)t = 0 for t = sum t_i v_i. The coefficient of
    // t_a t_b t_c (a <= b <= c) sums P(i,j)k over distinct orderings.
    if (f.characteristic() == 3)
        for (std::size_t a = 0; a < d1; ++a)
            for (std::size_t b = a; b < d1; ++b)
                for (std::size_t c = b; c < d1; ++c) {
                    std::array<std::size_t, 3> perm{a, b, c};
                    for (std::size_t y = 0; y < d1; ++y) {
                        Vector eq(f, n);
                        std::array<std::size_t, 3> q = perm;
                        do {
                            for (std::size_t x = 0; x < d0; ++x)
                                eq[idx(q[0], q[1], x)] += action[x](y, q[2]);
                        } while (std::next_permutation(q.begin(), q.end()));
                        if (!eq.is_zero())
                            rows.push_back(std::move(eq));
                    }
                }

    if (rows.empty())
        return Matrix(f, 0, n);
    return Matrix::from_rows(f, n, rows);
}

PSolutionSpace p_solution_space(const SuperAlgebra& even, const std::vector<Matrix>& action)
{
    Matrix system = p_relation_system(even, action);
    const Field& f = even.field();
    std::size_t d0 = even.dim_even();
    std::size_t d1 = action.empty() ? 0 : action.front().rows();
    Unknowns idx{d1, d0};
    PSolutionSpace out;
    for (const auto& v : linalg::kernel_basis(system)) {
        PTensor t(f, d1, d0);
        for (std::size_t u = 0; u < d1; ++u)
            for (std::size_t w = u; w < d1; ++w)
                for (std::size_t x = 0; x < d0; ++x)
                    t.set(u, w, x, v[idx(u, w, x)]);
        out.basis.push_back(std::move(t));
    }
    out.dim = out.basis.size();
    return out;
}

PSolutionSpace p_solution_space(const SuperAlgebra& even, const RepMatrices& rep)
{
    if (even.dim_even() != 3)
        throw DimensionError("RepMatrices need a 3-dim even part in the basis (E, H, F)");
    return p_solution_space(even, std::vector<Matrix>{rep.e, rep.h, rep.f});
}

std::vector<SweepRow> enumerate_reps_and_solve(std::uint64_t p, std::size_t max_odd_dim)
{
    if (p != 5 && p != 7)
        throw PreconditionError("the sweep runs over F_5 or F_7");
    if (max_odd_dim > 8)
        throw BudgetError("sweep odd dimension is capped at 8, asked for " + std::to_string(max_odd_dim));
    Field f = Field::prime(p);
    SuperAlgebra sl2 = sl2_algebra(f);
    std::vector<SweepRow> rows;

    // Partitions of `total` into parts <= p, parts non-increasing, visited
    // in decreasing lexicographic order.
    std::vector<unsigned> parts;
    std::function<void(std::size_t, unsigned)> visit = [&](std::size_t remaining, unsigned largest) {
        if (remaining == 0) {
            RepMatrices rep = build_irrep(integral_spec(parts[0] - 1, f), f);
            for (std::size_t i = 1; i < parts.size(); ++i)
                rep = direct_sum(rep, build_irrep(integral_spec(parts[i] - 1, f), f));
            SweepRow row{p, parts, 0, p_solution_space(sl2, rep), rep};
            row.dim = row.space.dim;
            rows.push_back(std::move(row));
            return;
        }
        for (unsigned d = std::min<std::size_t>(largest, remaining); d >= 1; --d) {
            parts.push_back(d);
            visit(remaining - d, d);
            parts.pop_back();
        }
    };
    for (std::size_t total = 1; total <= max_odd_dim; ++total)
        visit(total, static_cast<unsigned>(p));
    return rows;
}

} // namespace superbracket
