#include <doctest.h>

#include <chrono>
#include <numeric>

#include "superbracket/pspace.hpp"
#include "support.hpp"

using namespace superbracket;
using testing::Gen;
using testing::irrep;
using testing::rep_list;

namespace {

const Field Q = Field::rationals();
const Field F5 = Field::prime(5);
const Field F7 = Field::prime(7);

std::size_t dim_of(const Field& f, const RepMatrices& rep)
{
    return p_solution_space(sl2_algebra(f), rep).dim;
}

std::size_t naive_dim(const Field& f, const RepMatrices& rep)
{
    return testing::naive_p_space_dim(sl2_algebra(f), rep_list(rep));
}

RepMatrices sum_with_trivial(const RepMatrices& r, std::size_t n)
{
    return n == 0 ? r : direct_sum(r, trivial_rep(n, r.e.field()));
}

} // namespace

TEST_CASE("irreducible odd parts: only dim 2 carries a nonzero P")
{
    for (Field f : {Q, F5, F7}) {
        unsigned top = f.is_rationals() ? 4 : static_cast<unsigned>(f.characteristic() - 2);
        for (unsigned m = 0; m <= top; ++m) {
            INFO("m=" << m);
            CHECK(dim_of(f, irrep(m, f)) == (m == 1 ? 1u : 0u));
        }
    }
    CHECK(dim_of(F7, irrep(4, F7)) == 0);
}

TEST_CASE("dimension p irreducibles have P = 0")
{
    for (long beta = 0; beta < 5; ++beta)
        CHECK(dim_of(F5, build_irrep({4, Scalar(F5, 4), Scalar(F5, beta)}, F5)) == 0);
}

TEST_CASE("standard rep basis normalises to (-2E, H, 2F)")
{
    for (Field f : {Q, F5, F7}) {
        auto space = p_solution_space(sl2_algebra(f), irrep(1, f));
        REQUIRE(space.dim == 1);
        const PTensor& t = space.basis[0];
        Scalar scale = t(0, 1, 1).inverse();
        auto entry = [&](std::size_t u, std::size_t v, std::size_t x) { return scale * t(u, v, x); };
        CHECK(entry(0, 0, 0) == Scalar(f, -2));
        CHECK(entry(0, 0, 1).is_zero());
        CHECK(entry(0, 0, 2).is_zero());
        CHECK(entry(0, 1, 0).is_zero());
        CHECK(entry(0, 1, 1) == Scalar(f, 1));
        CHECK(entry(0, 1, 2).is_zero());
        CHECK(entry(1, 1, 0).is_zero());
        CHECK(entry(1, 1, 1).is_zero());
        CHECK(entry(1, 1, 2) == Scalar(f, 2));
    }
}

TEST_CASE("trivial and mixed odd parts")
{
    for (Field f : {Q, F5}) {
        for (std::size_t n = 1; n <= 4; ++n)
            CHECK(dim_of(f, trivial_rep(n, f)) == 0);
        // P(W, t) = c(t) w for a functional c on the trivial part.
        for (std::size_t n = 1; n <= 3; ++n)
            CHECK(dim_of(f, sum_with_trivial(irrep(2, f), n)) == n);
        CHECK(dim_of(f, sum_with_trivial(irrep(3, f), 1)) == 0);
        CHECK(dim_of(f, sum_with_trivial(irrep(1, f), 2)) == 1);
        CHECK(dim_of(f, direct_sum(irrep(1, f), irrep(1, f))) == 0);
        CHECK(dim_of(f, direct_sum(irrep(2, f), irrep(2, f))) == 0);
    }
}

TEST_CASE("adjoint plus trivial reproduces the double's P up to scale")
{
    SuperAlgebra d = build_double(sl2_algebra(Q), Matrix::identity(Q, 3));
    RepMatrices rep{d.rho(0), d.rho(1), d.rho(2)};
    auto space = p_solution_space(sl2_algebra(Q), rep);
    REQUIRE(space.dim == 1);
    PTensor target = p_tensor_of(d);
    const PTensor& t = space.basis[0];
    Scalar scale = target(0, 3, 0) * t(0, 3, 0).inverse();
    for (std::size_t u = 0; u < 4; ++u)
        for (std::size_t v = 0; v < 4; ++v)
            for (std::size_t x = 0; x < 3; ++x)
                CHECK(scale * t(u, v, x) == target(u, v, x));
}

TEST_CASE("symmetric-pattern system agrees with the naive one")
{
    Gen gen(41);
    for (Field f : {Q, F5, F7}) {
        for (unsigned m = 0; m <= 2; ++m)
            CHECK(dim_of(f, irrep(m, f)) == naive_dim(f, irrep(m, f)));
        for (std::size_t n = 1; n <= 3; ++n)
            CHECK(dim_of(f, trivial_rep(n, f)) == naive_dim(f, trivial_rep(n, f)));
        RepMatrices r = testing::irrep_sum(f, {2, 1});
        CHECK(dim_of(f, r) == naive_dim(f, r));
        for (int trial = 0; trial < 3; ++trial) {
            RepMatrices c = conjugate(r, gen.invertible(f, 3));
            CHECK(dim_of(f, c) == naive_dim(f, c));
        }
    }
    // Non-sl2 even parts through the general entry point.
    SuperAlgebra::Builder heis(Q, 3, 0, AxiomMode::Standard);
    heis.bracket(0, 1, 2, Scalar(Q, 1));
    SuperAlgebra h = heis.build();
    std::vector<Matrix> zero(3, Matrix(Q, 2, 2));
    CHECK(p_solution_space(h, zero).dim == testing::naive_p_space_dim(h, zero));
}

TEST_CASE("every basis tensor assembles into a valid superalgebra")
{
    std::vector<std::pair<Field, RepMatrices>> inputs{
        {Q, irrep(1, Q)},
        {Q, sum_with_trivial(irrep(2, Q), 2)},
        {F5, sum_with_trivial(irrep(1, F5), 1)},
        {F7, sum_with_trivial(irrep(2, F7), 1)},
    };
    for (const auto& [f, rep] : inputs) {
        auto space = p_solution_space(sl2_algebra(f), rep);
        CHECK(space.dim == space.basis.size());
        for (const auto& t : space.basis) {
            CHECK_FALSE(t.is_zero());
            CHECK_NOTHROW(assemble(sl2_algebra(f), rep, t));
        }
    }
}

TEST_CASE("solution dimension is invariant under a change of basis of the rep")
{
    Gen gen(42);
    for (Field f : {Q, F5}) {
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<unsigned> dims{static_cast<unsigned>(gen.integer(1, 3)), static_cast<unsigned>(gen.integer(1, 2))};
            RepMatrices r = testing::irrep_sum(f, dims);
            RepMatrices c = conjugate(r, gen.invertible(f, r.dim()));
            CHECK(dim_of(f, c) == dim_of(f, r));
        }
    }
}

TEST_CASE("Char3 mode adds the cubic identity")
{
    SuperAlgebra g = build_char3_example();
    std::vector<Matrix> act = g.action_matrices();
    auto space = p_solution_space(g.even_part(), act);
    CHECK(space.dim >= 1);
    // The example's own P is in the space.
    PTensor own = p_tensor_of(g);
    Matrix system = p_relation_system(g.even_part(), act);
    std::size_t d1 = g.dim_odd();
    Vector flat(g.field(), system.cols());
    std::size_t col = 0;
    for (std::size_t u = 0; u < d1; ++u)
        for (std::size_t v = u; v < d1; ++v)
            for (std::size_t x = 0; x < 3; ++x)
                flat[col++] = own(u, v, x);
    CHECK((system * flat).is_zero());
}

TEST_CASE("relation system rejects bad input")
{
    CHECK_THROWS_AS(p_solution_space(sl2_algebra(Q), std::vector<Matrix>(2, Matrix(Q, 2, 2))), DimensionError);
    std::vector<Matrix> ragged{Matrix(Q, 2, 2), Matrix(Q, 2, 2), Matrix(Q, 3, 3)};
    CHECK_THROWS_AS(p_solution_space(sl2_algebra(Q), ragged), DimensionError);
    Field f2 = Field::prime(2);
    CHECK_THROWS_AS(p_solution_space(sl2_algebra(f2), std::vector<Matrix>(3, Matrix(f2, 1, 1))), ModeError);
}

TEST_CASE("sweep over F_5")
{
    auto t0 = std::chrono::steady_clock::now();
    auto rows = enumerate_reps_and_solve(5, 6);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(seconds < 60.0);

    // Partitions of 1..6 into parts of size at most 5.
    CHECK(rows.size() == 1 + 2 + 3 + 5 + 7 + 10);
    for (const auto& row : rows) {
        INFO("composition size " << row.composition.size() << " first " << row.composition.front());
        std::size_t ones = 0, twos = 0, threes = 0, other = 0;
        for (unsigned d : row.composition)
            (d == 1 ? ones : d == 2 ? twos : d == 3 ? threes : other)++;
        std::size_t expected = 0;
        if (twos == 1 && threes == 0 && other == 0)
            expected = 1;
        else if (threes == 1 && twos == 0 && other == 0)
            expected = ones;
        CHECK(row.dim == expected);
        CHECK(row.dim == row.space.dim);
        CHECK(row.rep.dim() == std::accumulate(row.composition.begin(), row.composition.end(), 0u));
    }
    // Ordering: total dimension, then decreasing lexicographic.
    CHECK(rows[0].composition == std::vector<unsigned>{1});
    CHECK(rows[1].composition == std::vector<unsigned>{2});
    CHECK(rows[2].composition == std::vector<unsigned>{1, 1});
    CHECK(rows.back().composition == std::vector<unsigned>(6, 1));
}

TEST_CASE("sweep examples and budgets")
{
    auto rows = enumerate_reps_and_solve(5, 5);
    auto find = [&](std::vector<unsigned> c) {
        for (const auto& r : rows)
            if (r.composition == c)
                return r.dim;
        FAIL("composition missing");
        return std::size_t{0};
    };
    CHECK(find({2}) == 1);
    CHECK(find({3}) == 0);
    CHECK(find({4, 1}) == 0);
    CHECK(find({5}) == 0);

    CHECK_THROWS_AS(enumerate_reps_and_solve(11, 4), PreconditionError);
    CHECK_THROWS_AS(enumerate_reps_and_solve(5, 9), BudgetError);
}
