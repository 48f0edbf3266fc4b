#pragma once

// Shared test helpers: a seeded generator and oracles that recompute facts
// without going through the code under test.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "superbracket/constructions.hpp"
#include "superbracket/linalg.hpp"

namespace testing {

using namespace superbracket;

inline std::uint64_t seed()
{
    static const std::uint64_t s = [] {
        const char* env = std::getenv("SUPERBRACKET_SEED");
        std::uint64_t v = env ? std::strtoull(env, nullptr, 10) : 20261016ULL;
        std::cerr << "SUPERBRACKET_SEED=" << v << "\n";
        return v;
    }();
    return s;
}

class Gen {
  public:
    explicit Gen(std::uint64_t salt = 0) : rng_(seed() ^ (salt * 0x9E3779B97F4A7C15ULL)) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Scalar scalar(const Field& f)
    {
        if (f.is_rationals()) {
            long num = integer(-9, 9);
            long den = integer(1, 4);
            return Scalar(f, mpq_class(num, den));
        }
        return Scalar(f, integer(0, static_cast<long>(f.characteristic()) - 1));
    }

    Scalar nonzero_scalar(const Field& f)
    {
        for (;;) {
            Scalar s = scalar(f);
            if (!s.is_zero())
                return s;
        }
    }

    Matrix matrix(const Field& f, std::size_t r, std::size_t c)
    {
        Matrix m(f, r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                m(i, j) = scalar(f);
        return m;
    }

    Matrix invertible(const Field& f, std::size_t n)
    {
        for (;;) {
            Matrix m = matrix(f, n, n);
            if (linalg::is_invertible(m))
                return m;
        }
    }

    Vector vector(const Field& f, std::size_t n)
    {
        Vector v(f, n);
        for (std::size_t i = 0; i < n; ++i)
            v[i] = scalar(f);
        return v;
    }

  private:
    std::mt19937_64 rng_;
};

// Full bracket on g0 + g1 (even coordinates first), built from the stored
// tensors with no reference to the library's validators.
struct TotalBracket {
    const SuperAlgebra& g;

    std::size_t n() const { return g.dim_even() + g.dim_odd(); }
    int parity(std::size_t i) const { return i < g.dim_even() ? 0 : 1; }

    Vector operator()(std::size_t i, std::size_t j) const
    {
        std::size_t d0 = g.dim_even();
        Vector out(g.field(), n());
        if (i < d0 && j < d0) {
            for (std::size_t k = 0; k < d0; ++k)
                out[k] = g.bracket(i, j, k);
        } else if (i < d0) {
            for (std::size_t w = 0; w < g.dim_odd(); ++w)
                out[d0 + w] = g.action(i, j - d0, w);
        } else if (j < d0) {
            for (std::size_t w = 0; w < g.dim_odd(); ++w)
                out[d0 + w] = -g.action(j, i - d0, w);
        } else {
            for (std::size_t k = 0; k < d0; ++k)
                out[k] = g.p(i - d0, j - d0, k);
        }
        return out;
    }

    Vector apply(const Vector& a, const Vector& b) const
    {
        Vector out(g.field(), n());
        for (std::size_t i = 0; i < n(); ++i) {
            if (a[i].is_zero())
                continue;
            for (std::size_t j = 0; j < n(); ++j)
                if (!b[j].is_zero())
                    out += (a[i] * b[j]) * (*this)(i, j);
        }
        return out;
    }
};

// Graded Jacobi (-1)^{|x||z|}[x,[y,z]] + cyclic = 0 on all homogeneous
// basis triples; characteristic not 2 or 3.
inline bool naive_super_jacobi(const SuperAlgebra& g)
{
    TotalBracket br{g};
    std::size_t n = br.n();
    const Field& f = g.field();
    auto unit = [&](std::size_t i) { return Vector::unit(f, n, i); };
    auto sign = [&](int a, int b) { return (a & b) ? Scalar(f, -1) : Scalar::one(f); };
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                int px = br.parity(x), py = br.parity(y), pz = br.parity(z);
                Vector sum = sign(px, pz) * br.apply(unit(x), br(y, z)) + sign(py, px) * br.apply(unit(y), br(z, x)) +
                             sign(pz, py) * br.apply(unit(z), br(x, y));
                if (!sum.is_zero())
                    return false;
            }
    return true;
}

// Relations for P evaluated on every ordered triple and every x, as a
// linear system over the full (u, v, x) index set (no symmetry reduction).
inline std::size_t naive_p_space_dim(const SuperAlgebra& even, const std::vector<Matrix>& action)
{
    const Field& f = even.field();
    std::size_t d0 = even.dim_even();
    std::size_t d1 = action.front().rows();
    auto idx = [&](std::size_t u, std::size_t v, std::size_t x) { return (u * d1 + v) * d0 + x; };
    std::size_t n = d1 * d1 * d0;
    std::vector<Vector> rows;
    // symmetry
    for (std::size_t u = 0; u < d1; ++u)
        for (std::size_t v = 0; v < d1; ++v)
            for (std::size_t x = 0; x < d0; ++x) {
                Vector eq(f, n);
                eq[idx(u, v, x)] += Scalar::one(f);
                eq[idx(v, u, x)] -= Scalar::one(f);
                rows.push_back(eq);
            }
    for (std::size_t u = 0; u < d1; ++u)
        for (std::size_t v = 0; v < d1; ++v)
            for (std::size_t w = 0; w < d1; ++w)
                for (std::size_t y = 0; y < d1; ++y) {
                    Vector eq(f, n);
                    for (std::size_t x = 0; x < d0; ++x) {
                        eq[idx(u, v, x)] += action[x](y, w);
                        eq[idx(v, w, x)] += action[x](y, u);
                        eq[idx(w, u, x)] += action[x](y, v);
                    }
                    rows.push_back(eq);
                }
    for (std::size_t x = 0; x < d0; ++x)
        for (std::size_t u = 0; u < d1; ++u)
            for (std::size_t v = 0; v < d1; ++v)
                for (std::size_t z = 0; z < d0; ++z) {
                    Vector eq(f, n);
                    for (std::size_t y = 0; y < d0; ++y)
                        eq[idx(u, v, y)] += even.bracket(x, y, z);
                    for (std::size_t a = 0; a < d1; ++a) {
                        eq[idx(a, v, z)] -= action[x](a, u);
                        eq[idx(u, a, z)] -= action[x](a, v);
                    }
                    rows.push_back(eq);
                }
    return n - linalg::rank(Matrix::from_rows(f, n, rows));
}

inline std::vector<Matrix> rep_list(const RepMatrices& r)
{
    return {r.e, r.h, r.f};
}

inline RepMatrices irrep(unsigned m, const Field& f)
{
    return build_irrep(integral_spec(m, f), f);
}

inline RepMatrices irrep_sum(const Field& f, const std::vector<unsigned>& dims)
{
    RepMatrices r = irrep(dims[0] - 1, f);
    for (std::size_t i = 1; i < dims.size(); ++i)
        r = direct_sum(r, irrep(dims[i] - 1, f));
    return r;
}

/// sl2 + V with P = 0.
inline SuperAlgebra with_zero_p(const Field& f, const RepMatrices& rep)
{
    return assemble(sl2_algebra(f), rep, PTensor(f, rep.dim(), 3));
}

/// g rewritten in a random graded basis.
inline SuperAlgebra random_rebase(const SuperAlgebra& g, Gen& gen)
{
    return change_basis(g, gen.invertible(g.field(), g.dim_even()), gen.invertible(g.field(), g.dim_odd()));
}

} // namespace testing
