#include <doctest.h>

#include "superbracket/errors.hpp"
#include "superbracket/linalg.hpp"
#include "support.hpp"

using namespace superbracket;
using testing::Gen;

namespace {

Matrix rows(const Field& f, std::initializer_list<std::initializer_list<long>> data)
{
    std::vector<Vector> rs;
    std::size_t cols = data.begin()->size();
    for (auto r : data)
        rs.emplace_back(f, r);
    return Matrix::from_rows(f, cols, rs);
}

// Scalar multiple test: a = c b for some c.
bool proportional(const Vector& a, const Vector& b)
{
    return linalg::rank(Matrix::from_rows(a.field(), a.size(), {a, b})) <= 1;
}

} // namespace

TEST_CASE("int_image reduces into the field")
{
    CHECK(int_image(7, Field::prime(5)).to_string() == "2");
    CHECK(int_image(-2, Field::prime(7)).to_string() == "5");
    CHECK(int_image(3, Field::rationals()).to_string() == "3/1");
}

TEST_CASE("field specs")
{
    CHECK(Field::parse("q").is_rationals());
    CHECK(Field::parse("fp:13").characteristic() == 13);
    CHECK_THROWS_AS(Field::prime(9), FieldError);
    CHECK_THROWS_AS(Field::prime(1), FieldError);
    CHECK_THROWS_AS(Field::parse("fp:x"), FieldError);
    CHECK_THROWS_AS(Field::parse("r"), FieldError);
}

TEST_CASE("scalars keep canonical form")
{
    Field q = Field::rationals();
    CHECK(Scalar::parse(q, "6/-4").to_string() == "-3/2");
    CHECK(Scalar::parse(q, "-0/5").to_string() == "0/1");
    CHECK(Scalar::parse(Field::prime(7), "-1").to_string() == "6");
    CHECK_THROWS_AS(Scalar::parse(Field::prime(7), "1/2"), FieldError);
    CHECK_THROWS_AS(Scalar::parse(q, "1/0"), FieldError);
    CHECK_THROWS_AS(Scalar::parse(q, "abc"), FieldError);
    CHECK_THROWS_AS(Scalar(q, 1) + Scalar(Field::prime(5), 1), FieldError);
    CHECK_THROWS(Scalar::zero(q).inverse());
    CHECK(Scalar(Field::prime(7), 3).inverse() == Scalar(Field::prime(7), 5));
}

TEST_CASE("square roots")
{
    Field f5 = Field::prime(5);
    CHECK(Scalar(f5, 4).sqrt().has_value());
    CHECK_FALSE(Scalar(f5, 2).sqrt().has_value());
    auto r = Scalar(Field::rationals(), mpq_class(9, 4)).sqrt();
    REQUIRE(r.has_value());
    CHECK((*r * *r).to_string() == "9/4");
    CHECK_FALSE(Scalar(Field::rationals(), -1).sqrt().has_value());
}

TEST_CASE("kernel_basis examples")
{
    Field q = Field::rationals();
    auto k = linalg::kernel_basis(rows(q, {{1, 1}, {2, 2}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0] == Vector(q, {-1, 1}));

    CHECK(linalg::kernel_basis(Matrix::identity(q, 3)).empty());

    // Over F_5 the kernel of [[2,1],[4,2]] is the line through (1,3); the
    // free-variable normalisation (last coordinate 1) picks (2,1) on it.
    Field f5 = Field::prime(5);
    auto k5 = linalg::kernel_basis(rows(f5, {{2, 1}, {4, 2}}));
    REQUIRE(k5.size() == 1);
    CHECK(proportional(k5[0], Vector(f5, {1, 3})));
    CHECK(k5[0] == Vector(f5, {2, 1}));
}

TEST_CASE("solve_linear and eigenspace")
{
    Field q = Field::rationals();
    auto x = linalg::solve_linear(Matrix::identity(q, 2), Vector(q, {4, 9}));
    REQUIRE(x.has_value());
    CHECK(*x == Vector(q, {4, 9}));
    CHECK_FALSE(linalg::solve_linear(rows(q, {{1, 1}, {1, 1}}), Vector(q, {0, 1})).has_value());
    CHECK_THROWS_AS(linalg::solve_linear(Matrix::identity(q, 2), Vector(q, {1, 2, 3})), DimensionError);

    auto e = linalg::eigenspace(Matrix::diagonal(Vector(q, {2, 0, -2})), Scalar(q, 2));
    REQUIRE(e.size() == 1);
    CHECK(e[0] == Vector(q, {1, 0, 0}));

    // ad(H) on sl(2) in the basis (E, H, F), written out by hand.
    Matrix ad_h = Matrix::diagonal(Vector(q, {2, 0, -2}));
    auto zero = linalg::eigenspace(ad_h, Scalar(q, 0));
    REQUIRE(zero.size() == 1);
    CHECK(zero[0] == Vector(q, {0, 1, 0}));
    CHECK_THROWS_AS(linalg::eigenspace(Matrix(q, 2, 3), Scalar(q, 0)), DimensionError);
}

TEST_CASE("shape errors")
{
    Field q = Field::rationals();
    CHECK_THROWS_AS(Matrix(q, 2, 3) * Matrix(q, 2, 3), DimensionError);
    CHECK_THROWS_AS(Matrix(q, 2, 2) + Matrix(q, 3, 3), DimensionError);
    CHECK_THROWS_AS(linalg::determinant(Matrix(q, 2, 3)), DimensionError);
}

TEST_CASE("field axioms on random scalars")
{
    Gen gen(1);
    for (Field f : {Field::rationals(), Field::prime(5), Field::prime(7), Field::prime(2147483647)}) {
        for (int trial = 0; trial < 200; ++trial) {
            Scalar a = gen.scalar(f), b = gen.scalar(f), c = gen.scalar(f);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a - a == Scalar::zero(f));
            if (!a.is_zero())
                CHECK(a * a.inverse() == Scalar::one(f));
        }
    }
}

TEST_CASE("int_image is a ring homomorphism")
{
    Gen gen(2);
    for (Field f : {Field::rationals(), Field::prime(3), Field::prime(11)}) {
        for (int trial = 0; trial < 200; ++trial) {
            long a = gen.integer(-1000, 1000), b = gen.integer(-1000, 1000);
            CHECK(int_image(a + b, f) == int_image(a, f) + int_image(b, f));
            CHECK(int_image(a * b, f) == int_image(a, f) * int_image(b, f));
        }
    }
}

TEST_CASE("kernel basis is a basis of the kernel")
{
    Gen gen(3);
    for (Field f : {Field::rationals(), Field::prime(5), Field::prime(2)}) {
        for (int trial = 0; trial < 60; ++trial) {
            auto r = static_cast<std::size_t>(gen.integer(1, 5));
            auto c = static_cast<std::size_t>(gen.integer(1, 6));
            // Low-rank products make nontrivial kernels common.
            auto k = static_cast<std::size_t>(gen.integer(1, 3));
            Matrix m = gen.matrix(f, r, k) * gen.matrix(f, k, c);
            auto basis = linalg::kernel_basis(m);
            CHECK(basis.size() == c - linalg::rank(m));
            for (const auto& v : basis)
                CHECK((m * v).is_zero());
            if (!basis.empty())
                CHECK(linalg::rank(Matrix::from_rows(f, c, basis)) == basis.size());
        }
    }
}

TEST_CASE("inverse and determinant agree")
{
    Gen gen(4);
    for (Field f : {Field::rationals(), Field::prime(7)}) {
        for (int trial = 0; trial < 40; ++trial) {
            auto n = static_cast<std::size_t>(gen.integer(1, 5));
            Matrix m = gen.matrix(f, n, n);
            bool invertible = !linalg::determinant(m).is_zero();
            CHECK(invertible == linalg::is_invertible(m));
            if (invertible) {
                CHECK(linalg::inverse(m) * m == Matrix::identity(f, n));
                Matrix b = gen.matrix(f, n, n);
                CHECK(linalg::determinant(m * b) == linalg::determinant(m) * linalg::determinant(b));
            }
        }
    }
}

TEST_CASE("rationals do not overflow")
{
    Field q = Field::rationals();
    Scalar x(q, mpq_class(1, 3));
    for (int i = 0; i < 200; ++i)
        x = x * Scalar(q, mpq_class(1000003, 999983));
    CHECK(x.rational().get_den().get_str().size() > 1000);
    CHECK(x * x.inverse() == Scalar::one(q));
}
