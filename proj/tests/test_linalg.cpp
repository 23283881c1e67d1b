#include <random>
#include <set>

#include "doctest.h"
#include "galt/errors.hpp"
#include "galt/subspace.hpp"
#include "support.hpp"

using namespace galt;

namespace {

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> v(-4, 4);
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = f.from_int(v(rng));
    return m;
}

Vector vec(const Field& f, std::initializer_list<int> xs)
{
    Vector v;
    for (int x : xs)
        v.push_back(f.from_int(x));
    return v;
}

// Span of a list over a small prime field, by enumerating all combinations.
std::set<std::string> brute_span(const Field& f, const std::vector<Vector>& gens, std::size_t n)
{
    std::set<std::string> out;
    for (const auto& coeffs : support::all_vectors(f, gens.size())) {
        Vector acc = zero_vector(f, n);
        for (std::size_t i = 0; i < gens.size(); ++i)
            add_scaled(acc, coeffs[i], gens[i]);
        out.insert(to_string(acc));
    }
    return out;
}

}  // namespace

TEST_CASE("scalars: residues stay in range and fractions reduce")
{
    Field f5 = Field::prime(5);
    CHECK(f5.from_int(-1).residue() == 4);
    CHECK((f5.from_int(3) * f5.from_int(2)).residue() == 1);
    CHECK((f5.from_int(2) / f5.from_int(3)).residue() == 4);
    CHECK(f5.parse_scalar("-2/7") == f5.from_int(-2) / f5.from_int(7));

    Field q = Field::rationals();
    Scalar x = q.parse_scalar("-6/4");
    CHECK(x.to_string() == "-3/2");
    CHECK(q.parse_scalar("−2/7").to_string() == "-2/7");
    CHECK_THROWS_AS(q.from_int(0).inverse(), DivisionByZero);
    CHECK_THROWS_AS(f5.from_int(1) + Field::prime(7).from_int(1), FieldMismatch);
    CHECK_THROWS_AS(Field::prime(6), PreconditionError);
    CHECK_THROWS_AS(f5.parse_scalar("1/5"), ParseError);
    CHECK_THROWS_AS(f5.parse_scalar("x"), ParseError);
}

TEST_CASE("field descriptors parse in several spellings")
{
    CHECK(Field::parse("GF(7)") == Field::prime(7));
    CHECK(Field::parse("GF7") == Field::prime(7));
    CHECK(Field::parse("7") == Field::prime(7));
    CHECK(Field::parse("Q") == Field::rationals());
    CHECK_THROWS(Field::parse("GF(8)"));
    CHECK_THROWS(Field::parse("R"));
}

TEST_CASE("rref of trivial matrices")
{
    Field q = Field::rationals();
    auto z = rref(Matrix(q, 3, 3));
    CHECK(z.rank == 0);
    CHECK(z.reduced.is_zero());
    auto id = rref(Matrix::identity(q, 4));
    CHECK(id.rank == 4);
    CHECK(id.reduced == Matrix::identity(q, 4));
}

TEST_CASE("rank over GF(2) matches the size of the enumerated span")
{
    Field f = Field::prime(2);
    std::vector<Vector> rows{vec(f, {1, 1, 0}), vec(f, {0, 1, 1}), vec(f, {1, 0, 1})};
    auto span = brute_span(f, rows, 3);
    CHECK(span.size() == 4);
    CHECK(rank(Matrix::from_rows(f, 3, rows)) == 2);
}

TEST_CASE("rref rejects entries from another field")
{
    Matrix m(Field::prime(2), 2, 2);
    m(0, 0) = Field::prime(3).one();
    CHECK_THROWS_AS(rref(m), FieldMismatch);
}

TEST_CASE("kernel over GF(5) agrees with testing every vector")
{
    Field f = Field::prime(5);
    Matrix m = Matrix::from_rows(f, 2, {vec(f, {1, 2}), vec(f, {2, 4})});
    Subspace k = kernel(m);
    REQUIRE(k.dim() == 1);
    // Pivot normalized: (1, 2) = 2 * (3, 1).
    CHECK(k.basis_vectors()[0] == vec(f, {1, 2}));
    std::size_t count = 0;
    for (const auto& v : support::all_vectors(f, 2)) {
        bool in = is_zero(m.apply(v));
        count += in;
        CHECK(k.contains(v) == in);
    }
    CHECK(count == 5);
    // (3, 1) spans the same line.
    CHECK(k.contains(vec(f, {3, 1})));
}

TEST_CASE("kernel of identity and zero")
{
    Field f = Field::prime(3);
    CHECK(kernel(Matrix::identity(f, 4)).is_zero());
    CHECK(kernel(Matrix(f, 4, 4)).is_full());
}

TEST_CASE("subspace operations on trivial arguments")
{
    Field f = Field::prime(3);
    std::mt19937_64 rng(3);
    Subspace v = Subspace::row_space(random_matrix(f, 2, 4, rng));
    CHECK(v.sum(Subspace::zero(f, 4)) == v);
    CHECK(v.intersect(Subspace::full(f, 4)) == v);
    CHECK(preimage_under(Matrix::identity(f, 4), v) == v);
    CHECK_THROWS_AS(v.sum(Subspace::zero(f, 3)), DimensionMismatch);
}

TEST_CASE("rref is idempotent and rank plus nullity is the column count")
{
    std::mt19937_64 rng(20240501);
    for (const Field& f : {Field::prime(2), Field::prime(5), Field::rationals()}) {
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
            Matrix m = random_matrix(f, rows, cols, rng);
            auto r = rref(m);
            CHECK(rref(r.reduced).reduced == r.reduced);
            CHECK(kernel(m).dim() + r.rank == cols);
            for (const auto& v : kernel(m).basis_vectors())
                CHECK(is_zero(m.apply(v)));
        }
    }
}

TEST_CASE("containment agrees with enumerated spans")
{
    std::mt19937_64 rng(99);
    for (std::uint32_t p : {2u, 3u}) {
        Field f = Field::prime(p);
        for (int trial = 0; trial < 20; ++trial) {
            std::size_t n = 1 + rng() % 4;
            std::size_t g = rng() % 4;
            std::vector<Vector> gens;
            for (std::size_t i = 0; i < g; ++i)
                gens.push_back(random_matrix(f, 1, n, rng).row(0));
            Subspace s = Subspace::span(f, n, gens);
            auto span = brute_span(f, gens, n);
            for (const auto& v : support::all_vectors(f, n))
                CHECK(s.contains(v) == (span.count(to_string(v)) == 1));
        }
    }
}

TEST_CASE("intersection and preimage agree with enumeration")
{
    std::mt19937_64 rng(5);
    Field f = Field::prime(3);
    for (int trial = 0; trial < 15; ++trial) {
        Subspace a = Subspace::row_space(random_matrix(f, 2, 3, rng));
        Subspace b = Subspace::row_space(random_matrix(f, 2, 3, rng));
        Matrix m = random_matrix(f, 3, 3, rng);
        Subspace i = a.intersect(b), pre = preimage_under(m, b);
        for (const auto& v : support::all_vectors(f, 3)) {
            CHECK(i.contains(v) == (a.contains(v) && b.contains(v)));
            CHECK(pre.contains(v) == b.contains(m.apply(v)));
        }
    }
}

TEST_CASE("invariant closure is the smallest stable subspace")
{
    Field f = Field::prime(2);
    // Shift e0 -> e1 -> e2 -> 0.
    Matrix shift(f, 3, 3);
    shift(1, 0) = f.one();
    shift(2, 1) = f.one();
    std::vector<Matrix> ops{shift};
    Subspace start = Subspace::span(f, 3, {unit_vector(f, 3, 1)});
    Subspace c = invariant_closure(start, ops);
    CHECK(c == Subspace::span(f, 3, {unit_vector(f, 3, 1), unit_vector(f, 3, 2)}));
    CHECK(invariant_closure(Subspace::zero(f, 3), ops).is_zero());
}

TEST_CASE("subspace bases are canonical")
{
    Field q = Field::rationals();
    Subspace a = Subspace::span(q, 3, {vec(q, {1, 2, 3}), vec(q, {0, 1, 1})});
    Subspace b = Subspace::span(q, 3, {vec(q, {1, 3, 4}), vec(q, {2, 4, 6})});
    CHECK(a == b);
    for (std::size_t r = 0; r < a.dim(); ++r)
        CHECK(a.basis()(r, a.pivots()[r]).is_one());
}
