#include "galt/errors.hpp"
#include "galt/multiplier.hpp"

namespace galt {

MultiplierPair zero_pair(const Field& f, std::size_t n) { return {Matrix(f, n, n), Matrix(f, n, n)}; }

MultiplierPair operator+(const MultiplierPair& f, const MultiplierPair& g)
{
    return {f.left + g.left, f.right + g.right};
}

MultiplierPair operator-(const MultiplierPair& f, const MultiplierPair& g)
{
    return {f.left - g.left, f.right - g.right};
}

MultiplierPair operator*(const Scalar& c, const MultiplierPair& f) { return {c * f.left, c * f.right}; }

MultiplierPair pair_mul(const MultiplierPair& f, const MultiplierPair& g)
{
    if (f.dim() != g.dim())
        throw DimensionMismatch("pair_mul: pairs over algebras of different dimension");
    Matrix lf_rg = f.left * g.right;
    Matrix rg_lf = g.right * f.left;
    return {f.left * g.left + lf_rg - rg_lf, g.right * f.right + rg_lf - lf_rg};
}

Vector to_vector(const MultiplierPair& f)
{
    Vector v = f.left.entries();
    v.insert(v.end(), f.right.entries().begin(), f.right.entries().end());
    return v;
}

MultiplierPair pair_from_vector(const Field& field, std::size_t n, const Vector& v)
{
    if (v.size() != 2 * n * n)
        throw DimensionMismatch("pair vector of length " + std::to_string(v.size()) + " for dimension " +
                                std::to_string(n));
    MultiplierPair f = zero_pair(field, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            f.left(r, c) = v[r * n + c];
            f.right(r, c) = v[n * n + r * n + c];
        }
    return f;
}

MultiplierPair d(const Algebra& a, const Vector& x) { return {a.left_operator(x), a.right_operator(x)}; }

DMap d_map(const Algebra& a)
{
    std::vector<Vector> cols;
    for (std::size_t x = 0; x < a.dim(); ++x)
        cols.push_back(to_vector(MultiplierPair{a.left_basis_operator(x), a.right_basis_operator(x)}));
    Matrix m = Matrix::from_columns(a.field(), 2 * a.dim() * a.dim(), cols);
    Subspace k = kernel(m);
    return {std::move(m), std::move(k)};
}

std::string_view b_identity_name(BIdentity w)
{
    switch (w) {
    case BIdentity::b1:
        return "B1";
    case BIdentity::b2:
        return "B2";
    case BIdentity::b3:
        return "B3";
    case BIdentity::b4:
        return "B4";
    }
    return "?";
}

Vector identity_B(BIdentity which, const MultiplierPair& b1, const MultiplierPair& b2, const MultiplierPair& b3,
                  const Vector& a)
{
    // B1/B2: -(b1(b2b3)) + ((b1b2)b3) + ((b2b1)b3) - (b2(b1b3))
    // B3/B4: -((b1b2)b3) + (b1(b2b3)) + (b1(b3b2)) - ((b1b3)b2)
    bool outer_first = which == BIdentity::b1 || which == BIdentity::b2;
    MultiplierPair combo =
        outer_first ? pair_mul(pair_mul(b1, b2), b3) + pair_mul(pair_mul(b2, b1), b3) -
                          pair_mul(b1, pair_mul(b2, b3)) - pair_mul(b2, pair_mul(b1, b3))
                    : pair_mul(b1, pair_mul(b2, b3)) + pair_mul(b1, pair_mul(b3, b2)) -
                          pair_mul(pair_mul(b1, b2), b3) - pair_mul(pair_mul(b1, b3), b2);
    bool on_left = which == BIdentity::b1 || which == BIdentity::b3;
    return on_left ? combo.left.apply(a) : combo.right.apply(a);
}

Vector expression_A(int i, const MultiplierPair& b1, const MultiplierPair& b2, const MultiplierPair& b3,
                    const Vector& a)
{
    const Matrix &l1 = b1.left, &l2 = b2.left, &l3 = b3.left;
    const Matrix &r1 = b1.right, &r2 = b2.right, &r3 = b3.right;
    // Operators are applied right to left: l1 * l2 * l3 a = b1(b2(b3 a)).
    auto apply = [&](std::initializer_list<const Matrix*> ops) {
        Vector v = a;
        for (auto it = std::rbegin(ops); it != std::rend(ops); ++it)
            v = (*it)->apply(v);
        return v;
    };
    switch (i) {
    case 1:
        return apply({&l1, &l2, &l3}) + apply({&l1, &l2, &r3});
    case 2:
        return apply({&l1, &r3, &r2}) + apply({&l1, &r3, &l2});
    case 3:
        return apply({&r3, &r2, &l1}) + apply({&r3, &l2, &l1});
    case 4:
        return apply({&l1, &l2, &r3}) + apply({&l2, &l1, &r3});
    case 5:
        return apply({&r3, &r2, &l1}) + apply({&r3, &r1, &l2});
    case 6:
        return apply({&l1, &l2, &l3}) + apply({&l1, &r2, &l3});
    case 7:
        return apply({&l1, &l2, &r3}) + apply({&l1, &r2, &r3});
    case 8:
        return apply({&r3, &l1, &l2}) + apply({&r3, &l1, &r2});
    case 9:
        return apply({&r3, &r2, &r1}) + apply({&r3, &l2, &r1});
    case 10:
        return apply({&r2, &r1, &r3}) + apply({&r1, &r2, &r3});
    case 11:
        return apply({&l3, &l2, &r1}) + apply({&l3, &l1, &r2});
    default:
        throw ParseError("expression index must be in 1..11, got " + std::to_string(i));
    }
}

}  // namespace galt
