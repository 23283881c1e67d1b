#include <algorithm>
#include <cctype>

#include "galt/errors.hpp"
#include "galt/multiplier.hpp"

namespace galt {

namespace {

// Residual blocks of a pair; `mult` uses only f = L. Every block is linear in
// (L, R), so evaluating it on unit pairs yields the constraint matrix.
std::vector<Vector> linear_conditions(const Algebra& a, const MultiplierPair& f, BimVariant v)
{
    const std::size_t n = a.dim();
    std::vector<Vector> out;
    std::vector<Vector> lcol, rcol;
    for (std::size_t x = 0; x < n; ++x) {
        lcol.push_back(f.left.column(x));
        rcol.push_back(f.right.column(x));
    }
    auto mul = [&](const Vector& x, const Vector& y) { return a.multiply(x, y); };
    auto e = [&](std::size_t x) { return a.basis_vector(x); };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vector& p = a.basis_product(i, j);
            const Vector& q = a.basis_product(j, i);
            switch (v) {
            case BimVariant::galt:
            case BimVariant::alt:
                out.push_back(f.left.apply(p) - mul(lcol[i], e(j)) - mul(rcol[i], e(j)) + mul(e(i), lcol[j]));
                out.push_back(f.right.apply(p) - mul(e(i), rcol[j]) - mul(e(i), lcol[j]) + mul(rcol[i], e(j)));
                out.push_back(mul(lcol[i], e(j)) - f.left.apply(p) - f.left.apply(q) + mul(lcol[j], e(i)));
                out.push_back(mul(e(i), rcol[j]) - f.right.apply(p) - f.right.apply(q) + mul(e(j), rcol[i]));
                if (v == BimVariant::alt && i <= j) {
                    // h(a) = a(fa) - (af)a; diagonal and polarized cross terms.
                    Vector h = mul(e(i), lcol[j]) - mul(rcol[i], e(j));
                    if (i < j)
                        h = h + mul(e(j), lcol[i]) - mul(rcol[j], e(i));
                    out.push_back(std::move(h));
                }
                break;
            case BimVariant::assoc:
                out.push_back(f.left.apply(p) - mul(lcol[i], e(j)));
                out.push_back(f.right.apply(p) - mul(e(i), rcol[j]));
                out.push_back(mul(rcol[i], e(j)) - mul(e(i), lcol[j]));
                break;
            case BimVariant::mult:
                out.push_back(f.left.apply(p) - mul(lcol[i], e(j)));
                break;
            }
        }
    return out;
}

Vector flatten(const std::vector<Vector>& blocks)
{
    Vector v;
    for (const auto& b : blocks)
        v.insert(v.end(), b.begin(), b.end());
    return v;
}

Subspace solve_linear(const Algebra& a, BimVariant v, std::size_t unknowns,
                      const std::function<MultiplierPair(std::size_t)>& unit)
{
    const Field& f = a.field();
    std::vector<Vector> cols;
    for (std::size_t u = 0; u < unknowns; ++u)
        cols.push_back(flatten(linear_conditions(a, unit(u), v)));
    std::size_t rows = cols.empty() ? 0 : cols[0].size();
    return kernel(Matrix::from_columns(f, rows, cols));
}

}  // namespace

std::vector<PairResidual> pair_conditions_residual(const Algebra& a, const MultiplierPair& f)
{
    if (f.dim() != a.dim())
        throw DimensionMismatch("pair and algebra dimensions differ");
    auto blocks = linear_conditions(a, f, BimVariant::galt);
    std::vector<PairResidual> out;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (int c = 0; c < 4; ++c) {
                Vector& r = blocks[(i * n + j) * 4 + c];
                if (!is_zero(r))
                    out.push_back({c + 1, i, j, std::move(r)});
            }
    return out;
}

std::string_view variant_name(BimVariant v)
{
    switch (v) {
    case BimVariant::galt:
        return "galt";
    case BimVariant::alt:
        return "alt";
    case BimVariant::assoc:
        return "assoc";
    case BimVariant::mult:
        return "mult";
    }
    return "?";
}

BimVariant parse_variant(std::string_view name)
{
    for (auto v : {BimVariant::galt, BimVariant::alt, BimVariant::assoc, BimVariant::mult})
        if (variant_name(v) == name)
            return v;
    throw ParseError("unknown variant '" + std::string(name) + "'");
}

Subspace solve_pair_space(const Algebra& a, BimVariant v)
{
    const Field& f = a.field();
    const std::size_t n = a.dim();
    const std::size_t nn = n * n;
    if (v == BimVariant::mult) {
        if (!satisfies(a, Law::commutative) || !satisfies(a, Law::associative))
            throw PreconditionError("mult variant needs a commutative associative algebra");
        Subspace maps = solve_linear(a, v, nn, [&](std::size_t u) {
            MultiplierPair p = zero_pair(f, n);
            p.left(u / n, u % n) = f.one();
            return p;
        });
        std::vector<Vector> pairs;
        for (const auto& m : maps.basis_vectors()) {
            Vector w = m;
            w.insert(w.end(), m.begin(), m.end());
            pairs.push_back(std::move(w));
        }
        return Subspace::span(f, 2 * nn, pairs);
    }
    return solve_linear(a, v, 2 * nn, [&](std::size_t u) {
        Vector e = unit_vector(f, 2 * nn, u);
        return pair_from_vector(f, n, e);
    });
}

Subspace ActorAlgebra::span() const
{
    std::vector<Vector> vs;
    for (const auto& p : basis)
        vs.push_back(to_vector(p));
    const std::size_t n = target.dim();
    return Subspace::span(target.field(), 2 * n * n, vs);
}

ActionData ActorAlgebra::canonical_action() const
{
    ActionData act{table, target, {}, {}};
    for (const auto& p : basis) {
        act.left.push_back(p.left);
        act.right.push_back(p.right);
    }
    return act;
}

ActorAlgebra closure(const Algebra& a, const std::vector<MultiplierPair>& generators)
{
    const Field& f = a.field();
    const std::size_t n = a.dim();
    const std::size_t ambient = 2 * n * n;
    Subspace current = Subspace::zero(f, ambient);
    // Independent spanning pairs in insertion order; products of the span are
    // spanned by products of these, so each round only needs products that
    // involve a pair added in the previous round.
    std::vector<MultiplierPair> spanning;
    auto adjoin = [&](const std::vector<MultiplierPair>& batch) {
        std::vector<MultiplierPair> added;
        for (const auto& p : batch) {
            if (p.dim() != n)
                throw DimensionMismatch("generator pair over the wrong dimension");
            Vector v = to_vector(p);
            if (current.contains(v))
                continue;
            current = current.sum(Subspace::span(f, ambient, {v}));
            added.push_back(p);
        }
        spanning.insert(spanning.end(), added.begin(), added.end());
        return added.size();
    };
    std::size_t fresh_from = spanning.size();
    adjoin(generators);
    while (fresh_from < spanning.size()) {
        std::vector<MultiplierPair> batch;
        const std::size_t total = spanning.size();
        for (std::size_t i = 0; i < total; ++i)
            for (std::size_t j = 0; j < total; ++j)
                if (i >= fresh_from || j >= fresh_from)
                    batch.push_back(pair_mul(spanning[i], spanning[j]));
        fresh_from = total;
        adjoin(batch);
    }

    ActorAlgebra out{a, {}, Algebra(f, 0), {}};
    for (const auto& v : current.basis_vectors())
        out.basis.push_back(pair_from_vector(f, n, v));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < out.basis.size(); ++i)
        names.push_back("f" + std::to_string(i));
    out.table = Algebra(f, names);
    for (std::size_t i = 0; i < out.basis.size(); ++i)
        for (std::size_t j = 0; j < out.basis.size(); ++j)
            out.table.set_product(i, j, current.coordinates(to_vector(pair_mul(out.basis[i], out.basis[j]))));
    return out;
}

namespace {

// a(fa) = (af)a over the closure, polarized in a.
LawReport alt_condition_one(const ActorAlgebra& act)
{
    const Algebra& a = act.target;
    const auto* basis = &act.basis;
    TupleForm form{{basis->size(), a.dim(), a.dim()}, std::pair<std::size_t, std::size_t>{1, 2},
                   [&a, basis](std::span<const std::size_t> t) {
                       const MultiplierPair& f = (*basis)[t[0]];
                       Vector x = a.basis_vector(t[1]);
                       return a.multiply(x, f.left.column(t[2])) - a.multiply(f.right.column(t[1]), a.basis_vector(t[2]));
                   }};
    return scan_form("alt-pair-a(fa)=(af)a", form);
}

// f(af) = (fa)f, quadratic in f: polarized over pairs of closure elements.
LawReport alt_condition_two(const ActorAlgebra& act)
{
    const Algebra& a = act.target;
    const auto* basis = &act.basis;
    TupleForm form{{basis->size(), basis->size(), a.dim()}, std::pair<std::size_t, std::size_t>{0, 1},
                   [basis](std::span<const std::size_t> t) {
                       const MultiplierPair& f = (*basis)[t[0]];
                       const MultiplierPair& g = (*basis)[t[1]];
                       Vector r = g.right.column(t[2]);
                       Vector l = g.left.column(t[2]);
                       return f.left.apply(r) - f.right.apply(l);
                   }};
    return scan_form("alt-pair-f(af)=(fa)f", form);
}

}  // namespace

ActorAlgebra bim(const Algebra& a, BimVariant v)
{
    Subspace s = solve_pair_space(a, v);
    std::vector<MultiplierPair> gens;
    for (const auto& vec : s.basis_vectors())
        gens.push_back(pair_from_vector(a.field(), a.dim(), vec));
    ActorAlgebra out = closure(a, gens);
    if (v == BimVariant::alt) {
        out.postconditions.push_back(alt_condition_one(out));
        out.postconditions.push_back(alt_condition_two(out));
    }
    return out;
}

std::vector<MultiplierPair> action_pairs(const ActionData& act)
{
    validate(act);
    std::vector<MultiplierPair> out;
    for (std::size_t b = 0; b < act.acting.dim(); ++b)
        out.push_back({act.left[b], act.right[b]});
    return out;
}

NonDerivedAction::NonDerivedAction(std::size_t i, std::vector<LawReport> r)
    : PreconditionError("family member " + std::to_string(i) + " is not a derived action"), index(i),
      reports(std::move(r))
{
}

ActorAlgebra relative_actor(const Algebra& a, const std::vector<ActionData>& family)
{
    std::vector<MultiplierPair> gens;
    for (std::size_t x = 0; x < a.dim(); ++x)
        gens.push_back({a.left_basis_operator(x), a.right_basis_operator(x)});
    for (std::size_t i = 0; i < family.size(); ++i) {
        const ActionData& act = family[i];
        if (!(act.target == a))
            throw PreconditionError("family member " + std::to_string(i) + " acts on a different algebra");
        auto reports = check_derived_action(act, Category::galt);
        if (!all_hold(reports))
            throw NonDerivedAction(i, std::move(reports));
        auto pairs = action_pairs(act);
        gens.insert(gens.end(), pairs.begin(), pairs.end());
    }
    return closure(a, gens);
}

}  // namespace galt
