#pragma once

// Shared helpers for the test binaries: brute-force oracles that do not go
// through the library's basis-tuple machinery, and seeded sample generators.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "galt/action.hpp"
#include "galt/algebra.hpp"
#include "galt/laws.hpp"
#include "galt/witness.hpp"

namespace support {

using namespace galt;

/// Every vector of F^n, for a small prime field.
inline std::vector<Vector> all_vectors(const Field& f, std::size_t n)
{
    std::vector<Vector> out;
    const std::uint32_t p = f.characteristic();
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i)
        total *= p;
    for (std::size_t idx = 0; idx < total; ++idx) {
        Vector v = zero_vector(f, n);
        std::size_t rest = idx;
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = f.from_int(static_cast<std::int64_t>(rest % p));
            rest /= p;
        }
        out.push_back(std::move(v));
    }
    return out;
}

inline Algebra random_algebra(const Field& f, std::size_t n, std::mt19937_64& rng, double density = 0.5)
{
    const std::uint32_t p = f.is_finite() ? f.characteristic() : 5;
    std::uniform_int_distribution<int> value(1, static_cast<int>(p) - 1);
    std::bernoulli_distribution hit(density);
    Algebra a(f, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (hit(rng))
                    a.set_constant(i, j, k, f.from_int(value(rng)));
    return a;
}

/// Seeded g-alternative samples found by the sampled search over GF(p).
inline std::vector<Algebra> galt_samples(std::uint32_t p, std::size_t dim, std::size_t count, std::uint64_t seed,
                                         Sampler sampler = Sampler::sparse)
{
    SearchSpec spec;
    spec.dim = dim;
    spec.field = Field::prime(p);
    spec.target = SearchTarget::custom_law_pair;
    spec.require = {Law::axiom_2_1, Law::axiom_2_2};
    spec.budget = 20000;
    spec.seed = seed;
    spec.sampler = sampler;
    spec.max_hits = count;
    spec.workers = 1;
    std::vector<Algebra> out;
    for (auto& h : search(spec).hits)
        out.push_back(std::move(h.algebra));
    return out;
}

/// Anticommutative g-alternative samples with zero annihilator over GF(2)
/// and GF(3), dimensions 2 and 3.
inline std::vector<Algebra> anticomm_ann0_samples()
{
    SearchSpec spec;
    spec.target = SearchTarget::custom_law_pair;
    spec.require = {Law::axiom_2_1, Law::axiom_2_2, Law::anticommutative};
    spec.max_hits = 40;
    spec.workers = 1;
    spec.budget = 20000;
    spec.sampler = Sampler::sparse;
    std::vector<Algebra> out;
    for (std::uint32_t p : {2u, 3u})
        for (std::size_t n : {2u, 3u}) {
            spec.field = Field::prime(p);
            spec.dim = n;
            spec.seed = 100 + n;
            for (auto& h : search(spec).hits)
                if (annihilator(h.algebra).is_zero())
                    out.push_back(std::move(h.algebra));
        }
    return out;
}

/// Every subspace of F^n (small prime field, small n), deduplicated.
inline std::vector<Subspace> all_subspaces(const Field& f, std::size_t n)
{
    std::vector<Subspace> out{Subspace::zero(f, n)};
    for (std::size_t round = 0; round < n; ++round) {
        std::vector<Subspace> next = out;
        for (const auto& s : out)
            for (const auto& v : all_vectors(f, n)) {
                Subspace t = s.sum(Subspace::span(f, n, {v}));
                bool seen = false;
                for (const auto& u : next)
                    seen = seen || u == t;
                if (!seen)
                    next.push_back(t);
            }
        out = std::move(next);
    }
    return out;
}

inline Matrix columns_of(const Subspace& s)
{
    return Matrix::from_columns(s.field(), s.ambient_dim(), s.basis_vectors());
}

/// A split extension E = s(B) + i(A) with A a nonzero proper ideal and s(B) a
/// complementary subalgebra, picked at random among all such pairs of E.
inline std::optional<SplitExtensionData> random_split(const Algebra& e, std::mt19937_64& rng)
{
    const Field& f = e.field();
    const std::size_t n = e.dim();
    auto subs = all_subspaces(f, n);
    std::vector<std::pair<Subspace, Subspace>> splits;
    for (const auto& ideal : subs) {
        if (ideal.is_zero() || ideal.is_full() || !is_ideal(e, ideal))
            continue;
        for (const auto& comp : subs)
            if (comp.dim() + ideal.dim() == n && comp.intersect(ideal).is_zero() && is_subalgebra(e, comp))
                splits.emplace_back(ideal, comp);
    }
    if (splits.empty())
        return std::nullopt;
    auto [ideal, comp] = splits[std::uniform_int_distribution<std::size_t>(0, splits.size() - 1)(rng)];
    Matrix i = columns_of(ideal), s = columns_of(comp);
    // p reads the s-coordinates of v in the basis [s | i].
    std::vector<Vector> both = comp.basis_vectors();
    for (const auto& v : ideal.basis_vectors())
        both.push_back(v);
    Matrix m = Matrix::from_columns(f, n, both);
    Matrix p(f, comp.dim(), n);
    for (std::size_t j = 0; j < n; ++j) {
        Vector c = *solve(m, e.basis_vector(j));
        for (std::size_t r = 0; r < comp.dim(); ++r)
            p(r, j) = c[r];
    }
    return SplitExtensionData{e, subalgebra(e, comp), subalgebra(e, ideal), i, p, s};
}

/// Derived actions recovered from split extensions of seeded g-alternative
/// algebras over GF(2) of dimension 2 or 3.
inline std::vector<ActionData> actions_from_splits(std::size_t count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<ActionData> out;
    std::uint64_t round = 0;
    while (out.size() < count && round < 64) {
        for (std::size_t dim : {2u, 3u})
            for (const auto& e : galt_samples(2, dim, 8, seed + 1000 * round + dim)) {
                if (out.size() == count)
                    break;
                if (auto ext = random_split(e, rng)) {
                    ActionData act = action_from_section(*ext);
                    // Skip the trivial ones: they say nothing about the identities.
                    bool trivial = true;
                    for (const auto& m : act.left)
                        trivial = trivial && m.is_zero();
                    for (const auto& m : act.right)
                        trivial = trivial && m.is_zero();
                    if (!trivial)
                        out.push_back(std::move(act));
                }
            }
        ++round;
    }
    return out;
}

/// Adds one to a single random entry of the left or right tensor.
inline ActionData perturb(const ActionData& act, std::mt19937_64& rng)
{
    ActionData out = act;
    const std::size_t nb = act.acting.dim(), na = act.target.dim();
    std::uniform_int_distribution<std::size_t> side(0, 1), b(0, nb - 1), a(0, na - 1);
    auto& ops = side(rng) == 0 ? out.left : out.right;
    Scalar& entry = ops[b(rng)](a(rng), a(rng));
    entry += act.target.field().one();
    return out;
}

}  // namespace support
