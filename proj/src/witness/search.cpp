#include <algorithm>
#include <random>
#include <thread>

#include "galt/errors.hpp"
#include "galt/witness.hpp"

namespace galt {

namespace {

struct TargetEntry {
    SearchTarget target;
    std::string_view name;
};

constexpr TargetEntry target_table[] = {
    {SearchTarget::galt_not_alt, "galt-not-alt"},
    {SearchTarget::b1_failure, "b1-failure"},
    {SearchTarget::i1_failure, "i1-failure"},
    {SearchTarget::anticomm_ann0_nonzero, "anticomm-ann0-nonzero"},
    {SearchTarget::custom_law_pair, "custom-law-pair"},
};

using Digits = std::vector<std::uint32_t>;

Algebra from_digits(const Field& f, std::size_t dim, const Digits& c)
{
    Algebra a(f, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k) {
                std::uint32_t v = c[(i * dim + j) * dim + k];
                if (v != 0)
                    a.set_constant(i, j, k, f.from_int(v));
            }
    return a;
}

// Cheap test on raw residues before an Algebra is built.
bool prefilter(const SearchSpec& spec, const Digits& c)
{
    if (spec.target != SearchTarget::anticomm_ann0_nonzero)
        return true;
    const std::size_t n = spec.dim;
    const std::uint32_t p = spec.field.characteristic();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if ((c[(i * n + j) * n + k] + c[(j * n + i) * n + k]) % p != 0)
                    return false;
    return true;
}

// Fast early-exit predicate.
bool matches(const SearchSpec& spec, const Algebra& a)
{
    switch (spec.target) {
    case SearchTarget::galt_not_alt:
        return is_galt(a) && !satisfies(a, Law::flexible_e1);
    case SearchTarget::anticomm_ann0_nonzero:
        return a.dim() > 0 && satisfies(a, Law::anticommutative) && is_galt(a) && annihilator(a).is_zero();
    case SearchTarget::custom_law_pair:
        for (Law l : spec.require)
            if (!satisfies(a, l))
                return false;
        for (Law l : spec.refute)
            if (satisfies(a, l))
                return false;
        return true;
    case SearchTarget::b1_failure:
        return is_galt(a) && !satisfies(bim(a, BimVariant::galt).table, Law::axiom_2_1);
    case SearchTarget::i1_failure: {
        if (!is_galt(a))
            return false;
        auto reports = check_derived_action(bim(a, BimVariant::galt).canonical_action(), Category::galt, 0);
        return !reports[0].holds;
    }
    }
    return false;
}

// Independent re-check through full scans; returns the reports when the hit
// is confirmed.
std::optional<std::vector<LawReport>> confirm(const SearchSpec& spec, const Algebra& a)
{
    std::vector<LawReport> reports;
    auto need = [&](Law l, bool holds) {
        reports.push_back(check_law(a, l));
        return reports.back().holds == holds;
    };
    bool ok = true;
    switch (spec.target) {
    case SearchTarget::galt_not_alt:
        ok = need(Law::axiom_2_1, true) && need(Law::axiom_2_2, true) && need(Law::flexible_e1, false);
        break;
    case SearchTarget::anticomm_ann0_nonzero: {
        ok = need(Law::anticommutative, true) && need(Law::axiom_2_1, true) && need(Law::axiom_2_2, true);
        Subspace ann = annihilator(a);
        ok = ok && a.dim() > 0 && ann.is_zero();
        break;
    }
    case SearchTarget::custom_law_pair:
        for (Law l : spec.require)
            ok = ok && need(l, true);
        for (Law l : spec.refute)
            ok = ok && need(l, false);
        break;
    case SearchTarget::b1_failure: {
        ok = need(Law::axiom_2_1, true) && need(Law::axiom_2_2, true);
        ActorAlgebra actor = bim(a, BimVariant::galt);
        reports.push_back(check_law(actor.table, Law::axiom_2_1));
        reports.back().law = "actor-table-axiom-2-1";
        ok = ok && !reports.back().holds;
        break;
    }
    case SearchTarget::i1_failure: {
        ok = need(Law::axiom_2_1, true) && need(Law::axiom_2_2, true);
        auto r = check_derived_action(bim(a, BimVariant::galt).canonical_action(), Category::galt);
        ok = ok && !r[0].holds;
        reports.push_back(std::move(r[0]));
        break;
    }
    }
    if (!ok)
        return std::nullopt;
    return reports;
}

std::uint64_t splitmix(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Digits sample(const SearchSpec& spec, std::uint64_t index)
{
    const std::size_t n = spec.dim;
    const std::uint32_t p = spec.field.characteristic();
    std::mt19937_64 rng(splitmix(spec.seed ^ splitmix(index)));
    std::uniform_int_distribution<std::uint32_t> any(0, p - 1), nonzero(1, p - 1);
    std::bernoulli_distribution sparse_hit(1.0 / static_cast<double>(n + 1));
    Digits c(n * n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                std::uint32_t& v = c[(i * n + j) * n + k];
                switch (spec.sampler) {
                case Sampler::uniform:
                    v = any(rng);
                    break;
                case Sampler::sparse:
                    v = sparse_hit(rng) ? nonzero(rng) : 0;
                    break;
                case Sampler::nilpotent:
                    // e_i e_j only reaches later basis vectors.
                    v = k > std::max(i, j) ? any(rng) : 0;
                    break;
                }
            }
    return c;
}

bool exhaustive_fits(const SearchSpec& spec, std::uint64_t& total)
{
    const std::uint64_t p = spec.field.characteristic();
    const std::size_t entries = spec.dim * spec.dim * spec.dim;
    total = 1;
    for (std::size_t e = 0; e < entries; ++e) {
        if (total > spec.budget / p)
            return false;
        total *= p;
    }
    return total <= spec.budget;
}

}  // namespace

std::string_view target_name(SearchTarget t)
{
    for (const auto& e : target_table)
        if (e.target == t)
            return e.name;
    return "?";
}

SearchTarget parse_target(std::string_view name)
{
    for (const auto& e : target_table)
        if (e.name == name)
            return e.target;
    throw ParseError("unknown search target '" + std::string(name) + "'");
}

std::string_view sampler_name(Sampler s)
{
    switch (s) {
    case Sampler::uniform:
        return "uniform";
    case Sampler::sparse:
        return "sparse";
    case Sampler::nilpotent:
        return "nilpotent";
    }
    return "?";
}

Sampler parse_sampler(std::string_view name)
{
    for (auto s : {Sampler::uniform, Sampler::sparse, Sampler::nilpotent})
        if (sampler_name(s) == name)
            return s;
    throw ParseError("unknown sampler '" + std::string(name) + "'");
}

Algebra table_from_index(const Field& f, std::size_t dim, std::uint64_t index)
{
    const std::uint32_t p = f.characteristic();
    Digits c(dim * dim * dim, 0);
    for (auto& d : c) {
        d = static_cast<std::uint32_t>(index % p);
        index /= p;
    }
    return from_digits(f, dim, c);
}

SearchResult search(const SearchSpec& spec)
{
    if (spec.budget == 0)
        throw PreconditionError("search budget must be positive");
    if (!spec.field.is_finite())
        throw PreconditionError("search runs over finite fields only");
    if (spec.target == SearchTarget::custom_law_pair && spec.require.empty() && spec.refute.empty())
        throw PreconditionError("custom-law-pair needs at least one required or refuted law");

    std::uint64_t total = 0;
    const bool exhaustive = exhaustive_fits(spec, total);
    if (!exhaustive)
        total = spec.budget;
    const std::uint32_t p = spec.field.characteristic();
    const std::size_t entries = spec.dim * spec.dim * spec.dim;

    unsigned workers = spec.workers ? spec.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, total));
    workers = std::max(1u, workers);

    std::vector<std::vector<SearchHit>> found(workers);
    std::vector<std::exception_ptr> errors(workers);
    auto run = [&](unsigned w) {
        try {
            Digits c(entries, 0);
            for (std::uint64_t idx = w; idx < total; idx += workers) {
                if (exhaustive) {
                    std::uint64_t rest = idx;
                    for (auto& d : c) {
                        d = static_cast<std::uint32_t>(rest % p);
                        rest /= p;
                    }
                } else {
                    c = sample(spec, idx);
                }
                if (!prefilter(spec, c))
                    continue;
                Algebra a = from_digits(spec.field, spec.dim, c);
                if (!matches(spec, a))
                    continue;
                if (auto reports = confirm(spec, a)) {
                    found[w].push_back({idx, std::move(a), std::move(*reports)});
                    if (found[w].size() >= spec.max_hits)
                        break;
                }
            }
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; ++w)
            threads.emplace_back(run, w);
        for (auto& t : threads)
            t.join();
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    SearchResult out{exhaustive, total, {}};
    for (auto& v : found)
        for (auto& h : v)
            out.hits.push_back(std::move(h));
    std::sort(out.hits.begin(), out.hits.end(),
              [](const SearchHit& x, const SearchHit& y) { return x.index < y.index; });
    if (out.hits.size() > spec.max_hits) {
        // Every index below the cut was examined by some worker, so the kept
        // prefix does not depend on the worker count.
        out.hits.erase(out.hits.begin() + static_cast<std::ptrdiff_t>(spec.max_hits), out.hits.end());
    }
    return out;
}

}  // namespace galt
