#include "galt/socle.hpp"

#include <array>

#include "galt/errors.hpp"

namespace galt {

namespace {

std::vector<MultiplierPair> d_image(const Algebra& a)
{
    std::vector<MultiplierPair> out;
    for (std::size_t x = 0; x < a.dim(); ++x)
        out.push_back({a.left_basis_operator(x), a.right_basis_operator(x)});
    return out;
}

// An element of A or an acting pair.
struct Elem {
    std::optional<MultiplierPair> pair;
    Vector vec;
    bool is_pair() const { return pair.has_value(); }
};

Elem of_vector(Vector v) { return {std::nullopt, std::move(v)}; }

Elem of_pair(const MultiplierPair& p) { return {p, {}}; }

Elem mul(const Algebra& a, const Elem& x, const Elem& y)
{
    if (!x.is_pair() && !y.is_pair())
        return of_vector(a.multiply(x.vec, y.vec));
    if (x.is_pair() && !y.is_pair())
        return of_vector(x.pair->left.apply(y.vec));
    if (!x.is_pair() && y.is_pair())
        return of_vector(y.pair->right.apply(x.vec));
    return of_pair(pair_mul(*x.pair, *y.pair));
}

const Vector& as_vector(const Elem& e)
{
    if (e.is_pair())
        throw PreconditionError("element type evaluated to an acting element");
    return e.vec;
}

// The generating expressions of each element type.
std::vector<Vector> evaluate(const Algebra& a, ElementType t, const Elem& x, const Elem& y, const Elem& z)
{
    auto m = [&](const Elem& u, const Elem& v) { return mul(a, u, v); };
    auto vec = [](const Elem& e) { return as_vector(e); };
    switch (t) {
    case ElementType::sac:
        return {vec(m(x, m(y, z))) + vec(m(x, m(z, y))), vec(m(m(y, z), x)) + vec(m(m(z, y), x))};
    case ElementType::as:
        return {vec(m(x, m(y, z))) - vec(m(m(x, y), z))};
    case ElementType::aas:
        return {vec(m(x, m(y, z))) + vec(m(m(x, y), z))};
    case ElementType::ap:
        return {vec(m(x, m(y, z))) + vec(m(y, m(x, z))), vec(m(m(y, z), x)) + vec(m(m(y, x), z))};
    }
    return {};
}

std::vector<Matrix> stability_operators(const SocleContext& ctx)
{
    std::vector<Matrix> ops;
    for (const auto& p : ctx.actor.basis) {
        ops.push_back(p.left);
        ops.push_back(p.right);
    }
    for (std::size_t x = 0; x < ctx.target.dim(); ++x) {
        ops.push_back(ctx.target.left_basis_operator(x));
        ops.push_back(ctx.target.right_basis_operator(x));
    }
    return ops;
}

}  // namespace

SocleContext default_context(const Algebra& a)
{
    return {a, d_image(a), bim(a, BimVariant::galt), "regular action; actor = bim_galt closure"};
}

SocleContext family_context(const Algebra& a, const std::vector<ActionData>& actions)
{
    std::vector<MultiplierPair> family = d_image(a);
    for (const auto& act : actions) {
        auto p = action_pairs(act);
        family.insert(family.end(), p.begin(), p.end());
    }
    return {a, std::move(family), relative_actor(a, actions),
            "regular action plus " + std::to_string(actions.size()) + " supplied action(s); actor = relative closure"};
}

std::string_view element_type_name(ElementType t)
{
    switch (t) {
    case ElementType::sac:
        return "sac";
    case ElementType::as:
        return "as";
    case ElementType::aas:
        return "aas";
    case ElementType::ap:
        return "ap";
    }
    return "?";
}

ElementType parse_element_type(std::string_view name)
{
    for (auto t : {ElementType::sac, ElementType::as, ElementType::aas, ElementType::ap})
        if (element_type_name(t) == name)
            return t;
    throw ParseError("unknown element type '" + std::string(name) + "'");
}

Subspace s_set(const SocleContext& ctx, ElementType type, int level, bool bar)
{
    if (level != 1 && level != 2)
        throw PreconditionError("S-set level must be 1 or 2");
    const Algebra& a = ctx.target;
    const auto& pool = bar ? ctx.actor.basis : ctx.family;
    const std::size_t n = a.dim();
    std::vector<Elem> basis;
    for (std::size_t i = 0; i < n; ++i)
        basis.push_back(of_vector(a.basis_vector(i)));
    std::vector<Elem> acting;
    for (const auto& p : pool)
        acting.push_back(of_pair(p));

    std::vector<Vector> gens;
    for (int mask = 0; mask < 8; ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) != level)
            continue;
        std::array<const std::vector<Elem>*, 3> choices;
        for (int s = 0; s < 3; ++s)
            choices[s] = (mask >> s & 1) ? &acting : &basis;
        for (const auto& x : *choices[0])
            for (const auto& y : *choices[1])
                for (const auto& z : *choices[2])
                    for (auto& v : evaluate(a, type, x, y, z))
                        if (!is_zero(v))
                            gens.push_back(std::move(v));
    }
    return Subspace::span(a.field(), n, gens);
}

Subspace soci(const SocleContext& ctx)
{
    auto ops = stability_operators(ctx);
    return invariant_closure(s_set(ctx, ElementType::sac, 1, false), ops);
}

Subspace right_preimage(const Algebra& a, const Subspace& w)
{
    Subspace out = Subspace::full(a.field(), a.dim());
    for (std::size_t x = 0; x < a.dim(); ++x)
        out = out.intersect(preimage_under(a.right_basis_operator(x), w));
    return out;
}

SocleResult asoci(const SocleContext& ctx)
{
    Subspace s = soci(ctx);
    std::vector<Subspace> chain{right_preimage(ctx.target, s)};
    while (true) {
        Subspace next = right_preimage(ctx.target, chain.back());
        if (next == chain.back())
            break;
        chain.push_back(std::move(next));
    }
    Subspace top = chain.back();
    return {std::move(s), std::move(chain), std::move(top)};
}

std::vector<LawReport> socle_properties(const SocleContext& ctx, const SocleResult& r)
{
    const Algebra& a = ctx.target;
    auto basis = r.asoci.basis_vectors();
    LawReport ideal{"asoci-two-sided-ideal", true, 0, {}};
    LawReport stable{"asoci-actor-stable", true, 0, {}};
    LawReport chain{"chain-monotone", true, 0, {}};
    auto note = [](LawReport& rep, std::vector<std::size_t> tuple, Vector v) {
        ++rep.failures;
        rep.holds = false;
        if (rep.witnesses.size() < default_witness_cap)
            rep.witnesses.push_back({std::move(tuple), std::move(v)});
    };
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t x = 0; x < a.dim(); ++x) {
            Vector e = a.basis_vector(x);
            for (Vector w : {a.multiply(e, basis[i]), a.multiply(basis[i], e)})
                if (!r.asoci.contains(w))
                    note(ideal, {i, x}, std::move(w));
        }
        for (std::size_t f = 0; f < ctx.actor.basis.size(); ++f)
            for (Vector w : {ctx.actor.basis[f].left.apply(basis[i]), ctx.actor.basis[f].right.apply(basis[i])})
                if (!r.asoci.contains(w))
                    note(stable, {i, f}, std::move(w));
    }
    const Subspace* prev = &r.soci;
    for (std::size_t k = 0; k < r.chain.size(); ++k) {
        if (!r.chain[k].contains(*prev))
            note(chain, {k}, {});
        prev = &r.chain[k];
    }
    return {ideal, stable, chain};
}

std::vector<ContainmentCheck> congruence_audit(const SocleContext& ctx)
{
    SocleResult r = asoci(ctx);
    struct Item {
        const char* statement;
        ElementType type;
        int level;
        bool bar;
        bool in_asoci;
    };
    const Item items[] = {
        {"S1-aas ~ 0", ElementType::aas, 1, false, false},
        {"S1-as ~= 0", ElementType::as, 1, false, true},
        {"S2-sac ~= 0", ElementType::sac, 2, false, true},
        {"S1bar-sac ~= 0", ElementType::sac, 1, true, true},
        {"S2bar-sac ~= 0", ElementType::sac, 2, true, true},
        {"S2-as ~= 0", ElementType::as, 2, false, true},
        {"S2-aas ~= 0", ElementType::aas, 2, false, true},
        {"S1bar-as ~= 0", ElementType::as, 1, true, true},
        {"S1bar-aas ~= 0", ElementType::aas, 1, true, true},
        {"S2bar-as ~= 0", ElementType::as, 2, true, true},
        {"S2bar-aas ~= 0", ElementType::aas, 2, true, true},
        {"S1bar-ap ~= 0", ElementType::ap, 1, true, true},
        {"S2bar-ap ~= 0", ElementType::ap, 2, true, true},
    };
    std::vector<ContainmentCheck> out;
    for (const auto& it : items) {
        Subspace s = s_set(ctx, it.type, it.level, it.bar);
        const Subspace& target = it.in_asoci ? r.asoci : r.soci;
        ContainmentCheck c{it.statement, it.type, it.level, it.bar, it.in_asoci, true, s.dim(), {}};
        for (auto& v : s.basis_vectors())
            if (!target.contains(v)) {
                c.holds = false;
                if (c.witnesses.size() < default_witness_cap)
                    c.witnesses.push_back(std::move(v));
            }
        out.push_back(std::move(c));
    }
    return out;
}

ActorDecision actor_decision(const Algebra& a, const std::vector<ActionData>& family)
{
    if (!is_galt(a))
        throw PreconditionError("actor decision needs a g-alternative algebra");
    SocleContext ctx = default_context(a);
    for (const auto& act : family) {
        if (!(act.target == a))
            throw PreconditionError("supplied action acts on a different algebra");
        auto reports = check_derived_action(act, Category::galt);
        if (!all_hold(reports))
            throw NonDerivedAction(&act - family.data(), std::move(reports));
        auto p = action_pairs(act);
        ctx.family.insert(ctx.family.end(), p.begin(), p.end());
    }
    if (!family.empty())
        ctx.family_description += "; plus " + std::to_string(family.size()) + " supplied action(s)";

    ActorDecision out;
    out.anticommutative = satisfies(a, Law::anticommutative);
    Subspace ann = annihilator(a);
    out.annihilator_dim = ann.dim();
    out.annihilator_zero = ann.is_zero();
    out.family_anticommutative = true;
    for (const auto& p : ctx.family)
        if (!(p.left + p.right).is_zero())
            out.family_anticommutative = false;
    SocleResult r = asoci(ctx);
    for (const auto& v : r.chain)
        out.chain_dims.push_back(v.dim());
    out.asoci_zero = r.asoci.is_zero();
    out.asoci1_zero = r.chain.front().is_zero();
    out.family_description = ctx.family_description;
    out.target_alt = is_alt(a);

    const ActorAlgebra& actor = ctx.actor;
    std::vector<LawReport> checks;
    checks.push_back(check_law(actor.table, Law::axiom_2_1));
    checks.push_back(check_law(actor.table, Law::axiom_2_2));
    for (auto& rep : check_derived_action(actor.canonical_action(), Category::galt))
        checks.push_back(std::move(rep));
    if (out.target_alt) {
        checks.push_back(check_law(actor.table, Law::flexible_e1));
        auto alt_reports = check_derived_action(actor.canonical_action(), Category::alt);
        for (auto& rep : alt_reports)
            if (rep.law == "III1" || rep.law == "III2")
                checks.push_back(std::move(rep));
    }
    if (out.asoci_zero) {
        out.actor = actor;
        out.certification = std::move(checks);
        out.certified = all_hold(out.certification);
    } else {
        for (auto& rep : checks)
            if (!rep.holds)
                out.failures.push_back(std::move(rep));
        out.certified = false;
    }
    return out;
}

}  // namespace galt
