#include "galt/laws.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <memory>
#include <tuple>

#include "galt/errors.hpp"

namespace galt {

namespace {

struct LawEntry {
    Law law;
    std::string_view name;
};

constexpr std::array<LawEntry, 19> law_table{{
    {Law::axiom_2_1, "axiom-2-1"},
    {Law::axiom_2_2, "axiom-2-2"},
    {Law::flexible_e1, "flexible-E1"},
    {Law::left_alternative, "left-alternative"},
    {Law::right_alternative, "right-alternative"},
    {Law::associative, "associative"},
    {Law::antiassociative, "antiassociative"},
    {Law::commutative, "commutative"},
    {Law::anticommutative, "anticommutative"},
    {Law::second_level_associative, "second-level-associative"},
    {Law::eq25, "eq25"},
    {Law::eq31, "eq31"},
    {Law::eq32, "eq32"},
    {Law::eq33, "eq33"},
    {Law::eq34, "eq34"},
    {Law::eq35, "eq35"},
    {Law::eq36, "eq36"},
    {Law::eq37, "eq37"},
    {Law::eq38, "eq38"},
}};

bool iequals(std::string_view a, std::string_view b)
{
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
               return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
           });
}

// Basis-level products: e_i v and v e_k.
class BasisMul {
public:
    explicit BasisMul(const Algebra& a) : a_(a) {}

    const Vector& ee(std::size_t i, std::size_t j) const { return a_.basis_product(i, j); }

    Vector ev(std::size_t i, const Vector& v) const
    {
        Vector out = a_.zero_vector();
        for (std::size_t m = 0; m < v.size(); ++m)
            if (!v[m].is_zero())
                add_scaled(out, v[m], a_.basis_product(i, m));
        return out;
    }

    Vector ve(const Vector& v, std::size_t k) const
    {
        Vector out = a_.zero_vector();
        for (std::size_t m = 0; m < v.size(); ++m)
            if (!v[m].is_zero())
                add_scaled(out, v[m], a_.basis_product(m, k));
        return out;
    }

    // (e_x e_y) e_z
    Vector left_nested(std::size_t x, std::size_t y, std::size_t z) const { return ve(ee(x, y), z); }
    // e_x (e_y e_z)
    Vector right_nested(std::size_t x, std::size_t y, std::size_t z) const { return ev(x, ee(y, z)); }

private:
    const Algebra& a_;
};

TupleForm make_form(const Algebra& a, Law law)
{
    const std::size_t n = a.dim();
    auto m = std::make_shared<BasisMul>(a);
    std::vector<std::size_t> three{n, n, n};
    using Idx = std::span<const std::size_t>;
    // L(x,y,z) = (xy)z, R(x,y,z) = x(yz)
    switch (law) {
    case Law::axiom_2_1:
        return {three, std::nullopt, [m](Idx t) {
                    auto [x, y, z] = std::tuple{t[0], t[1], t[2]};
                    return m->right_nested(x, y, z) - m->left_nested(x, y, z) - m->left_nested(y, x, z) +
                           m->right_nested(y, x, z);
                }};
    case Law::axiom_2_2:
        return {three, std::nullopt, [m](Idx t) {
                    auto [x, y, z] = std::tuple{t[0], t[1], t[2]};
                    return m->left_nested(x, y, z) - m->right_nested(x, y, z) - m->right_nested(x, z, y) +
                           m->left_nested(x, z, y);
                }};
    case Law::flexible_e1:
        return {three, std::pair<std::size_t, std::size_t>{0, 2}, [m](Idx t) {
                    return m->left_nested(t[0], t[1], t[2]) - m->right_nested(t[0], t[1], t[2]);
                }};
    case Law::left_alternative:
        return {three, std::pair<std::size_t, std::size_t>{0, 1}, [m](Idx t) {
                    return m->left_nested(t[0], t[1], t[2]) - m->right_nested(t[0], t[1], t[2]);
                }};
    case Law::right_alternative:
        return {three, std::pair<std::size_t, std::size_t>{1, 2}, [m](Idx t) {
                    return m->right_nested(t[0], t[1], t[2]) - m->left_nested(t[0], t[1], t[2]);
                }};
    case Law::associative:
        return {three, std::nullopt,
                [m](Idx t) { return m->left_nested(t[0], t[1], t[2]) - m->right_nested(t[0], t[1], t[2]); }};
    case Law::antiassociative:
        return {three, std::nullopt,
                [m](Idx t) { return m->left_nested(t[0], t[1], t[2]) + m->right_nested(t[0], t[1], t[2]); }};
    case Law::commutative:
        return {{n, n}, std::nullopt, [m](Idx t) { return m->ee(t[0], t[1]) - m->ee(t[1], t[0]); }};
    case Law::anticommutative:
        return {{n, n}, std::nullopt, [m](Idx t) { return m->ee(t[0], t[1]) + m->ee(t[1], t[0]); }};
    case Law::second_level_associative:
        return {{n, n, n, n}, std::nullopt, [m](Idx t) {
                    return m->ve(m->left_nested(t[0], t[1], t[2]), t[3]) -
                           m->ve(m->right_nested(t[0], t[1], t[2]), t[3]);
                }};
    case Law::eq25:
        // x y^2 = (xy)y + (yx)y - y(xy), quadratic in y
        return {three, std::pair<std::size_t, std::size_t>{1, 2}, [m](Idx t) {
                    auto [x, y, z] = std::tuple{t[0], t[1], t[2]};
                    return m->right_nested(x, y, z) - m->left_nested(x, y, z) - m->left_nested(y, x, z) +
                           m->right_nested(y, x, z);
                }};
    case Law::eq31:
        return {three, std::nullopt, [m](Idx t) {
                    auto [x, y, z] = std::tuple{t[0], t[1], t[2]};
                    return m->left_nested(x, y, z) - m->right_nested(x, y, z) + m->left_nested(y, x, z) -
                           m->right_nested(y, x, z);
                }};
    case Law::eq32:
        return {three, std::nullopt, [m](Idx t) {
                    auto [x, y, z] = std::tuple{t[0], t[1], t[2]};
                    return m->left_nested(x, y, z) - m->right_nested(x, y, z) + m->left_nested(z, y, x) -
                           m->right_nested(z, y, x);
                }};
    case Law::eq33:
        return {three, std::nullopt, [m](Idx t) {
                    auto [x, y, z] = std::tuple{t[0], t[1], t[2]};
                    return m->left_nested(x, y, z) - m->right_nested(x, y, z) + m->left_nested(x, z, y) -
                           m->right_nested(x, z, y);
                }};
    case Law::eq34:
        return {three, std::nullopt, [m](Idx t) {
                    auto [x, y, z] = std::tuple{t[0], t[1], t[2]};
                    return m->left_nested(x, y, z) - m->right_nested(x, y, z) - m->left_nested(y, z, x) +
                           m->right_nested(y, z, x);
                }};
    case Law::eq35:
        return {three, std::nullopt, [m](Idx t) {
                    auto [x, y, z] = std::tuple{t[0], t[1], t[2]};
                    return m->left_nested(x, y, z) - m->right_nested(x, y, z) - m->left_nested(z, x, y) +
                           m->right_nested(z, x, y);
                }};
    case Law::eq36:
        return {three, std::nullopt, [m](Idx t) {
                    auto [x, y, z] = std::tuple{t[0], t[1], t[2]};
                    return m->left_nested(x, y, z) + m->right_nested(z, x, y) - m->right_nested(x, y, z) -
                           m->left_nested(z, x, y);
                }};
    case Law::eq37:
        return {three, std::nullopt, [m](Idx t) {
                    auto [x, y, z] = std::tuple{t[0], t[1], t[2]};
                    return m->left_nested(x, y, z) + m->left_nested(y, x, z) - m->right_nested(x, y, z) -
                           m->right_nested(y, x, z);
                }};
    case Law::eq38:
        return {three, std::nullopt, [m](Idx t) {
                    auto [x, y, z] = std::tuple{t[0], t[1], t[2]};
                    return m->right_nested(z, x, y) + m->right_nested(z, y, x) - m->left_nested(z, x, y) -
                           m->left_nested(z, y, x);
                }};
    }
    throw ParseError("unknown law");
}

// Calls visit(tuple, residual) for every checked tuple, in lexicographic order,
// until visit returns false.
template <class Visit>
void for_each_residual(const TupleForm& form, Visit&& visit)
{
    const std::size_t arity = form.extents.size();
    for (auto e : form.extents)
        if (e == 0)
            return;
    std::vector<std::size_t> t(arity, 0);
    std::vector<std::size_t> swapped(arity);
    while (true) {
        bool skip = false;
        Vector r;
        if (form.tied) {
            auto [s, u] = *form.tied;
            if (t[s] > t[u]) {
                skip = true;
            } else {
                r = form.residual(t);
                if (t[s] < t[u]) {
                    swapped = t;
                    std::swap(swapped[s], swapped[u]);
                    add_to(r, form.residual(swapped));
                }
            }
        } else {
            r = form.residual(t);
        }
        if (!skip && !is_zero(r) && !visit(t, std::move(r)))
            return;
        std::size_t pos = arity;
        while (pos > 0) {
            --pos;
            if (++t[pos] < form.extents[pos])
                break;
            t[pos] = 0;
            if (pos == 0)
                return;
        }
        if (arity == 0)
            return;
    }
}

}  // namespace

std::string_view law_name(Law law)
{
    for (const auto& e : law_table)
        if (e.law == law)
            return e.name;
    return "unknown";
}

Law parse_law(std::string_view name)
{
    for (const auto& e : law_table)
        if (iequals(e.name, name))
            return e.law;
    throw ParseError("unknown law '" + std::string(name) + "'");
}

const std::vector<Law>& all_laws()
{
    static const std::vector<Law> laws = [] {
        std::vector<Law> v;
        for (const auto& e : law_table)
            v.push_back(e.law);
        return v;
    }();
    return laws;
}

LawReport scan_form(std::string name, const TupleForm& form, std::size_t witness_cap)
{
    LawReport report{std::move(name), true, 0, {}};
    for_each_residual(form, [&](std::span<const std::size_t> t, Vector r) {
        ++report.failures;
        if (report.witnesses.size() < witness_cap)
            report.witnesses.push_back({{t.begin(), t.end()}, std::move(r)});
        return true;
    });
    report.holds = report.failures == 0;
    return report;
}

bool form_holds(const TupleForm& form)
{
    bool holds = true;
    for_each_residual(form, [&](std::span<const std::size_t>, Vector) {
        holds = false;
        return false;
    });
    return holds;
}

LawReport check_law(const Algebra& a, Law law, std::size_t witness_cap)
{
    return scan_form(std::string(law_name(law)), make_form(a, law), witness_cap);
}

bool satisfies(const Algebra& a, Law law) { return form_holds(make_form(a, law)); }

bool is_galt(const Algebra& a) { return satisfies(a, Law::axiom_2_1) && satisfies(a, Law::axiom_2_2); }

bool is_alt(const Algebra& a) { return is_galt(a) && satisfies(a, Law::flexible_e1); }

Classification classify(const Algebra& a)
{
    Classification c;
    c.galt = is_galt(a);
    c.flexible = satisfies(a, Law::flexible_e1);
    c.alt = c.galt && c.flexible;
    c.associative = satisfies(a, Law::associative);
    c.commutative = satisfies(a, Law::commutative);
    c.anticommutative = satisfies(a, Law::anticommutative);
    return c;
}

std::vector<std::string> flag_names(const Classification& c)
{
    std::vector<std::string> out;
    if (c.galt)
        out.emplace_back("galt");
    if (c.alt)
        out.emplace_back("alt");
    if (c.associative)
        out.emplace_back("associative");
    if (c.commutative)
        out.emplace_back("commutative");
    if (c.anticommutative)
        out.emplace_back("anticommutative");
    if (c.flexible)
        out.emplace_back("flexible");
    return out;
}

}  // namespace galt
