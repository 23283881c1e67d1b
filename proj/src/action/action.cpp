#include "galt/action.hpp"

#include <memory>

#include "galt/errors.hpp"

namespace galt {

Vector ActionData::act_left(const Vector& b, const Vector& a) const
{
    Vector out = target.zero_vector();
    for (std::size_t i = 0; i < b.size(); ++i)
        if (!b[i].is_zero())
            add_scaled(out, b[i], left[i].apply(a));
    return out;
}

Vector ActionData::act_right(const Vector& a, const Vector& b) const
{
    Vector out = target.zero_vector();
    for (std::size_t i = 0; i < b.size(); ++i)
        if (!b[i].is_zero())
            add_scaled(out, b[i], right[i].apply(a));
    return out;
}

void validate(const ActionData& act)
{
    if (!(act.acting.field() == act.target.field()))
        throw FieldMismatch("acting algebra over " + act.acting.field().name() + ", target over " +
                            act.target.field().name());
    const std::size_t nb = act.acting.dim();
    const std::size_t na = act.target.dim();
    if (act.left.size() != nb || act.right.size() != nb)
        throw DimensionMismatch("action needs one left and one right operator per basis element of B");
    for (std::size_t b = 0; b < nb; ++b)
        for (const Matrix* m : {&act.left[b], &act.right[b]}) {
            if (m->rows() != na || m->cols() != na)
                throw DimensionMismatch("action operator shape");
            if (!(m->field() == act.target.field()))
                throw FieldMismatch("action operator over " + m->field().name());
        }
}

Algebra scalar_algebra(const Field& f)
{
    Algebra r(f, std::vector<std::string>{"1"});
    r.set_constant(0, 0, 0, f.one());
    return r;
}

ActionData zero_action(const Algebra& b, const Algebra& a)
{
    Matrix z(a.field(), a.dim(), a.dim());
    ActionData act{b, a, std::vector<Matrix>(b.dim(), z), std::vector<Matrix>(b.dim(), z)};
    validate(act);
    return act;
}

ActionData regular_action(const Algebra& a)
{
    ActionData act{a, a, {}, {}};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        act.left.push_back(a.left_basis_operator(i));
        act.right.push_back(a.right_basis_operator(i));
    }
    return act;
}

ActionData scalar_action(const Algebra& a)
{
    Matrix id = Matrix::identity(a.field(), a.dim());
    return ActionData{scalar_algebra(a.field()), a, {id}, {id}};
}

std::string_view category_name(Category c) { return c == Category::galt ? "galt" : "alt"; }

namespace {

// Evaluates mixed products on basis elements of B and A.
struct Mixed {
    const ActionData& act;

    Vector b(std::size_t i) const { return act.acting.basis_vector(i); }
    Vector a(std::size_t i) const { return act.target.basis_vector(i); }
    Vector bb(const Vector& x, const Vector& y) const { return act.acting.multiply(x, y); }
    Vector aa(const Vector& x, const Vector& y) const { return act.target.multiply(x, y); }
    Vector ba(const Vector& x, const Vector& y) const { return act.act_left(x, y); }
    Vector ab(const Vector& x, const Vector& y) const { return act.act_right(x, y); }
};

using Idx = std::span<const std::size_t>;

std::vector<std::pair<std::string, TupleForm>> identity_forms(const ActionData& act, Category c)
{
    auto m = std::make_shared<Mixed>(Mixed{act});
    const std::size_t nb = act.acting.dim();
    const std::size_t na = act.target.dim();
    std::vector<std::size_t> baa{nb, na, na};
    std::vector<std::size_t> bba{nb, nb, na};
    std::vector<std::pair<std::string, TupleForm>> forms;

    // b(a1a2) = (ba1)a2 + (a1b)a2 - a1(ba2)
    forms.push_back({"I1", {baa, std::nullopt, [m](Idx t) {
                                auto b = m->b(t[0]), a1 = m->a(t[1]), a2 = m->a(t[2]);
                                return m->ba(b, m->aa(a1, a2)) - m->aa(m->ba(b, a1), a2) - m->aa(m->ab(a1, b), a2) +
                                       m->aa(a1, m->ba(b, a2));
                            }}});
    // (a1a2)b = a1(a2b) + a1(ba2) - (a1b)a2
    forms.push_back({"I2", {baa, std::nullopt, [m](Idx t) {
                                auto b = m->b(t[0]), a1 = m->a(t[1]), a2 = m->a(t[2]);
                                return m->ab(m->aa(a1, a2), b) - m->aa(a1, m->ab(a2, b)) - m->aa(a1, m->ba(b, a2)) +
                                       m->aa(m->ab(a1, b), a2);
                            }}});
    // (ba1)a2 = b(a1a2) + b(a2a1) - (ba2)a1
    forms.push_back({"I3", {baa, std::nullopt, [m](Idx t) {
                                auto b = m->b(t[0]), a1 = m->a(t[1]), a2 = m->a(t[2]);
                                return m->aa(m->ba(b, a1), a2) - m->ba(b, m->aa(a1, a2)) - m->ba(b, m->aa(a2, a1)) +
                                       m->aa(m->ba(b, a2), a1);
                            }}});
    // a1(a2b) = (a1a2)b + (a2a1)b - a2(a1b)
    forms.push_back({"I4", {baa, std::nullopt, [m](Idx t) {
                                auto b = m->b(t[0]), a1 = m->a(t[1]), a2 = m->a(t[2]);
                                return m->aa(a1, m->ab(a2, b)) - m->ab(m->aa(a1, a2), b) - m->ab(m->aa(a2, a1), b) +
                                       m->aa(a2, m->ab(a1, b));
                            }}});
    // (b1b2)a = b1(b2a) + b1(ab2) - (b1a)b2
    forms.push_back({"II1", {bba, std::nullopt, [m](Idx t) {
                                 auto b1 = m->b(t[0]), b2 = m->b(t[1]), a = m->a(t[2]);
                                 return m->ba(m->bb(b1, b2), a) - m->ba(b1, m->ba(b2, a)) - m->ba(b1, m->ab(a, b2)) +
                                        m->ab(m->ba(b1, a), b2);
                             }}});
    // a(b1b2) = (ab1)b2 + (b1a)b2 - b1(ab2)
    forms.push_back({"II2", {bba, std::nullopt, [m](Idx t) {
                                 auto b1 = m->b(t[0]), b2 = m->b(t[1]), a = m->a(t[2]);
                                 return m->ab(a, m->bb(b1, b2)) - m->ab(m->ab(a, b1), b2) - m->ab(m->ba(b1, a), b2) +
                                        m->ba(b1, m->ab(a, b2));
                             }}});
    // (ab1)b2 = a(b1b2) + a(b2b1) - (ab2)b1
    forms.push_back({"II3", {bba, std::nullopt, [m](Idx t) {
                                 auto b1 = m->b(t[0]), b2 = m->b(t[1]), a = m->a(t[2]);
                                 return m->ab(m->ab(a, b1), b2) - m->ab(a, m->bb(b1, b2)) - m->ab(a, m->bb(b2, b1)) +
                                        m->ab(m->ab(a, b2), b1);
                             }}});
    // b1(b2a) = (b1b2)a + (b2b1)a - b2(b1a)
    forms.push_back({"II4", {bba, std::nullopt, [m](Idx t) {
                                 auto b1 = m->b(t[0]), b2 = m->b(t[1]), a = m->a(t[2]);
                                 return m->ba(b1, m->ba(b2, a)) - m->ba(m->bb(b1, b2), a) - m->ba(m->bb(b2, b1), a) +
                                        m->ba(b2, m->ba(b1, a));
                             }}});
    if (c == Category::alt) {
        // a(ba) = (ab)a, quadratic in a
        forms.push_back({"III1", {{na, nb, na}, std::pair<std::size_t, std::size_t>{0, 2}, [m](Idx t) {
                                      auto a = m->a(t[0]), b = m->b(t[1]), a2 = m->a(t[2]);
                                      return m->aa(a, m->ba(b, a2)) - m->aa(m->ab(a, b), a2);
                                  }}});
        // b(ab) = (ba)b, quadratic in b
        forms.push_back({"III2", {{nb, na, nb}, std::pair<std::size_t, std::size_t>{0, 2}, [m](Idx t) {
                                      auto b = m->b(t[0]), a = m->a(t[1]), b2 = m->b(t[2]);
                                      return m->ba(b, m->ab(a, b2)) - m->ab(m->ba(b, a), b2);
                                  }}});
    }
    return forms;
}

}  // namespace

std::vector<LawReport> check_derived_action(const ActionData& act, Category c, std::size_t witness_cap)
{
    validate(act);
    std::vector<LawReport> out;
    for (auto& [name, form] : identity_forms(act, c))
        out.push_back(scan_form(name, form, witness_cap));
    return out;
}

bool is_derived(const ActionData& act, Category c)
{
    validate(act);
    for (auto& [name, form] : identity_forms(act, c))
        if (!form_holds(form))
            return false;
    return true;
}

bool all_hold(const std::vector<LawReport>& reports)
{
    for (const auto& r : reports)
        if (!r.holds)
            return false;
    return true;
}

Algebra semidirect(const ActionData& act)
{
    validate(act);
    const Algebra& b = act.acting;
    const Algebra& a = act.target;
    Algebra e = direct_product(b, a);
    const std::size_t nb = b.dim();
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (std::size_t k = 0; k < a.dim(); ++k) {
                e.set_constant(i, nb + j, nb + k, act.left[i](k, j));
                e.set_constant(nb + j, i, nb + k, act.right[i](k, j));
            }
    return e;
}

namespace {

bool is_homomorphism(const Matrix& m, const Algebra& from, const Algebra& to)
{
    for (std::size_t x = 0; x < from.dim(); ++x)
        for (std::size_t y = 0; y < from.dim(); ++y)
            if (m.apply(from.basis_product(x, y)) != to.multiply(m.column(x), m.column(y)))
                return false;
    return true;
}

Subspace column_space(const Matrix& m) { return Subspace::row_space(m.transpose()); }

}  // namespace

void validate(const SplitExtensionData& ext)
{
    const Field& f = ext.extension.field();
    if (!(ext.base.field() == f) || !(ext.kernel.field() == f))
        throw FieldMismatch("split extension algebras over different fields");
    const std::size_t ne = ext.extension.dim(), nb = ext.base.dim(), na = ext.kernel.dim();
    if (ext.i.rows() != ne || ext.i.cols() != na || ext.p.rows() != nb || ext.p.cols() != ne ||
        ext.s.rows() != ne || ext.s.cols() != nb)
        throw DimensionMismatch("split extension map shapes");
    if (!(ext.p * ext.i).is_zero())
        throw PreconditionError("malformed extension: p i != 0");
    if (!(ext.p * ext.s == Matrix::identity(f, nb)))
        throw PreconditionError("malformed extension: p s is not the identity");
    if (rank(ext.i) != na)
        throw PreconditionError("malformed extension: i is not injective");
    if (!(column_space(ext.i) == kernel(ext.p)))
        throw PreconditionError("malformed extension: image of i differs from kernel of p");
    if (!is_homomorphism(ext.i, ext.kernel, ext.extension))
        throw PreconditionError("malformed extension: i is not a homomorphism");
    if (!is_homomorphism(ext.p, ext.extension, ext.base))
        throw PreconditionError("malformed extension: p is not a homomorphism");
    if (!is_homomorphism(ext.s, ext.base, ext.extension))
        throw PreconditionError("malformed extension: section is not a homomorphism");
    if (!is_ideal(ext.extension, column_space(ext.i)))
        throw PreconditionError("malformed extension: image of i is not an ideal");
}

ActionData action_from_section(const SplitExtensionData& ext)
{
    validate(ext);
    const Algebra& e = ext.extension;
    const std::size_t nb = ext.base.dim(), na = ext.kernel.dim();
    auto pull_back = [&](const Vector& v) {
        auto c = solve(ext.i, v);
        if (!c)
            throw PreconditionError("malformed extension: product leaves the image of i");
        return *c;
    };
    ActionData act{ext.base, ext.kernel, {}, {}};
    for (std::size_t b = 0; b < nb; ++b) {
        Vector sb = ext.s.column(b);
        std::vector<Vector> lcols, rcols;
        for (std::size_t a = 0; a < na; ++a) {
            Vector ia = ext.i.column(a);
            lcols.push_back(pull_back(e.multiply(sb, ia)));
            rcols.push_back(pull_back(e.multiply(ia, sb)));
        }
        act.left.push_back(Matrix::from_columns(e.field(), na, lcols));
        act.right.push_back(Matrix::from_columns(e.field(), na, rcols));
    }
    return act;
}

SplitExtensionData canonical_extension(const ActionData& act)
{
    Algebra e = semidirect(act);
    const Field& f = e.field();
    const std::size_t nb = act.acting.dim(), na = act.target.dim();
    Matrix i(f, nb + na, na), p(f, nb, nb + na), s(f, nb + na, nb);
    for (std::size_t k = 0; k < na; ++k)
        i(nb + k, k) = f.one();
    for (std::size_t k = 0; k < nb; ++k) {
        p(k, k) = f.one();
        s(k, k) = f.one();
    }
    return {std::move(e), act.acting, act.target, std::move(i), std::move(p), std::move(s)};
}

bool in_category(const Algebra& a, Category c)
{
    return c == Category::galt ? is_galt(a) : is_alt(a);
}

EquivalenceCheck semidirect_equivalence_check(const ActionData& act, Category c)
{
    validate(act);
    if (!in_category(act.acting, c))
        throw PreconditionError("acting algebra is not in " + std::string(category_name(c)));
    if (!in_category(act.target, c))
        throw PreconditionError("target algebra is not in " + std::string(category_name(c)));
    return {is_derived(act, c), in_category(semidirect(act), c)};
}

}  // namespace galt
