#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "galt/algebra.hpp"
#include "galt/laws.hpp"

namespace galt {

/// Bilinear action of B on A, stored as operators: left[b] is a -> e_b a and
/// right[b] is a -> a e_b, both dim(A) x dim(A).
struct ActionData {
    Algebra acting;
    Algebra target;
    std::vector<Matrix> left;
    std::vector<Matrix> right;

    /// b a for coordinate vectors b in B and a in A.
    Vector act_left(const Vector& b, const Vector& a) const;
    /// a b
    Vector act_right(const Vector& a, const Vector& b) const;
};

/// Throws unless shapes and fields agree.
void validate(const ActionData& act);

/// The 1-dimensional unital algebra F (basis {1}).
Algebra scalar_algebra(const Field& f);

ActionData zero_action(const Algebra& b, const Algebra& a);
/// A acting on itself by multiplication.
ActionData regular_action(const Algebra& a);
/// F acting on A by 1 a = a 1 = a.
ActionData scalar_action(const Algebra& a);

enum class Category { galt, alt };

std::string_view category_name(Category c);

/// One report per identity: I1..I4, II1..II4, plus III1, III2 for alt.
/// Tuples are (b, a1, a2) for the I family, (b1, b2, a) for the II family,
/// (a, b, a') for III1 and (b, a, b') for III2.
std::vector<LawReport> check_derived_action(const ActionData& act, Category c,
                                            std::size_t witness_cap = default_witness_cap);
bool is_derived(const ActionData& act, Category c);
bool all_hold(const std::vector<LawReport>& reports);

/// B x A with (b', a')(b, a) = (b'b, a'a + a'b + b'a); basis of B first.
Algebra semidirect(const ActionData& act);

/// E with i: A -> E, p: E -> B, s: B -> E as matrices on column vectors.
struct SplitExtensionData {
    Algebra extension;
    Algebra base;    // B
    Algebra kernel;  // A
    Matrix i;
    Matrix p;
    Matrix s;
};

/// Throws PreconditionError naming the first violated condition.
void validate(const SplitExtensionData& ext);

/// b a := i^{-1}(s(b) i(a)) and a b := i^{-1}(i(a) s(b)).
ActionData action_from_section(const SplitExtensionData& ext);

/// semidirect(act) with its canonical injection, projection and section.
SplitExtensionData canonical_extension(const ActionData& act);

/// True when the algebra lies in the category (galt laws; alt adds flexibility).
bool in_category(const Algebra& a, Category c);

struct EquivalenceCheck {
    bool derived;
    bool semidirect_in_category;
};

/// Requires B and A in the category.
EquivalenceCheck semidirect_equivalence_check(const ActionData& act, Category c);

}  // namespace galt
