#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "galt/multiplier.hpp"

namespace galt {

/// A together with the acting pairs used for the S-sets.
/// `family` stands in for the union of the acting algebras (their basis
/// elements as pairs); `actor` is the algebra of pairs the substructures must
/// be stable under.
struct SocleContext {
    Algebra target;
    std::vector<MultiplierPair> family;
    ActorAlgebra actor;
    std::string family_description;
};

/// family = d-image of A (the regular action), actor = bim(A, galt).
/// Single bimultiplications are not used as family members: they need not
/// come from a derived action.
SocleContext default_context(const Algebra& a);
/// family = d-image plus the pairs of the given derived actions; actor =
/// relative_actor(a, actions).
SocleContext family_context(const Algebra& a, const std::vector<ActionData>& actions);

enum class ElementType { sac, as, aas, ap };
std::string_view element_type_name(ElementType t);
ElementType parse_element_type(std::string_view name);

/// Span of the elements of the given type with exactly `level` of the three
/// slots taken from the acting side (family pairs, or actor pairs when `bar`),
/// over every placement of those slots and every choice of basis elements.
Subspace s_set(const SocleContext& ctx, ElementType type, int level, bool bar);

/// Smallest subspace containing s_set(sac, 1) that is stable under both
/// sides of every actor pair and of every basis element of A.
Subspace soci(const SocleContext& ctx);

struct SocleResult {
    Subspace soci;
    /// asoci^1, asoci^2, ... up to the first repetition (which is dropped).
    std::vector<Subspace> chain;
    Subspace asoci;
};

/// {x : x e_a in W for every basis element e_a}
Subspace right_preimage(const Algebra& a, const Subspace& w);

SocleResult asoci(const SocleContext& ctx);

/// Checks the substructure properties of a computed result: ideal of A,
/// stability under the actor, monotone chain.
std::vector<LawReport> socle_properties(const SocleContext& ctx, const SocleResult& r);

struct ContainmentCheck {
    std::string statement;
    ElementType type;
    int level;
    bool bar;
    bool in_asoci;  // target: asoci when true, soci otherwise
    bool holds;
    std::size_t set_dim;
    /// Basis vectors of the S-set outside the target (capped).
    std::vector<Vector> witnesses;
};

std::vector<ContainmentCheck> congruence_audit(const SocleContext& ctx);

struct ActorDecision {
    bool anticommutative;
    bool annihilator_zero;
    bool asoci_zero;
    bool asoci1_zero;
    bool family_anticommutative;
    std::vector<std::size_t> chain_dims;
    std::size_t annihilator_dim;
    std::string family_description;
    /// Present when asoci = 0.
    std::optional<ActorAlgebra> actor;
    /// Law and identity checks on the actor: galt laws, derived-action
    /// identities, and the alt checks when A is alternative.
    std::vector<LawReport> certification;
    bool target_alt;
    /// Failing identities for the closure action when asoci != 0.
    std::vector<LawReport> failures;
    bool certified;
};

/// Requires A in galt.
ActorDecision actor_decision(const Algebra& a, const std::vector<ActionData>& family = {});

}  // namespace galt
