#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "galt/action.hpp"
#include "galt/algebra.hpp"
#include "galt/errors.hpp"
#include "galt/laws.hpp"

namespace galt {

/// A pair (L, R) of linear self-maps of A standing for (f*, *f): L a = f a and
/// R a = a f.
struct MultiplierPair {
    Matrix left;
    Matrix right;

    std::size_t dim() const { return left.rows(); }
    friend bool operator==(const MultiplierPair& f, const MultiplierPair& g)
    {
        return f.left == g.left && f.right == g.right;
    }
};

MultiplierPair zero_pair(const Field& f, std::size_t n);
MultiplierPair operator+(const MultiplierPair& f, const MultiplierPair& g);
MultiplierPair operator-(const MultiplierPair& f, const MultiplierPair& g);
MultiplierPair operator*(const Scalar& c, const MultiplierPair& f);

/// (fg)a = f(ga) + f(ag) - (fa)g and a(fg) = (af)g + (fa)g - f(ag):
/// L = Lf Lg + Lf Rg - Rg Lf, R = Rg Rf + Rg Lf - Lf Rg.
MultiplierPair pair_mul(const MultiplierPair& f, const MultiplierPair& g);

/// Entries of L then R, row-major; length 2 n^2.
Vector to_vector(const MultiplierPair& f);
MultiplierPair pair_from_vector(const Field& field, std::size_t n, const Vector& v);

/// (a*, *a)
MultiplierPair d(const Algebra& a, const Vector& x);

struct DMap {
    Matrix matrix;  // column x is to_vector(d(e_x))
    Subspace kernel;
};
DMap d_map(const Algebra& a);

struct PairResidual {
    int condition;  // 1..4
    std::size_t a1;
    std::size_t a2;
    Vector residual;
};

/// Nonzero residuals of the four bimultiplication conditions on basis pairs:
///   f(a1a2) = (fa1)a2 + (a1f)a2 - a1(fa2)
///   (a1a2)f = a1(a2f) + a1(fa2) - (a1f)a2
///   (fa1)a2 = f(a1a2) + f(a2a1) - (fa2)a1
///   a1(a2f) = (a1a2)f + (a2a1)f - a2(a1f)
std::vector<PairResidual> pair_conditions_residual(const Algebra& a, const MultiplierPair& f);

enum class BimVariant { galt, alt, assoc, mult };

std::string_view variant_name(BimVariant v);
/// Throws ParseError for unknown names.
BimVariant parse_variant(std::string_view name);

/// Solutions of the variant's linear conditions, as a subspace of pair space.
///   galt:  the four conditions above
///   alt:   galt plus a(fa) = (af)a, polarized in a
///   assoc: f(a1a2) = (fa1)a2, (a1a2)f = a1(a2f), (a1f)a2 = a1(fa2)
///   mult:  pairs (f, f) with f(aa') = f(a)a'; needs A commutative and associative
Subspace solve_pair_space(const Algebra& a, BimVariant v);

/// Span of multiplier pairs closed under pair_mul, with its structure
/// constants in the echelon basis.
struct ActorAlgebra {
    Algebra target;
    std::vector<MultiplierPair> basis;
    Algebra table;
    /// Checks that are reported rather than imposed (alt variant).
    std::vector<LawReport> postconditions;

    std::size_t dim() const { return basis.size(); }
    Subspace span() const;
    /// table acting on target through left/right of each basis pair.
    ActionData canonical_action() const;
};

ActorAlgebra closure(const Algebra& a, const std::vector<MultiplierPair>& generators);
ActorAlgebra bim(const Algebra& a, BimVariant v);

/// Thrown when a family member fails the derived-action identities.
class NonDerivedAction : public PreconditionError {
public:
    NonDerivedAction(std::size_t index, std::vector<LawReport> reports);
    std::size_t index;
    std::vector<LawReport> reports;
};

/// Closure of the d-image together with the pairs (l[b], r[b]) of every family
/// member.
ActorAlgebra relative_actor(const Algebra& a, const std::vector<ActionData>& family);

/// Pairs of the acting basis elements of a derived action.
std::vector<MultiplierPair> action_pairs(const ActionData& act);

enum class BIdentity { b1, b2, b3, b4 };
std::string_view b_identity_name(BIdentity w);

Vector identity_B(BIdentity which, const MultiplierPair& b1, const MultiplierPair& b2, const MultiplierPair& b3,
                  const Vector& a);

/// i in 1..11
Vector expression_A(int i, const MultiplierPair& b1, const MultiplierPair& b2, const MultiplierPair& b3,
                    const Vector& a);

}  // namespace galt
