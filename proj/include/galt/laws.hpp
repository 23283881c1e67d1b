#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "galt/algebra.hpp"

namespace galt {

enum class Law {
    axiom_2_1,
    axiom_2_2,
    flexible_e1,
    left_alternative,
    right_alternative,
    associative,
    antiassociative,
    commutative,
    anticommutative,
    second_level_associative,
    eq25,
    eq31,
    eq32,
    eq33,
    eq34,
    eq35,
    eq36,
    eq37,
    eq38,
};

/// Names as used in reports and on the command line ("axiom-2-1", "flexible-E1", ...).
std::string_view law_name(Law law);
/// Case-insensitive; throws ParseError for an unknown name.
Law parse_law(std::string_view name);
const std::vector<Law>& all_laws();

struct Witness {
    std::vector<std::size_t> tuple;
    Vector residual;
};

/// holds == failures.empty-ness; `failures` counts every failing tuple even
/// when `witnesses` is truncated to the cap.
struct LawReport {
    std::string law;
    bool holds = true;
    std::size_t failures = 0;
    std::vector<Witness> witnesses;
};

inline constexpr std::size_t default_witness_cap = 16;

/// A residual that is multilinear in each slot, evaluated on basis tuples.
/// When `tied` names two slots the identity is quadratic in one variable
/// placed in both; it is then checked through its polarization: diagonal
/// tuples once, and for t[first] < t[second] the sum of the tuple and its
/// swap. Over any prime field this is equivalent to the identity holding for
/// every element.
struct TupleForm {
    std::vector<std::size_t> extents;
    std::optional<std::pair<std::size_t, std::size_t>> tied;
    std::function<Vector(std::span<const std::size_t>)> residual;
};

/// Scans every tuple in lexicographic order.
LawReport scan_form(std::string name, const TupleForm& form, std::size_t witness_cap = default_witness_cap);
/// Early-exit variant of scan_form(...).holds.
bool form_holds(const TupleForm& form);

LawReport check_law(const Algebra& a, Law law, std::size_t witness_cap = default_witness_cap);
bool satisfies(const Algebra& a, Law law);

struct Classification {
    bool galt = false;
    bool alt = false;
    bool associative = false;
    bool commutative = false;
    bool anticommutative = false;
    bool flexible = false;
};

Classification classify(const Algebra& a);
std::vector<std::string> flag_names(const Classification& c);

bool is_galt(const Algebra& a);
bool is_alt(const Algebra& a);

}  // namespace galt
