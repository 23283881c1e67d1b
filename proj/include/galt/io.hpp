#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "galt/action.hpp"
#include "galt/algebra.hpp"

namespace galt {

// Algebra file:
//
//   galt-algebra 1
//   field GF(5)
//   dim 3
//   basis x1 x2 z          (optional; default e0 e1 ...)
//   mul 0 1 2 1            (e_0 e_1 has coefficient 1 on e_2)
//
// Indices may also be given as basis names; numerals always mean indices.
// '#' starts a comment. Repeated mul entries for one (i, j, k) are an error;
// unlisted products are zero.
//
// Action file:
//
//   galt-action 1
//   B builtin:gf4           (or a path relative to the file, or an inline
//   begin A ... end A       block holding an algebra file)
//   left b a k c            (e_b e_a has coefficient c on e_k)
//   right a b k c           (e_a e_b has coefficient c on e_k)

Algebra parse_algebra(std::string_view text, const std::string& source = "<input>");
/// Canonical form: nonzero entries in lexicographic (i, j, k) order, residues
/// in [0, p). parse_algebra(write_algebra(a)) == a.
std::string write_algebra(const Algebra& a);

ActionData parse_action(std::string_view text, const std::filesystem::path& base_dir = ".",
                        const std::string& source = "<input>");
/// Writes both algebras inline.
std::string write_action(const ActionData& act);

/// "builtin:NAME" or a file path. Throws ParseError for unreadable files.
Algebra load_algebra(const std::string& spec);
/// "builtin:regular" and "builtin:scalar" give the regular and scalar action
/// on `target`; anything else is an action file whose A must equal `target`.
ActionData load_action(const std::string& spec, const Algebra& target);

std::string read_file(const std::filesystem::path& path);

}  // namespace galt
