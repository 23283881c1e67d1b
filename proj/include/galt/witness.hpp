#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "galt/multiplier.hpp"

namespace galt {

/// Built-in algebras: "zeroN" (or "zero(N)"), "gf4", "h5", "w4", "octonions",
/// "unital-gf5-dim2". Throws ParseError for anything else.
Algebra canonical(std::string_view name);
std::vector<std::string> canonical_names();

/// x1 x2 = z, x2 x1 = -z over GF(p); h5 is the case p = 5.
Algebra heisenberg_like(const Field& f);

/// Product algebra A x A (A = heisenberg_like over GF(p)) with the scalar
/// algebra acting on the first factor and A acting into the second factor.
struct ProductExample {
    std::uint32_t p;
    Algebra product;
    ActionData scalar_part;  // r(a, a') = (ra, 0)
    ActionData lambda_part;  // l(a, a') = (0, la), (a, a')l = (0, al)
    std::vector<LawReport> scalar_reports;
    std::vector<LawReport> lambda_reports;
    /// B1 at b1 = lambda(x1), b2 = b3 = 1, a = (x2, 0).
    Vector b1_residual;
    /// b1_residual = coefficient * (0, z) when it lies on that line.
    std::optional<Scalar> coefficient;
    ActorAlgebra closure;
    LawReport closure_axiom_2_1;
};

/// Requires p prime, p not in {2, 3}.
ProductExample product_example(std::uint32_t p);

enum class SearchTarget { galt_not_alt, b1_failure, i1_failure, anticomm_ann0_nonzero, custom_law_pair };
enum class Sampler { uniform, sparse, nilpotent };

std::string_view target_name(SearchTarget t);
SearchTarget parse_target(std::string_view name);
std::string_view sampler_name(Sampler s);
Sampler parse_sampler(std::string_view name);

struct SearchSpec {
    std::size_t dim = 2;
    Field field = Field::prime(2);
    SearchTarget target = SearchTarget::galt_not_alt;
    std::uint64_t budget = 100000;
    std::uint64_t seed = 0;
    Sampler sampler = Sampler::uniform;
    std::size_t max_hits = 16;
    /// custom-law-pair: every law in `require` holds and every law in `refute` fails.
    std::vector<Law> require;
    std::vector<Law> refute;
    unsigned workers = 0;  // 0 = hardware concurrency
};

struct SearchHit {
    std::uint64_t index;  // enumeration index or sample number
    Algebra algebra;
    std::vector<LawReport> reports;
};

struct SearchResult {
    bool exhaustive;
    std::uint64_t examined;
    std::vector<SearchHit> hits;
};

/// Exhaustive when p^(dim^3) <= budget (finite fields only), otherwise
/// `budget` seeded samples. Output depends only on the search settings, not on the
/// number of workers.
SearchResult search(const SearchSpec& spec);

/// Structure constants c[i][j][k] read as base-p digits of `index`, lowest
/// digit first.
Algebra table_from_index(const Field& f, std::size_t dim, std::uint64_t index);

}  // namespace galt
