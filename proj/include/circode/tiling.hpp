#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "circode/zmod.hpp"

namespace circode {

/// A verified tiling Z_n = left (+) right, normalised so that 0 lies in
/// both parts. Construct through make_tiling, which enforces the unique
/// representation property.
struct Tiling {
  Elem group_modulus;
  ResidueSet left;
  ResidueSet right;
};

Tiling make_tiling(ResidueSet left, ResidueSet right);

/// True iff Z_n = A (+) B, i.e. |A||B| = n and every element of Z_n has a
/// unique representation a + b. Decided via the difference-set criterion
/// (A-A) intersect (B-B) = {0}.
bool is_direct_sum(const ResidueSet& a, const ResidueSet& b);

/// True iff D is a perfect code in Cay(Z_n, S): Z_n = S_0 (+) D with
/// S_0 = S united with {0}. S must be inverse-closed and exclude 0; D is
/// arbitrary (codes are translation invariant, so D need not contain 0).
bool is_perfect_code(const ResidueSet& s, const ResidueSet& d);

/// Exact-cover search over the translates d + A of a set A containing 0.
/// Returns some D containing 0 with Z_n = A (+) D, or nullopt. The search
/// always branches on the smallest uncovered element of Z_n and tries the
/// candidate translates in increasing order, so the result is deterministic.
std::optional<ResidueSet> find_tiling_complement(const ResidueSet& a);

/// All D containing 0 with Z_n = A (+) D, sorted lexicographically.
/// max_solutions = 0 means unbounded (exhaustive). Practical bound:
/// n <= ~200 for |A| >= 4; larger n stays feasible when |A| is large.
std::vector<ResidueSet> enumerate_tiling_complements(const ResidueSet& a,
                                                     std::size_t max_solutions = 0);

/// find_tiling_complement on S_0 = S united with {0}. Returns nullopt
/// (rather than an error) when |S_0| does not divide n, so callers get a
/// total decision procedure.
std::optional<ResidueSet> find_perfect_code(const ResidueSet& s);

/// All perfect codes containing 0 in Cay(Z_n, S), sorted lexicographically.
std::vector<ResidueSet> enumerate_perfect_codes(const ResidueSet& s,
                                                std::size_t max_solutions = 0);

}  // namespace circode
