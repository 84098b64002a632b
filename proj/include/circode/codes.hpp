#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "circode/bigint.hpp"
#include "circode/pyramidal.hpp"
#include "circode/zmod.hpp"

namespace circode {

/// A deterministic recipe for one perfect code over the longest admissible
/// series of S_0. For i = 1..t-1, tau_i maps D_{2i-2} into the multiples of
/// p^{h_{t-i}} k_{t-i} below p^{h_{t-i-1}} k_{t-i} with tau_i(0) = 0; values
/// are stored aligned with the sorted elements of their (recomputed)
/// domain. tau_final is present exactly when S_0 is periodic and maps
/// D_{2t-2} into the multiples of p^{h_0} k_0 below n.
struct CodeRecipe {
  AdmissibleSeries series;
  std::vector<std::vector<Elem>> taus;
  std::optional<std::vector<Elem>> tau_final;
};

/// Runs the recipe:
///   D_0 = {j p^{h_{t-1}} : 0 <= j < k_{t-1}},
///   D_{2i-1} = {x + tau_i(x)},  D_{2i} = D_{2i-1} + J_i,
///   J_i = {j p^{h_{t-i-1}} k_{t-i} : 0 <= j < k_{t-i-1}/k_{t-i}},
/// returning D_{2t-2}, or D_{2t-1} = {x + tau(x)} in the periodic case.
/// The result contains 0 and is a perfect code in Cay(Z_n, S_0 \ {0}).
/// The recipe must be built over the longest series of S_0 (invalid-recipe
/// otherwise).
ResidueSet build_code(const ResidueSet& s0, const CodeRecipe& recipe);

/// Streams every recipe over the longest series of S_0 in lexicographic tau
/// order. Distinct recipes build pairwise distinct codes. The visitor
/// returns false to stop. Throws invalid-input when S_0 is not pyramidal.
void enumerate_recipes(const ResidueSet& s0, Elem p, int ell,
                       const std::function<bool(const CodeRecipe&)>& visit);

/// Builds the codes of all recipes (up to budget; 0 = unbounded), sorted
/// lexicographically.
std::vector<ResidueSet> enumerate_constructed_codes(const ResidueSet& s0, Elem p, int ell,
                                                    std::size_t budget = 0);

/// The code of the lexicographically first recipe (all tau zero).
ResidueSet first_constructed_code(const ResidueSet& s0, Elem p, int ell);

/// The guaranteed lower bound on the number of perfect codes containing 0:
/// p^{(sum_{i=0}^{t-1} (h_{i-1} - h_i) k_i) + h_{t-1} - ell} with h_{-1} = ell.
BigInt lower_bound(const AdmissibleSeries& series);

/// Number of recipes (computed as the product of the tau value ranges; it
/// coincides with lower_bound).
BigInt recipe_count(const AdmissibleSeries& series);

}  // namespace circode
