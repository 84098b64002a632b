#pragma once

#include <cstdint>
#include <vector>

#include "circode/bigint.hpp"
#include "circode/zmod.hpp"

namespace circode {

/// Parameters of the closed-form count N(n, p^ell) of connected circulant
/// graphs of degree p^ell - 1 on Z_n whose extended connection set has
/// pairwise distinct residues mod p^ell.
struct CountParams {
  Elem n = 0;
  Elem p = 0;
  int ell = 0;
  Elem m = 0;                      // n / p^ell
  Elem r = 0;                      // free inverse-pairs per connection set
  std::vector<Elem> divisors_dnp;  // square-free divisors > 1 coprime to p
};

/// Validates p prime, ell >= 1 and p^ell | n. (The formula additionally
/// requires ell + p >= 4; the enumeration oracle does not.)
CountParams make_count_params(Elem n, Elem p, int ell);

/// N(n, p^ell) = m^r + sum_{d in D_n^p} (-1)^{nu(d)} (m/d)^r, where
/// r = (p^ell - 1)/2 for odd p and r = 2^{ell-1} - 1 for p = 2 (with m odd;
/// an even m admits no inverse-closed transversal at all, so the count is
/// 0). Outside the hypothesis ell + p >= 4 an out-of-theorem-hypothesis
/// error is raised.
BigInt count_formula(const CountParams& params);

/// Independent oracle: enumerates inverse-closed connection sets by their
/// choices on the pairs {x, n-x} and counts the connected ones with
/// distinct residues mod p^ell. Raises budget-exceeded when the pair space
/// is larger than `budget`.
BigInt count_enumerate(const CountParams& params, std::uint64_t budget = 50'000'000);

/// The inclusion-exclusion count of lifts of K_{p^ell} (for odd p) whose
/// set fails to generate: sum_{d in D_n^p} (-1)^{nu(d)-1} (m/d)^{(p^ell-1)/2};
/// 0 when D_n^p is empty.
BigInt gcd_excess(const CountParams& params);

}  // namespace circode
