#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "circode/zmod.hpp"

namespace circode {

/// A feasible map sigma: S_0 -> {0, ..., m-1} with sigma(0) = 0 whose
/// lifted set T(sigma) = {s + sigma(s) n : s in S} is inverse-closed in
/// Z_{mn}. `sigma` is aligned with the sorted elements of the base S_0.
struct FeasibleLift {
  Elem base_modulus = 0;  // n
  Elem factor = 0;        // m
  std::vector<Elem> sigma;
};

/// T(sigma)_0 = {s + sigma(s) n : s in S_0} as a subset of Z_{mn}.
ResidueSet lifted_set(const FeasibleLift& lift, const ResidueSet& s0);

/// Quotient by the order-m subgroup <n/m> under the covering condition
/// (S_0 - S_0) intersect <n/m> = {0}; |result| = |S_0|. Violation of the
/// condition raises not-a-cover.
ResidueSet f_project(const ResidueSet& s0, Elem m);

/// Quotient by <n/m> when S_0 is <n/m>-periodic; |result| = |S_0| / m.
/// A non-periodic input raises not-periodic.
ResidueSet g_project(const ResidueSet& s0, Elem m);

/// The m-fold wreath lift {s + i n : s in S_0, 0 <= i < m} in Z_{mn}.
ResidueSet g_lift(const ResidueSet& s0, Elem m);

/// Enumerates every feasible sigma exactly once: sigma is free on one
/// representative of each pair {s, n-s}, the mirror value is m-1-sigma(s),
/// and a self-paired n/2 forces sigma(n/2) = (m-1)/2 (hence an empty stream
/// when m is even but n/2 lies in S). With require_connected, lifts whose
/// set does not generate Z_{mn} are skipped. The visitor returns false to
/// stop. Enumeration order is lexicographic in the free values.
void enumerate_lifts(const ResidueSet& s0, Elem m, bool require_connected,
                     const std::function<bool(const FeasibleLift&)>& visit);

/// Convenience wrapper collecting the lifted sets; budget = 0 is unbounded.
std::vector<ResidueSet> enumerate_lift_sets(const ResidueSet& s0, Elem m, bool require_connected,
                                            std::size_t budget = 0);

/// Parameters of one family of degree-(p^ell - 1) circulants built from
/// K_{p^{l_t}} by alternating lifts; n = p^{sum l} * prod m.
struct FamilySpec {
  Elem p = 0;
  std::vector<int> l_seq;   // l_1, ..., l_t
  std::vector<Elem> m_seq;  // m_1, ..., m_t

  int ell() const;
  Elem m() const;
  Elem n() const;
};

/// Validates entries (positive, prod m >= 2) and the derived modulus.
FamilySpec make_family_spec(Elem p, std::vector<int> l_seq, std::vector<Elem> m_seq);

/// Streams the extended connection sets of the family: starting from the
/// complete-graph set Z_{p^{l_t}}, apply the connected lifts of f-bar_{m_t},
/// then alternately g-bar_{p^{l_i}} and the connected lifts of f-bar_{m_i}
/// down to i = 1. Every yielded set has p^ell elements, contains 0 and
/// generates Z_n. budget = 0 is unbounded; the visitor returns false to stop.
void generate_family(const FamilySpec& spec, std::size_t budget,
                     const std::function<bool(const ResidueSet&)>& visit);

std::vector<ResidueSet> generate_family_sets(const FamilySpec& spec, std::size_t budget = 0);

/// Exact membership test for x in f-bar_m(base): x must contain 0, have
/// |base| elements pairwise distinct mod n, project to base, and be
/// inverse-closed away from 0.
bool member_of_fbar(const ResidueSet& x, const ResidueSet& base_s0, Elem m);

/// Inverts g-bar_m: returns the base set when x is its m-fold wreath lift.
std::optional<ResidueSet> gbar_inverse(const ResidueSet& x, Elem m);

}  // namespace circode
