#pragma once

#include <optional>
#include <span>
#include <vector>

#include "circode/zmod.hpp"

namespace circode {

/// A subgroup chain H_0 < H_1 < ... < H_{2t} = Z_n in canonical
/// divisor-generator form, together with the integer sequences it
/// determines:
///
///   H_{2i-1} = <p^{h_{i-1}} k_i>,  H_{2i} = <p^{h_i} k_i>,
///   k_0 = m, k_t = 1, k_i a proper divisor of k_{i-1},
///   0 = h_t < h_{t-1} < ... < h_0 <= ell (h_0 = ell iff the set with which
///   the series is associated is aperiodic),
///   l_i = h_{i-1} - h_i and m_i = k_{i-1}/k_i, so |H_{2i}/H_{2i-1}| = p^{l_i}
///   and |H_{2i-1}/H_{2i-2}| = m_i.
///
/// gens holds the generators d_0, ..., d_{2t}; the sequences are derived
/// from the front (d_0 fixes h_0 and k_0 = m) and validated.
struct AdmissibleSeries {
  Elem modulus = 0;  // n
  Elem p = 0;
  int ell = 0;  // the associated set has p^ell elements
  std::vector<Elem> gens;
  std::vector<int> h;   // h_0 .. h_t
  std::vector<Elem> k;  // k_0 .. k_t
  std::vector<int> l;   // l_1 .. l_t
  std::vector<Elem> m;  // m_1 .. m_t
  int t = 0;
  bool periodic = false;  // H_0 nontrivial

  bool operator==(const AdmissibleSeries& other) const = default;
};

/// Builds a series from the generator chain d_0, ..., d_{2t}, deriving and
/// validating the h/k/l/m sequences. Throws invalid-series when the chain
/// does not have the required shape.
AdmissibleSeries make_series(Elem n, Elem p, int ell, std::span<const Elem> gens);

/// "n: H0=<d0> < H1=<d1> < ... < H2t=<1>; h=(...); k=(...)"
std::string to_text(const AdmissibleSeries& series);

/// Decides whether `series` witnesses that S_0 is pyramidal: in the
/// aperiodic case (H_0 trivial) conditions (T1)-(T3) are checked for S_0
/// directly; in the periodic case H_0 must be exactly the subgroup of
/// periods of S_0 and the conditions are checked for S_0/H_0 against the
/// quotient series. Periodicity in (T2) is exact: H_{2i}/H_{2i-1} must be
/// the full subgroup of periods of S_0/H_{2i-1}.
bool check_T_conditions(const ResidueSet& s0, const AdmissibleSeries& series);

/// All admissible series associated with S_0, found by backtracking over
/// the candidate divisors k_{i+1} of k_i at each odd step (the even steps
/// are forced as subgroups of periods). Ordered by length, then by
/// generator chain. |S_0| = p^ell, 0 in S_0 and p^ell | n are required.
std::vector<AdmissibleSeries> enumerate_series(const ResidueSet& s0, Elem p, int ell);

/// The longest admissible series associated with S_0, or nullopt when S_0
/// is not pyramidal. When several series share the maximal length the one
/// with the lexicographically largest generator chain (equivalently, the
/// largest k sequence) is returned; that choice maximises the code-count
/// lower bound derived from the series.
std::optional<AdmissibleSeries> longest_series(const ResidueSet& s0, Elem p, int ell);

bool is_pyramidal(const ResidueSet& s0, Elem p, int ell);

/// Outcome of the existence decision for Cay(Z_n, S) of degree p^ell - 1.
struct ExistenceReport {
  bool exists = false;           // perfect codes exist
  bool divides = false;          // p^ell | n
  bool pyramidal = false;        // S_0 is pyramidal
  bool subgroup_code = false;    // (S_0 - S_0) intersect <p^ell> = {0}, i.e.
                                 // <p^ell> itself is a perfect code
  bool non_subgroup_codes = false;  // codes exist that are not subgroups
  std::optional<AdmissibleSeries> series;  // longest series when pyramidal
};

/// Decides existence of a perfect code in Cay(Z_n, S). Preconditions
/// (inverse-closed S without 0 of size p^ell - 1, connected, non-complete)
/// are enforced with invalid-input errors naming the violated one.
ExistenceReport decide_existence(const ResidueSet& s, Elem p, int ell);

}  // namespace circode
