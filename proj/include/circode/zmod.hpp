#pragma once

#include <span>
#include <string>
#include <vector>

#include "circode/arith.hpp"

namespace circode {

/// A finite subset of Z_n together with its modulus. Elements are kept
/// strictly sorted in [0, n). Every set the library manipulates (connection
/// sets, codes, lifted sets, quotient images) lives in this type; quotients
/// Z_n/<d> are materialised as plain sets over the modulus d.
class ResidueSet {
 public:
  /// Reduces mod `modulus`, deduplicates and sorts. modulus >= 1 required.
  ResidueSet(Elem modulus, std::vector<Elem> raw);

  Elem modulus() const noexcept { return modulus_; }
  const std::vector<Elem>& elements() const noexcept { return elems_; }
  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }

  /// Membership of x (reduced mod n first).
  bool contains(Elem x) const;

  bool operator==(const ResidueSet& other) const = default;

 private:
  Elem modulus_;
  std::vector<Elem> elems_;
};

/// A subgroup <d> of Z_n in canonical divisor-generator form: d divides n
/// and d = n encodes the trivial subgroup {0}. One representation per
/// subgroup, so chains of subgroups compare by integer generator.
struct Subgroup {
  Elem modulus;
  Elem generator;

  Elem order() const noexcept { return modulus / generator; }
  bool trivial() const noexcept { return generator == modulus; }
  bool whole() const noexcept { return generator == 1; }
  bool contains(Elem x) const;

  bool operator==(const Subgroup& other) const = default;
};

/// Validating constructor: generator must be a positive divisor of modulus.
Subgroup make_subgroup(Elem modulus, Elem generator);

ResidueSet normalize(Elem modulus, std::span<const Elem> raw);

/// The set {0, 1, ..., n-1}.
ResidueSet full_set(Elem n);

/// <d> materialised as a set {0, d, 2d, ...}.
ResidueSet subgroup_set(const Subgroup& h);

/// True iff -X = X.
bool is_inverse_closed(const ResidueSet& x);

/// {a - b mod n : a, b in X}. X must be nonempty; always contains 0.
ResidueSet difference_set(const ResidueSet& x);

/// {a + b mod n : a in X, b in Y}. Moduli must agree.
ResidueSet sumset(const ResidueSet& x, const ResidueSet& y);

ResidueSet intersect(const ResidueSet& x, const ResidueSet& y);

/// X + g elementwise.
ResidueSet translate(const ResidueSet& x, Elem g);

/// x -> u*x elementwise (the multiplier map; bijective when gcd(u, n) = 1).
ResidueSet multiply(const ResidueSet& x, Elem u);

/// The subgroup of periods of X: the largest subgroup H with X + H = X,
/// found as <d> for the smallest divisor d of n with X + d = X. Returns the
/// trivial subgroup (generator n) exactly when X is aperiodic.
Subgroup subgroup_of_periods(const ResidueSet& x);

/// True iff X + d = X, i.e. X is a union of <d>-cosets.
bool periodic_under(const ResidueSet& x, Elem d);

/// True iff the elements of X stay distinct mod d, i.e.
/// (X - X) intersected with <d> is {0}.
bool distinct_mod(const ResidueSet& x, Elem d);

/// Image of X under Z_n -> Z_n/H, materialised in Z_d for H = <d>.
ResidueSet project(const ResidueSet& x, const Subgroup& h);

/// True iff X generates Z_n, i.e. gcd(X united with {n}) = 1.
bool generates(const ResidueSet& x);

// Canonical text forms ("n:e1,e2,...,ek" and "n:<d>"), the interchange
// format for the CLI and test fixtures.
std::string to_text(const ResidueSet& x);
std::string to_text(const Subgroup& h);
ResidueSet parse_residue_set(const std::string& text);
Subgroup parse_subgroup(const std::string& text);

}  // namespace circode
