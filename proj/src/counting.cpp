#include "circode/counting.hpp"

#include <algorithm>
#include <functional>

#include "circode/errors.hpp"

namespace circode {

CountParams make_count_params(Elem n, Elem p, int ell) {
  if (!is_prime(p)) fail("invalid-input", "p must be prime");
  if (ell < 1) fail("invalid-input", "ell must be >= 1");
  Elem pl = ipow(p, ell);
  if (n < 1 || n % pl != 0) fail("invalid-input", "p^ell must divide n");
  CountParams params;
  params.n = n;
  params.p = p;
  params.ell = ell;
  params.m = n / pl;
  params.r = p % 2 == 1 ? (pl - 1) / 2 : ipow(2, ell - 1) - 1;
  params.divisors_dnp = square_free_divisors_coprime(n, p);
  return params;
}

BigInt count_formula(const CountParams& params) {
  if (params.ell + params.p < 4)
    fail("out-of-theorem-hypothesis", "the formula requires ell + p >= 4");
  if (params.p == 2 && params.m % 2 == 0)
    return 0;  // no inverse-closed transversal exists for even m
  int r = static_cast<int>(params.r);
  BigInt total = big_pow(params.m, r);
  for (Elem d : params.divisors_dnp) {
    // d | n and gcd(d, p) = 1, so d | m
    BigInt term = big_pow(params.m / d, r);
    if (prime_nu(d) % 2 == 1)
      total -= term;
    else
      total += term;
  }
  return total;
}

namespace {

// Enumerates inverse-closed S of size p^ell - 1 through its pair choices on
// {1, ..., floor(n/2)} and counts members passing `accept`. Size parity
// decides whether n/2 is forced in.
BigInt sweep_pairs(Elem n, Elem degree, std::uint64_t budget,
                   const std::function<bool(const std::vector<Elem>&)>& accept) {
  std::vector<Elem> half;  // candidate pair representatives
  for (Elem x = 1; 2 * x < n; ++x) half.push_back(x);
  bool need_half = degree % 2 == 1;
  if (need_half && n % 2 != 0) return 0;
  Elem pairs = degree / 2;  // pairs to choose; n/2 contributes the odd element
  if (pairs > static_cast<Elem>(half.size())) return 0;

  std::uint64_t space =
      binomial_capped(static_cast<int>(half.size()), static_cast<int>(pairs), budget);
  if (space >= budget) fail("budget-exceeded", "pair sweep larger than the enumeration budget");

  BigInt count = 0;
  std::vector<Elem> idx(static_cast<std::size_t>(pairs));
  for (Elem i = 0; i < pairs; ++i) idx[static_cast<std::size_t>(i)] = i;
  std::vector<Elem> members;
  while (true) {
    members.clear();
    for (Elem i : idx) {
      members.push_back(half[static_cast<std::size_t>(i)]);
      members.push_back(n - half[static_cast<std::size_t>(i)]);
    }
    if (need_half) members.push_back(n / 2);
    std::sort(members.begin(), members.end());
    if (accept(members)) ++count;

    if (pairs == 0) break;
    // next combination
    Elem limit = static_cast<Elem>(half.size());
    std::size_t j = idx.size();
    while (j > 0 && idx[j - 1] == limit - static_cast<Elem>(idx.size() - (j - 1))) --j;
    if (j == 0) break;
    ++idx[j - 1];
    for (std::size_t k2 = j; k2 < idx.size(); ++k2) idx[k2] = idx[k2 - 1] + 1;
  }
  return count;
}

}  // namespace

BigInt count_enumerate(const CountParams& params, std::uint64_t budget) {
  Elem pl = ipow(params.p, params.ell);
  Elem degree = pl - 1;
  return sweep_pairs(params.n, degree, budget, [&](const std::vector<Elem>& s) {
    Elem g = params.n;
    for (Elem e : s) g = gcd(g, e);
    if (g != 1) return false;
    // distinct residues mod p^ell over S_0 = S with 0
    std::vector<Elem> residues;
    residues.reserve(s.size() + 1);
    residues.push_back(0);
    for (Elem e : s) residues.push_back(e % pl);
    std::sort(residues.begin(), residues.end());
    return std::adjacent_find(residues.begin(), residues.end()) == residues.end();
  });
}

BigInt gcd_excess(const CountParams& params) {
  if (params.p % 2 == 0) fail("invalid-input", "the excess count is stated for odd p");
  if (params.divisors_dnp.empty()) return 0;
  int r = static_cast<int>((ipow(params.p, params.ell) - 1) / 2);
  BigInt total = 0;
  for (Elem d : params.divisors_dnp) {
    BigInt term = big_pow(params.m / d, r);
    if (prime_nu(d) % 2 == 1)
      total += term;
    else
      total -= term;
  }
  return total;
}

}  // namespace circode
