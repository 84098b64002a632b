#include "circode/codes.hpp"

#include <algorithm>

#include "circode/errors.hpp"

namespace circode {

namespace {

struct TauSlot {
  Elem stride;       // values are multiples of this
  Elem range_count;  // multiplier runs over [0, range_count)
  std::size_t domain_size;
};

// Value-range layout of the tau tuple over a given series: one slot per
// tau_i (i = 1..t-1) plus the final slot in the periodic case. Domain sizes
// do not depend on the tau choices, only the domain elements do.
std::vector<TauSlot> tau_layout(const AdmissibleSeries& s) {
  std::vector<TauSlot> slots;
  int t = s.t;
  for (int i = 1; i <= t - 1; ++i) {
    Elem stride = ipow(s.p, s.h[static_cast<std::size_t>(t - i)]) * s.k[static_cast<std::size_t>(t - i)];
    Elem range = ipow(s.p, s.h[static_cast<std::size_t>(t - i - 1)] - s.h[static_cast<std::size_t>(t - i)]);
    slots.push_back({stride, range, static_cast<std::size_t>(s.k[static_cast<std::size_t>(t - i)])});
  }
  if (s.periodic) {
    Elem stride = ipow(s.p, s.h[0]) * s.k[0];
    Elem range = ipow(s.p, s.ell - s.h[0]);
    slots.push_back({stride, range, static_cast<std::size_t>(s.k[0])});
  }
  return slots;
}

void check_tau(const std::vector<Elem>& tau, const TauSlot& slot, const std::vector<Elem>& domain) {
  if (tau.size() != domain.size() || domain.size() != slot.domain_size)
    fail("invalid-recipe", "tau vector does not match its domain size");
  if (domain.front() != 0 || tau.front() != 0) fail("invalid-recipe", "tau(0) must be 0");
  for (Elem v : tau)
    if (v < 0 || v % slot.stride != 0 || v >= slot.stride * slot.range_count)
      fail("invalid-recipe", "tau value out of its stride range");
}

std::vector<Elem> apply_tau(const std::vector<Elem>& domain, const std::vector<Elem>& tau) {
  std::vector<Elem> out(domain.size());
  for (std::size_t j = 0; j < domain.size(); ++j) out[j] = domain[j] + tau[j];
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ResidueSet build_code(const ResidueSet& s0, const CodeRecipe& recipe) {
  const AdmissibleSeries& s = recipe.series;
  std::optional<AdmissibleSeries> longest = longest_series(s0, s.p, s.ell);
  if (!longest || !(*longest == s))
    fail("invalid-recipe", "the recipe series is not the longest series of S_0");
  if (recipe.taus.size() + 1 != static_cast<std::size_t>(s.t))
    fail("invalid-recipe", "a recipe over a length-2t series carries t-1 tau maps");
  if (recipe.tau_final.has_value() != s.periodic)
    fail("invalid-recipe", "the final tau is present exactly in the periodic case");

  std::vector<TauSlot> slots = tau_layout(s);
  int t = s.t;
  std::vector<Elem> d;
  Elem step = ipow(s.p, s.h[static_cast<std::size_t>(t - 1)]);
  for (Elem j = 0; j < s.k[static_cast<std::size_t>(t - 1)]; ++j) d.push_back(j * step);

  for (int i = 1; i <= t - 1; ++i) {
    const TauSlot& slot = slots[static_cast<std::size_t>(i - 1)];
    check_tau(recipe.taus[static_cast<std::size_t>(i - 1)], slot, d);
    d = apply_tau(d, recipe.taus[static_cast<std::size_t>(i - 1)]);
    Elem jstride = ipow(s.p, s.h[static_cast<std::size_t>(t - i - 1)]) * s.k[static_cast<std::size_t>(t - i)];
    Elem jcount = s.k[static_cast<std::size_t>(t - i - 1)] / s.k[static_cast<std::size_t>(t - i)];
    std::vector<Elem> widened;
    widened.reserve(d.size() * static_cast<std::size_t>(jcount));
    for (Elem j = 0; j < jcount; ++j)
      for (Elem x : d) widened.push_back(x + j * jstride);
    std::sort(widened.begin(), widened.end());
    d = std::move(widened);
  }
  if (s.periodic) {
    check_tau(*recipe.tau_final, slots.back(), d);
    d = apply_tau(d, *recipe.tau_final);
  }
  return ResidueSet(s.modulus, std::move(d));
}

void enumerate_recipes(const ResidueSet& s0, Elem p, int ell,
                       const std::function<bool(const CodeRecipe&)>& visit) {
  std::optional<AdmissibleSeries> series = longest_series(s0, p, ell);
  if (!series) fail("invalid-input", "S_0 is not pyramidal");
  std::vector<TauSlot> slots = tau_layout(*series);

  // Free positions: every domain slot except the pinned tau(0). The
  // odometer runs in lexicographic order of the tau tuple, last position
  // fastest.
  struct Free {
    std::size_t slot;
    std::size_t pos;
  };
  std::vector<Free> frees;
  for (std::size_t si = 0; si < slots.size(); ++si)
    for (std::size_t j = 1; j < slots[si].domain_size; ++j) frees.push_back({si, j});
  std::vector<Elem> counter(frees.size(), 0);

  CodeRecipe recipe;
  recipe.series = *series;
  bool periodic = series->periodic;
  std::size_t ordinary = slots.size() - (periodic ? 1 : 0);

  while (true) {
    recipe.taus.assign(ordinary, {});
    for (std::size_t si = 0; si < ordinary; ++si)
      recipe.taus[si].assign(slots[si].domain_size, 0);
    if (periodic) recipe.tau_final = std::vector<Elem>(slots.back().domain_size, 0);
    for (std::size_t f = 0; f < frees.size(); ++f) {
      Elem value = counter[f] * slots[frees[f].slot].stride;
      if (periodic && frees[f].slot == slots.size() - 1)
        (*recipe.tau_final)[frees[f].pos] = value;
      else
        recipe.taus[frees[f].slot][frees[f].pos] = value;
    }
    if (!visit(recipe)) return;

    std::size_t pos = frees.size();
    while (pos > 0 && counter[pos - 1] == slots[frees[pos - 1].slot].range_count - 1)
      counter[--pos] = 0;
    if (pos == 0) return;
    ++counter[pos - 1];
  }
}

std::vector<ResidueSet> enumerate_constructed_codes(const ResidueSet& s0, Elem p, int ell,
                                                    std::size_t budget) {
  std::vector<ResidueSet> out;
  enumerate_recipes(s0, p, ell, [&](const CodeRecipe& recipe) {
    out.push_back(build_code(s0, recipe));
    return budget == 0 || out.size() < budget;
  });
  std::sort(out.begin(), out.end(), [](const ResidueSet& x, const ResidueSet& y) {
    return x.elements() < y.elements();
  });
  return out;
}

ResidueSet first_constructed_code(const ResidueSet& s0, Elem p, int ell) {
  std::optional<ResidueSet> code;
  enumerate_recipes(s0, p, ell, [&](const CodeRecipe& recipe) {
    code = build_code(s0, recipe);
    return false;
  });
  return *code;
}

BigInt lower_bound(const AdmissibleSeries& s) {
  long long e = (static_cast<long long>(s.ell) - s.h[0]) * s.k[0];
  for (int i = 1; i <= s.t - 1; ++i)
    e += static_cast<long long>(s.h[static_cast<std::size_t>(i - 1)] - s.h[static_cast<std::size_t>(i)]) *
         s.k[static_cast<std::size_t>(i)];
  e += s.h[static_cast<std::size_t>(s.t - 1)] - s.ell;
  if (e < 0) fail("invalid-series", "negative exponent in the code-count bound");
  return big_pow(s.p, static_cast<int>(e));
}

BigInt recipe_count(const AdmissibleSeries& s) {
  BigInt total = 1;
  for (const TauSlot& slot : tau_layout(s))
    total *= big_pow(slot.range_count, static_cast<int>(slot.domain_size - 1));
  return total;
}

}  // namespace circode
