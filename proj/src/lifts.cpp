#include "circode/lifts.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "circode/errors.hpp"

namespace circode {

ResidueSet lifted_set(const FeasibleLift& lift, const ResidueSet& s0) {
  if (lift.sigma.size() != s0.size()) fail("invalid-input", "lift does not match the base set");
  Elem n = lift.base_modulus;
  std::vector<Elem> out;
  out.reserve(s0.size());
  for (std::size_t i = 0; i < s0.size(); ++i) out.push_back(s0.elements()[i] + lift.sigma[i] * n);
  return ResidueSet(n * lift.factor, std::move(out));
}

ResidueSet f_project(const ResidueSet& s0, Elem m) {
  Elem n = s0.modulus();
  if (m < 1 || n % m != 0) fail("invalid-input", "the covering factor must divide the modulus");
  Elem q = n / m;
  if (!distinct_mod(s0, q)) fail("not-a-cover", "(S_0 - S_0) meets <n/m> nontrivially");
  return project(s0, Subgroup{n, q});
}

ResidueSet g_project(const ResidueSet& s0, Elem m) {
  Elem n = s0.modulus();
  if (m < 1 || n % m != 0) fail("invalid-input", "the wreath factor must divide the modulus");
  Elem q = n / m;
  if (!periodic_under(s0, q)) fail("not-periodic", "the set is not <n/m>-periodic");
  return project(s0, Subgroup{n, q});
}

ResidueSet g_lift(const ResidueSet& s0, Elem m) {
  if (m < 1) fail("invalid-input", "the wreath factor must be >= 1");
  Elem n = s0.modulus();
  std::vector<Elem> out;
  out.reserve(s0.size() * static_cast<std::size_t>(m));
  for (Elem i = 0; i < m; ++i)
    for (Elem s : s0.elements()) out.push_back(s + i * n);
  return ResidueSet(n * m, std::move(out));
}

void enumerate_lifts(const ResidueSet& s0, Elem m, bool require_connected,
                     const std::function<bool(const FeasibleLift&)>& visit) {
  if (m < 1) fail("invalid-input", "the covering factor must be >= 1");
  if (!s0.contains(0)) fail("invalid-input", "lift enumeration expects an extended set containing 0");
  Elem n = s0.modulus();

  // Free representatives s < n-s; the mirror and the self-paired n/2 are
  // forced. A base set that is not inverse-closed admits no feasible map.
  std::vector<Elem> reps;
  bool has_half = false;
  for (Elem s : s0.elements()) {
    if (s == 0) continue;
    Elem mirror = n - s;
    if (!s0.contains(mirror)) return;
    if (s * 2 == n) {
      has_half = true;
    } else if (s < mirror) {
      reps.push_back(s);
    }
  }
  if (has_half && m % 2 == 0) return;

  const std::vector<Elem>& elems = s0.elements();
  auto index_of = [&](Elem v) {
    return static_cast<std::size_t>(
        std::lower_bound(elems.begin(), elems.end(), v) - elems.begin());
  };

  FeasibleLift lift{n, m, std::vector<Elem>(s0.size(), 0)};
  if (has_half) lift.sigma[index_of(n / 2)] = (m - 1) / 2;

  std::vector<Elem> values(reps.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < reps.size(); ++i) {
      lift.sigma[index_of(reps[i])] = values[i];
      lift.sigma[index_of(n - reps[i])] = m - 1 - values[i];
    }
    bool keep = true;
    if (require_connected) {
      Elem g = n * m;
      for (std::size_t i = 0; i < elems.size(); ++i) g = gcd(g, elems[i] + lift.sigma[i] * n);
      keep = g == 1;
    }
    if (keep && !visit(lift)) return;

    // lexicographic odometer over the free values
    std::size_t pos = values.size();
    while (pos > 0 && values[pos - 1] == m - 1) values[--pos] = 0;
    if (pos == 0) return;
    ++values[pos - 1];
  }
}

std::vector<ResidueSet> enumerate_lift_sets(const ResidueSet& s0, Elem m, bool require_connected,
                                            std::size_t budget) {
  std::vector<ResidueSet> out;
  enumerate_lifts(s0, m, require_connected, [&](const FeasibleLift& lift) {
    out.push_back(lifted_set(lift, s0));
    return budget == 0 || out.size() < budget;
  });
  return out;
}

int FamilySpec::ell() const {
  int e = 0;
  for (int v : l_seq) e += v;
  return e;
}

Elem FamilySpec::m() const {
  Elem r = 1;
  for (Elem v : m_seq) r *= v;
  return r;
}

Elem FamilySpec::n() const { return ipow(p, ell()) * m(); }

FamilySpec make_family_spec(Elem p, std::vector<int> l_seq, std::vector<Elem> m_seq) {
  if (!is_prime(p)) fail("invalid-input", "p must be prime");
  if (l_seq.empty() || l_seq.size() != m_seq.size())
    fail("invalid-input", "the l and m sequences must be nonempty and of equal length");
  for (int v : l_seq)
    if (v < 1) fail("invalid-input", "l entries must be positive");
  for (Elem v : m_seq)
    if (v < 1) fail("invalid-input", "m entries must be positive");
  FamilySpec spec{p, std::move(l_seq), std::move(m_seq)};
  if (spec.m() < 2) fail("invalid-input", "prod m >= 2 is required (the family would be complete)");
  spec.n();  // overflow check
  return spec;
}

void generate_family(const FamilySpec& spec, std::size_t budget,
                     const std::function<bool(const ResidueSet&)>& visit) {
  std::size_t emitted = 0;
  std::set<std::string> seen;
  bool stop = false;

  // Stage i consumes f-bar_{m_i}; between stages the deterministic wreath
  // lift g-bar_{p^{l_i}} is applied. Connectivity is required at every
  // f-bar choice (a disconnected intermediate only lifts to disconnected
  // sets, so this is pruning, not a semantic restriction).
  std::function<void(const ResidueSet&, int)> stage = [&](const ResidueSet& cur, int i) {
    enumerate_lifts(cur, spec.m_seq[static_cast<std::size_t>(i)], true,
                    [&](const FeasibleLift& lift) {
                      ResidueSet lifted = lifted_set(lift, cur);
                      if (i == 0) {
                        if (!seen.insert(to_text(lifted)).second) return true;
                        ++emitted;
                        if (!visit(lifted)) stop = true;
                        if (budget != 0 && emitted >= budget) stop = true;
                      } else {
                        stage(g_lift(lifted, ipow(spec.p, spec.l_seq[static_cast<std::size_t>(i - 1)])),
                              i - 1);
                      }
                      return !stop;
                    });
  };

  int t = static_cast<int>(spec.l_seq.size());
  stage(full_set(ipow(spec.p, spec.l_seq[static_cast<std::size_t>(t - 1)])), t - 1);
}

std::vector<ResidueSet> generate_family_sets(const FamilySpec& spec, std::size_t budget) {
  std::vector<ResidueSet> out;
  generate_family(spec, budget, [&](const ResidueSet& s0) {
    out.push_back(s0);
    return true;
  });
  return out;
}

bool member_of_fbar(const ResidueSet& x, const ResidueSet& base_s0, Elem m) {
  Elem n = base_s0.modulus();
  if (x.modulus() != n * m) return false;
  if (x.size() != base_s0.size() || !x.contains(0)) return false;
  if (!distinct_mod(x, n)) return false;
  if (project(x, Subgroup{x.modulus(), n}) != base_s0) return false;
  for (Elem e : x.elements())
    if (e != 0 && !x.contains(x.modulus() - e)) return false;
  return true;
}

std::optional<ResidueSet> gbar_inverse(const ResidueSet& x, Elem m) {
  Elem nm = x.modulus();
  if (m < 1 || nm % m != 0) return std::nullopt;
  Elem n = nm / m;
  if (!periodic_under(x, n)) return std::nullopt;
  return project(x, Subgroup{nm, n});
}

}  // namespace circode
