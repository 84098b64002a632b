#include "circode/pyramidal.hpp"

#include <algorithm>

#include "circode/errors.hpp"

namespace circode {

namespace {

ResidueSet project_mod(const ResidueSet& x, Elem d) {
  return project(x, Subgroup{x.modulus(), d});
}

// Generator of the subgroup of periods of (x mod d) inside Z_d.
Elem period_generator_mod(const ResidueSet& x, Elem d) {
  return subgroup_of_periods(project_mod(x, d)).generator;
}

}  // namespace

AdmissibleSeries make_series(Elem n, Elem p, int ell, std::span<const Elem> gens) {
  if (!is_prime(p)) fail("invalid-input", "p must be prime");
  if (ell < 1) fail("invalid-input", "ell must be >= 1");
  Elem pl = ipow(p, ell);
  if (n < 1 || n % pl != 0) fail("invalid-series", "p^ell must divide the modulus");
  if (gens.size() < 3 || gens.size() % 2 == 0)
    fail("invalid-series", "a series lists d_0, ..., d_{2t} with t >= 1");
  if (gens.back() != 1) fail("invalid-series", "the series must end at the whole group");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i] < 1 || n % gens[i] != 0) fail("invalid-series", "series entries must divide the modulus");
    if (i > 0 && (gens[i] >= gens[i - 1] || gens[i - 1] % gens[i] != 0))
      fail("invalid-series", "series subgroups must strictly increase");
  }

  AdmissibleSeries s;
  s.modulus = n;
  s.p = p;
  s.ell = ell;
  s.gens.assign(gens.begin(), gens.end());
  s.t = static_cast<int>(gens.size() / 2);
  s.periodic = gens[0] != n;

  Elem em = n / pl;
  s.k.push_back(em);
  if (gens[0] % em != 0) fail("invalid-series", "H_0 is not of the form <p^h0 * m>");
  int h0 = log_exact(gens[0] / em, p);
  if (h0 < 0 || h0 > ell) fail("invalid-series", "H_0 is not of the form <p^h0 * m>");
  if (s.periodic && h0 < 1) fail("invalid-series", "a nontrivial H_0 requires 1 <= h0 < ell");
  s.h.push_back(h0);

  for (int i = 0; i < s.t; ++i) {
    Elem ph = ipow(p, s.h[static_cast<std::size_t>(i)]);
    Elem dodd = s.gens[static_cast<std::size_t>(2 * i + 1)];
    Elem knext = dodd % ph == 0 ? dodd / ph : 0;
    if (knext < 1 || s.k.back() % knext != 0 || knext >= s.k.back())
      fail("invalid-series", "H_{2i+1} is not of the form <p^{h_i} k_{i+1}> with k_{i+1} | k_i");
    Elem deven = s.gens[static_cast<std::size_t>(2 * i + 2)];
    if (deven % knext != 0) fail("invalid-series", "H_{2i+2} is not of the form <p^{h_{i+1}} k_{i+1}>");
    int hnext = log_exact(deven / knext, p);
    if (hnext < 0 || hnext >= s.h.back())
      fail("invalid-series", "the h sequence must strictly decrease");
    s.k.push_back(knext);
    s.h.push_back(hnext);
    s.l.push_back(s.h[static_cast<std::size_t>(i)] - hnext);
    s.m.push_back(s.k[static_cast<std::size_t>(i)] / knext);
  }
  if (s.h.back() != 0 || s.k.back() != 1)
    fail("invalid-series", "the series must reach h_t = 0, k_t = 1");
  return s;
}

std::string to_text(const AdmissibleSeries& series) {
  std::string out = std::to_string(series.modulus) + ":";
  for (std::size_t i = 0; i < series.gens.size(); ++i) {
    out += i == 0 ? " " : " < ";
    out += "H" + std::to_string(i) + "=<" + std::to_string(series.gens[i]) + ">";
  }
  auto append_seq = [&out](const char* name, const auto& seq) {
    out += name;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(seq[i]);
    }
    out += ")";
  };
  append_seq("; h=(", series.h);
  append_seq("; k=(", series.k);
  return out;
}

bool check_T_conditions(const ResidueSet& s0, const AdmissibleSeries& series) {
  if (!s0.contains(0)) fail("invalid-input", "the extended set must contain 0");
  if (s0.modulus() != series.modulus) fail("invalid-input", "series modulus differs from the set modulus");

  // Case split of the definition: trivial H_0 requires an aperiodic set,
  // nontrivial H_0 must be exactly the subgroup of periods. The quotient
  // conditions below are identical in both cases because projection
  // composes, so S_0/H_j can be computed directly from S_0.
  Elem period = subgroup_of_periods(s0).generator;
  if (series.periodic) {
    if (period != series.gens[0]) return false;
  } else {
    if (period != s0.modulus()) return false;
  }

  int t = series.t;
  for (int i = 0; i < t; ++i) {
    // (T1): members of S_0/H_{2i} stay distinct in S_0/H_{2i+1}; this is
    // also the second half of (T3).
    std::size_t before = project_mod(s0, series.gens[static_cast<std::size_t>(2 * i)]).size();
    std::size_t after = project_mod(s0, series.gens[static_cast<std::size_t>(2 * i + 1)]).size();
    if (before != after) return false;
  }
  for (int i = 1; i <= t; ++i) {
    // (T2), exact: the subgroup of periods of S_0/H_{2i-1} is H_{2i}/H_{2i-1}.
    Elem dodd = series.gens[static_cast<std::size_t>(2 * i - 1)];
    if (period_generator_mod(s0, dodd) != series.gens[static_cast<std::size_t>(2 * i)]) return false;
  }
  // (T3), first half: S_0/H_{2t-1} is the whole quotient group.
  Elem dlast = series.gens[static_cast<std::size_t>(2 * t - 1)];
  return project_mod(s0, dlast).size() == static_cast<std::size_t>(dlast);
}

namespace {

struct SeriesSearch {
  const ResidueSet& s0;
  Elem p;
  int ell;
  Elem n;
  std::vector<Elem> chain;
  std::vector<std::vector<Elem>> found;

  void dfs(int h_cur, Elem k_cur) {
    Elem d_cur = ipow(p, h_cur) * k_cur;
    if (d_cur == 1) {
      if (chain.size() >= 3) found.push_back(chain);
      return;
    }
    std::size_t sz_cur = project_mod(s0, d_cur).size();
    for (Elem k_next : divisors(k_cur)) {
      if (k_next >= k_cur) continue;
      Elem d_odd = ipow(p, h_cur) * k_next;
      if (project_mod(s0, d_odd).size() != sz_cur) continue;  // (T1)
      Elem g = period_generator_mod(s0, d_odd);
      if (g == d_odd) continue;  // aperiodic quotient, (T2) fails
      if (g % k_next != 0) continue;
      int h_next = log_exact(g / k_next, p);
      if (h_next < 0 || h_next >= h_cur) continue;
      chain.push_back(d_odd);
      chain.push_back(g);
      dfs(h_next, k_next);
      chain.pop_back();
      chain.pop_back();
    }
  }
};

}  // namespace

std::vector<AdmissibleSeries> enumerate_series(const ResidueSet& s0, Elem p, int ell) {
  if (!is_prime(p)) fail("invalid-input", "p must be prime");
  if (ell < 1) fail("invalid-input", "ell must be >= 1");
  Elem pl = ipow(p, ell);
  if (static_cast<Elem>(s0.size()) != pl) fail("invalid-input", "|S_0| must equal p^ell");
  if (!s0.contains(0)) fail("invalid-input", "the extended set must contain 0");
  Elem n = s0.modulus();
  if (n % pl != 0) fail("invalid-input", "p^ell must divide n");
  Elem em = n / pl;

  // H_0 and h_0 are fixed by the subgroup of periods of S_0; a periodic set
  // whose period subgroup is not <p^h0 m> with 1 <= h0 < ell admits no
  // series of the required shape.
  std::vector<AdmissibleSeries> out;
  Elem period = subgroup_of_periods(s0).generator;
  int h0;
  if (period == n) {
    h0 = ell;
  } else {
    if (period % em != 0) return out;
    h0 = log_exact(period / em, p);
    if (h0 < 1 || h0 >= ell) return out;
  }

  SeriesSearch search{s0, p, ell, n, {ipow(p, h0) * em}, {}};
  search.dfs(h0, em);
  for (const auto& chain : search.found) out.push_back(make_series(n, p, ell, chain));
  std::sort(out.begin(), out.end(), [](const AdmissibleSeries& a, const AdmissibleSeries& b) {
    return a.t != b.t ? a.t < b.t : a.gens < b.gens;
  });
  return out;
}

std::optional<AdmissibleSeries> longest_series(const ResidueSet& s0, Elem p, int ell) {
  std::vector<AdmissibleSeries> all = enumerate_series(s0, p, ell);
  if (all.empty()) return std::nullopt;
  // Several maximal-length series can exist (distinct odd-step choices can
  // both satisfy the conditions). The canonical representative is the one
  // with the lexicographically largest generator chain, i.e. the largest k
  // sequence; it maximises the code-count bound among the maximal series.
  return all.back();
}

bool is_pyramidal(const ResidueSet& s0, Elem p, int ell) {
  return longest_series(s0, p, ell).has_value();
}

ExistenceReport decide_existence(const ResidueSet& s, Elem p, int ell) {
  if (!is_prime(p)) fail("invalid-input", "p must be prime");
  if (ell < 1) fail("invalid-input", "ell must be >= 1");
  if (s.contains(0)) fail("invalid-input", "connection set contains 0");
  if (!is_inverse_closed(s)) fail("invalid-input", "connection set is not inverse-closed");
  Elem pl = ipow(p, ell);
  Elem n = s.modulus();
  if (static_cast<Elem>(s.size()) != pl - 1)
    fail("invalid-input", "degree |S| must equal p^ell - 1");
  if (!generates(s)) fail("invalid-input", "Cay(Z_n, S) is not connected");
  if (static_cast<Elem>(s.size()) + 1 >= n) fail("invalid-input", "Cay(Z_n, S) is complete");

  std::vector<Elem> ext(s.elements());
  ext.push_back(0);
  ResidueSet s0(n, std::move(ext));

  ExistenceReport report;
  report.divides = n % pl == 0;
  if (!report.divides) return report;

  report.subgroup_code = distinct_mod(s0, pl);
  report.series = longest_series(s0, p, ell);
  report.pyramidal = report.series.has_value();
  report.exists = report.pyramidal;
  if (report.exists) {
    // Case (a) of the dichotomy: with the subgroup code present, further
    // codes exist iff t > 1 or S_0 is periodic (the wreath fibres then give
    // more than one code). Case (b): every code is a non-subgroup.
    report.non_subgroup_codes =
        !report.subgroup_code || report.series->t > 1 || report.series->periodic;
  }
  return report;
}

}  // namespace circode
