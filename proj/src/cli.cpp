#include "circode/cli.hpp"

#include <fstream>
#include <optional>
#include <tuple>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "circode/codes.hpp"
#include "circode/counting.hpp"
#include "circode/errors.hpp"
#include "circode/lifts.hpp"
#include "circode/pyramidal.hpp"
#include "circode/tiling.hpp"
#include "circode/zmod.hpp"

namespace circode {

namespace {

using json = nlohmann::ordered_json;

constexpr std::size_t kDefaultCap = 10'000;

json series_json(const AdmissibleSeries& s) {
  // H_0 is reported through h[0]/k[0]; `subgroups` lists H_1 .. H_2t.
  json j;
  j["subgroups"] = std::vector<Elem>(s.gens.begin() + 1, s.gens.end());
  j["h"] = s.h;
  j["k"] = s.k;
  j["l"] = s.l;
  j["m"] = s.m;
  j["t"] = s.t;
  j["periodic"] = s.periodic;
  j["text"] = to_text(s);
  return j;
}

std::vector<std::string> set_texts(const std::vector<ResidueSet>& sets) {
  std::vector<std::string> out;
  out.reserve(sets.size());
  for (const ResidueSet& s : sets) out.push_back(to_text(s));
  return out;
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

void emit_stream(std::ostream& out, const std::vector<ResidueSet>& sets, bool truncated) {
  for (const ResidueSet& s : sets) out << to_text(s) << "\n";
  if (truncated) out << "# truncated\n";
}

std::vector<Elem> parse_elem_list(const std::string& text) {
  std::vector<Elem> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    std::string tok = text.substr(pos, next == std::string::npos ? next : next - pos);
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      fail("parse-error", "expected an integer at position " + std::to_string(pos) + " in \"" + text + "\"");
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

struct CommonArgs {
  std::string set_text;
  std::string file;
  Elem p = 0;
  int l = 0;
  Elem n = 0;
  Elem by = 0;
  std::string series_text;
  std::string code_text;
  std::string left_text;
  std::string right_text;
  std::string op = "f";
  std::string lseq_text;
  std::string mseq_text;
  bool oracle = false;
  bool stream = false;
  bool all = false;
  bool constructed = false;
  bool connected = false;
  std::size_t budget = kDefaultCap;
  std::uint64_t sweep_budget = 50'000'000;
  int threads = 1;
};

int cmd_check(const CommonArgs& a, std::ostream& out) {
  std::vector<std::string> inputs;
  if (!a.file.empty()) {
    std::ifstream in(a.file);
    if (!in) fail("invalid-input", "cannot open " + a.file);
    std::string line;
    while (std::getline(in, line))
      if (!line.empty()) inputs.push_back(line);
  } else {
    inputs.push_back(a.set_text);
  }
  bool all_exist = true;
  for (const std::string& text : inputs) {
    ResidueSet s = parse_residue_set(text);
    ExistenceReport report = decide_existence(s, a.p, a.l);
    json j;
    j["command"] = "check";
    j["set"] = to_text(s);
    j["p"] = a.p;
    j["l"] = a.l;
    j["exists"] = report.exists;
    j["pyramidal"] = report.pyramidal;
    j["divides"] = report.divides;
    j["subgroup_code"] = report.subgroup_code;
    j["non_subgroup_codes"] = report.non_subgroup_codes;
    if (report.series) j["series"] = series_json(*report.series);
    emit(out, j);
    all_exist = all_exist && report.exists;
  }
  return all_exist ? 0 : 1;
}

int cmd_series(const CommonArgs& a, std::ostream& out) {
  ResidueSet s0 = parse_residue_set(a.set_text);
  if (!s0.contains(0)) {
    std::vector<Elem> ext(s0.elements());
    ext.push_back(0);
    s0 = ResidueSet(s0.modulus(), std::move(ext));
  }
  json j;
  j["command"] = "series";
  j["set"] = to_text(s0);
  j["p"] = a.p;
  j["l"] = a.l;
  if (!a.series_text.empty()) {
    AdmissibleSeries series = make_series(s0.modulus(), a.p, a.l, parse_elem_list(a.series_text));
    bool ok = check_T_conditions(s0, series);
    j["valid"] = ok;
    j["series"] = series_json(series);
    emit(out, j);
    return ok ? 0 : 1;
  }
  std::optional<AdmissibleSeries> best = longest_series(s0, a.p, a.l);
  j["pyramidal"] = best.has_value();
  if (best) j["series"] = series_json(*best);
  emit(out, j);
  return best ? 0 : 1;
}

int cmd_find_code(const CommonArgs& a, std::ostream& out) {
  ResidueSet s = parse_residue_set(a.set_text);
  std::optional<ResidueSet> code;
  if (a.oracle) {
    code = find_perfect_code(s);
  } else {
    std::vector<Elem> ext(s.elements());
    ext.push_back(0);
    ResidueSet s0(s.modulus(), std::move(ext));
    if (is_pyramidal(s0, a.p, a.l)) code = first_constructed_code(s0, a.p, a.l);
  }
  json j;
  j["command"] = "find-code";
  j["set"] = to_text(s);
  j["p"] = a.p;
  j["l"] = a.l;
  j["oracle"] = a.oracle;
  j["codes"] = code ? std::vector<std::string>{to_text(*code)} : std::vector<std::string>{};
  emit(out, j);
  return code ? 0 : 1;
}

// Fetches one record beyond the cap so an exactly-full result is not
// flagged as truncated.
template <typename Fetch>
std::pair<std::vector<ResidueSet>, bool> capped(std::size_t budget, Fetch&& fetch) {
  std::vector<ResidueSet> sets = fetch(budget == 0 ? 0 : budget + 1);
  bool truncated = budget != 0 && sets.size() > budget;
  if (truncated) sets.pop_back();
  return {std::move(sets), truncated};
}

int cmd_enumerate_codes(const CommonArgs& a, std::ostream& out) {
  ResidueSet s = parse_residue_set(a.set_text);
  bool constructed = a.constructed && !a.all;
  auto [codes, truncated] = capped(a.budget, [&](std::size_t cap) {
    if (constructed) {
      std::vector<Elem> ext(s.elements());
      ext.push_back(0);
      ResidueSet s0(s.modulus(), std::move(ext));
      return enumerate_constructed_codes(s0, a.p, a.l, cap);
    }
    return enumerate_perfect_codes(s, cap);
  });
  if (a.stream) {
    emit_stream(out, codes, truncated);
  } else {
    json j;
    j["command"] = "enumerate-codes";
    j["set"] = to_text(s);
    j["mode"] = constructed ? "constructed" : "all";
    j["codes"] = set_texts(codes);
    j["count"] = codes.size();
    j["truncated"] = truncated;
    emit(out, j);
  }
  return codes.empty() ? 1 : 0;
}

int cmd_lift(const CommonArgs& a, std::ostream& out) {
  ResidueSet s0 = parse_residue_set(a.set_text);
  std::vector<ResidueSet> sets;
  bool truncated = false;
  if (a.op == "g") {
    sets.push_back(g_lift(s0, a.by));
  } else if (a.op == "f") {
    std::tie(sets, truncated) = capped(a.budget, [&](std::size_t cap) {
      return enumerate_lift_sets(s0, a.by, a.connected, cap);
    });
  } else {
    fail("invalid-input", "--op must be f or g");
  }
  if (a.stream) {
    emit_stream(out, sets, truncated);
  } else {
    json j;
    j["command"] = "lift";
    j["set"] = to_text(s0);
    j["op"] = a.op;
    j["by"] = a.by;
    j["sets"] = set_texts(sets);
    j["count"] = sets.size();
    j["truncated"] = truncated;
    emit(out, j);
  }
  return sets.empty() ? 1 : 0;
}

int cmd_project(const CommonArgs& a, std::ostream& out) {
  ResidueSet s0 = parse_residue_set(a.set_text);
  ResidueSet image = project(s0, make_subgroup(s0.modulus(), a.by));
  json j;
  j["command"] = "project";
  j["set"] = to_text(s0);
  j["by"] = a.by;
  j["projection"] = to_text(image);
  emit(out, j);
  return 0;
}

int cmd_family(const CommonArgs& a, std::ostream& out) {
  std::vector<Elem> l64 = parse_elem_list(a.lseq_text);
  std::vector<int> lseq(l64.begin(), l64.end());
  FamilySpec spec = make_family_spec(a.p, lseq, parse_elem_list(a.mseq_text));
  auto [sets, truncated] =
      capped(a.budget, [&](std::size_t cap) { return generate_family_sets(spec, cap); });
  if (a.stream) {
    emit_stream(out, sets, truncated);
  } else {
    json j;
    j["command"] = "family";
    j["p"] = spec.p;
    j["l_seq"] = spec.l_seq;
    j["m_seq"] = spec.m_seq;
    j["n"] = spec.n();
    j["sets"] = set_texts(sets);
    j["count"] = sets.size();
    j["truncated"] = truncated;
    emit(out, j);
  }
  return sets.empty() ? 1 : 0;
}

int cmd_count(const CommonArgs& a, std::ostream& out) {
  CountParams params = make_count_params(a.n, a.p, a.l);
  BigInt formula = count_formula(params);
  json j;
  j["command"] = "count";
  j["n"] = a.n;
  j["p"] = a.p;
  j["l"] = a.l;
  j["formula"] = formula.str();
  bool match = true;
  if (a.oracle) {
    BigInt oracle = count_enumerate(params, a.sweep_budget);
    match = oracle == formula;
    j["oracle"] = oracle.str();
    j["match"] = match;
  }
  emit(out, j);
  return match ? 0 : 1;
}

int cmd_lower_bound(const CommonArgs& a, std::ostream& out) {
  ResidueSet s0 = parse_residue_set(a.set_text);
  if (!s0.contains(0)) {
    std::vector<Elem> ext(s0.elements());
    ext.push_back(0);
    s0 = ResidueSet(s0.modulus(), std::move(ext));
  }
  std::optional<AdmissibleSeries> best = longest_series(s0, a.p, a.l);
  json j;
  j["command"] = "lower-bound";
  j["set"] = to_text(s0);
  j["p"] = a.p;
  j["l"] = a.l;
  j["pyramidal"] = best.has_value();
  if (best) {
    j["lower_bound"] = lower_bound(*best).str();
    j["series"] = series_json(*best);
  }
  emit(out, j);
  return best ? 0 : 1;
}

int cmd_verify_tiling(const CommonArgs& a, std::ostream& out) {
  json j;
  j["command"] = "verify-tiling";
  bool ok;
  if (!a.left_text.empty() || !a.right_text.empty()) {
    ResidueSet left = parse_residue_set(a.left_text);
    ResidueSet right = parse_residue_set(a.right_text);
    ok = is_direct_sum(left, right);
    j["left"] = to_text(left);
    j["right"] = to_text(right);
    j["direct_sum"] = ok;
  } else {
    ResidueSet s = parse_residue_set(a.set_text);
    ResidueSet d = parse_residue_set(a.code_text);
    ok = is_perfect_code(s, d);
    j["set"] = to_text(s);
    j["code"] = to_text(d);
    j["perfect_code"] = ok;
  }
  emit(out, j);
  return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"perfect codes in circulant graphs of prime-power degree", "circode"};
  app.require_subcommand(1);
  CommonArgs a;

  auto add_set = [&](CLI::App* cmd, bool required = true) {
    auto* opt = cmd->add_option("--set", a.set_text, "set in the form n:e1,e2,...");
    if (required) opt->required();
    return opt;
  };
  auto add_pl = [&](CLI::App* cmd) {
    cmd->add_option("--p", a.p, "prime p")->required();
    cmd->add_option("--l", a.l, "exponent l")->required();
  };

  CLI::App* check = app.add_subcommand("check", "decide existence of a perfect code");
  auto* set_opt = add_set(check, false);
  check->add_option("--file", a.file, "read one set per line")->excludes(set_opt);
  add_pl(check);

  CLI::App* series = app.add_subcommand("series", "longest admissible series, or verify one");
  add_set(series);
  add_pl(series);
  series->add_option("--series", a.series_text, "comma-separated generators d0,...,d2t to verify");

  CLI::App* find_code = app.add_subcommand("find-code", "one perfect code (constructed; --oracle searches)");
  add_set(find_code);
  add_pl(find_code);
  find_code->add_flag("--oracle", a.oracle, "use the exact-cover search");

  CLI::App* enumerate_codes = app.add_subcommand("enumerate-codes", "all perfect codes containing 0");
  add_set(enumerate_codes);
  add_pl(enumerate_codes);
  enumerate_codes->add_flag("--all", a.all, "exact-cover enumeration (default)");
  enumerate_codes->add_flag("--constructed", a.constructed, "recipe-built codes");
  enumerate_codes->add_option("--budget", a.budget, "record cap (0 = unlimited)");
  enumerate_codes->add_flag("--stream", a.stream, "line-delimited output");

  CLI::App* lift = app.add_subcommand("lift", "lift a set (f enumerates covers, g is the wreath lift)");
  add_set(lift);
  lift->add_option("--by", a.by, "lift factor m")->required();
  lift->add_option("--op", a.op, "f or g")->required();
  lift->add_flag("--connected", a.connected, "keep only sets generating Z_{mn}");
  lift->add_option("--budget", a.budget, "record cap (0 = unlimited)");
  lift->add_flag("--stream", a.stream, "line-delimited output");

  CLI::App* project_cmd = app.add_subcommand("project", "project a set to Z_n/<d>");
  add_set(project_cmd);
  project_cmd->add_option("--by", a.by, "subgroup generator d")->required();

  CLI::App* family = app.add_subcommand("family", "generate one lift family");
  family->add_option("--p", a.p, "prime p")->required();
  family->add_option("--l-seq", a.lseq_text, "comma-separated l_1,...,l_t")->required();
  family->add_option("--m-seq", a.mseq_text, "comma-separated m_1,...,m_t")->required();
  family->add_option("--budget", a.budget, "record cap (0 = unlimited)");
  family->add_flag("--stream", a.stream, "line-delimited output");

  CLI::App* count = app.add_subcommand("count", "closed-form count, optionally with the sweep oracle");
  count->add_option("--n", a.n, "modulus n")->required();
  count->add_option("--p", a.p, "prime p")->required();
  count->add_option("--l", a.l, "exponent l")->required();
  count->add_flag("--oracle", a.oracle, "also run the enumeration oracle");
  count->add_option("--budget", a.sweep_budget, "oracle sweep budget");

  CLI::App* lower = app.add_subcommand("lower-bound", "code-count lower bound from the longest series");
  add_set(lower);
  add_pl(lower);

  CLI::App* verify = app.add_subcommand("verify-tiling", "verify a perfect code or a raw tiling");
  add_set(verify, false);
  verify->add_option("--code", a.code_text, "candidate code in set form");
  verify->add_option("--left", a.left_text, "left factor (raw tiling check)");
  verify->add_option("--right", a.right_text, "right factor (raw tiling check)");

  app.fallthrough();
  app.add_option("--threads", a.threads, "worker hint; output is identical regardless");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: invalid-arguments: " << e.what() << "\n";
    return 2;
  }

  try {
    if (check->parsed()) return cmd_check(a, out);
    if (series->parsed()) return cmd_series(a, out);
    if (find_code->parsed()) return cmd_find_code(a, out);
    if (enumerate_codes->parsed()) return cmd_enumerate_codes(a, out);
    if (lift->parsed()) return cmd_lift(a, out);
    if (project_cmd->parsed()) return cmd_project(a, out);
    if (family->parsed()) return cmd_family(a, out);
    if (count->parsed()) return cmd_count(a, out);
    if (lower->parsed()) return cmd_lower_bound(a, out);
    if (verify->parsed()) return cmd_verify_tiling(a, out);
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: invalid-arguments: no subcommand\n";
  return 2;
}

}  // namespace circode
