#include "cli.hpp"

#include "invseq/bijections.hpp"
#include "invseq/error.hpp"
#include "invseq/formulas.hpp"
#include "invseq/harness.hpp"
#include "invseq/series.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace invseq::cli {

using nlohmann::json;

namespace {

// Thrown for bad input that CLI11 cannot catch itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json big_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return json(v.convert_to<std::int64_t>());
  }
  return json(to_string(v));
}

json coords_json(const std::vector<std::pair<int, int>>& pts) {
  json arr = json::array();
  for (const auto& [x, y] : pts) arr.push_back({x, y});
  return arr;
}

std::vector<std::string> read_inputs(const std::optional<std::string>& flag, std::istream& in) {
  if (flag) return {*flag};
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
  }
  if (lines.empty()) throw UsageError("no input: pass --input or pipe objects on stdin, one per line");
  return lines;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\"");
  const auto e = s.find_last_not_of(" \t\r\"");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

InversionSequence parse_is(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception&) {
    // Also accept compact digit strings such as 0012.
    const auto t = trim(text);
    if (t.empty() || !std::all_of(t.begin(), t.end(), ::isdigit)) {
      throw Error(ErrorKind::ParseError, "expected a JSON array of integers, got '" + text + "'");
    }
    std::vector<int> v;
    for (char c : t) v.push_back(c - '0');
    return InversionSequence(std::move(v));
  }
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "expected a JSON array of integers, got '" + text + "'");
  try {
    return InversionSequence(j.get<std::vector<int>>());
  } catch (const json::exception&) {
    throw Error(ErrorKind::ParseError, "expected a JSON array of integers, got '" + text + "'");
  }
}

struct Options {
  std::optional<int> n;
  std::optional<int> t;
  std::optional<std::string> tau;
  std::optional<int> m;
  bool with_101 = false;
  bool extended = false;
  bool a_subset = false;
  bool oracle = false;
  int n_max = 9;
  int offset = 1;         // table bfile index of n = 1
  int coeff_offset = 0;   // series coeffs index of x^0
  std::string format;
  std::string object;
  std::vector<std::string> avoid;
  std::string map_name;
  std::optional<std::string> input;
  std::string series_id;
  int order = 24;
  int u_order = 6;
  std::optional<std::string> family;
  std::optional<int> verify_n_max;
  std::optional<std::string> json_path;
  unsigned jobs = 0;
  bool timing = false;
  bool list = false;
};

// --- count / table -------------------------------------------------------------

int cmd_count(const Options& o, std::ostream& out) {
  const int n = o.n.value();
  json query{{"n", n}};
  BigInt value;
  std::optional<BigInt> oracle;
  std::vector<Pattern> patterns{pattern_102()};
  std::function<bool(const InversionSequence&)> keep = [](const InversionSequence&) { return true; };

  if (o.tau) {
    const auto tau = parse_second_pattern(*o.tau);
    query["tau"] = std::string(to_string(tau));
    patterns.push_back(as_pattern(tau));
  }
  if (o.t) query["t"] = *o.t;

  if (o.a_subset) {
    if (!o.t) throw UsageError("--a-subset needs --t");
    query["set"] = "A";
    value = count_A_subset(n, *o.t);
    patterns = {pattern_102(), Pattern({1, 2, 0})};
    keep = [](const InversionSequence& e) { return in_A_subset(e); };
  } else if (o.m) {
    if (!o.tau || parse_second_pattern(*o.tau) != SecondPattern::P201 || !o.t) {
      throw UsageError("--m splits the 201 family: use it with --tau 201 and --t");
    }
    query["m"] = *o.m;
    query["contains_101"] = o.with_101;
    value = count_201_by_max(n, *o.t, *o.m, o.with_101);
    const int m = *o.m;
    const bool with = o.with_101;
    keep = [m, with](const InversionSequence& e) {
      return max_value(e.entries()) == m && contains_pattern(e, Pattern({1, 0, 1})) == with;
    };
  } else if (o.tau) {
    const auto tau = parse_second_pattern(*o.tau);
    value = o.t ? count_pair_rank(tau, n, *o.t, o.extended ? RankRange::Extended : RankRange::Standard)
                : count_pair_total(tau, n);
  } else if (o.t) {
    value = count_102_rank(n, *o.t);
  } else {
    value = 0;
    for (int t = 0; t <= n - 1; ++t) value += count_102_rank(n, t);
  }

  json result{{"query", query}, {"value", big_json(value)}};
  bool ok = true;
  if (o.oracle) {
    if (n > kDefaultIsGuard) throw Error(ErrorKind::GuardExceeded, "--oracle enumerates IS_n; n must be <= 11");
    BigInt count = 0;
    for (const auto& e : enumerate_is(n, patterns)) {
      if ((!o.t || rank_of(e.entries()) == *o.t) && keep(e)) ++count;
    }
    result["oracle_value"] = big_json(count);
    result["match"] = count == value;
    ok = count == value;
  }
  out << (o.format == "pretty" ? result.dump(2) : result.dump()) << "\n";
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_table(const Options& o, std::ostream& out) {
  std::optional<SecondPattern> tau;
  if (o.tau) tau = parse_second_pattern(*o.tau);
  // Row n holds |IS_{n,t}(102[, tau])| for t = 0..n-1; the rank n-1 cell of a
  // pair row is the all-zero sequence alone.
  const auto cell = [&](int n, int t) -> BigInt {
    if (!tau) return count_102_rank(n, t);
    return t == n - 1 ? BigInt(1) : count_pair_rank(*tau, n, t);
  };
  if (o.format == "bfile") {
    for (int n = 1; n <= o.n_max; ++n) {
      BigInt total = 0;
      for (int t = 0; t <= n - 1; ++t) total += cell(n, t);
      out << (n - 1 + o.offset) << " " << to_string(total) << "\n";
    }
    return kExitOk;
  }
  out << "n";
  for (int t = 0; t < o.n_max; ++t) out << ",t" << t;
  out << "\n";
  for (int n = 1; n <= o.n_max; ++n) {
    out << n;
    for (int t = 0; t < o.n_max; ++t) {
      out << ",";
      if (t <= n - 1) out << to_string(cell(n, t));
    }
    out << "\n";
  }
  return kExitOk;
}

// --- enumerate / map -----------------------------------------------------------------

int cmd_enumerate(const Options& o, std::ostream& out) {
  const int n = o.n.value();
  const bool coords = o.format == "coords";
  if (o.object == "is") {
    std::vector<Pattern> patterns;
    for (const auto& p : o.avoid) patterns.push_back(Pattern::parse(p));
    for (const auto& e : enumerate_is(n, patterns)) out << e.to_json() << "\n";
  } else if (o.object == "uvd") {
    for (const auto& s : enumerate_uvd(n)) out << (coords ? coords_json(coordinates(s.word())).dump() : s.word()) << "\n";
  } else if (o.object == "schroeder") {
    for (const auto& p : enumerate_schroeder(n)) out << (coords ? coords_json(coordinates(p.word())).dump() : p.word()) << "\n";
  } else if (o.object == "dyck") {
    for (const auto& d : enumerate_dyck(n)) out << (coords ? coords_json(coordinates(d.word())).dump() : d.word()) << "\n";
  } else if (o.object == "lf") {
    for (const auto& q : enumerate_lf(n)) out << (coords ? coords_json(q.points()).dump() : q.to_json()) << "\n";
  } else if (o.object == "tiling") {
    for (const auto& t : enumerate_tilings(2 * n - 2)) out << t.word() << "\n";
  }
  return kExitOk;
}

std::string path_out(const std::string& word, bool coords) {
  return coords ? coords_json(coordinates(word)).dump() : word;
}

std::string map_one(const Options& o, const std::string& text) {
  const bool coords = o.format == "coords";
  const auto& name = o.map_name;
  if (name == "phi") return phi(LabeledFPath::from_json(text)).to_json();
  if (name == "phi-inv") return phi_inv(parse_is(text)).to_json();
  if (name == "psi") return path_out(psi(LabeledFPath::from_json(text)).word(), coords);
  if (name == "psi-inv") return psi_inv(UvdPath(trim(text))).to_json();
  if (name == "m") return path_out(schroeder_to_uvd(SchroederPath(trim(text))).word(), coords);
  if (name == "m-inv") return path_out(uvd_to_schroeder(UvdPath(trim(text))).word(), coords);
  if (name == "sp-to-is") return schroeder_to_is(SchroederPath(trim(text))).to_json();
  if (name == "tiling") return is_to_tiling(parse_is(text)).word();
  if (name == "tiling-inv") {
    const Tiling tiling(trim(text));
    const int n = o.n.value_or(tiling.board_length() / 2 + 1);
    return tiling_to_is(tiling, n).to_json();
  }
  throw UsageError("unknown map '" + name + "'");
}

int cmd_map(const Options& o, std::istream& in, std::ostream& out) {
  for (const auto& line : read_inputs(o.input, in)) out << map_one(o, line) << "\n";
  return kExitOk;
}

// --- series / verify ---------------------------------------------------------------

int cmd_series_verify(const Options& o, std::ostream& out) {
  VerifyOptions options;
  options.order = o.order;
  options.u_order = o.u_order;
  std::vector<IdentityId> ids;
  if (o.series_id == "all" || o.series_id == "ALL") {
    ids.assign(std::begin(kIdentityIds), std::end(kIdentityIds));
  } else {
    ids.push_back(parse_identity_id(o.series_id));
  }
  bool ok = true;
  json reports = json::array();
  for (auto id : ids) {
    const auto report = verify_identity(id, options);
    ok = ok && report.holds;
    auto j = to_json(report);
    j["order"] = o.order;
    j["u_order"] = o.u_order;
    reports.push_back(std::move(j));
  }
  const json result = ids.size() == 1 ? reports[0] : reports;
  out << (o.format == "pretty" ? result.dump(2) : result.dump()) << "\n";
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_series_coeffs(const Options& o, std::ostream& out) {
  const auto s = named_series(parse_series_id(o.series_id), o.order);
  for (int n = 0; n <= s.order(); ++n) out << (n + o.coeff_offset) << " " << to_string(s[n]) << "\n";
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.list) {
    for (const auto& name : family_names()) out << name << "\n";
    return kExitOk;
  }
  std::vector<CheckSpec> specs;
  if (o.family) {
    specs = suite_for(*o.family, o.verify_n_max);
  } else {
    specs = default_suite();
    if (o.verify_n_max) {
      for (auto& s : specs) s.n_max = o.verify_n_max;
    }
  }
  const auto report = run_checks(specs, RunOptions{o.jobs});
  const auto j = report.to_json(o.timing);
  out << (o.format == "compact" ? j.dump() : j.dump(2)) << "\n";
  if (o.json_path) {
    std::ofstream file(*o.json_path);
    if (!file) throw UsageError("cannot write " + *o.json_path);
    file << j.dump(2) << "\n";
  }
  for (const auto& r : report.results) {
    if (r.status != CheckStatus::Pass) err << to_string(r.status) << ": " << r.name << ": " << r.message << "\n";
  }
  err << j["summary"]["pass"].get<int>() << "/" << report.results.size() << " checks passed\n";
  return report.all_passed() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pattern-avoiding inversion sequences, lattice paths and their bijections"};
  app.name("invseq");
  app.require_subcommand(1);
  Options o;

  auto* count = app.add_subcommand("count", "Closed-form count of IS_{n,t}(102[, tau]) as JSON");
  count->add_option("--n", o.n, "Sequence length")->required();
  count->add_option("--t", o.t, "Rank (omit to sum over all ranks)");
  count->add_option("--tau", o.tau, "Second pattern: 101 001 011 012 021 120 201 210 110");
  count->add_option("--m", o.m, "Split the 201 count by max(e) = m");
  count->add_flag("--with-101", o.with_101, "With --m: count sequences containing 101");
  count->add_flag("--extended", o.extended, "Admit t = n-1 for tau in {210, 110}");
  count->add_flag("--a-subset", o.a_subset, "Count the subset A_{n,t} of IS_{n,t}(102,120)");
  count->add_flag("--oracle", o.oracle, "Also count by enumeration; exit 1 on mismatch");
  count->add_option("--format", o.format, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));

  auto* table = app.add_subcommand("table", "Table of counts by (n, t)");
  table->add_option("--tau", o.tau, "Second pattern (omit for 102 alone)");
  table->add_option("--n-max", o.n_max, "Largest n")->check(CLI::Range(1, 200));
  table->add_option("--format", o.format, "csv (n x t matrix) or bfile (row sums as 'n a(n)')")
      ->check(CLI::IsMember({"csv", "bfile"}));
  table->add_option("--offset", o.offset, "bfile index of the first row");

  auto* enumerate = app.add_subcommand("enumerate", "List objects of size n, one per line");
  enumerate->add_option("object", o.object, "is, uvd, schroeder, dyck, lf or tiling")
      ->required()
      ->check(CLI::IsMember({"is", "uvd", "schroeder", "dyck", "lf", "tiling"}));
  enumerate->add_option("--n", o.n, "Size (length or semilength)")->required();
  enumerate->add_option("--avoid", o.avoid, "Pattern to avoid (is only; repeatable)");
  enumerate->add_option("--format", o.format, "json or coords (paths as point lists)")
      ->check(CLI::IsMember({"json", "coords"}));

  auto* map = app.add_subcommand("map", "Send objects through a bijection");
  map->add_option("name", o.map_name, "phi, phi-inv, psi, psi-inv, m, m-inv, sp-to-is, tiling, tiling-inv")
      ->required()
      ->check(CLI::IsMember({"phi", "phi-inv", "psi", "psi-inv", "m", "m-inv", "sp-to-is", "tiling", "tiling-inv"}));
  map->add_option("--input", o.input, "Object to map (default: one object per stdin line)");
  map->add_option("--n", o.n, "Sequence length for tiling-inv (default: board length / 2 + 1)");
  map->add_option("--format", o.format, "json or coords (path outputs as point lists)")
      ->check(CLI::IsMember({"json", "coords"}));

  auto* series = app.add_subcommand("series", "Exact power series");
  series->require_subcommand(1);
  auto* sverify = series->add_subcommand("verify", "Check a generating-function identity; JSON report");
  sverify->add_option("--id", o.series_id, "Identity tag, or 'all'")->required();
  sverify->add_option("--order", o.order, "x-order")->check(CLI::Range(1, 64));
  sverify->add_option("--u-order", o.u_order, "u-order")->check(CLI::Range(0, 16));
  sverify->add_option("--format", o.format, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));
  auto* coeffs = series->add_subcommand("coeffs", "Coefficients as 'n a(n)' lines");
  coeffs->add_option("--id", o.series_id, "A, C, D, D0, E, A0, B0 or H0")->required();
  coeffs->add_option("--order", o.order, "x-order")->check(CLI::Range(0, 200));
  coeffs->add_option("--offset", o.coeff_offset, "Index printed for the constant term");

  auto* verify = app.add_subcommand("verify", "Run the conformance suite; exit 0 iff every check passes");
  verify->add_option("--family", o.family, "One family, e.g. formula-pair or formula-pair(012)");
  verify->add_option("--n-max", o.verify_n_max, "Override n_max (the x-order for identities)");
  verify->add_option("--json", o.json_path, "Also write the report to this file");
  verify->add_option("--jobs", o.jobs, "Worker threads (default: all cores)");
  verify->add_flag("--timing", o.timing, "Include per-check seconds in the report");
  verify->add_flag("--list", o.list, "List family names and exit");
  verify->add_option("--format", o.format, "pretty or compact")->check(CLI::IsMember({"pretty", "compact"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*count) return cmd_count(o, out);
    if (*table) return cmd_table(o, out);
    if (*enumerate) return cmd_enumerate(o, out);
    if (*map) return cmd_map(o, in, out);
    if (*sverify) return cmd_series_verify(o, out);
    if (*coeffs) return cmd_series_coeffs(o, out);
    if (*verify) return cmd_verify(o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace invseq::cli
