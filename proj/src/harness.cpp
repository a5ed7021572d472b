#include "invseq/harness.hpp"

#include "invseq/bijections.hpp"
#include "invseq/error.hpp"
#include "invseq/labeled_fpath.hpp"
#include "invseq/lattice_paths.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <set>
#include <thread>

namespace invseq {

using nlohmann::json;

// --- 201 shape ----------------------------------------------------------------

bool matches_form_201(std::span<const int> e) {
  const int n = static_cast<int>(e.size());
  if (n < 4) return false;
  const int m = max_value(e);
  const int t = prmx(e) - m - 1;
  if (m < 1 || t < 0 || m > n - t - 3) return false;
  const auto at = [&](int j) { return e[static_cast<std::size_t>(j - 1)]; };
  const int mh = at(m + t + 2);
  if (mh < 0 || mh >= m) return false;

  for (int s = 0; s <= t; ++s) {
    bool head = true;
    for (int j = 1; j <= m + s && head; ++j) head = at(j) <= mh && (j == 1 || at(j - 1) <= at(j));
    for (int j = m + s + 1; j <= m + t + 1 && head; ++j) head = at(j) == m;
    if (!head) continue;
    for (int k = 0; k <= n - m - t - 3; ++k) {
      bool ok = true;
      bool some_m = false;
      for (int j = m + t + 3; j <= m + t + k + 3 && ok; ++j) {
        ok = at(j) == mh || at(j) == m;
        some_m = some_m || at(j) == m;
      }
      ok = ok && some_m;
      for (int j = m + t + k + 4; j <= n && ok; ++j) ok = at(j) < mh && (j == m + t + k + 4 || at(j - 1) >= at(j));
      if (ok) return true;
    }
  }
  return false;
}

// --- specs --------------------------------------------------------------------

namespace {

struct FamilyInfo {
  Family family;
  const char* name;
  FamilyLimits limits;
  bool takes_tau;
  bool takes_identity;
};

constexpr FamilyInfo kFamilies[] = {
    {Family::BijectionPhi, "bijection-phi", {6, 7}, false, false},
    {Family::BijectionPsi, "bijection-psi", {6, 7}, false, false},
    {Family::BijectionM, "bijection-M", {6, 9}, false, false},
    {Family::BijectionComposed, "bijection-composed", {6, 8}, false, false},
    {Family::Tiling, "tiling", {8, 11}, false, false},
    {Family::Formula102, "formula-102", {9, 10}, false, false},
    {Family::FormulaPair, "formula-pair", {9, 10}, true, false},
    {Family::FormulaTotals, "formula-totals", {10, 40}, false, false},
    {Family::Formula201Split, "formula-201-split", {8, 9}, false, false},
    {Family::FormulaASubset, "formula-A-subset", {8, 10}, false, false},
    {Family::DyckLemma, "dyck-lemma", {8, 9}, false, false},
    {Family::LfClass, "lf-class", {6, 7}, true, false},
    {Family::Identity, "identity", {24, 32}, false, true},
    {Family::ProbeBlockRank, "probe-block-rank", {6, 8}, false, false},
    {Family::ProbeBallotTypo, "probe-ballot-typo", {9, 10}, false, false},
};

const FamilyInfo& info(Family family) {
  for (const auto& f : kFamilies) {
    if (f.family == family) return f;
  }
  throw std::logic_error("unknown family");
}

}  // namespace

FamilyLimits family_limits(Family family) { return info(family).limits; }

CheckSpec CheckSpec::parse(std::string_view text, std::optional<int> n_max) {
  std::string_view base = text;
  std::string_view arg;
  if (const auto open = text.find('('); open != std::string_view::npos) {
    if (text.back() != ')') throw Error(ErrorKind::ParseError, "unbalanced parenthesis in '" + std::string(text) + "'");
    base = text.substr(0, open);
    arg = text.substr(open + 1, text.size() - open - 2);
  }
  for (const auto& f : kFamilies) {
    if (base != f.name) continue;
    CheckSpec spec;
    spec.family = f.family;
    spec.n_max = n_max;
    if (f.takes_tau || f.takes_identity) {
      if (arg.empty()) throw Error(ErrorKind::ParseError, std::string(f.name) + " needs an argument, e.g. " + f.name + "(...)");
      if (f.takes_tau) {
        spec.tau = parse_second_pattern(arg);
        if (f.family == Family::LfClass && spec.tau != SecondPattern::P210 && spec.tau != SecondPattern::P110) {
          throw Error(ErrorKind::ParseError, "lf-class is defined for 210 and 110 only");
        }
      } else {
        spec.identity = parse_identity_id(arg);
      }
    } else if (!arg.empty()) {
      throw Error(ErrorKind::ParseError, std::string(f.name) + " takes no argument");
    }
    return spec;
  }
  throw Error(ErrorKind::ParseError, "unknown check family '" + std::string(text) + "'");
}

std::string CheckSpec::name() const {
  std::string out = info(family).name;
  if (tau) out += "(" + std::string(to_string(*tau)) + ")";
  if (identity) out += "(" + std::string(to_string(*identity)) + ")";
  return out;
}

int CheckSpec::resolved_n_max() const { return n_max.value_or(info(family).limits.default_n_max); }

std::vector<std::string> family_names() {
  std::vector<std::string> out;
  for (const auto& f : kFamilies) {
    out.push_back(std::string(f.name) + (f.takes_tau ? "(TAU)" : f.takes_identity ? "(TAG)" : ""));
  }
  return out;
}

const char* to_string(CheckStatus status) noexcept {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Error: return "error";
  }
  return "?";
}

// --- check bodies -------------------------------------------------------------

namespace {

// Collects the first (hence smallest, since callers walk objects in
// enumeration order) failure of a check.
class Outcome {
 public:
  explicit Outcome(CheckResult& result) : result_(result) {}

  void cell() { ++result_.cells; }
  bool failed() const { return result_.status == CheckStatus::Fail; }

  void fail(json witness, const std::string& reason) {
    if (failed()) return;
    result_.status = CheckStatus::Fail;
    witness["reason"] = reason;
    result_.witness = std::move(witness);
    result_.message = reason;
  }

  void compare(json where, const BigInt& formula, const BigInt& oracle, const std::string& what) {
    cell();
    if (formula == oracle) return;
    where["formula"] = to_string(formula);
    where["oracle"] = to_string(oracle);
    fail(std::move(where), what + " disagrees with enumeration");
  }

  json& details() { return result_.details; }

 private:
  CheckResult& result_;
};

json lf_json(const LabeledFPath& q) { return json::parse(q.to_json()); }
json is_json(const InversionSequence& e) { return json(e.vec()); }

template <typename T>
json obj_json(const T& x) {
  if constexpr (std::is_same_v<T, LabeledFPath>) {
    return lf_json(x);
  } else if constexpr (std::is_same_v<T, InversionSequence>) {
    return is_json(x);
  } else {
    return json(x.word());
  }
}

// Exhaustive bijection check: `map` must be injective, land in `target`,
// hit all of it, satisfy `stat`, and be undone by `inverse`.
template <typename Src, typename Tgt, typename Map, typename Inv, typename Stat>
void check_bijection(Outcome& out, int n, const std::vector<Src>& source, const std::vector<Tgt>& target, Map map,
                     Inv inverse, Stat stat, const char* stat_name) {
  const std::set<Tgt> target_set(target.begin(), target.end());
  std::set<Tgt> seen;
  for (const auto& x : source) {
    out.cell();
    const auto where = [&] { return json{{"n", n}, {"object", obj_json(x)}}; };
    std::optional<Tgt> y;
    try {
      y.emplace(map(x));
    } catch (const Error& err) {
      out.fail(where(), std::string("map raised ") + to_string(err.kind()) + ": " + err.what());
      return;
    }
    auto w = where();
    w["image"] = obj_json(*y);
    if (!target_set.count(*y)) return out.fail(w, "image outside the target set");
    if (!seen.insert(*y).second) return out.fail(w, "image hit twice (not injective)");
    if (!stat(x, *y)) return out.fail(w, std::string("statistic not preserved: ") + stat_name);
    try {
      if (!(inverse(*y) == x)) return out.fail(w, "inverse does not recover the object");
    } catch (const Error& err) {
      return out.fail(w, std::string("inverse raised ") + to_string(err.kind()) + ": " + err.what());
    }
  }
  for (const auto& y : target) {
    if (!seen.count(y)) return out.fail(json{{"n", n}, {"missed", obj_json(y)}}, "target element never hit (not surjective)");
  }
}

void run_bijection_phi(Outcome& out, int n_max) {
  for (int n = 0; n <= n_max && !out.failed(); ++n) {
    check_bijection(
        out, n, enumerate_lf(n), enumerate_is(n + 1, {pattern_102()}), [](const LabeledFPath& q) { return phi(q); },
        [](const InversionSequence& e) { return phi_inv(e); },
        [](const LabeledFPath& q, const InversionSequence& e) { return rank_of(e.entries()) == q.height(); },
        "rank(phi(Q)) = height(Q)");
  }
}

void run_bijection_psi(Outcome& out, int n_max) {
  for (int n = 0; n <= n_max && !out.failed(); ++n) {
    check_bijection(
        out, n, enumerate_lf(n), enumerate_uvd(n + 1), [](const LabeledFPath& q) { return psi(q); },
        [](const UvdPath& s) { return psi_inv(s); },
        [](const LabeledFPath& q, const UvdPath& s) { return uvd_vox(s.word()) == q.height(); },
        "vox(psi(Q)) = height(Q)");
  }
}

void run_bijection_m(Outcome& out, int n_max) {
  for (int n = 1; n <= n_max && !out.failed(); ++n) {
    check_bijection(
        out, n, enumerate_schroeder(n, std::max(n, kDefaultPathGuard)), enumerate_uvd(n, std::max(n, kDefaultPathGuard)),
        [](const SchroederPath& p) { return schroeder_to_uvd(p); }, [](const UvdPath& s) { return uvd_to_schroeder(s); },
        [](const SchroederPath& p, const UvdPath& s) { return schroeder_block(p) == uvd_vox(s.word()) + 1; },
        "block(P) = vox(M(P)) + 1");
  }
}

void run_bijection_composed(Outcome& out, int n_max) {
  for (int n = 1; n <= n_max && !out.failed(); ++n) {
    check_bijection(
        out, n, enumerate_schroeder(n), enumerate_is(n, {pattern_102()}),
        [](const SchroederPath& p) { return schroeder_to_is(p); },
        [](const InversionSequence& e) { return uvd_to_schroeder(psi(phi_inv(e))); },
        [](const SchroederPath& p, const InversionSequence& e) { return rank_of(e.entries()) == schroeder_block(p) - 1; },
        "rank(e) = block(P) - 1");
  }
}

const Pattern& pattern_012() {
  static const Pattern p({0, 1, 2});
  return p;
}

void run_tiling(Outcome& out, int n_max) {
  for (int n = 1; n <= n_max && !out.failed(); ++n) {
    check_bijection(
        out, n, enumerate_is(n, {pattern_102(), pattern_012()}), enumerate_tilings(2 * n - 2),
        [](const InversionSequence& e) { return is_to_tiling(e); },
        [n](const Tiling& t) { return tiling_to_is(t, n); },
        [n](const InversionSequence&, const Tiling& t) { return t.board_length() == 2 * n - 2; }, "board length 2n-2");
  }
  if (n_max < 3 || out.failed()) return;
  static const std::pair<std::vector<int>, const char*> kLengthThree[] = {
      {{0, 0, 0}, "DD"}, {{0, 0, 1}, "DSS"}, {{0, 1, 1}, "SSSS"}, {{0, 1, 0}, "SSD"}, {{0, 0, 2}, "SDS"}};
  for (const auto& [e, word] : kLengthThree) {
    out.cell();
    const auto got = is_to_tiling(InversionSequence(e));
    if (got.word() != word) {
      return out.fail(json{{"n", 3}, {"object", e}, {"image", got.word()}, {"expected", word}},
                      "length-3 correspondence differs");
    }
  }
}

using RankTable = std::map<int, BigInt>;

RankTable oracle_by_rank(int n, std::initializer_list<Pattern> patterns) {
  RankTable table;
  for (const auto& e : enumerate_is(n, patterns)) ++table[rank_of(e.entries())];
  return table;
}

BigInt lookup(const RankTable& table, int t) {
  const auto it = table.find(t);
  return it == table.end() ? BigInt(0) : it->second;
}

void run_formula_102(Outcome& out, int n_max) {
  for (int n = 1; n <= n_max && !out.failed(); ++n) {
    const auto oracle = oracle_by_rank(n, {pattern_102()});
    for (int t = 0; t <= n - 1; ++t) {
      out.compare(json{{"n", n}, {"t", t}}, count_102_rank(n, t), lookup(oracle, t), "count_102_rank");
    }
  }
}

void run_formula_pair(Outcome& out, SecondPattern tau, int n_max) {
  const bool extended = tau == SecondPattern::P210 || tau == SecondPattern::P110;
  long extra = 0;
  for (int n = 2; n <= n_max && !out.failed(); ++n) {
    const auto oracle = oracle_by_rank(n, {pattern_102(), as_pattern(tau)});
    for (int t = 0; t <= n - 2; ++t) {
      out.compare(json{{"n", n}, {"t", t}}, count_pair_rank(tau, n, t), lookup(oracle, t), "count_pair_rank");
    }
    if (extended) {
      ++extra;
      out.compare(json{{"n", n}, {"t", n - 1}}, count_pair_rank(tau, n, n - 1, RankRange::Extended),
                  lookup(oracle, n - 1), "count_pair_rank on the row t = n-1");
    }
  }
  if (extended) out.details()["row_t_eq_n_minus_1_cells"] = extra;
}

void run_formula_totals(Outcome& out, int n_max) {
  for (int n = 1; n <= n_max && !out.failed(); ++n) {
    const auto fib_total = fib(2L * n - 1);
    out.compare(json{{"tau", "011"}, {"n", n}}, count_pair_total(SecondPattern::P011, n), fib_total,
                "sum over t vs F_{2n-1}");
    out.compare(json{{"tau", "012"}, {"n", n}}, count_pair_total(SecondPattern::P012, n), fib_total,
                "sum over t vs F_{2n-1}");
    BigInt central = 1;
    for (int i = 1; i <= n - 1; ++i) central += binom(2 * i, i - 1);
    out.compare(json{{"tau", "120"}, {"n", n}}, count_pair_total(SecondPattern::P120, n), central,
                "sum over t vs 1 + sum binom(2i, i-1)");
  }
}

void run_formula_201_split(Outcome& out, int n_max) {
  static const Pattern p201({2, 0, 1});
  static const Pattern p101({1, 0, 1});
  long shape_cells = 0;
  for (int n = 2; n <= n_max && !out.failed(); ++n) {
    // (t, m, contains 101) -> count
    std::map<std::tuple<int, int, bool>, BigInt> oracle;
    for (const auto& e : enumerate_is(n, {pattern_102(), p201})) {
      const bool has_101 = contains_pattern(e, p101);
      ++oracle[{rank_of(e.entries()), max_value(e.entries()), has_101}];
      out.cell();
      ++shape_cells;
      if (matches_form_201(e.entries()) != has_101) {
        return out.fail(json{{"n", n}, {"object", is_json(e)}, {"contains_101", has_101}},
                        "shape characterisation disagrees with containment of 101");
      }
    }
    for (const auto& [key, count] : oracle) {
      const auto [t, m, has_101] = key;
      if (t == n - 1) continue;  // the all-zero sequence, outside the split
      const int m_hi = has_101 ? n - t - 3 : n - t - 1;
      if (m < 1 || m > m_hi || (has_101 && n < 4)) {
        return out.fail(json{{"n", n}, {"t", t}, {"m", m}, {"contains_101", has_101}, {"oracle", to_string(count)}},
                        "enumeration finds sequences outside the split's range");
      }
    }
    for (int t = 0; t <= n - 2; ++t) {
      BigInt total = 0;
      for (int m = 1; m <= n - t - 1; ++m) {
        const auto v = count_201_by_max(n, t, m, false);
        total += v;
        const auto it = oracle.find({t, m, false});
        out.compare(json{{"n", n}, {"t", t}, {"m", m}, {"contains_101", false}}, v,
                    it == oracle.end() ? BigInt(0) : it->second, "count_201_by_max");
      }
      for (int m = 1; n >= 4 && m <= n - t - 3; ++m) {
        const auto v = count_201_by_max(n, t, m, true);
        total += v;
        const auto it = oracle.find({t, m, true});
        out.compare(json{{"n", n}, {"t", t}, {"m", m}, {"contains_101", true}}, v,
                    it == oracle.end() ? BigInt(0) : it->second, "count_201_by_max");
      }
      out.compare(json{{"n", n}, {"t", t}, {"split_sum", true}}, total, count_pair_rank(SecondPattern::P201, n, t),
                  "sum of the split vs count_pair_rank(201)");
    }
  }
  out.details()["shape_cells"] = shape_cells;
}

void run_formula_a_subset(Outcome& out, int n_max) {
  static const Pattern p120({1, 2, 0});
  std::map<std::pair<int, int>, BigInt> oracle;  // (n, t)
  for (int n = 2; n <= n_max; ++n) {
    for (const auto& e : enumerate_is(n, {pattern_102(), p120})) {
      if (in_A_subset(e)) ++oracle[{n, rank_of(e.entries())}];
    }
  }
  const auto at = [&](int n, int t) {
    const auto it = oracle.find({n, t});
    return it == oracle.end() ? BigInt(0) : it->second;
  };
  for (int n = 2; n <= n_max && !out.failed(); ++n) {
    for (int t = 0; t <= n - 2; ++t) out.compare(json{{"n", n}, {"t", t}}, count_A_subset(n, t), at(n, t), "count_A_subset");
    if (at(n, n - 1) != 0) return out.fail(json{{"n", n}, {"t", n - 1}}, "A_{n,n-1} is not empty");
  }
  long recurrence = 0;
  for (int n = 2; n + 1 <= n_max && !out.failed(); ++n) {
    for (int t = 1; t <= n - 1; ++t) {
      BigInt sum = 0;
      for (int i = t - 1; i <= n - 2; ++i) sum += at(n, i);
      ++recurrence;
      out.compare(json{{"n", n + 1}, {"t", t}, {"recurrence", true}}, sum, at(n + 1, t),
                  "recurrence sum_{i=t-1}^{n-2} |A_{n,i}|");
    }
  }
  out.details()["recurrence_cells"] = recurrence;
}

void run_dyck_lemma(Outcome& out, int n_max) {
  for (int n = 1; n <= n_max && !out.failed(); ++n) {
    std::map<int, BigInt> by_descent;
    std::map<int, BigInt> by_returns;
    for (const auto& d : enumerate_dyck(n)) {
      ++by_descent[final_descent_length(d)];
      ++by_returns[dyck_returns(d)];
    }
    for (int k = 1; k <= n; ++k) {
      const auto value = count_dyck_final_descent(n, k);
      out.compare(json{{"n", n}, {"k", k}, {"by", "final descent"}}, value, by_descent[k], "count_dyck_final_descent");
      out.compare(json{{"n", n}, {"k", k}, {"by", "returns"}}, value, by_returns[k], "count_dyck_final_descent");
      const Rational exact = Rational(BigInt(k) * binom(2 * n - k - 1, n - 1), BigInt(n));
      out.cell();
      if (exact != Rational(value)) {
        return out.fail(json{{"n", n}, {"k", k}, {"exact", to_string(exact)}}, "k/n binom(2n-k-1, n-1) mismatch");
      }
    }
  }
}

void run_lf_class(Outcome& out, SecondPattern tau, int n_max) {
  const bool is210 = tau == SecondPattern::P210;
  const Pattern pattern = as_pattern(tau);
  for (int n = 0; n <= n_max && !out.failed(); ++n) {
    std::map<int, BigInt> by_height;
    for (const auto& q : enumerate_lf(n)) {
      out.cell();
      const bool in_class = is210 ? in_class_210(q) : in_class_110(q);
      const auto e = phi(q);
      if (in_class != avoids(e, pattern)) {
        return out.fail(json{{"n", n}, {"object", lf_json(q)}, {"image", is_json(e)}, {"in_class", in_class}},
                        "class membership differs from avoidance of " + std::string(to_string(tau)) + " by phi(Q)");
      }
      if (in_class) ++by_height[q.height()];
    }
    for (int t = 0; n + 1 >= 2 && t <= n; ++t) {
      out.compare(json{{"n", n}, {"t", t}}, count_pair_rank(tau, n + 1, t, RankRange::Extended), by_height[t],
                  "class count vs count_pair_rank(tau, n+1, t)");
    }
  }
}

void run_identity(Outcome& out, CheckResult& result, IdentityId id, int order, int u_order) {
  VerifyOptions options;
  options.order = order;
  options.u_order = u_order;
  const auto report = verify_identity(id, options);
  result.cells = report.checks;
  result.details = json{{"order", order}, {"u_order", u_order}};
  if (!report.holds) {
    const auto& mm = *report.first_mismatch;
    out.fail(json{{"check", mm.check},
                  {"u_power", mm.u_power ? json(*mm.u_power) : json(nullptr)},
                  {"power", mm.power},
                  {"lhs", mm.lhs},
                  {"rhs", mm.rhs}},
             "coefficient mismatch in " + mm.check);
  }
}

void run_probe_block_rank(Outcome& out, int n_max) {
  json first_plus_one;   // first P with block(P) != rank + 1
  json first_equal;      // first P with block(P) != rank
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& p : enumerate_schroeder(n)) {
      out.cell();
      const int block = schroeder_block(p);
      const int rank = rank_of(schroeder_to_is(p).entries());
      const json where{{"n", n}, {"object", p.word()}, {"block", block}, {"rank", rank}};
      if (block != rank + 1 && first_plus_one.is_null()) first_plus_one = where;
      if (block != rank && first_equal.is_null()) first_equal = where;
    }
  }
  const auto verdict = [](const json& counterexample) {
    return counterexample.is_null() ? json{{"holds", true}}
                                    : json{{"holds", false}, {"first_counterexample", counterexample}};
  };
  out.details() = json{{"block = rank + 1", verdict(first_plus_one)}, {"block = rank", verdict(first_equal)}};
  if (!first_plus_one.is_null()) out.fail(first_plus_one, "block(P) = rank + 1 fails");
}

// The 210 count with c(j,k) read literally as k/(2j+k) binom(2j+k, n).
Rational literal_210(int n, int t) {
  const auto c = [n](long j, long k) { return Rational(BigInt(k) * binom(2 * j + k, n), BigInt(2 * j + k)); };
  Rational total = c(n - t - 1, t + 1);
  BigInt central = 0;
  for (long i = 0; i <= n - t - 3; ++i) central += binom(2 * i + t + 3, i);
  total += Rational(BigInt(t + 1) * central);
  for (long i = 0; i <= n - t - 4; ++i) total += c(i, t + 6) - c(i, 5);
  return total;
}

void run_probe_ballot_typo(Outcome& out, int n_max) {
  static const Pattern p210({2, 1, 0});
  json first_ballot;
  json first_literal;
  long literal_agree = 0;
  for (int n = 2; n <= n_max; ++n) {
    const auto oracle = oracle_by_rank(n, {pattern_102(), p210});
    for (int t = 0; t <= n - 1; ++t) {
      out.cell();
      const auto truth = lookup(oracle, t);
      const auto ballot_value = count_pair_rank(SecondPattern::P210, n, t, RankRange::Extended);
      const auto literal_value = literal_210(n, t);
      const json where{{"n", n}, {"t", t}, {"oracle", to_string(truth)}};
      if (ballot_value != truth && first_ballot.is_null()) {
        first_ballot = where;
        first_ballot["formula"] = to_string(ballot_value);
      }
      if (literal_value == Rational(truth)) {
        ++literal_agree;
      } else if (first_literal.is_null()) {
        first_literal = where;
        first_literal["formula"] = to_string(literal_value);
      }
    }
  }
  const auto verdict = [](const json& counterexample) {
    return counterexample.is_null() ? json{{"holds", true}}
                                    : json{{"holds", false}, {"first_disagreement", counterexample}};
  };
  out.details() = json{{"c(j,k) = k/(2j+k) binom(2j+k, j)", verdict(first_ballot)},
                       {"c(j,k) = k/(2j+k) binom(2j+k, n)", verdict(first_literal)},
                       {"literal_reading_agreeing_cells", literal_agree}};
  if (!first_ballot.is_null()) out.fail(first_ballot, "ballot reading of c(j,k) disagrees with enumeration");
}

}  // namespace

CheckResult run_check(const CheckSpec& spec) {
  CheckResult result;
  result.name = spec.name();
  result.n_max = spec.resolved_n_max();
  const auto start = std::chrono::steady_clock::now();
  Outcome out(result);
  try {
    const auto limits = info(spec.family).limits;
    const int lower = spec.family == Family::Identity ? 1 : 0;
    if (result.n_max > limits.guard || result.n_max < lower) {
      throw Error(ErrorKind::GuardExceeded, result.name + ": n_max " + std::to_string(result.n_max) +
                                                " outside [" + std::to_string(lower) + ", " +
                                                std::to_string(limits.guard) + "]");
    }
    const int n = result.n_max;
    switch (spec.family) {
      case Family::BijectionPhi: run_bijection_phi(out, n); break;
      case Family::BijectionPsi: run_bijection_psi(out, n); break;
      case Family::BijectionM: run_bijection_m(out, n); break;
      case Family::BijectionComposed: run_bijection_composed(out, n); break;
      case Family::Tiling: run_tiling(out, n); break;
      case Family::Formula102: run_formula_102(out, n); break;
      case Family::FormulaPair: run_formula_pair(out, spec.tau.value(), n); break;
      case Family::FormulaTotals: run_formula_totals(out, n); break;
      case Family::Formula201Split: run_formula_201_split(out, n); break;
      case Family::FormulaASubset: run_formula_a_subset(out, n); break;
      case Family::DyckLemma: run_dyck_lemma(out, n); break;
      case Family::LfClass: run_lf_class(out, spec.tau.value(), n); break;
      case Family::Identity: run_identity(out, result, spec.identity.value(), n, spec.u_order.value_or(6)); break;
      case Family::ProbeBlockRank: run_probe_block_rank(out, n); break;
      case Family::ProbeBallotTypo: run_probe_ballot_typo(out, n); break;
    }
  } catch (const Error& err) {
    result.status = CheckStatus::Error;
    result.message = std::string(to_string(err.kind())) + ": " + err.what();
  } catch (const std::exception& err) {
    result.status = CheckStatus::Error;
    result.message = err.what();
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

ConformanceReport run_checks(const std::vector<CheckSpec>& specs, const RunOptions& options) {
  ConformanceReport report;
  report.results.resize(specs.size());
  unsigned jobs = options.jobs != 0 ? options.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(specs.size(), 1)));
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) report.results[i] = run_check(specs[i]);
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  return report;
}

bool ConformanceReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.status == CheckStatus::Pass; });
}

json ConformanceReport::to_json(bool include_timing) const {
  json checks = json::array();
  int counts[3] = {0, 0, 0};
  for (const auto& r : results) {
    ++counts[static_cast<int>(r.status)];
    json entry{{"check", r.name}, {"n_max", r.n_max}, {"status", invseq::to_string(r.status)}, {"cells", r.cells}};
    if (!r.witness.is_null()) entry["witness"] = r.witness;
    if (!r.message.empty()) entry["message"] = r.message;
    if (!r.details.is_null()) entry["details"] = r.details;
    if (include_timing) entry["seconds"] = r.seconds;
    checks.push_back(std::move(entry));
  }
  return json{{"all_passed", all_passed()},
              {"summary", {{"total", results.size()}, {"pass", counts[0]}, {"fail", counts[1]}, {"error", counts[2]}}},
              {"checks", std::move(checks)}};
}

std::vector<CheckSpec> default_suite() {
  std::vector<CheckSpec> suite;
  const auto add = [&](std::string_view text) { suite.push_back(CheckSpec::parse(text)); };
  add("bijection-phi");
  add("bijection-psi");
  add("bijection-M");
  add("bijection-composed");
  add("tiling");
  add("formula-102");
  for (auto tau : kSecondPatterns) {
    auto spec = CheckSpec::parse("formula-pair(" + std::string(to_string(tau)) + ")");
    if (tau == SecondPattern::P201) spec.n_max = 8;
    suite.push_back(spec);
  }
  add("formula-totals");
  add("formula-201-split");
  add("formula-A-subset");
  add("dyck-lemma");
  add("lf-class(210)");
  add("lf-class(110)");
  for (auto id : kIdentityIds) add("identity(" + std::string(to_string(id)) + ")");
  add("probe-block-rank");
  add("probe-ballot-typo");
  return suite;
}

std::vector<CheckSpec> suite_for(std::string_view family, std::optional<int> n_max) {
  std::vector<CheckSpec> out;
  const bool bare = family.find('(') == std::string_view::npos;
  for (auto spec : default_suite()) {
    const auto name = spec.name();
    const auto base = name.substr(0, name.find('('));
    if (name == family || (bare && base == family)) {
      if (n_max) spec.n_max = n_max;
      out.push_back(spec);
    }
  }
  if (out.empty()) {
    auto spec = CheckSpec::parse(family, n_max);  // throws for unknown names
    out.push_back(spec);
  }
  return out;
}

json to_json(const IdentityReport& report) {
  json out{{"id", to_string(report.id)}, {"holds", report.holds}, {"checks", report.checks}};
  if (report.first_mismatch) {
    const auto& mm = *report.first_mismatch;
    out["first_mismatch"] = json{{"check", mm.check},
                                 {"u_power", mm.u_power ? json(*mm.u_power) : json(nullptr)},
                                 {"power", mm.power},
                                 {"lhs", mm.lhs},
                                 {"rhs", mm.rhs}};
  }
  return out;
}

}  // namespace invseq
