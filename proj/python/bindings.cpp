#include "invseq/bijections.hpp"
#include "invseq/error.hpp"
#include "invseq/formulas.hpp"
#include "invseq/harness.hpp"
#include "invseq/series.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace invseq;

namespace {

py::int_ to_py(const BigInt& v) {
  const auto text = to_string(v);
  return py::reinterpret_steal<py::int_>(PyLong_FromString(text.c_str(), nullptr, 10));
}

py::object to_py(const Rational& v) {
  return py::module_::import("fractions").attr("Fraction")(to_string(v));
}

py::object json_to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

using Steps = std::vector<std::pair<int, std::vector<int>>>;

LabeledFPath lf_from_py(const Steps& steps) {
  std::vector<LabeledStep> out;
  for (const auto& [a, parts] : steps) out.push_back({a, parts});
  return validate_lf(std::move(out));
}

Steps lf_to_py(const LabeledFPath& q) {
  Steps out;
  for (const auto& s : q.steps()) out.emplace_back(s.a, s.parts);
  return out;
}

std::vector<Pattern> patterns_from_py(const std::vector<std::string>& avoid) {
  std::vector<Pattern> out;
  for (const auto& p : avoid) out.push_back(Pattern::parse(p));
  return out;
}

}  // namespace

PYBIND11_MODULE(_invseq, m) {
  m.doc() = "Inversion sequences avoiding 102, UVD and 2-Schroeder paths, labeled F-paths, and the maps between them.";

  static py::exception<Error> invseq_error(m, "InvseqError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(invseq_error, e.what());
    }
  });

  // Sequences and patterns.
  m.def("is_inversion_sequence", [](const std::vector<int>& e) { return is_inversion_sequence(e); });
  m.def("contains_pattern", [](const std::vector<int>& word, const std::string& pattern) {
    return contains_pattern(word, Pattern::parse(pattern));
  });
  m.def("reduce", [](const std::vector<int>& word) { return reduce(word).to_string(); });
  m.def("stats", [](const std::vector<int>& e) {
    const auto s = stats(InversionSequence(e));
    py::dict d;
    d["max"] = s.max_val;
    d["prmx"] = s.prmx;
    d["rank"] = s.rank_defined ? py::object(py::int_(s.rank)) : py::object(py::none());
    return d;
  });
  m.def("rank", [](const std::vector<int>& e) { return stats(InversionSequence(e), StatsMode::Strict).rank; });
  m.def(
      "enumerate_is",
      [](int n, const std::vector<std::string>& avoid) {
        std::vector<std::vector<int>> out;
        for (const auto& e : enumerate_is(n, patterns_from_py(avoid))) out.push_back(e.vec());
        return out;
      },
      py::arg("n"), py::arg("avoid") = std::vector<std::string>{});

  // Lattice paths.
  m.def("validate_uvd", [](const std::string& w) { return UvdPath(w).semilength(); }, "Semilength, or raises.");
  m.def("validate_schroeder", [](const std::string& w) { return SchroederPath(w).semilength(); });
  m.def("vox", [](const std::string& w) { return uvd_vox(UvdPath(w).word()); });
  m.def("uvd_block", [](const std::string& w) { return uvd_block(UvdPath(w).word()); });
  m.def("schroeder_block", [](const std::string& w) { return schroeder_block(SchroederPath(w)); });
  m.def("schroeder_to_uvd", [](const std::string& w) { return schroeder_to_uvd(SchroederPath(w)).word(); });
  m.def("uvd_to_schroeder", [](const std::string& w) { return uvd_to_schroeder(UvdPath(w)).word(); });
  m.def("enumerate_uvd", [](int n) {
    std::vector<std::string> out;
    for (const auto& s : enumerate_uvd(n)) out.push_back(s.word());
    return out;
  });
  m.def("enumerate_schroeder", [](int n) {
    std::vector<std::string> out;
    for (const auto& p : enumerate_schroeder(n)) out.push_back(p.word());
    return out;
  });

  // Labeled F-paths, as lists of (a, [b_1, ..., b_k]).
  m.def("lf_height", [](const Steps& q) { return lf_from_py(q).height(); });
  m.def("lf_semilength", [](const Steps& q) { return lf_from_py(q).semilength(); });
  m.def("enumerate_lf", [](int n) {
    std::vector<Steps> out;
    for (const auto& q : enumerate_lf(n)) out.push_back(lf_to_py(q));
    return out;
  });

  // Bijections.
  m.def("phi", [](const Steps& q) { return phi(lf_from_py(q)).vec(); });
  m.def("phi_inv", [](const std::vector<int>& e) { return lf_to_py(phi_inv(InversionSequence(e))); });
  m.def("psi", [](const Steps& q) { return psi(lf_from_py(q)).word(); });
  m.def("psi_inv", [](const std::string& w) { return lf_to_py(psi_inv(UvdPath(w))); });
  m.def("schroeder_to_is", [](const std::string& w) { return schroeder_to_is(SchroederPath(w)).vec(); });
  m.def("is_to_tiling", [](const std::vector<int>& e) { return is_to_tiling(InversionSequence(e)).word(); });
  m.def("tiling_to_is", [](const std::string& w, int n) { return tiling_to_is(Tiling(w), n).vec(); });

  // Closed forms.
  m.def("binom", [](long a, long b) { return to_py(binom(a, b)); });
  m.def("fib", [](long k) { return to_py(fib(k)); });
  m.def("ballot", [](long j, long k) { return to_py(ballot(j, k)); });
  m.def("catalan", [](long n) { return to_py(catalan(n)); });
  m.def("count_102_rank", [](int n, int t) { return to_py(count_102_rank(n, t)); });
  m.def(
      "count_pair_rank",
      [](const std::string& tau, int n, int t, bool extended) {
        return to_py(count_pair_rank(parse_second_pattern(tau), n, t, extended ? RankRange::Extended : RankRange::Standard));
      },
      py::arg("tau"), py::arg("n"), py::arg("t"), py::arg("extended") = false);
  m.def("count_pair_total", [](const std::string& tau, int n) { return to_py(count_pair_total(parse_second_pattern(tau), n)); });
  m.def("count_201_by_max", [](int n, int t, int m_, bool with_101) { return to_py(count_201_by_max(n, t, m_, with_101)); });
  m.def("count_A_subset", [](int n, int t) { return to_py(count_A_subset(n, t)); });
  m.def("count_dyck_final_descent", [](int n, int k) { return to_py(count_dyck_final_descent(n, k)); });

  // Series and conformance.
  m.def(
      "series_coeffs",
      [](const std::string& id, int order) {
        const auto s = named_series(parse_series_id(id), order);
        py::list out;
        for (const auto& c : s.coeffs()) out.append(to_py(c));
        return out;
      },
      py::arg("id"), py::arg("order") = 12);
  m.def(
      "verify_identity",
      [](const std::string& tag, int order, int u_order) {
        VerifyOptions options;
        options.order = order;
        options.u_order = u_order;
        IdentityReport report;
        {
          py::gil_scoped_release release;
          report = verify_identity(parse_identity_id(tag), options);
        }
        return json_to_py(to_json(report));
      },
      py::arg("tag"), py::arg("order") = 24, py::arg("u_order") = 6);
  m.def(
      "run_checks",
      [](const std::optional<std::vector<std::string>>& families, std::optional<int> n_max, unsigned jobs) {
        std::vector<CheckSpec> specs;
        if (families) {
          for (const auto& f : *families) {
            const auto part = suite_for(f, n_max);
            specs.insert(specs.end(), part.begin(), part.end());
          }
        } else {
          specs = default_suite();
        }
        ConformanceReport report;
        {
          py::gil_scoped_release release;
          report = run_checks(specs, RunOptions{jobs});
        }
        return json_to_py(report.to_json());
      },
      py::arg("families") = py::none(), py::arg("n_max") = py::none(), py::arg("jobs") = 0);
}
