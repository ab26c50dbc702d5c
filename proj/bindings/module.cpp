// Python bindings.  Structured results (certificates, reports, verdicts)
// cross the boundary as plain dicts produced from the library's canonical
// JSON serialization, so the Python surface and the CLI agree byte for
// byte on what a certificate or report contains.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sumset/admissibility.hpp"
#include "sumset/constructions.hpp"
#include "sumset/errors.hpp"
#include "sumset/group.hpp"
#include "sumset/group_spec.hpp"
#include "sumset/json_io.hpp"
#include "sumset/regularity.hpp"
#include "sumset/ring.hpp"
#include "sumset/search.hpp"

namespace py = pybind11;
using namespace sumset;

namespace {

// Thin handle; all real state lives in the immutable FiniteGroup.
struct PyGroup {
  GroupPtr g;
};

py::object to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(py::str(j.dump()));
}

Elem checked_elem(const GroupPtr& G, long long idx) {
  if (idx < 0 || idx >= G->order())
    throw InvalidArgument("element index " + std::to_string(idx) +
                          " out of range for a group of order " +
                          std::to_string(G->order()));
  return Elem(idx);
}

// Elements may be given as labels or as table indices.
Subset resolve_set(const GroupPtr& G, const py::sequence& items) {
  Subset S(G);
  for (auto item : items) {
    if (py::isinstance<py::str>(item))
      S.insert(G->element_of_label(item.cast<std::string>()));
    else
      S.insert(checked_elem(G, item.cast<long long>()));
  }
  return S;
}

std::optional<std::vector<Elem>> resolve_picks(
    const GroupPtr& G, const std::optional<py::sequence>& picks) {
  if (!picks) return std::nullopt;
  std::vector<Elem> out;
  for (auto item : *picks) {
    if (py::isinstance<py::str>(item))
      out.push_back(G->element_of_label(item.cast<std::string>()));
    else
      out.push_back(checked_elem(G, item.cast<long long>()));
  }
  return out;
}

py::object family_py(const constructions::LiftedFamily& fam) {
  nlohmann::json out;
  out["pss"] = jsonio::construction_json(fam.pss);
  out["with_identity"] = jsonio::construction_json(fam.with_identity);
  out["with_involution"] = jsonio::construction_json(fam.with_involution);
  return to_py(out);
}

}  // namespace

PYBIND11_MODULE(_sumset, m) {
  m.doc() = "finite-group sum set and partial sum set toolkit";

  // Most-derived classes registered last so their translators run first.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);
  py::register_exception<ConstructionFailure>(m, "ConstructionFailureError",
                                              PyExc_RuntimeError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceededError",
                                         PyExc_RuntimeError);
  py::register_exception<Overflow>(m, "OverflowError", PyExc_OverflowError);
  py::register_exception<GroupMismatch>(m, "GroupMismatchError",
                                        PyExc_ValueError);
  py::register_exception<InvalidArgument>(m, "InvalidArgumentError",
                                          PyExc_ValueError);

  py::class_<PyGroup>(m, "Group",
                      "Immutable multiplication-table finite group.")
      .def_property_readonly(
          "name", [](const PyGroup& s) { return s.g->name(); })
      .def_property_readonly(
          "order", [](const PyGroup& s) { return s.g->order(); })
      .def_property_readonly(
          "labels", [](const PyGroup& s) { return s.g->labels(); })
      .def_property_readonly(
          "is_abelian", [](const PyGroup& s) { return s.g->is_abelian(); })
      .def(
          "label",
          [](const PyGroup& s, long long g) {
            return s.g->label(checked_elem(s.g, g));
          },
          py::arg("element"))
      .def(
          "element_of_label",
          [](const PyGroup& s, const std::string& label) {
            return int(s.g->element_of_label(label));
          },
          py::arg("label"))
      .def(
          "mul",
          [](const PyGroup& s, long long a, long long b) {
            return int(s.g->mul(checked_elem(s.g, a), checked_elem(s.g, b)));
          },
          py::arg("a"), py::arg("b"))
      .def(
          "inv",
          [](const PyGroup& s, long long a) {
            return int(s.g->inv(checked_elem(s.g, a)));
          },
          py::arg("a"))
      .def(
          "pow",
          [](const PyGroup& s, long long g, long long t) {
            return int(s.g->pow(checked_elem(s.g, g), t));
          },
          py::arg("g"), py::arg("t"))
      .def(
          "element_order",
          [](const PyGroup& s, long long g) {
            return s.g->element_order(checked_elem(s.g, g));
          },
          py::arg("g"))
      .def("center",
           [](const PyGroup& s) {
             std::vector<std::string> out;
             for (Elem z : s.g->center_elements())
               out.push_back(s.g->label(z));
             return out;
           })
      .def("__repr__", [](const PyGroup& s) {
        return "<Group " + s.g->name() + " of order " +
               std::to_string(s.g->order()) + ">";
      });

  m.def(
      "parse_group",
      [](const std::string& spec) { return PyGroup{parse_group(spec)}; },
      py::arg("spec"),
      "Build a group from a spec string such as 'dihedral:4', 'ea:9', "
      "'aff:5', 'dstar:3', 'frob:7:3', or 'prod:cyclic:2,cyclic:4'.");

  m.def(
      "group_info",
      [](const std::string& spec) {
        return to_py(jsonio::group_json(*parse_group(spec)));
      },
      py::arg("spec"),
      "Group table, labels, and structural metadata as a dict.");

  m.def(
      "certificate",
      [](const PyGroup& G, const py::sequence& elements) {
        return to_py(jsonio::certificate_json(resolve_set(G.g, elements)));
      },
      py::arg("group"), py::arg("elements"),
      "Classify a subset (elements by label or index): representation "
      "counts, regularity flags, and parameters when regular.");

  m.def(
      "admissible",
      [](long long v, long long k, long long mu, bool abelian) {
        auto verdict = admissibility::check_admissible(v, k, mu);
        if (abelian) {
          auto extra = admissibility::abelian_filters(v, k, mu);
          verdict.rejections.insert(verdict.rejections.end(), extra.begin(),
                                    extra.end());
          verdict.admissible = verdict.rejections.empty();
        }
        return to_py(jsonio::verdict_json(verdict));
      },
      py::arg("v"), py::arg("k"), py::arg("mu"), py::arg("abelian") = false,
      "Arithmetic screening of a (v, k, mu) sum-set parameter triple.");

  // ---- constructions ----

  m.def(
      "dihedral_type1",
      [](int n) {
        auto pair = constructions::dihedral_type1(n);
        nlohmann::json out;
        out["with_t"] = jsonio::construction_json(pair.with_t);
        out["with_zt"] = jsonio::construction_json(pair.with_zt);
        return to_py(out);
      },
      py::arg("n"),
      "Both (2n, n-1, (n-2)/2) sum sets in the dihedral group of order 2n, "
      "even n >= 4.");

  m.def(
      "dihedral_type2",
      [](int m_) { return family_py(constructions::dihedral_type2(m_)); },
      py::arg("m"),
      "The (4m, 2m-2, m-3, m-1) partial sum set and both (4m, 2m-1, m-1) "
      "completions in DihC_m x C2, odd m >= 3.");

  m.def(
      "dstar",
      [](int n) { return family_py(constructions::dstar_sum_set(n)); },
      py::arg("n"),
      "The (4n, 2n-2, n-3, n-1) partial sum set and both (4n, 2n-1, n-1) "
      "completions in the order-4n double cover, odd n >= 3.");

  m.def(
      "generalized_dihedral_pss",
      [](const std::string& abelian_spec) {
        return to_py(jsonio::construction_json(
            constructions::generalized_dihedral_pss(
                parse_group(abelian_spec))));
      },
      py::arg("abelian_spec"),
      "The twist-construction partial sum set in the generalized dihedral "
      "group over the given abelian group of odd order.");

  m.def(
      "frobenius_cosets",
      [](const std::string& group_spec, int t, bool include_h,
         const std::optional<py::sequence>& picks) {
        auto G = parse_group(group_spec);
        return to_py(jsonio::construction_json(
            constructions::frobenius_coset_pss(G, t, include_h,
                                               resolve_picks(G, picks))));
      },
      py::arg("group_spec"), py::arg("t"), py::arg("include_h") = false,
      py::arg("picks") = std::nullopt,
      "Union of t complement-cosets in a Frobenius group (e.g. 'aff:5'): "
      "a (o(G), t*o(H), t^2-t, t^2) partial sum set, or with include_h the "
      "(o(G), (t+1)*o(H), t^2+o(H), t^2+t) variant.");

  m.def(
      "aff_times_c2",
      [](int q) { return family_py(constructions::aff_times_c2_sum_set(q)); },
      py::arg("q"),
      "The lifted (2q(q-1), 2q-1, 2) sum sets over the affine group of "
      "GF(q) crossed with C2.");

  m.def(
      "frobenius_subgroup_pss",
      [](int q, int d, int c, const std::optional<std::vector<int>>& picks) {
        return to_py(jsonio::construction_json(
            constructions::frobenius_subgroup_pss(q, d, c, picks)));
      },
      py::arg("q"), py::arg("d"), py::arg("c") = 2,
      py::arg("picks") = std::nullopt,
      "The (qd, c(q-1), c(t-1), ct) partial sum set inside the order-qd "
      "subgroup of the affine group, t = c(q-1)/d.");

  m.def(
      "frobenius_subgroup_sum_set",
      [](int q, int d, const std::optional<std::vector<int>>& picks) {
        return to_py(jsonio::construction_json(
            constructions::frobenius_subgroup_sum_set(q, d, picks)));
      },
      py::arg("q"), py::arg("d"), py::arg("picks") = std::nullopt,
      "The completed (qd, 2q-1, 4(q-1)/d) sum set.");

  m.def(
      "paley",
      [](int q) {
        return to_py(
            jsonio::construction_json(constructions::paley_skew_pss(q)));
      },
      py::arg("q"),
      "Nonzero squares of GF(q), q = 3 mod 4: the skew "
      "(q, (q-1)/2, (q-3)/4, (q+1)/4) partial sum set.");

  // ---- search ----

  m.def(
      "search",
      [](const std::string& group, int k_min, int k_max,
         const std::string& mode, bool include_trivial, bool dedup_complement,
         bool dedup_central_translate, bool dedup_inversion,
         long long max_results, double budget_seconds, int threads,
         bool include_results) {
        search::SearchQuery q;
        q.group = parse_group(group);
        q.k_min = k_min;
        q.k_max = k_max;
        q.mode = search::parse_search_mode(mode);
        q.include_trivial = include_trivial;
        q.dedup.complement = dedup_complement;
        q.dedup.central_translate = dedup_central_translate;
        q.dedup.inversion = dedup_inversion;
        q.max_results = max_results;
        q.budget_seconds = budget_seconds;
        q.threads = threads;
        auto rep = search::exhaustive_search(q);
        return to_py(jsonio::search_report_json(rep, include_results));
      },
      py::arg("group"), py::arg("k_min") = 1, py::arg("k_max") = -1,
      py::arg("mode") = "sum-set", py::arg("include_trivial") = false,
      py::arg("dedup_complement") = true,
      py::arg("dedup_central_translate") = true,
      py::arg("dedup_inversion") = true, py::arg("max_results") = -1,
      py::arg("budget_seconds") = -1.0, py::arg("threads") = 1,
      py::arg("include_results") = true,
      "Exhaustive certified search; mode is 'sum-set', 'pss', or "
      "'maximal-skew'.  Returns the full report with per-parameter counts "
      "and equivalence-class representatives.");

  m.def(
      "property_suite",
      [](const std::string& name, const std::vector<std::string>& scope) {
        return to_py(jsonio::suite_json(search::property_suite(name, scope)));
      },
      py::arg("name"), py::arg("scope"),
      "Named verification sweep ('no-cyclic', 'abelian-is-ds', "
      "'abelian-reversible', 'rdsss', 'higher-order', 'coset-eq', "
      "'shds-pss') over group specs; ranges like 'cyclic:3..16' expand.");

  m.def(
      "power_coefficients",
      [](const PyGroup& G, const py::sequence& elements, int exp) {
        auto S = resolve_set(G.g, elements);
        auto R = ring::power(ring::from_subset(S), exp);
        py::dict out;
        for (int g = 0; g < G.g->order(); ++g)
          out[py::str(G.g->label(Elem(g)))] = R.at(Elem(g));
        return out;
      },
      py::arg("group"), py::arg("elements"), py::arg("exp"),
      "Coefficients of the exp-th group-ring power of the subset's "
      "indicator element, keyed by element label.");
}
