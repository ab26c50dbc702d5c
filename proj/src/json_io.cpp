#include "sumset/json_io.hpp"

#include <vector>

#include "sumset/errors.hpp"

namespace sumset::jsonio {

using nlohmann::json;

namespace {

json elem_labels(const FiniteGroup& G, const std::vector<Elem>& elems) {
  json arr = json::array();
  for (Elem e : elems) arr.push_back(G.label(e));
  return arr;
}

json rejections_json(const std::vector<admissibility::Rejection>& rs) {
  json arr = json::array();
  for (const auto& r : rs)
    arr.push_back({{"citation", r.citation},
                   {"detail", r.detail},
                   {"rule", r.rule}});
  return arr;
}

}  // namespace

json group_json(const FiniteGroup& G) {
  const int v = G.order();
  json labels = json::array();
  json table = json::array();
  for (Elem a = 0; a < Elem(v); ++a) {
    labels.push_back(G.label(a));
    for (Elem b = 0; b < Elem(v); ++b) table.push_back(int(G.mul(a, b)));
  }
  const auto& m = G.metadata();
  json meta;
  meta["center"] = m.center ? elem_labels(G, *m.center) : json(nullptr);
  json normals = json::array();
  for (const auto& sub : m.normal_subgroups)
    normals.push_back(elem_labels(G, sub));
  meta["normal_subgroups"] = normals;
  meta["frobenius_kernel"] =
      m.frobenius_kernel ? elem_labels(G, *m.frobenius_kernel) : json(nullptr);
  meta["frobenius_complement"] = m.frobenius_complement
                                     ? elem_labels(G, *m.frobenius_complement)
                                     : json(nullptr);
  meta["notes"] = m.notes;
  return {{"order", v},
          {"labels", labels},
          {"mul_table", table},
          {"metadata", meta},
          {"name", G.name()}};
}

json params_json(const regularity::Params& p) {
  return {{"v", p.v},
          {"k", p.k},
          {"lambda", p.lambda ? json(*p.lambda) : json(nullptr)},
          {"mu", p.mu},
          {"n", p.n},
          {"s_inv", p.s_inv}};
}

json classification_json(const regularity::Classification& c,
                         const FiniteGroup& G) {
  json types = json::array();
  for (const auto& t : c.type_wrt)
    types.push_back({{"involution", G.label(t.involution)},
                     {"type", regularity::coset_type_name(t.type)}});
  return {{"is_sum_set", c.is_sum_set},
          {"is_partial_sum_set", c.is_partial_sum_set},
          {"is_difference_set", c.is_difference_set},
          {"is_skew", c.is_skew},
          {"is_reversible", c.is_reversible},
          {"is_maximal_skew", c.is_maximal_skew},
          {"is_trivial", c.is_trivial},
          {"ds_lambda", c.ds_lambda ? json(*c.ds_lambda) : json(nullptr)},
          {"type_wrt", types}};
}

json certificate_json(const Subset& S, const regularity::Classification& c) {
  const auto pr = regularity::profile(S);
  const FiniteGroup& G = *S.group();
  return {{"group_spec", G.name()},
          {"set", elem_labels(G, S.elements())},
          {"product_counts", pr.product_counts},
          {"quotient_counts", pr.quotient_counts},
          {"classification", classification_json(c, G)},
          {"params", c.params ? params_json(*c.params) : json(nullptr)}};
}

json certificate_json(const Subset& S) {
  return certificate_json(S, regularity::classify(S));
}

json verdict_json(const admissibility::AdmissibilityVerdict& v) {
  return {{"v", v.v},
          {"k", v.k},
          {"mu", v.mu},
          {"admissible", v.admissible},
          {"n", v.n},
          {"s_inv", v.s_inv},
          {"rejections", rejections_json(v.rejections)},
          {"warnings", rejections_json(v.warnings)}};
}

json construction_json(const constructions::ConstructionResult& r) {
  json choices;
  for (const auto& [key, value] : r.choices) choices[key] = value;
  if (choices.is_null()) choices = json::object();
  return {{"theorem_tag", r.theorem_tag},
          {"group_spec", r.group->name()},
          {"set", elem_labels(*r.group, r.set.elements())},
          {"claimed_params", params_json(r.claimed)},
          {"certificate", certificate_json(r.set, r.certificate)},
          {"choices", choices}};
}

json search_report_json(const search::SearchReport& rep,
                        bool include_results) {
  const auto& q = rep.query;
  json dedup = {{"complement", q.dedup.complement},
                {"central_translate", q.dedup.central_translate},
                {"inversion", q.dedup.inversion}};
  // threads is an execution knob with no effect on the result set, so it
  // stays out of the canonical form (identical queries must dump
  // identically regardless of worker count); elapsed time stays out for
  // the same reason.
  json query = {{"group_spec", q.group ? json(q.group->name()) : json(nullptr)},
                {"mode", search::search_mode_name(q.mode)},
                {"dedup", dedup},
                {"include_trivial", q.include_trivial},
                {"max_results", q.max_results},
                {"budget_seconds", q.budget_seconds}};
  json counts = json::array();
  for (const auto& pc : rep.counts)
    counts.push_back({{"params", params_json(pc.params)},
                      {"count", pc.count}});
  json out = {{"query", query},
              {"k_min", rep.k_min},
              {"k_max", rep.k_max},
              {"counts", counts},
              {"raw_hits", rep.raw_hits},
              {"trivial_hits", rep.trivial_hits},
              {"nodes_visited", rep.nodes_visited},
              {"result_count", std::int64_t(rep.results.size())},
              {"exhaustive", rep.exhaustive}};
  if (include_results) {
    json results = json::array();
    for (const auto& f : rep.results)
      results.push_back(certificate_json(f.set, f.classification));
    out["results"] = results;
  }
  return out;
}

json suite_json(const search::PropertyReport& rep) {
  return {{"name", rep.name},
          {"scope", rep.scope},
          {"cases_checked", rep.cases_checked},
          {"passed", rep.passed},
          {"witnesses", rep.witnesses},
          {"notes", rep.notes}};
}

std::string canonical_dump(const json& j) { return j.dump(); }

}  // namespace sumset::jsonio
