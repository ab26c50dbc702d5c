#include "sumset/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "sumset/admissibility.hpp"
#include "sumset/constructions.hpp"
#include "sumset/errors.hpp"
#include "sumset/field.hpp"
#include "sumset/group.hpp"
#include "sumset/group_spec.hpp"
#include "sumset/json_io.hpp"
#include "sumset/regularity.hpp"
#include "sumset/search.hpp"

namespace sumset::cli {

namespace {

enum class Mode { human, json, jsonl };

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return value;
  } catch (const std::exception&) {
    throw InvalidArgument(what + ": '" + s + "' is not an integer");
  }
}

void parse_k_range(const std::string& s, int& lo, int& hi) {
  const auto pos = s.find("..");
  if (pos == std::string::npos) {
    lo = hi = parse_int(s, "--k");
    return;
  }
  lo = parse_int(s.substr(0, pos), "--k");
  hi = parse_int(s.substr(pos + 2), "--k");
}

search::DedupFlags parse_dedup(const std::string& s) {
  if (s == "all") return {true, true, true};
  if (s == "none") return {false, false, false};
  search::DedupFlags f{false, false, false};
  for (const auto& part : split_csv(s)) {
    if (part == "complement") {
      f.complement = true;
    } else if (part == "central-translate" || part == "central_translate") {
      f.central_translate = true;
    } else if (part == "inversion") {
      f.inversion = true;
    } else {
      throw InvalidArgument("--dedup: unknown transform '" + part +
                            "' (complement, central-translate, inversion, "
                            "all, none)");
    }
  }
  return f;
}

// Deterministic in-place shuffle: identical seeds give identical draws on
// every platform, which the reproducibility contract of --seed requires.
template <class T>
void shuffle_det(std::vector<T>& xs, std::mt19937& rng) {
  for (std::size_t i = xs.size(); i > 1; --i)
    std::swap(xs[i - 1], xs[rng() % i]);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string set_text(const Subset& S) {
  std::string out = "{";
  bool first = true;
  for (const auto& l : S.labels()) {
    if (!first) out += ", ";
    out += l;
    first = false;
  }
  return out + "}";
}

using Rows = std::vector<std::pair<std::string, std::string>>;

void print_rows(std::ostream& out, const Rows& rows) {
  std::size_t w = 0;
  for (const auto& [key, value] : rows) w = std::max(w, key.size());
  for (const auto& [key, value] : rows)
    out << "  " << key << std::string(w - key.size() + 2, ' ') << value
        << "\n";
}

std::string params_text(const regularity::Params& p) {
  std::ostringstream os;
  os << "v=" << p.v << " k=" << p.k;
  if (p.lambda) os << " lambda=" << *p.lambda;
  os << " mu=" << p.mu << " n=" << p.n << " s_inv=" << p.s_inv;
  return os.str();
}

void render_counts_table(std::ostream& out, const Subset& S) {
  const auto pr = regularity::profile(S);
  const FiniteGroup& G = *S.group();
  std::size_t w = std::string("element").size();
  for (Elem g = 0; g < Elem(G.order()); ++g)
    w = std::max(w, G.label(g).size());
  out << "  element" << std::string(w - 7 + 2, ' ')
      << "products  quotients  in set\n";
  for (Elem g = 0; g < Elem(G.order()); ++g) {
    const std::string l = G.label(g);
    std::ostringstream pc, qc;
    pc << pr.product_counts[g];
    qc << pr.quotient_counts[g];
    out << "  " << l << std::string(w - l.size() + 2, ' ') << pc.str()
        << std::string(10 - pc.str().size(), ' ') << qc.str()
        << std::string(11 - qc.str().size(), ' ')
        << (S.contains(g) ? "*" : "") << "\n";
  }
}

void render_certificate(std::ostream& out, const Subset& S,
                        const regularity::Classification& c) {
  const FiniteGroup& G = *S.group();
  Rows rows;
  rows.push_back({"group", G.name() + "  (order " +
                               std::to_string(G.order()) + ")"});
  rows.push_back({"set", set_text(S)});
  rows.push_back({"size", std::to_string(S.size())});
  if (c.params) rows.push_back({"parameters", params_text(*c.params)});
  rows.push_back({"sum set", yes_no(c.is_sum_set)});
  rows.push_back({"partial sum set", yes_no(c.is_partial_sum_set)});
  std::string ds = yes_no(c.is_difference_set);
  if (c.ds_lambda) ds += "  (lambda = " + std::to_string(*c.ds_lambda) + ")";
  rows.push_back({"difference set", ds});
  rows.push_back({"reversible", yes_no(c.is_reversible)});
  rows.push_back({"skew", yes_no(c.is_skew)});
  rows.push_back({"maximal skew", yes_no(c.is_maximal_skew)});
  rows.push_back({"trivial", yes_no(c.is_trivial)});
  for (const auto& t : c.type_wrt)
    rows.push_back({"type wrt " + G.label(t.involution),
                    regularity::coset_type_name(t.type)});
  print_rows(out, rows);
  out << "\n";
  render_counts_table(out, S);
}

void render_construction(std::ostream& out,
                         const constructions::ConstructionResult& r) {
  Rows rows;
  rows.push_back({"construction", r.theorem_tag});
  rows.push_back({"claimed", params_text(r.claimed)});
  for (const auto& [key, value] : r.choices)
    rows.push_back({"choice " + key, value});
  print_rows(out, rows);
  out << "\n";
  render_certificate(out, r.set, r.certificate);
}

bool check_property(const regularity::Classification& c,
                    const std::string& name) {
  if (name == "sum-set") return c.is_sum_set;
  if (name == "pss") return c.is_partial_sum_set;
  if (name == "difference-set") return c.is_difference_set;
  if (name == "reversible") return c.is_reversible;
  if (name == "skew") return c.is_skew;
  if (name == "maximal-skew") return c.is_maximal_skew;
  if (name == "nontrivial") return !c.is_trivial;
  throw InvalidArgument(
      "--require: unknown property '" + name +
      "' (sum-set, pss, difference-set, reversible, skew, maximal-skew, "
      "nontrivial)");
}

// ---- subcommand handlers ----

int do_group(const std::string& spec, Mode mode, std::ostream& out) {
  auto G = parse_group(spec);
  if (mode != Mode::human) {
    out << jsonio::canonical_dump(jsonio::group_json(*G)) << "\n";
    return 0;
  }
  Rows rows;
  rows.push_back({"group", G->name()});
  rows.push_back({"order", std::to_string(G->order())});
  rows.push_back({"abelian", yes_no(G->is_abelian())});
  Subset center = Subset::of_elements(G, G->center_elements());
  rows.push_back({"center", set_text(center)});
  const auto& meta = G->metadata();
  if (meta.frobenius_kernel)
    rows.push_back(
        {"kernel", set_text(Subset::of_elements(G, *meta.frobenius_kernel))});
  if (meta.frobenius_complement)
    rows.push_back({"complement", set_text(Subset::of_elements(
                                      G, *meta.frobenius_complement))});
  if (!meta.notes.empty()) rows.push_back({"notes", meta.notes});
  std::string labels;
  for (Elem g = 0; g < Elem(G->order()); ++g) {
    if (g) labels += " ";
    labels += G->label(g);
  }
  rows.push_back({"elements", labels});
  print_rows(out, rows);
  return 0;
}

int do_verify(const std::string& spec, const std::string& set_csv,
              const std::string& require, Mode mode, std::ostream& out) {
  auto G = parse_group(spec);
  Subset S = parse_subset(G, set_csv);
  auto c = regularity::classify(S);
  const bool positive = require.empty()
                            ? (c.is_sum_set || c.is_partial_sum_set)
                            : check_property(c, require);
  if (mode != Mode::human) {
    out << jsonio::canonical_dump(jsonio::certificate_json(S, c)) << "\n";
  } else {
    render_certificate(out, S, c);
    out << "\n  verdict: "
        << (positive ? "accepted" : "rejected") << "\n";
  }
  return positive ? 0 : 1;
}

struct ConstructArgs {
  std::string group_spec, set_csv, involution, picks_csv, intercepts_csv;
  std::int64_t beta = -1;
  int n = 0, m = 0, q = 0, d = 0, c = 2, t = 0;
  bool with_subgroup = false, complete = false, random_picks = false;
  std::uint32_t seed = 0;
};

std::vector<Elem> random_kernel_picks(const GroupPtr& G, int t,
                                      std::uint32_t seed) {
  const auto& meta = G->metadata();
  if (!meta.frobenius_kernel)
    throw InvalidArgument(
        "construct frob-cosets: the group records no kernel to pick from");
  std::vector<Elem> pool;
  for (Elem g : *meta.frobenius_kernel)
    if (g != FiniteGroup::identity) pool.push_back(g);
  if (t < 0 || std::size_t(t) > pool.size())
    throw InvalidArgument(
        "construct frob-cosets: --t exceeds the nonidentity kernel");
  std::mt19937 rng(seed);
  shuffle_det(pool, rng);
  pool.resize(std::size_t(t));
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::vector<int> random_intercept_picks(int q, int d, int c,
                                        std::uint32_t seed) {
  const FieldPtr F = field_of(q);
  if (!F)
    throw InvalidArgument(
        "construct frob-subgroup: no field of order " + std::to_string(q));
  if (d < 2 || (q - 1) % d != 0)
    throw InvalidArgument(
        "construct frob-subgroup: --d must divide the field order minus 1");
  std::vector<int> U;
  for (int a = 1; a < q; ++a)
    if (F->pow(a, d) == 1) U.push_back(a);
  std::vector<char> seen(std::size_t(q), 0);
  std::mt19937 rng(seed);
  std::vector<int> picks;
  for (int b = 1; b < q; ++b) {
    if (seen[b]) continue;
    std::vector<int> orbit;
    for (int u : U) {
      const int x = F->mul(b, u);
      if (!seen[x]) {
        seen[x] = 1;
        orbit.push_back(x);
      }
    }
    if (c < 0 || std::size_t(c) > orbit.size())
      throw InvalidArgument(
          "construct frob-subgroup: --c exceeds the orbit size");
    shuffle_det(orbit, rng);
    orbit.resize(std::size_t(c));
    picks.insert(picks.end(), orbit.begin(), orbit.end());
  }
  std::sort(picks.begin(), picks.end());
  return picks;
}

int do_construct(const std::string& tag, const ConstructArgs& a, Mode mode,
                 std::ostream& out) {
  // Named variants: single-output constructions use one entry.
  std::vector<std::pair<std::string, constructions::ConstructionResult>> outs;

  if (tag == "lift2") {
    if (a.group_spec.empty() || a.set_csv.empty() || a.beta < 0)
      throw InvalidArgument(
          "construct lift2 needs --group, --set and --beta");
    auto G = parse_group(a.group_spec);
    auto fam = constructions::lift2(parse_subset(G, a.set_csv), a.beta);
    outs.push_back({"pss", std::move(fam.pss)});
    outs.push_back({"with_identity", std::move(fam.with_identity)});
    outs.push_back({"with_involution", std::move(fam.with_involution)});
  } else if (tag == "project2") {
    if (a.group_spec.empty() || a.set_csv.empty() || a.involution.empty())
      throw InvalidArgument(
          "construct project2 needs --group, --set and --involution");
    auto G = parse_group(a.group_spec);
    Subset S = parse_subset(G, a.set_csv);
    const Elem z =
        a.involution[0] == '#'
            ? Elem(parse_int(a.involution.substr(1), "--involution"))
            : G->element_of_label(a.involution);
    Subset N = Subset::of_elements(G, {FiniteGroup::identity, z});
    outs.push_back({"result", constructions::project2(S, N)});
  } else if (tag == "dihedral-t1") {
    if (a.n <= 0) throw InvalidArgument("construct dihedral-t1 needs --n");
    std::optional<Subset> M;
    if (!a.set_csv.empty())
      M = parse_subset(make_cyclic(a.n), a.set_csv);
    auto pair = constructions::dihedral_type1(a.n, std::move(M));
    outs.push_back({"with_t", std::move(pair.with_t)});
    outs.push_back({"with_zt", std::move(pair.with_zt)});
  } else if (tag == "dihedral-t2") {
    if (a.m <= 0) throw InvalidArgument("construct dihedral-t2 needs --m");
    auto fam = constructions::dihedral_type2(a.m);
    outs.push_back({"pss", std::move(fam.pss)});
    outs.push_back({"with_identity", std::move(fam.with_identity)});
    outs.push_back({"with_involution", std::move(fam.with_involution)});
  } else if (tag == "dstar") {
    if (a.n <= 0) throw InvalidArgument("construct dstar needs --n");
    auto fam = constructions::dstar_sum_set(a.n);
    outs.push_back({"pss", std::move(fam.pss)});
    outs.push_back({"with_identity", std::move(fam.with_identity)});
    outs.push_back({"with_involution", std::move(fam.with_involution)});
  } else if (tag == "frob-cosets") {
    if (a.group_spec.empty() || a.t <= 0)
      throw InvalidArgument("construct frob-cosets needs --group and --t");
    auto G = parse_group(a.group_spec);
    std::optional<std::vector<Elem>> picks;
    if (!a.picks_csv.empty())
      picks = parse_subset(G, a.picks_csv).elements();
    else if (a.random_picks)
      picks = random_kernel_picks(G, a.t, a.seed);
    outs.push_back({"result", constructions::frobenius_coset_pss(
                                  G, a.t, a.with_subgroup, std::move(picks))});
  } else if (tag == "aff-x-c2") {
    if (a.q <= 0) throw InvalidArgument("construct aff-x-c2 needs --q");
    auto fam = constructions::aff_times_c2_sum_set(a.q);
    outs.push_back({"pss", std::move(fam.pss)});
    outs.push_back({"with_identity", std::move(fam.with_identity)});
    outs.push_back({"with_involution", std::move(fam.with_involution)});
  } else if (tag == "frob-subgroup") {
    if (a.q <= 0 || a.d <= 0)
      throw InvalidArgument("construct frob-subgroup needs --q and --d");
    std::optional<std::vector<int>> picks;
    if (!a.intercepts_csv.empty()) {
      std::vector<int> ps;
      for (const auto& p : split_csv(a.intercepts_csv))
        ps.push_back(parse_int(p, "--intercepts"));
      picks = std::move(ps);
    } else if (a.random_picks) {
      picks = random_intercept_picks(a.q, a.d, a.complete ? 2 : a.c, a.seed);
    }
    outs.push_back(
        {"result", a.complete ? constructions::frobenius_subgroup_sum_set(
                                    a.q, a.d, std::move(picks))
                              : constructions::frobenius_subgroup_pss(
                                    a.q, a.d, a.c, std::move(picks))});
  } else if (tag == "paley") {
    if (a.q <= 0) throw InvalidArgument("construct paley needs --q");
    outs.push_back({"result", constructions::paley_skew_pss(a.q)});
  } else {
    throw InvalidArgument("construct: unknown tag '" + tag + "'");
  }

  if (mode == Mode::jsonl) {
    for (const auto& [name, r] : outs) {
      auto j = jsonio::construction_json(r);
      j["variant"] = name;
      out << jsonio::canonical_dump(j) << "\n";
    }
  } else if (mode == Mode::json) {
    if (outs.size() == 1) {
      out << jsonio::canonical_dump(jsonio::construction_json(outs[0].second))
          << "\n";
    } else {
      nlohmann::json j;
      for (const auto& [name, r] : outs)
        j[name] = jsonio::construction_json(r);
      out << jsonio::canonical_dump(j) << "\n";
    }
  } else {
    for (const auto& [name, r] : outs) {
      out << name << ":\n";
      render_construction(out, r);
      out << "\n";
    }
  }
  return 0;
}

int do_admissible(std::int64_t v, std::int64_t k, std::int64_t mu,
                  bool abelian, Mode mode, std::ostream& out) {
  auto judge = [&](std::int64_t kk,
                   std::int64_t mm) -> admissibility::AdmissibilityVerdict {
    auto verdict = admissibility::check_admissible(v, kk, mm);
    if (abelian) {
      auto extra = admissibility::abelian_filters(v, kk, mm);
      verdict.rejections.insert(verdict.rejections.end(), extra.begin(),
                                extra.end());
      verdict.admissible = verdict.rejections.empty();
    }
    return verdict;
  };

  const bool single = k >= 0 && mu >= 0;
  std::vector<admissibility::AdmissibilityVerdict> verdicts;
  if (single) {
    verdicts.push_back(judge(k, mu));
  } else {
    for (std::int64_t kk = (k >= 0 ? k : 1); kk <= (k >= 0 ? k : v - 1);
         ++kk) {
      for (std::int64_t mm = (mu >= 0 ? mu : 0);
           mm <= (mu >= 0 ? mu : kk - 1); ++mm) {
        if (kk <= mm || kk >= v) continue;
        verdicts.push_back(judge(kk, mm));
      }
    }
  }

  if (mode == Mode::jsonl) {
    for (const auto& verdict : verdicts)
      out << jsonio::canonical_dump(jsonio::verdict_json(verdict)) << "\n";
  } else if (mode == Mode::json) {
    if (single) {
      out << jsonio::canonical_dump(jsonio::verdict_json(verdicts[0]))
          << "\n";
    } else {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& verdict : verdicts)
        arr.push_back(jsonio::verdict_json(verdict));
      out << jsonio::canonical_dump(arr) << "\n";
    }
  } else {
    for (const auto& verdict : verdicts) {
      std::ostringstream line;
      line << "(" << verdict.v << ", " << verdict.k << ", " << verdict.mu
           << ")  " << (verdict.admissible ? "admissible" : "rejected");
      if (!verdict.rejections.empty()) {
        line << "  [";
        for (std::size_t i = 0; i < verdict.rejections.size(); ++i) {
          if (i) line << ", ";
          line << verdict.rejections[i].rule;
        }
        line << "]";
      }
      out << "  " << line.str() << "\n";
    }
  }
  return single ? (verdicts[0].admissible ? 0 : 1) : 0;
}

int do_search(const std::string& spec, const std::string& k_spec,
              const std::string& mode_name, const std::string& dedup_spec,
              bool include_trivial, std::int64_t max_results,
              double budget_seconds, int threads, Mode mode,
              std::ostream& out) {
  search::SearchQuery q;
  q.group = parse_group(spec);
  if (!k_spec.empty()) parse_k_range(k_spec, q.k_min, q.k_max);
  q.mode = search::parse_search_mode(mode_name);
  q.dedup = parse_dedup(dedup_spec);
  q.include_trivial = include_trivial;
  q.max_results = max_results;
  q.budget_seconds = budget_seconds;
  q.threads = threads;
  auto rep = search::exhaustive_search(q);

  if (mode == Mode::jsonl) {
    out << jsonio::canonical_dump(jsonio::search_report_json(rep, false))
        << "\n";
    for (const auto& f : rep.results)
      out << jsonio::canonical_dump(
                 jsonio::certificate_json(f.set, f.classification))
          << "\n";
  } else if (mode == Mode::json) {
    out << jsonio::canonical_dump(jsonio::search_report_json(rep, true))
        << "\n";
  } else {
    Rows rows;
    rows.push_back({"group", q.group->name()});
    rows.push_back({"mode", search::search_mode_name(q.mode)});
    rows.push_back({"sizes", std::to_string(rep.k_min) + ".." +
                                 std::to_string(rep.k_max)});
    rows.push_back({"exhaustive", yes_no(rep.exhaustive)});
    rows.push_back({"nodes visited", std::to_string(rep.nodes_visited)});
    rows.push_back({"certified hits", std::to_string(rep.raw_hits)});
    rows.push_back({"trivial hits", std::to_string(rep.trivial_hits)});
    rows.push_back({"after dedup", std::to_string(rep.results.size())});
    std::ostringstream el;
    el << rep.elapsed_seconds;
    rows.push_back({"elapsed seconds", el.str()});
    print_rows(out, rows);
    for (const auto& pc : rep.counts)
      out << "    " << pc.count << " x (" << params_text(pc.params) << ")\n";
    for (const auto& f : rep.results) {
      out << "\n";
      render_certificate(out, f.set, f.classification);
    }
  }
  return 0;
}

int do_suite(const std::string& name, const std::vector<std::string>& scope,
             Mode mode, std::ostream& out) {
  auto rep = search::property_suite(name, scope);
  if (mode != Mode::human) {
    out << jsonio::canonical_dump(jsonio::suite_json(rep)) << "\n";
  } else {
    Rows rows;
    rows.push_back({"suite", rep.name});
    rows.push_back({"cases checked", std::to_string(rep.cases_checked)});
    rows.push_back({"passed", yes_no(rep.passed)});
    print_rows(out, rows);
    for (const auto& note : rep.notes) out << "    " << note << "\n";
    for (const auto& w : rep.witnesses) out << "  WITNESS: " << w << "\n";
  }
  return rep.passed ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"finite-group sum set and partial sum set toolkit", "sumset"};
  app.require_subcommand(1);
  bool flag_json = false, flag_jsonl = false;
  app.add_flag("--json", flag_json, "single machine-readable object");
  app.add_flag("--jsonl", flag_jsonl, "one machine-readable line per record");

  auto* cmd_group =
      app.add_subcommand("group", "print a group with its verified structure");
  cmd_group->fallthrough();
  std::string g_spec;
  cmd_group->add_option("--group", g_spec, "group spec, e.g. dihedral:4")
      ->required();

  auto* cmd_verify = app.add_subcommand(
      "verify", "classify a subset and emit its certificate");
  cmd_verify->fallthrough();
  std::string v_spec, v_set, v_require;
  cmd_verify->add_option("--group", v_spec, "group spec")->required();
  cmd_verify
      ->add_option("--set", v_set,
                   "comma-separated labels (x,xt) or indices (#1,#5)")
      ->required();
  cmd_verify->add_option(
      "--require", v_require,
      "property the set must have for exit code 0 (default: sum-set or pss)");

  auto* cmd_construct = app.add_subcommand(
      "construct", "build a certified set from a named construction");
  cmd_construct->fallthrough();
  std::string c_tag;
  ConstructArgs ca;
  cmd_construct->add_option("tag", c_tag, "construction name")
      ->required()
      ->check(CLI::IsMember({"lift2", "project2", "dihedral-t1",
                             "dihedral-t2", "dstar", "frob-cosets",
                             "aff-x-c2", "frob-subgroup", "paley"}));
  cmd_construct->add_option("--group", ca.group_spec, "base group spec");
  cmd_construct->add_option("--set", ca.set_csv, "input set (labels)");
  cmd_construct->add_option("--beta", ca.beta, "lift2: base out-count beta");
  cmd_construct->add_option("--involution", ca.involution,
                            "project2: central involution label");
  cmd_construct->add_option("--n", ca.n, "dihedral-t1 / dstar order input");
  cmd_construct->add_option("--m", ca.m, "dihedral-t2 odd order");
  cmd_construct->add_option("--q", ca.q, "field order");
  cmd_construct->add_option("--d", ca.d, "frob-subgroup slope order");
  cmd_construct->add_option("--c", ca.c,
                            "frob-subgroup picks per orbit (default 2)");
  cmd_construct->add_option("--t", ca.t, "frob-cosets coset count");
  cmd_construct->add_flag("--with-subgroup", ca.with_subgroup,
                          "frob-cosets: include the complement subgroup");
  cmd_construct->add_flag("--complete", ca.complete,
                          "frob-subgroup: adjoin the identity (sum set)");
  cmd_construct->add_option("--picks", ca.picks_csv,
                            "frob-cosets: kernel representatives (labels)");
  cmd_construct->add_option("--intercepts", ca.intercepts_csv,
                            "frob-subgroup: intercept picks (integers)");
  cmd_construct->add_flag("--random-picks", ca.random_picks,
                          "draw the representative picks from --seed");
  cmd_construct->add_option("--seed", ca.seed,
                            "seed for --random-picks (default 0)");

  auto* cmd_admissible = app.add_subcommand(
      "admissible", "screen parameter triples against the exclusion rules");
  cmd_admissible->fallthrough();
  std::int64_t a_v = 0, a_k = -1, a_mu = -1;
  bool a_abelian = false;
  cmd_admissible->add_option("--v", a_v, "group order")->required();
  cmd_admissible->add_option("--k", a_k, "set size (omit to scan)");
  cmd_admissible->add_option("--mu", a_mu, "outside count (omit to scan)");
  cmd_admissible->add_flag("--abelian", a_abelian,
                           "apply the abelian-only exclusions");

  auto* cmd_search = app.add_subcommand(
      "search", "exhaustively scan a group for certified sets");
  cmd_search->fallthrough();
  std::string s_spec, s_k, s_mode = "sum-set", s_dedup = "all";
  bool s_trivial = false;
  std::int64_t s_max = -1;
  double s_budget = -1;
  int s_threads = 1;
  cmd_search->add_option("--group", s_spec, "group spec")->required();
  cmd_search->add_option("--k", s_k, "size or range, e.g. 3 or 2..5");
  cmd_search->add_option("--mode", s_mode,
                         "sum-set (default), pss, or maximal-skew");
  cmd_search->add_option(
      "--dedup", s_dedup,
      "all (default), none, or csv of complement,central-translate,"
      "inversion");
  cmd_search->add_flag("--include-trivial", s_trivial,
                       "keep trivial hits in the result list");
  cmd_search->add_option("--max-results", s_max, "cap the result list");
  cmd_search->add_option("--budget-seconds", s_budget,
                         "stop after this much time (partial report)");
  cmd_search->add_option("--threads", s_threads, "worker thread count")
      ->envname("SUMSET_THREADS");

  auto* cmd_suite =
      app.add_subcommand("suite", "run a named property sweep over groups");
  cmd_suite->fallthrough();
  std::string p_name;
  std::vector<std::string> p_scope;
  cmd_suite->add_option("--name", p_name, "suite name")->required();
  cmd_suite
      ->add_option("--scope", p_scope,
                   "group spec or range (cyclic:3..16); repeatable")
      ->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const Mode mode =
      flag_jsonl ? Mode::jsonl : (flag_json ? Mode::json : Mode::human);
  try {
    if (app.got_subcommand(cmd_group)) return do_group(g_spec, mode, out);
    if (app.got_subcommand(cmd_verify))
      return do_verify(v_spec, v_set, v_require, mode, out);
    if (app.got_subcommand(cmd_construct))
      return do_construct(c_tag, ca, mode, out);
    if (app.got_subcommand(cmd_admissible))
      return do_admissible(a_v, a_k, a_mu, a_abelian, mode, out);
    if (app.got_subcommand(cmd_search))
      return do_search(s_spec, s_k, s_mode, s_dedup, s_trivial, s_max,
                       s_budget, s_threads, mode, out);
    if (app.got_subcommand(cmd_suite))
      return do_suite(p_name, p_scope, mode, out);
    err << "sumset: no subcommand\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    err << "sumset: " << e.what() << "\n";
    return 3;
  } catch (const Overflow& e) {
    err << "sumset: " << e.what() << "\n";
    return 3;
  } catch (const InvalidArgument& e) {
    err << "sumset: " << e.what() << "\n";
    return 2;
  } catch (const GroupMismatch& e) {
    err << "sumset: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "sumset: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "sumset: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace sumset::cli
