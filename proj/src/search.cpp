#include "sumset/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <numeric>
#include <thread>
#include <tuple>
#include <utility>

#include "sumset/admissibility.hpp"
#include "sumset/constructions.hpp"
#include "sumset/errors.hpp"
#include "sumset/group_spec.hpp"
#include "sumset/ring.hpp"

namespace sumset::search {

const char* search_mode_name(SearchMode m) {
  switch (m) {
    case SearchMode::sum_set:
      return "sum-set";
    case SearchMode::pss:
      return "pss";
    default:
      return "maximal-skew";
  }
}

SearchMode parse_search_mode(const std::string& name) {
  if (name == "sum-set" || name == "sum_set") return SearchMode::sum_set;
  if (name == "pss") return SearchMode::pss;
  if (name == "maximal-skew" || name == "maximal_skew")
    return SearchMode::maximal_skew;
  throw InvalidArgument("unknown search mode: " + name);
}

namespace {

using Clock = std::chrono::steady_clock;

// Parameter-shape key for the counts table; lambda encoded as -1 for sum
// sets so shapes order deterministically.
using ParamKey =
    std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>;
using CountMap = std::map<ParamKey, std::pair<regularity::Params,
                                              std::int64_t>>;

ParamKey key_of(const regularity::Params& p) {
  return {p.v, p.k, p.lambda.value_or(-1), p.mu};
}

struct TaskResult {
  std::vector<FoundSet> hits;
  CountMap counts;  // nontrivial certified hits per parameter shape
  std::int64_t raw_hits = 0;
  std::int64_t trivial_hits = 0;
  std::int64_t nodes = 0;
};

// Depth-first scan of one subtree with incremental representation counts.
// Adding element e touches counts[e*t] and counts[t*e] for every member t
// plus counts[e*e]; removal mirrors it exactly.
struct Scanner {
  GroupPtr gp;
  const FiniteGroup& G;
  int v;
  SearchMode mode;
  int k_min, k_max;
  std::int64_t bound_identity, bound_other;  // pruning caps (sum-set mode)
  bool include_trivial;
  bool timed;
  Clock::time_point deadline;
  std::atomic<bool>* expired;
  TaskResult* out;

  std::vector<Elem> cur;
  std::vector<std::int32_t> counts;
  std::vector<std::uint8_t> member;
  int violations = 0;

  Scanner(GroupPtr g, SearchMode m, int kmin, int kmax, bool trivial_ok,
          bool is_timed, Clock::time_point dl, std::atomic<bool>* exp,
          TaskResult* o)
      : gp(std::move(g)),
        G(*gp),
        v(gp->order()),
        mode(m),
        k_min(kmin),
        k_max(kmax),
        bound_identity(kmax),
        bound_other(m == SearchMode::sum_set
                        ? (std::int64_t(kmax) * kmax) / std::max(1, v - 1)
                        : std::int64_t(1) << 40),
        include_trivial(trivial_ok),
        timed(is_timed),
        deadline(dl),
        expired(exp),
        out(o),
        counts(std::size_t(v), 0),
        member(std::size_t(v), 0) {
    cur.reserve(std::size_t(std::max(kmax, 0)));
  }

  void bump(Elem g, int d) {
    auto& c = counts[g];
    const std::int64_t bound =
        g == FiniteGroup::identity ? bound_identity : bound_other;
    const bool was = c > bound;
    c += d;
    violations += int(c > bound) - int(was);
  }

  void add(Elem e) {
    for (Elem t : cur) {
      bump(G.mul(e, t), +1);
      bump(G.mul(t, e), +1);
    }
    bump(G.mul(e, e), +1);
    member[e] = 1;
    cur.push_back(e);
  }

  void remove() {
    const Elem e = cur.back();
    cur.pop_back();
    member[e] = 0;
    bump(G.mul(e, e), -1);
    for (Elem t : cur) {
      bump(G.mul(e, t), -1);
      bump(G.mul(t, e), -1);
    }
  }

  // Constant-count test on the current node, matching the search mode.
  bool node_matches() const {
    if (mode == SearchMode::sum_set) {
      std::int32_t ref = -1;
      for (int g = 1; g < v; ++g) {
        if (ref < 0)
          ref = counts[g];
        else if (counts[g] != ref)
          return false;
      }
      return true;
    }
    std::int32_t in_ref = -1, out_ref = -1;
    for (int g = 1; g < v; ++g) {
      std::int32_t& ref = member[g] ? in_ref : out_ref;
      if (ref < 0)
        ref = counts[g];
      else if (counts[g] != ref)
        return false;
    }
    return true;
  }

  void certify_hit() {
    Subset S = Subset::of_elements(gp, cur);
    auto prof = regularity::profile(S);
    for (int g = 0; g < v; ++g)
      if (prof.product_counts[g] != counts[g])
        throw InternalError(
            "incremental representation counts diverge from the recomputed "
            "profile");
    auto cls = regularity::classify(S);
    const bool ok = mode == SearchMode::sum_set ? cls.is_sum_set
                                                : cls.is_partial_sum_set;
    if (!ok || !cls.params)
      throw InternalError("constant-count scan accepted a non-hit");
    if (cls.is_trivial) {
      out->trivial_hits++;
      if (!include_trivial) return;
    } else {
      out->raw_hits++;
      const auto key = key_of(*cls.params);
      auto it = out->counts.find(key);
      if (it == out->counts.end())
        out->counts.emplace(key, std::make_pair(*cls.params, 1));
      else
        it->second.second++;
    }
    out->hits.push_back({std::move(S), std::move(cls)});
  }

  void visit_node() {
    if (++out->nodes % 4096 == 0 && timed && Clock::now() >= deadline)
      expired->store(true, std::memory_order_relaxed);
    if (int(cur.size()) >= k_min && node_matches()) certify_hit();
  }

  void dfs(int next_min) {
    visit_node();
    if (int(cur.size()) == k_max) return;
    for (int e = next_min; e < v; ++e) {
      if (expired->load(std::memory_order_relaxed)) return;
      add(Elem(e));
      if (violations == 0) dfs(e + 1);
      remove();
    }
  }
};

// Central involutions of the group, ascending.
std::vector<Elem> central_involutions(const FiniteGroup& G) {
  std::vector<Elem> zs;
  for (Elem z : G.center_elements())
    if (G.element_order(z) == 2) zs.push_back(z);
  return zs;
}

void merge_counts(CountMap& into, const CountMap& from) {
  for (const auto& [key, pc] : from) {
    auto it = into.find(key);
    if (it == into.end())
      into.emplace(key, pc);
    else
      it->second.second += pc.second;
  }
}

}  // namespace

SearchReport exhaustive_search(const SearchQuery& q) {
  if (!q.group) throw InvalidArgument("search: no group given");
  const GroupPtr& G = q.group;
  const int v = G->order();
  if (v > 24)
    throw BudgetExceeded("search: exhaustive scans cap at group order 24");

  SearchReport rep;
  rep.query = q;
  rep.k_min = std::max(0, q.k_min);
  rep.k_max = q.k_max < 0 ? v / 2 : std::min(q.k_max, v);
  if (v > 16 && rep.k_max > 9 && q.mode != SearchMode::maximal_skew)
    throw BudgetExceeded(
        "search: set sizes above 9 are out of budget past group order 16");
  const auto started = Clock::now();

  if (q.mode == SearchMode::maximal_skew) {
    for (auto& S : enumerate_maximal_skew(G)) {
      rep.nodes_visited++;
      if (S.size() < rep.k_min || S.size() > rep.k_max) continue;
      auto cls = regularity::classify(S);
      if (cls.is_trivial) {
        rep.trivial_hits++;
        if (!q.include_trivial) continue;
      } else {
        rep.raw_hits++;
      }
      rep.results.push_back({std::move(S), std::move(cls)});
    }
  } else if (rep.k_max >= rep.k_min) {
    std::atomic<bool> expired{false};
    const bool timed = q.budget_seconds >= 0;
    const auto deadline =
        started + std::chrono::duration_cast<Clock::duration>(
                      std::chrono::duration<double>(
                          timed ? q.budget_seconds : 0.0));

    // Nodes of size <= 1 inline; subtrees keyed by their two smallest
    // members fan out to the pool.
    TaskResult small;
    {
      Scanner s(G, q.mode, rep.k_min, rep.k_max, q.include_trivial, timed,
                deadline, &expired, &small);
      s.visit_node();  // the empty set
      if (rep.k_max >= 1) {
        for (int e = 0; e < v; ++e) {
          s.add(Elem(e));
          s.visit_node();
          s.remove();
        }
      }
    }

    std::vector<std::pair<int, int>> tasks;
    if (rep.k_max >= 2)
      for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b) tasks.emplace_back(a, b);
    std::vector<TaskResult> buffers(tasks.size());
    std::atomic<std::size_t> next{0};
    const int threads = std::max(
        1, std::min({q.threads, int(tasks.size()) == 0 ? 1 : int(tasks.size()),
                     16}));

    auto worker = [&] {
      while (true) {
        if (timed && Clock::now() >= deadline)
          expired.store(true, std::memory_order_relaxed);
        if (expired.load(std::memory_order_relaxed)) break;
        const std::size_t i = next.fetch_add(1);
        if (i >= tasks.size()) break;
        TaskResult& buf = buffers[i];
        Scanner s(G, q.mode, rep.k_min, rep.k_max, q.include_trivial, timed,
                  deadline, &expired, &buf);
        s.add(Elem(tasks[i].first));
        s.add(Elem(tasks[i].second));
        if (s.violations == 0) s.dfs(tasks[i].second + 1);
      }
    };
    if (!tasks.empty()) {
      if (threads == 1) {
        worker();
      } else {
        std::vector<std::thread> pool;
        pool.reserve(std::size_t(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
      }
    }

    // Deterministic merge in task order.
    CountMap counts = std::move(small.counts);
    rep.results = std::move(small.hits);
    rep.raw_hits = small.raw_hits;
    rep.trivial_hits = small.trivial_hits;
    rep.nodes_visited = small.nodes;
    for (auto& buf : buffers) {
      for (auto& f : buf.hits) rep.results.push_back(std::move(f));
      merge_counts(counts, buf.counts);
      rep.raw_hits += buf.raw_hits;
      rep.trivial_hits += buf.trivial_hits;
      rep.nodes_visited += buf.nodes;
    }
    for (const auto& [key, pc] : counts)
      rep.counts.push_back({pc.first, pc.second});
    rep.exhaustive = !expired.load();
  }

  // Deduplicate: union results connected by the enabled label-level
  // transforms, keep the minimal representative of every class.
  if (!rep.results.empty()) {
    std::map<std::vector<std::uint8_t>, std::size_t> index;
    for (std::size_t i = 0; i < rep.results.size(); ++i)
      index.emplace(rep.results[i].set.mask(), i);
    std::vector<std::size_t> parent(rep.results.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto unite = [&](std::size_t a, std::size_t b) {
      a = find(a);
      b = find(b);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };
    const auto zs = central_involutions(*G);
    for (std::size_t i = 0; i < rep.results.size(); ++i) {
      const Subset& S = rep.results[i].set;
      std::vector<Subset> images;
      if (q.dedup.inversion) images.push_back(S.inverses());
      if (q.dedup.central_translate)
        for (Elem z : zs) images.push_back(S.translated_right(z));
      if (q.dedup.complement) {
        const int ck = v - S.size();
        if (ck >= rep.k_min && ck <= rep.k_max)
          images.push_back(S.complement());
      }
      for (const auto& img : images) {
        auto it = index.find(img.mask());
        if (it != index.end()) unite(i, it->second);
      }
    }
    std::map<std::size_t, std::size_t> best;  // class root -> minimal member
    for (std::size_t i = 0; i < rep.results.size(); ++i) {
      const std::size_t root = find(i);
      auto it = best.find(root);
      if (it == best.end() ||
          rep.results[i].set < rep.results[it->second].set)
        best[root] = i;
    }
    std::vector<FoundSet> kept;
    kept.reserve(best.size());
    for (const auto& [root, i] : best) kept.push_back(std::move(rep.results[i]));
    std::sort(kept.begin(), kept.end(),
              [](const FoundSet& a, const FoundSet& b) {
                return a.set < b.set;
              });
    rep.results = std::move(kept);
  }
  if (q.max_results >= 0 &&
      std::int64_t(rep.results.size()) > q.max_results)
    rep.results.resize(std::size_t(q.max_results));

  rep.elapsed_seconds =
      std::chrono::duration<double>(Clock::now() - started).count();
  return rep;
}

std::vector<Subset> enumerate_maximal_skew(const GroupPtr& G) {
  if (!G) throw InvalidArgument("enumerate_maximal_skew: no group given");
  const int v = G->order();
  if (v > 24)
    throw BudgetExceeded("enumerate_maximal_skew: scans cap at group order 24");
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem g = 1; g < Elem(v); ++g) {
    const Elem gi = G->inv(g);
    if (g < gi) pairs.emplace_back(g, gi);
  }
  std::vector<Subset> out;
  out.reserve(std::size_t(1) << pairs.size());
  for (std::uint32_t bits = 0; bits < (std::uint32_t(1) << pairs.size());
       ++bits) {
    Subset S(G);
    for (std::size_t p = 0; p < pairs.size(); ++p)
      S.insert((bits >> p) & 1 ? pairs[p].second : pairs[p].first);
    if (!regularity::maximal_skew_test(S))
      throw InternalError(
          "one-per-inverse-pair selection failed the maximality test");
    out.push_back(std::move(S));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Every certified sum set of the group within the standard budget, no
// dedup: property checks want each set individually.
SearchReport all_sum_sets(const GroupPtr& G, bool include_trivial) {
  SearchQuery q;
  q.group = G;
  q.mode = SearchMode::sum_set;
  q.include_trivial = include_trivial;
  q.dedup = {false, false, false};
  q.k_max = G->order() <= 16 ? G->order() / 2 : 9;
  return exhaustive_search(q);
}

std::vector<GroupPtr> expand_groups(const std::vector<std::string>& scope) {
  std::vector<GroupPtr> out;
  for (const auto& entry : scope)
    for (const auto& spec : expand_scope(entry)) out.push_back(parse_group(spec));
  if (out.empty()) throw InvalidArgument("property suite: empty scope");
  return out;
}

bool is_cyclic(const FiniteGroup& G) {
  if (G.order() == 1) return true;
  if (!G.is_abelian()) return false;
  for (Elem g = 0; g < Elem(G.order()); ++g)
    if (G.element_order(g) == G.order()) return true;
  return false;
}

std::string describe(const FiniteGroup& G, const Subset& S) {
  std::string out = G.name() + " {";
  bool first = true;
  for (const auto& l : S.labels()) {
    if (!first) out += ",";
    out += l;
    first = false;
  }
  return out + "}";
}

void suite_abelian(PropertyReport& rep, const std::vector<GroupPtr>& groups,
                   bool check_ds) {
  for (const auto& G : groups) {
    if (!G->is_abelian()) {
      rep.notes.push_back("skipped non-abelian " + G->name());
      continue;
    }
    auto found = all_sum_sets(G, false);
    for (const auto& f : found.results) {
      rep.cases_checked++;
      const auto& c = f.classification;
      const bool ok = check_ds ? (c.is_difference_set && c.is_reversible)
                               : c.is_reversible;
      if (!ok)
        rep.witnesses.push_back(
            describe(*G, f.set) +
            (check_ds ? " is not a reversible difference set"
                      : " is not reversible"));
    }
    rep.notes.push_back(G->name() + ": " +
                        std::to_string(found.results.size()) +
                        " nontrivial sum sets");
  }
}

void suite_no_cyclic(PropertyReport& rep,
                     const std::vector<GroupPtr>& groups) {
  for (const auto& G : groups) {
    if (!is_cyclic(*G)) {
      rep.notes.push_back("skipped non-cyclic " + G->name());
      continue;
    }
    auto found = all_sum_sets(G, false);
    rep.cases_checked++;
    for (const auto& f : found.results)
      rep.witnesses.push_back("unexpected cyclic sum set " +
                              describe(*G, f.set));
    rep.notes.push_back(G->name() + ": 0 hits over " +
                        std::to_string(found.nodes_visited) + " nodes");
  }
}

void suite_higher_order(PropertyReport& rep,
                        const std::vector<GroupPtr>& groups) {
  for (const auto& G : groups) {
    auto found = all_sum_sets(G, true);
    for (const auto& f : found.results) {
      const auto& p = *f.classification.params;
      auto X = ring::from_subset(f.set);
      for (int m = 1; m <= 2; ++m) {
        rep.cases_checked += 2;
        if (!(ring::power(X, 2 * m) ==
              ring::sum_set_even_power_closed_form(G, p.k, p.n, m)))
          rep.witnesses.push_back(describe(*G, f.set) + " power " +
                                  std::to_string(2 * m) +
                                  " misses the closed form");
        if (!(ring::power(X, 2 * m + 1) ==
              ring::sum_set_odd_power_closed_form(G, p.k, p.n, m, f.set)))
          rep.witnesses.push_back(describe(*G, f.set) + " power " +
                                  std::to_string(2 * m + 1) +
                                  " misses the closed form");
      }
    }
    rep.notes.push_back(G->name() + ": " +
                        std::to_string(found.results.size()) +
                        " sum sets x powers 2,3,4,5");
  }
}

void suite_triangle(PropertyReport& rep,
                    const std::vector<GroupPtr>& groups) {
  for (const auto& G : groups) {
    const int v = G->order();
    if (v > 12)
      throw BudgetExceeded("rdsss: full subset sweeps cap at group order 12");
    for (std::uint32_t bits = 0; bits < (std::uint32_t(1) << v); ++bits) {
      Subset S(G);
      for (int g = 0; g < v; ++g)
        if ((bits >> g) & 1) S.insert(Elem(g));
      auto c = regularity::classify(S);
      rep.cases_checked++;
      const bool d = c.is_difference_set, s = c.is_sum_set,
                 r = c.is_reversible;
      if ((d && s && !r) || (d && r && !s) || (s && r && !d))
        rep.witnesses.push_back(describe(*G, S) +
                                " breaks the two-imply-the-third rule");
    }
    rep.notes.push_back(G->name() + ": all " +
                        std::to_string(std::uint32_t(1) << v) +
                        " subsets swept");
  }
}

void suite_coset_eq(PropertyReport& rep,
                    const std::vector<GroupPtr>& groups) {
  for (const auto& G : groups) {
    auto found = all_sum_sets(G, true);
    auto normals = subgroups(G, true);
    for (const auto& f : found.results) {
      const auto& p = *f.classification.params;
      for (const auto& N : normals) {
        rep.cases_checked++;
        auto eq = admissibility::verify_coset_equation(f.set, N);
        if (!eq.all_hold || !eq.totals_match)
          rep.witnesses.push_back(describe(*G, f.set) +
                                  " fails the coset equation over N=" +
                                  describe(*G, N));
        auto prof = admissibility::coset_profile(f.set, N);
        const int index = prof.quot.group->order();
        if (index == 2 && !admissibility::index2_check(f.set, N).holds)
          rep.witnesses.push_back(describe(*G, f.set) +
                                  " fails the index-2 square rule");
        if (prof.distinct_values <= 2 &&
            !admissibility::two_value_analysis(f.set, N).all_hold)
          rep.witnesses.push_back(describe(*G, f.set) +
                                  " fails the two-value rules over N=" +
                                  describe(*G, N));
        if (index == 3 && !admissibility::index3_check(f.set, N).holds)
          rep.witnesses.push_back(describe(*G, f.set) +
                                  " fails the index-3 rules");
        if (!admissibility::parity_check(G, N, p.mu).holds)
          rep.witnesses.push_back(describe(*G, f.set) +
                                  " fails the quotient parity rule");
      }
    }
    rep.notes.push_back(G->name() + ": " +
                        std::to_string(found.results.size()) +
                        " sum sets x " + std::to_string(normals.size()) +
                        " normal subgroups");
  }
}

void suite_shds(PropertyReport& rep, const std::vector<GroupPtr>& groups) {
  for (const auto& G : groups) {
    const int q = G->order();
    auto r = constructions::paley_skew_pss(q);
    rep.cases_checked++;
    const auto& c = r.certificate;
    if (!c.is_skew || !c.is_difference_set || c.ds_lambda != (q - 3) / 4 ||
        !c.is_partial_sum_set)
      rep.witnesses.push_back(
          "order " + std::to_string(q) +
          ": quadratic residues are not a skew difference set with the "
          "stated parameters");
  }
}

}  // namespace

PropertyReport property_suite(const std::string& name,
                              const std::vector<std::string>& scope) {
  PropertyReport rep;
  rep.name = name;
  rep.scope = scope;
  auto groups = expand_groups(scope);
  if (name == "abelian-reversible") {
    suite_abelian(rep, groups, false);
  } else if (name == "abelian-is-ds") {
    suite_abelian(rep, groups, true);
  } else if (name == "no-cyclic") {
    suite_no_cyclic(rep, groups);
  } else if (name == "higher-order") {
    suite_higher_order(rep, groups);
  } else if (name == "rdsss") {
    suite_triangle(rep, groups);
  } else if (name == "coset-eq") {
    suite_coset_eq(rep, groups);
  } else if (name == "shds-pss") {
    suite_shds(rep, groups);
  } else {
    throw InvalidArgument("unknown property suite: " + name);
  }
  rep.passed = rep.witnesses.empty();
  return rep;
}

}  // namespace sumset::search
