#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sumset/group.hpp"
#include "sumset/regularity.hpp"

namespace sumset::search {

enum class SearchMode { sum_set, pss, maximal_skew };

const char* search_mode_name(SearchMode m);
SearchMode parse_search_mode(const std::string& name);

// Label-level equivalences collapsed in the result list.  Counting is
// always done before deduplication.
struct DedupFlags {
  bool complement = true;         // S and G ∖ S (when both sizes are in range)
  bool central_translate = true;  // S and Sz for central involutions z
  bool inversion = true;          // S and S^(-1)
};

struct SearchQuery {
  GroupPtr group;
  int k_min = 1;
  int k_max = -1;  // -1: the default cap, floor(v / 2)
  SearchMode mode = SearchMode::sum_set;
  DedupFlags dedup;
  bool include_trivial = false;
  std::int64_t max_results = -1;  // -1: unlimited
  double budget_seconds = -1;     // -1: unlimited
  int threads = 1;
};

struct FoundSet {
  Subset set;
  regularity::Classification classification;
};

struct ParamCount {
  regularity::Params params;
  std::int64_t count = 0;  // raw certified hits, before deduplication
};

struct SearchReport {
  SearchQuery query;
  int k_min = 0, k_max = 0;            // the effective range scanned
  std::vector<FoundSet> results;       // deduplicated, sorted canonically
  std::vector<ParamCount> counts;      // per parameter shape, nontrivial only
  std::int64_t raw_hits = 0;           // total nontrivial certified hits
  std::int64_t trivial_hits = 0;
  std::int64_t nodes_visited = 0;
  bool exhaustive = true;              // whole space covered within budget
  double elapsed_seconds = 0;
};

// Scans every subset of the group with size in the query's range,
// maintaining representation counts incrementally and re-certifying every
// hit from a fresh profile.  Hard limits: group order <= 24, and k_max <= 9
// once the order exceeds 16.  A blown time budget returns the partial
// report with exhaustive = false.
SearchReport exhaustive_search(const SearchQuery& q);

// All maximal skew sets: one element out of every inverse pair of
// elements of order > 2.  There are exactly 2^(#pairs), each verified.
// Requires group order <= 24.
std::vector<Subset> enumerate_maximal_skew(const GroupPtr& G);

struct PropertyReport {
  std::string name;
  std::vector<std::string> scope;
  std::int64_t cases_checked = 0;
  bool passed = true;
  std::vector<std::string> witnesses;  // failing cases, empty when passed
  std::vector<std::string> notes;      // per-group coverage summaries
};

// Named empirical sweeps over every certified sum set (or subset) of the
// groups in scope:
//   abelian-reversible  every abelian sum set equals its inverses
//   abelian-is-ds       every abelian sum set is a reversible difference set
//   no-cyclic           cyclic groups admit no nontrivial sum sets
//   higher-order        group-ring powers match the closed forms
//   rdsss               any two of {difference set, sum set, reversible}
//                       force the third (full subset sweep, order <= 12)
//   coset-eq            coset-sum equations and the quotient-profile
//                       theorems across all normal subgroups
//   shds-pss            quadratic-residue sets are skew difference sets
//                       with the partial-sum-set parameters
PropertyReport property_suite(const std::string& name,
                              const std::vector<std::string>& scope);

}  // namespace sumset::search
