#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumset/group.hpp"

namespace sumset::regularity {

// Parameters of a (partial) sum set.  lambda is absent for sum sets, where
// the in-set and out-of-set representation counts coincide (= mu).
struct Params {
  std::int64_t v = 0;
  std::int64_t k = 0;
  std::optional<std::int64_t> lambda;
  std::int64_t mu = 0;
  std::int64_t n = 0;      // k^2 - mu*v
  std::int64_t s_inv = 0;  // |S ∩ S^(-1)|

  bool same_shape(const Params& o) const {
    return v == o.v && k == o.k && lambda == o.lambda && mu == o.mu;
  }
  std::string to_string() const;
};

Params sum_set_params(std::int64_t v, std::int64_t k, std::int64_t mu);
Params pss_params(std::int64_t v, std::int64_t k, std::int64_t lambda,
                  std::int64_t mu, std::int64_t s_inv);

// Parameters of the complementary set.  Sum sets map to sum sets; for a
// proper partial sum set the two representation counts trade places
// shifted by v - 2k.
Params complement_params(const Params& p);

// Representation counts of every group element over ordered pairs from S
// (x = y included).
struct Profile {
  GroupPtr group;
  Subset set;
  std::vector<std::int64_t> product_counts;   // a -> #{(x,y) : xy = a}
  std::vector<std::int64_t> quotient_counts;  // a -> #{(x,y) : xy^-1 = a}
};

Profile profile(const Subset& S);

enum class CosetType { type1, type2, neither };
const char* coset_type_name(CosetType t);

struct TypeEntry {
  Elem involution;  // z with N = {1, z}
  CosetType type = CosetType::neither;
};

struct Classification {
  bool is_sum_set = false;
  bool is_partial_sum_set = false;
  bool is_difference_set = false;
  bool is_skew = false;
  bool is_reversible = false;
  bool is_maximal_skew = false;
  // Empty set, a singleton involution-or-identity, or a complement thereof.
  bool is_trivial = false;
  std::optional<Params> params;           // present when is_partial_sum_set
  std::optional<std::int64_t> ds_lambda;  // present when is_difference_set
  // Type with respect to {1, z} for every central involution z.
  std::vector<TypeEntry> type_wrt;
};

Classification classify(const Subset& S);

// The three subsets attached to a target element a:
//   A = {x in S : a = x y^-1 for some y in S}
//   B = {y in S : a = x y^-1 for some x in S}
//   C = {x in S : a = x y   for some y in S}
struct SpecialSubsets {
  Subset A, B, C;
};
SpecialSubsets special_subsets(const Subset& S, Elem a);

// Classifies S against the order-2 central subgroup N = {1, z}: type 1 sets
// miss N and meet every other coset at most once; type 2 sets meet N exactly
// once and every other coset zero or two times.
CosetType type_classify(const Subset& S, const Subset& N);

// S z for a central element z with z^2 = 1.
Subset central_translate(const Subset& S, Elem z);

// Requires S skew; true when every element of order > 2 lies in S ∪ S^(-1).
bool maximal_skew_test(const Subset& S);

}  // namespace sumset::regularity
