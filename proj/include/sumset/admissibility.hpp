#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumset/group.hpp"
#include "sumset/regularity.hpp"

namespace sumset::admissibility {

bool is_perfect_square(std::int64_t n, std::int64_t* root = nullptr);

// A rule that excludes (or cautions against) a parameter triple, together
// with the mathematical fact it rests on and the instance-specific numbers.
struct Rejection {
  std::string rule;
  std::string citation;
  std::string detail;
};

struct AdmissibilityVerdict {
  std::int64_t v = 0, k = 0, mu = 0;
  std::int64_t n = 0;      // k^2 - mu*v
  std::int64_t s_inv = 0;  // k^2 - mu*(v-1), the forced |S ∩ S^(-1)|
  bool admissible = false;
  std::vector<Rejection> rejections;
  std::vector<Rejection> warnings;
};

// Pure arithmetic on (v, k, mu): the forced inverse-overlap must land in
// [0, k].  Requires v > k > mu >= 0.
AdmissibilityVerdict check_admissible(std::int64_t v, std::int64_t k,
                                      std::int64_t mu);

// Additional rejections when the target group is abelian.  Trivial shapes
// (k <= 1 or k >= v-1) pass: the excluded-sum-set theorems speak about
// nontrivial sets only.
std::vector<Rejection> abelian_filters(std::int64_t v, std::int64_t k,
                                       std::int64_t mu);

// How S meets the cosets of a normal subgroup N: X[alpha] = |S ∩ N_alpha|,
// indexed by the quotient group element alpha.
struct CosetProfile {
  GroupPtr group;
  Subset subgroup;
  Quotient quot;
  std::vector<std::int64_t> X;
  int distinct_values = 0;
};

CosetProfile coset_profile(const Subset& S, const Subset& N);

// One instance of the coset-mixing equation
//   sum_alpha X_alpha * X_{alpha^-1 beta} = mu*o(N) + (beta = 1 ? n : 0).
struct CosetEquationLine {
  Elem beta = 0;
  std::int64_t lhs = 0, rhs = 0;
  bool holds = false;
};

struct CosetEquationReport {
  std::vector<std::int64_t> X;
  std::int64_t mu = 0, n = 0;
  std::vector<CosetEquationLine> lines;
  bool all_hold = false;
  // Summing the right-hand sides over beta must reproduce
  // mu*(o(G)-1) + s_inv.
  bool totals_match = false;
};

// Requires S to classify as a sum set and N to be normal.
CosetEquationReport verify_coset_equation(const Subset& S, const Subset& N);

// One labeling of a two-valued coset profile: M is the coset class carrying
// value m, every other coset carries l.  Both labelings of a two-valued
// profile are reported since the theory constrains each.
struct TwoValueLabeling {
  Subset M;                      // subset of the quotient group
  std::int64_t m = 0, l = 0;
  bool M_is_sum_set = false;     // must hold
  std::int64_t omega = 0;        // representation count of M in the quotient
  std::int64_t c1 = 0;           // |M ∩ M^(-1)|
  bool product_identity = false; // n = (c1 - omega)(m - l)^2
  bool subgroup_iff_extreme = false;  // M subgroup <=> M = {1} or M = H
  // Extra constraints when M = {1}: l = (k ± sqrt(n))/o(H) with n square,
  // and the complementary set takes the opposite sign.
  bool singleton_case = false;
  bool n_square = false;
  bool plus_sign = false, minus_sign = false;  // which signs reproduce l
  bool complement_opposite_sign = true;
  bool holds = false;
};

struct TwoValueReport {
  std::vector<std::int64_t> X;
  std::int64_t k = 0, mu = 0, n = 0;
  bool uniform = false;  // single-valued profile: M = H forces n = 0 and
  bool uniform_identities = false;  // m = mu*o(N)/k
  std::vector<TwoValueLabeling> labelings;
  bool all_hold = false;
};

// Requires S to classify as a sum set and the profile over N to take at
// most two distinct values.
TwoValueReport two_value_analysis(const Subset& S, const Subset& N);

// Over an index-2 normal subgroup, n is a perfect square; odd k forces it
// nonzero.
struct Index2Verdict {
  std::int64_t n = 0;
  bool n_square = false;
  bool k_odd = false;
  bool holds = false;
};
Index2Verdict index2_check(const Subset& S, const Subset& N);

// Values-level arithmetic for a three-valued profile over an index-3 normal
// subgroup: 3 | k, X_1 = k/3, and mu*o(N) - k^2/3 = x^2 with
// x = X_h - k/3 nonzero (equivalently n = -3x^2).
struct Index3Values {
  bool k_multiple_of_3 = false;
  bool balanced = false;  // X_h + X_{h^2} = 2 X_1 and X_1 = k/3
  std::int64_t x = 0;
  bool n_form = false;  // mu*o(N) - k^2/3 = x^2, x != 0
  bool holds = false;
};
Index3Values index3_values(std::int64_t k, std::int64_t X1, std::int64_t Xh,
                           std::int64_t Xh2, std::int64_t mu, std::int64_t oN);

struct Index3Verdict {
  bool three_valued = false;
  // Profiles with at most two values route to the two-value analysis.
  std::optional<TwoValueReport> routed;
  std::optional<Index3Values> values;
  bool holds = false;
};
Index3Verdict index3_check(const Subset& S, const Subset& N);

// If the quotient G/N has a central element that is not a square, then
// mu*o(N) must be even for any sum set in G.
struct ParityVerdict {
  bool filter_active = false;
  std::optional<std::string> witness;  // label of a central non-square
  bool holds = true;
};
ParityVerdict parity_check(const GroupPtr& G, const Subset& N,
                           std::int64_t mu);

}  // namespace sumset::admissibility
