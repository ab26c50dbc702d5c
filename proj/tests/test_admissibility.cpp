#include <algorithm>

#include "doctest.h"
#include "sumset/admissibility.hpp"
#include "sumset/group.hpp"
#include "sumset/regularity.hpp"

using namespace sumset;
using namespace sumset::admissibility;

namespace {

bool has_rule(const std::vector<Rejection>& rs, const std::string& rule) {
  return std::any_of(rs.begin(), rs.end(),
                     [&](const Rejection& r) { return r.rule == rule; });
}

// A (16,6,2) sum set in C4 x C4: the union of both factor lines minus the
// identity.  Reversible, and a difference set with the same parameters.
Subset menon_16_6_2() {
  GroupPtr G = direct_product(make_cyclic(4), make_cyclic(4));
  return Subset::of_indices(G, {1, 2, 3, 4, 8, 12});
}

}  // namespace

TEST_CASE("inverse-overlap arithmetic separates parameter triples") {
  AdmissibilityVerdict a = check_admissible(8, 3, 1);
  CHECK(a.admissible);
  CHECK(a.s_inv == 2);
  CHECK(a.n == 1);
  CHECK(a.rejections.empty());
  CHECK(a.warnings.empty());

  AdmissibilityVerdict b = check_admissible(12, 5, 2);
  CHECK(b.admissible);
  CHECK(b.s_inv == 3);
  CHECK(b.n == 1);

  AdmissibilityVerdict c = check_admissible(10, 4, 1);
  CHECK(!c.admissible);
  CHECK(c.s_inv == 7);
  CHECK(has_rule(c.rejections, "inverse-overlap-range"));

  CHECK_THROWS_AS(check_admissible(3, 3, 0), InvalidArgument);
  CHECK_THROWS_AS(check_admissible(8, 3, 3), InvalidArgument);
  CHECK_THROWS_AS(check_admissible(8, 3, -1), InvalidArgument);
}

TEST_CASE("warnings flag above-half sizes and non-square n") {
  AdmissibilityVerdict big = check_admissible(8, 5, 3);
  CHECK(big.admissible);
  CHECK(big.s_inv == 4);
  CHECK(has_rule(big.warnings, "above-half-order"));

  AdmissibilityVerdict ns = check_admissible(7, 3, 1);
  CHECK(ns.admissible);
  CHECK(ns.n == 2);
  CHECK(has_rule(ns.warnings, "n-square-cited"));
}

TEST_CASE("complementary parameters stay admissible together") {
  for (std::int64_t v = 3; v <= 30; ++v) {
    for (std::int64_t k = 1; k < v; ++k) {
      for (std::int64_t mu = 0; mu < k; ++mu) {
        AdmissibilityVerdict a = check_admissible(v, k, mu);
        if (!a.admissible) continue;
        regularity::Params p = regularity::sum_set_params(v, k, mu);
        regularity::Params q = regularity::complement_params(p);
        AdmissibilityVerdict b = check_admissible(q.v, q.k, q.mu);
        CHECK(b.admissible);
        CHECK(b.s_inv == a.s_inv + v - 2 * k);
        CHECK(b.n == a.n);
      }
    }
  }
}

TEST_CASE("abelian filters reject by parity, order, and the shape of n") {
  CHECK(has_rule(abelian_filters(8, 3, 1), "mu-parity-abelian"));
  CHECK(has_rule(abelian_filters(15, 4, 2), "odd-order-abelian"));
  CHECK(has_rule(abelian_filters(16, 4, 1), "n-zero-abelian"));
  CHECK(has_rule(abelian_filters(14, 4, 2), "n-square-abelian"));

  // Trivial shapes are realizable in any group and escape the filters.
  CHECK(abelian_filters(15, 1, 0).empty());
  CHECK(abelian_filters(15, 14, 13).empty());

  // (16,6,2) survives every filter: it is realized in C4 x C4.
  CHECK(abelian_filters(16, 6, 2).empty());
}

TEST_CASE("coset intersections over the center of the dihedral group") {
  GroupPtr G = make_dihedral(4);
  Subset S = Subset::of_labels(G, {"x", "xt", "t"});
  Subset Z = Subset::of_labels(G, {"1", "x2"});

  CosetProfile pr = coset_profile(S, Z);
  CHECK(pr.X == std::vector<std::int64_t>{0, 1, 1, 1});
  CHECK(pr.distinct_values == 2);

  // A set inside N is supported on the trivial coset only.
  CosetProfile inside = coset_profile(Subset::of_labels(G, {"x2"}), Z);
  CHECK(inside.X == std::vector<std::int64_t>{1, 0, 0, 0});

  GroupPtr D3 = make_dihedral(3);
  CHECK_THROWS_AS(
      coset_profile(Subset(D3), Subset::of_labels(D3, {"1", "t"})),
      InvalidArgument);  // not normal
  CHECK_THROWS_AS(coset_profile(S, Subset(make_cyclic(2))), GroupMismatch);
}

TEST_CASE("coset-mixing equations hold for the (8,3,1) sum set") {
  GroupPtr G = make_dihedral(4);
  Subset S = Subset::of_labels(G, {"x", "xt", "t"});
  Subset Z = Subset::of_labels(G, {"1", "x2"});

  CosetEquationReport r = verify_coset_equation(S, Z);
  CHECK(r.all_hold);
  CHECK(r.totals_match);
  REQUIRE(r.lines.size() == 4);
  CHECK(r.lines[0].beta == FiniteGroup::identity);
  CHECK(r.lines[0].lhs == 3);
  CHECK(r.lines[0].rhs == 3);
  for (std::size_t i = 1; i < 4; ++i) {
    CHECK(r.lines[i].lhs == 2);
    CHECK(r.lines[i].rhs == 2);
  }

  // N = {1} degenerates to the definition; N = G to k^2 = mu*v + n.
  CHECK(verify_coset_equation(S, Subset::of_labels(G, {"1"})).all_hold);
  CosetEquationReport whole = verify_coset_equation(S, Subset::full(G));
  CHECK(whole.all_hold);
  CHECK(whole.lines.size() == 1);
  CHECK(whole.lines[0].lhs == 9);

  CHECK_THROWS_AS(
      verify_coset_equation(Subset::of_indices(make_cyclic(5), {1}),
                            Subset::of_indices(make_cyclic(5), {0})),
      InvalidArgument);  // not a sum set
}

TEST_CASE("coset equations hold over every normal subgroup of known hosts") {
  struct Host {
    Subset S;
  };
  GroupPtr D4 = make_dihedral(4);
  const Subset sets[] = {
      Subset::of_labels(D4, {"x", "xt", "t"}),
      menon_16_6_2(),
  };
  for (const Subset& S : sets) {
    for (const Subset& N : subgroups(S.group(), /*normal_only=*/true)) {
      CosetEquationReport r = verify_coset_equation(S, N);
      CHECK(r.all_hold);
      CHECK(r.totals_match);
    }
  }
}

TEST_CASE("two-value analysis of the (8,3,1) set over the center") {
  GroupPtr G = make_dihedral(4);
  Subset S = Subset::of_labels(G, {"x", "xt", "t"});
  Subset Z = Subset::of_labels(G, {"1", "x2"});

  TwoValueReport r = two_value_analysis(S, Z);
  CHECK(!r.uniform);
  CHECK(r.all_hold);
  REQUIRE(r.labelings.size() == 2);
  for (const TwoValueLabeling& lab : r.labelings) {
    CHECK(lab.M_is_sum_set);
    CHECK(lab.product_identity);
    CHECK(lab.subgroup_iff_extreme);
    if (lab.singleton_case) {
      // M = {trivial coset}: l = (3 + 1)/4 picks the plus sign; the
      // complement picks minus.
      CHECK(lab.m == 0);
      CHECK(lab.l == 1);
      CHECK(lab.n_square);
      CHECK(lab.plus_sign);
      CHECK(!lab.minus_sign);
      CHECK(lab.complement_opposite_sign);
      CHECK(lab.omega == 0);
      CHECK(lab.c1 == 1);
    } else {
      CHECK(lab.M.size() == 3);
      CHECK(lab.omega == 2);
      CHECK(lab.c1 == 3);
    }
  }
}

TEST_CASE("two-value analysis: uniform, empty, and over-split profiles") {
  GroupPtr G = make_dihedral(4);
  Subset Z = Subset::of_labels(G, {"1", "x2"});

  TwoValueReport whole = two_value_analysis(Subset::full(G), Z);
  CHECK(whole.uniform);
  CHECK(whole.uniform_identities);
  CHECK(whole.all_hold);

  TwoValueReport empty = two_value_analysis(Subset(G), Z);
  CHECK(empty.uniform);
  CHECK(empty.all_hold);

  // The two-line sum set meets the cosets of {(0,0),(2,0)} in three sizes.
  Subset M = menon_16_6_2();
  Subset N2 = Subset::of_indices(M.group(), {0, 8});
  CHECK_THROWS_AS(two_value_analysis(M, N2), InvalidArgument);
}

TEST_CASE("two-value analysis of the two-line set over a factor line") {
  Subset S = menon_16_6_2();
  Subset N = Subset::of_indices(S.group(), {0, 4, 8, 12});  // first line
  TwoValueReport r = two_value_analysis(S, N);
  CHECK(r.X == std::vector<std::int64_t>{3, 1, 1, 1});
  CHECK(r.all_hold);
  for (const TwoValueLabeling& lab : r.labelings) {
    if (lab.singleton_case) {
      // l = (6 - 2)/4 = 1: the minus sign, with plus on the complement.
      CHECK(lab.minus_sign);
      CHECK(!lab.plus_sign);
      CHECK(lab.complement_opposite_sign);
    }
  }
}

TEST_CASE("index-2 verdicts: odd k forces a positive square n") {
  GroupPtr G = make_dihedral(4);
  Subset S = Subset::of_labels(G, {"x", "xt", "t"});
  Subset R = Subset::of_labels(G, {"1", "x", "x2", "x3"});  // rotations

  Index2Verdict v = index2_check(S, R);
  CHECK(v.n == 1);
  CHECK(v.n_square);
  CHECK(v.k_odd);
  CHECK(v.holds);

  Index2Verdict whole = index2_check(Subset::full(G), R);
  CHECK(whole.n == 0);
  CHECK(whole.n_square);
  CHECK(!whole.k_odd);
  CHECK(whole.holds);

  CHECK_THROWS_AS(index2_check(S, Subset::of_labels(G, {"1", "x2"})),
                  InvalidArgument);  // index 4
}

TEST_CASE("index-3 arithmetic on explicit intersection values") {
  // k = 3 split as (1, 2, 0) with mu*o(N) = 4: x = 1 and the quadratic
  // relation mu*o(N) - k^2/3 = x^2 holds.
  Index3Values good = index3_values(3, 1, 2, 0, 1, 4);
  CHECK(good.k_multiple_of_3);
  CHECK(good.balanced);
  CHECK(good.x == 1);
  CHECK(good.n_form);
  CHECK(good.holds);

  CHECK(!index3_values(4, 1, 2, 1, 1, 4).k_multiple_of_3);
  CHECK(!index3_values(3, 1, 1, 1, 1, 4).n_form);    // x = 0
  CHECK(!index3_values(3, 0, 2, 1, 1, 4).balanced);  // X1 != k/3
  CHECK(!index3_values(6, 2, 3, 1, 14, 1).n_form);   // 14 - 12 = 2 != 1
}

TEST_CASE("index-3 check routes two-valued profiles to the coset analysis") {
  GroupPtr G = make_cyclic(6);
  Subset S = Subset::of_indices(G, {1, 2, 3, 4, 5});  // trivial (6,5,4)
  Subset N = Subset::of_indices(G, {0, 3});
  Index3Verdict v = index3_check(S, N);
  CHECK(!v.three_valued);
  REQUIRE(v.routed.has_value());
  CHECK(v.routed->all_hold);
  CHECK(v.holds);

  CHECK_THROWS_AS(index3_check(S, Subset::of_indices(G, {0, 2, 4})),
                  InvalidArgument);  // index 2
}

TEST_CASE("central non-squares in the quotient force even mu * o(N)") {
  GroupPtr C4 = make_cyclic(4);
  Subset trivial4 = Subset::of_indices(C4, {0});
  ParityVerdict active = parity_check(C4, trivial4, 1);
  CHECK(active.filter_active);
  CHECK(active.witness.has_value());
  CHECK(!active.holds);
  CHECK(parity_check(C4, trivial4, 2).holds);

  // Odd-order quotients square onto everything: the filter is vacuous.
  GroupPtr C3 = make_cyclic(3);
  ParityVerdict vac = parity_check(C3, Subset::of_indices(C3, {0}), 1);
  CHECK(!vac.filter_active);
  CHECK(vac.holds);

  // Both central elements of the dihedral group of order 8 are squares, so
  // mu = 1 stays possible there (and indeed (8,3,1) exists).
  GroupPtr D4 = make_dihedral(4);
  ParityVerdict d4 = parity_check(D4, Subset::of_labels(D4, {"1"}), 1);
  CHECK(!d4.filter_active);
  CHECK(d4.holds);

  // Trivial quotient: vacuous.
  CHECK(parity_check(C4, Subset::full(C4), 1).holds);
}

TEST_CASE("index checks never fail on verified sum sets") {
  const Subset sets[] = {
      Subset::of_labels(make_dihedral(4), {"x", "xt", "t"}),
      menon_16_6_2(),
  };
  for (const Subset& S : sets) {
    regularity::Classification c = regularity::classify(S);
    REQUIRE(c.is_sum_set);
    for (const Subset& N : subgroups(S.group(), /*normal_only=*/true)) {
      const std::size_t index = S.group()->order() / N.size();
      if (index == 2) CHECK(index2_check(S, N).holds);
      if (index == 3) CHECK(index3_check(S, N).holds);
      ParityVerdict pv = parity_check(S.group(), N, c.params->mu);
      CHECK(pv.holds);
    }
  }
}
