#include <algorithm>
#include <vector>

#include "doctest.h"
#include "sumset/constructions.hpp"
#include "sumset/errors.hpp"
#include "sumset/group.hpp"
#include "sumset/regularity.hpp"

using namespace sumset;
using namespace sumset::constructions;
namespace reg = sumset::regularity;

namespace {

// Shorthand for comparing a certified result against frozen parameters.
void check_pss(const ConstructionResult& r, std::int64_t v, std::int64_t k,
               std::int64_t lam, std::int64_t mu) {
  REQUIRE(r.certificate.params.has_value());
  const auto& p = *r.certificate.params;
  CHECK(p.v == v);
  CHECK(p.k == k);
  REQUIRE(p.lambda.has_value());
  CHECK(*p.lambda == lam);
  CHECK(p.mu == mu);
  CHECK(r.certificate.is_partial_sum_set);
  CHECK(r.claimed.v == v);
  CHECK(int(r.set.size()) == int(k));
}

void check_sum_set(const ConstructionResult& r, std::int64_t v,
                   std::int64_t k, std::int64_t mu) {
  REQUIRE(r.certificate.params.has_value());
  const auto& p = *r.certificate.params;
  CHECK(p.v == v);
  CHECK(p.k == k);
  CHECK(!p.lambda.has_value());
  CHECK(p.mu == mu);
  CHECK(r.certificate.is_sum_set);
  CHECK(int(r.set.size()) == int(k));
}

reg::CosetType type_of(const ConstructionResult& r, Elem z) {
  for (const auto& e : r.certificate.type_wrt)
    if (e.involution == z) return e.type;
  return reg::CosetType::neither;
}

}  // namespace

TEST_CASE("canonical skew pickers") {
  SUBCASE("odd groups take the smaller element of each inverse pair") {
    auto C7 = make_cyclic(7);
    auto M = canonical_maximal_skew(C7);
    CHECK(M.elements() == std::vector<Elem>{1, 2, 3});
    CHECK(reg::maximal_skew_test(M));

    auto K = direct_product(make_cyclic(3), make_cyclic(3));
    auto M9 = canonical_maximal_skew(K);
    CHECK(M9.size() == 4);
    CHECK(reg::maximal_skew_test(M9));
  }
  SUBCASE("even order is rejected") {
    CHECK_THROWS_AS(canonical_maximal_skew(make_cyclic(6)), InvalidArgument);
  }
  SUBCASE("even-cyclic picker lands on an initial segment") {
    CHECK(maximal_skew_with_coset_property(4).elements() ==
          std::vector<Elem>{1});
    CHECK(maximal_skew_with_coset_property(6).elements() ==
          std::vector<Elem>{1, 2});
    auto M = maximal_skew_with_coset_property(20);
    CHECK(M.size() == 9);
    CHECK(reg::maximal_skew_test(M));
    // one element of every nontrivial coset of {1, x^10}
    std::vector<int> per(10, 0);
    for (Elem i : M.elements()) per[i % 10]++;
    for (int cid = 1; cid < 10; ++cid) CHECK(per[cid] == 1);
  }
  SUBCASE("odd or tiny arguments are rejected") {
    CHECK_THROWS_AS(maximal_skew_with_coset_property(5), InvalidArgument);
    CHECK_THROWS_AS(maximal_skew_with_coset_property(2), InvalidArgument);
  }
}

TEST_CASE("dihedral sum sets missing the center") {
  SUBCASE("order 8 reproduces the known triple") {
    auto pair = dihedral_type1(4);
    check_sum_set(pair.with_t, 8, 3, 1);
    check_sum_set(pair.with_zt, 8, 3, 1);
    // {x, xt, t} and {x, xt, x^2 t}
    CHECK(pair.with_t.set.elements() == std::vector<Elem>{1, 4, 5});
    CHECK(pair.with_zt.set.elements() == std::vector<Elem>{1, 5, 6});
    CHECK(type_of(pair.with_t, 2) == reg::CosetType::type1);
    CHECK(type_of(pair.with_zt, 2) == reg::CosetType::type1);
    CHECK(pair.with_t.theorem_tag == "dihedral-t1");
    CHECK(pair.with_t.choices.at("canonical") == "true");
  }
  SUBCASE("orders 12 and 16") {
    auto p6 = dihedral_type1(6);
    check_sum_set(p6.with_t, 12, 5, 2);
    CHECK(type_of(p6.with_t, 3) == reg::CosetType::type1);
    auto p8 = dihedral_type1(8);
    check_sum_set(p8.with_t, 16, 7, 3);
    check_sum_set(p8.with_zt, 16, 7, 3);
  }
  SUBCASE("a non-canonical rotation set works") {
    auto C6 = make_cyclic(6);
    auto pair = dihedral_type1(6, Subset::of_indices(C6, {4, 5}));
    check_sum_set(pair.with_t, 12, 5, 2);
    CHECK(pair.with_t.choices.at("canonical") == "false");
  }
  SUBCASE("bad rotation sets are rejected") {
    auto C6 = make_cyclic(6);
    // two elements of one coset of {1, x^3}, none of the other
    CHECK_THROWS_AS(dihedral_type1(6, Subset::of_indices(C6, {1, 4})),
                    InvalidArgument);
    // inverse pair
    CHECK_THROWS_AS(dihedral_type1(6, Subset::of_indices(C6, {1, 5})),
                    InvalidArgument);
    // meets the central subgroup
    CHECK_THROWS_AS(dihedral_type1(6, Subset::of_indices(C6, {2, 3})),
                    InvalidArgument);
    CHECK_THROWS_AS(dihedral_type1(6, Subset::of_indices(make_cyclic(8), {1, 2})),
                    GroupMismatch);
  }
  SUBCASE("odd and tiny orders are rejected") {
    CHECK_THROWS_AS(dihedral_type1(5), InvalidArgument);
    CHECK_THROWS_AS(dihedral_type1(2), InvalidArgument);
  }
}

TEST_CASE("twist construction over odd abelian groups") {
  SUBCASE("cyclic bases") {
    auto r3 = generalized_dihedral_pss(make_cyclic(3));
    check_pss(r3, 6, 2, 0, 1);
    CHECK(r3.certificate.params->s_inv == 1);
    CHECK(r3.set.elements() == std::vector<Elem>{1, 4});  // {x, xt}
    auto r7 = generalized_dihedral_pss(make_cyclic(7));
    check_pss(r7, 14, 6, 2, 3);
    CHECK(r7.certificate.params->s_inv == 3);
  }
  SUBCASE("non-cyclic base") {
    auto A = direct_product(make_cyclic(3), make_cyclic(3));
    auto r = generalized_dihedral_pss(A);
    check_pss(r, 18, 8, 3, 4);
    CHECK(r.certificate.params->s_inv == 4);
  }
  SUBCASE("a supplied maximal skew set works") {
    auto C5 = make_cyclic(5);
    auto r = generalized_dihedral_pss(C5, Subset::of_indices(C5, {1, 2}));
    check_pss(r, 10, 4, 1, 2);
  }
  SUBCASE("bad bases and bad skew sets are rejected") {
    CHECK_THROWS_AS(generalized_dihedral_pss(make_cyclic(4)), InvalidArgument);
    CHECK_THROWS_AS(generalized_dihedral_pss(make_cyclic(1)), InvalidArgument);
    // odd order but not abelian
    CHECK_THROWS_AS(generalized_dihedral_pss(make_frobenius_subgroup(7, 3)),
                    InvalidArgument);
    auto C5 = make_cyclic(5);
    // inverse pair: not skew
    CHECK_THROWS_AS(generalized_dihedral_pss(C5, Subset::of_indices(C5, {1, 4})),
                    InvalidArgument);
    // skew but not maximal
    CHECK_THROWS_AS(generalized_dihedral_pss(C5, Subset::of_indices(C5, {1})),
                    InvalidArgument);
    // attached to the wrong group instance
    CHECK_THROWS_AS(
        generalized_dihedral_pss(C5, Subset::of_indices(make_cyclic(5), {1, 2})),
        GroupMismatch);
  }
}

TEST_CASE("doubling lift") {
  SUBCASE("lifting the order-6 twist set") {
    auto base = generalized_dihedral_pss(make_cyclic(3));
    auto fam = lift2(base.set, 1);
    check_pss(fam.pss, 12, 4, 0, 2);
    CHECK(fam.pss.certificate.params->s_inv == 2);
    check_sum_set(fam.with_identity, 12, 5, 2);
    check_sum_set(fam.with_involution, 12, 5, 2);
    CHECK(type_of(fam.with_identity, 1) == reg::CosetType::type2);
    CHECK(type_of(fam.with_involution, 1) == reg::CosetType::type2);
    CHECK(fam.with_identity.set.contains(0));
    CHECK(fam.with_involution.set.contains(1));
    CHECK(fam.pss.theorem_tag == "lift2");
  }
  SUBCASE("skew sets do not lift") {
    // right shape (7,3,1,2) but inverse overlap 0 instead of 2
    auto p = paley_skew_pss(7);
    CHECK_THROWS_WITH_AS(lift2(p.set, 2),
                         doctest::Contains("inverse overlap"),
                         InvalidArgument);
  }
  SUBCASE("shape mismatches and identity are rejected") {
    auto base = generalized_dihedral_pss(make_cyclic(7));  // (14,6,2,3)
    CHECK_THROWS_AS(lift2(base.set, 2), InvalidArgument);
    auto K4 = direct_product(make_cyclic(2), make_cyclic(2));
    // a sum set, not a proper partial sum set
    CHECK_THROWS_AS(lift2(Subset::of_indices(K4, {1, 2, 3}), 2),
                    InvalidArgument);
    CHECK_THROWS_AS(lift2(Subset::of_indices(make_cyclic(4), {0, 1}), 1),
                    InvalidArgument);
    CHECK_THROWS_AS(lift2(base.set, 0), InvalidArgument);
  }
}

TEST_CASE("type-2 dihedral family") {
  SUBCASE("odd m gives sum sets in Dih(C_m) x C2") {
    auto f3 = dihedral_type2(3);
    check_pss(f3.pss, 12, 4, 0, 2);
    check_sum_set(f3.with_identity, 12, 5, 2);
    check_sum_set(f3.with_involution, 12, 5, 2);
    CHECK(f3.with_identity.theorem_tag == "dihedral-t2");
    CHECK(f3.with_identity.choices.at("m") == "3");
    auto f5 = dihedral_type2(5);
    check_sum_set(f5.with_identity, 20, 9, 4);
    check_sum_set(f5.with_involution, 20, 9, 4);
    CHECK(type_of(f5.with_identity, 1) == reg::CosetType::type2);
  }
  SUBCASE("even m is rejected") {
    CHECK_THROWS_AS(dihedral_type2(4), InvalidArgument);
    CHECK_THROWS_AS(dihedral_type2(1), InvalidArgument);
  }
}

TEST_CASE("double cover family") {
  SUBCASE("order 12 values frozen by hand") {
    auto fam = dstar_sum_set(3);
    check_pss(fam.pss, 12, 4, 0, 2);
    CHECK(fam.pss.certificate.params->s_inv == 2);
    // preimages of {x, xt}: indices i, n+i, 2n+i, 3n+i with n=3, i=1
    CHECK(fam.pss.set.elements() == std::vector<Elem>{1, 4, 7, 10});
    check_sum_set(fam.with_identity, 12, 5, 2);
    check_sum_set(fam.with_involution, 12, 5, 2);
    CHECK(fam.with_involution.set.contains(6));  // t^2
    CHECK(type_of(fam.with_identity, 6) == reg::CosetType::type2);
    CHECK(type_of(fam.with_involution, 6) == reg::CosetType::type2);
    CHECK(fam.pss.theorem_tag == "dstar");
  }
  SUBCASE("orders 20 and 28") {
    auto f5 = dstar_sum_set(5);
    check_pss(f5.pss, 20, 8, 2, 4);
    check_sum_set(f5.with_identity, 20, 9, 4);
    CHECK(type_of(f5.with_identity, 10) == reg::CosetType::type2);
    auto f7 = dstar_sum_set(7);
    check_sum_set(f7.with_identity, 28, 13, 6);
    check_sum_set(f7.with_involution, 28, 13, 6);
  }
  SUBCASE("even n is rejected") {
    CHECK_THROWS_AS(dstar_sum_set(4), InvalidArgument);
  }
}

TEST_CASE("regular-complement coset unions") {
  SUBCASE("one coset in the affine group of GF(3)") {
    auto r = frobenius_coset_pss(make_affine(3), 1);
    check_pss(r, 6, 2, 0, 1);
    CHECK(r.certificate.params->s_inv == 1);
    CHECK(r.theorem_tag == "frob-cosets");
    CHECK(r.choices.at("default_picks") == "true");
  }
  SUBCASE("two cosets plus the complement in the affine group of GF(4)") {
    auto r = frobenius_coset_pss(make_affine(4), 2, true);
    check_pss(r, 12, 9, 7, 6);
  }
  SUBCASE("three cosets in the affine group of GF(5)") {
    auto r = frobenius_coset_pss(make_affine(5), 3);
    check_pss(r, 20, 12, 6, 9);
    CHECK(r.certificate.params->s_inv == 9);
  }
  SUBCASE("parameters do not depend on the representatives") {
    auto aff = make_affine(5);
    for (Elem a = 1; a <= 4; ++a)
      for (Elem b = Elem(a + 1); b <= 4; ++b) {
        auto r = frobenius_coset_pss(aff, 2, false,
                                     std::vector<Elem>{a, b});
        check_pss(r, 20, 8, 2, 4);
        CHECK(r.choices.at("default_picks") == "false");
      }
  }
  SUBCASE("taking everything degenerates to the full group") {
    auto r = frobenius_coset_pss(make_affine(3), 2, true);
    check_sum_set(r, 6, 6, 6);
    CHECK(r.certificate.is_trivial);
  }
  SUBCASE("bad groups and bad picks are rejected") {
    CHECK_THROWS_AS(frobenius_coset_pss(make_cyclic(6), 1), InvalidArgument);
    // factorization present but the complement is smaller than regular
    CHECK_THROWS_WITH_AS(frobenius_coset_pss(make_frobenius_subgroup(7, 3), 1),
                         doctest::Contains("not regular"), InvalidArgument);
    auto aff = make_affine(5);
    CHECK_THROWS_AS(frobenius_coset_pss(aff, 0), InvalidArgument);
    CHECK_THROWS_AS(frobenius_coset_pss(aff, 5), InvalidArgument);
    // duplicate, identity, and non-kernel representatives
    CHECK_THROWS_AS(
        frobenius_coset_pss(aff, 2, false, std::vector<Elem>{1, 1}),
        InvalidArgument);
    CHECK_THROWS_AS(
        frobenius_coset_pss(aff, 1, false, std::vector<Elem>{0}),
        InvalidArgument);
    CHECK_THROWS_AS(
        frobenius_coset_pss(aff, 1, false, std::vector<Elem>{Elem(5)}),
        InvalidArgument);
  }
}

TEST_CASE("affine doubling sum sets") {
  SUBCASE("small prime powers") {
    auto f3 = aff_times_c2_sum_set(3);
    check_sum_set(f3.with_identity, 12, 5, 2);
    check_sum_set(f3.with_involution, 12, 5, 2);
    CHECK(f3.with_identity.theorem_tag == "aff-x-c2");
    auto f4 = aff_times_c2_sum_set(4);
    check_sum_set(f4.with_identity, 24, 7, 2);
    auto f5 = aff_times_c2_sum_set(5);
    check_sum_set(f5.with_identity, 40, 9, 2);
    check_pss(f5.pss, 40, 8, 0, 2);
    auto f7 = aff_times_c2_sum_set(7);
    check_sum_set(f7.with_involution, 84, 13, 2);
  }
  SUBCASE("non prime powers and tiny q are rejected") {
    CHECK_THROWS_AS(aff_times_c2_sum_set(6), InvalidArgument);
    CHECK_THROWS_AS(aff_times_c2_sum_set(2), InvalidArgument);
  }
}

TEST_CASE("slope-subgroup sum sets") {
  SUBCASE("frozen parameter table") {
    check_sum_set(frobenius_subgroup_sum_set(5, 4), 20, 9, 4);
    check_sum_set(frobenius_subgroup_sum_set(7, 3), 21, 13, 8);
    check_sum_set(frobenius_subgroup_sum_set(7, 6), 42, 13, 4);
    check_sum_set(frobenius_subgroup_sum_set(9, 4), 36, 17, 8);
  }
  SUBCASE("the underlying partial sum sets") {
    check_pss(frobenius_subgroup_pss(5, 4), 20, 8, 2, 4);
    auto r = frobenius_subgroup_pss(7, 3);
    check_pss(r, 21, 12, 6, 8);
    CHECK(r.theorem_tag == "frob-subgroup");
    CHECK(r.choices.at("intercepts") == "1,2,3,5");
  }
  SUBCASE("d = 2 degenerates to a trivial shape") {
    auto r = frobenius_subgroup_sum_set(5, 2);
    check_sum_set(r, 10, 9, 8);
    CHECK(r.certificate.is_trivial);
  }
  SUBCASE("one or three picks per orbit stay partial sum sets but "
          "cannot be completed") {
    for (int c : {1, 3}) {
      auto r = frobenius_subgroup_pss(7, 3, c);
      const std::int64_t t = c * 2;
      check_pss(r, 21, c * 6, c * (t - 1), c * t);
      Subset S = r.set;
      S.insert(FiniteGroup::identity);
      CHECK(!reg::classify(S).is_sum_set);
    }
  }
  SUBCASE("explicit picks keep the parameters") {
    auto r = frobenius_subgroup_pss(7, 3, 2, std::vector<int>{2, 4, 5, 6});
    check_pss(r, 21, 12, 6, 8);
    CHECK(r.choices.at("default_picks") == "false");
    check_sum_set(frobenius_subgroup_sum_set(7, 3, std::vector<int>{2, 4, 5, 6}),
                  21, 13, 8);
  }
  SUBCASE("invalid arguments are rejected") {
    CHECK_THROWS_AS(frobenius_subgroup_pss(7, 4), InvalidArgument);
    CHECK_THROWS_AS(frobenius_subgroup_pss(7, 1), InvalidArgument);
    CHECK_THROWS_AS(frobenius_subgroup_pss(7, 3, 0), InvalidArgument);
    CHECK_THROWS_AS(frobenius_subgroup_pss(7, 3, 4), InvalidArgument);
    // three intercepts from one orbit, one from the other
    CHECK_THROWS_AS(frobenius_subgroup_pss(7, 3, 2, std::vector<int>{1, 2, 4, 3}),
                    InvalidArgument);
    CHECK_THROWS_AS(frobenius_subgroup_pss(7, 3, 2, std::vector<int>{0, 1, 3, 5}),
                    InvalidArgument);
    CHECK_THROWS_AS(frobenius_subgroup_pss(7, 3, 2, std::vector<int>{1, 1, 3, 5}),
                    InvalidArgument);
  }
}

TEST_CASE("quadratic-residue skew sets") {
  SUBCASE("small fields") {
    auto r7 = paley_skew_pss(7);
    check_pss(r7, 7, 3, 1, 2);
    CHECK(r7.set.elements() == std::vector<Elem>{1, 2, 4});
    CHECK(r7.certificate.is_skew);
    CHECK(r7.certificate.is_maximal_skew);
    auto r11 = paley_skew_pss(11);
    check_pss(r11, 11, 5, 2, 3);
    CHECK(r11.certificate.is_skew);
    auto r27 = paley_skew_pss(27);
    check_pss(r27, 27, 13, 6, 7);
    CHECK(r27.certificate.is_skew);
    CHECK(r27.theorem_tag == "paley");
  }
  SUBCASE("wrong residue classes are rejected") {
    CHECK_THROWS_AS(paley_skew_pss(5), InvalidArgument);
    CHECK_THROWS_AS(paley_skew_pss(9), InvalidArgument);
    CHECK_THROWS_AS(paley_skew_pss(13), InvalidArgument);
  }
}

TEST_CASE("projection back down") {
  SUBCASE("round trip through the type-2 dihedral family") {
    auto fam = dihedral_type2(5);
    auto N = Subset::of_indices(fam.with_identity.group, {0, 1});
    auto down = project2(fam.with_identity.set, N);
    check_pss(down, 10, 4, 1, 2);
    // the projected set is the twist set again, index for index
    auto base = generalized_dihedral_pss(make_cyclic(5));
    CHECK(down.set.elements() == base.set.elements());
    CHECK(down.theorem_tag == "project2");
  }
  SUBCASE("the double cover projects onto the dihedral twist set") {
    auto fam = dstar_sum_set(5);
    auto N = Subset::of_indices(fam.with_identity.group, {0, 10});
    auto down = project2(fam.with_involution.set, N);
    check_pss(down, 10, 4, 1, 2);
  }
  SUBCASE("type-1 and non-sum-set inputs are rejected") {
    auto pair = dihedral_type1(6);
    auto N = Subset::of_indices(pair.with_t.group, {0, 3});
    CHECK_THROWS_WITH_AS(project2(pair.with_t.set, N),
                         doctest::Contains("type1"), InvalidArgument);
    // type-2 meeting pattern without constant representation counts
    auto C8 = make_cyclic(8);
    auto N8 = Subset::of_indices(C8, {0, 4});
    CHECK_THROWS_WITH_AS(project2(Subset::of_indices(C8, {1, 4, 5}), N8),
                         doctest::Contains("not a sum set"), InvalidArgument);
    // the trivial type-2 sum set {z} has no image
    auto C4 = make_cyclic(4);
    CHECK_THROWS_AS(project2(Subset::of_indices(C4, {2}),
                             Subset::of_indices(C4, {0, 2})),
                    InvalidArgument);
  }
}

TEST_CASE("lift and projection invert each other on certified families") {
  for (int m : {3, 5, 7}) {
    auto fam = dihedral_type2(m);
    for (const ConstructionResult* r :
         {&fam.with_identity, &fam.with_involution}) {
      auto N = Subset::of_indices(r->group, {0, 1});
      auto down = project2(r->set, N);
      auto up = lift2(down.set, (m - 1) / 2);
      CHECK(up.pss.set.elements() == fam.pss.set.elements());
    }
  }
}
