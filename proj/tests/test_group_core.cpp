#include <algorithm>
#include <set>

#include "doctest.h"
#include "sumset/field.hpp"
#include "sumset/group.hpp"
#include "sumset/group_spec.hpp"

using namespace sumset;

namespace {

std::vector<Elem> flat_table(const FiniteGroup& g) {
  std::vector<Elem> out;
  out.reserve(std::size_t(g.order()) * g.order());
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) out.push_back(g.mul(Elem(a), Elem(b)));
  return out;
}

}  // namespace

TEST_CASE("cyclic groups") {
  auto c1 = make_cyclic(1);
  CHECK_EQ(c1->order(), 1);
  CHECK_EQ(c1->label(0), "1");

  auto c4 = make_cyclic(4);
  CHECK_EQ(c4->order(), 4);
  std::vector<Elem> inv;
  for (int i = 0; i < 4; ++i) inv.push_back(c4->inv(Elem(i)));
  CHECK_EQ(inv, std::vector<Elem>{0, 3, 2, 1});
  CHECK(c4->is_abelian());

  auto c12 = make_cyclic(12);
  CHECK_EQ(c12->element_order(c12->element_of_label("x2")), 6);
  CHECK_EQ(c12->label(5), "x5");

  CHECK_THROWS_AS(make_cyclic(0), InvalidArgument);
  CHECK_THROWS_AS(make_cyclic(5000), InvalidArgument);
}

TEST_CASE("dihedral groups") {
  auto d4 = make_dihedral(4);
  CHECK_EQ(d4->order(), 8);
  CHECK_EQ(d4->labels(), std::vector<std::string>{"1", "x", "x2", "x3", "t",
                                                  "xt", "x2t", "x3t"});
  // (xt) * x = t: the reflection absorbs the rotation from the right.
  Elem xt = d4->element_of_label("xt");
  Elem x = d4->element_of_label("x");
  CHECK_EQ(d4->mul(xt, x), d4->element_of_label("t"));
  CHECK_EQ(d4->center_elements(), std::vector<Elem>{0, 2});
  CHECK_FALSE(d4->is_abelian());
  CHECK_EQ(d4->element_order(xt), 2);

  auto d3 = make_dihedral(3);
  CHECK_EQ(d3->center_elements(), std::vector<Elem>{0});

  CHECK_THROWS_AS(make_dihedral(2), InvalidArgument);
}

TEST_CASE("generalized dihedral groups") {
  auto a = make_cyclic(3);
  auto dih = make_generalized_dihedral(a);
  auto d3 = make_dihedral(3);
  CHECK_EQ(flat_table(*dih), flat_table(*d3));

  auto c5 = make_cyclic(5);
  CHECK_EQ(make_generalized_dihedral(c5)->order(), 10);

  auto a33 = direct_product(make_cyclic(3), make_cyclic(3));
  auto dih33 = make_generalized_dihedral(a33);
  CHECK_EQ(dih33->order(), 18);
  for (int g = 9; g < 18; ++g) CHECK_EQ(dih33->element_order(Elem(g)), 2);

  CHECK_THROWS_AS(make_generalized_dihedral(make_dihedral(3)), InvalidArgument);
}

TEST_CASE("dstar groups") {
  auto g = make_dstar(3);
  CHECK_EQ(g->order(), 12);
  CHECK_EQ(g->center_elements(), std::vector<Elem>{0, 6});
  CHECK_EQ(g->label(6), "t2");
  CHECK_EQ(g->element_order(g->element_of_label("t")), 4);
  CHECK_EQ(g->element_order(g->element_of_label("xt")), 4);

  auto g5 = make_dstar(5);
  auto q = quotient(g5, Subset::of_labels(g5, {"1", "t2"}));
  CHECK_EQ(q.group->order(), 10);
  CHECK_FALSE(q.group->is_abelian());

  CHECK_THROWS_AS(make_dstar(4), InvalidArgument);
  CHECK_THROWS_AS(make_dstar(1), InvalidArgument);
}

TEST_CASE("finite fields") {
  auto f4 = make_field(4);
  CHECK_EQ(f4->modulus(), std::vector<int>{1, 1, 1});  // x^2 + x + 1

  auto f8 = make_field(8);
  CHECK_EQ(f8->modulus(), std::vector<int>{1, 1, 0, 1});  // x^3 + x + 1

  auto f9 = make_field(9);
  CHECK_EQ(f9->modulus(), std::vector<int>{1, 0, 1});  // x^2 + 1
  // Multiplicative group is cyclic of order 8.
  int x = f9->generator();
  int seen = 1, acc = x;
  while (acc != 1) {
    acc = f9->mul(acc, x);
    ++seen;
  }
  CHECK_EQ(seen, 8);

  auto f5 = make_field(5);
  CHECK_EQ(f5->mul(2, 3), 1);
  CHECK_EQ(f5->add(2, 3), 0);
  CHECK_EQ(f5->inv(2), 3);

  CHECK_THROWS_AS(make_field(6), InvalidArgument);
  CHECK_THROWS_AS(make_field(512), InvalidArgument);
  CHECK_THROWS_AS(make_field(1), InvalidArgument);
}

TEST_CASE("elementary abelian groups") {
  auto k4 = make_elementary_abelian(4);
  CHECK_EQ(k4->order(), 4);
  for (int g = 1; g < 4; ++g) CHECK_EQ(k4->element_order(Elem(g)), 2);
  CHECK_EQ(k4->label(2), "k2");

  auto e9 = make_elementary_abelian(9);
  CHECK(e9->is_abelian());
  for (int g = 1; g < 9; ++g) CHECK_EQ(e9->element_order(Elem(g)), 3);
}

TEST_CASE("affine groups") {
  auto a3 = make_affine(3);
  CHECK_EQ(a3->order(), 6);
  CHECK_FALSE(a3->is_abelian());
  REQUIRE(a3->metadata().frobenius_kernel.has_value());
  CHECK_EQ(a3->metadata().frobenius_kernel->size(), 3);
  CHECK_EQ(a3->metadata().frobenius_complement->size(), 2);

  auto a4 = make_affine(4);
  CHECK_EQ(a4->order(), 12);
  CHECK_EQ(a4->metadata().frobenius_kernel->size(), 4);
  CHECK_EQ(a4->metadata().frobenius_complement->size(), 3);

  // Regular complement: for each ordered pair of nonidentity kernel
  // elements there is exactly one h with h^-1 k1 h = k2.
  auto a5 = make_affine(5);
  const auto& K = *a5->metadata().frobenius_kernel;
  const auto& H = *a5->metadata().frobenius_complement;
  CHECK_EQ(H.size(), K.size() - 1);
  for (Elem k1 : K) {
    if (k1 == 0) continue;
    for (Elem k2 : K) {
      if (k2 == 0) continue;
      int count = 0;
      for (Elem h : H)
        if (a5->mul(a5->mul(a5->inv(h), k1), h) == k2) ++count;
      CHECK_EQ(count, 1);
    }
  }

  CHECK_THROWS_AS(make_affine(2), InvalidArgument);
  CHECK_THROWS_AS(make_affine(10), InvalidArgument);
}

TEST_CASE("frobenius subgroups") {
  auto full = make_frobenius_subgroup(5, 4);
  auto aff = make_affine(5);
  CHECK_EQ(flat_table(*full), flat_table(*aff));

  auto f73 = make_frobenius_subgroup(7, 3);
  CHECK_EQ(f73->order(), 21);
  CHECK_EQ(f73->metadata().frobenius_complement->size(), 3);

  // d = 2: the only slope besides 1 is -1, so conjugation inverts the kernel.
  auto f72 = make_frobenius_subgroup(7, 2);
  Elem h = f72->element_of_label("h6");
  for (Elem k : *f72->metadata().frobenius_kernel)
    CHECK_EQ(f72->mul(f72->mul(f72->inv(h), k), h), f72->inv(k));

  CHECK_THROWS_AS(make_frobenius_subgroup(7, 4), InvalidArgument);
  CHECK_THROWS_AS(make_frobenius_subgroup(7, 1), InvalidArgument);
}

TEST_CASE("direct products") {
  auto klein = direct_product(make_cyclic(2), make_cyclic(2));
  CHECK_EQ(klein->order(), 4);
  for (int g = 0; g < 4; ++g) CHECK_EQ(klein->inv(Elem(g)), Elem(g));
  CHECK_EQ(klein->label(3), "x.x");

  auto d3c2 = direct_product(make_dihedral(3), make_cyclic(2));
  CHECK_EQ(d3c2->order(), 12);
  CHECK_EQ(d3c2->center_elements().size(), 2);

  auto padded = direct_product(make_cyclic(1), make_dihedral(3));
  CHECK_EQ(flat_table(*padded), flat_table(*make_dihedral(3)));

  CHECK_THROWS_AS(direct_product(make_cyclic(100), make_cyclic(100)),
                  InvalidArgument);
}

TEST_CASE("quotients") {
  auto d4 = make_dihedral(4);
  auto q = quotient(d4, Subset::of_labels(d4, {"1", "x2"}));
  CHECK_EQ(q.group->order(), 4);
  for (int g = 0; g < 4; ++g) CHECK_EQ(q.group->inv(Elem(g)), Elem(g));
  // Projection is a homomorphism.
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      CHECK_EQ(q.group->mul(q.projection[a], q.projection[b]),
               q.projection[d4->mul(Elem(a), Elem(b))]);

  auto c6 = make_cyclic(6);
  auto q3 = quotient(c6, Subset::of_labels(c6, {"1", "x3"}));
  CHECK_EQ(q3.group->order(), 3);
  CHECK_EQ(q3.group->element_order(1), 3);

  auto ds3 = make_dstar(3);
  auto qd = quotient(ds3, Subset::of_labels(ds3, {"1", "t2"}));
  CHECK_EQ(qd.group->order(), 6);
  CHECK_FALSE(qd.group->is_abelian());
  // Coset enumeration by minimal representative reproduces the dihedral
  // table exactly.
  CHECK_EQ(flat_table(*qd.group), flat_table(*make_dihedral(3)));

  auto d3 = make_dihedral(3);
  CHECK_THROWS_AS(quotient(d3, Subset::of_labels(d3, {"1", "t"})),
                  InvalidArgument);
}

TEST_CASE("subgroup enumeration") {
  auto c6 = make_cyclic(6);
  auto subs = subgroups(c6, false);
  std::multiset<int> sizes;
  for (const auto& s : subs) sizes.insert(s.size());
  CHECK_EQ(sizes, std::multiset<int>{1, 2, 3, 6});

  auto d4 = make_dihedral(4);
  auto normals = subgroups(d4, true);
  int order4 = 0;
  for (const auto& s : normals)
    if (s.size() == 4) ++order4;
  CHECK_EQ(order4, 3);
  for (const auto& s : normals) CHECK(s.is_normal_subgroup());

  auto a3 = make_affine(3);
  auto n3 = subgroups(a3, true);
  int order3 = 0;
  for (const auto& s : n3)
    if (s.size() == 3) ++order3;
  CHECK_EQ(order3, 1);
}

TEST_CASE("center and conjugation") {
  auto d4 = make_dihedral(4);
  CHECK_EQ(center(d4).labels(), std::vector<std::string>{"1", "x2"});

  auto a3 = make_affine(3);
  Subset H = Subset::of_elements(a3, *a3->metadata().frobenius_complement);
  Subset Hg = conjugate_subset(H, a3->element_of_label("k1"));
  CHECK(Hg != H);
  auto meet = H.intersect(Hg);
  CHECK_EQ(meet.size(), 1);
  CHECK(meet.contains(FiniteGroup::identity));
}

TEST_CASE("table validation rejects broken tables") {
  CHECK_THROWS_AS(
      FiniteGroup::from_table("bad", {{0, 1}, {1, 1}}, {"1", "a"}),
      InvalidArgument);
  // Identity must be index 0.
  CHECK_THROWS_AS(
      FiniteGroup::from_table("bad", {{1, 0}, {0, 1}}, {"a", "1"}),
      InvalidArgument);
  // Duplicate labels.
  CHECK_THROWS_AS(
      FiniteGroup::from_table("bad", {{0, 1}, {1, 0}}, {"1", "1"}),
      InvalidArgument);
  // A Latin square that is not associative: the cyclic-looking table with
  // one transposition breaks somewhere.
  CHECK_THROWS_AS(FiniteGroup::from_table("bad",
                                          {{0, 1, 2, 3, 4},
                                           {1, 0, 3, 4, 2},
                                           {2, 3, 4, 0, 1},
                                           {3, 4, 1, 2, 0},
                                           {4, 2, 0, 1, 3}},
                                          {"1", "a", "b", "c", "d"}),
                  InvalidArgument);
}

TEST_CASE("powers") {
  auto c12 = make_cyclic(12);
  Elem x = 1;
  CHECK_EQ(c12->pow(x, 25), Elem(1));
  CHECK_EQ(c12->pow(x, -1), Elem(11));
  CHECK_EQ(c12->pow(x, 0), Elem(0));
  auto d4 = make_dihedral(4);
  CHECK_EQ(d4->pow(d4->element_of_label("t"), -3), d4->element_of_label("t"));
}

TEST_CASE("subset basics") {
  auto d4 = make_dihedral(4);
  auto s = Subset::of_labels(d4, {"x", "xt", "t"});
  CHECK_EQ(s.size(), 3);
  CHECK_EQ(s.labels(), std::vector<std::string>{"x", "t", "xt"});
  auto inv = s.inverses();
  CHECK(inv.contains(d4->element_of_label("x3")));
  CHECK_EQ(s.intersect(inv).size(), 2);

  auto other = make_dihedral(4);
  auto s2 = Subset::of_labels(other, {"x"});
  CHECK_THROWS_AS((void)s.intersect(s2), GroupMismatch);

  CHECK_THROWS_AS(Subset::of_labels(d4, {"nope"}), InvalidArgument);
  CHECK_THROWS_AS(Subset::of_labels(d4, {"x", "x"}), InvalidArgument);
  CHECK_THROWS_AS(Subset::of_indices(d4, {9}), InvalidArgument);

  Subset rot = Subset::of_labels(d4, {"1", "x", "x2", "x3"});
  CHECK(rot.is_subgroup());
  CHECK(rot.is_normal_subgroup());
  Subset refl = Subset::of_labels(d4, {"1", "t"});
  CHECK(refl.is_subgroup());
  CHECK_FALSE(refl.is_normal_subgroup());
}

TEST_CASE("group spec parsing") {
  CHECK_EQ(parse_group("cyclic:6")->order(), 6);
  CHECK_EQ(parse_group("dihedral:5")->order(), 10);
  CHECK_EQ(parse_group("dstar:3")->order(), 12);
  CHECK_EQ(parse_group("dihof:cyclic:7")->order(), 14);
  CHECK_EQ(parse_group("ea:9")->order(), 9);
  CHECK_EQ(parse_group("aff:4")->order(), 12);
  CHECK_EQ(parse_group("frob:7:3")->order(), 21);
  CHECK_EQ(parse_group("prod:cyclic:3,cyclic:3")->order(), 9);
  auto nested = parse_group("prod:prod:cyclic:2,cyclic:2,cyclic:2");
  CHECK_EQ(nested->order(), 8);
  CHECK_EQ(nested->name(), "prod:prod:cyclic:2,cyclic:2,cyclic:2");

  CHECK_THROWS_AS(parse_group("octonion:3"), InvalidArgument);
  CHECK_THROWS_AS(parse_group("cyclic:"), InvalidArgument);
  CHECK_THROWS_AS(parse_group("cyclic:4junk"), InvalidArgument);
  CHECK_THROWS_AS(parse_group("prod:cyclic:2"), InvalidArgument);
}

TEST_CASE("subset spec parsing") {
  auto d4 = parse_group("dihedral:4");
  auto s = parse_subset(d4, "x,xt,t");
  CHECK_EQ(s.size(), 3);
  auto s_idx = parse_subset(d4, "#1,#5,#4");
  CHECK(s == s_idx);
  CHECK_THROWS_AS(parse_subset(d4, "x,#1"), InvalidArgument);
  CHECK_THROWS_AS(parse_subset(d4, "x,,t"), InvalidArgument);
  CHECK_THROWS_AS(parse_subset(d4, "#z"), InvalidArgument);
}

TEST_CASE("scope expansion") {
  auto r = expand_scope("cyclic:3..6");
  CHECK_EQ(r, std::vector<std::string>{"cyclic:3", "cyclic:4", "cyclic:5",
                                       "cyclic:6"});
  CHECK_EQ(expand_scope("dihedral:4"), std::vector<std::string>{"dihedral:4"});
  CHECK_THROWS_AS(expand_scope("cyclic:9..2"), InvalidArgument);
}
