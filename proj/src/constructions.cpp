#include "sumset/constructions.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "sumset/errors.hpp"
#include "sumset/field.hpp"

namespace sumset::constructions {

namespace {

bool params_equal(const regularity::Params& a, const regularity::Params& b) {
  return a.v == b.v && a.k == b.k && a.lambda == b.lambda && a.mu == b.mu &&
         a.n == b.n && a.s_inv == b.s_inv;
}

std::string joined_labels(const Subset& S) {
  std::string out;
  for (const auto& l : S.labels()) {
    if (!out.empty()) out += ",";
    out += l;
  }
  return out.empty() ? "<empty>" : out;
}

// Recompute the classification of `set` from scratch and require it to
// match the claimed parameters exactly.
ConstructionResult certify(GroupPtr group, Subset set,
                           const regularity::Params& claimed, std::string tag,
                           std::map<std::string, std::string> choices) {
  auto cls = regularity::classify(set);
  const bool want_pss = claimed.lambda.has_value();
  const bool kind_ok = want_pss ? cls.is_partial_sum_set : cls.is_sum_set;
  if (!kind_ok || !cls.params || !params_equal(*cls.params, claimed)) {
    std::string got =
        cls.params ? cls.params->to_string() : "<non-constant counts>";
    throw ConstructionFailure(tag + ": recomputed certificate " + got +
                              " does not match the claim " +
                              claimed.to_string());
  }
  ConstructionResult r;
  r.group = std::move(group);
  r.set = std::move(set);
  r.claimed = claimed;
  r.certificate = std::move(cls);
  r.theorem_tag = std::move(tag);
  r.choices = std::move(choices);
  return r;
}

// Require the certified set to have the stated type with respect to the
// central order-2 subgroup {1, z}.
void require_type(const ConstructionResult& r, Elem z,
                  regularity::CosetType want) {
  for (const auto& e : r.certificate.type_wrt) {
    if (e.involution != z) continue;
    if (e.type == want) return;
    throw ConstructionFailure(
        r.theorem_tag + ": set is " + regularity::coset_type_name(e.type) +
        " with respect to {1, " + r.group->label(z) + "}, expected " +
        regularity::coset_type_name(want));
  }
  throw ConstructionFailure(r.theorem_tag + ": " + r.group->label(z) +
                            " is not a central involution of the host group");
}

// Inverse-overlap a set avoiding the identity must have to carry the
// given proper partial sum set parameters (mass count over all ordered
// pairs: k^2 = s_inv + lambda*k + mu*(v-k-1)).
std::int64_t forced_overlap(std::int64_t v, std::int64_t k, std::int64_t lam,
                            std::int64_t mu) {
  return k * k - lam * k - mu * (v - k - 1);
}

}  // namespace

LiftedFamily lift2(const Subset& P, std::int64_t beta) {
  const GroupPtr& K = P.group();
  if (!K) throw InvalidArgument("lift2: subset is not attached to a group");
  if (beta < 1) throw InvalidArgument("lift2: beta must be at least 1");
  if (P.contains(FiniteGroup::identity))
    throw InvalidArgument("lift2: the base set must avoid the identity");
  auto cls = regularity::classify(P);
  if (!cls.is_partial_sum_set || !cls.params || !cls.params->lambda ||
      *cls.params->lambda != beta - 1 || cls.params->mu != beta) {
    std::string got = cls.params && cls.is_partial_sum_set
                          ? cls.params->to_string()
                          : std::string("<non-constant counts>");
    throw InvalidArgument(
        "lift2: base set " + got + " is not a (v, k, " +
        std::to_string(beta - 1) + ", " + std::to_string(beta) +
        ") partial sum set");
  }
  if (cls.params->s_inv != beta)
    throw InvalidArgument("lift2: inverse overlap " +
                          std::to_string(cls.params->s_inv) +
                          " differs from beta = " + std::to_string(beta));

  const std::int64_t v = K->order();
  const std::int64_t k = P.size();
  auto G = direct_product(K, make_cyclic(2));
  const Elem z = 1;  // (identity, 1): the new central involution

  Subset S(G);
  for (Elem p : P.elements()) {
    S.insert(Elem(2 * p));      // (p, 0)
    S.insert(Elem(2 * p + 1));  // (p, 1) = p z
  }

  std::map<std::string, std::string> choices{
      {"base_group", K->name()},
      {"base_set", joined_labels(P)},
      {"beta", std::to_string(beta)}};

  LiftedFamily fam;
  fam.pss = certify(G, S,
                    regularity::pss_params(2 * v, 2 * k, 2 * beta - 2,
                                           2 * beta, 2 * beta),
                    "lift2", choices);

  Subset S1 = S;
  S1.insert(FiniteGroup::identity);
  choices["adjoined"] = "identity";
  fam.with_identity = certify(
      G, S1, regularity::sum_set_params(2 * v, 2 * k + 1, 2 * beta), "lift2",
      choices);
  require_type(fam.with_identity, z, regularity::CosetType::type2);

  Subset S2 = S;
  S2.insert(z);
  choices["adjoined"] = "involution";
  fam.with_involution = certify(
      G, S2, regularity::sum_set_params(2 * v, 2 * k + 1, 2 * beta), "lift2",
      choices);
  require_type(fam.with_involution, z, regularity::CosetType::type2);
  return fam;
}

ConstructionResult project2(const Subset& S, const Subset& N) {
  const GroupPtr& G = S.group();
  if (!G) throw InvalidArgument("project2: subset is not attached to a group");
  auto type = regularity::type_classify(S, N);  // validates N itself
  if (type != regularity::CosetType::type2)
    throw InvalidArgument(
        std::string("project2: set is ") + regularity::coset_type_name(type) +
        " with respect to the given subgroup, expected type 2");
  auto cls = regularity::classify(S);
  if (!cls.is_sum_set || !cls.params)
    throw InvalidArgument("project2: set is not a sum set");
  const auto p = *cls.params;
  if (p.mu == 0)
    throw InvalidArgument(
        "project2: the set lies inside the kernel and has no image");
  if (p.mu % 2 != 0)
    throw ConstructionFailure(
        "project2: a type-2 sum set must have an even count " +
        std::to_string(p.mu));

  Subset SN = S;  // S with its one element of N removed
  for (Elem e : N.elements()) SN.erase(e);
  auto q = quotient(G, N);

  Subset P(q.group);
  for (Elem e : SN.elements()) P.insert(q.projection[e]);
  if (2 * P.size() != SN.size())
    throw ConstructionFailure(
        "project2: cosets outside the kernel are not hit exactly twice");

  // Representation counts must halve exactly onto the quotient,
  // element by element.
  auto prof_parent = regularity::profile(SN);
  auto prof_image = regularity::profile(P);
  for (int a = 0; a < G->order(); ++a) {
    if (2 * prof_image.product_counts[q.projection[a]] !=
        prof_parent.product_counts[a])
      throw ConstructionFailure(
          "project2: representation counts of " + G->label(Elem(a)) +
          " do not halve onto its coset");
  }

  const std::int64_t si = prof_image.product_counts[FiniteGroup::identity];
  auto claimed = regularity::pss_params(p.v / 2, (p.k - 1) / 2, p.mu / 2 - 1,
                                        p.mu / 2, si);
  std::map<std::string, std::string> choices{
      {"parent_group", G->name()},
      {"parent_set", joined_labels(S)},
      {"kernel", joined_labels(N)}};
  return certify(q.group, P, claimed, "project2", std::move(choices));
}

Subset canonical_maximal_skew(const GroupPtr& A) {
  if (!A) throw InvalidArgument("canonical_maximal_skew: null group");
  if (A->order() % 2 == 0)
    throw InvalidArgument(
        "canonical_maximal_skew: the group order must be odd so that "
        "nonidentity elements pair with distinct inverses");
  Subset M(A);
  for (Elem g = 1; g < Elem(A->order()); ++g)
    if (!M.contains(A->inv(g))) M.insert(g);
  if (!regularity::maximal_skew_test(M))
    throw InternalError("canonical_maximal_skew: constructed set not maximal");
  return M;
}

Subset maximal_skew_with_coset_property(int n) {
  if (n < 4 || n % 2 != 0)
    throw InvalidArgument(
        "maximal_skew_with_coset_property: even n >= 4 required");
  auto C = make_cyclic(n);
  const int half = n / 2;
  Subset M(C);
  std::vector<char> used(std::size_t(half), 0);  // coset id = i mod half
  for (int i = 1; i < n; ++i) {
    const int cid = i % half;
    if (cid == 0) continue;  // the subgroup {1, x^(n/2)} itself
    if (used[cid]) continue;
    if (M.contains(C->inv(Elem(i)))) continue;
    M.insert(Elem(i));
    used[cid] = 1;
  }
  for (int cid = 1; cid < half; ++cid)
    if (!used[cid])
      throw InternalError(
          "maximal_skew_with_coset_property: greedy pass missed a coset");
  if (!regularity::maximal_skew_test(M))
    throw InternalError(
        "maximal_skew_with_coset_property: constructed set not maximal");
  return M;
}

namespace {

// Validates a user-supplied rotation set for the type-1 construction:
// skew, inside the rotations, one element of every nontrivial coset of
// {1, x^(n/2)}.
void validate_type1_rotations(const Subset& M, int n) {
  const int half = n / 2;
  std::vector<int> per_coset(std::size_t(half), 0);
  auto C = M.group();
  for (Elem i : M.elements()) {
    if (int(i) >= n)
      throw InvalidArgument("dihedral-t1: supplied set leaves the rotations");
    if (i == 0 || int(i) == half)
      throw InvalidArgument(
          "dihedral-t1: supplied set meets the central subgroup {1, z}");
    if (M.contains(C->inv(i)))
      throw InvalidArgument("dihedral-t1: supplied set is not skew");
    per_coset[int(i) % half]++;
  }
  for (int cid = 1; cid < half; ++cid)
    if (per_coset[cid] != 1)
      throw InvalidArgument(
          "dihedral-t1: supplied set must hold exactly one element of "
          "every nontrivial coset of the central subgroup");
}

}  // namespace

Type1Pair dihedral_type1(int n, std::optional<Subset> M) {
  if (n < 4 || n % 2 != 0)
    throw InvalidArgument("dihedral-t1: even n >= 4 required");
  Subset rot;
  bool canonical = !M.has_value();
  if (M) {
    if (!M->group() || M->group()->order() != n)
      throw GroupMismatch(
          "dihedral-t1: the rotation set must live in a group of order n");
    rot = Subset::of_elements(make_cyclic(n), M->elements());
  } else {
    rot = maximal_skew_with_coset_property(n);
  }
  validate_type1_rotations(rot, n);

  auto D = make_dihedral(n);
  Subset base(D);
  for (Elem i : rot.elements()) {
    base.insert(i);            // x^i
    base.insert(Elem(n + i));  // x^i t
  }
  const Elem z = Elem(n / 2);
  auto claimed = regularity::sum_set_params(2 * n, n - 1, (n - 2) / 2);
  std::map<std::string, std::string> choices{
      {"n", std::to_string(n)},
      {"rotations", joined_labels(rot)},
      {"canonical", canonical ? "true" : "false"}};

  Type1Pair pair;
  Subset S1 = base;
  S1.insert(Elem(n));  // t
  choices["reflection"] = "t";
  pair.with_t = certify(D, S1, claimed, "dihedral-t1", choices);
  require_type(pair.with_t, z, regularity::CosetType::type1);

  Subset S2 = base;
  S2.insert(Elem(n + n / 2));  // z t
  choices["reflection"] = "zt";
  pair.with_zt = certify(D, S2, claimed, "dihedral-t1", choices);
  require_type(pair.with_zt, z, regularity::CosetType::type1);
  return pair;
}

ConstructionResult generalized_dihedral_pss(const GroupPtr& A,
                                            std::optional<Subset> M) {
  if (!A) throw InvalidArgument("twist: null base group");
  if (!A->is_abelian())
    throw InvalidArgument("twist: the base group must be abelian");
  const int m = A->order();
  if (m < 3 || m % 2 == 0)
    throw InvalidArgument("twist: odd base order >= 3 required");
  Subset Ma;
  bool canonical = !M.has_value();
  if (M) {
    if (M->group().get() != A.get())
      throw GroupMismatch("twist: the skew set must live in the base group");
    if (!regularity::maximal_skew_test(*M))  // throws when not skew
      throw InvalidArgument("twist: supplied skew set is not maximal");
    Ma = *M;
  } else {
    Ma = canonical_maximal_skew(A);
  }

  auto D = make_generalized_dihedral(A);
  Subset S(D);
  for (Elem a : Ma.elements()) {
    S.insert(a);            // a
    S.insert(Elem(m + a));  // a t
  }
  auto claimed = regularity::pss_params(2 * m, m - 1, (m - 3) / 2,
                                        (m - 1) / 2, (m - 1) / 2);
  std::map<std::string, std::string> choices{
      {"base_group", A->name()},
      {"skew_set", joined_labels(Ma)},
      {"canonical", canonical ? "true" : "false"}};
  return certify(D, S, claimed, "dihedral-t2", std::move(choices));
}

LiftedFamily dihedral_type2(int m) {
  if (m < 3 || m % 2 == 0)
    throw InvalidArgument("dihedral-t2: odd m >= 3 required");
  auto base = generalized_dihedral_pss(make_cyclic(m));
  auto fam = lift2(base.set, (m - 1) / 2);
  for (ConstructionResult* r :
       {&fam.pss, &fam.with_identity, &fam.with_involution}) {
    r->theorem_tag = "dihedral-t2";
    r->choices["m"] = std::to_string(m);
    r->choices["skew_set"] = base.choices["skew_set"];
  }
  return fam;
}

LiftedFamily dstar_sum_set(int n) {
  if (n < 3 || n % 2 == 0)
    throw InvalidArgument("dstar: odd n >= 3 required");
  auto C = make_cyclic(n);
  Subset M = canonical_maximal_skew(C);
  auto G = make_dstar(n);

  // Preimage of the twist set M ∪ Mt of the order-2n dihedral quotient
  // under collapsing the center {1, t^2}: x^i t^j has index j*n + i.
  Subset S(G);
  for (Elem i : M.elements()) {
    S.insert(i);                // x^i
    S.insert(Elem(2 * n + i));  // x^i t^2
    S.insert(Elem(n + i));      // x^i t
    S.insert(Elem(3 * n + i));  // x^i t^3
  }
  const Elem z = Elem(2 * n);  // t^2, the central involution
  std::map<std::string, std::string> choices{
      {"n", std::to_string(n)}, {"skew_set", joined_labels(M)}};

  LiftedFamily fam;
  fam.pss = certify(
      G, S, regularity::pss_params(4 * n, 2 * n - 2, n - 3, n - 1, n - 1),
      "dstar", choices);

  auto claimed = regularity::sum_set_params(4 * n, 2 * n - 1, n - 1);
  Subset S1 = S;
  S1.insert(FiniteGroup::identity);
  choices["adjoined"] = "identity";
  fam.with_identity = certify(G, S1, claimed, "dstar", choices);
  require_type(fam.with_identity, z, regularity::CosetType::type2);

  Subset S2 = S;
  S2.insert(z);
  choices["adjoined"] = "involution";
  fam.with_involution = certify(G, S2, claimed, "dstar", choices);
  require_type(fam.with_involution, z, regularity::CosetType::type2);
  return fam;
}

ConstructionResult frobenius_coset_pss(const GroupPtr& G, int t,
                                       bool include_H,
                                       std::optional<std::vector<Elem>> picks) {
  if (!G) throw InvalidArgument("frob-cosets: null group");
  const auto& meta = G->metadata();
  if (!meta.frobenius_kernel || !meta.frobenius_complement)
    throw InvalidArgument(
        "frob-cosets: the group carries no kernel/complement factorization");
  const auto& K = *meta.frobenius_kernel;
  const auto& H = *meta.frobenius_complement;
  const int ok = int(K.size()), oh = int(H.size());
  if (oh != ok - 1)
    throw InvalidArgument(
        "frob-cosets: complement of order " + std::to_string(oh) +
        " is not regular on the " + std::to_string(ok - 1) +
        " nonidentity kernel elements");
  if (t < 1 || t > ok - 1)
    throw InvalidArgument("frob-cosets: t must lie in [1, " +
                          std::to_string(ok - 1) + "]");

  std::vector<Elem> reps;
  if (picks) {
    reps = *picks;
    if (int(reps.size()) != t)
      throw InvalidArgument("frob-cosets: expected exactly " +
                            std::to_string(t) + " coset representatives");
    auto sorted = reps;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InvalidArgument("frob-cosets: representatives must be distinct");
    for (Elem k : reps)
      if (k == FiniteGroup::identity ||
          !std::binary_search(K.begin(), K.end(), k))
        throw InvalidArgument(
            "frob-cosets: representatives must be nonidentity kernel "
            "elements");
  } else {
    for (Elem k : K) {
      if (k == FiniteGroup::identity) continue;
      reps.push_back(k);
      if (int(reps.size()) == t) break;
    }
  }

  Subset S(G);
  for (Elem k : reps)
    for (Elem h : H) S.insert(G->mul(k, h));
  if (include_H)
    for (Elem h : H) S.insert(h);
  const int blocks = t + (include_H ? 1 : 0);
  if (S.size() != blocks * oh)
    throw InternalError("frob-cosets: selected cosets are not disjoint");

  const std::int64_t v = G->order();
  const std::int64_t T = t;
  std::int64_t k, lam, mu, si;
  if (!include_H) {
    k = T * oh;
    lam = T * T - T;
    mu = T * T;
    si = forced_overlap(v, k, lam, mu);
  } else {
    k = (T + 1) * oh;
    lam = T * T + oh;
    mu = T * T + T;
    // The identity sits inside H here, so the in-set count applies to
    // k - 1 elements and the out-of-set count to v - k.
    si = k * k - lam * (k - 1) - mu * (v - k);
  }

  std::string rep_labels;
  for (Elem k_ : reps) {
    if (!rep_labels.empty()) rep_labels += ",";
    rep_labels += G->label(k_);
  }
  std::map<std::string, std::string> choices{
      {"t", std::to_string(t)},
      {"representatives", rep_labels},
      {"default_picks", picks ? "false" : "true"},
      {"include_complement", include_H ? "true" : "false"}};

  // With every nontrivial coset and the complement included the union is
  // the whole group, where both counts coincide (a trivial sum set).
  regularity::Params claimed =
      lam == mu ? regularity::sum_set_params(v, k, mu)
                : regularity::pss_params(v, k, lam, mu, si);
  return certify(G, S, claimed, "frob-cosets", std::move(choices));
}

LiftedFamily aff_times_c2_sum_set(int q) {
  if (q < 3)
    throw InvalidArgument("aff-x-c2: prime power q >= 3 required");
  auto aff = make_affine(q);
  auto base = frobenius_coset_pss(aff, 1, false);
  auto fam = lift2(base.set, 1);
  for (ConstructionResult* r :
       {&fam.pss, &fam.with_identity, &fam.with_involution}) {
    r->theorem_tag = "aff-x-c2";
    r->choices["q"] = std::to_string(q);
    r->choices["coset_representative"] = base.choices["representatives"];
  }
  return fam;
}

namespace {

// Orbits of the order-d subgroup of GF(q)* acting on the nonzero field
// elements by multiplication; each orbit ascending, orbits ordered by
// smallest member.
std::vector<std::vector<int>> intercept_orbits(const FieldTable& F, int d) {
  const int q = F.q();
  std::vector<int> subgroup;
  for (int a = 1; a < q; ++a)
    if (F.pow(a, d) == 1) subgroup.push_back(a);
  if (int(subgroup.size()) != d)
    throw InternalError("frob-subgroup: slope subgroup has wrong order");
  std::vector<std::vector<int>> orbits;
  std::vector<char> seen(std::size_t(q), 0);
  for (int b = 1; b < q; ++b) {
    if (seen[b]) continue;
    std::vector<int> orbit;
    for (int a : subgroup) {
      int x = F.mul(a, b);
      seen[x] = 1;
      orbit.push_back(x);
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

}  // namespace

ConstructionResult frobenius_subgroup_pss(
    int q, int d, int c, std::optional<std::vector<int>> intercept_picks) {
  auto F = field_of(q);  // validates the prime power
  if (d < 2 || (q - 1) % d != 0)
    throw InvalidArgument(
        "frob-subgroup: d must be at least 2 and divide q - 1");
  if (c < 1 || c > d)
    throw InvalidArgument("frob-subgroup: picks per orbit must lie in [1, " +
                          std::to_string(d) + "]");

  auto orbits = intercept_orbits(*F, d);
  std::vector<int> reps;
  if (intercept_picks) {
    reps = *intercept_picks;
    std::vector<int> count_per_orbit(orbits.size(), 0);
    std::vector<int> orbit_of(std::size_t(q), -1);
    for (std::size_t i = 0; i < orbits.size(); ++i)
      for (int b : orbits[i]) orbit_of[b] = int(i);
    std::vector<char> taken(std::size_t(q), 0);
    for (int b : reps) {
      if (b <= 0 || b >= q || taken[b])
        throw InvalidArgument(
            "frob-subgroup: picks must be distinct nonzero intercepts");
      taken[b] = 1;
      count_per_orbit[orbit_of[b]]++;
    }
    for (int cnt : count_per_orbit)
      if (cnt != c)
        throw InvalidArgument("frob-subgroup: every slope orbit must "
                              "contribute exactly " +
                              std::to_string(c) + " intercepts");
  } else {
    for (const auto& orbit : orbits)
      reps.insert(reps.end(), orbit.begin(), orbit.begin() + c);
  }

  auto aff = make_affine(q);
  const auto& H = *aff->metadata().frobenius_complement;
  Subset S_aff(aff);
  for (int b : reps)
    for (Elem h : H) S_aff.insert(aff->mul(Elem(b), h));

  // Intersect with the slope subgroup by explicit membership lookup in
  // its own table.
  auto sub = make_frobenius_subgroup(q, d);
  Subset S(sub);
  for (Elem e : S_aff.elements())
    if (auto f = sub->find_label(aff->label(e))) S.insert(*f);

  const std::int64_t C = c, t = C * (q - 1) / d;
  if (std::int64_t(S.size()) != C * (q - 1))
    throw InternalError("frob-subgroup: intersection has unexpected size");
  const std::int64_t v = std::int64_t(q) * d;
  const std::int64_t k = C * (q - 1);
  const std::int64_t lam = C * (t - 1), mu = C * t;

  std::string rep_str;
  for (int b : reps) {
    if (!rep_str.empty()) rep_str += ",";
    rep_str += std::to_string(b);
  }
  std::map<std::string, std::string> choices{
      {"q", std::to_string(q)},
      {"d", std::to_string(d)},
      {"per_orbit", std::to_string(c)},
      {"intercepts", rep_str},
      {"default_picks", intercept_picks ? "false" : "true"}};
  auto claimed =
      regularity::pss_params(v, k, lam, mu, forced_overlap(v, k, lam, mu));
  return certify(sub, S, claimed, "frob-subgroup", std::move(choices));
}

ConstructionResult frobenius_subgroup_sum_set(
    int q, int d, std::optional<std::vector<int>> intercept_picks) {
  auto base = frobenius_subgroup_pss(q, d, 2, std::move(intercept_picks));
  Subset S = base.set;
  S.insert(FiniteGroup::identity);
  auto claimed = regularity::sum_set_params(std::int64_t(q) * d, 2 * q - 1,
                                            4 * (q - 1) / d);
  auto choices = base.choices;
  choices["adjoined"] = "identity";
  return certify(base.group, std::move(S), claimed, "frob-subgroup",
                 std::move(choices));
}

ConstructionResult paley_skew_pss(int q) {
  auto F = field_of(q);
  if (q % 4 != 3)
    throw InvalidArgument("paley: q congruent to 3 mod 4 required");
  auto G = make_elementary_abelian(q);
  Subset S(G);
  for (int x = 1; x < q; ++x) S.insert(Elem(F->mul(x, x)));
  if (S.size() != (q - 1) / 2)
    throw InternalError("paley: wrong number of nonzero squares");
  auto claimed = regularity::pss_params(q, (q - 1) / 2, (q - 3) / 4,
                                        (q + 1) / 4, 0);
  auto r = certify(G, std::move(S), claimed, "paley",
                   {{"q", std::to_string(q)}});
  if (!r.certificate.is_skew)
    throw ConstructionFailure("paley: set is not skew");
  return r;
}

}  // namespace sumset::constructions
