#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sumset/group.hpp"
#include "sumset/regularity.hpp"

namespace sumset::constructions {

// A constructed set together with its recomputed certificate.  Every
// builder re-derives the classification from the raw multiplication
// table and compares it against the claimed parameters; a mismatch
// throws ConstructionFailure, so a returned result is always verified.
struct ConstructionResult {
  GroupPtr group;
  Subset set;
  regularity::Params claimed;
  regularity::Classification certificate;
  std::string theorem_tag;
  // Every free choice made along the way, as printable key/value pairs.
  std::map<std::string, std::string> choices;
};

// Output of the doubling constructions: one partial sum set plus the two
// ways of completing it to a sum set by adjoining a central element.
struct LiftedFamily {
  ConstructionResult pss;              // the uncompleted partial sum set
  ConstructionResult with_identity;    // pss set plus the identity
  ConstructionResult with_involution;  // pss set plus the new involution
};

// Doubling lift.  P must avoid the identity and be a
// (v, k, beta-1, beta) partial sum set with |P ∩ P^(-1)| = beta.  In
// K x C2, writing z for the new central involution, S = P ∪ Pz is a
// (2v, 2k, 2beta-2, 2beta) partial sum set and S ∪ {1}, S ∪ {z} are
// (2v, 2k+1, 2beta) sum sets meeting {1, z} exactly once (type 2).
LiftedFamily lift2(const Subset& P, std::int64_t beta);

// Inverse direction of the lift.  S must be a sum set of type 2 with
// respect to the central order-2 subgroup N.  The image of S ∖ N in G/N
// is a (v/2, (k-1)/2, mu/2 - 1, mu/2) partial sum set; the per-element
// representation counts of S ∖ N halve exactly onto the quotient, which
// is verified for every coset.
ConstructionResult project2(const Subset& S, const Subset& N);

// Canonical maximal skew subset of an odd-order abelian group: the
// smaller index out of every inverse pair of nonidentity elements.
Subset canonical_maximal_skew(const GroupPtr& A);

// Canonical maximal skew subset of the cyclic group of even order
// n >= 4 holding exactly one element of every nontrivial coset of the
// order-2 subgroup: greedy by index, which lands on {x, ..., x^(n/2-1)}.
Subset maximal_skew_with_coset_property(int n);

// The two order-2n sum sets built from a maximal skew subset M of the
// rotation subgroup of the dihedral group (even n >= 4, M holding one
// element per nontrivial coset of the rotation of order 2).  Both
// S = M ∪ Mt ∪ {t} and S = M ∪ Mt ∪ {zt} are (2n, n-1, (n-2)/2) sum
// sets missing the central subgroup {1, z} entirely (type 1).
struct Type1Pair {
  ConstructionResult with_t;   // reflection over the identity rotation
  ConstructionResult with_zt;  // reflection over the central rotation
};
Type1Pair dihedral_type1(int n, std::optional<Subset> M = std::nullopt);

// Twist construction: A abelian of odd order m >= 3, M maximal skew in
// A.  In the generalized dihedral group over A the set S = M ∪ Mt is a
// (2m, m-1, (m-3)/2, (m-1)/2) partial sum set with
// |S ∩ S^(-1)| = (m-1)/2.
ConstructionResult generalized_dihedral_pss(
    const GroupPtr& A, std::optional<Subset> M = std::nullopt);

// Composition of the twist construction over the cyclic group of odd
// order m with the doubling lift: (4m, 2m-1, m-1) sum sets of type 2 in
// Dih(C_m) x C2.
LiftedFamily dihedral_type2(int m);

// Central-quotient double cover of the dihedral construction: n odd
// >= 3.  The preimage S* of the twist set S (under the quotient of the
// order-4n group with cyclic center of order 2 by that center) is a
// (4n, 2n-2, n-3, n-1) partial sum set, completed by either central
// element to a (4n, 2n-1, n-1) sum set of type 2.
LiftedFamily dstar_sum_set(int n);

// Union of t distinct nontrivial left cosets of a regular complement H
// (o(H) = o(K) - 1, checked from the group's factorization metadata):
// a (o(G), t*o(H), t^2-t, t^2) partial sum set.  With include_H the
// complement itself joins the union and the parameters become
// (o(G), (t+1)*o(H), t^2+o(H), t^2+t).  picks selects the coset
// representatives among the nonidentity kernel elements; the default
// takes the t smallest.  The certified parameters never depend on the
// choice of representatives.
ConstructionResult frobenius_coset_pss(
    const GroupPtr& G, int t, bool include_H = false,
    std::optional<std::vector<Elem>> picks = std::nullopt);

// One nontrivial coset of the regular complement in the affine group of
// GF(q) is a (q(q-1), q-1, 0, 1) partial sum set with inverse overlap 1,
// so it lifts: (2q(q-1), 2q-1, 2) sum sets of type 2 in Aff(q) x C2.
LiftedFamily aff_times_c2_sum_set(int q);

// Inside Aff(q), fix the subgroup G of slopes of order dividing d
// (d | q-1, d >= 2).  Conjugation by slopes partitions the nonzero
// intercepts into (q-1)/d orbits of size d.  Picking exactly c
// representatives of every orbit and intersecting the union of their
// complement-cosets with G gives a (qd, c(q-1), c(t-1), ct) partial sum
// set in G, t = c(q-1)/d.  The intersection is computed by explicit
// membership lookup in the order-qd table.
ConstructionResult frobenius_subgroup_pss(
    int q, int d, int c = 2,
    std::optional<std::vector<int>> intercept_picks = std::nullopt);

// The c = 2 partial sum set above is the unique completable case:
// adjoining the identity yields a (qd, 2q-1, 4(q-1)/d) sum set.
ConstructionResult frobenius_subgroup_sum_set(
    int q, int d,
    std::optional<std::vector<int>> intercept_picks = std::nullopt);

// Nonzero squares of GF(q), q ≡ 3 (mod 4), inside the elementary
// abelian group of order q: a skew (q, (q-1)/2, (q-3)/4, (q+1)/4)
// partial sum set.
ConstructionResult paley_skew_pss(int q);

}  // namespace sumset::constructions
