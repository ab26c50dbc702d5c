#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sumset/errors.hpp"
#include "sumset/field.hpp"

namespace sumset {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Element index within a group's multiplication table.  The identity is
// always index 0.
using Elem = std::uint16_t;

// Structural facts recorded by the builders and re-verified at construction
// time.  All subsets are sorted element-index lists.
struct GroupMetadata {
  std::optional<std::vector<Elem>> center;
  std::vector<std::vector<Elem>> normal_subgroups;
  std::optional<std::vector<Elem>> frobenius_kernel;
  std::optional<std::vector<Elem>> frobenius_complement;
  std::string notes;
};

// Immutable multiplication-table group.  Construction validates the full
// group axioms: identity at index 0, two-sided inverses, Latin-square rows
// and columns, and associativity (exhaustive for order <= 256, randomized
// spot checks above that).  Instances are safe to share across threads.
class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
 public:
  static constexpr Elem identity = 0;
  static constexpr int max_order = 4096;

  int order() const { return v_; }
  Elem mul(Elem a, Elem b) const { return table_[std::size_t(a) * v_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  Elem pow(Elem g, long long t) const;
  int element_order(Elem g) const { return orders_[g]; }
  bool is_abelian() const { return abelian_; }
  // Sorted indices of the elements commuting with everything.
  const std::vector<Elem>& center_elements() const { return center_; }
  bool is_central(Elem g) const { return central_[g]; }

  const std::string& label(Elem g) const { return labels_[g]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Elem> find_label(const std::string& label) const;
  Elem element_of_label(const std::string& label) const;

  // The build spec this group was constructed from ("dihedral:4",
  // "prod:aff:3,cyclic:2", quotients get a "/" suffix form).
  const std::string& name() const { return name_; }
  const GroupMetadata& metadata() const { return meta_; }
  // Process-unique id used to reject cross-group operand mixing.
  std::uint64_t uid() const { return uid_; }

  // Builds a group from a row-major table.  `rows[a][b]` is the index of
  // a*b.  Throws InvalidArgument when the table fails any group axiom or a
  // metadata claim does not verify.
  static GroupPtr from_table(std::string name,
                             const std::vector<std::vector<int>>& rows,
                             std::vector<std::string> labels,
                             GroupMetadata meta = {});
  static GroupPtr from_flat_table(std::string name, std::vector<Elem> flat,
                                  std::vector<std::string> labels,
                                  GroupMetadata meta = {});

 private:
  FiniteGroup() = default;
  void validate() const;
  void finalize();  // orders, inverses, center, label map

  int v_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<int> orders_;
  std::vector<Elem> center_;
  std::vector<char> central_;
  bool abelian_ = false;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Elem> label_index_;
  std::string name_;
  GroupMetadata meta_;
  std::uint64_t uid_ = 0;
};

// A subset of a fixed group, held as a membership mask.  Value semantics;
// binary operations reject operands attached to a different group instance.
class Subset {
 public:
  Subset() = default;
  explicit Subset(GroupPtr group);
  static Subset of_indices(GroupPtr group, const std::vector<int>& indices);
  static Subset of_elements(GroupPtr group, const std::vector<Elem>& elements);
  static Subset of_labels(GroupPtr group,
                          const std::vector<std::string>& labels);
  static Subset full(GroupPtr group);

  const GroupPtr& group() const { return group_; }
  int group_order() const { return int(mask_.size()); }
  int size() const { return size_; }
  bool empty() const { return size_ == 0; }
  bool contains(Elem g) const { return mask_[g] != 0; }

  void insert(Elem g);
  void erase(Elem g);

  std::vector<Elem> elements() const;  // ascending
  std::vector<std::string> labels() const;

  Subset inverses() const;                  // { s^(-1) : s in S }
  Subset translated_right(Elem g) const;    // S g
  Subset translated_left(Elem g) const;     // g S
  Subset complement() const;
  Subset intersect(const Subset& other) const;
  Subset unite(const Subset& other) const;
  bool is_subset_of(const Subset& other) const;

  bool is_subgroup() const;
  bool is_normal_subgroup() const;

  bool operator==(const Subset& other) const;
  bool operator!=(const Subset& other) const { return !(*this == other); }
  // Deterministic total order (mask comparison); used for canonical forms.
  bool operator<(const Subset& other) const;

  const std::vector<std::uint8_t>& mask() const { return mask_; }

 private:
  void require_same_group(const Subset& other) const;
  GroupPtr group_;
  std::vector<std::uint8_t> mask_;
  int size_ = 0;
};

// ---- Builders ----
// All builders produce validated groups with deterministic element
// enumeration and the identity at index 0.

// Z_n, elements x^0..x^{n-1} with labels "1", "x", "x2", ...
GroupPtr make_cyclic(int n);

// Dihedral group of order 2n (n >= 3): x^0..x^{n-1} then t, xt, ..., with t
// an involution inverting x.
GroupPtr make_dihedral(int n);

// Generalized dihedral over an abelian group A: pairs (a, e) with e in
// {0, 1}, t = (1, 1) inverting A.  Element (a, e) has index e*|A| + a.
GroupPtr make_generalized_dihedral(const GroupPtr& A);

// Order-4n group <x, t | x^n = t^4 = 1, t^-1 x t = x^-1> for odd n >= 3;
// x^i t^j has index j*n + i.  Its center is {1, t^2} and the quotient by the
// center has the dihedral table of order 2n.
GroupPtr make_dstar(int n);

// Additive group of GF(q); element b is labeled "k<b>" (identity "1").
GroupPtr make_elementary_abelian(int q);

// One-dimensional affine maps x -> ax + b over GF(q), q >= 3.  Element
// (a, b) has index (a-1)*q + b; kernel {x -> x + b} and complement
// {x -> ax} are recorded as metadata.
GroupPtr make_affine(int q);

// Subgroup of the affine group with slopes restricted to the order-d
// subgroup of GF(q)*, d | q-1, d >= 2.  With d = q-1 the table equals
// make_affine(q)'s.
GroupPtr make_frobenius_subgroup(int q, int d);

// Direct product with lexicographic pair enumeration: (g, h) has index
// g*|H| + h and label "<g>.<h>".
GroupPtr direct_product(const GroupPtr& G, const GroupPtr& H);

struct Quotient {
  GroupPtr group;
  std::vector<Elem> projection;   // parent element -> coset index
  std::vector<Elem> representative;  // coset index -> minimal parent element
};

// Quotient by a normal subgroup.  Cosets are indexed by the rank of their
// minimal element, so the trivial coset is index 0 and labels are inherited
// from the minimal representatives.
Quotient quotient(const GroupPtr& G, const Subset& N);

// All subgroups (or all normal subgroups) by layered closure; exhaustive
// only for order <= 64, above that metadata-backed normal subgroups are
// returned when present.
std::vector<Subset> subgroups(const GroupPtr& G, bool normal_only);

Subset center(const GroupPtr& G);

// { g^-1 s g : s in S }
Subset conjugate_subset(const Subset& S, Elem g);

// The field a field-backed builder used; nullptr lookups are the caller's
// responsibility.  Exposed for constructions that need the underlying
// arithmetic (orbit computations, quadratic residues).
FieldPtr field_of(int q);

}  // namespace sumset
