#include "sumset/group.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>

namespace sumset {
namespace {

std::atomic<std::uint64_t> next_uid{1};

std::string power_label(const char* base, int exp) {
  if (exp == 0) return "";
  if (exp == 1) return base;
  return std::string(base) + std::to_string(exp);
}

std::string or_identity(std::string s) { return s.empty() ? "1" : std::move(s); }

std::string subset_brace_list(const Subset& S) {
  std::string out = "{";
  bool first = true;
  for (Elem g : S.elements()) {
    if (!first) out += ",";
    out += S.group()->label(g);
    first = false;
  }
  return out + "}";
}

void check_sorted_subgroup_claim(const FiniteGroup& G,
                                 const std::vector<Elem>& elems,
                                 bool must_be_normal, const char* what) {
  if (elems.empty() || elems.front() != FiniteGroup::identity)
    throw InvalidArgument(std::string(what) + " must contain the identity");
  if (!std::is_sorted(elems.begin(), elems.end()))
    throw InvalidArgument(std::string(what) + " must be a sorted index list");
  std::vector<char> in(G.order(), 0);
  for (Elem g : elems) {
    if (g >= G.order()) throw InvalidArgument(std::string(what) + " out of range");
    in[g] = 1;
  }
  for (Elem a : elems)
    for (Elem b : elems)
      if (!in[G.mul(a, b)])
        throw InvalidArgument(std::string(what) + " is not closed");
  if (must_be_normal) {
    for (int g = 0; g < G.order(); ++g)
      for (Elem s : elems)
        if (!in[G.mul(G.mul(G.inv(Elem(g)), s), Elem(g))])
          throw InvalidArgument(std::string(what) + " is not normal");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// FiniteGroup

GroupPtr FiniteGroup::from_table(std::string name,
                                 const std::vector<std::vector<int>>& rows,
                                 std::vector<std::string> labels,
                                 GroupMetadata meta) {
  const std::size_t v = rows.size();
  std::vector<Elem> flat;
  flat.reserve(v * v);
  for (const auto& row : rows) {
    if (row.size() != v)
      throw InvalidArgument("multiplication table is not square");
    for (int x : row) {
      if (x < 0 || std::size_t(x) >= v)
        throw InvalidArgument("table entry out of range");
      flat.push_back(Elem(x));
    }
  }
  return from_flat_table(std::move(name), std::move(flat), std::move(labels),
                         std::move(meta));
}

GroupPtr FiniteGroup::from_flat_table(std::string name, std::vector<Elem> flat,
                                      std::vector<std::string> labels,
                                      GroupMetadata meta) {
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->v_ = int(labels.size());
  if (g->v_ < 1) throw InvalidArgument("group must have at least one element");
  if (g->v_ > max_order)
    throw InvalidArgument("group order " + std::to_string(g->v_) +
                          " exceeds the cap of " + std::to_string(max_order));
  if (flat.size() != std::size_t(g->v_) * g->v_)
    throw InvalidArgument("table size does not match the label count");
  g->table_ = std::move(flat);
  g->labels_ = std::move(labels);
  g->name_ = std::move(name);
  g->meta_ = std::move(meta);
  g->uid_ = next_uid.fetch_add(1);
  g->validate();
  g->finalize();

  // Metadata claims are independently re-verified.
  const FiniteGroup& G = *g;
  if (G.meta_.center && *G.meta_.center != G.center_)
    throw InvalidArgument("claimed center does not match the computed center");
  for (const auto& ns : G.meta_.normal_subgroups)
    check_sorted_subgroup_claim(G, ns, /*must_be_normal=*/true,
                                "metadata normal subgroup");
  if (G.meta_.frobenius_kernel)
    check_sorted_subgroup_claim(G, *G.meta_.frobenius_kernel, true,
                                "frobenius kernel");
  if (G.meta_.frobenius_complement)
    check_sorted_subgroup_claim(G, *G.meta_.frobenius_complement, false,
                                "frobenius complement");
  if (G.meta_.frobenius_kernel && G.meta_.frobenius_complement) {
    const auto& K = *G.meta_.frobenius_kernel;
    const auto& H = *G.meta_.frobenius_complement;
    if (std::size_t(G.order()) != K.size() * H.size())
      throw InvalidArgument("kernel/complement sizes do not factor the order");
    if (H.size() > K.size() - 1)
      throw InvalidArgument("complement larger than kernel minus one");
    std::vector<char> in_k(G.order(), 0);
    for (Elem k : K) in_k[k] = 1;
    for (Elem h : H) {
      if (h == identity) continue;
      if (in_k[h]) throw InvalidArgument("kernel and complement overlap");
      for (Elem k : K) {
        if (k == identity) continue;
        Elem conj = G.mul(G.mul(G.inv(h), k), h);
        if (!in_k[conj])
          throw InvalidArgument("complement does not normalize the kernel");
        if (conj == k)
          throw InvalidArgument("complement action has a fixed point");
      }
    }
  }
  return g;
}

void FiniteGroup::validate() const {
  const int v = v_;
  {
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (int(seen.size()) != v) throw InvalidArgument("labels are not distinct");
  }
  for (Elem x : table_)
    if (x >= v) throw InvalidArgument("table entry out of range");
  for (int a = 0; a < v; ++a) {
    if (mul(identity, Elem(a)) != a || mul(Elem(a), identity) != a)
      throw InvalidArgument("index 0 is not a two-sided identity");
  }
  std::vector<char> seen(v);
  for (int a = 0; a < v; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < v; ++b) seen[mul(Elem(a), Elem(b))] = 1;
    if (std::count(seen.begin(), seen.end(), char(1)) != v)
      throw InvalidArgument("row " + std::to_string(a) + " is not a permutation");
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < v; ++b) seen[mul(Elem(b), Elem(a))] = 1;
    if (std::count(seen.begin(), seen.end(), char(1)) != v)
      throw InvalidArgument("column " + std::to_string(a) +
                            " is not a permutation");
  }
  if (v <= 256) {
    for (int a = 0; a < v; ++a)
      for (int b = 0; b < v; ++b) {
        Elem ab = mul(Elem(a), Elem(b));
        for (int c = 0; c < v; ++c)
          if (mul(ab, Elem(c)) != mul(Elem(a), mul(Elem(b), Elem(c))))
            throw InvalidArgument("associativity fails");
      }
  } else {
    std::mt19937_64 rng(0x5EED5EEDull);
    for (int i = 0; i < 100000; ++i) {
      Elem a = Elem(rng() % v), b = Elem(rng() % v), c = Elem(rng() % v);
      if (mul(mul(a, b), c) != mul(a, mul(b, c)))
        throw InvalidArgument("associativity fails (spot check)");
    }
  }
}

void FiniteGroup::finalize() {
  const int v = v_;
  inverse_.assign(v, identity);
  for (int a = 0; a < v; ++a) {
    Elem found = identity;
    bool ok = false;
    for (int b = 0; b < v; ++b) {
      if (mul(Elem(a), Elem(b)) == identity) {
        found = Elem(b);
        ok = true;
        break;
      }
    }
    if (!ok || mul(found, Elem(a)) != identity)
      throw InvalidArgument("element without a two-sided inverse");
    inverse_[a] = found;
  }
  orders_.assign(v, 1);
  for (int a = 0; a < v; ++a) {
    int n = 1;
    Elem x = Elem(a);
    while (x != identity) {
      x = mul(x, Elem(a));
      ++n;
      if (n > v) throw InternalError("element order exceeds the group order");
    }
    orders_[a] = n;
  }
  central_.assign(v, 1);
  abelian_ = true;
  for (int a = 0; a < v; ++a) {
    for (int b = 0; b < v; ++b) {
      if (mul(Elem(a), Elem(b)) != mul(Elem(b), Elem(a))) {
        central_[a] = 0;
        abelian_ = false;
        break;
      }
    }
    if (central_[a]) center_.push_back(Elem(a));
  }
  label_index_.reserve(v);
  for (int a = 0; a < v; ++a) label_index_.emplace(labels_[a], Elem(a));
}

Elem FiniteGroup::pow(Elem g, long long t) const {
  const int o = orders_[g];
  long long r = t % o;
  if (r < 0) r += o;
  Elem acc = identity;
  for (long long i = 0; i < r; ++i) acc = mul(acc, g);
  return acc;
}

std::optional<Elem> FiniteGroup::find_label(const std::string& label) const {
  auto it = label_index_.find(label);
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

Elem FiniteGroup::element_of_label(const std::string& label) const {
  auto e = find_label(label);
  if (!e)
    throw InvalidArgument("no element labeled '" + label + "' in " + name_);
  return *e;
}

// ---------------------------------------------------------------------------
// Subset

Subset::Subset(GroupPtr group) : group_(std::move(group)) {
  if (!group_) throw InvalidArgument("subset requires a group");
  mask_.assign(group_->order(), 0);
}

Subset Subset::of_indices(GroupPtr group, const std::vector<int>& indices) {
  Subset s(std::move(group));
  for (int i : indices) {
    if (i < 0 || i >= s.group_order())
      throw InvalidArgument("element index " + std::to_string(i) +
                            " out of range");
    if (s.mask_[i]) throw InvalidArgument("duplicate element in subset");
    s.insert(Elem(i));
  }
  return s;
}

Subset Subset::of_elements(GroupPtr group, const std::vector<Elem>& elements) {
  std::vector<int> idx(elements.begin(), elements.end());
  return of_indices(std::move(group), idx);
}

Subset Subset::of_labels(GroupPtr group,
                         const std::vector<std::string>& labels) {
  Subset s(group);
  for (const auto& l : labels) {
    Elem g = group->element_of_label(l);
    if (s.mask_[g]) throw InvalidArgument("duplicate element '" + l + "'");
    s.insert(g);
  }
  return s;
}

Subset Subset::full(GroupPtr group) {
  Subset s(std::move(group));
  std::fill(s.mask_.begin(), s.mask_.end(), std::uint8_t(1));
  s.size_ = s.group_order();
  return s;
}

void Subset::insert(Elem g) {
  if (g >= mask_.size()) throw InvalidArgument("element out of range");
  if (!mask_[g]) {
    mask_[g] = 1;
    ++size_;
  }
}

void Subset::erase(Elem g) {
  if (g >= mask_.size()) throw InvalidArgument("element out of range");
  if (mask_[g]) {
    mask_[g] = 0;
    --size_;
  }
}

std::vector<Elem> Subset::elements() const {
  std::vector<Elem> out;
  out.reserve(size_);
  for (std::size_t i = 0; i < mask_.size(); ++i)
    if (mask_[i]) out.push_back(Elem(i));
  return out;
}

std::vector<std::string> Subset::labels() const {
  std::vector<std::string> out;
  out.reserve(size_);
  for (std::size_t i = 0; i < mask_.size(); ++i)
    if (mask_[i]) out.push_back(group_->label(Elem(i)));
  return out;
}

Subset Subset::inverses() const {
  Subset out(group_);
  for (std::size_t i = 0; i < mask_.size(); ++i)
    if (mask_[i]) out.insert(group_->inv(Elem(i)));
  return out;
}

Subset Subset::translated_right(Elem g) const {
  Subset out(group_);
  for (std::size_t i = 0; i < mask_.size(); ++i)
    if (mask_[i]) out.insert(group_->mul(Elem(i), g));
  return out;
}

Subset Subset::translated_left(Elem g) const {
  Subset out(group_);
  for (std::size_t i = 0; i < mask_.size(); ++i)
    if (mask_[i]) out.insert(group_->mul(g, Elem(i)));
  return out;
}

Subset Subset::complement() const {
  Subset out(group_);
  for (std::size_t i = 0; i < mask_.size(); ++i)
    if (!mask_[i]) out.insert(Elem(i));
  return out;
}

Subset Subset::intersect(const Subset& other) const {
  require_same_group(other);
  Subset out(group_);
  for (std::size_t i = 0; i < mask_.size(); ++i)
    if (mask_[i] && other.mask_[i]) out.insert(Elem(i));
  return out;
}

Subset Subset::unite(const Subset& other) const {
  require_same_group(other);
  Subset out(group_);
  for (std::size_t i = 0; i < mask_.size(); ++i)
    if (mask_[i] || other.mask_[i]) out.insert(Elem(i));
  return out;
}

bool Subset::is_subset_of(const Subset& other) const {
  require_same_group(other);
  for (std::size_t i = 0; i < mask_.size(); ++i)
    if (mask_[i] && !other.mask_[i]) return false;
  return true;
}

bool Subset::is_subgroup() const {
  if (!contains(FiniteGroup::identity)) return false;
  auto elems = elements();
  for (Elem a : elems)
    for (Elem b : elems)
      if (!contains(group_->mul(a, b))) return false;
  return true;
}

bool Subset::is_normal_subgroup() const {
  if (!is_subgroup()) return false;
  auto elems = elements();
  for (int g = 0; g < group_order(); ++g) {
    Elem gi = group_->inv(Elem(g));
    for (Elem s : elems)
      if (!contains(group_->mul(group_->mul(gi, s), Elem(g)))) return false;
  }
  return true;
}

bool Subset::operator==(const Subset& other) const {
  require_same_group(other);
  return mask_ == other.mask_;
}

bool Subset::operator<(const Subset& other) const {
  require_same_group(other);
  return mask_ < other.mask_;
}

void Subset::require_same_group(const Subset& other) const {
  if (!group_ || !other.group_ || group_->uid() != other.group_->uid())
    throw GroupMismatch("subsets belong to different groups");
}

// ---------------------------------------------------------------------------
// Builders

namespace {

struct TableDraft {
  std::vector<Elem> flat;
  std::vector<std::string> labels;
};

TableDraft generalized_dihedral_table(const FiniteGroup& A) {
  const int m = A.order();
  const int v = 2 * m;
  TableDraft d;
  d.flat.assign(std::size_t(v) * v, 0);
  d.labels.resize(v);
  auto idx = [m](int a, int e) { return Elem(e * m + a); };
  for (int a = 0; a < m; ++a) {
    d.labels[idx(a, 0)] = A.label(Elem(a));
    d.labels[idx(a, 1)] =
        a == FiniteGroup::identity ? "t" : A.label(Elem(a)) + "t";
  }
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      Elem ab = A.mul(Elem(a), Elem(b));
      Elem abi = A.mul(Elem(a), A.inv(Elem(b)));
      d.flat[std::size_t(idx(a, 0)) * v + idx(b, 0)] = idx(ab, 0);
      d.flat[std::size_t(idx(a, 0)) * v + idx(b, 1)] = idx(ab, 1);
      d.flat[std::size_t(idx(a, 1)) * v + idx(b, 0)] = idx(abi, 1);
      d.flat[std::size_t(idx(a, 1)) * v + idx(b, 1)] = idx(abi, 0);
    }
  }
  return d;
}

std::map<int, FieldPtr>& field_cache() {
  static std::map<int, FieldPtr> cache;
  return cache;
}
std::mutex field_mutex;

}  // namespace

FieldPtr field_of(int q) {
  std::lock_guard<std::mutex> lock(field_mutex);
  auto& cache = field_cache();
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;
  auto f = make_field(q);
  cache.emplace(q, f);
  return f;
}

GroupPtr make_cyclic(int n) {
  if (n < 1) throw InvalidArgument("cyclic group order must be positive");
  std::vector<Elem> flat(std::size_t(n) * n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = or_identity(power_label("x", i));
    for (int j = 0; j < n; ++j) flat[std::size_t(i) * n + j] = Elem((i + j) % n);
  }
  return FiniteGroup::from_flat_table("cyclic:" + std::to_string(n),
                                      std::move(flat), std::move(labels));
}

GroupPtr make_dihedral(int n) {
  if (n < 3) throw InvalidArgument("dihedral group requires n >= 3");
  auto rotations = make_cyclic(n);
  TableDraft d = generalized_dihedral_table(*rotations);
  GroupMetadata meta;
  meta.center = n % 2 == 0 ? std::vector<Elem>{0, Elem(n / 2)}
                           : std::vector<Elem>{0};
  std::vector<Elem> rot(n);
  for (int i = 0; i < n; ++i) rot[i] = Elem(i);
  meta.normal_subgroups.push_back(rot);
  meta.notes = "x of order " + std::to_string(n) + ", involution t inverts x";
  return FiniteGroup::from_flat_table("dihedral:" + std::to_string(n),
                                      std::move(d.flat), std::move(d.labels),
                                      std::move(meta));
}

GroupPtr make_generalized_dihedral(const GroupPtr& A) {
  if (!A) throw InvalidArgument("generalized dihedral requires a group");
  if (!A->is_abelian())
    throw InvalidArgument(
        "generalized dihedral requires an abelian group (inversion must be "
        "an automorphism), got " +
        A->name());
  TableDraft d = generalized_dihedral_table(*A);
  GroupMetadata meta;
  std::vector<Elem> base(A->order());
  for (int i = 0; i < A->order(); ++i) base[i] = Elem(i);
  meta.normal_subgroups.push_back(base);
  meta.notes = "involution t inverts the abelian part " + A->name();
  return FiniteGroup::from_flat_table("dihof:" + A->name(), std::move(d.flat),
                                      std::move(d.labels), std::move(meta));
}

GroupPtr make_dstar(int n) {
  if (n < 3 || n % 2 == 0)
    throw InvalidArgument(
        "the order-4n presentation <x,t | x^n = t^4 = 1, t^-1 x t = x^-1> is "
        "built only for odd n >= 3");
  const int v = 4 * n;
  std::vector<Elem> flat(std::size_t(v) * v);
  std::vector<std::string> labels(v);
  auto idx = [n](int i, int j) { return Elem(j * n + i); };
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < n; ++i)
      labels[idx(i, j)] = or_identity(power_label("x", i) + power_label("t", j));
  for (int j = 0; j < 4; ++j) {
    for (int i = 0; i < n; ++i) {
      for (int l = 0; l < 4; ++l) {
        for (int k = 0; k < n; ++k) {
          int ii = (j % 2 == 0) ? (i + k) % n : (i - k % n + n) % n;
          flat[std::size_t(idx(i, j)) * v + idx(k, l)] = idx(ii, (j + l) % 4);
        }
      }
    }
  }
  GroupMetadata meta;
  meta.center = std::vector<Elem>{0, Elem(2 * n)};
  meta.normal_subgroups.push_back({0, Elem(2 * n)});
  meta.notes =
      "x^n = t^4 = 1 with t^-1 x t = x^-1; the quotient by the center {1,t2} "
      "has the dihedral table of order " +
      std::to_string(2 * n);
  return FiniteGroup::from_flat_table("dstar:" + std::to_string(n),
                                      std::move(flat), std::move(labels),
                                      std::move(meta));
}

GroupPtr make_elementary_abelian(int q) {
  auto f = field_of(q);
  std::vector<Elem> flat(std::size_t(q) * q);
  std::vector<std::string> labels(q);
  for (int a = 0; a < q; ++a) {
    labels[a] = a == 0 ? "1" : "k" + std::to_string(a);
    for (int b = 0; b < q; ++b)
      flat[std::size_t(a) * q + b] = Elem(f->add(a, b));
  }
  GroupMetadata meta;
  meta.notes = "additive group of GF(" + std::to_string(q) + ")";
  return FiniteGroup::from_flat_table("ea:" + std::to_string(q),
                                      std::move(flat), std::move(labels),
                                      std::move(meta));
}

namespace {

// Shared builder for the affine group and its Frobenius subgroups: elements
// (a, b) with a drawn from a multiplicative subgroup (ascending field index,
// starting at 1) and b any field element; (a1,b1)(a2,b2) = (a1a2, a1b2+b1).
GroupPtr make_affine_like(const FieldPtr& f, const std::vector<int>& slopes,
                          std::string name) {
  const int q = f->q();
  const int d = int(slopes.size());
  const int v = q * d;
  if (v > FiniteGroup::max_order)
    throw InvalidArgument("group order " + std::to_string(v) +
                          " exceeds the cap");
  std::vector<int> rank(q, -1);
  for (int r = 0; r < d; ++r) rank[slopes[r]] = r;
  auto idx = [&](int a, int b) { return Elem(rank[a] * q + b); };
  std::vector<Elem> flat(std::size_t(v) * v);
  std::vector<std::string> labels(v);
  for (int r = 0; r < d; ++r) {
    int a = slopes[r];
    for (int b = 0; b < q; ++b) {
      std::string l;
      if (b != 0) l += "k" + std::to_string(b);
      if (a != 1) l += "h" + std::to_string(a);
      labels[idx(a, b)] = or_identity(std::move(l));
    }
  }
  for (int r1 = 0; r1 < d; ++r1) {
    int a1 = slopes[r1];
    for (int b1 = 0; b1 < q; ++b1) {
      for (int r2 = 0; r2 < d; ++r2) {
        int a2 = slopes[r2];
        for (int b2 = 0; b2 < q; ++b2) {
          int a = f->mul(a1, a2);
          int b = f->add(f->mul(a1, b2), b1);
          flat[std::size_t(idx(a1, b1)) * v + idx(a2, b2)] = idx(a, b);
        }
      }
    }
  }
  GroupMetadata meta;
  std::vector<Elem> kernel(q), complement(d);
  for (int b = 0; b < q; ++b) kernel[b] = idx(1, b);
  for (int r = 0; r < d; ++r) complement[r] = Elem(r * q);
  std::sort(kernel.begin(), kernel.end());
  std::sort(complement.begin(), complement.end());
  meta.frobenius_kernel = kernel;
  meta.frobenius_complement = complement;
  meta.normal_subgroups.push_back(kernel);
  meta.notes = "translations k<b>: x -> x+b, scalings h<a>: x -> ax over GF(" +
               std::to_string(q) + ")";
  return FiniteGroup::from_flat_table(std::move(name), std::move(flat),
                                      std::move(labels), std::move(meta));
}

}  // namespace

GroupPtr make_affine(int q) {
  if (q < 3)
    throw InvalidArgument("affine group needs q >= 3 to be a Frobenius group");
  auto f = field_of(q);
  std::vector<int> slopes;
  for (int a = 1; a < q; ++a) slopes.push_back(a);
  return make_affine_like(f, slopes, "aff:" + std::to_string(q));
}

GroupPtr make_frobenius_subgroup(int q, int d) {
  if (q < 3) throw InvalidArgument("needs q >= 3");
  if (d < 2)
    throw InvalidArgument("slope subgroup must have order at least 2");
  if ((q - 1) % d != 0)
    throw InvalidArgument(std::to_string(d) + " does not divide q-1 = " +
                          std::to_string(q - 1));
  auto f = field_of(q);
  std::vector<int> slopes;
  for (int a = 1; a < q; ++a)
    if (f->pow(a, d) == 1) slopes.push_back(a);
  if (int(slopes.size()) != d)
    throw InternalError("slope subgroup has the wrong size");
  return make_affine_like(
      f, slopes, "frob:" + std::to_string(q) + ":" + std::to_string(d));
}

GroupPtr direct_product(const GroupPtr& G, const GroupPtr& H) {
  if (!G || !H) throw InvalidArgument("direct product requires two groups");
  const int og = G->order(), oh = H->order();
  if (std::size_t(og) * oh > FiniteGroup::max_order)
    throw InvalidArgument("product order exceeds the cap");
  const int v = og * oh;
  auto idx = [oh](int g, int h) { return Elem(g * oh + h); };
  std::vector<Elem> flat(std::size_t(v) * v);
  std::vector<std::string> labels(v);
  for (int g = 0; g < og; ++g)
    for (int h = 0; h < oh; ++h)
      labels[idx(g, h)] = G->label(Elem(g)) + "." + H->label(Elem(h));
  for (int g1 = 0; g1 < og; ++g1)
    for (int h1 = 0; h1 < oh; ++h1)
      for (int g2 = 0; g2 < og; ++g2)
        for (int h2 = 0; h2 < oh; ++h2)
          flat[std::size_t(idx(g1, h1)) * v + idx(g2, h2)] =
              idx(G->mul(Elem(g1), Elem(g2)), H->mul(Elem(h1), Elem(h2)));

  GroupMetadata meta;
  // Normal subgroups lift as products; the two factors themselves always do.
  std::vector<std::vector<Elem>> factors_g = {{}};
  factors_g.back().resize(og);
  for (int g = 0; g < og; ++g) factors_g.back()[g] = Elem(g);
  std::vector<std::vector<Elem>> factors_h = {{}};
  factors_h.back().resize(oh);
  for (int h = 0; h < oh; ++h) factors_h.back()[h] = Elem(h);
  auto lift = [&](const std::vector<Elem>& ng, const std::vector<Elem>& nh) {
    std::vector<Elem> out;
    for (Elem g : ng)
      for (Elem h : nh) out.push_back(idx(g, h));
    std::sort(out.begin(), out.end());
    return out;
  };
  std::set<std::vector<Elem>> lifted;
  lifted.insert(lift(factors_g.back(), {0}));
  lifted.insert(lift({0}, factors_h.back()));
  for (const auto& ng : G->metadata().normal_subgroups)
    for (const auto& nh : H->metadata().normal_subgroups)
      lifted.insert(lift(ng, nh));
  meta.normal_subgroups.assign(lifted.begin(), lifted.end());
  return FiniteGroup::from_flat_table("prod:" + G->name() + "," + H->name(),
                                      std::move(flat), std::move(labels),
                                      std::move(meta));
}

Quotient quotient(const GroupPtr& G, const Subset& N) {
  if (!G) throw InvalidArgument("quotient requires a group");
  if (!N.group() || N.group()->uid() != G->uid())
    throw GroupMismatch("subgroup belongs to a different group");
  if (!N.is_normal_subgroup())
    throw InvalidArgument("can only quotient by a normal subgroup");
  const int v = G->order();
  std::vector<int> coset_min(v, -1);
  std::vector<Elem> mins;
  auto n_elems = N.elements();
  for (int g = 0; g < v; ++g) {
    if (coset_min[g] >= 0) continue;
    Elem lo = Elem(g);
    std::vector<Elem> coset;
    for (Elem n : n_elems) {
      Elem gn = G->mul(Elem(g), n);
      coset.push_back(gn);
      lo = std::min(lo, gn);
    }
    for (Elem gn : coset) coset_min[gn] = lo;
    mins.push_back(lo);
  }
  std::sort(mins.begin(), mins.end());
  std::vector<int> rank(v, -1);
  for (std::size_t i = 0; i < mins.size(); ++i) rank[mins[i]] = int(i);
  const int nc = int(mins.size());
  std::vector<Elem> proj(v);
  for (int g = 0; g < v; ++g) proj[g] = Elem(rank[coset_min[g]]);

  std::vector<Elem> flat(std::size_t(nc) * nc);
  std::vector<std::string> labels(nc);
  for (int i = 0; i < nc; ++i) {
    labels[i] = G->label(mins[i]);
    for (int j = 0; j < nc; ++j)
      flat[std::size_t(i) * nc + j] = proj[G->mul(mins[i], mins[j])];
  }
  Quotient out;
  out.group = FiniteGroup::from_flat_table(
      G->name() + "/" + subset_brace_list(N), std::move(flat),
      std::move(labels));
  out.projection = proj;
  out.representative = mins;
  // The projection must be a homomorphism everywhere, not just on the
  // representatives used to fill the table.
  for (int g = 0; g < v; ++g)
    for (int h = 0; h < v; ++h)
      if (out.group->mul(proj[g], proj[h]) != proj[G->mul(Elem(g), Elem(h))])
        throw InternalError("quotient projection is not a homomorphism");
  return out;
}

std::vector<Subset> subgroups(const GroupPtr& G, bool normal_only) {
  if (!G) throw InvalidArgument("subgroup enumeration requires a group");
  const int v = G->order();
  if (v > 64) {
    if (normal_only && !G->metadata().normal_subgroups.empty()) {
      std::vector<Subset> out;
      Subset triv(G);
      triv.insert(FiniteGroup::identity);
      out.push_back(triv);
      for (const auto& ns : G->metadata().normal_subgroups)
        out.push_back(Subset::of_elements(G, ns));
      out.push_back(Subset::full(G));
      std::sort(out.begin(), out.end(),
                [](const Subset& a, const Subset& b) {
                  return a.size() != b.size() ? a.size() < b.size() : a < b;
                });
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }
    throw BudgetExceeded(
        "subgroup enumeration is exhaustive only up to order 64 and " +
        G->name() + " carries no subgroup metadata");
  }

  using Mask = std::vector<std::uint8_t>;
  auto closure = [&](Mask seed) {
    std::vector<Elem> members;
    for (int g = 0; g < v; ++g)
      if (seed[g]) members.push_back(Elem(g));
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = 0; j < members.size(); ++j) {
        Elem p = G->mul(members[i], members[j]);
        if (!seed[p]) {
          seed[p] = 1;
          members.push_back(p);
        }
      }
    }
    return seed;
  };

  std::set<Mask> known;
  std::vector<Mask> order_added;
  Mask trivial(v, 0);
  trivial[FiniteGroup::identity] = 1;
  known.insert(trivial);
  order_added.push_back(trivial);
  for (int g = 0; g < v; ++g) {
    Mask seed(v, 0);
    seed[FiniteGroup::identity] = 1;
    seed[g] = 1;
    Mask c = closure(std::move(seed));
    if (known.insert(c).second) order_added.push_back(c);
  }
  for (std::size_t i = 0; i < order_added.size(); ++i) {
    Mask base = order_added[i];
    for (int g = 0; g < v; ++g) {
      if (base[g]) continue;
      Mask seed = base;
      seed[g] = 1;
      Mask c = closure(std::move(seed));
      if (known.insert(c).second) order_added.push_back(c);
    }
  }

  std::vector<Subset> out;
  for (const auto& mask : known) {
    Subset s(G);
    for (int g = 0; g < v; ++g)
      if (mask[g]) s.insert(Elem(g));
    if (normal_only && !s.is_normal_subgroup()) continue;
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const Subset& a, const Subset& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

Subset center(const GroupPtr& G) {
  if (!G) throw InvalidArgument("center requires a group");
  return Subset::of_elements(G, G->center_elements());
}

Subset conjugate_subset(const Subset& S, Elem g) {
  const auto& G = S.group();
  if (!G) throw InvalidArgument("conjugation requires an attached group");
  if (g >= G->order()) throw InvalidArgument("conjugating element out of range");
  Subset out(G);
  Elem gi = G->inv(g);
  for (Elem s : S.elements()) out.insert(G->mul(G->mul(gi, s), g));
  return out;
}

}  // namespace sumset
