#include "sumset/regularity.hpp"

#include <algorithm>
#include <sstream>

#include "sumset/errors.hpp"

namespace sumset::regularity {

std::string Params::to_string() const {
  std::ostringstream os;
  os << "(" << v << ", " << k << ", ";
  if (lambda) os << *lambda << ", ";
  os << mu << ") [n=" << n << ", s_inv=" << s_inv << "]";
  return os.str();
}

Params sum_set_params(std::int64_t v, std::int64_t k, std::int64_t mu) {
  Params p;
  p.v = v;
  p.k = k;
  p.mu = mu;
  p.n = k * k - mu * v;
  p.s_inv = k * k - mu * (v - 1);
  return p;
}

Params pss_params(std::int64_t v, std::int64_t k, std::int64_t lambda,
                  std::int64_t mu, std::int64_t s_inv) {
  Params p;
  p.v = v;
  p.k = k;
  p.lambda = lambda;
  p.mu = mu;
  p.n = k * k - mu * v;
  p.s_inv = s_inv;
  return p;
}

Params complement_params(const Params& p) {
  Params c;
  c.v = p.v;
  c.k = p.v - p.k;
  const std::int64_t shift = p.v - 2 * p.k;
  if (p.lambda) {
    // In-set and out-of-set counts trade places.
    c.lambda = shift + p.mu;
    c.mu = shift + *p.lambda;
  } else {
    c.mu = shift + p.mu;
  }
  c.n = c.k * c.k - c.mu * c.v;
  c.s_inv = p.s_inv + shift;
  return c;
}

Profile profile(const Subset& S) {
  const FiniteGroup& G = *S.group();
  const std::size_t v = G.order();
  Profile pr;
  pr.group = S.group();
  pr.set = S;
  pr.product_counts.assign(v, 0);
  pr.quotient_counts.assign(v, 0);
  const std::vector<Elem> el = S.elements();
  for (Elem x : el) {
    for (Elem y : el) {
      ++pr.product_counts[G.mul(x, y)];
      ++pr.quotient_counts[G.mul(x, G.inv(y))];
    }
  }
  const auto k = static_cast<std::int64_t>(el.size());
  std::int64_t total_p = 0, total_q = 0;
  for (std::size_t g = 0; g < v; ++g) {
    total_p += pr.product_counts[g];
    total_q += pr.quotient_counts[g];
  }
  if (total_p != k * k || total_q != k * k ||
      pr.quotient_counts[FiniteGroup::identity] != k) {
    throw InternalError("representation counts failed mass checks");
  }
  return pr;
}

namespace {

// Tracks whether a stream of values is constant, and what the value is.
class ConstScan {
 public:
  void feed(std::int64_t x) {
    if (!value_) {
      value_ = x;
    } else if (*value_ != x) {
      constant_ = false;
    }
  }
  bool constant() const { return constant_; }
  bool seen() const { return value_.has_value(); }
  std::int64_t value() const { return *value_; }

 private:
  std::optional<std::int64_t> value_;
  bool constant_ = true;
};

bool trivial_shape(const Subset& S) {
  const FiniteGroup& G = *S.group();
  const std::size_t k = S.size();
  if (k == 0 || k == G.order()) return true;
  if (k == 1) {
    return G.element_order(S.elements().front()) <= 2;
  }
  if (k == G.order() - 1) {
    for (Elem g = 0; g < G.order(); ++g) {
      if (!S.contains(g)) return G.element_order(g) <= 2;
    }
  }
  return false;
}

}  // namespace

Classification classify(const Subset& S) {
  const FiniteGroup& G = *S.group();
  const Profile pr = profile(S);
  const auto v = static_cast<std::int64_t>(G.order());
  const auto k = static_cast<std::int64_t>(S.size());
  const std::int64_t s_inv = pr.product_counts[FiniteGroup::identity];

  ConstScan all, inside, outside, diffs;
  for (Elem g = 1; g < G.order(); ++g) {
    const std::int64_t c = pr.product_counts[g];
    all.feed(c);
    (S.contains(g) ? inside : outside).feed(c);
    diffs.feed(pr.quotient_counts[g]);
  }

  Classification out;
  out.is_sum_set = all.constant();
  out.is_partial_sum_set = inside.constant() && outside.constant();
  if (out.is_sum_set) {
    const std::int64_t mu = all.seen() ? all.value() : 0;
    out.params = sum_set_params(v, k, mu);
    if (out.params->s_inv != s_inv) {
      throw InternalError("representation identity k^2 = mu(v-1) + s_inv failed");
    }
  } else if (out.is_partial_sum_set) {
    // A constant-valued split with an empty side would be a sum set, so both
    // sides have been seen here.
    out.params = pss_params(v, k, inside.value(), outside.value(), s_inv);
  }

  if (diffs.constant()) {
    out.is_difference_set = true;
    out.ds_lambda = diffs.seen() ? diffs.value() : 0;
  }

  out.is_skew = (s_inv == 0);
  out.is_reversible = (S == S.inverses());
  if (out.is_skew) {
    out.is_maximal_skew = maximal_skew_test(S);
  }
  out.is_trivial = trivial_shape(S);

  for (Elem z : G.center_elements()) {
    if (G.element_order(z) != 2) continue;
    Subset N = Subset::of_indices(S.group(), {FiniteGroup::identity, z});
    out.type_wrt.push_back({z, type_classify(S, N)});
  }
  return out;
}

SpecialSubsets special_subsets(const Subset& S, Elem a) {
  const FiniteGroup& G = *S.group();
  if (a >= G.order()) throw InvalidArgument("target element out of range");
  SpecialSubsets r{Subset(S.group()), Subset(S.group()), Subset(S.group())};
  const Elem ai = G.inv(a);
  for (Elem x : S.elements()) {
    if (S.contains(G.mul(ai, x))) r.A.insert(x);  // a = x (a^-1 x)^-1
    if (S.contains(G.mul(a, x))) r.B.insert(x);   // a = (a x) x^-1
    if (S.contains(G.mul(G.inv(x), a))) r.C.insert(x);  // a = x (x^-1 a)
  }
  return r;
}

CosetType type_classify(const Subset& S, const Subset& N) {
  const FiniteGroup& G = *S.group();
  if (N.group() != S.group()) throw GroupMismatch("subgroup from another group");
  if (N.size() != 2 || !N.contains(FiniteGroup::identity)) {
    throw InvalidArgument("require a subgroup {1, z} of order 2");
  }
  Elem z = FiniteGroup::identity;
  for (Elem g : N.elements()) {
    if (g != FiniteGroup::identity) z = g;
  }
  if (!G.is_central(z)) {
    throw InvalidArgument("order-2 subgroup must be central");
  }

  const std::size_t in_N = (S.contains(FiniteGroup::identity) ? 1u : 0u) +
                           (S.contains(z) ? 1u : 0u);
  bool cosets_le1 = true;   // every coset outside N meets S at most once
  bool cosets_0or2 = true;  // every coset outside N meets S zero or two times
  std::vector<char> seen(G.order(), 0);
  seen[FiniteGroup::identity] = seen[z] = 1;
  for (Elem g = 0; g < G.order(); ++g) {
    if (seen[g]) continue;
    const Elem gz = G.mul(g, z);
    seen[g] = seen[gz] = 1;
    const std::size_t hits =
        (S.contains(g) ? 1u : 0u) + (S.contains(gz) ? 1u : 0u);
    if (hits > 1) cosets_le1 = false;
    if (hits == 1) cosets_0or2 = false;
  }

  if (in_N == 0 && cosets_le1) return CosetType::type1;
  if (in_N == 1 && cosets_0or2) return CosetType::type2;
  return CosetType::neither;
}

const char* coset_type_name(CosetType t) {
  switch (t) {
    case CosetType::type1:
      return "type1";
    case CosetType::type2:
      return "type2";
    default:
      return "neither";
  }
}

Subset central_translate(const Subset& S, Elem z) {
  const FiniteGroup& G = *S.group();
  if (z >= G.order()) throw InvalidArgument("translate element out of range");
  if (!G.is_central(z) || G.element_order(z) > 2) {
    throw InvalidArgument("translate requires a central element with z^2 = 1");
  }
  return S.translated_right(z);
}

bool maximal_skew_test(const Subset& S) {
  const FiniteGroup& G = *S.group();
  const Subset Sinv = S.inverses();
  if (!S.intersect(Sinv).empty()) {
    throw InvalidArgument("maximal-skew test requires a skew set");
  }
  for (Elem g = 0; g < G.order(); ++g) {
    if (G.element_order(g) > 2 && !S.contains(g) && !Sinv.contains(g)) {
      return false;
    }
  }
  return true;
}

}  // namespace sumset::regularity
