#include "sumset/ring.hpp"

#include <algorithm>

namespace sumset::ring {
namespace {

void require_same_group(const RingElement& a, const RingElement& b) {
  if (!a.group || !b.group || a.group->uid() != b.group->uid())
    throw GroupMismatch("ring elements belong to different groups");
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

std::int64_t checked_pow(std::int64_t base, int exp) {
  if (exp < 0) throw InvalidArgument("negative integer power");
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

RingElement zero(const GroupPtr& G) {
  if (!G) throw InvalidArgument("ring element requires a group");
  return RingElement{G, std::vector<std::int64_t>(G->order(), 0)};
}

RingElement one(const GroupPtr& G) {
  RingElement r = zero(G);
  r.coeffs[FiniteGroup::identity] = 1;
  return r;
}

RingElement group_sum(const GroupPtr& G) {
  RingElement r = zero(G);
  std::fill(r.coeffs.begin(), r.coeffs.end(), 1);
  return r;
}

RingElement from_subset(const Subset& S) {
  RingElement r = zero(S.group());
  for (Elem g : S.elements()) r.coeffs[g] = 1;
  return r;
}

RingElement add(const RingElement& a, const RingElement& b) {
  require_same_group(a, b);
  RingElement r = a;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i)
    r.coeffs[i] = checked_add(r.coeffs[i], b.coeffs[i]);
  return r;
}

RingElement subtract(const RingElement& a, const RingElement& b) {
  require_same_group(a, b);
  RingElement r = a;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i)
    r.coeffs[i] = checked_add(r.coeffs[i], checked_mul(-1, b.coeffs[i]));
  return r;
}

RingElement scalar_multiply(std::int64_t c, const RingElement& a) {
  RingElement r = a;
  for (auto& x : r.coeffs) x = checked_mul(c, x);
  return r;
}

RingElement multiply(const RingElement& a, const RingElement& b) {
  require_same_group(a, b);
  const auto& G = *a.group;
  RingElement r = zero(a.group);
  std::vector<Elem> sa, sb;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    if (a.coeffs[i] != 0) sa.push_back(Elem(i));
  for (std::size_t i = 0; i < b.coeffs.size(); ++i)
    if (b.coeffs[i] != 0) sb.push_back(Elem(i));
  for (Elem g : sa) {
    const std::int64_t ag = a.coeffs[g];
    for (Elem h : sb) {
      Elem gh = G.mul(g, h);
      r.coeffs[gh] = checked_add(r.coeffs[gh], checked_mul(ag, b.coeffs[h]));
    }
  }
  return r;
}

RingElement power(const RingElement& a, int exp) {
  if (exp < 0) throw InvalidArgument("ring elements only take powers >= 0");
  RingElement r = one(a.group);
  for (int i = 0; i < exp; ++i) r = multiply(r, a);
  return r;
}

RingElement power_map(const RingElement& a, long long t) {
  const auto& G = *a.group;
  RingElement r = zero(a.group);
  for (std::size_t g = 0; g < a.coeffs.size(); ++g) {
    if (a.coeffs[g] == 0) continue;
    Elem gt = G.pow(Elem(g), t);
    r.coeffs[gt] = checked_add(r.coeffs[gt], a.coeffs[g]);
  }
  return r;
}

std::int64_t coefficient_sum(const RingElement& a) {
  std::int64_t s = 0;
  for (auto x : a.coeffs) s = checked_add(s, x);
  return s;
}

RingElement sum_set_even_power_closed_form(const GroupPtr& G, std::int64_t k,
                                           std::int64_t n, int m) {
  if (!G) throw InvalidArgument("closed form requires a group");
  if (m < 1) throw InvalidArgument("closed form requires m >= 1");
  const std::int64_t v = G->order();
  std::int64_t nm = n >= 0 ? checked_pow(n, m)
                           : checked_mul(m % 2 == 0 ? 1 : -1,
                                         checked_pow(-n, m));
  std::int64_t num = checked_add(checked_pow(k, 2 * m), -nm);
  if (num % v != 0)
    throw InvalidArgument(
        "closed-form coefficient is not integral: (k, n) do not belong to a "
        "sum set of this order");
  RingElement r = scalar_multiply(num / v, group_sum(G));
  r.coeffs[FiniteGroup::identity] =
      checked_add(r.coeffs[FiniteGroup::identity], nm);
  return r;
}

RingElement sum_set_odd_power_closed_form(const GroupPtr& G, std::int64_t k,
                                          std::int64_t n, int m,
                                          const Subset& S) {
  if (!G) throw InvalidArgument("closed form requires a group");
  if (m < 0) throw InvalidArgument("closed form requires m >= 0");
  if (!S.group() || S.group()->uid() != G->uid())
    throw GroupMismatch("subset belongs to a different group");
  const std::int64_t v = G->order();
  std::int64_t nm = n >= 0 ? checked_pow(n, m)
                           : checked_mul(m % 2 == 0 ? 1 : -1,
                                         checked_pow(-n, m));
  std::int64_t num = checked_mul(k, checked_add(checked_pow(k, 2 * m), -nm));
  if (num % v != 0)
    throw InvalidArgument(
        "closed-form coefficient is not integral: (k, n) do not belong to a "
        "sum set of this order");
  RingElement r = scalar_multiply(num / v, group_sum(G));
  return add(r, scalar_multiply(nm, from_subset(S)));
}

CongruenceReport frobenius_congruence_check(const Subset& S, int p) {
  const auto& G = S.group();
  if (!G) throw InvalidArgument("congruence check requires a subset");
  if (!G->is_abelian())
    throw InvalidArgument(
        "the power-to-power-map congruence is checked for abelian groups "
        "only");
  if (!is_prime(p)) throw InvalidArgument("modulus must be prime");
  RingElement lhs = power(from_subset(S), p);
  RingElement rhs = power_map(from_subset(S), p);
  CongruenceReport report;
  report.holds = true;
  for (std::size_t g = 0; g < lhs.coeffs.size(); ++g) {
    std::int64_t d = (lhs.coeffs[g] - rhs.coeffs[g]) % p;
    if (d != 0) {
      report.holds = false;
      report.witness_label = G->label(Elem(g));
      report.lhs = lhs.coeffs[g];
      report.rhs = rhs.coeffs[g];
      break;
    }
  }
  return report;
}

}  // namespace sumset::ring
