#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumset/group.hpp"

namespace sumset::ring {

// Overflow-checked 64-bit arithmetic; all ring operations route through
// these so coefficient blow-ups surface as errors instead of wrapping.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw Overflow("coefficient addition overflows 64 bits");
  return r;
}
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Overflow("coefficient multiplication overflows 64 bits");
  return r;
}
std::int64_t checked_pow(std::int64_t base, int exp);

// An element of the integral group ring: one 64-bit coefficient per group
// element.
struct RingElement {
  GroupPtr group;
  std::vector<std::int64_t> coeffs;

  std::int64_t at(Elem g) const { return coeffs[g]; }
  bool operator==(const RingElement& o) const {
    return group->uid() == o.group->uid() && coeffs == o.coeffs;
  }
};

RingElement zero(const GroupPtr& G);
RingElement one(const GroupPtr& G);        // the identity element with coefficient 1
RingElement group_sum(const GroupPtr& G);  // every element with coefficient 1
RingElement from_subset(const Subset& S);

RingElement add(const RingElement& a, const RingElement& b);
RingElement subtract(const RingElement& a, const RingElement& b);
RingElement scalar_multiply(std::int64_t c, const RingElement& a);
// Convolution: (sum a_g g)(sum b_h h) = sum_g,h a_g b_h (gh).
RingElement multiply(const RingElement& a, const RingElement& b);
RingElement power(const RingElement& a, int exp);  // exp >= 0

// Coefficient transport along g -> g^t (t may be negative; t = -1 sends a
// subset element to its inverse set).
RingElement power_map(const RingElement& a, long long t);

std::int64_t coefficient_sum(const RingElement& a);

// Closed forms for powers of a (v,k,mu) sum set S with n = k^2 - mu*v:
//   S^(2m)   = ((k^(2m) - n^m)/v) G + n^m 1
//   S^(2m+1) = (k(k^(2m) - n^m)/v) G + n^m S
// n is taken as an input and cross-checked through the divisibility of the
// rational coefficient; a non-integral coefficient means the (k, n) pair
// does not belong to a sum set on this group.
RingElement sum_set_even_power_closed_form(const GroupPtr& G, std::int64_t k,
                                           std::int64_t n, int m);
RingElement sum_set_odd_power_closed_form(const GroupPtr& G, std::int64_t k,
                                          std::int64_t n, int m,
                                          const Subset& S);

struct CongruenceReport {
  bool holds = false;
  // First element where S^p and S^(p) differ mod p, when they do.
  std::optional<std::string> witness_label;
  std::int64_t lhs = 0, rhs = 0;
};

// Verifies S^p == S^(p) mod p in the group ring of an abelian group.
CongruenceReport frobenius_congruence_check(const Subset& S, int p);

}  // namespace sumset::ring
