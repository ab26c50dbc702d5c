#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "sumset/errors.hpp"

namespace sumset {

// Table-backed finite field GF(q), q = p^e <= 256.
//
// Elements are encoded as integers 0..q-1.  For prime fields the encoding is
// the residue itself; for extension fields the element sum c_0 + c_1*a + ...
// + c_{e-1}*a^{e-1} (a a root of the stored irreducible polynomial) is
// encoded as the base-p integer sum c_j * p^j.  Hence 0 encodes the zero
// element and 1 encodes the one element in every field.
class FieldTable {
 public:
  static constexpr int max_size = 256;

  int q() const { return q_; }
  int p() const { return p_; }
  int e() const { return e_; }

  int add(int a, int b) const { return add_[index(a, b)]; }
  int mul(int a, int b) const { return mul_[index(a, b)]; }
  int neg(int a) const { return neg_[check(a)]; }
  // Multiplicative inverse; a must be nonzero.
  int inv(int a) const;
  int pow(int a, long long t) const;

  // Monic irreducible polynomial used to define the extension, as
  // coefficients c_0..c_e (low degree first, c_e = 1).  Empty for e == 1.
  const std::vector<int>& modulus() const { return modulus_; }

  // A fixed generator of the (cyclic) multiplicative group.
  int generator() const { return generator_; }

 private:
  friend std::shared_ptr<const FieldTable> make_field(int q);
  FieldTable() = default;

  std::size_t index(int a, int b) const {
    return std::size_t(check(a)) * q_ + check(b);
  }
  int check(int a) const {
    if (a < 0 || a >= q_) throw InvalidArgument("field element out of range");
    return a;
  }

  int q_ = 0, p_ = 0, e_ = 0;
  std::vector<std::uint16_t> add_, mul_;
  std::vector<std::uint16_t> neg_, inv_;
  std::vector<int> modulus_;
  int generator_ = 0;
};

using FieldPtr = std::shared_ptr<const FieldTable>;

// Builds GF(q).  Rejects q that is not a prime power in [2, 256].  For
// extension fields the modulus is the lexicographically smallest monic
// irreducible polynomial of degree e, comparing coefficients from the
// highest degree downward; it is found by brute-force trial division and
// re-verified before use.
FieldPtr make_field(int q);

// Returns {p, e} with q = p^e, or throws InvalidArgument.
std::pair<int, int> prime_power_decomposition(int q);

}  // namespace sumset
