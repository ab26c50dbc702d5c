#include "sumset/field.hpp"

#include <algorithm>
#include <numeric>

namespace sumset {
namespace {

// Polynomials over GF(p) as coefficient vectors, low degree first, no
// trailing zeros.
using Poly = std::vector<int>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Poly& f, const Poly& g, int p) {
  if (f.empty() || g.empty()) return {};
  Poly out(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      out[i + j] = (out[i + j] + f[i] * g[j]) % p;
  trim(out);
  return out;
}

// Remainder of f modulo the monic polynomial m.
Poly poly_mod(Poly f, const Poly& m, int p) {
  trim(f);
  while (f.size() >= m.size()) {
    int lead = f.back();
    std::size_t shift = f.size() - m.size();
    for (std::size_t j = 0; j < m.size(); ++j) {
      f[shift + j] = ((f[shift + j] - lead * m[j]) % p + p) % p;
    }
    trim(f);
  }
  return f;
}

bool poly_divides(const Poly& d, const Poly& f, int p) {
  return poly_mod(f, d, p).empty();
}

// Enumerates monic polynomials of the given degree in ascending order of the
// base-p integer formed by the non-leading coefficients; visits low-degree
// coefficients as the least significant digits so that the enumeration order
// matches the "compare from the highest degree down" order.
template <typename Fn>
bool for_each_monic(int degree, int p, Fn&& fn) {
  long long count = 1;
  for (int i = 0; i < degree; ++i) count *= p;
  for (long long code = 0; code < count; ++code) {
    Poly f(degree + 1, 0);
    long long rest = code;
    // Highest non-leading coefficient first digit: decode so that smaller
    // codes mean lexicographically smaller (c_{e-1}, ..., c_0) tuples.
    for (int i = degree - 1; i >= 0; --i) {
      long long place = 1;
      for (int j = 0; j < i; ++j) place *= p;
      f[i] = int(rest / place);
      rest %= place;
    }
    f[degree] = 1;
    if (fn(f)) return true;
  }
  return false;
}

bool is_irreducible(const Poly& f, int p) {
  int degree = int(f.size()) - 1;
  if (degree <= 0) return false;
  if (degree == 1) return true;
  for (int d = 1; d <= degree / 2; ++d) {
    bool divisor_found = for_each_monic(
        d, p, [&](const Poly& g) { return poly_divides(g, f, p); });
    if (divisor_found) return false;
  }
  return true;
}

Poly decode(int value, int p, int e) {
  Poly f(e, 0);
  for (int i = 0; i < e; ++i) {
    f[i] = value % p;
    value /= p;
  }
  trim(f);
  return f;
}

int encode(const Poly& f, int p) {
  int value = 0;
  for (std::size_t i = f.size(); i-- > 0;) value = value * p + f[i];
  return value;
}

}  // namespace

int FieldTable::inv(int a) const {
  check(a);
  if (a == 0) throw InvalidArgument("zero has no multiplicative inverse");
  return inv_[a];
}

int FieldTable::pow(int a, long long t) const {
  check(a);
  if (t < 0) {
    a = inv(a);
    t = -t;
  }
  long long r = 1;  // element encoding of one
  int base = a;
  while (t > 0) {
    if (t & 1) r = mul(int(r), base);
    base = mul(base, base);
    t >>= 1;
  }
  return int(r);
}

std::pair<int, int> prime_power_decomposition(int q) {
  if (q < 2) throw InvalidArgument("field size must be at least 2");
  int p = 0;
  for (int d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return {q, 1};  // q itself prime
  int e = 0;
  int rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1)
    throw InvalidArgument("field size " + std::to_string(q) +
                          " is not a prime power");
  return {p, e};
}

FieldPtr make_field(int q) {
  if (q < 2 || q > FieldTable::max_size)
    throw InvalidArgument("field size must lie in [2, 256], got " +
                          std::to_string(q));
  auto [p, e] = prime_power_decomposition(q);

  Poly modulus;
  if (e > 1) {
    for_each_monic(e, p, [&](const Poly& f) {
      if (is_irreducible(f, p)) {
        modulus = f;
        return true;
      }
      return false;
    });
    if (modulus.empty()) throw InternalError("no irreducible polynomial found");
    if (!is_irreducible(modulus, p))
      throw InternalError("selected modulus is reducible");
  }

  auto table = std::shared_ptr<FieldTable>(new FieldTable());
  table->q_ = q;
  table->p_ = p;
  table->e_ = e;
  table->modulus_ = modulus;
  table->add_.resize(std::size_t(q) * q);
  table->mul_.resize(std::size_t(q) * q);
  table->neg_.resize(q);
  table->inv_.resize(q, 0);

  for (int a = 0; a < q; ++a) {
    Poly fa = decode(a, p, e);
    Poly na;
    for (int c : fa) na.push_back((p - c) % p);
    trim(na);
    table->neg_[a] = std::uint16_t(encode(na, p));
    for (int b = 0; b < q; ++b) {
      Poly fb = decode(b, p, e);
      Poly sum(std::max(fa.size(), fb.size()), 0);
      for (std::size_t i = 0; i < sum.size(); ++i) {
        int ca = i < fa.size() ? fa[i] : 0;
        int cb = i < fb.size() ? fb[i] : 0;
        sum[i] = (ca + cb) % p;
      }
      trim(sum);
      table->add_[std::size_t(a) * q + b] = std::uint16_t(encode(sum, p));
      Poly prod = poly_mul(fa, fb, p);
      if (e > 1) prod = poly_mod(prod, modulus, p);
      // e == 1: plain residue arithmetic.
      if (e == 1 && !prod.empty()) prod[0] %= p;
      table->mul_[std::size_t(a) * q + b] = std::uint16_t(encode(prod, p));
    }
  }

  for (int a = 1; a < q; ++a) {
    int found = 0;
    for (int b = 1; b < q; ++b) {
      if (table->mul(a, b) == 1) {
        table->inv_[a] = std::uint16_t(b);
        ++found;
      }
    }
    if (found != 1) throw InternalError("nonzero element without unique inverse");
  }

  // The nonzero elements must form a cyclic group of order q-1; find a
  // generator by exhaustion and keep it.
  table->generator_ = 0;
  for (int a = 1; a < q && table->generator_ == 0; ++a) {
    int order = 1;
    int x = a;
    while (x != 1) {
      x = table->mul(x, a);
      ++order;
      if (order > q) throw InternalError("multiplicative order overflow");
    }
    if (order == q - 1) table->generator_ = a;
  }
  if (q > 2 && table->generator_ == 0)
    throw InternalError("multiplicative group is not cyclic");
  if (q == 2) table->generator_ = 1;

  return table;
}

}  // namespace sumset
