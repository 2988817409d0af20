#pragma once

#include <memory>
#include "core/base.hpp"

namespace hk {

// Arithmetic tables for GF(q), q = p^e a prime power.  Elements are encoded
// as 0..q-1, digits base p giving coordinates in the polynomial basis for a
// deterministically chosen irreducible monic polynomial (first in lex order).
class GfTable {
 public:
  explicit GfTable(int64_t q);
  int64_t q() const { return q_; }
  int64_t p() const { return p_; }
  int e() const { return e_; }
  int add(int a, int b) const { return add_[a * q_ + b]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int inv(int a) const;
  const std::vector<int>& modulus_coeffs() const { return irred_; }

 private:
  int64_t q_, p_;
  int e_;
  std::vector<int> irred_;  // monic irreducible, length e+1, irred_[e] = 1
  std::vector<int> add_, mul_, neg_, inv_;
};

// GF(q) element bound to a table; table nullptr marks an unattached 0/1
// literal, absorbed by the other operand (mirrors Fp's modulus 0).
struct Gf {
  const GfTable* tbl = nullptr;
  int v = 0;

  Gf() = default;
  Gf(int64_t value) : v(static_cast<int>(value)) {
    require(value == 0 || value == 1, "unattached Gf literal must be 0 or 1");
  }
  Gf(const GfTable* t, int value) : tbl(t), v(value) {}

  static const GfTable* join(const GfTable* a, const GfTable* b) {
    if (!a) return b;
    if (!b) return a;
    require(a == b, "mixed fields");
    return a;
  }

  friend Gf operator+(const Gf& a, const Gf& b) {
    const GfTable* t = join(a.tbl, b.tbl);
    if (!t) return Gf(a.v + b.v);  // throws unless the sum stays 0/1
    return Gf(t, t->add(a.v, b.v));
  }
  friend Gf operator-(const Gf& a, const Gf& b) {
    const GfTable* t = join(a.tbl, b.tbl);
    require(t != nullptr, "unattached Gf subtraction");
    return Gf(t, t->add(a.v, t->neg(b.v)));
  }
  friend Gf operator*(const Gf& a, const Gf& b) {
    const GfTable* t = join(a.tbl, b.tbl);
    if (!t) return Gf(a.v * b.v);
    return Gf(t, t->mul(a.v, b.v));
  }
  Gf operator-() const {
    if (!tbl) {
      require(v == 0, "unattached Gf negation");
      return *this;
    }
    return Gf(tbl, tbl->neg(v));
  }
  friend Gf operator/(const Gf& a, const Gf& b) {
    const GfTable* t = join(a.tbl, b.tbl);
    require(t != nullptr, "unattached Gf division");
    return Gf(t, t->mul(a.v, t->inv(b.v)));
  }
  friend bool operator==(const Gf& a, const Gf& b) { return a.v == b.v; }
};

}  // namespace hk
