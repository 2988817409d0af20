#pragma once

#include <map>
#include "core/permutation.hpp"

namespace hk {

// Element of the 0-Hecke algebra H_n(0) in the standard basis {T_w}, with
// rational coefficients.  Generators satisfy T_i^2 = -T_i, the braid and the
// commutation relations; T_i T_w is T_{s_i w} when s_i w is longer, else
// -T_w.  T'_i = T_i + 1 is idempotent.
class HeckeElement {
 public:
  explicit HeckeElement(int n);
  static HeckeElement basis(const Permutation& w);       // T_w
  static HeckeElement unit(int n);                       // T_identity
  // T'_w, the product of the T'_i along a reduced word of w.
  static HeckeElement tprime(const Permutation& w);

  int n() const { return n_; }
  const std::map<Permutation, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coeff(const Permutation& w) const;

  HeckeElement operator+(const HeckeElement& o) const;
  HeckeElement operator-(const HeckeElement& o) const;
  HeckeElement operator*(const HeckeElement& o) const;   // algebra product
  HeckeElement scale(const Rat& c) const;
  bool operator==(const HeckeElement& o) const;

  HeckeElement t_mul(int i) const;        // T_i * this
  HeckeElement tprime_mul(int i) const;   // (T_i + 1) * this

  std::string str() const;

  void add_term(const Permutation& w, const Rat& c);

 private:
  int n_;
  std::map<Permutation, Rat> terms_;
};

}  // namespace hk
