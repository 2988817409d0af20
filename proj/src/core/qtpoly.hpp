#pragma once

#include <map>
#include <utility>
#include "core/base.hpp"

namespace hk {

// Sparse polynomial in two variables q, t with arbitrary-precision integer
// coefficients.  Terms are keyed by (q-exponent, t-exponent); the map never
// stores zero coefficients, so equality is structural.
class QtPoly {
 public:
  using Key = std::pair<int64_t, int64_t>;

  QtPoly() = default;
  QtPoly(int c) { *this = constant(c); }
  static QtPoly constant(const Int& c);
  static QtPoly monomial(const Int& c, int64_t qe, int64_t te);
  static QtPoly q() { return monomial(1, 1, 0); }
  static QtPoly t() { return monomial(1, 0, 1); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Int>& terms() const { return terms_; }
  Int coeff(int64_t qe, int64_t te) const;
  int64_t q_degree() const;   // -1 for the zero polynomial
  int64_t t_degree() const;

  QtPoly operator+(const QtPoly& o) const;
  QtPoly operator-(const QtPoly& o) const;
  QtPoly operator-() const;
  QtPoly operator*(const QtPoly& o) const;
  QtPoly& operator+=(const QtPoly& o);
  QtPoly& operator-=(const QtPoly& o);
  QtPoly& operator*=(const QtPoly& o);
  bool operator==(const QtPoly& o) const { return terms_ == o.terms_; }

  // Exact division by leading-term elimination under lex order on
  // (q-exponent, t-exponent); throws ConsistencyError on nonzero remainder.
  QtPoly div_exact(const QtPoly& d) const;

  Int eval(const Int& qv, const Int& tv) const;
  QtPoly subst_t(const Int& tv) const;    // plug a number into t
  QtPoly subst_q(const Int& qv) const;
  QtPoly swap_variables() const;          // q <-> t
  QtPoly scale_t_exponents(int64_t m) const;  // t -> t^m

  // Deterministic rendering, terms in ascending (q-exp, t-exp) order,
  // e.g. "1 + 2*q*t + q^2".
  std::string str() const;

 private:
  std::map<Key, Int> terms_;
  void add_term(const Key& k, const Int& c);
};

QtPoly operator*(const Int& c, const QtPoly& p);

}  // namespace hk
