#pragma once

#include "core/composition.hpp"
#include "core/qtpoly.hpp"

namespace hk {

// [m]_q = 1 + q + ... + q^(m-1).
QtPoly q_integer(int m);
// [m]!_q.
QtPoly q_factorial(int m);
// [n]!_q / prod [m_i]!_q for nonnegative m_i summing to n; always a
// polynomial, computed by one exact division.
QtPoly q_multinomial_parts(int n, const std::vector<int>& parts);
QtPoly q_multinomial(const Composition& a);

// Number of permutations with descent set exactly descents(a), refined by
// inversions: r_a(q) = sum over the descent class of q^inv(w).  Computed by
// the determinant of the inverse-q-factorial matrix (Leibniz expansion with
// per-term exact division) and cross-checked against inclusion-exclusion
// over coarsenings; for n <= enum_limit also against direct enumeration.
QtPoly ribbon_number_q(const Composition& a, int enum_limit = 8);

// Same class refined by maj of the inverse: sum of t^maj(w^-1), enumerated.
QtPoly ribbon_number_t(const Composition& a, int bound = kDefaultMaxN);

// Caches the t-analogue factorials for one fixed integer prime power q:
// m!_{q,t} = prod_{i<m} (1 - t^(q^m - q^i)).  The Frobenius twist sends
// t to t^(q^e).
class QtFactorialContext {
 public:
  explicit QtFactorialContext(int64_t q);
  int64_t q() const { return q_; }
  const QtPoly& factorial(int m);
  QtPoly frobenius(const QtPoly& f, int e) const;
  int64_t q_power(int e) const;

 private:
  int64_t q_;
  std::vector<QtPoly> cache_;
};

// n!_{q,t} divided by the twisted factorials of the parts:
// a_1!_{q,t} * phi^{s_1}(a_2!_{q,t}) * ... with s_j the partial sums.
// One exact division; every t-exponent is divisible by q-1.
QtPoly qt_multinomial(QtFactorialContext& ctx, const Composition& a);

// (q,t)-ribbon number: determinant of the twisted inverse-factorial matrix,
// cross-checked against inclusion-exclusion over coarsenings and, at t=1,
// against ribbon_number_q evaluated at q.
QtPoly ribbon_number_qt(QtFactorialContext& ctx, const Composition& a);

bool is_prime_power(int64_t q);

}  // namespace hk
