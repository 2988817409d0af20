#include "core/ribbon_numbers.hpp"

#include "core/permutation.hpp"

namespace hk {

QtPoly q_integer(int m) {
  require(m >= 0, "q_integer: negative argument");
  QtPoly p;
  for (int i = 0; i < m; ++i) p += QtPoly::monomial(1, i, 0);
  return p;
}

QtPoly q_factorial(int m) {
  require(m >= 0, "q_factorial: negative argument");
  QtPoly p = QtPoly::constant(1);
  for (int i = 1; i <= m; ++i) p *= q_integer(i);
  return p;
}

QtPoly q_multinomial_parts(int n, const std::vector<int>& parts) {
  int s = 0;
  QtPoly den = QtPoly::constant(1);
  for (int m : parts) {
    require(m >= 0, "q_multinomial: negative part");
    s += m;
    den *= q_factorial(m);
  }
  require(s == n, "q_multinomial: parts do not sum to n");
  return q_factorial(n).div_exact(den);
}

QtPoly q_multinomial(const Composition& a) {
  return q_multinomial_parts(a.size(), a.parts());
}

namespace {

std::vector<int> partial_sums(const Composition& a) {
  std::vector<int> s{0};
  for (int p : a.parts()) s.push_back(s.back() + p);
  return s;
}

int ell_sign(const Permutation& pi) { return pi.inversions() % 2 ? -1 : 1; }

}  // namespace

QtPoly ribbon_number_q(const Composition& a, int enum_limit) {
  int n = a.size(), ell = a.length();
  std::vector<int> sig = partial_sums(a);

  // Leibniz expansion of det(1/[sig_j - sig_{i-1}]!_q), scaled by [n]!_q.
  // Terms with a negative argument vanish.
  QtPoly det;
  QtPoly nfact = q_factorial(n);
  for (const Permutation& pi : all_permutations(ell)) {
    QtPoly den = QtPoly::constant(1);
    bool zero = false;
    for (int i = 1; i <= ell; ++i) {
      int m = sig[pi(i)] - sig[i - 1];
      if (m < 0) {
        zero = true;
        break;
      }
      den *= q_factorial(m);
    }
    if (zero) continue;
    QtPoly term = nfact.div_exact(den);
    det += ell_sign(pi) == 1 ? term : -term;
  }

  QtPoly incl_excl;
  for (const Composition& b : coarsenings(a)) {
    QtPoly term = q_multinomial(b);
    incl_excl += ((a.length() - b.length()) % 2 == 0) ? term : -term;
  }
  check(det == incl_excl,
        "ribbon number: determinant and inclusion-exclusion disagree");

  if (n <= enum_limit) {
    QtPoly direct;
    for (const Permutation& w : descent_class(a))
      direct += QtPoly::monomial(1, w.inversions(), 0);
    check(det == direct,
          "ribbon number: determinant and enumeration disagree");
  }
  return det;
}

QtPoly ribbon_number_t(const Composition& a, int bound) {
  QtPoly p;
  for (const Permutation& w : descent_class(a, bound))
    p += QtPoly::monomial(1, 0, w.inverse().maj());
  return p;
}

bool is_prime_power(int64_t q) {
  if (q < 2) return false;
  int64_t p = 0;
  for (int64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) return true;  // prime
  while (q % p == 0) q /= p;
  return q == 1;
}

QtFactorialContext::QtFactorialContext(int64_t q) : q_(q) {
  require(is_prime_power(q), "q must be an integer prime power >= 2");
}

int64_t QtFactorialContext::q_power(int e) const {
  require(e >= 0, "negative power of q");
  int64_t r = 1;
  for (int i = 0; i < e; ++i) {
    require(r <= (int64_t{1} << 62) / q_, "q^e overflows");
    r *= q_;
  }
  return r;
}

const QtPoly& QtFactorialContext::factorial(int m) {
  require(m >= 0, "factorial of negative argument");
  while (static_cast<int>(cache_.size()) <= m) {
    int k = static_cast<int>(cache_.size());
    if (k == 0) {
      cache_.push_back(QtPoly::constant(1));
      continue;
    }
    QtPoly f = QtPoly::constant(1);
    int64_t qk = q_power(k);
    for (int i = 0; i < k; ++i)
      f *= QtPoly::constant(1) - QtPoly::monomial(1, 0, qk - q_power(i));
    cache_.push_back(f);
  }
  return cache_[m];
}

QtPoly QtFactorialContext::frobenius(const QtPoly& f, int e) const {
  if (e == 0) return f;
  return f.scale_t_exponents(q_power(e));
}

QtPoly qt_multinomial(QtFactorialContext& ctx, const Composition& a) {
  std::vector<int> sig = partial_sums(a);
  QtPoly den = QtPoly::constant(1);
  for (int i = 0; i < a.length(); ++i)
    den *= ctx.frobenius(ctx.factorial(a.parts()[i]), sig[i]);
  return ctx.factorial(a.size()).div_exact(den);
}

QtPoly ribbon_number_qt(QtFactorialContext& ctx, const Composition& a) {
  int n = a.size(), ell = a.length();
  std::vector<int> sig = partial_sums(a);

  QtPoly det;
  const QtPoly nfact = ctx.factorial(n);
  for (const Permutation& pi : all_permutations(ell)) {
    QtPoly den = QtPoly::constant(1);
    bool zero = false;
    for (int i = 1; i <= ell; ++i) {
      int m = sig[pi(i)] - sig[i - 1];
      if (m < 0) {
        zero = true;
        break;
      }
      den *= ctx.frobenius(ctx.factorial(m), sig[i - 1]);
    }
    if (zero) continue;
    QtPoly term = nfact.div_exact(den);
    det += ell_sign(pi) == 1 ? term : -term;
  }

  QtPoly incl_excl;
  for (const Composition& b : coarsenings(a)) {
    QtPoly term = qt_multinomial(ctx, b);
    incl_excl += ((a.length() - b.length()) % 2 == 0) ? term : -term;
  }
  check(det == incl_excl,
        "qt ribbon number: determinant and inclusion-exclusion disagree");

  check(det.subst_t(1) ==
            QtPoly::constant(ribbon_number_q(a).eval(ctx.q(), 0)),
        "qt ribbon number: wrong value at t=1");
  return det;
}

}  // namespace hk
