#pragma once

#include <map>
#include "core/permutation.hpp"

namespace hk {

// Sparse polynomial in x_1..x_n with arbitrary-precision integer
// coefficients, keyed by exponent vectors of fixed length n.
class MPoly {
 public:
  explicit MPoly(int nvars);
  static MPoly constant(int nvars, const Int& c);
  static MPoly monomial(std::vector<int> exponents, const Int& c = 1);
  static MPoly variable(int nvars, int i);  // x_i, 1-based

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, Int>& terms() const { return terms_; }
  Int coeff(const std::vector<int>& e) const;
  int total_degree() const;    // -1 for zero
  bool is_homogeneous() const;
  MPoly homogeneous_part(int d) const;

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator-() const;
  MPoly operator*(const MPoly& o) const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  bool operator==(const MPoly& o) const;

  // Substitution x_j -> x_{w(j)}.
  MPoly apply_permutation(const Permutation& w) const;

  std::string str() const;   // terms in ascending lex order of exponents

  void add_term(const std::vector<int>& e, const Int& c);

 private:
  int nvars_;
  std::map<std::vector<int>, Int> terms_;
};

// Isobaric divided difference pi_i: on m * x_i^a * x_{i+1}^b with m free of
// x_i, x_{i+1},
//   a >= b: m * sum of x_i^k x_{i+1}^(a+b-k) for k = b..a
//   a <  b: -m * same sum for k = a+1..b-1 (empty when b = a+1).
// Equals (x_i f - x_{i+1} s_i f)/(x_i - x_{i+1}); idempotent.
MPoly demazure(int i, const MPoly& f);

// pibar_i = pi_i - 1; satisfies pibar_i^2 = -pibar_i.
MPoly demazure_bar(int i, const MPoly& f);

// Composite along a reduced word of w (rightmost letter applied first);
// independent of the choice of reduced word.
MPoly demazure_word(const Permutation& w, const MPoly& f);
MPoly demazure_bar_word(const Permutation& w, const MPoly& f);

// x_S = prod_{i in S} x_1...x_i; exponent of x_j is #{i in S : i >= j}.
MPoly x_descent_set(int nvars, const std::vector<int>& s);

// Descent monomial w * x_{D(w)}; its degree is maj(w).
MPoly descent_monomial(const Permutation& w);

MPoly elementary_symmetric(int nvars, int r);
// e_r in the variables indexed by the 1-based subset s.
MPoly elementary_symmetric_subset(int nvars, int r, const std::vector<int>& s);
MPoly complete_homogeneous_subset(int nvars, int r, const std::vector<int>& s);

// Monomial symmetric polynomial m_lam in nvars variables.
MPoly monomial_symmetric(int nvars, const Partition& lam);

// lambda(d) <_L lambda(e): compare sorted-decreasing rearrangements lex.
bool prec_less(const std::vector<int>& d, const std::vector<int>& e);
// Refines prec_less by plain lex on the exponent vectors.
bool ts_less(const std::vector<int>& d, const std::vector<int>& e);

// P-partition encoding d = gamma(d) + mu(d).  sigma(d) labels positions from
// the largest entry to the smallest, ties left to right.  gamma assigns 0 to
// the largest label and, stepping from label t to t-1, keeps the value when
// t-1 sits left of t and increments it otherwise.  mu(d) = d - gamma(d) is
// entrywise nonnegative.
struct PPartitionEncoding {
  Permutation sigma;
  std::vector<int> gamma;
  std::vector<int> mu;
};
PPartitionEncoding p_partition_encode(const std::vector<int>& d);

}  // namespace hk
