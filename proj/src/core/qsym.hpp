#pragma once

#include <map>
#include <optional>
#include <string>

#include "core/composition.hpp"
#include "core/qtpoly.hpp"

namespace hk {

enum class QBasis { M, F };    // monomial / fundamental quasisymmetric
enum class NBasis { h, s };    // complete / ribbon Schur noncommutative
enum class SBasis { m, schur };

const char* qbasis_name(QBasis b);
const char* nbasis_name(NBasis b);
const char* sbasis_name(SBasis b);

class SymFn;

// Homogeneous quasisymmetric function of degree n with coefficients in
// Z[q,t], stored in a single named basis.
class QSym {
 public:
  QSym(QBasis basis, int n);

  QBasis basis() const { return basis_; }
  int n() const { return n_; }
  const std::map<Composition, QtPoly>& terms() const { return terms_; }
  QtPoly coeff(const Composition& a) const;
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Composition& a, const QtPoly& c);
  QSym operator+(const QSym& o) const;
  QSym operator-(const QSym& o) const;
  QSym scale(const QtPoly& c) const;
  bool operator==(const QSym& o) const;

  QSym to_basis(QBasis target) const;

  // True when the M-expansion is constant on rearrangement classes.
  bool is_symmetric() const;
  // The symmetric function it represents, in the m basis; empty if not
  // symmetric.
  std::optional<SymFn> to_symmetric() const;

  std::string str() const;

 private:
  QBasis basis_;
  int n_;
  std::map<Composition, QtPoly> terms_;
};

// Homogeneous noncommutative symmetric function of degree n.
class NSym {
 public:
  NSym(NBasis basis, int n);

  NBasis basis() const { return basis_; }
  int n() const { return n_; }
  const std::map<Composition, QtPoly>& terms() const { return terms_; }
  QtPoly coeff(const Composition& a) const;
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Composition& a, const QtPoly& c);
  NSym operator+(const NSym& o) const;
  NSym operator-(const NSym& o) const;
  NSym scale(const QtPoly& c) const;
  bool operator==(const NSym& o) const;

  NSym to_basis(NBasis target) const;

  // Image under NSym ->> Sym ⊂ QSym; ribbon Schur generators map to ribbon
  // Schur functions.
  QSym commutative_image(QBasis target) const;

  std::string str() const;

 private:
  NBasis basis_;
  int n_;
  std::map<Composition, QtPoly> terms_;
};

// Homogeneous symmetric function of degree n.
class SymFn {
 public:
  SymFn(SBasis basis, int n);

  SBasis basis() const { return basis_; }
  int n() const { return n_; }
  const std::map<Partition, QtPoly>& terms() const { return terms_; }
  QtPoly coeff(const Partition& p) const;
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Partition& p, const QtPoly& c);
  SymFn operator+(const SymFn& o) const;
  SymFn operator-(const SymFn& o) const;
  SymFn scale(const QtPoly& c) const;
  bool operator==(const SymFn& o) const;

  SymFn to_basis(SBasis target) const;
  QSym to_qsym(QBasis target) const;

  std::string str() const;

 private:
  SBasis basis_;
  int n_;
  std::map<Partition, QtPoly> terms_;
};

// Duality pairing <F_a, s_b> = <M_a, h_b> = delta_ab.
QtPoly pairing(const QSym& f, const NSym& g);

// Ribbon Schur function of alpha in the fundamental basis: the sum of
// F_{D(tau)} over standard ribbon tableaux of shape alpha.
QSym ribbon_schur_F(const Composition& alpha);

// Schur function of lambda in the fundamental basis, over standard tableaux.
QSym schur_F(const Partition& lambda);

// Modified Hall-Littlewood function indexed by a single column, via the Schur
// expansion with t-analogue hook length coefficients.
SymFn hl_column(int n);

// Modified Hall-Littlewood function of a hook shape, as the t^maj-weighted sum
// of ribbon Schur functions over coarsenings.
SymFn hl_hook(const Partition& mu);

// Complete homogeneous product h_mu in the Schur basis, by Young's rule.
SymFn h_product_schur(const Partition& mu);

}  // namespace hk
