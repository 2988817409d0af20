#pragma once

#include "core/module.hpp"
#include "core/qsym.hpp"

namespace hk {

// Quasisymmetric characteristic in the fundamental basis: one F_alpha per
// factor C_alpha, graded per mode.
template <class F>
QSym characteristic(const FiniteModule<F>& M, CharMode mode = CharMode::plain) {
  QSym out(QBasis::F, M.n);
  for (const auto& [a, c] : composition_factors(M, mode)) out.add_term(a, c);
  return out;
}

// The same element read off joint kernels: coefficient of M_alpha is the
// Hilbert series of the common kernel of the generators outside D(alpha).
template <class F>
QSym characteristic_monomial(const FiniteModule<F>& M, CharMode mode = CharMode::plain) {
  QSym out(QBasis::M, M.n);
  for (const auto& [a, c] : invariants_table(M, mode)) out.add_term(a, c);
  return out;
}

// Noncommutative characteristic of a direct sum of projectives: one ribbon
// term per summand, graded by the summand degree when the mode carries t.
// Composition factors cannot recover these terms; the ribbon functions of
// conjugate indices share one fundamental expansion.
inline NSym nsym_of_projectives(int n, const std::vector<std::pair<Composition, int>>& summands,
                                CharMode mode = CharMode::plain) {
  bool graded = mode == CharMode::t || mode == CharMode::qt;
  NSym out(NBasis::s, n);
  for (const auto& [alpha, degree] : summands)
    out.add_term(alpha, graded ? QtPoly::monomial(1, 0, degree) : QtPoly(1));
  return out;
}

}  // namespace hk
