#pragma once

#include "core/hecke.hpp"
#include "core/module.hpp"
#include "core/tableau.hpp"

namespace hk {

// Integer skeleton of a module whose generator action sends each basis element
// to 0 or to +-1 times a basis element.
struct ActionArrow {
  int target = -1;  // -1 encodes zero
  int scale = 0;
};

struct ActionTable {
  int n = 0;
  int dim = 0;
  std::vector<std::vector<ActionArrow>> arrows;  // arrows[i-1][j], j = basis index
  std::vector<int> levels;
  std::vector<std::string> labels;
  int cyclic_index = -1;
};

// Regular module: basis {T_w} in one-line lex order, levels inv(w),
// cyclic vector T_identity.
ActionTable regular_table(int n);

// Projective indecomposable module on the standard ribbon tableaux of shape
// alpha, ordered by reading word; levels are the inversion numbers of the
// reading words, cyclic vector at the column filling.
ActionTable projective_table(const Composition& alpha);

// One-dimensional simple module: T_i acts by -1 on descents of alpha, else 0.
ActionTable simple_table(const Composition& alpha);

// Basis of the Norton summand for alpha inside the regular module: the
// elements T_w T'_{w_0(alpha^c)} for w in the descent class of alpha (by
// reading word order), as coordinate vectors in the T basis.
std::vector<std::pair<Permutation, std::vector<Rat>>> norton_basis(const Composition& alpha);

// The longest element of the parabolic subgroup generated by s_i, i in D(alpha).
Permutation parabolic_longest(const Composition& alpha);

template <class F>
FiniteModule<F> from_table(const ActionTable& tb) {
  FiniteModule<F> M;
  M.n = tb.n;
  M.dim = tb.dim;
  for (int i = 1; i < tb.n; ++i) {
    Mat<F> A(tb.dim, tb.dim);
    for (int j = 0; j < tb.dim; ++j) {
      const ActionArrow& ar = tb.arrows[i - 1][j];
      if (ar.target >= 0) A[ar.target][j] = F(ar.scale);
    }
    M.gen.push_back(std::move(A));
  }
  if (!tb.levels.empty()) M.length_levels = tb.levels;
  M.basis_labels = tb.labels;
  if (tb.cyclic_index >= 0) {
    Vec<F> v(tb.dim, F(0));
    v[tb.cyclic_index] = F(1);
    M.cyclic = v;
  }
  return M;
}

template <class F>
FiniteModule<F> regular_module(int n) {
  return from_table<F>(regular_table(n));
}

template <class F>
FiniteModule<F> projective_module(const Composition& alpha) {
  return from_table<F>(projective_table(alpha));
}

template <class F>
FiniteModule<F> simple_module(const Composition& alpha) {
  return from_table<F>(simple_table(alpha));
}

template <class F>
Vec<F> to_field_vec(const std::vector<Rat>& v) {
  Vec<F> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    check(boost::multiprecision::denominator(x) == 1, "expected integer coordinates");
    Int num = boost::multiprecision::numerator(x);
    check(num >= -1000000 && num <= 1000000, "coordinate too large for field transfer");
    out.push_back(F(static_cast<int64_t>(num)));
  }
  return out;
}

}  // namespace hk
