#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/composition.hpp"
#include "core/gf.hpp"
#include "core/linalg.hpp"
#include "core/module.hpp"

namespace hk {

// Subspace of GF(q)^n held as its reduced row echelon basis, entries encoded
// per GfTable.  The RREF is a canonical form, so equality is by value.
struct Subspace {
  std::vector<std::vector<int>> rows;
  int dim() const { return static_cast<int>(rows.size()); }
  auto operator<=>(const Subspace&) const = default;
};

Subspace subspace_span(const GfTable& gf, std::vector<std::vector<int>> rows);

bool subspace_contains(const GfTable& gf, const Subspace& s, std::vector<int> v);

// Chain of nested subspaces with prescribed dimensions, the full space left
// implicit.
using PartialFlag = std::vector<Subspace>;

// All chains with the given strictly increasing dimensions (each < n).
std::vector<PartialFlag> partial_flags(const GfTable& gf, int n, const std::vector<int>& dims);

std::vector<PartialFlag> complete_flags(const GfTable& gf, int n);

std::string flag_str(const PartialFlag& f);

// Span of the complete flags over a field of characteristic p = char GF(q),
// with T_i sending a flag to the sum of the q other flags that differ from it
// only in the i dimensional subspace.
FiniteModule<Fp> flag_module(const GfTable& gf, int n, int64_t flag_cap = 2000);

// C_0 -> ... -> C_m where C_j spans the partial flags whose type drops j
// descents from D(alpha), with simplicial boundaries (forget one subspace,
// sign by its position).  The interesting kernel sits at the left end.
struct ChainComplex {
  std::vector<int> dims;
  std::vector<Mat<Fp>> boundary;  // boundary[j] : C_j -> C_{j+1}
};

ChainComplex tits_chain_complex(const GfTable& gf, const Composition& alpha,
                                int64_t flag_cap = 2000);

// True when boundaries compose to zero and the sequence is exact at every
// term past the first; *kernel_dim receives dim ker(C_0 -> C_1).
bool chain_exact(const ChainComplex& c, int* kernel_dim);

}  // namespace hk
