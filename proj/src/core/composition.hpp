#pragma once

#include <compare>
#include "core/base.hpp"

namespace hk {

// Composition of n: finite sequence of positive integers summing to n.
// Compositions of n correspond to subsets of {1,...,n-1} via partial sums:
// descents(a) = {a1, a1+a2, ...} without n itself.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  static Composition from_descents(const std::vector<int>& descents, int n);

  int size() const { return n_; }          // the n it composes
  int length() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }

  std::vector<int> descents() const;
  int maj() const;        // sum of descents
  bool has_descent(int i) const;

  Composition reversed() const;
  Composition complement() const;          // descent set complemented in {1..n-1}
  Composition transposed() const;          // reverse of complement

  std::string str() const;                 // "(2,3,1)"

  bool operator==(const Composition& o) const { return parts_ == o.parts_; }
  auto operator<=>(const Composition& o) const { return parts_ <=> o.parts_; }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

// b <= a in refinement order: descents(b) subset of descents(a).
bool coarsens(const Composition& b, const Composition& a);

// All compositions of n, ordered by descent-set indicator vectors read from
// position 1 upward (subset masks in increasing integer order).
std::vector<Composition> compositions_of(int n, int bound = kDefaultMaxN);

// All b with b <= a in refinement order, subsets of descents(a) in mask order.
std::vector<Composition> coarsenings(const Composition& a);

// Partitions, stored as weakly decreasing vectors of positive parts.
using Partition = std::vector<int>;

Partition partition_of(const Composition& a);   // sort parts decreasing
Partition conjugate(const Partition& lam);
std::vector<Partition> partitions_of(int n, int bound = kDefaultMaxN);
bool is_partition(const std::vector<int>& v);
// Hook lengths of all cells of lam.
std::vector<int> hook_lengths(const Partition& lam);
// n(lam) = 0*lam1 + 1*lam2 + 2*lam3 + ...
int partition_nstat(const Partition& lam);
// At most one part exceeds 1.
bool is_hook(const Partition& lam);
std::string partition_str(const Partition& lam);

}  // namespace hk
