#include <doctest.h>

#include "core/composition.hpp"

using namespace hk;

TEST_CASE("compositions of n biject with subsets of {1..n-1}") {
  for (int n = 1; n <= 8; ++n) {
    auto cs = compositions_of(n);
    CHECK(static_cast<int>(cs.size()) == (1 << (n - 1)));
    for (const auto& a : cs) {
      CHECK(a.size() == n);
      int sum = 0;
      for (int p : a.parts()) {
        CHECK(p >= 1);
        sum += p;
      }
      CHECK(sum == n);
      CHECK(Composition::from_descents(a.descents(), n) == a);
    }
  }
}

TEST_CASE("descents and maj") {
  Composition a({1, 2, 1});
  CHECK(a.descents() == std::vector<int>{1, 3});
  CHECK(a.maj() == 4);
  CHECK(a.has_descent(1));
  CHECK(!a.has_descent(2));
  CHECK(a.has_descent(3));
  CHECK(Composition({4}).descents().empty());
  CHECK(Composition({1, 1, 1}).maj() == 3);
}

TEST_CASE("complement, reverse and transpose are involutions") {
  for (const auto& a : compositions_of(6)) {
    CHECK(a.complement().complement() == a);
    CHECK(a.reversed().reversed() == a);
    CHECK(a.transposed().transposed() == a);
    // transpose = reverse of complement
    CHECK(a.transposed() == a.complement().reversed());
  }
  CHECK(Composition({1, 2, 1}).complement() == Composition({2, 2}));
  CHECK(Composition({3, 1}).transposed() == Composition({2, 1, 1}));
}

TEST_CASE("coarsening order follows descent subsets") {
  Composition a({1, 2, 1});
  auto cs = coarsenings(a);
  CHECK(cs.size() == 4);  // subsets of {1,3}
  for (const auto& b : cs) {
    CHECK(coarsens(b, a));
    for (int d : b.descents()) CHECK(a.has_descent(d));
  }
  CHECK(coarsens(Composition({4}), a));
  CHECK(!coarsens(a, Composition({4})));
  CHECK(!coarsens(Composition({2, 2}), a));
}

TEST_CASE("partition helpers") {
  CHECK(partitions_of(5).size() == 7);
  CHECK(partitions_of(8).size() == 22);
  Partition lam{3, 1};
  CHECK(conjugate(lam) == Partition{2, 1, 1});
  CHECK(conjugate(conjugate(Partition{4, 2, 1})) == Partition{4, 2, 1});
  CHECK(partition_of(Composition({1, 3, 2})) == Partition{3, 2, 1});
  CHECK(is_partition({3, 3, 1}));
  CHECK(!is_partition({1, 2}));

  // hook lengths of (2,2): cells have hooks 3,2,2,1
  auto h = hook_lengths(Partition{2, 2});
  std::sort(h.begin(), h.end());
  CHECK(h == std::vector<int>{1, 2, 2, 3});
  CHECK(partition_nstat(Partition{2, 2}) == 2);
  CHECK(partition_nstat(Partition{1, 1, 1}) == 3);

  CHECK(is_hook(Partition{4, 1, 1}));
  CHECK(is_hook(Partition{1, 1}));
  CHECK(is_hook(Partition{3}));
  CHECK(!is_hook(Partition{2, 2}));
  CHECK(!is_hook(Partition{3, 2, 1}));
}

TEST_CASE("rendering") {
  CHECK(Composition({2, 3, 1}).str() == "(2,3,1)");
  CHECK(partition_str(Partition{3, 1}) == "(3,1)");
}
