#include "core/quotient_ring.hpp"

namespace hk {

namespace {

void rec(int nvars, int pos, int left, std::vector<int>& cur,
         std::vector<std::vector<int>>& out) {
  if (pos == nvars - 1) {
    cur[pos] = left;
    out.push_back(cur);
    return;
  }
  for (int e = left; e >= 0; --e) {
    cur[pos] = e;
    rec(nvars, pos + 1, left - e, cur, out);
  }
}

}  // namespace

std::vector<std::vector<int>> monomials_of_degree(int nvars, int d) {
  require(nvars >= 1 && d >= 0, "bad monomial enumeration arguments");
  std::vector<std::vector<int>> out;
  std::vector<int> cur(nvars, 0);
  rec(nvars, 0, d, cur, out);
  return out;
}

}  // namespace hk
