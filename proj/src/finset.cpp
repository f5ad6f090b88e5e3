#include "ct/finset.hpp"

namespace ct {

std::vector<FinFunction> all_functions(std::size_t m, std::size_t n) {
  std::vector<FinFunction> out;
  if (m == 0) {
    out.emplace_back(0, n, std::vector<std::size_t>{});
    return out;
  }
  if (n == 0) return out;  // no functions from nonempty set to empty set
  std::vector<std::size_t> cur(m, 0);
  for (;;) {
    out.emplace_back(m, n, cur);
    std::size_t i = m;
    while (i > 0) {
      --i;
      if (++cur[i] < n) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
  }
}

FinFunction UnionFind::quotient_map() {
  std::size_t n = parent_.size();
  std::vector<std::size_t> label(n, SIZE_MAX);
  std::vector<std::size_t> q(n);
  std::size_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = find(i);
    if (label[r] == SIZE_MAX) label[r] = next++;
    q[i] = label[r];
  }
  return FinFunction(n, next == 0 ? 0 : next, std::move(q));
}

}  // namespace ct
