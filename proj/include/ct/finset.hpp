#pragma once

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ct {

// Canonical finite set: elements are 0..n-1, with display names kept
// alongside for diagnostics and reports.
struct FinSet {
  std::vector<std::string> names;

  FinSet() = default;
  explicit FinSet(std::size_t n, const std::string& prefix = "x") {
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  }
  explicit FinSet(std::vector<std::string> elems) : names(std::move(elems)) {}

  std::size_t size() const { return names.size(); }
  bool empty() const { return names.empty(); }
  const std::string& name(std::size_t i) const { return names.at(i); }

  bool operator==(const FinSet& o) const { return names == o.names; }
};

// Total function between canonical finite sets.
struct FinFunction {
  std::size_t src_size = 0;
  std::size_t dst_size = 0;
  std::vector<std::size_t> map;  // map[i] in [0, dst_size)

  FinFunction() = default;
  FinFunction(std::size_t s, std::size_t d, std::vector<std::size_t> m)
      : src_size(s), dst_size(d), map(std::move(m)) {
    if (map.size() != src_size) throw std::invalid_argument("FinFunction: bad map length");
    for (auto v : map)
      if (v >= dst_size) throw std::invalid_argument("FinFunction: value out of range");
  }

  static FinFunction identity(std::size_t n) {
    std::vector<std::size_t> m(n);
    std::iota(m.begin(), m.end(), std::size_t{0});
    return FinFunction(n, n, std::move(m));
  }

  std::size_t operator()(std::size_t i) const { return map.at(i); }

  // g.after(f) = g ∘ f
  FinFunction after(const FinFunction& f) const {
    if (f.dst_size != src_size) throw std::invalid_argument("FinFunction: not composable");
    std::vector<std::size_t> m(f.src_size);
    for (std::size_t i = 0; i < f.src_size; ++i) m[i] = map[f.map[i]];
    return FinFunction(f.src_size, dst_size, std::move(m));
  }

  bool is_bijection() const {
    if (src_size != dst_size) return false;
    std::vector<char> seen(dst_size, 0);
    for (auto v : map) {
      if (seen[v]) return false;
      seen[v] = 1;
    }
    return true;
  }

  FinFunction inverse() const {
    if (!is_bijection()) throw std::logic_error("FinFunction: not invertible");
    std::vector<std::size_t> m(src_size);
    for (std::size_t i = 0; i < src_size; ++i) m[map[i]] = i;
    return FinFunction(dst_size, src_size, std::move(m));
  }

  bool operator==(const FinFunction& o) const {
    return src_size == o.src_size && dst_size == o.dst_size && map == o.map;
  }
  bool operator<(const FinFunction& o) const { return map < o.map; }
};

// All functions from an m-element set to an n-element set, in lexicographic
// order of their value vectors.
std::vector<FinFunction> all_functions(std::size_t m, std::size_t n);

// Union-find over 0..n-1 with canonical (smallest-index) representatives
// extractable as a quotient map.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

  bool same(std::size_t a, std::size_t b) { return find(a) == find(b); }
  std::size_t size() const { return parent_.size(); }

  // Quotient map onto 0..k-1, classes numbered by first occurrence.
  FinFunction quotient_map();

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> rank_;
};

}  // namespace ct
