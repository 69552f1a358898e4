#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace levelplan {

// Union-find where every element carries a parity bit relative to its root.
// unite(a, b, odd) records value(a) XOR value(b) == odd.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(std::size_t n = 0) : parent_(n), parity_(n, false), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::size_t size() const noexcept { return parent_.size(); }

  // (root, parity of x relative to root); compresses the path.
  std::pair<int, bool> find(int x) {
    bool parity = false;
    int root = x;
    while (parent_[root] != root) {
      parity ^= parity_[root];
      root = parent_[root];
    }
    // second pass: point everything on the path at the root
    bool acc = parity;
    while (parent_[x] != x) {
      const int next = parent_[x];
      const bool step = parity_[x];
      parent_[x] = root;
      parity_[x] = acc;
      acc ^= step;
      x = next;
    }
    return {root, parity};
  }

  std::pair<int, bool> find(int x) const {
    bool parity = false;
    while (parent_[x] != x) {
      parity ^= parity_[x];
      x = parent_[x];
    }
    return {x, parity};
  }

  // Returns false iff a and b were already related with the other parity.
  bool unite(int a, int b, bool odd) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) {
      return (pa ^ pb) == odd;
    }
    if (size_[ra] < size_[rb]) {
      std::swap(ra, rb);
    }
    parent_[rb] = ra;
    parity_[rb] = pa ^ pb ^ odd;
    size_[ra] += size_[rb];
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<bool> parity_;
  std::vector<int> size_;
};

}  // namespace levelplan
