#pragma once

#include <numeric>
#include <vector>

#include "relcut/multigraph.hpp"

namespace relcut::detail {

// Visits all k-subsets of {0,...,m-1} in lexicographic order.
template <typename F>
void for_each_combination(int m, int k, F&& visit) {
  if (k < 0 || k > m) return;
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    visit(static_cast<const std::vector<int>&>(pick));
    int i = k - 1;
    while (i >= 0 && pick[i] == m - k + i) --i;
    if (i < 0) return;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

// Reusable union-find scratch for connectivity tests in tight subset loops.
class ConnectivityScratch {
 public:
  explicit ConnectivityScratch(int n) : parent_(n) {}

  // Connectivity of g minus the flagged edges.
  bool connected_without(const MultiGraph& g, const std::vector<char>& removed_edge) {
    const int n = g.vertex_count();
    std::iota(parent_.begin(), parent_.end(), 0);
    int components = n;
    const auto& edges = g.edges();
    for (int id = 0; id < static_cast<int>(edges.size()); ++id) {
      if (removed_edge[id]) continue;
      const int ru = find(edges[id].first);
      const int rv = find(edges[id].second);
      if (ru != rv) {
        parent_[ru] = rv;
        if (--components == 1) return true;
      }
    }
    return components == 1;
  }

 private:
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  std::vector<int> parent_;
};

}  // namespace relcut::detail
