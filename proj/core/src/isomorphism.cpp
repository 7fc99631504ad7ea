#include "relcut/isomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace relcut {

namespace {

std::vector<std::vector<int>> adjacency_counts(const MultiGraph& g) {
  std::vector<std::vector<int>> counts(g.vertex_count(), std::vector<int>(g.vertex_count(), 0));
  for (auto [u, v] : g.edges()) {
    ++counts[u][v];
    ++counts[v][u];
  }
  return counts;
}

void check_size_guard(const MultiGraph& g, const char* where) {
  if (g.vertex_count() > kIsomorphismVertexLimit)
    throw std::invalid_argument(std::string(where) + ": graph exceeds the brute-force size guard");
}

// Backtracking over vertex maps a -> b. With collect_all set, every complete
// map is recorded instead of stopping at the first.
struct MappingSearch {
  const std::vector<std::vector<int>>& adj_a;
  const std::vector<std::vector<int>>& adj_b;
  const std::vector<int>& deg_a;
  const std::vector<int>& deg_b;
  int n;
  bool collect_all = false;
  std::vector<int> map;        // a-vertex -> b-vertex, -1 unset
  std::vector<char> used;      // b-vertex taken
  std::vector<std::vector<int>>* out = nullptr;
  bool found = false;

  bool extend(int va) {
    if (va == n) {
      found = true;
      if (out) out->push_back(map);
      return !collect_all;
    }
    for (int vb = 0; vb < n; ++vb) {
      if (used[vb] || deg_a[va] != deg_b[vb]) continue;
      bool consistent = true;
      for (int ua = 0; ua < va; ++ua)
        if (adj_a[va][ua] != adj_b[vb][map[ua]]) {
          consistent = false;
          break;
        }
      if (!consistent) continue;
      map[va] = vb;
      used[vb] = 1;
      if (extend(va + 1)) return true;
      used[vb] = 0;
      map[va] = -1;
    }
    return false;
  }
};

}  // namespace

bool are_isomorphic(const MultiGraph& a, const MultiGraph& b) {
  check_size_guard(a, "are_isomorphic");
  check_size_guard(b, "are_isomorphic");
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  const int n = a.vertex_count();
  std::vector<int> deg_a(n), deg_b(n);
  for (int v = 0; v < n; ++v) {
    deg_a[v] = a.degree(v);
    deg_b[v] = b.degree(v);
  }
  {
    auto sa = deg_a, sb = deg_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  auto adj_a = adjacency_counts(a);
  auto adj_b = adjacency_counts(b);
  MappingSearch search{adj_a, adj_b, deg_a, deg_b, n};
  search.map.assign(n, -1);
  search.used.assign(n, 0);
  search.extend(0);
  return search.found;
}

std::vector<std::vector<int>> automorphisms(const MultiGraph& g) {
  check_size_guard(g, "automorphisms");
  const int n = g.vertex_count();
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  auto adj = adjacency_counts(g);
  std::vector<std::vector<int>> result;
  MappingSearch search{adj, adj, deg, deg, n};
  search.collect_all = true;
  search.out = &result;
  search.map.assign(n, -1);
  search.used.assign(n, 0);
  search.extend(0);
  return result;
}

std::string graph_signature(const MultiGraph& g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (n == 1) return "K1";
  if (n == 2 && m == 1) return "K2";
  const bool connected = is_connected(g);
  if (connected) {
    int max_deg = 0, min_deg = n;
    for (int v = 0; v < n; ++v) {
      max_deg = std::max(max_deg, g.degree(v));
      min_deg = std::min(min_deg, g.degree(v));
    }
    if (max_deg == 2 && min_deg == 2) return "C" + std::to_string(n);
    if (max_deg <= 2) return "P" + std::to_string(n);
    if (g.is_simple() && 2 * m == n * (n - 1)) return "K" + std::to_string(n);
  }
  if (n > 9) {
    std::vector<int> degs(n);
    for (int v = 0; v < n; ++v) degs[v] = g.degree(v);
    std::sort(degs.begin(), degs.end());
    std::ostringstream out;
    out << "n" << n << "m" << m << "d";
    for (int d : degs) out << d << '.';
    return out.str();
  }
  // Exact canonical code: minimal upper-triangle multiplicity string over all
  // vertex permutations.
  auto adj = adjacency_counts(g);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  std::string current;
  current.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  do {
    current.clear();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        current.push_back(static_cast<char>('0' + std::min(adj[perm[i]][perm[j]], 9)));
    if (best.empty() || current < best) best = current;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return "g" + std::to_string(n) + ":" + best;
}

}  // namespace relcut
