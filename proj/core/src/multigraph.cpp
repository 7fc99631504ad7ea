#include "relcut/multigraph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace relcut {

namespace {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels(n);
  for (int v = 0; v < n; ++v) labels[v] = std::to_string(v);
  return labels;
}

// Union-find over a fixed vertex range.
class DisjointSet {
 public:
  explicit DisjointSet(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

}  // namespace

MultiGraph::MultiGraph(int n, std::vector<std::pair<int, int>> edges)
    : MultiGraph(n, std::move(edges), default_labels(n)) {}

MultiGraph::MultiGraph(int n, std::vector<std::pair<int, int>> edges,
                       std::vector<std::string> vertex_labels)
    : n_(n), edges_(std::move(edges)), labels_(std::move(vertex_labels)), degrees_(n, 0) {
  if (n_ < 1) throw std::invalid_argument("MultiGraph: vertex count must be >= 1");
  if (static_cast<int>(labels_.size()) != n_)
    throw std::invalid_argument("MultiGraph: label count does not match vertex count");
  for (const auto& [u, v] : edges_) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw std::invalid_argument("MultiGraph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("MultiGraph: loops are not allowed");
    ++degrees_[u];
    ++degrees_[v];
  }
}

std::pair<int, int> MultiGraph::edge(int id) const {
  if (id < 0 || id >= edge_count()) throw std::out_of_range("MultiGraph: invalid edge id");
  return edges_[id];
}

const std::string& MultiGraph::vertex_label(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("MultiGraph: invalid vertex");
  return labels_[v];
}

int MultiGraph::degree(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("MultiGraph: invalid vertex");
  return degrees_[v];
}

int MultiGraph::min_degree() const {
  return *std::min_element(degrees_.begin(), degrees_.end());
}

bool MultiGraph::is_simple() const {
  std::vector<std::pair<int, int>> normalized;
  normalized.reserve(edges_.size());
  for (auto [u, v] : edges_) normalized.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(normalized.begin(), normalized.end());
  return std::adjacent_find(normalized.begin(), normalized.end()) == normalized.end();
}

int MultiGraph::multiplicity(int u, int v) const {
  int count = 0;
  for (auto [a, b] : edges_)
    if ((a == u && b == v) || (a == v && b == u)) ++count;
  return count;
}

EdgeSet::EdgeSet(const MultiGraph& g, std::vector<int> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end())
    throw std::invalid_argument("EdgeSet: duplicate edge id");
  for (int id : ids_)
    if (id < 0 || id >= g.edge_count())
      throw std::invalid_argument("EdgeSet: invalid edge id");
}

bool EdgeSet::contains(int id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

bool is_connected(const MultiGraph& g) {
  DisjointSet dsu(g.vertex_count());
  for (auto [u, v] : g.edges()) dsu.unite(u, v);
  const int root = dsu.find(0);
  for (int v = 1; v < g.vertex_count(); ++v)
    if (dsu.find(v) != root) return false;
  return true;
}

EdgeRemoval remove_edges(const MultiGraph& g, const EdgeSet& cut) {
  std::vector<char> removed(g.edge_count(), 0);
  for (int id : cut.ids()) {
    if (id < 0 || id >= g.edge_count())
      throw std::invalid_argument("remove_edges: invalid edge id");
    removed[id] = 1;
  }
  std::vector<std::pair<int, int>> kept;
  kept.reserve(g.edge_count() - cut.size());
  std::vector<int> old_to_new(g.edge_count(), -1);
  for (int id = 0; id < g.edge_count(); ++id) {
    if (removed[id]) continue;
    old_to_new[id] = static_cast<int>(kept.size());
    kept.push_back(g.edges()[id]);
  }
  return EdgeRemoval{MultiGraph(g.vertex_count(), std::move(kept), g.vertex_labels()),
                     std::move(old_to_new)};
}

bool is_edge_cut(const MultiGraph& g, const EdgeSet& cut) {
  if (!is_connected(g)) throw std::invalid_argument("is_edge_cut: graph must be connected");
  std::vector<char> removed(g.edge_count(), 0);
  for (int id : cut.ids()) removed[id] = 1;
  DisjointSet dsu(g.vertex_count());
  for (int id = 0; id < g.edge_count(); ++id) {
    if (removed[id]) continue;
    auto [u, v] = g.edges()[id];
    dsu.unite(u, v);
  }
  const int root = dsu.find(0);
  for (int v = 1; v < g.vertex_count(); ++v)
    if (dsu.find(v) != root) return true;
  return false;
}

int edge_connectivity(const MultiGraph& g) {
  if (g.vertex_count() < 2)
    throw std::invalid_argument("edge_connectivity: need at least two vertices");
  if (!is_connected(g))
    throw std::invalid_argument("edge_connectivity: graph must be connected");
  const int m = g.edge_count();
  // lambda <= min degree, so the search always terminates by k = delta.
  for (int k = 1; k <= g.min_degree(); ++k) {
    std::vector<int> pick(k);
    std::vector<char> removed(m, 0);
    // lexicographic k-combinations of edge ids
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      std::fill(removed.begin(), removed.end(), 0);
      for (int id : pick) removed[id] = 1;
      DisjointSet dsu(g.vertex_count());
      for (int id = 0; id < m; ++id) {
        if (removed[id]) continue;
        auto [u, v] = g.edges()[id];
        dsu.unite(u, v);
      }
      const int root = dsu.find(0);
      bool disconnected = false;
      for (int v = 1; v < g.vertex_count(); ++v)
        if (dsu.find(v) != root) {
          disconnected = true;
          break;
        }
      if (disconnected) return k;
      int i = k - 1;
      while (i >= 0 && pick[i] == m - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return g.min_degree();
}

MultiGraph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("make_cycle: need n >= 3");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n);
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return MultiGraph(n, std::move(edges));
}

MultiGraph make_path(int n) {
  if (n < 1) throw std::invalid_argument("make_path: need n >= 1");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return MultiGraph(n, std::move(edges));
}

MultiGraph make_theta(int a, int b, int c) {
  const int lengths[3] = {a, b, c};
  int unit_arms = 0;
  for (int len : lengths) {
    if (len < 1) throw std::invalid_argument("make_theta: arm length must be >= 1");
    if (len == 1) ++unit_arms;
  }
  if (unit_arms > 1) throw std::invalid_argument("make_theta: at most one arm of length 1");
  const int n = 2 + (a - 1) + (b - 1) + (c - 1);
  std::vector<std::pair<int, int>> edges;
  int next = 2;  // 0 and 1 are the hubs
  for (int len : lengths) {
    int prev = 0;
    for (int i = 1; i < len; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, 1);
  }
  return MultiGraph(n, std::move(edges));
}

MultiGraph apply_vertex_permutation(const MultiGraph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.vertex_count())
    throw std::invalid_argument("apply_vertex_permutation: size mismatch");
  std::vector<char> seen(g.vertex_count(), 0);
  for (int image : perm) {
    if (image < 0 || image >= g.vertex_count() || seen[image])
      throw std::invalid_argument("apply_vertex_permutation: not a permutation");
    seen[image] = 1;
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  std::vector<std::string> labels(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) labels[perm[v]] = g.vertex_label(v);
  return MultiGraph(g.vertex_count(), std::move(edges), std::move(labels));
}

MultiGraph read_edge_list(std::istream& in) {
  std::string line;
  auto next_data_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      if (line[first] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };
  std::string header;
  if (!next_data_line(header)) throw std::invalid_argument("edge list: missing header");
  std::istringstream hs(header);
  int n = 0, m = 0;
  if (!(hs >> n >> m)) throw std::invalid_argument("edge list: malformed header");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    std::string row;
    if (!next_data_line(row)) throw std::invalid_argument("edge list: truncated edge rows");
    std::istringstream rs(row);
    int u = 0, v = 0;
    if (!(rs >> u >> v)) throw std::invalid_argument("edge list: malformed edge row");
    edges.emplace_back(u, v);
  }
  return MultiGraph(n, std::move(edges));
}

void write_edge_list(std::ostream& out, const MultiGraph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace relcut
