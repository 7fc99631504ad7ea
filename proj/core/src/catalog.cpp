#include "relcut/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "relcut/isomorphism.hpp"

namespace relcut::catalog {

namespace {

// Graphs are specified by 1-based vertex label pairs, matching the usual
// drawings: rim 12,23,...,81 first, then the four chords.
MultiGraph labeled_graph(int n, const std::vector<std::pair<int, int>>& one_based_edges) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(one_based_edges.size());
  for (auto [u, v] : one_based_edges) edges.emplace_back(u - 1, v - 1);
  std::vector<std::string> labels(n);
  for (int v = 0; v < n; ++v) labels[v] = std::to_string(v + 1);
  return MultiGraph(n, std::move(edges), std::move(labels));
}

std::vector<std::pair<int, int>> rim8() {
  return {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 1}};
}

MultiGraph with_chords(const std::vector<std::pair<int, int>>& chords) {
  auto edges = rim8();
  edges.insert(edges.end(), chords.begin(), chords.end());
  return labeled_graph(8, edges);
}

// Edge ids of the given 1-based label pairs within a catalog graph.
std::vector<int> edge_ids(const MultiGraph& g, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<int> ids;
  ids.reserve(pairs.size());
  for (auto [lu, lv] : pairs) {
    const int u = lu - 1;
    const int v = lv - 1;
    int found = -1;
    for (int id = 0; id < g.edge_count(); ++id) {
      auto [a, b] = g.edges()[id];
      if ((a == u && b == v) || (a == v && b == u)) {
        found = id;
        break;
      }
    }
    if (found < 0) throw std::logic_error("catalog: edge pair not present in host");
    ids.push_back(found);
  }
  return ids;
}

std::vector<int> vertex_ids(const std::vector<int>& one_based) {
  std::vector<int> ids;
  ids.reserve(one_based.size());
  for (int v : one_based) ids.push_back(v - 1);
  std::sort(ids.begin(), ids.end());
  return ids;
}

struct Entries {
  std::vector<Entry> list;
  std::map<std::string, int> index;

  void add_graph(const std::string& name, MultiGraph g) {
    index[name] = static_cast<int>(list.size());
    list.push_back(Entry{name, name, std::move(g), std::nullopt, std::nullopt});
  }
  void add_edge_set(const std::string& name, const std::string& host,
                    const std::vector<std::pair<int, int>>& pairs) {
    const MultiGraph& g = list[index.at(host)].graph;
    index[name] = static_cast<int>(list.size());
    list.push_back(Entry{name, host, g, EdgeSet(g, edge_ids(g, pairs)), std::nullopt});
  }
  void add_vertex_set(const std::string& name, const std::string& host,
                      const std::vector<int>& one_based) {
    const MultiGraph& g = list[index.at(host)].graph;
    index[name] = static_cast<int>(list.size());
    list.push_back(Entry{name, host, g, std::nullopt, vertex_ids(one_based)});
  }
};

const Entries& entries() {
  static const Entries table = [] {
    Entries t;
    t.add_graph("W", with_chords({{1, 5}, {2, 6}, {3, 7}, {4, 8}}));
    t.add_graph("Q", with_chords({{1, 6}, {2, 5}, {3, 8}, {4, 7}}));
    t.add_graph("G1", with_chords({{1, 5}, {2, 8}, {3, 6}, {4, 7}}));
    t.add_graph("G2", with_chords({{1, 4}, {2, 8}, {3, 6}, {5, 7}}));
    t.add_graph("G3", with_chords({{1, 3}, {2, 8}, {4, 6}, {5, 7}}));
    t.add_edge_set("M1", "W", {{1, 2}, {3, 4}, {5, 6}, {7, 8}});
    t.add_edge_set("M2", "W", {{1, 5}, {2, 6}, {3, 4}, {7, 8}});
    t.add_edge_set("M3", "W", {{1, 5}, {2, 6}, {3, 7}, {4, 8}});
    t.add_edge_set("M4", "Q", {{1, 6}, {2, 5}, {3, 8}, {4, 7}});
    t.add_edge_set("M5", "Q", {{2, 3}, {4, 5}, {6, 7}, {8, 1}});
    t.add_edge_set("X", "W", {{2, 3}, {5, 6}, {7, 8}, {1, 8}});
    t.add_edge_set("M1p", "W", {{2, 3}, {4, 5}, {6, 7}, {1, 8}});
    t.add_vertex_set("D1", "W", {1, 2, 6, 5});
    t.add_vertex_set("D2", "W", {2, 3, 7, 6});
    t.add_vertex_set("D3", "W", {3, 4, 8, 7});
    t.add_vertex_set("D4", "W", {4, 5, 1, 8});
    return t;
  }();
  return table;
}

}  // namespace

const Entry& get(const std::string& name) {
  const auto& table = entries();
  auto it = table.index.find(name);
  if (it == table.index.end()) throw std::out_of_range("catalog: unknown entry '" + name + "'");
  return table.list[it->second];
}

std::vector<std::string> names() {
  std::vector<std::string> result;
  result.reserve(entries().list.size());
  for (const Entry& e : entries().list) result.push_back(e.name);
  return result;
}

const MultiGraph& graph(const std::string& name) {
  const Entry& entry = get(name);
  if (!entry.is_graph()) throw std::invalid_argument("catalog: '" + name + "' is not a graph");
  return entry.graph;
}

const EdgeSet& edge_set(const std::string& name) {
  const Entry& entry = get(name);
  if (!entry.edge_set) throw std::invalid_argument("catalog: '" + name + "' is not an edge set");
  return *entry.edge_set;
}

namespace {

// Degree-constrained backtracking: vertex u picks its missing neighbors among
// vertices with larger index, so each labeled graph appears exactly once.
void generate_cubic(int n, int u, std::vector<std::vector<char>>& adjacent,
                    std::vector<int>& degree, std::vector<std::pair<int, int>>& edges,
                    const std::function<void(const std::vector<std::pair<int, int>>&)>& sink) {
  if (u == n) {
    sink(edges);
    return;
  }
  const int need = 3 - degree[u];
  if (need == 0) {
    generate_cubic(n, u + 1, adjacent, degree, edges, sink);
    return;
  }
  std::vector<int> candidates;
  for (int v = u + 1; v < n; ++v)
    if (!adjacent[u][v] && degree[v] < 3) candidates.push_back(v);
  if (static_cast<int>(candidates.size()) < need) return;
  std::vector<int> pick(need);
  std::function<void(int, int)> choose = [&](int start, int depth) {
    if (depth == need) {
      for (int i = 0; i < need; ++i) {
        const int v = candidates[pick[i]];
        adjacent[u][v] = adjacent[v][u] = 1;
        ++degree[u];
        ++degree[v];
        edges.emplace_back(u, v);
      }
      generate_cubic(n, u + 1, adjacent, degree, edges, sink);
      for (int i = 0; i < need; ++i) {
        const int v = candidates[pick[i]];
        adjacent[u][v] = adjacent[v][u] = 0;
        --degree[u];
        --degree[v];
        edges.pop_back();
      }
      return;
    }
    for (int c = start; c <= static_cast<int>(candidates.size()) - (need - depth); ++c) {
      pick[depth] = c;
      choose(c + 1, depth + 1);
    }
  };
  choose(0, 0);
}

// Cheap isomorphism invariant: sorted per-vertex triangle counts.
std::vector<int> triangle_profile(const MultiGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
  std::vector<int> triangles(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (adj[a][b] && adj[b][c] && adj[a][c]) {
          ++triangles[a];
          ++triangles[b];
          ++triangles[c];
        }
  std::sort(triangles.begin(), triangles.end());
  return triangles;
}

}  // namespace

std::vector<MultiGraph> cubic_graphs(int n) {
  if (n % 2 != 0 || n < 4 || n > 10)
    throw std::invalid_argument("cubic_graphs: n must be even with 4 <= n <= 10");
  std::vector<MultiGraph> representatives;
  std::vector<std::vector<int>> profiles;
  std::vector<std::vector<char>> adjacent(n, std::vector<char>(n, 0));
  std::vector<int> degree(n, 0);
  std::vector<std::pair<int, int>> edges;
  const std::function<void(const std::vector<std::pair<int, int>>&)> sink =
      [&](const std::vector<std::pair<int, int>>& edge_list) {
        MultiGraph candidate(n, edge_list);
        if (!is_connected(candidate)) return;
        const std::vector<int> profile = triangle_profile(candidate);
        for (size_t i = 0; i < representatives.size(); ++i)
          if (profiles[i] == profile && are_isomorphic(representatives[i], candidate)) return;
        representatives.push_back(std::move(candidate));
        profiles.push_back(profile);
      };
  generate_cubic(n, 0, adjacent, degree, edges, sink);
  return representatives;
}

namespace {

void all_perfect_matchings(const MultiGraph& g, std::vector<char>& matched,
                           std::vector<int>& picked, std::vector<EdgeSet>& out) {
  int u = -1;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!matched[v]) {
      u = v;
      break;
    }
  if (u < 0) {
    out.emplace_back(g, picked);
    return;
  }
  for (int id = 0; id < g.edge_count(); ++id) {
    auto [a, b] = g.edges()[id];
    if (a != u && b != u) continue;
    const int other = a == u ? b : a;
    if (matched[other]) continue;
    matched[u] = matched[other] = 1;
    picked.push_back(id);
    all_perfect_matchings(g, matched, picked, out);
    picked.pop_back();
    matched[u] = matched[other] = 0;
  }
}

}  // namespace

std::vector<EdgeSet> perfect_matchings(const MultiGraph& g) {
  if (g.vertex_count() % 2 != 0 || g.vertex_count() > 12)
    throw std::invalid_argument("perfect_matchings: n must be even with n <= 12");
  std::vector<EdgeSet> result;
  std::vector<char> matched(g.vertex_count(), 0);
  std::vector<int> picked;
  all_perfect_matchings(g, matched, picked, result);
  std::sort(result.begin(), result.end(),
            [](const EdgeSet& a, const EdgeSet& b) { return a.ids() < b.ids(); });
  return result;
}

std::vector<std::vector<int>> matching_orbits(const MultiGraph& g,
                                              const std::vector<EdgeSet>& matchings) {
  if (!g.is_simple())
    throw std::invalid_argument("matching_orbits: host must be simple");
  // Edge id lookup by endpoint pair.
  std::map<std::pair<int, int>, int> id_of;
  for (int id = 0; id < g.edge_count(); ++id) {
    auto [u, v] = g.edges()[id];
    id_of[{std::min(u, v), std::max(u, v)}] = id;
  }
  std::map<std::vector<int>, int> index_of;
  for (size_t i = 0; i < matchings.size(); ++i) index_of[matchings[i].ids()] = static_cast<int>(i);

  std::vector<int> parent(matchings.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };

  for (const std::vector<int>& sigma : automorphisms(g)) {
    for (size_t i = 0; i < matchings.size(); ++i) {
      std::vector<int> image;
      image.reserve(matchings[i].ids().size());
      for (int id : matchings[i].ids()) {
        auto [u, v] = g.edges()[id];
        const int su = sigma[u], sv = sigma[v];
        image.push_back(id_of.at({std::min(su, sv), std::max(su, sv)}));
      }
      std::sort(image.begin(), image.end());
      auto it = index_of.find(image);
      if (it == index_of.end())
        throw std::logic_error("matching_orbits: image of a matching is missing from the list");
      parent[find(static_cast<int>(i))] = find(it->second);
    }
  }

  std::map<int, std::vector<int>> buckets;
  for (size_t i = 0; i < matchings.size(); ++i)
    buckets[find(static_cast<int>(i))].push_back(static_cast<int>(i));
  std::vector<std::vector<int>> orbits;
  orbits.reserve(buckets.size());
  for (auto& [root, members] : buckets) orbits.push_back(std::move(members));
  std::sort(orbits.begin(), orbits.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return orbits;
}

}  // namespace relcut::catalog
