#include "relcut/chains.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

#include "enumeration.hpp"
#include "relcut/catalog.hpp"

namespace relcut {

namespace {

bool is_two_connected(const MultiGraph& g) {
  const int n = g.vertex_count();
  if (n < 3) return false;
  if (!is_connected(g)) return false;
  // Articulation test by deletion; all hosts here are small.
  for (int cut_vertex = 0; cut_vertex < n; ++cut_vertex) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    for (auto [u, v] : g.edges()) {
      if (u == cut_vertex || v == cut_vertex) continue;
      parent[find(u)] = find(v);
    }
    int root = -1;
    for (int v = 0; v < n; ++v) {
      if (v == cut_vertex) continue;
      if (root < 0)
        root = find(v);
      else if (find(v) != root)
        return false;
    }
  }
  return true;
}

}  // namespace

ChainDecomposition::ChainDecomposition(MultiGraph host, std::vector<Chain> chains,
                                       MultiGraph distillation, std::vector<int> chain_of_edge,
                                       std::vector<int> branch_of_host,
                                       std::vector<int> host_of_branch)
    : host_(std::move(host)),
      chains_(std::move(chains)),
      distillation_(std::move(distillation)),
      chain_of_edge_(std::move(chain_of_edge)),
      branch_of_host_(std::move(branch_of_host)),
      host_of_branch_(std::move(host_of_branch)) {}

int ChainDecomposition::chain_of_edge(int host_edge_id) const {
  if (host_edge_id < 0 || host_edge_id >= host_.edge_count())
    throw std::out_of_range("chain_of_edge: invalid edge id");
  return chain_of_edge_[host_edge_id];
}

int ChainDecomposition::chain_of_distillation_edge(int d_edge_id) const {
  if (d_edge_id < 0 || d_edge_id >= distillation_.edge_count())
    throw std::out_of_range("chain_of_distillation_edge: invalid edge id");
  return d_edge_id;  // distillation edges are emitted in chain order
}

int ChainDecomposition::distillation_vertex(int host_vertex) const {
  if (host_vertex < 0 || host_vertex >= host_.vertex_count())
    throw std::out_of_range("distillation_vertex: invalid vertex");
  return branch_of_host_[host_vertex];
}

int ChainDecomposition::host_vertex(int distillation_vertex) const {
  if (distillation_vertex < 0 || distillation_vertex >= distillation_.vertex_count())
    throw std::out_of_range("host_vertex: invalid vertex");
  return host_of_branch_[distillation_vertex];
}

std::vector<int> ChainDecomposition::chain_lengths() const {
  std::vector<int> lengths(chains_.size());
  for (size_t i = 0; i < chains_.size(); ++i) lengths[i] = chains_[i].length();
  return lengths;
}

ChainDecomposition decompose(const MultiGraph& g) {
  if (!g.is_simple())
    throw DecomposeError(DecomposeError::Kind::NotSimple, "decompose: host must be simple");
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (m <= n)
    throw DecomposeError(DecomposeError::Kind::TooFewEdges,
                         "decompose: host must have more edges than vertices");
  if (!is_two_connected(g))
    throw DecomposeError(DecomposeError::Kind::NotTwoConnected,
                         "decompose: host must be 2-connected");

  // Incidence lists: (edge id, other endpoint).
  std::vector<std::vector<std::pair<int, int>>> incidence(n);
  for (int id = 0; id < m; ++id) {
    auto [u, v] = g.edges()[id];
    incidence[u].emplace_back(id, v);
    incidence[v].emplace_back(id, u);
  }

  std::vector<int> chain_of_edge(m, -1);
  std::vector<Chain> chains;
  for (int seed = 0; seed < m; ++seed) {
    if (chain_of_edge[seed] >= 0) continue;
    auto [su, sv] = g.edges()[seed];
    // Grow a path through degree-2 vertices in both directions.
    std::vector<int> edge_path{seed};
    std::vector<int> vertex_path{su, sv};
    chain_of_edge[seed] = static_cast<int>(chains.size());
    for (int dir = 0; dir < 2; ++dir) {
      while (true) {
        const int tip = dir == 0 ? vertex_path.back() : vertex_path.front();
        if (g.degree(tip) != 2) break;
        int next_edge = -1, next_vertex = -1;
        for (auto [id, other] : incidence[tip]) {
          if (chain_of_edge[id] >= 0) continue;
          next_edge = id;
          next_vertex = other;
          break;
        }
        if (next_edge < 0) break;
        chain_of_edge[next_edge] = static_cast<int>(chains.size());
        if (dir == 0) {
          edge_path.push_back(next_edge);
          vertex_path.push_back(next_vertex);
        } else {
          edge_path.insert(edge_path.begin(), next_edge);
          vertex_path.insert(vertex_path.begin(), next_vertex);
        }
      }
    }
    Chain chain;
    if (vertex_path.front() > vertex_path.back()) {
      std::reverse(edge_path.begin(), edge_path.end());
      std::reverse(vertex_path.begin(), vertex_path.end());
    }
    chain.edge_ids = std::move(edge_path);
    chain.endpoint_a = vertex_path.front();
    chain.endpoint_b = vertex_path.back();
    chain.internal_vertices.assign(vertex_path.begin() + 1, vertex_path.end() - 1);
    chains.push_back(std::move(chain));
  }

  // Deterministic order: ascending smallest edge id (unique per chain).
  std::vector<int> order(chains.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return *std::min_element(chains[a].edge_ids.begin(), chains[a].edge_ids.end()) <
           *std::min_element(chains[b].edge_ids.begin(), chains[b].edge_ids.end());
  });
  std::vector<Chain> ordered;
  ordered.reserve(chains.size());
  std::vector<int> new_index(chains.size());
  for (size_t i = 0; i < order.size(); ++i) {
    new_index[order[i]] = static_cast<int>(i);
    ordered.push_back(std::move(chains[order[i]]));
  }
  for (int id = 0; id < m; ++id) chain_of_edge[id] = new_index[chain_of_edge[id]];

  std::vector<int> branch_of_host(n, -1);
  std::vector<int> host_of_branch;
  std::vector<std::string> branch_labels;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) > 2) {
      branch_of_host[v] = static_cast<int>(host_of_branch.size());
      host_of_branch.push_back(v);
      branch_labels.push_back(g.vertex_label(v));
    }
  }
  std::vector<std::pair<int, int>> d_edges;
  d_edges.reserve(ordered.size());
  for (const Chain& chain : ordered)
    d_edges.emplace_back(branch_of_host[chain.endpoint_a], branch_of_host[chain.endpoint_b]);
  MultiGraph distillation(static_cast<int>(host_of_branch.size()), std::move(d_edges),
                          std::move(branch_labels));

  return ChainDecomposition(g, std::move(ordered), std::move(distillation),
                            std::move(chain_of_edge), std::move(branch_of_host),
                            std::move(host_of_branch));
}

MultiGraph enlarge(const EnlargedGraphSpec& spec) {
  const MultiGraph& base = spec.base;
  if (!base.is_simple()) throw std::invalid_argument("enlarge: base must be simple");
  for (int v = 0; v < base.vertex_count(); ++v)
    if (base.degree(v) != 3) throw std::invalid_argument("enlarge: base must be cubic");
  if (!is_two_connected(base)) throw std::invalid_argument("enlarge: base must be 2-connected");
  if (spec.s < 1) throw std::invalid_argument("enlarge: s must be >= 1");

  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels = base.vertex_labels();
  int next_vertex = base.vertex_count();
  for (int id = 0; id < base.edge_count(); ++id) {
    auto [u, v] = base.edges()[id];
    const int a = std::min(u, v);
    const int b = std::max(u, v);
    const int subdivisions = spec.short_edges.contains(id) ? spec.s - 1 : spec.s;
    int prev = a;
    for (int i = 0; i < subdivisions; ++i) {
      labels.push_back(base.vertex_label(a) + "-" + base.vertex_label(b) + "." +
                       std::to_string(i + 1));
      edges.emplace_back(prev, next_vertex);
      prev = next_vertex++;
    }
    edges.emplace_back(prev, b);
  }
  return MultiGraph(next_vertex, std::move(edges), std::move(labels));
}

bool is_fair(const MultiGraph& g) {
  const std::vector<int> lengths = decompose(g).chain_lengths();
  const auto [lo, hi] = std::minmax_element(lengths.begin(), lengths.end());
  return *hi - *lo <= 1;
}

BigInt elementary_symmetric(const std::vector<int>& values, int k) {
  if (k < 0) throw std::invalid_argument("elementary_symmetric: k must be >= 0");
  std::vector<BigInt> e(k + 1, 0);
  e[0] = 1;
  int processed = 0;
  for (int value : values) {
    ++processed;
    for (int j = std::min(k, processed); j >= 1; --j) e[j] += BigInt(value) * e[j - 1];
  }
  return e[k];
}

BigInt fair_maximum(int t, int m, int k) {
  if (!(2 <= k && k <= t && t <= m))
    throw std::invalid_argument("fair_maximum: need 2 <= k <= t <= m");
  const int base = m / t;
  const int remainder = m % t;
  std::vector<int> fair(t, base);
  for (int i = 0; i < remainder; ++i) ++fair[i];
  return elementary_symmetric(fair, k);
}

namespace {

// Both membership tests for a chain subset: removal from the host, and the
// corresponding edge subset's cut test on the distillation.
struct InducedEnumerator {
  const ChainDecomposition& d;
  detail::ConnectivityScratch host_scratch;
  detail::ConnectivityScratch dist_scratch;
  std::vector<char> host_edge_removed;
  std::vector<char> host_vertex_removed;
  std::vector<char> dist_edge_removed;

  explicit InducedEnumerator(const ChainDecomposition& decomposition)
      : d(decomposition),
        host_scratch(decomposition.host().vertex_count()),
        dist_scratch(decomposition.distillation().vertex_count()),
        host_edge_removed(decomposition.host().edge_count(), 0),
        host_vertex_removed(decomposition.host().vertex_count(), 0),
        dist_edge_removed(decomposition.distillation().edge_count(), 0) {}

  bool host_disconnected_without_chains(const std::vector<int>& chain_subset) {
    const MultiGraph& host = d.host();
    std::fill(host_edge_removed.begin(), host_edge_removed.end(), 0);
    std::fill(host_vertex_removed.begin(), host_vertex_removed.end(), 0);
    for (int c : chain_subset) {
      const Chain& chain = d.chains()[c];
      for (int id : chain.edge_ids) host_edge_removed[id] = 1;
      for (int v : chain.internal_vertices) host_vertex_removed[v] = 1;
    }
    // Component count over the surviving vertices.
    const int n = host.vertex_count();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    for (int id = 0; id < host.edge_count(); ++id) {
      if (host_edge_removed[id]) continue;
      auto [u, v] = host.edges()[id];
      parent[find(u)] = find(v);
    }
    int root = -1;
    for (int v = 0; v < n; ++v) {
      if (host_vertex_removed[v]) continue;
      if (root < 0)
        root = find(v);
      else if (find(v) != root)
        return true;
    }
    return false;
  }

  bool distillation_disconnected(const std::vector<int>& chain_subset) {
    std::fill(dist_edge_removed.begin(), dist_edge_removed.end(), 0);
    for (int c : chain_subset) dist_edge_removed[c] = 1;
    return !dist_scratch.connected_without(d.distillation(), dist_edge_removed);
  }
};

}  // namespace

BigInt mu_k_induced(const ChainDecomposition& decomposition, int k) {
  if (k < 0) throw std::invalid_argument("mu_k_induced: k must be >= 0");
  const int t = decomposition.chain_count();
  if (k > t) return 0;
  if (k == 0) return 0;  // the empty removal never disconnects a connected host
  const std::vector<int> lengths = decomposition.chain_lengths();
  InducedEnumerator enumerator(decomposition);
  BigInt sum = 0;
  detail::for_each_combination(t, k, [&](const std::vector<int>& subset) {
    const bool host_route = enumerator.host_disconnected_without_chains(subset);
    const bool dist_route = enumerator.distillation_disconnected(subset);
    if (host_route != dist_route)
      throw std::logic_error("mu_k_induced: chain-removal and distillation-cut tests disagree");
    if (!host_route) return;
    BigInt product = 1;
    for (int c : subset) product *= lengths[c];
    sum += product;
  });
  return sum;
}

BigInt InducedCutCounts::total() const {
  BigInt t = vertex_separating + edge_separating;
  for (const auto& [sig, count] : nontrivial) t += count;
  return t;
}

InducedCutCounts mu_k_induced_by_type(const ChainDecomposition& decomposition, int k) {
  if (k < 0) throw std::invalid_argument("mu_k_induced_by_type: k must be >= 0");
  InducedCutCounts counts;
  const int t = decomposition.chain_count();
  if (k > t || k == 0) return counts;
  const std::vector<int> lengths = decomposition.chain_lengths();
  const MultiGraph& distillation = decomposition.distillation();
  detail::ConnectivityScratch scratch(distillation.vertex_count());
  std::vector<char> removed(distillation.edge_count(), 0);
  detail::for_each_combination(t, k, [&](const std::vector<int>& subset) {
    std::fill(removed.begin(), removed.end(), 0);
    for (int c : subset) removed[c] = 1;
    if (scratch.connected_without(distillation, removed)) return;
    BigInt product = 1;
    for (int c : subset) product *= lengths[c];
    const CutClassification cls = classify_cut(distillation, EdgeSet(distillation, subset));
    switch (cls.kind) {
      case CutKind::VertexSeparating:
        counts.vertex_separating += product;
        break;
      case CutKind::EdgeSeparating:
        counts.edge_separating += product;
        break;
      case CutKind::Nontrivial: {
        const std::string key =
            cls.separated_sets.empty() ? "(none)" : cls.separated_sets.front().signature;
        counts.nontrivial[key] += product;
        break;
      }
    }
  });
  return counts;
}

BigInt mu_k_via_chain_formula(const ChainDecomposition& decomposition, int k) {
  const int m = decomposition.host().edge_count();
  if (k < 0 || k > m) throw std::invalid_argument("mu_k_via_chain_formula: k out of range");
  return binomial(m, k) - elementary_symmetric(decomposition.chain_lengths(), k) +
         mu_k_induced(decomposition, k);
}

namespace {

struct ChainProfile {
  int corank;
  int s;
  int r;
  bool ok;
};

ChainProfile chain_profile(const ChainDecomposition& d) {
  const int m = d.host().edge_count();
  const int c = m - d.host().vertex_count() + 1;
  ChainProfile profile{c, 0, 0, false};
  const int groups = 3 * c - 3;
  if (groups <= 0) return profile;
  profile.s = m / groups;
  profile.r = m % groups;
  if (d.chain_count() != groups) return profile;
  int longs = 0, shorts = 0;
  for (int len : d.chain_lengths()) {
    if (len == profile.s + 1)
      ++longs;
    else if (len == profile.s)
      ++shorts;
    else
      return profile;
  }
  profile.ok = longs == profile.r && shorts == groups - profile.r;
  return profile;
}

bool chains_form_matching(const std::vector<const Chain*>& chains) {
  for (size_t i = 0; i < chains.size(); ++i)
    for (size_t j = i + 1; j < chains.size(); ++j) {
      const Chain* a = chains[i];
      const Chain* b = chains[j];
      if (a->endpoint_a == b->endpoint_a || a->endpoint_a == b->endpoint_b ||
          a->endpoint_b == b->endpoint_a || a->endpoint_b == b->endpoint_b)
        return false;
    }
  return true;
}

}  // namespace

BauerReport check_bauer_conditions(const ChainDecomposition& decomposition) {
  BauerReport report;
  const ChainProfile profile = chain_profile(decomposition);
  report.corank = profile.corank;
  report.s = profile.s;
  report.r = profile.r;
  report.chain_profile_ok = profile.ok;
  const MultiGraph& d = decomposition.distillation();
  report.distillation_simple = d.is_simple();
  report.distillation_cubic = true;
  for (int v = 0; v < d.vertex_count(); ++v)
    if (d.degree(v) != 3) report.distillation_cubic = false;
  report.distillation_size_ok = d.vertex_count() == 2 * profile.corank - 2;
  report.distillation_lambda3 = d.vertex_count() >= 2 && edge_connectivity(d) == 3;
  return report;
}

WangReport check_wang_m3_conditions(const ChainDecomposition& decomposition) {
  const BauerReport base = check_bauer_conditions(decomposition);
  WangReport report;
  report.corank = base.corank;
  report.s = base.s;
  report.r = base.r;
  report.distillation_simple = base.distillation_simple;
  report.distillation_cubic = base.distillation_cubic;
  report.distillation_size_ok = base.distillation_size_ok;
  report.distillation_lambda3 = base.distillation_lambda3;
  report.chain_profile_ok = base.chain_profile_ok;

  const MultiGraph& d = decomposition.distillation();
  report.distillation_min_mu3 = false;
  if (report.distillation_simple && report.distillation_cubic && report.distillation_size_ok &&
      d.vertex_count() <= 10) {
    // Minimality of mu_3 among connected cubic simple graphs of this order.
    BigInt best = -1;
    for (const MultiGraph& candidate : catalog::cubic_graphs(d.vertex_count())) {
      const BigInt mu3 = mu_k_bruteforce(candidate, 3);
      if (best < 0 || mu3 < best) best = mu3;
    }
    report.distillation_min_mu3 = mu_k_bruteforce(d, 3) == best;
  }

  const int c = report.corank;
  const int s = report.s;
  std::vector<const Chain*> shorts, longs;
  for (const Chain& chain : decomposition.chains()) {
    if (chain.length() == s) shorts.push_back(&chain);
    if (chain.length() == s + 1) longs.push_back(&chain);
  }
  if (report.r <= c - 1) {
    report.placement_ok = chains_form_matching(longs);
  } else if (report.r >= 2 * c - 2) {
    report.placement_ok = chains_form_matching(shorts);
  } else {
    // Every branch vertex must touch both a short and a long chain.
    report.placement_ok = true;
    for (int bv = 0; bv < d.vertex_count(); ++bv) {
      const int host_v = decomposition.host_vertex(bv);
      bool has_short = false, has_long = false;
      for (const Chain& chain : decomposition.chains()) {
        if (chain.endpoint_a != host_v && chain.endpoint_b != host_v) continue;
        if (chain.length() == s) has_short = true;
        if (chain.length() == s + 1) has_long = true;
      }
      if (!has_short || !has_long) {
        report.placement_ok = false;
        break;
      }
    }
  }
  return report;
}

std::string chain_report_json(const ChainDecomposition& decomposition) {
  nlohmann::ordered_json j;
  const MultiGraph& host = decomposition.host();
  j["host"] = {{"n", host.vertex_count()}, {"m", host.edge_count()}};
  nlohmann::ordered_json chains = nlohmann::ordered_json::array();
  for (const Chain& chain : decomposition.chains()) {
    nlohmann::ordered_json entry;
    entry["endpoints"] = {host.vertex_label(chain.endpoint_a),
                          host.vertex_label(chain.endpoint_b)};
    entry["length"] = chain.length();
    entry["edges"] = chain.edge_ids;
    chains.push_back(std::move(entry));
  }
  j["chains"] = std::move(chains);
  const MultiGraph& d = decomposition.distillation();
  nlohmann::ordered_json d_edges = nlohmann::ordered_json::array();
  for (auto [u, v] : d.edges()) d_edges.push_back({u, v});
  j["distillation"] = {{"n", d.vertex_count()},
                       {"m", d.edge_count()},
                       {"labels", d.vertex_labels()},
                       {"edges", std::move(d_edges)}};
  return j.dump(2);
}

}  // namespace relcut
