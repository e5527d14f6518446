#include "tgraph/analysis.hpp"

#include <algorithm>
#include <numeric>

namespace tgraph {

namespace {

struct DisjointSet {
  std::vector<Vertex> parent;

  explicit DisjointSet(Int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  Vertex find(Vertex v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  }

  void unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

// adjacency restricted to a vertex block, relabeled 0..n-1
struct LocalGraph {
  Int n = 0;
  std::vector<std::vector<int>> adj;
  std::vector<std::vector<bool>> matrix;
  Int edge_count = 0;
};

LocalGraph extract_local(const TGraph& g, std::span<const Vertex> block) {
  LocalGraph local;
  local.n = static_cast<Int>(block.size());
  local.adj.assign(block.size(), {});
  local.matrix.assign(block.size(), std::vector<bool>(block.size(), false));
  std::vector<int> position(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < block.size(); ++i) {
    position[static_cast<std::size_t>(block[i])] = static_cast<int>(i);
  }
  for (std::size_t i = 0; i < block.size(); ++i) {
    for (Vertex w : g.adjacency[static_cast<std::size_t>(block[i])]) {
      const int j = position[static_cast<std::size_t>(w)];
      if (j < 0) continue;
      local.adj[i].push_back(j);
      local.matrix[i][static_cast<std::size_t>(j)] = true;
      if (static_cast<std::size_t>(j) > i) ++local.edge_count;
    }
  }
  return local;
}

ComponentKind classify_local(const LocalGraph& local) {
  if (local.n == 1) return ComponentKind::Isolated;
  Int degree_one = 0;
  Int degree_two = 0;
  for (const auto& neighbors : local.adj) {
    const std::size_t d = neighbors.size();
    if (d == 1) ++degree_one;
    if (d == 2) ++degree_two;
  }
  // callers pass connected blocks, so degree profiles decide the shape
  if (degree_two == local.n) return ComponentKind::Cycle;
  if (degree_one == 2 && degree_one + degree_two == local.n) return ComponentKind::Path;
  return ComponentKind::Other;
}

// Jointly refines vertex colors of two graphs so equal color ids mean equal
// refinement classes across both. Returns false early if the color
// multisets ever diverge (then the graphs cannot be isomorphic).
bool refine_colors(const LocalGraph& a, const LocalGraph& b, std::vector<int>& ca,
                   std::vector<int>& cb) {
  ca.assign(static_cast<std::size_t>(a.n), 0);
  cb.assign(static_cast<std::size_t>(b.n), 0);
  for (Int round = 0; round < a.n; ++round) {
    using Signature = std::pair<int, std::vector<int>>;
    auto signature_of = [](const LocalGraph& g, const std::vector<int>& colors,
                           std::size_t v) {
      Signature s{colors[v], {}};
      for (int w : g.adj[v]) s.second.push_back(colors[static_cast<std::size_t>(w)]);
      std::sort(s.second.begin(), s.second.end());
      return s;
    };
    std::vector<Signature> sig_a(static_cast<std::size_t>(a.n));
    std::vector<Signature> sig_b(static_cast<std::size_t>(b.n));
    std::vector<Signature> all;
    for (std::size_t v = 0; v < sig_a.size(); ++v) all.push_back(sig_a[v] = signature_of(a, ca, v));
    for (std::size_t v = 0; v < sig_b.size(); ++v) all.push_back(sig_b[v] = signature_of(b, cb, v));
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    auto id_of = [&all](const Signature& s) {
      return static_cast<int>(std::lower_bound(all.begin(), all.end(), s) - all.begin());
    };
    std::vector<int> next_a(sig_a.size());
    std::vector<int> next_b(sig_b.size());
    for (std::size_t v = 0; v < sig_a.size(); ++v) next_a[v] = id_of(sig_a[v]);
    for (std::size_t v = 0; v < sig_b.size(); ++v) next_b[v] = id_of(sig_b[v]);
    auto hist_a = next_a;
    auto hist_b = next_b;
    std::sort(hist_a.begin(), hist_a.end());
    std::sort(hist_b.begin(), hist_b.end());
    if (hist_a != hist_b) return false;
    if (next_a == ca && next_b == cb) break;  // stable
    ca = std::move(next_a);
    cb = std::move(next_b);
  }
  return true;
}

bool backtrack_isomorphic(const LocalGraph& a, const LocalGraph& b) {
  std::vector<int> ca, cb;
  if (!refine_colors(a, b, ca, cb)) return false;

  const std::size_t n = static_cast<std::size_t>(a.n);
  std::vector<int> order;  // vertices of a, most-constrained first
  {
    std::vector<bool> placed(n, false);
    for (std::size_t step = 0; step < n; ++step) {
      int best = -1;
      int best_mapped = -1;
      for (std::size_t v = 0; v < n; ++v) {
        if (placed[v]) continue;
        int mapped = 0;
        for (int w : a.adj[v]) mapped += placed[static_cast<std::size_t>(w)];
        if (mapped > best_mapped ||
            (mapped == best_mapped && a.adj[v].size() > a.adj[static_cast<std::size_t>(best)].size())) {
          best = static_cast<int>(v);
          best_mapped = mapped;
        }
      }
      order.push_back(best);
      placed[static_cast<std::size_t>(best)] = true;
    }
  }

  std::vector<int> map_ab(n, -1);
  std::vector<bool> used_b(n, false);
  auto dfs = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    const int v = order[depth];
    for (std::size_t w = 0; w < n; ++w) {
      if (used_b[w] || cb[w] != ca[static_cast<std::size_t>(v)]) continue;
      bool ok = true;
      for (std::size_t prior = 0; prior < depth && ok; ++prior) {
        const int x = order[prior];
        const int y = map_ab[static_cast<std::size_t>(x)];
        ok = a.matrix[static_cast<std::size_t>(v)][static_cast<std::size_t>(x)] ==
             b.matrix[w][static_cast<std::size_t>(y)];
      }
      if (!ok) continue;
      map_ab[static_cast<std::size_t>(v)] = static_cast<int>(w);
      used_b[w] = true;
      if (self(self, depth + 1)) return true;
      used_b[w] = false;
      map_ab[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  };
  return dfs(dfs, 0);
}

BipartiteCheck bipartite_of_adjacency(const std::vector<std::vector<Vertex>>& adjacency) {
  const std::size_t n = adjacency.size();
  BipartiteCheck result;
  result.coloring.assign(n, -1);
  std::vector<Vertex> parent(n, -1);
  std::vector<Vertex> queue;
  for (std::size_t start = 0; start < n; ++start) {
    if (result.coloring[start] != -1) continue;
    result.coloring[start] = 0;
    queue.assign(1, static_cast<Vertex>(start));
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (Vertex w : adjacency[static_cast<std::size_t>(u)]) {
        if (result.coloring[static_cast<std::size_t>(w)] == -1) {
          result.coloring[static_cast<std::size_t>(w)] =
              static_cast<std::int8_t>(1 - result.coloring[static_cast<std::size_t>(u)]);
          parent[static_cast<std::size_t>(w)] = u;
          queue.push_back(w);
        } else if (result.coloring[static_cast<std::size_t>(w)] ==
                   result.coloring[static_cast<std::size_t>(u)]) {
          // odd closed walk: u up to the root, root down to w, then back to u
          result.bipartite = false;
          std::vector<Vertex> up;
          for (Vertex x = u; x != -1; x = parent[static_cast<std::size_t>(x)]) {
            up.push_back(x);
          }
          std::vector<Vertex> down;
          for (Vertex x = w; x != -1; x = parent[static_cast<std::size_t>(x)]) {
            down.push_back(x);
          }
          result.odd_walk = std::move(up);
          // both chains end at the start vertex; skip its duplicate
          result.odd_walk.insert(result.odd_walk.end(), down.rbegin() + 1, down.rend());
          result.odd_walk.push_back(u);
          result.coloring.clear();
          return result;
        }
      }
    }
  }
  return result;
}

// exact chromatic number of one connected component, local labels
Int chromatic_of_local(const LocalGraph& local) {
  if (local.edge_count == 0) return 1;
  {
    BipartiteCheck check = bipartite_of_adjacency([&] {
      std::vector<std::vector<Vertex>> adjacency(static_cast<std::size_t>(local.n));
      for (std::size_t v = 0; v < adjacency.size(); ++v) {
        for (int w : local.adj[v]) adjacency[v].push_back(static_cast<Vertex>(w));
      }
      return adjacency;
    }());
    if (check.bipartite) return 2;
  }

  const std::size_t n = static_cast<std::size_t>(local.n);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return local.adj[static_cast<std::size_t>(x)].size() >
           local.adj[static_cast<std::size_t>(y)].size();
  });

  // greedy clique in degree order: any clique lower-bounds chi
  Int clique = 0;
  {
    std::vector<int> members;
    for (int v : order) {
      bool adjacent_to_all = true;
      for (int m : members) {
        adjacent_to_all &= static_cast<bool>(local.matrix[static_cast<std::size_t>(v)][static_cast<std::size_t>(m)]);
      }
      if (adjacent_to_all) members.push_back(v);
    }
    clique = static_cast<Int>(members.size());
  }

  // greedy coloring upper bound
  Int upper = 0;
  {
    std::vector<int> color(n, -1);
    for (int v : order) {
      std::vector<bool> taken(n, false);
      for (int w : local.adj[static_cast<std::size_t>(v)]) {
        if (color[static_cast<std::size_t>(w)] >= 0) taken[static_cast<std::size_t>(color[static_cast<std::size_t>(w)])] = true;
      }
      int c = 0;
      while (taken[static_cast<std::size_t>(c)]) ++c;
      color[static_cast<std::size_t>(v)] = c;
      upper = std::max<Int>(upper, c + 1);
    }
  }

  std::vector<int> color(n, -1);
  auto colorable = [&](auto&& self, std::size_t depth, int k, int used) -> bool {
    if (depth == n) return true;
    const int v = order[depth];
    const int limit = std::min(k, used + 1);  // new colors in canonical order
    for (int c = 0; c < limit; ++c) {
      bool free = true;
      for (int w : local.adj[static_cast<std::size_t>(v)]) {
        free &= color[static_cast<std::size_t>(w)] != c;
      }
      if (!free) continue;
      color[static_cast<std::size_t>(v)] = c;
      if (self(self, depth + 1, k, std::max(used, c + 1))) return true;
      color[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  };

  for (Int k = std::max<Int>(clique, 3); k < upper; ++k) {
    std::fill(color.begin(), color.end(), -1);
    if (colorable(colorable, 0, static_cast<int>(k), 0)) return k;
  }
  return upper;
}

}  // namespace

std::vector<std::vector<Vertex>> connected_components(const TGraph& g) {
  const Int n = g.vertex_count();
  DisjointSet dsu(n);
  for (const auto& [u, v] : g.edges) dsu.unite(u, v);

  std::vector<int> block_of_root(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<Vertex>> blocks;
  for (Vertex v = 0; v < n; ++v) {
    const Vertex root = dsu.find(v);
    int& slot = block_of_root[static_cast<std::size_t>(root)];
    if (slot < 0) {
      slot = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(slot)].push_back(v);
  }
  return blocks;  // ascending roots give ascending smallest members
}

BipartiteCheck is_bipartite(const TGraph& g) { return bipartite_of_adjacency(g.adjacency); }

Int chromatic_number(const TGraph& g, Int component_cap) {
  if (g.vertex_count() == 0) return 0;
  Int chi = 1;
  for (const auto& block : connected_components(g)) {
    if (static_cast<Int>(block.size()) > component_cap) {
      throw SizeLimitError("chromatic_number: component of size " +
                           std::to_string(block.size()) + " exceeds cap " +
                           std::to_string(component_cap));
    }
    chi = std::max(chi, chromatic_of_local(extract_local(g, block)));
  }
  return chi;
}

std::string_view to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::Isolated: return "isolated";
    case ComponentKind::Path: return "path";
    case ComponentKind::Cycle: return "cycle";
    case ComponentKind::Other: return "other";
  }
  return "other";
}

std::vector<ComponentClassification> classify_components(const TGraph& g) {
  std::vector<ComponentClassification> result;
  for (auto& block : connected_components(g)) {
    ComponentClassification c;
    c.kind = classify_local(extract_local(g, block));
    c.vertices = std::move(block);
    result.push_back(std::move(c));
  }
  return result;
}

bool components_isomorphic(const TGraph& g, std::span<const Vertex> a,
                           std::span<const Vertex> b, Int max_vertices) {
  if (a.size() != b.size()) return false;
  const LocalGraph la = extract_local(g, a);
  const LocalGraph lb = extract_local(g, b);
  if (la.edge_count != lb.edge_count) return false;

  const ComponentKind ka = classify_local(la);
  const ComponentKind kb = classify_local(lb);
  if (ka != kb) return false;
  if (ka != ComponentKind::Other) return true;  // same shape, same size

  if (la.n > max_vertices) {
    throw SizeLimitError("components_isomorphic: block of size " +
                         std::to_string(la.n) + " exceeds cap " +
                         std::to_string(max_vertices));
  }
  return backtrack_isomorphic(la, lb);
}

std::pair<std::vector<Vertex>, std::vector<Vertex>> parity_bipartition(const TGraph& g) {
  if (g.bounds.generator_count() != 2) {
    throw std::invalid_argument("parity_bipartition needs exactly 2 generators");
  }
  std::pair<std::vector<Vertex>, std::vector<Vertex>> classes;
  const ElementTable table = g.bounds.enumerate_elements();
  for (Int v = 0; v < g.vertex_count(); ++v) {
    ((table.row(v).sum() % 2 == 0) ? classes.first : classes.second)
        .push_back(static_cast<Vertex>(v));
  }
  return classes;
}

Exponents involution_image(const GeneratorBounds& bounds, const Exponents& x) {
  if (bounds.generator_count() != 2 || bounds[0] != 2) {
    throw std::invalid_argument("involution needs 2-generator bounds with e_1 = 2");
  }
  if (!bounds.contains(x)) {
    throw std::invalid_argument("element out of range for these bounds");
  }
  Exponents image(2);
  image << 1 - x[0], x[1];
  return image;
}

AnalysisReport analyze(const TGraph& g, const AnalysisOptions& options) {
  AnalysisReport report;
  report.components = classify_components(g);
  report.component_count = static_cast<Int>(report.components.size());
  for (const auto& c : report.components) {
    report.isolated_count += c.kind == ComponentKind::Isolated;
  }
  report.bipartite = is_bipartite(g).bipartite;

  Int largest = 0;
  for (const auto& c : report.components) largest = std::max(largest, c.size());
  if (largest <= options.chromatic_cap) {
    report.chromatic_number = chromatic_number(g, options.chromatic_cap);
  } else if (report.bipartite) {
    report.chromatic_number = g.edge_count() > 0 ? 2 : (g.vertex_count() > 0 ? 1 : 0);
  }

  if (g.vertex_count() <= options.spectral_cap) {
    report.laplacian_nullity =
        laplacian_nullity(laplacian(g, options.spectral_cap), options.exact_rank_limit);
    if (*report.laplacian_nullity != report.component_count) {
      throw std::logic_error(
          "component count and Laplacian nullity diverge: k=" +
          std::to_string(report.component_count) +
          " nullity=" + std::to_string(*report.laplacian_nullity));
    }
  }
  return report;
}

nlohmann::json report_json(const AnalysisReport& report) {
  nlohmann::json j;
  j["k"] = report.component_count;
  j["nullity"] = report.laplacian_nullity ? nlohmann::json(*report.laplacian_nullity)
                                          : nlohmann::json(nullptr);
  j["bipartite"] = report.bipartite;
  j["chi"] = report.chromatic_number ? nlohmann::json(*report.chromatic_number)
                                     : nlohmann::json(nullptr);
  j["isolated"] = report.isolated_count;
  auto components = nlohmann::json::array();
  for (const auto& c : report.components) {
    components.push_back({{"kind", to_string(c.kind)}, {"size", c.size()}});
  }
  j["components"] = std::move(components);
  return j;
}

}  // namespace tgraph
