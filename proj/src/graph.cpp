#include "tgraph/graph.hpp"

#include <algorithm>
#include <sstream>

#include "tgraph/metric.hpp"

namespace tgraph {

std::vector<Int> TGraph::degree_sequence() const {
  std::vector<Int> degrees;
  degrees.reserve(adjacency.size());
  for (const auto& neighbors : adjacency) {
    degrees.push_back(static_cast<Int>(neighbors.size()));
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

TGraph build_tgraph(const GeneratorBounds& bounds, Int t) {
  if (t < 1) {
    throw std::invalid_argument("build_tgraph: t must be >= 1");
  }
  TGraph g{bounds, t, {}, {}};
  const Int count = bounds.element_count();
  g.adjacency.assign(static_cast<std::size_t>(count), {});

  const Int diameter = (bounds.values().array() - 1).sum();
  if (t > diameter) return g;  // no pair can reach distance t

  const ElementTable table = bounds.enumerate_elements();
  const std::size_t k = static_cast<std::size_t>(bounds.generator_count());
  const Int* data = table.data();  // row-major
  for (Int u = 0; u < count; ++u) {
    const std::span<const Int> eu{data + u * static_cast<Int>(k), k};
    for (Int v = u + 1; v < count; ++v) {
      const std::span<const Int> ev{data + v * static_cast<Int>(k), k};
      if (d1_capped(eu, ev, t) == t) {
        g.edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        g.adjacency[static_cast<std::size_t>(u)].push_back(static_cast<Vertex>(v));
        g.adjacency[static_cast<std::size_t>(v)].push_back(static_cast<Vertex>(u));
      }
    }
  }
  return g;
}

Subgraph induced_subgraph(const TGraph& g, std::span<const Vertex> subset) {
  const Int count = g.vertex_count();
  std::vector<bool> selected(static_cast<std::size_t>(count), false);
  Subgraph sub;
  sub.vertices.assign(subset.begin(), subset.end());
  std::sort(sub.vertices.begin(), sub.vertices.end());
  sub.vertices.erase(std::unique(sub.vertices.begin(), sub.vertices.end()),
                     sub.vertices.end());
  for (Vertex v : sub.vertices) {
    if (v < 0 || v >= count) {
      throw std::invalid_argument("induced_subgraph: vertex index out of range");
    }
    selected[static_cast<std::size_t>(v)] = true;
  }
  for (const auto& [u, v] : g.edges) {
    if (selected[static_cast<std::size_t>(u)] && selected[static_cast<std::size_t>(v)]) {
      sub.edges.emplace_back(u, v);
    }
  }
  return sub;
}

std::string to_dot(const TGraph& g) {
  std::ostringstream out;
  out << "graph tgraph {\n";
  out << "  comment=\"bounds=" << graph_json(g)["bounds"].dump() << " t=" << g.t
      << "\";\n";
  const ElementTable table = g.bounds.enumerate_elements();
  for (Int v = 0; v < g.vertex_count(); ++v) {
    out << "  v" << v << " [label=\"" << word_of(table.row(v).transpose()) << "\"];\n";
  }
  for (const auto& [u, v] : g.edges) {
    out << "  v" << u << " -- v" << v << ";\n";
  }
  out << "}\n";
  return out.str();
}

nlohmann::json graph_json(const TGraph& g) {
  nlohmann::json j;
  j["bounds"] = std::vector<Int>(g.bounds.values().begin(), g.bounds.values().end());
  j["t"] = g.t;
  auto edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges) {
    edges.push_back({u, v});
  }
  j["edges"] = std::move(edges);
  return j;
}

}  // namespace tgraph
