#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tgraph/presentation.hpp"

namespace tgraph {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;  // always u < v

// Graph on all elements of a bounds family, with an edge exactly between
// pairs at taxicab distance t. Vertex v carries the v-th element in
// lexicographic order. Immutable after build_tgraph returns.
struct TGraph {
  GeneratorBounds bounds;
  Int t = 1;
  std::vector<Edge> edges;                     // sorted lexicographically
  std::vector<std::vector<Vertex>> adjacency;  // per vertex, ascending

  Int vertex_count() const { return bounds.element_count(); }
  Int edge_count() const { return static_cast<Int>(edges.size()); }
  Int degree(Vertex v) const { return static_cast<Int>(adjacency[v].size()); }
  std::vector<Int> degree_sequence() const;  // ascending, sums to 2|E|
};

// Pairwise construction over all element pairs; t = 0 is rejected (the
// graphs are loopless), values beyond the diameter give an edgeless graph.
TGraph build_tgraph(const GeneratorBounds& bounds, Int t);

// Edges of g with both endpoints inside the subset, in original vertex ids.
struct Subgraph {
  std::vector<Vertex> vertices;  // ascending
  std::vector<Edge> edges;       // sorted
};

Subgraph induced_subgraph(const TGraph& g, std::span<const Vertex> subset);

// DOT text with vertices labeled by their normal-form word and a graph
// comment attribute recording bounds and t.
std::string to_dot(const TGraph& g);

// {"bounds":[...],"t":...,"edges":[[u,v],...]} with sorted edges.
nlohmann::json graph_json(const TGraph& g);

}  // namespace tgraph
