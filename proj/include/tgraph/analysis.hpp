#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tgraph/graph.hpp"
#include "tgraph/laplacian.hpp"

namespace tgraph {

// Blocks of mutually reachable vertices, ordered by smallest member;
// members ascending within each block.
std::vector<std::vector<Vertex>> connected_components(const TGraph& g);

struct BipartiteCheck {
  bool bipartite = true;
  std::vector<std::int8_t> coloring;  // proper 2-coloring when bipartite
  std::vector<Vertex> odd_walk;  // closed odd walk (first == last) otherwise
};

BipartiteCheck is_bipartite(const TGraph& g);

inline constexpr Int kDefaultChromaticCap = 64;

// Exact chromatic number by per-component backtracking with a clique lower
// bound. 0 on the empty graph, 1 if edgeless, 2 iff bipartite with an edge.
// Components larger than component_cap raise SizeLimitError; callers can
// fall back to is_bipartite.
Int chromatic_number(const TGraph& g, Int component_cap = kDefaultChromaticCap);

enum class ComponentKind { Isolated, Path, Cycle, Other };

std::string_view to_string(ComponentKind kind);

struct ComponentClassification {
  ComponentKind kind = ComponentKind::Other;
  std::vector<Vertex> vertices;  // ascending

  Int size() const { return static_cast<Int>(vertices.size()); }
};

// One classification per connected component, by degree profile:
// a single vertex is Isolated, two degree-1 ends with degree-2 interior is
// a Path, 2-regular is a Cycle, anything else Other.
std::vector<ComponentClassification> classify_components(const TGraph& g);

inline constexpr Int kDefaultIsomorphismCap = 32;

// Induced-subgraph isomorphism between two vertex blocks. Paths, cycles and
// isolated vertices compare by shape; other blocks go through a refinement
// plus backtracking matcher, capped at max_vertices per block.
bool components_isomorphic(const TGraph& g, std::span<const Vertex> a,
                           std::span<const Vertex> b,
                           Int max_vertices = kDefaultIsomorphismCap);

// Splits a 2-generator vertex set by parity of i+j. For even t no edge
// crosses the two classes.
std::pair<std::vector<Vertex>, std::vector<Vertex>> parity_bipartition(
    const TGraph& g);

// The reflection (i, j) -> (1-i, j); a self-inverse taxicab isometry on
// 2-generator bounds with first bound 2.
Exponents involution_image(const GeneratorBounds& bounds, const Exponents& x);

struct AnalysisOptions {
  Int spectral_cap = kDefaultSpectralCap;     // skip nullity above this order
  Int exact_rank_limit = kDefaultExactRankLimit;
  Int chromatic_cap = kDefaultChromaticCap;   // skip chi above this component size
};

struct AnalysisReport {
  Int component_count = 0;
  std::vector<ComponentClassification> components;
  Int isolated_count = 0;
  bool bipartite = true;
  std::optional<Int> chromatic_number;   // absent above the component cap
  std::optional<Int> laplacian_nullity;  // absent above the spectral cap
};

// Full structural analysis. When the nullity is computed it is cross-checked
// against the component count and any divergence throws; that check is the
// oracle the rest of the suite leans on.
AnalysisReport analyze(const TGraph& g, const AnalysisOptions& options = {});

nlohmann::json report_json(const AnalysisReport& report);

}  // namespace tgraph
