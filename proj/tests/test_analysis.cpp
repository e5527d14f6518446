#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "tgraph/analysis.hpp"
#include "tgraph/metric.hpp"

using namespace tgraph;

namespace {

Exponents exps(std::initializer_list<Int> values) {
  Exponents e(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (Int v : values) e[i++] = v;
  return e;
}

bool is_edge(const TGraph& g, Vertex u, Vertex v) {
  const auto& neighbors = g.adjacency[static_cast<std::size_t>(u)];
  return std::find(neighbors.begin(), neighbors.end(), v) != neighbors.end();
}

}  // namespace

TEST_CASE("component blocks partition the vertices") {
  const TGraph g = build_tgraph(GeneratorBounds({8}), 3);
  const auto blocks = connected_components(g);
  CHECK(blocks.size() == 3);  // residue classes mod 3 inside 0..7

  std::set<Vertex> seen;
  Vertex previous_min = -1;
  for (const auto& block : blocks) {
    CHECK(std::is_sorted(block.begin(), block.end()));
    CHECK(block.front() > previous_min);
    previous_min = block.front();
    seen.insert(block.begin(), block.end());
  }
  CHECK(seen.size() == 8);

  CHECK(connected_components(build_tgraph(GeneratorBounds({2, 4}), 4)).size() == 6);

  const TGraph edgeless = build_tgraph(GeneratorBounds({2, 3}), 9);
  CHECK(connected_components(edgeless).size() == 6);  // one block per vertex
}

TEST_CASE("component counts match the brute-force oracle") {
  for (const oracle::Vec& bounds : {oracle::Vec{2, 6}, oracle::Vec{3, 5}, oracle::Vec{9}}) {
    Exponents b(static_cast<Eigen::Index>(bounds.size()));
    long long diameter = 0;
    for (std::size_t i = 0; i < bounds.size(); ++i) {
      b[static_cast<Eigen::Index>(i)] = bounds[i];
      diameter += bounds[i] - 1;
    }
    for (Int t = 1; t <= diameter + 1; ++t) {
      const TGraph g = build_tgraph(GeneratorBounds(b), t);
      CHECK(static_cast<int>(connected_components(g).size()) ==
            oracle::component_count(static_cast<int>(g.vertex_count()),
                                    oracle::edges_at(bounds, t)));
    }
  }
}

TEST_CASE("bipartite graphs come with a proper 2-coloring") {
  for (Int n : {2, 5, 12}) {
    const TGraph g = build_tgraph(GeneratorBounds({2, n}), 1);
    const BipartiteCheck check = is_bipartite(g);
    REQUIRE(check.bipartite);
    REQUIRE(check.coloring.size() == static_cast<std::size_t>(g.vertex_count()));
    for (const auto& [u, v] : g.edges) {
      CHECK(check.coloring[static_cast<std::size_t>(u)] !=
            check.coloring[static_cast<std::size_t>(v)]);
    }
  }
  CHECK(is_bipartite(build_tgraph(GeneratorBounds({4}), 7)).bipartite);
}

TEST_CASE("odd-cycle witnesses are closed, odd and edge-valid") {
  for (const auto& [bounds, t] :
       {std::pair<GeneratorBounds, Int>{GeneratorBounds({2, 7}), 4},
        {GeneratorBounds({3, 3}), 2}}) {
    const TGraph g = build_tgraph(bounds, t);
    const BipartiteCheck check = is_bipartite(g);
    REQUIRE_FALSE(check.bipartite);
    const auto& walk = check.odd_walk;
    REQUIRE(walk.size() >= 4);
    CHECK(walk.front() == walk.back());
    CHECK((walk.size() - 1) % 2 == 1);
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
      CHECK(is_edge(g, walk[i], walk[i + 1]));
    }
  }
}

TEST_CASE("chromatic numbers are exact") {
  CHECK(chromatic_number(build_tgraph(GeneratorBounds({2, 5}), 3)) == 2);
  CHECK(chromatic_number(build_tgraph(GeneratorBounds({2, 7}), 4)) == 3);
  CHECK(chromatic_number(build_tgraph(GeneratorBounds({3}), 9)) == 1);

  // brute force over every assignment on small families
  for (const oracle::Vec& bounds : {oracle::Vec{2, 4}, oracle::Vec{3, 3}, oracle::Vec{2, 2, 2}}) {
    Exponents b(static_cast<Eigen::Index>(bounds.size()));
    long long diameter = 0;
    for (std::size_t i = 0; i < bounds.size(); ++i) {
      b[static_cast<Eigen::Index>(i)] = bounds[i];
      diameter += bounds[i] - 1;
    }
    for (Int t = 1; t <= diameter; ++t) {
      const TGraph g = build_tgraph(GeneratorBounds(b), t);
      CHECK(chromatic_number(g) ==
            oracle::chromatic_brute(static_cast<int>(g.vertex_count()),
                                    oracle::edges_at(bounds, t)));
    }
  }
}

TEST_CASE("the chromatic component cap raises a size error") {
  CHECK_THROWS_AS(chromatic_number(build_tgraph(GeneratorBounds({2, 5}), 1), 4),
                  SizeLimitError);
}

TEST_CASE("three colors exactly when not bipartite with edges") {
  for (Int m = 2; m <= 3; ++m) {
    for (Int n = 2; n <= 6; ++n) {
      for (Int t = 1; t <= m + n - 2; ++t) {
        const TGraph g = build_tgraph(GeneratorBounds({m, n}), t);
        const Int chi = chromatic_number(g);
        const bool bipartite = is_bipartite(g).bipartite;
        CHECK((chi >= 3) == (!bipartite && g.edge_count() > 0));
        CHECK((chi <= 2) == bipartite);
      }
    }
  }
}

TEST_CASE("components classify by shape") {
  // brute-forced: distance 3 on (2,4) gives two 4-vertex paths
  const auto paths = classify_components(build_tgraph(GeneratorBounds({2, 4}), 3));
  REQUIRE(paths.size() == 2);
  for (const auto& c : paths) {
    CHECK(c.kind == ComponentKind::Path);
    CHECK(c.size() == 4);
  }

  const auto cycle = classify_components(build_tgraph(GeneratorBounds({2, 5}), 3));
  REQUIRE(cycle.size() == 1);
  CHECK(cycle[0].kind == ComponentKind::Cycle);
  CHECK(cycle[0].size() == 10);

  const auto mixed = classify_components(build_tgraph(GeneratorBounds({2, 4}), 4));
  Int path2 = 0;
  Int isolated = 0;
  for (const auto& c : mixed) {
    path2 += c.kind == ComponentKind::Path && c.size() == 2;
    isolated += c.kind == ComponentKind::Isolated;
  }
  CHECK(path2 == 2);
  CHECK(isolated == 4);

  // a grid-like block is neither path nor cycle
  const auto grid = classify_components(build_tgraph(GeneratorBounds({3, 4}), 1));
  REQUIRE(grid.size() == 1);
  CHECK(grid[0].kind == ComponentKind::Other);
}

TEST_CASE("component isomorphism") {
  const TGraph g24 = build_tgraph(GeneratorBounds({2, 4}), 2);
  const auto blocks24 = connected_components(g24);
  REQUIRE(blocks24.size() == 2);
  CHECK(components_isomorphic(g24, blocks24[0], blocks24[1]));

  // paths of different orders in the 3-graph of an 8-element cyclic family
  const TGraph g8 = build_tgraph(GeneratorBounds({8}), 3);
  const auto blocks8 = connected_components(g8);
  REQUIRE(blocks8.size() == 3);
  CHECK(components_isomorphic(g8, blocks8[0], blocks8[1]));   // both 3-vertex paths
  CHECK_FALSE(components_isomorphic(g8, blocks8[0], blocks8[2]));  // path(3) vs path(2)

  // two isolated vertices: blocks {1} and {2} of the distance-4 graph
  const TGraph g4 = build_tgraph(GeneratorBounds({2, 4}), 4);
  const auto blocks4 = connected_components(g4);
  REQUIRE(blocks4[1].size() == 1);
  REQUIRE(blocks4[2].size() == 1);
  CHECK(components_isomorphic(g4, blocks4[1], blocks4[2]));
  CHECK_FALSE(components_isomorphic(g4, blocks4[0], blocks4[1]));  // path(2) vs isolated

  // blocks that need the general matcher
  const TGraph g34 = build_tgraph(GeneratorBounds({3, 4}), 2);
  const auto blocks34 = connected_components(g34);
  REQUIRE(blocks34.size() == 2);
  CHECK(components_isomorphic(g34, blocks34[0], blocks34[1]));
  CHECK_THROWS_AS(components_isomorphic(g34, blocks34[0], blocks34[1], 4), SizeLimitError);
}

TEST_CASE("parity bipartition") {
  const TGraph g22 = build_tgraph(GeneratorBounds({2, 2}), 1);
  const auto [even22, odd22] = parity_bipartition(g22);
  CHECK(even22 == std::vector<Vertex>{0, 3});  // (0,0) and (1,1)
  CHECK(odd22 == std::vector<Vertex>{1, 2});

  const TGraph g24 = build_tgraph(GeneratorBounds({2, 4}), 1);
  const auto [even24, odd24] = parity_bipartition(g24);
  CHECK(even24.size() == 4);
  CHECK(odd24.size() == 4);

  CHECK_THROWS_AS(parity_bipartition(build_tgraph(GeneratorBounds({8}), 1)),
                  std::invalid_argument);

  // for even t every edge stays inside its parity class
  for (Int n = 2; n <= 7; ++n) {
    for (Int t = 2; t <= n; t += 2) {
      const TGraph g = build_tgraph(GeneratorBounds({3, n}), t);
      const auto [even, odd] = parity_bipartition(g);
      const std::set<Vertex> evens(even.begin(), even.end());
      for (const auto& [u, v] : g.edges) {
        CHECK(evens.count(u) == evens.count(v));
      }
    }
  }
}

TEST_CASE("the reflection involution is a self-inverse isometry") {
  const GeneratorBounds b29({2, 9});
  CHECK(involution_image(GeneratorBounds({2, 4}), exps({0, 3})) == exps({1, 3}));
  for (Int v = 0; v < b29.element_count(); ++v) {
    const Exponents x = b29.element_at(v);
    CHECK(involution_image(b29, involution_image(b29, x)) == x);
  }

  const GeneratorBounds b26({2, 6});
  const ElementTable table = b26.enumerate_elements();
  for (Int u = 0; u < b26.element_count(); ++u) {
    for (Int v = 0; v < b26.element_count(); ++v) {
      const Exponents fu = involution_image(b26, table.row(u).transpose());
      const Exponents fv = involution_image(b26, table.row(v).transpose());
      CHECK(d1(fu, fv) == d1(table.row(u).transpose(), table.row(v).transpose()));
    }
  }

  CHECK_THROWS_AS(involution_image(GeneratorBounds({3, 4}), exps({0, 0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(involution_image(GeneratorBounds({2, 4}), exps({0, 5})),
                  std::invalid_argument);
}

TEST_CASE("the involution preserves the edge relation") {
  for (Int n = 2; n <= 12; ++n) {
    const GeneratorBounds bounds({2, n});
    for (Int t = 1; t <= n; ++t) {
      const TGraph g = build_tgraph(bounds, t);
      for (const auto& [u, v] : g.edges) {
        const Vertex fu = static_cast<Vertex>(
            bounds.index_of(involution_image(bounds, bounds.element_at(u))));
        const Vertex fv = static_cast<Vertex>(
            bounds.index_of(involution_image(bounds, bounds.element_at(v))));
        CHECK(is_edge(g, fu, fv));
      }
    }
  }
}

TEST_CASE("analysis reports are consistent and serializable") {
  const AnalysisReport r44 = analyze(build_tgraph(GeneratorBounds({2, 4}), 4));
  CHECK(r44.component_count == 6);
  CHECK(r44.isolated_count == 4);
  REQUIRE(r44.laplacian_nullity.has_value());
  CHECK(*r44.laplacian_nullity == 6);
  CHECK(r44.bipartite);

  const AnalysisReport r53 = analyze(build_tgraph(GeneratorBounds({2, 5}), 3));
  CHECK(r53.component_count == 1);
  REQUIRE(r53.chromatic_number.has_value());
  CHECK(*r53.chromatic_number == 2);
  REQUIRE(r53.components.size() == 1);
  CHECK(r53.components[0].kind == ComponentKind::Cycle);

  const nlohmann::json j = report_json(r53);
  CHECK(j["k"] == 1);
  CHECK(j["chi"] == 2);
  CHECK(j["bipartite"] == true);
  CHECK(j["isolated"] == 0);
  CHECK(j["components"][0]["kind"] == "cycle");
  CHECK(j["components"][0]["size"] == 10);
}
