#include "tgraph/harness.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "tgraph/fixtures.hpp"
#include "tgraph/metric.hpp"

namespace tgraph {

namespace {

// Runs fn(0..count-1), each returning a batch of instances, across the
// requested number of threads. Results land at their task index, so the
// flattened output does not depend on the worker count.
template <typename Fn>
std::vector<ClaimInstance> run_tasks(std::size_t count, Fn&& fn, int workers) {
  std::vector<std::vector<ClaimInstance>> results(count);
  if (count > 0) {
    const unsigned hardware = std::thread::hardware_concurrency();
    std::size_t n_workers =
        workers > 0 ? static_cast<std::size_t>(workers) : (hardware ? hardware : 1);
    n_workers = std::min(n_workers, count);
    if (n_workers <= 1) {
      for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
    } else {
      std::atomic<std::size_t> next{0};
      std::exception_ptr error;
      std::mutex error_mutex;
      std::vector<std::thread> pool;
      pool.reserve(n_workers);
      for (std::size_t w = 0; w < n_workers; ++w) {
        pool.emplace_back([&] {
          while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
              results[i] = fn(i);
            } catch (...) {
              const std::scoped_lock lock(error_mutex);
              if (!error) error = std::current_exception();
              return;
            }
          }
        });
      }
      for (auto& thread : pool) thread.join();
      if (error) std::rethrow_exception(error);
    }
  }
  std::vector<ClaimInstance> flat;
  for (auto& batch : results) {
    flat.insert(flat.end(), std::make_move_iterator(batch.begin()),
                std::make_move_iterator(batch.end()));
  }
  return flat;
}

// Union-find count, cross-checked against the Laplacian nullity whenever the
// order is within the spectral cap. Divergence here means the suite itself
// is broken, so it throws instead of reporting.
Int certified_components(const TGraph& g, Int exact_limit) {
  const Int k = static_cast<Int>(connected_components(g).size());
  if (g.vertex_count() <= kDefaultSpectralCap) {
    const Int nullity =
        static_cast<Int>(laplacian_nullity(laplacian(g), exact_limit));
    if (nullity != k) {
      throw std::logic_error("component count " + std::to_string(k) +
                             " != Laplacian nullity " + std::to_string(nullity) +
                             " on bounds " + nlohmann::json(std::vector<Int>(
                                                 g.bounds.values().begin(),
                                                 g.bounds.values().end()))
                                                 .dump() +
                             " t=" + std::to_string(g.t));
    }
  }
  return k;
}

std::vector<ComponentShape> normalize_shapes(std::vector<ComponentShape> shapes) {
  std::map<std::pair<int, Int>, Int> counts;
  for (const auto& s : shapes) {
    counts[{static_cast<int>(s.kind), s.size}] += s.count;
  }
  std::vector<ComponentShape> out;
  for (const auto& [key, count] : counts) {
    out.push_back({static_cast<ComponentKind>(key.first), key.second, count});
  }
  return out;
}

std::vector<ComponentShape> shape_summary(
    const std::vector<ComponentClassification>& components) {
  std::vector<ComponentShape> shapes;
  for (const auto& c : components) shapes.push_back({c.kind, c.size(), 1});
  return normalize_shapes(std::move(shapes));
}

std::string render_shapes(std::span<const ComponentShape> shapes) {
  std::string out;
  for (const auto& s : shapes) {
    if (!out.empty()) out += '+';
    out += std::string(to_string(s.kind)) + "(" + std::to_string(s.size) + ")x" +
           std::to_string(s.count);
  }
  return out.empty() ? "none" : out;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ';';
    out += p;
  }
  return out;
}

std::optional<Int> observed_chi(const TGraph& g,
                                const std::vector<ComponentClassification>& classes) {
  Int largest = 0;
  for (const auto& c : classes) largest = std::max(largest, c.size());
  if (largest <= kDefaultChromaticCap) return chromatic_number(g);
  const BipartiteCheck check = is_bipartite(g);
  if (check.bipartite) {
    return g.edge_count() > 0 ? 2 : (g.vertex_count() > 0 ? 1 : 0);
  }
  return std::nullopt;  // non-bipartite and beyond the exact search cap
}

Int isolated_vertex_count(const TGraph& g) {
  Int count = 0;
  for (const auto& neighbors : g.adjacency) count += neighbors.empty();
  return count;
}

// Evaluates every field the prediction mentions against the built graph.
ClaimInstance compare_prediction(const Prediction& pred, const TGraph& g,
                                 const SweepOptions& options) {
  ClaimInstance inst;
  inst.claim_id = pred.claim_id;
  inst.bounds = pred.bounds;
  inst.t = pred.t;
  if (!pred.applicable) {
    inst.predicted = "n/a: " + pred.reason;
    inst.status = ClaimStatus::NotApplicable;
    return inst;
  }

  std::vector<std::string> predicted;
  std::vector<std::string> observed;
  bool match = true;

  const Int k = certified_components(g, options.nullity_exact_limit);
  std::optional<std::vector<ComponentClassification>> classes;
  const auto classified = [&]() -> const std::vector<ComponentClassification>& {
    if (!classes) classes = classify_components(g);
    return *classes;
  };

  if (pred.component_count) {
    predicted.push_back("k=" + std::to_string(*pred.component_count));
    observed.push_back("k=" + std::to_string(k));
    match &= k == *pred.component_count;
  }
  if (pred.edge_count) {
    predicted.push_back("edges=" + std::to_string(*pred.edge_count));
    observed.push_back("edges=" + std::to_string(g.edge_count()));
    match &= g.edge_count() == *pred.edge_count;
  }
  if (pred.chromatic_number) {
    predicted.push_back("chi=" + std::to_string(*pred.chromatic_number));
    const std::optional<Int> chi = observed_chi(g, classified());
    observed.push_back("chi=" + (chi ? std::to_string(*chi) : std::string("unknown")));
    match &= chi && *chi == *pred.chromatic_number;
  }
  if (pred.isolated_free) {
    const Int isolated = isolated_vertex_count(g);
    predicted.push_back(std::string("isolated_free=") +
                        (*pred.isolated_free ? "true" : "false"));
    observed.push_back(std::string("isolated_free=") +
                       (isolated == 0 ? "true" : "false") + "(" +
                       std::to_string(isolated) + ")");
    match &= (isolated == 0) == *pred.isolated_free;
  }
  if (!pred.structure.empty()) {
    const auto expected = normalize_shapes(pred.structure);
    const auto actual = shape_summary(classified());
    predicted.push_back("shapes=" + render_shapes(expected));
    observed.push_back("shapes=" + render_shapes(actual));
    match &= expected == actual;
  }
  if (pred.isomorphic_components) {
    predicted.push_back("isomorphic=true");
    std::vector<const ComponentClassification*> non_isolated;
    for (const auto& c : classified()) {
      if (c.kind != ComponentKind::Isolated) non_isolated.push_back(&c);
    }
    if (non_isolated.size() != 2) {
      observed.push_back("isomorphic=n/a(" + std::to_string(non_isolated.size()) +
                         " non-isolated components)");
      match = false;
    } else {
      try {
        const bool iso = components_isomorphic(g, non_isolated[0]->vertices,
                                               non_isolated[1]->vertices);
        observed.push_back(std::string("isomorphic=") + (iso ? "true" : "false"));
        match &= iso;
      } catch (const SizeLimitError&) {
        predicted.pop_back();  // beyond the matcher cap: drop the field
      }
    }
  }

  inst.predicted = join(predicted);
  inst.observed = join(observed);
  inst.status = match ? ClaimStatus::Match : ClaimStatus::Mismatch;
  return inst;
}

std::string bounds_text(const std::vector<Int>& bounds) {
  std::string out;
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    if (i > 0) out += 'x';
    out += std::to_string(bounds[i]);
  }
  return out;
}

// ---- the named sweeps ----

std::vector<ClaimInstance> sweep_t2(const SweepOptions& options) {
  std::vector<std::pair<Int, Int>> points;
  for (Int m = 2; m <= options.max; ++m) {
    for (Int n = 2; n <= options.max; ++n) points.emplace_back(m, n);
  }
  return run_tasks(
      points.size(),
      [&](std::size_t i) {
        const auto [m, n] = points[i];
        std::vector<ClaimInstance> batch;
        for (Int t = 1; t <= threshold_general(m, n); ++t) {
          const TGraph g = build_tgraph(GeneratorBounds({m, n}), t);
          batch.push_back(compare_prediction(predict_components_2gen(m, n, t), g, options));
        }
        return batch;
      },
      options.workers);
}

std::vector<ClaimInstance> sweep_t3_edges(const SweepOptions& options) {
  return run_tasks(
      static_cast<std::size_t>(options.n_max - 1),
      [&](std::size_t i) {
        const Int n = static_cast<Int>(i) + 2;
        std::vector<ClaimInstance> batch;
        for (Int t = 1; t <= n; ++t) {
          const TGraph g = build_tgraph(GeneratorBounds({2, n}), t);
          batch.push_back(compare_prediction(predict_edges_dihedral(n, t), g, options));
        }
        return batch;
      },
      options.workers);
}

std::vector<ClaimInstance> sweep_t5(const SweepOptions& options) {
  return run_tasks(
      static_cast<std::size_t>(options.n_max - 1),
      [&](std::size_t i) {
        const Int n = static_cast<Int>(i) + 2;
        std::vector<ClaimInstance> batch;
        for (Int t = 1; t <= n; ++t) {
          const TGraph g = build_tgraph(GeneratorBounds({2, n}), t);
          batch.push_back(
              compare_prediction(predict_components_dihedral(n, t), g, options));
        }
        return batch;
      },
      options.workers);
}

std::vector<ClaimInstance> sweep_corollary(const SweepOptions& options,
                                           std::string_view claim_prefix) {
  return run_tasks(
      static_cast<std::size_t>(options.n_max - 1),
      [&](std::size_t i) {
        const Int n = static_cast<Int>(i) + 2;
        std::vector<ClaimInstance> batch;
        for (Int t = 1; t <= n; ++t) {
          std::vector<Prediction> claims;
          for (auto& p : predict_structure_corollaries(n, t)) {
            if (p.claim_id.starts_with(claim_prefix)) claims.push_back(std::move(p));
          }
          if (claims.empty()) continue;
          const TGraph g = build_tgraph(GeneratorBounds({2, n}), t);
          for (const auto& p : claims) {
            batch.push_back(compare_prediction(p, g, options));
          }
        }
        return batch;
      },
      options.workers);
}

ClaimInstance bipartite_instance(std::string claim_id, const GeneratorBounds& bounds,
                                 Int t, const SweepOptions& options) {
  const TGraph g = build_tgraph(bounds, t);
  certified_components(g, options.nullity_exact_limit);
  const BipartiteCheck check = is_bipartite(g);
  ClaimInstance inst;
  inst.claim_id = std::move(claim_id);
  inst.bounds.assign(bounds.values().begin(), bounds.values().end());
  inst.t = t;
  inst.predicted = "bipartite=true";
  inst.observed = std::string("bipartite=") + (check.bipartite ? "true" : "false");
  inst.status = check.bipartite ? ClaimStatus::Match : ClaimStatus::Mismatch;
  return inst;
}

std::vector<ClaimInstance> sweep_e2(const SweepOptions& options) {
  return run_tasks(
      static_cast<std::size_t>(options.n_max - 1),
      [&](std::size_t i) {
        const Int n = static_cast<Int>(i) + 2;
        return std::vector<ClaimInstance>{
            bipartite_instance("E2", GeneratorBounds({2, n}), 1, options)};
      },
      options.workers);
}

std::vector<ClaimInstance> sweep_t6(const SweepOptions& options) {
  std::vector<std::pair<Int, Int>> points;
  for (Int m = 2; m <= options.max; ++m) {
    for (Int n = 2; n <= options.max; ++n) points.emplace_back(m, n);
  }
  return run_tasks(
      points.size(),
      [&](std::size_t i) {
        const auto [m, n] = points[i];
        std::vector<ClaimInstance> batch;
        for (Int t = 1; t <= threshold_general(m, n); t += 2) {
          batch.push_back(bipartite_instance("T6", GeneratorBounds({m, n}), t, options));
        }
        return batch;
      },
      options.workers);
}

std::vector<ClaimInstance> sweep_cyclic(const SweepOptions& options) {
  return run_tasks(
      static_cast<std::size_t>(options.max - 1),
      [&](std::size_t i) {
        const Int m = static_cast<Int>(i) + 2;
        std::vector<ClaimInstance> batch;
        for (Int t = 1; t <= m + 2; ++t) {
          const TGraph g = build_tgraph(GeneratorBounds(Exponents::Constant(1, m)), t);
          batch.push_back(compare_prediction(predict_components_cyclic(m, t), g, options));
        }
        return batch;
      },
      options.workers);
}

std::vector<ClaimInstance> sweep_subgroup(const SweepOptions& options) {
  return run_tasks(
      static_cast<std::size_t>(options.max - 1),
      [&](std::size_t i) {
        const Int m = static_cast<Int>(i) + 2;
        std::vector<ClaimInstance> batch;
        for (Int t = 1; t <= m; ++t) {
          if (m % t != 0) continue;
          const TGraph g = build_tgraph(GeneratorBounds(Exponents::Constant(1, m)), t);
          certified_components(g, options.nullity_exact_limit);
          std::vector<Vertex> expected;
          for (Int v = 0; v < m; v += t) expected.push_back(static_cast<Vertex>(v));
          const auto blocks = connected_components(g);
          std::vector<Vertex> actual;
          for (const auto& block : blocks) {
            if (std::find(block.begin(), block.end(), 0) != block.end()) {
              actual = block;
              break;
            }
          }
          ClaimInstance inst;
          inst.claim_id = "C-subgroup";
          inst.bounds = {m};
          inst.t = t;
          inst.predicted = "component_of_identity=multiples_of_t(size " +
                           std::to_string(m / t) + ")";
          inst.observed = "size " + std::to_string(actual.size()) +
                          (actual == expected ? " equal" : " different");
          inst.status =
              actual == expected ? ClaimStatus::Match : ClaimStatus::Mismatch;
          batch.push_back(std::move(inst));
        }
        return batch;
      },
      options.workers);
}

std::vector<ClaimInstance> sweep_isolated_lemma(const SweepOptions& options) {
  std::vector<std::pair<Int, Int>> points;
  for (Int m = 2; m <= options.max; ++m) {
    for (Int n = 2; n <= options.max; ++n) points.emplace_back(m, n);
  }
  return run_tasks(
      points.size(),
      [&](std::size_t i) {
        const auto [m, n] = points[i];
        std::vector<ClaimInstance> batch;
        for (Int t = 1; t <= m + n - 2; ++t) {
          const TGraph g = build_tgraph(GeneratorBounds({m, n}), t);
          batch.push_back(compare_prediction(predict_isolated_free(m, n, t), g, options));
        }
        return batch;
      },
      options.workers);
}

// independently built grid adjacency: one unit step along one coordinate
std::vector<Edge> grid_edges(const GeneratorBounds& bounds) {
  std::vector<Edge> edges;
  const Int count = bounds.element_count();
  for (Int v = 0; v < count; ++v) {
    const Exponents e = bounds.element_at(v);
    for (Eigen::Index axis = 0; axis < bounds.generator_count(); ++axis) {
      if (e[axis] + 1 < bounds[axis]) {
        Exponents f = e;
        ++f[axis];
        const Int w = bounds.index_of(f);
        edges.emplace_back(static_cast<Vertex>(std::min(v, w)),
                           static_cast<Vertex>(std::max(v, w)));
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::vector<ClaimInstance> sweep_grid(const SweepOptions& options) {
  std::vector<std::vector<Int>> all_bounds;
  std::vector<Int> current;
  const std::function<void()> extend = [&] {
    if (!current.empty()) all_bounds.push_back(current);
    if (current.size() == 4) return;
    for (Int e = 2; e <= 4; ++e) {
      current.push_back(e);
      extend();
      current.pop_back();
    }
  };
  extend();
  return run_tasks(
      all_bounds.size(),
      [&](std::size_t i) {
        Exponents b(static_cast<Eigen::Index>(all_bounds[i].size()));
        for (std::size_t j = 0; j < all_bounds[i].size(); ++j) {
          b[static_cast<Eigen::Index>(j)] = all_bounds[i][j];
        }
        const GeneratorBounds bounds(std::move(b));
        const TGraph g = build_tgraph(bounds, 1);
        certified_components(g, options.nullity_exact_limit);
        const std::vector<Edge> expected = grid_edges(bounds);
        ClaimInstance inst;
        inst.claim_id = "C-grid";
        inst.bounds = all_bounds[i];
        inst.t = 1;
        inst.predicted = "edges=grid(" + std::to_string(expected.size()) + ")";
        inst.observed = "edges=" + std::to_string(g.edges.size()) +
                        (g.edges == expected ? " equal" : " different");
        inst.status =
            g.edges == expected ? ClaimStatus::Match : ClaimStatus::Mismatch;
        return std::vector<ClaimInstance>{std::move(inst)};
      },
      options.workers);
}

std::vector<ClaimInstance> sweep_shared_writing(const SweepOptions& options) {
  return run_tasks(
      4,
      [&](std::size_t i) {
        const Int t = static_cast<Int>(i) + 1;
        const TGraph dihedral = build_tgraph(bounds_of(NamedGroup::dihedral(4)), t);
        const TGraph quaternion = build_tgraph(bounds_of(NamedGroup::q8()), t);
        const TGraph abelian = build_tgraph(bounds_of(NamedGroup::product({2, 4})), t);
        certified_components(dihedral, options.nullity_exact_limit);
        const bool equal = dihedral.edges == quaternion.edges &&
                           quaternion.edges == abelian.edges;
        ClaimInstance inst;
        inst.claim_id = "C-shared-writing";
        inst.bounds = {2, 4};
        inst.t = t;
        inst.predicted = "identical_edge_sets=true";
        inst.observed = std::string("identical_edge_sets=") + (equal ? "true" : "false");
        inst.status = equal ? ClaimStatus::Match : ClaimStatus::Mismatch;
        return std::vector<ClaimInstance>{std::move(inst)};
      },
      options.workers);
}

}  // namespace

std::string_view to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::Match: return "MATCH";
    case ClaimStatus::Mismatch: return "MISMATCH";
    case ClaimStatus::NotApplicable: return "NOT_APPLICABLE";
  }
  return "MISMATCH";
}

Int SweepResult::matches() const {
  return static_cast<Int>(std::count_if(instances.begin(), instances.end(), [](const auto& i) {
    return i.status == ClaimStatus::Match;
  }));
}

Int SweepResult::mismatches() const {
  return static_cast<Int>(std::count_if(instances.begin(), instances.end(), [](const auto& i) {
    return i.status == ClaimStatus::Mismatch;
  }));
}

Int SweepResult::not_applicable() const {
  return static_cast<Int>(std::count_if(instances.begin(), instances.end(), [](const auto& i) {
    return i.status == ClaimStatus::NotApplicable;
  }));
}

bool SweepResult::all_match() const { return mismatches() == 0; }

std::vector<ClaimInstance> reproduce_distance_table() {
  const auto& fixture = fixtures::distance_table();
  std::vector<ClaimInstance> instances;
  for (int row = 0; row < 8; ++row) {
    for (int col = 0; col < 8; ++col) {
      Exponents x(2), y(2);
      x << fixtures::kDistanceTableOrder[static_cast<std::size_t>(row)][0],
          fixtures::kDistanceTableOrder[static_cast<std::size_t>(row)][1];
      y << fixtures::kDistanceTableOrder[static_cast<std::size_t>(col)][0],
          fixtures::kDistanceTableOrder[static_cast<std::size_t>(col)][1];
      const Int computed = d1(x, y);
      const Int published = fixture.cells[static_cast<std::size_t>(row)]
                                         [static_cast<std::size_t>(col)];
      ClaimInstance inst;
      inst.claim_id = "T1.cell";
      inst.bounds = {2, 4};
      const std::string cell =
          std::string("d(") + fixtures::kDistanceTableLabels[static_cast<std::size_t>(row)] +
          "," + fixtures::kDistanceTableLabels[static_cast<std::size_t>(col)] + ")";
      inst.predicted = cell + "=" + std::to_string(published);
      inst.observed = cell + "=" + std::to_string(computed);
      inst.status =
          computed == published ? ClaimStatus::Match : ClaimStatus::Mismatch;
      instances.push_back(std::move(inst));
    }
  }
  return instances;
}

SweepResult reproduce_component_table(Int m, Int n_max, const SweepOptions& options) {
  const auto& fixture = fixtures::component_table(m);
  n_max = std::min<Int>(n_max, static_cast<Int>(fixture.cells.size()) + 1);
  SweepResult result;
  result.sweep_id = m == 2 ? "tables-m2" : "tables-m3";
  result.instances = run_tasks(
      static_cast<std::size_t>(n_max - 1),
      [&](std::size_t i) {
        const Int n = static_cast<Int>(i) + 2;
        const auto& row = fixture.cells[i];
        std::vector<ClaimInstance> batch;
        for (std::size_t col = 0; col < row.size(); ++col) {
          const Int t = static_cast<Int>(col) + 1;
          const TGraph g = build_tgraph(GeneratorBounds({m, n}), t);
          const Int k = certified_components(g, options.nullity_exact_limit);
          ClaimInstance inst;
          inst.claim_id = m == 2 ? "T2-table.cell" : "T3-table.cell";
          inst.bounds = {m, n};
          inst.t = t;
          inst.predicted = "k=" + std::to_string(row[col]);
          inst.observed = "k=" + std::to_string(k);
          inst.status = k == row[col] ? ClaimStatus::Match : ClaimStatus::Mismatch;
          batch.push_back(std::move(inst));
        }
        return batch;
      },
      options.workers);
  return result;
}

std::vector<std::string> known_sweeps() {
  return {"t1-table",     "tables-m2",  "tables-m3",          "t2",
          "t3-edges",     "t5",         "e2-bipartite",       "t6-bipartite",
          "t7",           "paths",      "ngraph",             "2chromatic",
          "cyclic-k",     "subgroup-component",               "grid-1graph",
          "shared-writing", "isolated-lemma"};
}

bool sweep_is_pinned(std::string_view sweep_id) {
  return sweep_id != "isolated-lemma";
}

SweepResult verify_claim_sweep(std::string_view sweep_id, const SweepOptions& options) {
  SweepResult result;
  result.sweep_id = std::string(sweep_id);
  if (sweep_id == "t1-table") {
    result.instances = reproduce_distance_table();
  } else if (sweep_id == "tables-m2") {
    return reproduce_component_table(2, std::min<Int>(options.n_max, 20), options);
  } else if (sweep_id == "tables-m3") {
    return reproduce_component_table(3, std::min<Int>(options.n_max, 20), options);
  } else if (sweep_id == "t2") {
    result.instances = sweep_t2(options);
  } else if (sweep_id == "t3-edges") {
    result.instances = sweep_t3_edges(options);
  } else if (sweep_id == "t5") {
    result.instances = sweep_t5(options);
  } else if (sweep_id == "e2-bipartite") {
    result.instances = sweep_e2(options);
  } else if (sweep_id == "t6-bipartite") {
    result.instances = sweep_t6(options);
  } else if (sweep_id == "t7") {
    result.instances = sweep_corollary(options, "C-T7.");
  } else if (sweep_id == "paths") {
    result.instances = sweep_corollary(options, "C-paths");
  } else if (sweep_id == "ngraph") {
    result.instances = sweep_corollary(options, "C-ngraph");
  } else if (sweep_id == "2chromatic") {
    result.instances = sweep_corollary(options, "C-2chromatic");
  } else if (sweep_id == "cyclic-k") {
    result.instances = sweep_cyclic(options);
  } else if (sweep_id == "subgroup-component") {
    result.instances = sweep_subgroup(options);
  } else if (sweep_id == "grid-1graph") {
    result.instances = sweep_grid(options);
  } else if (sweep_id == "shared-writing") {
    result.instances = sweep_shared_writing(options);
  } else if (sweep_id == "isolated-lemma") {
    result.instances = sweep_isolated_lemma(options);
  } else {
    throw std::invalid_argument("unknown sweep: '" + std::string(sweep_id) + "'");
  }
  return result;
}

ConjectureReport conjecture_scan(int id, const SweepOptions& options,
                                 const std::string& artifact_dir) {
  ConjectureReport report;
  report.conjecture_id = id;
  const auto write_artifact = [&](const std::string& name, const std::string& body) {
    std::filesystem::create_directories(artifact_dir);
    const std::filesystem::path path = std::filesystem::path(artifact_dir) / name;
    std::ofstream out(path);
    out << body;
    report.artifact_path = path.string();
  };

  if (id == 1) {
    report.ranges = "even m in 2.." + std::to_string(options.m_max) + ", n in 2.." +
                    std::to_string(options.n_max) + ", even t <= ceil((m+n-2)/2)";
    std::vector<std::pair<Int, Int>> points;
    for (Int m = 2; m <= options.m_max; m += 2) {
      for (Int n = 2; n <= options.n_max; ++n) points.emplace_back(m, n);
    }
    report.instances = run_tasks(
        points.size(),
        [&](std::size_t i) {
          const auto [m, n] = points[i];
          std::vector<ClaimInstance> batch;
          for (Int t = 2; t <= threshold_general(m, n); t += 2) {
            const TGraph g = build_tgraph(GeneratorBounds({m, n}), t);
            const Int k = certified_components(g, options.nullity_exact_limit);
            ClaimInstance inst;
            inst.claim_id = "C1.isomorphic";
            inst.bounds = {m, n};
            inst.t = t;
            inst.predicted = "k=2;isomorphic=true";
            if (k != 2) {
              inst.observed = "k=" + std::to_string(k);
              inst.status = ClaimStatus::Mismatch;
            } else {
              const auto blocks = connected_components(g);
              const bool iso = components_isomorphic(g, blocks[0], blocks[1], 512);
              inst.observed =
                  std::string("k=2;isomorphic=") + (iso ? "true" : "false");
              inst.status = iso ? ClaimStatus::Match : ClaimStatus::Mismatch;
            }
            batch.push_back(std::move(inst));
          }
          return batch;
        },
        options.workers);
  } else if (id == 2) {
    report.exploratory = true;
    report.ranges = "m, n in 2.." + std::to_string(options.max) +
                    ", t in threshold+1..m+n-2";
    std::vector<std::pair<Int, Int>> points;
    for (Int m = 2; m <= options.max; ++m) {
      for (Int n = 2; n <= options.max; ++n) points.emplace_back(m, n);
    }
    report.instances = run_tasks(
        points.size(),
        [&](std::size_t i) {
          const auto [m, n] = points[i];
          std::vector<ClaimInstance> batch;
          for (Int t = threshold_general(m, n) + 1; t <= m + n - 2; ++t) {
            const TGraph g = build_tgraph(GeneratorBounds({m, n}), t);
            const Int k = certified_components(g, options.nullity_exact_limit);
            ClaimInstance inst;
            inst.claim_id = "C2.scan";
            inst.bounds = {m, n};
            inst.t = t;
            inst.predicted = "exploratory";
            inst.observed = "k=" + std::to_string(k);
            inst.status = ClaimStatus::NotApplicable;  // no predicate to test
            batch.push_back(std::move(inst));
          }
          return batch;
        },
        options.workers);
    std::string csv = "m,n,t,k\n";
    for (const auto& inst : report.instances) {
      csv += std::to_string(inst.bounds[0]) + "," + std::to_string(inst.bounds[1]) +
             "," + std::to_string(inst.t) + "," + inst.observed.substr(2) + "\n";
    }
    write_artifact("conjecture2_components.csv", csv);
  } else if (id == 3) {
    report.ranges =
        "n in 2.." + std::to_string(options.n_max) + ", even t <= ceil(n/2)";
    report.instances = run_tasks(
        static_cast<std::size_t>(options.n_max - 1),
        [&](std::size_t i) {
          const Int n = static_cast<Int>(i) + 2;
          std::vector<ClaimInstance> batch;
          for (Int t = 2; t <= threshold_dihedral(n); t += 2) {
            const TGraph g = build_tgraph(GeneratorBounds({2, n}), t);
            certified_components(g, options.nullity_exact_limit);
            const Int chi = chromatic_number(g, std::max<Int>(kDefaultChromaticCap, n));
            ClaimInstance inst;
            inst.claim_id = "C3.chromatic";
            inst.bounds = {2, n};
            inst.t = t;
            inst.predicted = "chi=3";
            inst.observed = "chi=" + std::to_string(chi);
            inst.status = chi == 3 ? ClaimStatus::Match : ClaimStatus::Mismatch;
            batch.push_back(std::move(inst));
          }
          return batch;
        },
        options.workers);
  } else if (id == 4) {
    report.exploratory = true;
    report.ranges = "bounds (e1,e2,e3) with 2 <= e_i <= 4, t <= ceil(sum(e_i-1)/2)";
    std::vector<std::array<Int, 3>> points;
    for (Int e1 = 2; e1 <= 4; ++e1) {
      for (Int e2 = 2; e2 <= 4; ++e2) {
        for (Int e3 = 2; e3 <= 4; ++e3) points.push_back({e1, e2, e3});
      }
    }
    report.instances = run_tasks(
        points.size(),
        [&](std::size_t i) {
          const auto [e1, e2, e3] = points[i];
          std::vector<ClaimInstance> batch;
          const Int threshold = (e1 + e2 + e3 - 3 + 1) / 2;
          for (Int t = 1; t <= threshold; ++t) {
            const TGraph g = build_tgraph(GeneratorBounds({e1, e2, e3}), t);
            const Int k = certified_components(g, options.nullity_exact_limit);
            const Int expected = t % 2 == 0 ? 2 : 1;
            ClaimInstance inst;
            inst.claim_id = "C4.parity";
            inst.bounds = {e1, e2, e3};
            inst.t = t;
            inst.predicted = "k=" + std::to_string(expected);
            inst.observed = "k=" + std::to_string(k);
            inst.status = k == expected ? ClaimStatus::Match : ClaimStatus::Mismatch;
            batch.push_back(std::move(inst));
          }
          return batch;
        },
        options.workers);
    std::string csv = "e1,e2,e3,t,predicted,observed,status\n";
    for (const auto& inst : report.instances) {
      csv += std::to_string(inst.bounds[0]) + "," + std::to_string(inst.bounds[1]) +
             "," + std::to_string(inst.bounds[2]) + "," + std::to_string(inst.t) +
             "," + inst.predicted + "," + inst.observed + "," +
             std::string(to_string(inst.status)) + "\n";
    }
    write_artifact("conjecture4_parity.csv", csv);
  } else {
    throw std::invalid_argument("conjecture id must be 1..4");
  }

  report.instances_checked = static_cast<Int>(report.instances.size());
  for (const auto& inst : report.instances) {
    if (inst.status == ClaimStatus::Mismatch) report.counterexamples.push_back(inst);
  }
  return report;
}

std::string to_csv(std::span<const ClaimInstance> instances) {
  std::string csv = "claim_id,m,n,t,predicted,observed,status\n";
  for (const auto& inst : instances) {
    csv += inst.claim_id;
    csv += ',';
    csv += inst.bounds.empty() ? "" : std::to_string(inst.bounds[0]);
    csv += ',';
    if (inst.bounds.size() == 2) {
      csv += std::to_string(inst.bounds[1]);
    } else if (inst.bounds.size() > 2) {
      csv += bounds_text({inst.bounds.begin() + 1, inst.bounds.end()});
    }
    csv += ',';
    if (inst.t >= 0) csv += std::to_string(inst.t);
    csv += ',';
    csv += inst.predicted + ',' + inst.observed + ',';
    csv += to_string(inst.status);
    csv += '\n';
  }
  return csv;
}

nlohmann::json instance_json(const ClaimInstance& inst) {
  nlohmann::json j;
  j["claim_id"] = inst.claim_id;
  j["bounds"] = inst.bounds;
  if (inst.t >= 0) j["t"] = inst.t;
  j["predicted"] = inst.predicted;
  j["observed"] = inst.observed;
  j["status"] = to_string(inst.status);
  return j;
}

nlohmann::json summary_json(const SweepResult& result) {
  nlohmann::json j;
  j["sweep"] = result.sweep_id;
  j["instances"] = result.instances.size();
  j["match"] = result.matches();
  j["mismatch"] = result.mismatches();
  j["not_applicable"] = result.not_applicable();
  auto mismatches = nlohmann::json::array();
  for (const auto& inst : result.instances) {
    if (inst.status == ClaimStatus::Mismatch) mismatches.push_back(instance_json(inst));
  }
  j["counterexamples"] = std::move(mismatches);
  return j;
}

nlohmann::json conjecture_json(const ConjectureReport& report) {
  nlohmann::json j;
  j["conjecture"] = report.conjecture_id;
  j["ranges"] = report.ranges;
  j["instances_checked"] = report.instances_checked;
  j["exploratory"] = report.exploratory;
  auto counterexamples = nlohmann::json::array();
  for (const auto& inst : report.counterexamples) {
    counterexamples.push_back(instance_json(inst));
  }
  j["counterexamples"] = std::move(counterexamples);
  if (!report.artifact_path.empty()) j["artifact"] = report.artifact_path;
  return j;
}

}  // namespace tgraph
