#include "tgraph/formulas.hpp"

namespace tgraph {

namespace {

void require_at_least_2(Int value, const char* name) {
  if (value < 2) {
    throw std::invalid_argument(std::string(name) + " must be >= 2");
  }
}

void require_positive_t(Int t) {
  if (t < 1) throw std::invalid_argument("t must be >= 1");
}

Prediction not_applicable(std::string claim_id, std::vector<Int> bounds, Int t,
                          std::string reason) {
  Prediction p;
  p.claim_id = std::move(claim_id);
  p.bounds = std::move(bounds);
  p.t = t;
  p.applicable = false;
  p.reason = std::move(reason);
  return p;
}

}  // namespace

Int threshold_general(Int m, Int n) {
  require_at_least_2(m, "m");
  require_at_least_2(n, "n");
  return (m + n - 1) / 2;  // ceil((m+n-2)/2)
}

Int threshold_dihedral(Int n) {
  require_at_least_2(n, "n");
  return (n + 1) / 2;  // ceil(n/2)
}

Prediction predict_components_2gen(Int m, Int n, Int t) {
  require_at_least_2(m, "m");
  require_at_least_2(n, "n");
  require_positive_t(t);
  const Int threshold = threshold_general(m, n);
  if (t > threshold) {
    return not_applicable(t % 2 == 0 ? "T2.even" : "T2.odd", {m, n}, t,
                          "t exceeds threshold " + std::to_string(threshold));
  }
  Prediction p;
  p.claim_id = t % 2 == 0 ? "T2.even" : "T2.odd";
  p.bounds = {m, n};
  p.t = t;
  p.component_count = t % 2 == 0 ? 2 : 1;
  return p;
}

Prediction predict_components_cyclic(Int m, Int t) {
  require_at_least_2(m, "m");
  require_positive_t(t);
  Prediction p;
  p.claim_id = "C-cyclic";
  p.bounds = {m};
  p.t = t;
  if (t > m - 1) {
    p.component_count = m;  // edgeless: every vertex isolated
    p.structure = {{ComponentKind::Isolated, 1, m}};
    return p;
  }
  p.component_count = t;
  // residue class i (0 <= i < t) is the path i, i+t, i+2t, ...
  for (Int i = 0; i < t; ++i) {
    const Int size = (m - 1 - i) / t + 1;
    const ComponentKind kind = size == 1 ? ComponentKind::Isolated : ComponentKind::Path;
    if (!p.structure.empty() && p.structure.back().kind == kind &&
        p.structure.back().size == size) {
      ++p.structure.back().count;
    } else {
      p.structure.push_back({kind, size, 1});
    }
  }
  return p;
}

Prediction predict_edges_dihedral(Int n, Int t) {
  require_at_least_2(n, "n");
  require_positive_t(t);
  if (t > n) {
    return not_applicable("L-edges", {2, n}, t, "t beyond n is outside the edge-count table");
  }
  Prediction p;
  p.claim_id = "L-edges";
  p.bounds = {2, n};
  p.t = t;
  p.edge_count = t == 1 ? 3 * n - 2 : 4 * (n - t) + 2;
  return p;
}

Prediction predict_components_dihedral(Int n, Int t) {
  require_at_least_2(n, "n");
  require_positive_t(t);
  const Int r = threshold_dihedral(n);
  if (t > n) {
    return not_applicable("T5", {2, n}, t, "t beyond n is outside the characterisation");
  }
  Prediction p;
  p.bounds = {2, n};
  p.t = t;
  if (t <= r) {
    if (t % 2 == 0) {
      p.claim_id = "T5.case1";
      p.component_count = 2;
      p.isomorphic_components = true;
    } else {
      p.claim_id = "T5.case2";
      p.component_count = 1;
    }
    return p;
  }
  // t = r + s with 1 <= s <= n - r
  const Int s = t - r;
  p.claim_id = "T5.case3";
  p.component_count = n % 2 == 0 ? 4 * (s - 1) + 2 : 4 * s;
  p.isomorphic_components = true;  // the two path components
  const Int path_size = 2 * (n - t) + 2;
  p.structure.push_back({ComponentKind::Path, path_size, 2});
  const Int isolated = *p.component_count - 2;
  if (isolated > 0) {
    p.structure.push_back({ComponentKind::Isolated, 1, isolated});
  }
  return p;
}

std::vector<Prediction> predict_structure_corollaries(Int n, Int t) {
  require_at_least_2(n, "n");
  require_positive_t(t);
  const Int r = threshold_dihedral(n);
  std::vector<Prediction> claims;

  if (n % 2 == 1 && n >= 5 && t == (n + 1) / 2) {
    Prediction p;
    p.bounds = {2, n};
    p.t = t;
    if (t % 2 == 1) {
      p.claim_id = "C-T7.odd-t";
      p.component_count = 1;
      p.chromatic_number = 2;
      p.structure = {{ComponentKind::Cycle, 2 * n, 1}};
    } else {
      p.claim_id = "C-T7.even-t";
      p.component_count = 2;
      p.chromatic_number = 3;
      p.isomorphic_components = true;
      p.structure = {{ComponentKind::Cycle, n, 2}};
    }
    claims.push_back(std::move(p));
  }

  if (n % 2 == 0 && t == n / 2 + 1) {
    Prediction p;
    p.claim_id = "C-paths";
    p.bounds = {2, n};
    p.t = t;
    p.component_count = 2;
    p.isomorphic_components = true;
    p.structure = {{ComponentKind::Path, 2 * (n - t) + 2, 2}};
    claims.push_back(std::move(p));
  }

  if (t == n) {
    Prediction p;
    p.claim_id = "C-ngraph";
    p.bounds = {2, n};
    p.t = t;
    p.component_count = 2 * (n - 1);
    p.structure = {{ComponentKind::Path, 2, 2}};
    if (n > 2) p.structure.push_back({ComponentKind::Isolated, 1, 2 * n - 4});
    claims.push_back(std::move(p));
  }

  if ((t <= r && t % 2 == 1) || (t > r && t <= n)) {
    Prediction p;
    p.claim_id = "C-2chromatic";
    p.bounds = {2, n};
    p.t = t;
    p.chromatic_number = 2;
    claims.push_back(std::move(p));
  }

  return claims;
}

Prediction predict_isolated_free(Int m, Int n, Int t) {
  require_at_least_2(m, "m");
  require_at_least_2(n, "n");
  require_positive_t(t);
  Prediction p;
  p.claim_id = "L-isolated";
  p.bounds = {m, n};
  p.t = t;
  p.isolated_free = t <= threshold_general(m, n);
  return p;
}

nlohmann::json prediction_json(const Prediction& p) {
  nlohmann::json j;
  j["claim_id"] = p.claim_id;
  j["bounds"] = p.bounds;
  j["t"] = p.t;
  j["applicable"] = p.applicable;
  if (!p.reason.empty()) j["reason"] = p.reason;
  if (p.component_count) j["k"] = *p.component_count;
  if (p.edge_count) j["edges"] = *p.edge_count;
  if (p.chromatic_number) j["chi"] = *p.chromatic_number;
  if (p.isolated_free) j["isolated_free"] = *p.isolated_free;
  if (p.isomorphic_components) j["isomorphic_components"] = *p.isomorphic_components;
  if (!p.structure.empty()) {
    auto shapes = nlohmann::json::array();
    for (const auto& s : p.structure) {
      shapes.push_back({{"kind", to_string(s.kind)}, {"size", s.size}, {"count", s.count}});
    }
    j["structure"] = std::move(shapes);
  }
  return j;
}

}  // namespace tgraph
