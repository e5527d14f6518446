#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tgraph/analysis.hpp"
#include "tgraph/presentation.hpp"

namespace tgraph {

// Regime boundary for a general 2-generator family: ceil((m+n-2)/2).
Int threshold_general(Int m, Int n);

// Regime boundary in the (2, n) characterisation: r = ceil(n/2). Coincides
// with threshold_general(2, n) but the two are kept as separate functions.
Int threshold_dihedral(Int n);

struct ComponentShape {
  ComponentKind kind = ComponentKind::Other;
  Int size = 0;
  Int count = 0;

  friend bool operator==(const ComponentShape&, const ComponentShape&) = default;
};

// A closed-form claim evaluated at concrete parameters. Predictions are
// data for the harness to test, never assertions: absent fields mean the
// claim says nothing about them, applicable=false means the parameters are
// outside the claim's stated range.
struct Prediction {
  std::string claim_id;
  std::vector<Int> bounds;
  Int t = 0;
  bool applicable = true;
  std::string reason;  // context, or why not applicable
  std::optional<Int> component_count;
  std::optional<Int> edge_count;
  std::optional<Int> chromatic_number;
  std::optional<bool> isolated_free;
  std::optional<bool> isomorphic_components;
  std::vector<ComponentShape> structure;  // empty = no structural claim
};

// k = 2 for even t, 1 for odd t, whenever t <= threshold_general(m, n).
Prediction predict_components_2gen(Int m, Int n, Int t);

// k = t while edges exist (t <= m-1), otherwise every vertex is isolated.
Prediction predict_components_cyclic(Int m, Int t);

// |E| = 3n-2 at t = 1 and 4(n-t)+2 for 2 <= t <= n, on bounds (2, n).
Prediction predict_edges_dihedral(Int n, Int t);

// Full component-count characterisation on bounds (2, n), split at
// r = ceil(n/2); past r the non-isolated part is two isomorphic paths.
Prediction predict_components_dihedral(Int n, Int t);

// The special-case structural claims on bounds (2, n) that apply at (n, t):
// single even cycle / two odd cycles at t = (n+1)/2, two paths at
// t = n/2 + 1, the t = n graph, and the 2-colorability ranges.
std::vector<Prediction> predict_structure_corollaries(Int n, Int t);

// The boundary claim "no isolated points iff t <= threshold_general(m, n)".
// Emitted for comparison only; the harness records where it fails.
Prediction predict_isolated_free(Int m, Int n, Int t);

nlohmann::json prediction_json(const Prediction& p);

}  // namespace tgraph
