#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tgraph/analysis.hpp"
#include "tgraph/formulas.hpp"

namespace tgraph {

enum class ClaimStatus { Match, Mismatch, NotApplicable };

std::string_view to_string(ClaimStatus status);

// One claim evaluated at one parameter point: what the closed form says
// next to what brute force found.
struct ClaimInstance {
  std::string claim_id;
  std::vector<Int> bounds;
  Int t = -1;  // -1 where t is not a parameter (distance-table cells)
  std::string predicted;
  std::string observed;
  ClaimStatus status = ClaimStatus::Match;
};

struct SweepOptions {
  Int n_max = 50;   // row/size ranges
  Int max = 12;     // square (m, n) ranges
  Int m_max = 6;    // even-m range of the component-isomorphism scan
  int workers = 0;  // 0 = available parallelism
  // Bareiss budget inside sweeps; larger orders use the dual-prime modular
  // rank. Every sweep graph still gets the nullity-vs-components check.
  Int nullity_exact_limit = 64;
};

struct SweepResult {
  std::string sweep_id;
  std::vector<ClaimInstance> instances;  // sorted by parameters

  Int matches() const;
  Int mismatches() const;
  Int not_applicable() const;
  bool all_match() const;  // no MISMATCH among applicable instances
};

// All 64 pairwise distances on bounds (2,4) in the published element order,
// each compared against the shipped table; exactly the masked cell comes
// out MISMATCH.
std::vector<ClaimInstance> reproduce_distance_table();

// Component counts on bounds (m, n) for n = 2..n_max against the shipped
// table, union-find cross-checked against the Laplacian nullity per cell.
SweepResult reproduce_component_table(Int m, Int n_max = 20,
                                      const SweepOptions& options = {});

// Named parameter sweeps comparing predictions to brute force.
SweepResult verify_claim_sweep(std::string_view sweep_id,
                               const SweepOptions& options = {});

std::vector<std::string> known_sweeps();

// Pinned sweeps must come out all-MATCH; the others (the recorded boundary
// discrepancy) report mismatches without failing anything.
bool sweep_is_pinned(std::string_view sweep_id);

struct ConjectureReport {
  int conjecture_id = 0;
  std::string ranges;
  Int instances_checked = 0;
  bool exploratory = false;  // no predicate to falsify, data emission only
  std::vector<ClaimInstance> instances;
  std::vector<ClaimInstance> counterexamples;
  std::string artifact_path;  // empty unless the scan writes a data file
};

// Scans the four open questions over bounded ranges: 1 component
// isomorphism, 2 component counts past the threshold (CSV artifact),
// 3 chromatic number 3 at even t, 4 the parity rule on three generators
// (CSV artifact). artifact_dir receives any emitted files.
ConjectureReport conjecture_scan(int id, const SweepOptions& options = {},
                                 const std::string& artifact_dir = ".");

// claim_id,m,n,t,predicted,observed,status — one row per instance.
std::string to_csv(std::span<const ClaimInstance> instances);

nlohmann::json instance_json(const ClaimInstance& instance);
nlohmann::json summary_json(const SweepResult& result);
nlohmann::json conjecture_json(const ConjectureReport& report);

}  // namespace tgraph
