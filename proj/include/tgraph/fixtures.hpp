#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tgraph/presentation.hpp"

namespace tgraph::fixtures {

// Reference-table cells exactly as published, plus the mask of cells known
// to disagree with recomputation. The repository ships the tables verbatim;
// the mask is the only annotation layered on top.
struct TableFixture {
  std::string table_id;
  std::vector<std::vector<Int>> cells;
  std::vector<std::pair<int, int>> erratum_mask;  // (row, col) positions
};

// 8x8 distance table on bounds (2,4) in the published element order
// 1, a, b, b^2, b^3, ab, ab^2, ab^3. One cell (row ab^2, col b^3) is off by
// one against recomputation; it is the single entry in the erratum mask.
const TableFixture& distance_table();

// The published element order of the distance table as exponent vectors.
extern const std::array<std::array<Int, 2>, 8> kDistanceTableOrder;
extern const std::array<const char*, 8> kDistanceTableLabels;

// Component counts of the t-graphs on bounds (m, n), m in {2, 3}, rows
// n = 2..20, row n covering t = 1..min(m+n-2, 20). Erratum masks are empty.
const TableFixture& component_table(Int m);

std::uint64_t fixture_checksum(const TableFixture& fixture);

// Pinned checksums of the embedded tables; integrity_ok recomputes and
// compares all three.
extern const std::uint64_t kDistanceTableChecksum;
extern const std::uint64_t kComponentTableChecksum2;
extern const std::uint64_t kComponentTableChecksum3;
bool integrity_ok();

}  // namespace tgraph::fixtures
