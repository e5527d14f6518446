#include "tgraph/fixtures.hpp"

namespace tgraph::fixtures {

const std::array<std::array<Int, 2>, 8> kDistanceTableOrder = {
    {{0, 0}, {1, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2}, {1, 3}}};

const std::array<const char*, 8> kDistanceTableLabels = {
    "1", "a", "b", "b^2", "b^3", "ab", "ab^2", "ab^3"};

const TableFixture& distance_table() {
  static const TableFixture fixture{
      "T1-distances",
      {
          {0, 1, 1, 2, 3, 2, 3, 4},  // 1
          {1, 0, 2, 3, 4, 1, 2, 3},  // a
          {1, 2, 0, 1, 2, 1, 2, 3},  // b
          {2, 3, 1, 0, 1, 2, 1, 2},  // b^2
          {3, 4, 2, 1, 0, 3, 2, 1},  // b^3
          {2, 1, 1, 2, 3, 0, 1, 2},  // ab
          {3, 2, 2, 1, 3, 1, 0, 1},  // ab^2  (col b^3 printed 3, recomputes to 2)
          {4, 3, 3, 2, 1, 2, 1, 0},  // ab^3
      },
      {{6, 4}},
  };
  return fixture;
}

const TableFixture& component_table(Int m) {
  // rows n = 2..20; row n holds t = 1..min(m+n-2, 20)
  static const TableFixture table2{
      "T2-components",
      {
          {1, 2},
          {1, 2, 4},
          {1, 2, 2, 6},
          {1, 2, 1, 4, 8},
          {1, 2, 1, 2, 6, 10},
          {1, 2, 1, 2, 4, 8, 12},
          {1, 2, 1, 2, 2, 6, 10, 14},
          {1, 2, 1, 2, 1, 4, 8, 12, 16},
          {1, 2, 1, 2, 1, 2, 6, 10, 14, 18},
          {1, 2, 1, 2, 1, 2, 4, 8, 12, 16, 20},
          {1, 2, 1, 2, 1, 2, 2, 6, 10, 14, 18, 22},
          {1, 2, 1, 2, 1, 2, 1, 4, 8, 12, 16, 20, 24},
          {1, 2, 1, 2, 1, 2, 1, 2, 6, 10, 14, 18, 22, 26},
          {1, 2, 1, 2, 1, 2, 1, 2, 4, 8, 12, 16, 20, 24, 28},
          {1, 2, 1, 2, 1, 2, 1, 2, 2, 6, 10, 14, 18, 22, 26, 30},
          {1, 2, 1, 2, 1, 2, 1, 2, 1, 4, 8, 12, 16, 20, 24, 28, 32},
          {1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 6, 10, 14, 18, 22, 26, 30, 34},
          {1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 4, 8, 12, 16, 20, 24, 28, 32, 36},
          {1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 2, 6, 10, 14, 18, 22, 26, 30, 34, 38},
      },
      {},
  };
  static const TableFixture table3{
      "T3-components",
      {
          {1, 2, 4},
          {1, 2, 2, 7},
          {1, 2, 1, 4, 10},
          {1, 2, 1, 3, 7, 13},
          {1, 2, 1, 2, 4, 10, 16},
          {1, 2, 1, 2, 2, 7, 13, 19},
          {1, 2, 1, 2, 1, 4, 10, 16, 22},
          {1, 2, 1, 2, 1, 3, 7, 13, 19, 25},
          {1, 2, 1, 2, 1, 2, 4, 10, 16, 22, 28},
          {1, 2, 1, 2, 1, 2, 2, 7, 13, 19, 25, 31},
          {1, 2, 1, 2, 1, 2, 1, 4, 10, 16, 22, 28, 34},
          {1, 2, 1, 2, 1, 2, 1, 3, 7, 13, 19, 25, 31, 37},
          {1, 2, 1, 2, 1, 2, 1, 2, 4, 10, 16, 22, 28, 34, 40},
          {1, 2, 1, 2, 1, 2, 1, 2, 2, 7, 13, 19, 25, 31, 37, 43},
          {1, 2, 1, 2, 1, 2, 1, 2, 1, 4, 10, 16, 22, 28, 34, 40, 46},
          {1, 2, 1, 2, 1, 2, 1, 2, 1, 3, 7, 13, 19, 25, 31, 37, 43, 49},
          {1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 4, 10, 16, 22, 28, 34, 40, 46, 52},
          {1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 2, 7, 13, 19, 25, 31, 37, 43, 49, 55},
          {1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 4, 10, 16, 22, 28, 34, 40, 46, 52},
      },
      {},
  };
  if (m == 2) return table2;
  if (m == 3) return table3;
  throw std::invalid_argument("component tables exist only for m in {2, 3}");
}

std::uint64_t fixture_checksum(const TableFixture& fixture) {
  std::uint64_t hash = 14695981039346656037ULL;  // FNV-1a 64
  const auto mix = [&hash](const std::string& text) {
    for (const unsigned char c : text) {
      hash ^= c;
      hash *= 1099511628211ULL;
    }
  };
  mix(fixture.table_id);
  for (const auto& row : fixture.cells) {
    mix(";");
    for (const Int cell : row) mix(std::to_string(cell) + ",");
  }
  for (const auto& [row, col] : fixture.erratum_mask) {
    mix("!" + std::to_string(row) + ":" + std::to_string(col));
  }
  return hash;
}

const std::uint64_t kDistanceTableChecksum = 0x0038cc7ec95a3cadULL;
const std::uint64_t kComponentTableChecksum2 = 0xf99394085ac0e86bULL;
const std::uint64_t kComponentTableChecksum3 = 0xaa0236a80248c6ceULL;

bool integrity_ok() {
  return fixture_checksum(distance_table()) == kDistanceTableChecksum &&
         fixture_checksum(component_table(2)) == kComponentTableChecksum2 &&
         fixture_checksum(component_table(3)) == kComponentTableChecksum3;
}

}  // namespace tgraph::fixtures
