#include <doctest.h>

#include "oracles.hpp"
#include "tgraph/metric.hpp"

using namespace tgraph;

namespace {

Exponents exps(std::initializer_list<Int> values) {
  Exponents e(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (Int v : values) e[i++] = v;
  return e;
}

}  // namespace

TEST_CASE("distances match the published table entries") {
  // a = (1,0), b^3 = (0,3)
  CHECK(d1(exps({1, 0}), exps({0, 3})) == 4);
  // ab^2 = (1,2) vs b^3 = (0,3): |1-0| + |2-3| = 2. The printed table carries
  // 3 in one of the two symmetric cells; 2 is the recomputed value.
  CHECK(d1(exps({1, 2}), exps({0, 3})) == 2);
  CHECK(d1(exps({0, 3}), exps({1, 2})) == 2);
}

TEST_CASE("distance to self is zero") {
  for (const GeneratorBounds& bounds : {GeneratorBounds({2, 4}), GeneratorBounds({7})}) {
    const ElementTable table = bounds.enumerate_elements();
    for (Int v = 0; v < bounds.element_count(); ++v) {
      CHECK(d1(table.row(v).transpose(), table.row(v).transpose()) == 0);
    }
  }
}

TEST_CASE("mismatched generator counts are rejected") {
  CHECK_THROWS_AS(d1(exps({1, 0}), exps({1, 0, 0})), IncompatibleElements);
}

TEST_CASE("symmetry holds exhaustively on (2,4) and (3,4)") {
  for (const GeneratorBounds& bounds : {GeneratorBounds({2, 4}), GeneratorBounds({3, 4})}) {
    const ElementTable table = bounds.enumerate_elements();
    const Int count = bounds.element_count();
    for (Int u = 0; u < count; ++u) {
      for (Int v = 0; v < count; ++v) {
        const Int forward = d1(table.row(u).transpose(), table.row(v).transpose());
        const Int backward = d1(table.row(v).transpose(), table.row(u).transpose());
        CHECK(forward == backward);
      }
    }
  }
}

TEST_CASE("metric axioms hold on every triple of small families") {
  for (const GeneratorBounds& bounds :
       {GeneratorBounds({2, 4}), GeneratorBounds({8}), GeneratorBounds({2, 2, 2}),
        GeneratorBounds({4, 4, 4})}) {
    const ElementTable table = bounds.enumerate_elements();
    const Int count = bounds.element_count();
    REQUIRE(count <= 64);
    for (Int x = 0; x < count; ++x) {
      for (Int y = 0; y < count; ++y) {
        const Int dxy = d1(table.row(x).transpose(), table.row(y).transpose());
        CHECK((dxy == 0) == (x == y));
        for (Int z = 0; z < count; ++z) {
          const Int dxz = d1(table.row(x).transpose(), table.row(z).transpose());
          const Int dzy = d1(table.row(z).transpose(), table.row(y).transpose());
          CHECK(dxy <= dxz + dzy);
        }
      }
    }
  }
}

TEST_CASE("maximum distance equals the sum of bound minus one") {
  for (const GeneratorBounds& bounds :
       {GeneratorBounds({2, 4}), GeneratorBounds({5}), GeneratorBounds({3, 3, 2})}) {
    const ElementTable table = bounds.enumerate_elements();
    const Int count = bounds.element_count();
    Int maximum = 0;
    for (Int u = 0; u < count; ++u) {
      for (Int v = u + 1; v < count; ++v) {
        maximum = std::max(maximum, d1(table.row(u).transpose(), table.row(v).transpose()));
      }
    }
    CHECK(maximum == (bounds.values().array() - 1).sum());
  }
}

TEST_CASE("the capped distance agrees with the metric and the oracle") {
  const GeneratorBounds bounds({3, 4});
  const ElementTable table = bounds.enumerate_elements();
  const auto naive = oracle::enumerate({3, 4});
  const std::size_t k = 2;
  const Int* data = table.data();
  for (Int u = 0; u < bounds.element_count(); ++u) {
    for (Int v = 0; v < bounds.element_count(); ++v) {
      const Int full = d1(table.row(u).transpose(), table.row(v).transpose());
      CHECK(full == oracle::dist(naive[static_cast<std::size_t>(u)],
                                 naive[static_cast<std::size_t>(v)]));
      CHECK(d1_capped({data + u * 2, k}, {data + v * 2, k}, 100) == full);
      // under a tight cap the exact value may be cut short, never under-read
      const Int capped = d1_capped({data + u * 2, k}, {data + v * 2, k}, 1);
      if (full <= 1) CHECK(capped == full);
      else CHECK(capped > 1);
    }
  }
}
