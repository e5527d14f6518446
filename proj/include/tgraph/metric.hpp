#pragma once

#include <Eigen/Dense>

#include <cstdlib>
#include <span>

#include "tgraph/errors.hpp"
#include "tgraph/presentation.hpp"

namespace tgraph {

// Taxicab distance between two exponent vectors: sum of |e_i - d_i|.
// Accepts any integer vector expressions of the same length.
template <typename DerivedX, typename DerivedY>
Int d1(const Eigen::MatrixBase<DerivedX>& x, const Eigen::MatrixBase<DerivedY>& y) {
  if (x.size() != y.size()) {
    throw IncompatibleElements("d1: elements have different generator counts");
  }
  return (x.derived() - y.derived()).cwiseAbs().sum();
}

// Same distance with an early exit once the partial sum exceeds cap; the
// return value is only meaningful when <= cap.
inline Int d1_capped(std::span<const Int> x, std::span<const Int> y, Int cap) {
  Int sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sum += std::abs(x[i] - y[i]);
    if (sum > cap) return sum;
  }
  return sum;
}

}  // namespace tgraph
