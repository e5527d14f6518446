#pragma once

#include <Eigen/Dense>

#include <cstdint>

#include "tgraph/graph.hpp"

namespace tgraph {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// Degree matrix minus adjacency matrix: diagonal entry = vertex degree,
// off-diagonal entry = -1 on edges, 0 elsewhere. Rows sum to zero.
using LaplacianMatrix = DenseMatrix<Int>;

inline constexpr Int kDefaultSpectralCap = 2048;
inline constexpr Int kDefaultExactRankLimit = 512;

LaplacianMatrix laplacian(const TGraph& g, Int order_cap = kDefaultSpectralCap);

// Rank by fraction-free (Bareiss) elimination with column skipping. Every
// intermediate entry is a minor of the input, so the divisions are exact as
// long as Scalar arithmetic is exact (use an arbitrary-precision integer;
// int64 overflows beyond toy sizes).
template <typename Scalar>
Eigen::Index rank_fraction_free(DenseMatrix<Scalar> m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Scalar previous_pivot{1};
  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = rank; i < rows; ++i) {
      if (m(i, c) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;  // column already eliminated, rank unchanged
    if (pivot != rank) m.row(pivot).swap(m.row(rank));
    for (Eigen::Index i = rank + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        m(i, j) = (m(rank, c) * m(i, j) - m(i, c) * m(rank, j)) / previous_pivot;
      }
      m(i, c) = Scalar{0};
    }
    previous_pivot = m(rank, c);
    ++rank;
  }
  return rank;
}

// Rank over Z/p by ordinary Gaussian elimination; p must be an odd prime
// below 2^31 so products fit in 64 bits. Never exceeds the rational rank.
Eigen::Index rank_mod_p(const LaplacianMatrix& m, std::uint64_t p);

// Multiplicity of the eigenvalue 0, i.e. order - rank over the rationals.
// Exact Bareiss elimination up to exact_limit; beyond it the rank is taken
// over two distinct primes > 2^30 (callers certify the result against an
// independent component count).
Eigen::Index laplacian_nullity(const LaplacianMatrix& L,
                               Int exact_limit = kDefaultExactRankLimit);

}  // namespace tgraph
