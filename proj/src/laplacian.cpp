#include "tgraph/laplacian.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <algorithm>

namespace tgraph {

namespace {

using BigInt = boost::multiprecision::cpp_int;

// distinct primes > 2^30, small enough that products fit in uint64
constexpr std::uint64_t kRankPrimes[2] = {2147483647ULL, 1073741827ULL};

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

}  // namespace

LaplacianMatrix laplacian(const TGraph& g, Int order_cap) {
  const Int order = g.vertex_count();
  if (order > order_cap) {
    throw SizeLimitError("laplacian: order " + std::to_string(order) +
                         " exceeds cap " + std::to_string(order_cap));
  }
  LaplacianMatrix L = LaplacianMatrix::Zero(order, order);
  for (Int v = 0; v < order; ++v) {
    L(v, v) = g.degree(static_cast<Vertex>(v));
  }
  for (const auto& [u, v] : g.edges) {
    L(u, v) = -1;
    L(v, u) = -1;
  }
  return L;
}

Eigen::Index rank_mod_p(const LaplacianMatrix& m, std::uint64_t p) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  DenseMatrix<std::uint64_t> a(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      const Int v = m(i, j) % static_cast<Int>(p);
      a(i, j) = static_cast<std::uint64_t>(v < 0 ? v + static_cast<Int>(p) : v);
    }
  }
  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = rank; i < rows; ++i) {
      if (a(i, c) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) a.row(pivot).swap(a.row(rank));
    const std::uint64_t inv = pow_mod(a(rank, c), p - 2, p);
    for (Eigen::Index i = rank + 1; i < rows; ++i) {
      if (a(i, c) == 0) continue;
      const std::uint64_t factor = a(i, c) * inv % p;
      for (Eigen::Index j = c; j < cols; ++j) {
        a(i, j) = (a(i, j) + (p - factor) * a(rank, j)) % p;
      }
    }
    ++rank;
  }
  return rank;
}

Eigen::Index laplacian_nullity(const LaplacianMatrix& L, Int exact_limit) {
  if (L.rows() != L.cols()) {
    throw std::invalid_argument("laplacian_nullity: matrix must be square");
  }
  const Eigen::Index order = L.rows();
  if (order <= exact_limit) {
    return order - rank_fraction_free<BigInt>(L.cast<BigInt>());
  }
  const Eigen::Index r0 = rank_mod_p(L, kRankPrimes[0]);
  const Eigen::Index r1 = rank_mod_p(L, kRankPrimes[1]);
  return order - std::max(r0, r1);
}

}  // namespace tgraph
