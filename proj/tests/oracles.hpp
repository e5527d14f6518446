#pragma once

// Naive reference implementations the tests freeze expected values from.
// Deliberately written against plain std containers, independent of the
// library code paths they are used to check.

#include <algorithm>
#include <cstdlib>
#include <utility>
#include <vector>

namespace oracle {

using Vec = std::vector<long long>;
using EdgeList = std::vector<std::pair<int, int>>;

inline std::vector<Vec> enumerate(const Vec& bounds) {
  std::vector<Vec> elements;
  Vec current(bounds.size(), 0);
  while (true) {
    elements.push_back(current);
    std::size_t i = bounds.size();
    while (i > 0) {
      --i;
      if (++current[i] < bounds[i]) break;
      current[i] = 0;
      if (i == 0) return elements;
    }
  }
}

inline long long dist(const Vec& a, const Vec& b) {
  long long sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::llabs(a[i] - b[i]);
  return sum;
}

inline EdgeList edges_at(const Vec& bounds, long long t) {
  const auto elements = enumerate(bounds);
  EdgeList edges;
  for (std::size_t u = 0; u < elements.size(); ++u) {
    for (std::size_t v = u + 1; v < elements.size(); ++v) {
      if (dist(elements[u], elements[v]) == t) {
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
      }
    }
  }
  return edges;
}

inline std::vector<std::vector<int>> adjacency_of(int n, const EdgeList& edges) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& [u, v] : edges) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  return adj;
}

inline int component_count(int n, const EdgeList& edges) {
  const auto adj = adjacency_of(n, edges);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  int components = 0;
  for (int start = 0; start < n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++components;
    std::vector<int> stack{start};
    seen[static_cast<std::size_t>(start)] = true;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<std::size_t>(u)]) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return components;
}

inline std::vector<long long> degree_sequence(int n, const EdgeList& edges) {
  std::vector<long long> degrees(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : edges) {
    ++degrees[static_cast<std::size_t>(u)];
    ++degrees[static_cast<std::size_t>(v)];
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

inline int isolated_count(int n, const EdgeList& edges) {
  std::vector<bool> touched(static_cast<std::size_t>(n), false);
  for (const auto& [u, v] : edges) {
    touched[static_cast<std::size_t>(u)] = true;
    touched[static_cast<std::size_t>(v)] = true;
  }
  return static_cast<int>(std::count(touched.begin(), touched.end(), false));
}

inline bool proper(const std::vector<int>& colors, const EdgeList& edges) {
  for (const auto& [u, v] : edges) {
    if (colors[static_cast<std::size_t>(u)] == colors[static_cast<std::size_t>(v)]) {
      return false;
    }
  }
  return true;
}

// literal try-every-assignment chromatic number; fine up to ~12 vertices
inline int chromatic_brute(int n, const EdgeList& edges, int max_colors = 5) {
  if (n == 0) return 0;
  for (int k = 1; k <= max_colors; ++k) {
    std::vector<int> colors(static_cast<std::size_t>(n), 0);
    while (true) {
      if (proper(colors, edges)) return k;
      int i = n - 1;
      while (i >= 0 && colors[static_cast<std::size_t>(i)] == k - 1) {
        colors[static_cast<std::size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
      ++colors[static_cast<std::size_t>(i)];
    }
  }
  return max_colors + 1;
}

}  // namespace oracle
