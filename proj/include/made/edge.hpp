#pragma once

#include <compare>
#include <cstddef>

namespace made {

/// Undirected edge stored canonically with u < v.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;

  static Edge canonical(std::size_t a, std::size_t b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

}  // namespace made
