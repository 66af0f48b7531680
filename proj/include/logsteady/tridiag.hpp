#pragma once

#include <cstddef>
#include <vector>

namespace logsteady {

// Symmetric tridiagonal system solver (Thomas elimination, no pivoting;
// near-zero pivots are nudged so shifted eigen-solves stay usable).
struct Tridiagonal {
  std::vector<double> diag;  // n
  std::vector<double> off;   // n-1, same super- and sub-diagonal

  std::size_t size() const { return diag.size(); }

  // y = T x
  void multiply(const std::vector<double>& x, std::vector<double>& y) const;

  // Solve T x = rhs; returns false only for an empty system.
  bool solve(const std::vector<double>& rhs, std::vector<double>& x) const;
};

}  // namespace logsteady
