#pragma once

#include <cstdint>
#include <vector>

#include "ldg/qtensor.hpp"

namespace ldg {

/// Uniform Cartesian grid over the cube [-half_width, half_width]^3.
/// n is odd so the center x = 0 is a grid node.
struct Grid {
  int n = 0;
  double half_width = 0.0;

  Grid() = default;
  Grid(int n_, double half_width_);

  double spacing() const { return 2.0 * half_width / (n - 1); }
  long count() const { return static_cast<long>(n) * n * n; }
  double coord(int i) const { return -half_width + i * spacing(); }
  Vec3 position(int i, int j, int k) const {
    return {coord(i), coord(j), coord(k)};
  }
  // x-fastest storage order
  long index(int i, int j, int k) const {
    return i + static_cast<long>(n) * (j + static_cast<long>(n) * k);
  }
  bool on_boundary(int i, int j, int k) const {
    return i == 0 || i == n - 1 || j == 0 || j == n - 1 || k == 0 || k == n - 1;
  }

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.n == b.n && a.half_width == b.half_width;
  }
};

/// Grid-indexed tensor field with frozen Dirichlet nodes. Boundary nodes
/// (mask true) never change during minimization.
struct QField {
  Grid grid;
  std::vector<QTensor> values;
  std::vector<std::uint8_t> boundary;

  QField() = default;
  explicit QField(const Grid& g)
      : grid(g), values(g.count()), boundary(g.count(), 0) {
    for (int k = 0; k < g.n; ++k)
      for (int j = 0; j < g.n; ++j)
        for (int i = 0; i < g.n; ++i)
          boundary[g.index(i, j, k)] = g.on_boundary(i, j, k) ? 1 : 0;
  }

  QTensor& at(int i, int j, int k) { return values[grid.index(i, j, k)]; }
  const QTensor& at(int i, int j, int k) const {
    return values[grid.index(i, j, k)];
  }

  long interior_count() const {
    long c = 0;
    for (auto b : boundary) c += (b == 0);
    return c;
  }
};

/// Nodewise director (top eigenvector, sign-normalized) and biaxiality.
/// Nodes where |Q| <= 1e-8 carry no meaningful frame and are flagged.
struct DirectorField {
  Grid grid;
  std::vector<Vec3> directors;
  std::vector<double> beta;
  std::vector<std::uint8_t> degenerate;
};

}  // namespace ldg
