#include "ldg/boundary.hpp"

#include <cmath>
#include <stdexcept>

namespace ldg {

namespace {

const double kUnitScale = std::sqrt(1.5);

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Uniform in [-1, 1), keyed by (seed, counter); no generator state.
double unit_noise(uint64_t seed, uint64_t counter) {
  const uint64_t bits = splitmix64(splitmix64(seed) ^ splitmix64(counter));
  return 2.0 * (static_cast<double>(bits >> 11) * 0x1.0p-53) - 1.0;
}

}  // namespace

QField hedgehog_boundary(const Grid& grid) {
  QField f(grid);
  for (int k = 0; k < grid.n; ++k)
    for (int j = 0; j < grid.n; ++j)
      for (int i = 0; i < grid.n; ++i) {
        if (!grid.on_boundary(i, j, k)) continue;
        const Vec3 x = grid.position(i, j, k);
        f.at(i, j, k) = from_director(normalized(x), kUnitScale);
      }
  return f;
}

QField constant_boundary(const Grid& grid, const Vec3& n0) {
  if (std::abs(dot(n0, n0) - 1.0) > 2e-12) {
    throw std::invalid_argument("constant_boundary: n0 must be a unit vector");
  }
  QField f(grid);
  const QTensor qb = from_director(n0, kUnitScale);
  for (long idx = 0; idx < grid.count(); ++idx) {
    if (f.boundary[idx]) f.values[idx] = qb;
  }
  return f;
}

QField init_radial_ansatz(const QField& field, double core_radius) {
  if (!(core_radius > 0.0) || core_radius > field.grid.half_width) {
    throw std::invalid_argument("core_radius must lie in (0, half_width]");
  }
  QField f = field;
  const Grid& g = f.grid;
  for (int k = 0; k < g.n; ++k)
    for (int j = 0; j < g.n; ++j)
      for (int i = 0; i < g.n; ++i) {
        const long idx = g.index(i, j, k);
        if (f.boundary[idx]) continue;
        const Vec3 x = g.position(i, j, k);
        const double r = norm(x);
        if (r == 0.0) {
          f.values[idx] = QTensor{};
          continue;
        }
        const double rho = std::min(r / core_radius, 1.0);
        f.values[idx] = from_director({x[0] / r, x[1] / r, x[2] / r},
                                      rho * kUnitScale);
      }
  return f;
}

QField init_random(const QField& field, std::uint64_t seed, double amplitude) {
  if (amplitude < 0.0 || amplitude > 1.0) {
    throw std::invalid_argument("amplitude must lie in [0, 1]");
  }
  QField f = field;
  if (amplitude == 0.0) return f;
  const double scale = amplitude / std::sqrt(5.0);
  for (long idx = 0; idx < f.grid.count(); ++idx) {
    if (f.boundary[idx]) continue;
    for (int c = 0; c < 5; ++c) {
      f.values[idx].a[c] +=
          scale * unit_noise(seed, static_cast<uint64_t>(idx) * 5u + c);
    }
  }
  return f;
}

}  // namespace ldg
