#pragma once

#include <cstdint>

#include "ldg/field.hpp"

namespace ldg {

/// Radial director boundary data n_b(x) = x/|x|: every boundary node gets
/// the unit-norm uniaxial tensor sqrt(3/2)(n_b (x) n_b - I/3); interior is
/// zero. The boundary director map has topological degree 1.
QField hedgehog_boundary(const Grid& grid);

/// Uniform boundary data sqrt(3/2)(n0 (x) n0 - I/3); degree 0.
QField constant_boundary(const Grid& grid, const Vec3& n0);

/// Uniaxial radial interior guess: node x gets
///   rho(|x|) sqrt(3/2)(x^ (x) x^ - I/3),  rho(r) = min(r/core_radius, 1),
/// zero at the center. Boundary nodes are left untouched.
QField init_radial_ansatz(const QField& field, double core_radius);

/// Adds a seeded, reproducible perturbation of norm <= amplitude to every
/// interior node of `field` (counter-based generator: platform-independent,
/// identical seed gives a bit-identical field). amplitude = 0 returns the
/// input unchanged.
QField init_random(const QField& field, std::uint64_t seed, double amplitude);

}  // namespace ldg
