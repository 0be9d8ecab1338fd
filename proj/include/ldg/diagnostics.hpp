#pragma once

#include <array>
#include <string>

#include "ldg/field.hpp"
#include "ldg/potential.hpp"

namespace ldg {

/// Degree of departure from uniaxiality:
///   beta(Q) = 1 - 6 (tr Q^3)^2 / |Q|^6,
/// scale- and rotation-invariant, in [0, 1]; 0 on uniaxial tensors, 1 on
/// maximally biaxial ones. Returns 0 by convention when |Q| <= 1e-8, so a
/// vanishing node registers through its norm rather than through beta.
double biaxiality(const QTensor& q);

/// Nodewise biaxiality and top-eigenvector director (sign-normalized).
DirectorField beta_field(const QField& field);

struct MinNormResult {
  double value = 0.0;
  std::array<int, 3> location{};  // first occurrence, lexicographic (i,j,k)
};

/// Minimum of |Q| over interior nodes.
MinNormResult min_norm(const QField& field);

enum class Classification { melting, biaxial_escape, smooth_uniaxial, ambiguous };

std::string to_string(Classification c);

struct EscapeReport {
  double min_norm = 0.0;
  std::array<int, 3> min_norm_location{};
  double max_beta = 0.0;
  std::array<int, 3> max_beta_location{};
  Classification classification = Classification::ambiguous;
  double tau_melt = 0.0;
  double tau_escape = 0.0;
};

/// Melting / biaxial-escape dichotomy:
///   melting           min|Q| <  tau_melt
///   biaxial_escape    min|Q| >= tau_melt and max beta >= tau_escape
///   smooth_uniaxial   min|Q| >= tau_melt and max beta <  0.5
///   ambiguous         otherwise
EscapeReport classify(const QField& field, double tau_melt = 0.05,
                      double tau_escape = 0.95);

/// Trilinear resample of the field as seen through the zoom x -> center +
/// x/sqrt(t): output node at position x samples the source there. Throws
/// std::domain_error when the rescaled window leaves the source domain.
/// The output carries an all-false boundary mask (analysis object, not a
/// minimization input).
QField blow_up_extract(const QField& field, const Vec3& center, double t,
                       const Grid& out_grid);

/// Quadrature of reduced_h over the grid, with the same trapezoid weights
/// the energy uses.
double h_mass(const QField& field);

}  // namespace ldg
