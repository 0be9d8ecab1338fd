#pragma once

#include "ldg/field.hpp"
#include "ldg/potential.hpp"

namespace ldg {

/// Per-term decomposition of the discrete free energy.
struct EnergyBreakdown {
  double elastic = 0.0;  // (Ltilde/2) integral |grad Q|^2
  double gl = 0.0;       // (t/2) or (kappa/2) integral (|Q|^2 - 1)^2
  double hterm = 0.0;    // lambda(t) integral h(Q); zero in gl mode
  double total = 0.0;
};

/// Potential selector: `full` is the reduced free energy with both the
/// Ginzburg-Landau term (coefficient t/2) and the h-term (coefficient
/// lambda(t)); `gl` drops the h-term and applies kappa/2 to (|Q|^2-1)^2,
/// which covers the blow-up (kappa = 1) and blow-down (kappa = R^2) limits.
struct PotentialMode {
  enum class Kind { full, gl };
  Kind kind;
  double gl_coeff;  // t in full mode, kappa in gl mode
  double h_coeff;   // lambda(t) in full mode, 0 in gl mode

  static PotentialMode full(double t);
  static PotentialMode gl(double kappa);
};

/// Discrete free energy of the field. The elastic term uses forward
/// differences on grid links (midpoint rule along the link, trapezoid
/// weights transversally); the potential terms use nodal quadrature with
/// trapezoid boundary weights (1/2 faces, 1/4 edges, 1/8 corners). Partial
/// sums combine in a fixed slab order, so totals are bit-identical for any
/// thread count.
EnergyBreakdown energy(const QField& field, const ReducedParams& rp,
                       const PotentialMode& mode, int threads = 1);

/// Exact derivative of the discrete energy with respect to every interior
/// node's five coordinates (7-point Laplacian for the elastic part plus the
/// pointwise potential terms, times the node quadrature weight). Boundary
/// nodes get zero.
QField gradient(const QField& field, const ReducedParams& rp,
                const PotentialMode& mode, int threads = 1);

/// Root-mean-square of the interior-node gradient entries.
double residual_norm(const QField& g);

}  // namespace ldg
