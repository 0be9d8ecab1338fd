#pragma once

#include "ldg/qtensor.hpp"

namespace ldg {

/// Physical material constants. alpha, b, c, L must be strictly positive;
/// the uniaxial minimum of the bulk density exists for T < Tstar.
struct MaterialParams {
  double alpha;
  double b;
  double c;
  double L;
  double T;
  double Tstar;
};

/// Nondimensional image of MaterialParams.
struct ReducedParams {
  double t;       // reduced temperature, > 0
  double Ltilde;  // reduced elastic constant 3cL/b^2
  double lambda;  // lambda(t)
  double qscale;  // sqrt(3/2)/s_star: physical Q -> reduced Q

  /// Entry point when working in reduced units directly (qscale is then the
  /// identity).
  static ReducedParams from_t(double t, double Ltilde);
};

/// Positive scalar order of the bulk-minimizing uniaxial states,
/// (b + sqrt(b^2 - 24 alpha (T - Tstar) c)) / (4c).
/// Throws std::domain_error for a negative discriminant.
double s_star(const MaterialParams& p);

/// Bulk free energy density
///   alpha (T - Tstar)/2 |Q|^2 - b/3 tr(Q^3) + c/4 |Q|^4.
double bulk_f(const MaterialParams& p, const QTensor& q);

/// lambda(t) = (sqrt(24 t + 1) + 1)/12, asymptotically sqrt(t/6).
/// Throws std::domain_error for t < 0.
double lambda_of_t(double t);

/// Physical -> reduced parameter map; requires T < Tstar.
ReducedParams reduce(const MaterialParams& p);

/// Reduced-units potential
///   h(Q) = 1/6 - (2 sqrt(2)/sqrt(3)) tr(Q^3) + 1/2 |Q|^4.
/// Nonnegative, vanishing exactly on the uniaxial unit-norm manifold
/// sqrt(3/2)(n (x) n - I/3).
double reduced_h(const QTensor& q);

/// Intrinsic (traceless-projected) gradient of reduced_h:
///   -(2 sqrt(2)/sqrt(3)) * 3 (Q^2 - |Q|^2/3 I) + 2 |Q|^2 Q.
QTensor grad_reduced_h(const QTensor& q);

}  // namespace ldg
