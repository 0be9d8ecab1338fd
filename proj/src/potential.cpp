#include "ldg/potential.hpp"

#include <cmath>
#include <stdexcept>

namespace ldg {

namespace {
constexpr double kSqrt2 = 1.4142135623730950488;
constexpr double kSqrt6 = 2.4494897427831780982;
// 2 sqrt(2)/sqrt(3)
constexpr double kCubicCoeff = 1.6329931618554520654;

void check_positive(const MaterialParams& p) {
  if (!(p.alpha > 0.0) || !(p.b > 0.0) || !(p.c > 0.0) || !(p.L > 0.0)) {
    throw std::invalid_argument("material constants alpha, b, c, L must be positive");
  }
}
}  // namespace

ReducedParams ReducedParams::from_t(double t, double Ltilde) {
  if (!(t > 0.0)) throw std::domain_error("reduced temperature must be positive");
  if (!(Ltilde > 0.0)) throw std::domain_error("reduced elastic constant must be positive");
  return {t, Ltilde, lambda_of_t(t), 1.0};
}

double s_star(const MaterialParams& p) {
  check_positive(p);
  const double disc = p.b * p.b - 24.0 * p.alpha * (p.T - p.Tstar) * p.c;
  if (disc < 0.0) {
    throw std::domain_error("s_star: temperature above the admissible range");
  }
  return (p.b + std::sqrt(disc)) / (4.0 * p.c);
}

double bulk_f(const MaterialParams& p, const QTensor& q) {
  const double n2 = q.norm2();
  return 0.5 * p.alpha * (p.T - p.Tstar) * n2 - p.b / 3.0 * q.trace_cubed() +
         0.25 * p.c * n2 * n2;
}

double lambda_of_t(double t) {
  if (t < 0.0) throw std::domain_error("lambda_of_t: t must be nonnegative");
  return (std::sqrt(24.0 * t + 1.0) + 1.0) / 12.0;
}

ReducedParams reduce(const MaterialParams& p) {
  check_positive(p);
  if (!(p.T < p.Tstar)) {
    throw std::domain_error("reduce: requires T < Tstar");
  }
  ReducedParams rp;
  rp.t = -p.alpha * (p.T - p.Tstar) * p.c / (p.b * p.b);
  rp.Ltilde = 3.0 * p.c * p.L / (p.b * p.b);
  rp.lambda = lambda_of_t(rp.t);
  rp.qscale = std::sqrt(1.5) / s_star(p);
  return rp;
}

double reduced_h(const QTensor& q) {
  const double n2 = q.norm2();
  return 1.0 / 6.0 - kCubicCoeff * q.trace_cubed() + 0.5 * n2 * n2;
}

QTensor grad_reduced_h(const QTensor& q) {
  // Work on the unique entries of the symmetric matrix.
  const double d1 = q.a[0] / kSqrt2;
  const double d2 = q.a[1] / kSqrt6;
  const double p = d1 + d2;
  const double s = -d1 + d2;
  const double r = -2.0 * d2;
  const double u = q.a[2] / kSqrt2;
  const double v = q.a[3] / kSqrt2;
  const double w = q.a[4] / kSqrt2;

  const double n2 = q.norm2();
  // Q^2 (symmetric): diagonal and off-diagonal unique entries.
  const double m00 = p * p + u * u + v * v;
  const double m11 = u * u + s * s + w * w;
  const double m22 = v * v + w * w + r * r;
  const double m01 = p * u + u * s + v * w;
  const double m02 = p * v + u * w + v * r;
  const double m12 = u * v + s * w + w * r;

  // -3 kCubicCoeff (Q^2 - |Q|^2/3 I) + 2 |Q|^2 Q, in basis coordinates.
  const double c3 = -3.0 * kCubicCoeff;
  QTensor g;
  g.a[0] = c3 * (m00 - m11) / kSqrt2;
  g.a[1] = c3 * (m00 + m11 - 2.0 * m22) / kSqrt6;
  g.a[2] = c3 * kSqrt2 * m01;
  g.a[3] = c3 * kSqrt2 * m02;
  g.a[4] = c3 * kSqrt2 * m12;
  const double gl = 2.0 * n2;
  for (int i = 0; i < 5; ++i) g.a[i] += gl * q.a[i];
  return g;
}

}  // namespace ldg
