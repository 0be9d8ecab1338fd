#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace ldg {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<double, 9>;  // row-major 3x3

inline double dot(const Vec3& u, const Vec3& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

inline Vec3 cross(const Vec3& u, const Vec3& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
          u[0] * v[1] - u[1] * v[0]};
}

inline double norm(const Vec3& u) { return std::sqrt(dot(u, u)); }

inline Vec3 normalized(const Vec3& u) {
  const double r = norm(u);
  return {u[0] / r, u[1] / r, u[2] / r};
}

/// Point of the five-dimensional space of symmetric traceless 3x3 matrices,
/// stored as coordinates in the orthonormal basis
///   E1 = diag(1,-1,0)/sqrt(2)
///   E2 = diag(1,1,-2)/sqrt(6)
///   E3, E4, E5 = the symmetric off-diagonal pairs (xy, xz, yz), entries 1/sqrt(2).
/// Orthonormality makes the Frobenius norm a plain sum of squares of the
/// coordinates, and intrinsic gradients coordinate-wise.
struct QTensor {
  std::array<double, 5> a{};

  double& operator[](std::size_t i) { return a[i]; }
  double operator[](std::size_t i) const { return a[i]; }

  double norm2() const {
    return a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3] + a[4] * a[4];
  }
  double norm() const { return std::sqrt(norm2()); }

  /// Reconstructed symmetric traceless matrix.
  Mat3 matrix() const;

  /// Orthogonal projection of a (symmetric) matrix onto the traceless
  /// subspace, expressed in basis coordinates.
  static QTensor from_matrix(const Mat3& m);

  /// tr(Q^3); equals 3 det(Q) for traceless Q.
  double trace_cubed() const;

  QTensor& operator+=(const QTensor& o) {
    for (int i = 0; i < 5; ++i) a[i] += o.a[i];
    return *this;
  }
  QTensor& operator-=(const QTensor& o) {
    for (int i = 0; i < 5; ++i) a[i] -= o.a[i];
    return *this;
  }
  QTensor& operator*=(double s) {
    for (int i = 0; i < 5; ++i) a[i] *= s;
    return *this;
  }
  friend QTensor operator+(QTensor l, const QTensor& r) { return l += r; }
  friend QTensor operator-(QTensor l, const QTensor& r) { return l -= r; }
  friend QTensor operator*(double s, QTensor q) { return q *= s; }
  friend QTensor operator*(QTensor q, double s) { return q *= s; }
};

/// The uniaxial tensor s (n (x) n - I/3) for a unit director n.
/// Eigenvalues are {2s/3, -s/3, -s/3}; throws std::invalid_argument when
/// |n| deviates from 1 by more than 1e-12.
QTensor from_director(const Vec3& n, double s);

/// Basis matrix E1..E5 (i in 0..4); mostly useful for tests.
Mat3 basis_matrix(int i);

struct EigenSystem {
  std::array<double, 3> values;  // sorted descending
  std::array<Vec3, 3> vectors;   // orthonormal, matching order
};

/// Closed-form symmetric 3x3 eigendecomposition. Eigenvectors are
/// sign-normalized so their first component of magnitude > 1e-12 is
/// positive, which keeps director fields reproducible across runs.
/// Degenerate spectra return an arbitrary valid orthonormal frame.
EigenSystem eigensystem(const QTensor& q);

}  // namespace ldg
