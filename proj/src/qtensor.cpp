#include "ldg/qtensor.hpp"

#include <algorithm>
#include <stdexcept>

namespace ldg {

namespace {
constexpr double kSqrt2 = 1.4142135623730950488;
constexpr double kSqrt6 = 2.4494897427831780982;
}  // namespace

Mat3 QTensor::matrix() const {
  const double d1 = a[0] / kSqrt2;
  const double d2 = a[1] / kSqrt6;
  const double u = a[2] / kSqrt2;   // xy
  const double v = a[3] / kSqrt2;   // xz
  const double w = a[4] / kSqrt2;   // yz
  return {d1 + d2, u,        v,
          u,       -d1 + d2, w,
          v,       w,        -2.0 * d2};
}

QTensor QTensor::from_matrix(const Mat3& m) {
  const double tr3 = (m[0] + m[4] + m[8]) / 3.0;
  const double p = m[0] - tr3;
  const double q = m[4] - tr3;
  const double r = m[8] - tr3;
  QTensor out;
  out.a[0] = (p - q) / kSqrt2;
  out.a[1] = (p + q - 2.0 * r) / kSqrt6;
  out.a[2] = kSqrt2 * 0.5 * (m[1] + m[3]);
  out.a[3] = kSqrt2 * 0.5 * (m[2] + m[6]);
  out.a[4] = kSqrt2 * 0.5 * (m[5] + m[7]);
  return out;
}

double QTensor::trace_cubed() const {
  // tr(Q^3) = 3 det(Q) for traceless symmetric Q.
  const double d1 = a[0] / kSqrt2;
  const double d2 = a[1] / kSqrt6;
  const double p = d1 + d2;
  const double q = -d1 + d2;
  const double r = -2.0 * d2;
  const double u = a[2] / kSqrt2;
  const double v = a[3] / kSqrt2;
  const double w = a[4] / kSqrt2;
  const double det =
      p * (q * r - w * w) - u * (u * r - w * v) + v * (u * w - q * v);
  return 3.0 * det;
}

QTensor from_director(const Vec3& n, double s) {
  if (std::abs(dot(n, n) - 1.0) > 2e-12) {
    throw std::invalid_argument("from_director: director must be a unit vector");
  }
  Mat3 m;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      m[3 * i + j] = s * (n[i] * n[j] - (i == j ? 1.0 / 3.0 : 0.0));
    }
  }
  return QTensor::from_matrix(m);
}

Mat3 basis_matrix(int i) {
  QTensor q;
  q.a[i] = 1.0;
  return q.matrix();
}

namespace {

// Sign convention: first component of magnitude > 1e-12 is made positive.
Vec3 sign_normalized(Vec3 v) {
  for (int i = 0; i < 3; ++i) {
    if (std::abs(v[i]) > 1e-12) {
      if (v[i] < 0.0) return {-v[0], -v[1], -v[2]};
      return v;
    }
  }
  return v;
}

Vec3 row(const Mat3& m, int i) { return {m[3 * i], m[3 * i + 1], m[3 * i + 2]}; }

Vec3 mul(const Mat3& m, const Vec3& x) {
  return {m[0] * x[0] + m[1] * x[1] + m[2] * x[2],
          m[3] * x[0] + m[4] * x[1] + m[5] * x[2],
          m[6] * x[0] + m[7] * x[1] + m[8] * x[2]};
}

// Eigenvector for a simple eigenvalue: the largest cross product of two rows
// of (A - eval I) spans the (one-dimensional) orthogonal complement of its
// row space.
Vec3 eigenvector_simple(const Mat3& a, double eval) {
  Mat3 b = a;
  b[0] -= eval;
  b[4] -= eval;
  b[8] -= eval;
  const Vec3 r0 = row(b, 0), r1 = row(b, 1), r2 = row(b, 2);
  const Vec3 c01 = cross(r0, r1), c02 = cross(r0, r2), c12 = cross(r1, r2);
  const double n01 = dot(c01, c01), n02 = dot(c02, c02), n12 = dot(c12, c12);
  Vec3 best = c01;
  double nb = n01;
  if (n02 > nb) { best = c02; nb = n02; }
  if (n12 > nb) { best = c12; nb = n12; }
  const double r = std::sqrt(nb);
  return {best[0] / r, best[1] / r, best[2] / r};
}

// Orthonormal basis {u, v} of the plane orthogonal to unit w.
void orthogonal_complement(const Vec3& w, Vec3& u, Vec3& v) {
  if (std::abs(w[0]) > std::abs(w[1])) {
    const double inv = 1.0 / std::sqrt(w[0] * w[0] + w[2] * w[2]);
    u = {-w[2] * inv, 0.0, w[0] * inv};
  } else {
    const double inv = 1.0 / std::sqrt(w[1] * w[1] + w[2] * w[2]);
    u = {0.0, w[2] * inv, -w[1] * inv};
  }
  v = cross(w, u);
}

// Eigenvector for `eval` restricted to the plane orthogonal to w0; robust
// when the remaining two eigenvalues are close.
Vec3 eigenvector_in_complement(const Mat3& a, double eval, const Vec3& w0) {
  Vec3 u, v;
  orthogonal_complement(w0, u, v);
  const Vec3 au = mul(a, u), av = mul(a, v);
  double m00 = dot(u, au) - eval;
  double m01 = dot(u, av);
  double m11 = dot(v, av) - eval;
  const double abs00 = std::abs(m00), abs01 = std::abs(m01), abs11 = std::abs(m11);
  if (abs00 >= abs11) {
    if (std::max(abs00, abs01) > 0.0) {
      if (abs00 >= abs01) {
        m01 /= m00;
        m00 = 1.0 / std::sqrt(1.0 + m01 * m01);
        m01 *= m00;
      } else {
        m00 /= m01;
        m01 = 1.0 / std::sqrt(1.0 + m00 * m00);
        m00 *= m01;
      }
      return {m01 * u[0] - m00 * v[0], m01 * u[1] - m00 * v[1],
              m01 * u[2] - m00 * v[2]};
    }
    return u;
  }
  if (std::max(abs11, abs01) > 0.0) {
    if (abs11 >= abs01) {
      m01 /= m11;
      m11 = 1.0 / std::sqrt(1.0 + m01 * m01);
      m01 *= m11;
    } else {
      m11 /= m01;
      m01 = 1.0 / std::sqrt(1.0 + m11 * m11);
      m11 *= m01;
    }
    return {m11 * u[0] - m01 * v[0], m11 * u[1] - m01 * v[1],
            m11 * u[2] - m01 * v[2]};
  }
  return u;
}

}  // namespace

EigenSystem eigensystem(const QTensor& q) {
  Mat3 a = q.matrix();
  double scale = 0.0;
  for (double x : a) scale = std::max(scale, std::abs(x));
  if (scale == 0.0) {
    return {{0.0, 0.0, 0.0}, {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}}};
  }
  for (double& x : a) x /= scale;

  const double p1 = a[1] * a[1] + a[2] * a[2] + a[5] * a[5];
  std::array<double, 3> ev;
  std::array<Vec3, 3> vec;
  if (p1 == 0.0) {
    // Already diagonal.
    std::array<int, 3> idx = {0, 1, 2};
    const std::array<double, 3> d = {a[0], a[4], a[8]};
    std::sort(idx.begin(), idx.end(), [&](int l, int r) { return d[l] > d[r]; });
    for (int i = 0; i < 3; ++i) {
      ev[i] = d[idx[i]];
      vec[i] = Vec3{0, 0, 0};
      vec[i][idx[i]] = 1.0;
    }
  } else {
    const double trace = a[0] + a[4] + a[8];
    const double qm = trace / 3.0;
    const double p2 = (a[0] - qm) * (a[0] - qm) + (a[4] - qm) * (a[4] - qm) +
                      (a[8] - qm) * (a[8] - qm) + 2.0 * p1;
    const double p = std::sqrt(p2 / 6.0);
    Mat3 b;
    for (int i = 0; i < 9; ++i) b[i] = a[i] / p;
    b[0] -= qm / p;
    b[4] -= qm / p;
    b[8] -= qm / p;
    const double detb = b[0] * (b[4] * b[8] - b[5] * b[7]) -
                        b[1] * (b[3] * b[8] - b[5] * b[6]) +
                        b[2] * (b[3] * b[7] - b[4] * b[6]);
    const double r = std::clamp(detb / 2.0, -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    const double e0 = qm + 2.0 * p * std::cos(phi);
    const double e2 = qm + 2.0 * p * std::cos(phi + 2.0 * M_PI / 3.0);
    const double e1 = 3.0 * qm - e0 - e2;
    ev = {e0, e1, e2};
    // Resolve the best-separated eigenvalue first; the middle one is found
    // inside the orthogonal complement, which stays stable when the other
    // two nearly coincide.
    if (r >= 0.0) {
      vec[0] = eigenvector_simple(a, ev[0]);
      vec[1] = eigenvector_in_complement(a, ev[1], vec[0]);
      vec[2] = cross(vec[0], vec[1]);
    } else {
      vec[2] = eigenvector_simple(a, ev[2]);
      vec[1] = eigenvector_in_complement(a, ev[1], vec[2]);
      vec[0] = cross(vec[1], vec[2]);
    }
  }

  EigenSystem out;
  for (int i = 0; i < 3; ++i) {
    out.values[i] = ev[i] * scale;
    out.vectors[i] = sign_normalized(vec[i]);
  }
  return out;
}

}  // namespace ldg
