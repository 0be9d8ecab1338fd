#include "ldg/energy.hpp"

#include <cmath>
#include <stdexcept>

#include "parallel.hpp"

namespace ldg {

PotentialMode PotentialMode::full(double t) {
  if (!(t > 0.0)) throw std::domain_error("full mode requires t > 0");
  return {Kind::full, t, lambda_of_t(t)};
}

PotentialMode PotentialMode::gl(double kappa) {
  if (!(kappa > 0.0)) throw std::domain_error("gl mode requires kappa > 0");
  return {Kind::gl, kappa, 0.0};
}

namespace {

inline double edge_weight(int i, int n) {
  return (i == 0 || i == n - 1) ? 0.5 : 1.0;
}

struct Terms {
  double elastic = 0.0;
  double gl = 0.0;
  double h = 0.0;
};

}  // namespace

EnergyBreakdown energy(const QField& field, const ReducedParams& rp,
                       const PotentialMode& mode, int threads) {
  const Grid& g = field.grid;
  const int n = g.n;
  const double h = g.spacing();
  const double vol = h * h * h;
  const QTensor* q = field.values.data();

  std::vector<Terms> partial(n);

  // One slab per k index; links in the z direction are attributed to the
  // slab of their lower node.
  detail::for_each_slab(n, threads, [&](int k) {
    Terms acc;
    const double wk = edge_weight(k, n);
    for (int j = 0; j < n; ++j) {
      const double wj = edge_weight(j, n);
      const long row = g.index(0, j, k);
      for (int i = 0; i < n; ++i) {
        const long idx = row + i;
        const double wi = edge_weight(i, n);

        // potential terms, nodal trapezoid quadrature
        const double w = wi * wj * wk;
        const double n2 = q[idx].norm2();
        const double dev = n2 - 1.0;
        acc.gl += w * dev * dev;
        if (mode.kind == PotentialMode::Kind::full) {
          acc.h += w * reduced_h(q[idx]);
        }

        // forward-difference links, midpoint along the link, trapezoid
        // weights in the transverse directions
        if (i + 1 < n) {
          double s = 0.0;
          for (int c = 0; c < 5; ++c) {
            const double d = q[idx + 1].a[c] - q[idx].a[c];
            s += d * d;
          }
          acc.elastic += wj * wk * s;
        }
        if (j + 1 < n) {
          double s = 0.0;
          for (int c = 0; c < 5; ++c) {
            const double d = q[idx + n].a[c] - q[idx].a[c];
            s += d * d;
          }
          acc.elastic += wi * wk * s;
        }
        if (k + 1 < n) {
          double s = 0.0;
          const long up = idx + static_cast<long>(n) * n;
          for (int c = 0; c < 5; ++c) {
            const double d = q[up].a[c] - q[idx].a[c];
            s += d * d;
          }
          acc.elastic += wi * wj * s;
        }
      }
    }
    partial[k] = acc;
  });

  Terms sum;
  for (int k = 0; k < n; ++k) {
    sum.elastic += partial[k].elastic;
    sum.gl += partial[k].gl;
    sum.h += partial[k].h;
  }

  EnergyBreakdown out;
  out.elastic = 0.5 * rp.Ltilde * sum.elastic / (h * h) * vol;
  out.gl = 0.5 * mode.gl_coeff * sum.gl * vol;
  out.hterm = mode.h_coeff * sum.h * vol;
  out.total = out.elastic + out.gl + out.hterm;
  return out;
}

QField gradient(const QField& field, const ReducedParams& rp,
                const PotentialMode& mode, int threads) {
  const Grid& g = field.grid;
  const int n = g.n;
  const double h = g.spacing();
  const double vol = h * h * h;
  const double lap_scale = rp.Ltilde * vol / (h * h);
  const QTensor* q = field.values.data();

  QField out(g);
  QTensor* r = out.values.data();
  const long nn = static_cast<long>(n) * n;

  detail::for_each_slab(n - 2, threads, [&](int slab) {
    const int k = slab + 1;
    for (int j = 1; j < n - 1; ++j) {
      for (int i = 1; i < n - 1; ++i) {
        const long idx = g.index(i, j, k);
        const QTensor& c = q[idx];
        const double n2 = c.norm2();
        QTensor grad = grad_reduced_h(c);
        const double glc = 2.0 * mode.gl_coeff * (n2 - 1.0);
        for (int d = 0; d < 5; ++d) {
          // -Ltilde * (7-point Laplacian), every neighbor weight 1 for an
          // interior node
          const double lap = q[idx - 1].a[d] + q[idx + 1].a[d] +
                             q[idx - n].a[d] + q[idx + n].a[d] +
                             q[idx - nn].a[d] + q[idx + nn].a[d] -
                             6.0 * c.a[d];
          r[idx].a[d] = -lap_scale * lap +
                        vol * (glc * c.a[d] + mode.h_coeff * grad.a[d]);
        }
      }
    }
  });
  return out;
}

double residual_norm(const QField& gfield) {
  double ss = 0.0;
  long count = 0;
  for (long idx = 0; idx < gfield.grid.count(); ++idx) {
    if (gfield.boundary[idx]) continue;
    ss += gfield.values[idx].norm2();
    ++count;
  }
  if (count == 0) return 0.0;
  return std::sqrt(ss / (5.0 * static_cast<double>(count)));
}

}  // namespace ldg
