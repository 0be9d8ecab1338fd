#include "ldg/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

namespace ldg {

namespace {
constexpr double kDegenerateNorm = 1e-8;
}

double biaxiality(const QTensor& q) {
  const double n2 = q.norm2();
  if (n2 <= kDegenerateNorm * kDegenerateNorm) return 0.0;
  const double tc = q.trace_cubed();
  const double beta = 1.0 - 6.0 * tc * tc / (n2 * n2 * n2);
  return beta < 0.0 ? 0.0 : beta;  // clip roundoff on exact uniaxials
}

DirectorField beta_field(const QField& field) {
  const Grid& g = field.grid;
  DirectorField out;
  out.grid = g;
  out.directors.resize(g.count());
  out.beta.resize(g.count());
  out.degenerate.assign(g.count(), 0);
  for (long idx = 0; idx < g.count(); ++idx) {
    const QTensor& q = field.values[idx];
    if (q.norm() <= kDegenerateNorm) {
      out.directors[idx] = {0.0, 0.0, 1.0};
      out.beta[idx] = 0.0;
      out.degenerate[idx] = 1;
      continue;
    }
    out.directors[idx] = eigensystem(q).vectors[0];
    out.beta[idx] = biaxiality(q);
  }
  return out;
}

MinNormResult min_norm(const QField& field) {
  const Grid& g = field.grid;
  MinNormResult best;
  bool found = false;
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      for (int k = 0; k < g.n; ++k) {
        const long idx = g.index(i, j, k);
        if (field.boundary[idx]) continue;
        const double v = field.values[idx].norm();
        if (!found || v < best.value) {
          best.value = v;
          best.location = {i, j, k};
          found = true;
        }
      }
  return best;
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::melting: return "melting";
    case Classification::biaxial_escape: return "biaxial_escape";
    case Classification::smooth_uniaxial: return "smooth_uniaxial";
    default: return "ambiguous";
  }
}

EscapeReport classify(const QField& field, double tau_melt, double tau_escape) {
  if (!(tau_melt > 0.0 && tau_melt < 1.0) ||
      !(tau_escape > 0.0 && tau_escape < 1.0)) {
    throw std::invalid_argument("classify: thresholds must lie in (0, 1)");
  }
  const Grid& g = field.grid;
  EscapeReport rep;
  rep.tau_melt = tau_melt;
  rep.tau_escape = tau_escape;

  const MinNormResult mn = min_norm(field);
  rep.min_norm = mn.value;
  rep.min_norm_location = mn.location;

  rep.max_beta = -1.0;
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      for (int k = 0; k < g.n; ++k) {
        const double b = biaxiality(field.values[g.index(i, j, k)]);
        if (b > rep.max_beta) {
          rep.max_beta = b;
          rep.max_beta_location = {i, j, k};
        }
      }

  if (rep.min_norm < tau_melt) {
    rep.classification = Classification::melting;
  } else if (rep.max_beta >= tau_escape) {
    rep.classification = Classification::biaxial_escape;
  } else if (rep.max_beta < 0.5) {
    rep.classification = Classification::smooth_uniaxial;
  } else {
    rep.classification = Classification::ambiguous;
  }
  return rep;
}

QField blow_up_extract(const QField& field, const Vec3& center, double t,
                       const Grid& out_grid) {
  if (!(t > 0.0)) throw std::domain_error("blow_up_extract: t must be positive");
  const Grid& src = field.grid;
  const double inv_sqrt_t = 1.0 / std::sqrt(t);
  const double hw = src.half_width;
  const double h = src.spacing();
  const double pad = 1e-12 * std::max(1.0, hw);

  QField out;
  out.grid = out_grid;
  out.values.resize(out_grid.count());
  out.boundary.assign(out_grid.count(), 0);

  for (int k = 0; k < out_grid.n; ++k)
    for (int j = 0; j < out_grid.n; ++j)
      for (int i = 0; i < out_grid.n; ++i) {
        Vec3 p;
        const Vec3 x = out_grid.position(i, j, k);
        for (int d = 0; d < 3; ++d) {
          p[d] = center[d] + x[d] * inv_sqrt_t;
          if (p[d] < -hw - pad || p[d] > hw + pad) {
            throw std::domain_error(
                "blow_up_extract: rescaled window leaves the source domain");
          }
        }
        // cell containing p, clamped so boundary samples stay valid
        int ci[3];
        double f[3];
        for (int d = 0; d < 3; ++d) {
          double rel = (p[d] + hw) / h;
          int c = static_cast<int>(std::floor(rel));
          c = std::min(std::max(c, 0), src.n - 2);
          ci[d] = c;
          f[d] = std::min(std::max(rel - c, 0.0), 1.0);
        }
        QTensor acc{};
        for (int dz = 0; dz < 2; ++dz)
          for (int dy = 0; dy < 2; ++dy)
            for (int dx = 0; dx < 2; ++dx) {
              const double w = (dx ? f[0] : 1.0 - f[0]) *
                               (dy ? f[1] : 1.0 - f[1]) *
                               (dz ? f[2] : 1.0 - f[2]);
              if (w == 0.0) continue;
              const QTensor& v =
                  field.at(ci[0] + dx, ci[1] + dy, ci[2] + dz);
              for (int c = 0; c < 5; ++c) acc.a[c] += w * v.a[c];
            }
        out.values[out_grid.index(i, j, k)] = acc;
      }
  return out;
}

double h_mass(const QField& field) {
  const Grid& g = field.grid;
  const int n = g.n;
  const double h = g.spacing();
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    const double wk = (k == 0 || k == n - 1) ? 0.5 : 1.0;
    for (int j = 0; j < n; ++j) {
      const double wjk = wk * ((j == 0 || j == n - 1) ? 0.5 : 1.0);
      for (int i = 0; i < n; ++i) {
        const double w = wjk * ((i == 0 || i == n - 1) ? 0.5 : 1.0);
        sum += w * reduced_h(field.values[g.index(i, j, k)]);
      }
    }
  }
  return sum * h * h * h;
}

}  // namespace ldg
