#include "ldg/minimize.hpp"

#include <cmath>

namespace ldg {

namespace {

constexpr double kArmijoC = 1e-4;
constexpr double kShrink = 0.5;
constexpr double kStepMin = 1e-20;
constexpr double kStepMax = 1e12;

double dot_fields(const QField& a, const QField& b) {
  double s = 0.0;
  const long count = a.grid.count();
  for (long idx = 0; idx < count; ++idx) {
    for (int c = 0; c < 5; ++c) s += a.values[idx].a[c] * b.values[idx].a[c];
  }
  return s;
}

// x - alpha * g; gradients vanish on boundary nodes, so the boundary data
// passes through bit-identical.
void take_step(const QField& x, const QField& g, double alpha, QField& out) {
  const long count = x.grid.count();
  for (long idx = 0; idx < count; ++idx) {
    for (int c = 0; c < 5; ++c) {
      out.values[idx].a[c] = x.values[idx].a[c] - alpha * g.values[idx].a[c];
    }
  }
}

bool finite(const EnergyBreakdown& e) { return std::isfinite(e.total); }

}  // namespace

std::pair<QField, MinimizeReport> minimize(const QField& field,
                                           const ReducedParams& rp,
                                           const PotentialMode& mode,
                                           const MinimizeOptions& opts) {
  if (!(opts.tol > 0.0) || opts.max_iters < 1 || !(opts.step_init > 0.0)) {
    throw std::invalid_argument("minimize: invalid options");
  }

  QField x = field;
  MinimizeReport report;

  EnergyBreakdown e = energy(x, rp, mode, opts.threads);
  if (!finite(e)) throw numerical_failure("non-finite energy", 0);
  QField g = gradient(x, rp, mode, opts.threads);
  double gg = dot_fields(g, g);
  if (!std::isfinite(gg)) throw numerical_failure("non-finite gradient", 0);
  double res = residual_norm(g);

  report.energy_history.emplace_back(0, e);
  report.converged = res <= opts.tol;

  QField trial = x;
  double alpha = opts.step_init;
  double alpha_next = opts.step_init;

  while (!report.converged && report.iterations < opts.max_iters && gg > 0.0) {
    alpha = std::min(std::max(alpha_next, kStepMin), kStepMax);

    // line search: shrink until the step decreases the energy (Armijo
    // decrease in backtracking mode)
    bool accepted = false;
    EnergyBreakdown e_trial;
    while (alpha >= kStepMin) {
      take_step(x, g, alpha, trial);
      e_trial = energy(trial, rp, mode, opts.threads);
      if (finite(e_trial)) {
        const bool ok = opts.step_rule == StepRule::backtracking
                            ? e_trial.total <= e.total - kArmijoC * alpha * gg
                            : e_trial.total < e.total;
        if (ok) {
          accepted = true;
          break;
        }
      }
      alpha *= kShrink;
    }
    if (!accepted) break;  // no representable decreasing step: stationary

    std::swap(x.values, trial.values);
    e = e_trial;
    ++report.iterations;

    QField g_new = gradient(x, rp, mode, opts.threads);
    const double gg_new = dot_fields(g_new, g_new);
    if (!std::isfinite(gg_new)) {
      throw numerical_failure("non-finite gradient", report.iterations);
    }

    if (opts.step_rule == StepRule::barzilai_borwein) {
      // s = -alpha g, y = g_new - g:  <s,s>/<s,y> in terms of gradients
      const double sy = gg - dot_fields(g, g_new);
      alpha_next = sy > 0.0 ? alpha * gg / sy : opts.step_init;
      if (!std::isfinite(alpha_next) || alpha_next <= 0.0) {
        alpha_next = opts.step_init;
      }
    } else {
      alpha_next = alpha * 2.0;  // let the accepted step grow back
    }

    g = std::move(g_new);
    gg = gg_new;
    res = residual_norm(g);

    if (opts.record_every > 0 && report.iterations % opts.record_every == 0) {
      report.energy_history.emplace_back(report.iterations, e);
    }
    report.converged = res <= opts.tol;
  }

  if (report.energy_history.empty() ||
      report.energy_history.back().first != report.iterations) {
    report.energy_history.emplace_back(report.iterations, e);
  }
  report.final_residual = res;
  return {std::move(x), std::move(report)};
}

MaxNormCheck check_maximum_principle(const QField& field) {
  double m = 0.0;
  for (const auto& q : field.values) m = std::max(m, q.norm2());
  MaxNormCheck out;
  out.max_norm = std::sqrt(m);
  out.ok = out.max_norm <= 1.0 + 1e-3;
  return out;
}

}  // namespace ldg
