#include "ldg/sweep.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <limits>

namespace ldg {

namespace {

QField build_boundary(const SweepConfig& cfg) {
  const Grid grid(cfg.n, cfg.half_width);
  return cfg.boundary == BoundaryKind::hedgehog
             ? hedgehog_boundary(grid)
             : constant_boundary(grid, normalized(cfg.n0));
}

QField build_base_init(const SweepConfig& cfg, const QField& boundary_field) {
  if (cfg.init == InitKind::ansatz) {
    return init_radial_ansatz(boundary_field, cfg.effective_core_radius());
  }
  QField f = boundary_field;
  const QTensor q = from_director(normalized(cfg.n0), std::sqrt(1.5));
  for (long idx = 0; idx < f.grid.count(); ++idx) {
    if (!f.boundary[idx]) f.values[idx] = q;
  }
  return f;
}

std::string field_filename(double t, std::uint64_t seed) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "field_t%g_seed%llu.vtk", t,
                static_cast<unsigned long long>(seed));
  return buf;
}

struct RunOutput {
  SweepRecord record;
  QField field;
};

RunOutput run_one(const SweepConfig& cfg, const QField& base,
                  const ReducedParams& rp, std::uint64_t seed) {
  const double t = rp.t;
  MinimizeOptions opts;
  opts.max_iters = cfg.max_iters;
  opts.tol = cfg.tol_for(t);
  opts.step_init = cfg.step_init;
  opts.step_rule = cfg.step_rule;
  opts.record_every = cfg.record_every;
  opts.threads = cfg.threads;

  RunOutput out;
  out.record.t = t;
  out.record.Ltilde = rp.Ltilde;
  out.record.lambda = rp.lambda;
  out.record.seed = seed;

  const QField init = seed == 0 ? base : init_random(base, seed, cfg.amplitude);

  const auto start = std::chrono::steady_clock::now();
  try {
    auto [field, report] =
        minimize(init, rp, cfg.potential_at(t), opts);
    out.record.energy = energy(field, rp, cfg.potential_at(t), cfg.threads);
    const EscapeReport esc = classify(field, cfg.tau_melt, cfg.tau_escape);
    out.record.min_norm = esc.min_norm;
    out.record.min_loc = esc.min_norm_location;
    out.record.max_beta = esc.max_beta;
    out.record.beta_loc = esc.max_beta_location;
    out.record.classification = esc.classification;
    out.record.h_mass = h_mass(field);
    out.record.iterations = report.iterations;
    out.record.residual = report.final_residual;
    out.record.converged = report.converged;
    out.record.max_norm = check_maximum_principle(field).max_norm;
    out.field = std::move(field);
  } catch (const numerical_failure& ex) {
    const double qnan = std::numeric_limits<double>::quiet_NaN();
    out.record.failed = true;
    out.record.energy = {qnan, qnan, qnan, qnan};
    out.record.min_norm = qnan;
    out.record.max_beta = qnan;
    out.record.h_mass = qnan;
    out.record.residual = qnan;
    out.record.iterations = ex.iteration();
    out.field = init;
  }
  out.record.wall_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return out;
}

// lower total wins; ties within 1e-10 relative go to the lower seed
bool better_than(const SweepRecord& a, const SweepRecord& b) {
  if (b.failed) return !a.failed;
  if (a.failed) return false;
  const double scale = std::max({std::abs(a.energy.total),
                                 std::abs(b.energy.total), 1.0});
  if (std::abs(a.energy.total - b.energy.total) <= 1e-10 * scale) {
    return a.seed < b.seed;
  }
  return a.energy.total < b.energy.total;
}

void dump_field(const SweepConfig& cfg, const QField& field, double t,
                std::uint64_t seed) {
  const auto path =
      std::filesystem::path(cfg.out_dir) / field_filename(t, seed);
  write_field_vtk(field, beta_field(field), path.string());
}

void ensure_out_dir(const SweepConfig& cfg) {
  std::error_code ec;
  std::filesystem::create_directories(cfg.out_dir, ec);
  if (ec) throw io_error("cannot create output directory", cfg.out_dir);
}

}  // namespace

SweepRecord run_single(const SweepConfig& cfg) {
  const auto ts = cfg.reduced_t_list();
  if (ts.size() != 1 || cfg.seeds.size() != 1) {
    throw config_error("run expects exactly one temperature and one seed");
  }
  ensure_out_dir(cfg);
  const QField boundary_field = build_boundary(cfg);
  const QField base = build_base_init(cfg, boundary_field);
  RunOutput out = run_one(cfg, base, cfg.reduced_at(0), cfg.seeds[0]);
  if (!out.record.failed) dump_field(cfg, out.field, ts[0], cfg.seeds[0]);
  write_summary_csv({out.record},
                    (std::filesystem::path(cfg.out_dir) / "summary.csv").string());
  if (out.record.failed) {
    throw numerical_failure("minimization failed", out.record.iterations);
  }
  return out.record;
}

SweepResult run_sweep(const SweepConfig& cfg) {
  ensure_out_dir(cfg);
  const auto ts = cfg.reduced_t_list();
  const QField boundary_field = build_boundary(cfg);
  QField base = build_base_init(cfg, boundary_field);

  SweepResult result;
  for (std::size_t row = 0; row < ts.size(); ++row) {
    const ReducedParams rp = cfg.reduced_at(row);
    const double t = rp.t;
    bool have_best = false;
    SweepRecord best_rec;
    QField best_field;
    for (std::uint64_t seed : cfg.seeds) {
      RunOutput out = run_one(cfg, base, rp, seed);
      if (out.record.failed) ++result.failures;
      if (cfg.dump_all && !out.record.failed) {
        dump_field(cfg, out.field, t, seed);
      }
      if (!have_best || better_than(out.record, best_rec)) {
        best_rec = out.record;
        best_field = std::move(out.field);
        have_best = true;
      }
      result.records.push_back(out.record);
    }
    if (have_best && !best_rec.failed) {
      if (!cfg.dump_all) dump_field(cfg, best_field, t, best_rec.seed);
      if (cfg.warm_start) base = best_field;
      result.best_per_t.push_back(best_rec);
      result.best_fields.push_back(std::move(best_field));
    }
  }

  write_summary_csv(result.records,
                    (std::filesystem::path(cfg.out_dir) / "summary.csv").string());
  write_summary_csv(result.best_per_t,
                    (std::filesystem::path(cfg.out_dir) / "best.csv").string());
  return result;
}

}  // namespace ldg
