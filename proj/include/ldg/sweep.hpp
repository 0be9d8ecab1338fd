#pragma once

#include <vector>

#include "ldg/boundary.hpp"
#include "ldg/config.hpp"
#include "ldg/io.hpp"
#include "ldg/minimize.hpp"
#include "ldg/sweep_record.hpp"

namespace ldg {

struct SweepResult {
  std::vector<SweepRecord> records;     // one per (t, seed), sorted
  std::vector<SweepRecord> best_per_t;  // lowest total per t; ties -> lower seed
  std::vector<QField> best_fields;      // parallel to best_per_t
  int failures = 0;                     // runs that raised numerical_failure
};

/// One minimization for the config's single (t, seed); writes the field dump
/// and a one-row summary table into cfg.out_dir. Throws config_error when
/// the config holds more than one temperature or seed.
SweepRecord run_single(const SweepConfig& cfg);

/// Ascending-temperature sweep over all (t, seed) pairs. Writes
/// summary.csv (all rows), best.csv (best per t) and field dumps for the
/// best run per t (all runs with cfg.dump_all). When cfg.warm_start is set,
/// each temperature after the first starts from the previous best field;
/// seed 0 runs the base initialization unperturbed, other seeds add the
/// configured perturbation. Numerical failures are recorded in their row
/// and the sweep continues.
SweepResult run_sweep(const SweepConfig& cfg);

}  // namespace ldg
