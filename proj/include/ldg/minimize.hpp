#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ldg/energy.hpp"

namespace ldg {

/// Raised when a non-finite energy or gradient appears during descent.
class numerical_failure : public std::runtime_error {
 public:
  numerical_failure(const std::string& what, long iteration)
      : std::runtime_error(what + " (iteration " + std::to_string(iteration) + ")"),
        iteration_(iteration) {}
  long iteration() const { return iteration_; }

 private:
  long iteration_;
};

enum class StepRule {
  barzilai_borwein,  // BB1 step with a simple-decrease safeguard
  backtracking,      // Armijo: c = 1e-4, shrink = 0.5
};

struct MinimizeOptions {
  long max_iters = 20000;
  double tol = 1e-6;       // residual_norm threshold, > 0
  double step_init = 1.0;  // first trial step
  StepRule step_rule = StepRule::barzilai_borwein;
  long record_every = 100;  // history cadence
  int threads = 1;
};

struct MinimizeReport {
  long iterations = 0;
  double final_residual = 0.0;
  std::vector<std::pair<long, EnergyBreakdown>> energy_history;
  bool converged = false;
};

/// Descent over interior nodes with the boundary frozen. Accepted steps
/// strictly decrease the total energy; returns once the gradient RMS falls
/// below tol, the iteration budget runs out, or no decreasing step of
/// representable size exists.
std::pair<QField, MinimizeReport> minimize(const QField& field,
                                           const ReducedParams& rp,
                                           const PotentialMode& mode,
                                           const MinimizeOptions& opts);

struct MaxNormCheck {
  double max_norm = 0.0;
  bool ok = false;  // max_norm <= 1 + 1e-3
};

/// Largest nodal |Q|, and whether it respects the unit bound that
/// minimizers in reduced units satisfy (with O(spacing^2) discrete slack).
MaxNormCheck check_maximum_principle(const QField& field);

}  // namespace ldg
