#pragma once

#include <array>
#include <cstdint>

#include "ldg/diagnostics.hpp"
#include "ldg/energy.hpp"

namespace ldg {

/// One minimization outcome at a given (t, seed).
struct SweepRecord {
  double t = 0.0;
  double Ltilde = 0.0;
  double lambda = 0.0;
  EnergyBreakdown energy;
  double min_norm = 0.0;
  std::array<int, 3> min_loc{};
  double max_beta = 0.0;
  std::array<int, 3> beta_loc{};
  double h_mass = 0.0;
  long iterations = 0;
  double residual = 0.0;
  Classification classification = Classification::ambiguous;
  std::uint64_t seed = 0;
  double wall_s = 0.0;

  // not serialized; used by callers inspecting runs
  double max_norm = 0.0;
  bool converged = false;
  bool failed = false;
};

}  // namespace ldg
