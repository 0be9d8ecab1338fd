#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ldg/energy.hpp"
#include "ldg/minimize.hpp"

namespace ldg {

class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& msg, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg
                                    : msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

enum class BoundaryKind { hedgehog, constant };
enum class InitKind { ansatz, constant };

/// Sweep description parsed from a line-based "key = value" file with
/// bracketed sections; arrays are comma-separated. Parameters enter either
/// reduced (Ltilde + t list) or physical (alpha, b, c, L, Tstar + T list).
struct SweepConfig {
  int n = 49;
  double half_width = 1.0;

  BoundaryKind boundary = BoundaryKind::hedgehog;
  Vec3 n0 = {0.0, 0.0, 1.0};

  bool physical = false;
  double Ltilde = 1.0;
  std::vector<double> t_list;
  MaterialParams material{1.0, 1.0, 1.0, 1.0, 0.0, 1.0};
  std::vector<double> T_list;

  PotentialMode::Kind mode = PotentialMode::Kind::full;
  double kappa = 1.0;

  long max_iters = 20000;
  double tol = 0.0;         // absolute override when > 0
  double tol_scale = 1e-6;  // otherwise tol = tol_scale * sqrt(t)
  double step_init = 1.0;
  StepRule step_rule = StepRule::barzilai_borwein;
  long record_every = 100;

  InitKind init = InitKind::ansatz;
  double core_radius = 0.0;  // 0 means half_width / 4
  double amplitude = 0.2;
  std::vector<std::uint64_t> seeds = {0};  // seed 0 runs unperturbed

  double tau_melt = 0.05;
  double tau_escape = 0.95;

  std::string out_dir = "out";

  // driver knobs, set from the command line rather than the file
  bool warm_start = true;
  bool dump_all = false;
  int threads = 1;

  /// Reduced temperatures of the sweep (maps T rowwise when physical).
  std::vector<double> reduced_t_list() const;
  ReducedParams reduced_at(std::size_t row) const;
  PotentialMode potential_at(double t) const;
  double tol_for(double t) const;
  double effective_core_radius() const {
    return core_radius > 0.0 ? core_radius : half_width / 4.0;
  }
};

/// Parses and validates; throws config_error with the offending line.
SweepConfig parse_config_text(const std::string& text);
SweepConfig parse_config_file(const std::string& path);
void validate(const SweepConfig& cfg);

}  // namespace ldg
