#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "ldg/sweep.hpp"

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitIo = 3;

struct CommonArgs {
  std::string config_path;
  std::string out_dir;
  bool no_warm_start = false;
  bool dump_all = false;
  int threads = 1;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "path to the sweep config file")
      ->required();
  cmd->add_option("--out", args.out_dir, "output directory (overrides the config)");
  cmd->add_flag("--no-warm-start", args.no_warm_start,
                "start every temperature from the configured initialization");
  cmd->add_flag("--dump-all", args.dump_all,
                "write a field dump for every (t, seed) run");
  cmd->add_option("--threads", args.threads, "worker threads for energy/gradient");
}

ldg::SweepConfig load(const CommonArgs& args) {
  ldg::SweepConfig cfg = ldg::parse_config_file(args.config_path);
  if (!args.out_dir.empty()) cfg.out_dir = args.out_dir;
  cfg.warm_start = !args.no_warm_start;
  cfg.dump_all = args.dump_all;
  cfg.threads = args.threads > 0 ? args.threads : 1;
  return cfg;
}

void print_record(const ldg::SweepRecord& r) {
  std::printf(
      "t=%g seed=%llu total=%.6e min|Q|=%.4f max_beta=%.4f class=%s iters=%ld\n",
      r.t, static_cast<unsigned long long>(r.seed), r.energy.total, r.min_norm,
      r.max_beta, ldg::to_string(r.classification).c_str(), r.iterations);
}

int cmd_run(const CommonArgs& args) {
  const ldg::SweepConfig cfg = load(args);
  const ldg::SweepRecord rec = ldg::run_single(cfg);
  print_record(rec);
  if (!rec.converged) {
    std::fprintf(stderr, "warning: residual %.3e above tolerance after %ld iterations\n",
                 rec.residual, rec.iterations);
    return kExitNumerical;
  }
  return 0;
}

int cmd_sweep(const CommonArgs& args) {
  const ldg::SweepConfig cfg = load(args);
  const ldg::SweepResult result = ldg::run_sweep(cfg);
  for (const auto& r : result.records) print_record(r);
  std::printf("summary: %s/summary.csv  best-per-t: %s/best.csv\n",
              cfg.out_dir.c_str(), cfg.out_dir.c_str());
  if (result.failures > 0) {
    std::fprintf(stderr, "%d run(s) failed numerically\n", result.failures);
    return kExitNumerical;
  }
  return 0;
}

int cmd_info(const CommonArgs& args) {
  const ldg::SweepConfig cfg = load(args);
  const auto ts = cfg.reduced_t_list();
  std::printf("%-14s %-14s %-14s %-14s %-14s\n", "t", "Ltilde", "lambda",
              "s_star", "qscale");
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const ldg::ReducedParams rp = cfg.reduced_at(i);
    double sstar = 0.0;
    if (cfg.physical) {
      ldg::MaterialParams m = cfg.material;
      m.T = cfg.T_list[i];
      sstar = ldg::s_star(m);
    }
    std::printf("%-14.6g %-14.6g %-14.6g %-14.6g %-14.6g\n", rp.t, rp.Ltilde,
                rp.lambda, sstar, rp.qscale);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Q-tensor free-energy minimization over box domains"};
  app.require_subcommand(1);

  CommonArgs run_args, sweep_args, info_args;
  CLI::App* run = app.add_subcommand("run", "single minimization (one t, one seed)");
  add_common(run, run_args);
  CLI::App* sweep = app.add_subcommand("sweep", "temperature sweep");
  add_common(sweep, sweep_args);
  CLI::App* info = app.add_subcommand("info", "print reduced parameters for a config");
  add_common(info, info_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitConfig : 0;
  }

  try {
    if (run->parsed()) return cmd_run(run_args);
    if (sweep->parsed()) return cmd_sweep(sweep_args);
    return cmd_info(info_args);
  } catch (const ldg::config_error& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const ldg::numerical_failure& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return kExitNumerical;
  } catch (const ldg::io_error& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return kExitIo;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  }
}
