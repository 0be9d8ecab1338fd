#include "ldg/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace ldg {

std::vector<double> SweepConfig::reduced_t_list() const {
  if (!physical) return t_list;
  std::vector<double> out;
  out.reserve(T_list.size());
  for (double T : T_list) {
    MaterialParams m = material;
    m.T = T;
    out.push_back(reduce(m).t);
  }
  return out;
}

ReducedParams SweepConfig::reduced_at(std::size_t row) const {
  if (physical) {
    MaterialParams m = material;
    m.T = T_list.at(row);
    return reduce(m);
  }
  return ReducedParams::from_t(t_list.at(row), Ltilde);
}

PotentialMode SweepConfig::potential_at(double t) const {
  return mode == PotentialMode::Kind::full ? PotentialMode::full(t)
                                           : PotentialMode::gl(kappa);
}

double SweepConfig::tol_for(double t) const {
  return tol > 0.0 ? tol : tol_scale * std::sqrt(t);
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  return out;
}

double parse_double(const std::string& s, int line) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw config_error("expected a number, got '" + s + "'", line);
  }
}

long parse_long(const std::string& s, int line) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw config_error("expected an integer, got '" + s + "'", line);
  }
}

std::uint64_t parse_u64(const std::string& s, int line) {
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw config_error("expected a nonnegative integer, got '" + s + "'", line);
  }
}

}  // namespace

SweepConfig parse_config_text(const std::string& text) {
  SweepConfig cfg;
  cfg.t_list.clear();
  cfg.seeds.clear();

  bool saw_reduced = false, saw_physical = false;

  std::istringstream in(text);
  std::string raw;
  std::string section;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw config_error("unterminated section header", lineno);
      section = trim(line.substr(1, line.size() - 2));
      static const char* known[] = {"grid", "boundary", "params",  "potential",
                                    "minimize", "init", "classify", "output"};
      if (std::find_if(std::begin(known), std::end(known), [&](const char* k) {
            return section == k;
          }) == std::end(known)) {
        throw config_error("unknown section [" + section + "]", lineno);
      }
      continue;
    }

    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) throw config_error("expected 'key = value'", lineno);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) throw config_error("expected 'key = value'", lineno);

    auto unknown = [&]() -> config_error {
      return config_error("unknown key '" + key + "' in section [" + section + "]", lineno);
    };

    if (section == "grid") {
      if (key == "n") cfg.n = static_cast<int>(parse_long(value, lineno));
      else if (key == "half_width") cfg.half_width = parse_double(value, lineno);
      else throw unknown();
    } else if (section == "boundary") {
      if (key == "kind") {
        if (value == "hedgehog") cfg.boundary = BoundaryKind::hedgehog;
        else if (value == "constant") cfg.boundary = BoundaryKind::constant;
        else throw config_error("boundary kind must be hedgehog or constant", lineno);
      } else if (key == "n0") {
        const auto parts = split_list(value);
        if (parts.size() != 3) throw config_error("n0 needs three components", lineno);
        for (int d = 0; d < 3; ++d) cfg.n0[d] = parse_double(parts[d], lineno);
      } else throw unknown();
    } else if (section == "params") {
      if (key == "Ltilde") { cfg.Ltilde = parse_double(value, lineno); saw_reduced = true; }
      else if (key == "t") {
        cfg.t_list.clear();
        for (const auto& p : split_list(value)) cfg.t_list.push_back(parse_double(p, lineno));
        saw_reduced = true;
      } else if (key == "alpha") { cfg.material.alpha = parse_double(value, lineno); saw_physical = true; }
      else if (key == "b") { cfg.material.b = parse_double(value, lineno); saw_physical = true; }
      else if (key == "c") { cfg.material.c = parse_double(value, lineno); saw_physical = true; }
      else if (key == "L") { cfg.material.L = parse_double(value, lineno); saw_physical = true; }
      else if (key == "Tstar") { cfg.material.Tstar = parse_double(value, lineno); saw_physical = true; }
      else if (key == "T") {
        cfg.T_list.clear();
        for (const auto& p : split_list(value)) cfg.T_list.push_back(parse_double(p, lineno));
        saw_physical = true;
      } else throw unknown();
    } else if (section == "potential") {
      if (key == "mode") {
        if (value == "full") cfg.mode = PotentialMode::Kind::full;
        else if (value == "gl") cfg.mode = PotentialMode::Kind::gl;
        else throw config_error("potential mode must be full or gl", lineno);
      } else if (key == "kappa") cfg.kappa = parse_double(value, lineno);
      else throw unknown();
    } else if (section == "minimize") {
      if (key == "max_iters") cfg.max_iters = parse_long(value, lineno);
      else if (key == "tol") cfg.tol = parse_double(value, lineno);
      else if (key == "tol_scale") cfg.tol_scale = parse_double(value, lineno);
      else if (key == "step_init") cfg.step_init = parse_double(value, lineno);
      else if (key == "step_rule") {
        if (value == "barzilai_borwein") cfg.step_rule = StepRule::barzilai_borwein;
        else if (value == "backtracking") cfg.step_rule = StepRule::backtracking;
        else throw config_error("step_rule must be barzilai_borwein or backtracking", lineno);
      } else if (key == "record_every") cfg.record_every = parse_long(value, lineno);
      else throw unknown();
    } else if (section == "init") {
      if (key == "kind") {
        if (value == "ansatz") cfg.init = InitKind::ansatz;
        else if (value == "constant") cfg.init = InitKind::constant;
        else throw config_error("init kind must be ansatz or constant", lineno);
      } else if (key == "core_radius") cfg.core_radius = parse_double(value, lineno);
      else if (key == "amplitude") cfg.amplitude = parse_double(value, lineno);
      else if (key == "seeds") {
        cfg.seeds.clear();
        for (const auto& p : split_list(value)) cfg.seeds.push_back(parse_u64(p, lineno));
      } else throw unknown();
    } else if (section == "classify") {
      if (key == "tau_melt") cfg.tau_melt = parse_double(value, lineno);
      else if (key == "tau_escape") cfg.tau_escape = parse_double(value, lineno);
      else throw unknown();
    } else if (section == "output") {
      if (key == "dir") cfg.out_dir = value;
      else throw unknown();
    } else {
      throw config_error("key outside of any section", lineno);
    }
  }

  if (saw_reduced && saw_physical) {
    throw config_error("[params] mixes reduced (Ltilde, t) and physical (alpha..T) entries");
  }
  cfg.physical = saw_physical;
  validate(cfg);
  return cfg;
}

SweepConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

void validate(const SweepConfig& cfg) {
  if (cfg.n < 3 || cfg.n % 2 == 0) throw config_error("grid n must be odd and >= 3");
  if (!(cfg.half_width > 0.0)) throw config_error("half_width must be positive");
  if (cfg.seeds.empty()) throw config_error("at least one seed is required");
  if (cfg.physical) {
    if (cfg.T_list.empty()) throw config_error("physical entry needs a T list");
  } else if (cfg.t_list.empty()) {
    throw config_error("reduced entry needs a t list");
  }
  const auto ts = cfg.reduced_t_list();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (!(ts[i] > 0.0)) throw config_error("reduced temperatures must be positive");
    if (i > 0 && !(ts[i] > ts[i - 1])) {
      throw config_error("reduced temperatures must be strictly increasing");
    }
  }
  if (cfg.mode == PotentialMode::Kind::gl && !(cfg.kappa > 0.0)) {
    throw config_error("gl mode requires kappa > 0");
  }
  if (cfg.max_iters < 1) throw config_error("max_iters must be >= 1");
  if (cfg.tol < 0.0 || (cfg.tol == 0.0 && !(cfg.tol_scale > 0.0))) {
    throw config_error("tolerance must be positive");
  }
  if (!(cfg.step_init > 0.0)) throw config_error("step_init must be positive");
  if (cfg.amplitude < 0.0 || cfg.amplitude > 1.0) {
    throw config_error("amplitude must lie in [0, 1]");
  }
  if (cfg.core_radius < 0.0 || cfg.core_radius > cfg.half_width) {
    throw config_error("core_radius must lie in (0, half_width]");
  }
  if (!(cfg.tau_melt > 0.0 && cfg.tau_melt < 1.0) ||
      !(cfg.tau_escape > 0.0 && cfg.tau_escape < 1.0)) {
    throw config_error("classification thresholds must lie in (0, 1)");
  }
}

}  // namespace ldg
