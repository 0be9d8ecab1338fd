#include "ldg/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

namespace ldg {

const char* const kSummaryCsvHeader =
    "t,Ltilde,lambda,elastic,gl,hterm,total,min_norm,min_i,min_j,min_k,"
    "max_beta,beta_i,beta_j,beta_k,h_mass,iters,residual,class,seed,wall_s";

namespace {

std::string fmt9(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.8e", v);
  return buf;
}

std::string fmt12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.11e", v);
  return buf;
}

}  // namespace

void write_field_vtk(const QField& field, const DirectorField& directors,
                     const std::string& path) {
  const Grid& g = field.grid;
  std::ofstream out(path);
  if (!out) throw io_error("cannot open for writing", path);

  out << "# vtk DataFile Version 3.0\n";
  out << "Q-tensor field diagnostics\n";
  out << "ASCII\n";
  out << "DATASET STRUCTURED_POINTS\n";
  out << "DIMENSIONS " << g.n << ' ' << g.n << ' ' << g.n << '\n';
  const std::string o = fmt9(-g.half_width);
  const std::string h = fmt9(g.spacing());
  out << "ORIGIN " << o << ' ' << o << ' ' << o << '\n';
  out << "SPACING " << h << ' ' << h << ' ' << h << '\n';
  out << "POINT_DATA " << g.count() << '\n';

  out << "SCALARS qnorm double 1\n";
  out << "LOOKUP_TABLE default\n";
  for (long idx = 0; idx < g.count(); ++idx) {
    out << fmt9(field.values[idx].norm()) << '\n';
  }
  out << "SCALARS beta double 1\n";
  out << "LOOKUP_TABLE default\n";
  for (long idx = 0; idx < g.count(); ++idx) {
    out << fmt9(directors.beta[idx]) << '\n';
  }
  out << "VECTORS director double\n";
  for (long idx = 0; idx < g.count(); ++idx) {
    const Vec3& d = directors.directors[idx];
    out << fmt9(d[0]) << ' ' << fmt9(d[1]) << ' ' << fmt9(d[2]) << '\n';
  }
  if (!out) throw io_error("write failed", path);
}

void write_summary_csv(std::vector<SweepRecord> records,
                       const std::string& path) {
  std::stable_sort(records.begin(), records.end(),
                   [](const SweepRecord& a, const SweepRecord& b) {
                     if (a.t != b.t) return a.t < b.t;
                     return a.seed < b.seed;
                   });
  std::ofstream out(path);
  if (!out) throw io_error("cannot open for writing", path);
  out << kSummaryCsvHeader << '\n';
  for (const auto& r : records) {
    out << fmt12(r.t) << ',' << fmt12(r.Ltilde) << ',' << fmt12(r.lambda) << ','
        << fmt12(r.energy.elastic) << ',' << fmt12(r.energy.gl) << ','
        << fmt12(r.energy.hterm) << ',' << fmt12(r.energy.total) << ','
        << fmt12(r.min_norm) << ',' << r.min_loc[0] << ',' << r.min_loc[1]
        << ',' << r.min_loc[2] << ',' << fmt12(r.max_beta) << ','
        << r.beta_loc[0] << ',' << r.beta_loc[1] << ',' << r.beta_loc[2] << ','
        << fmt12(r.h_mass) << ',' << r.iterations << ',' << fmt12(r.residual)
        << ',' << to_string(r.classification) << ',' << r.seed << ','
        << fmt12(r.wall_s) << '\n';
  }
  if (!out) throw io_error("write failed", path);
}

}  // namespace ldg
