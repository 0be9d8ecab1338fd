#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ldg/diagnostics.hpp"
#include "ldg/sweep_record.hpp"

namespace ldg {

class io_error : public std::runtime_error {
 public:
  io_error(const std::string& msg, const std::string& path)
      : std::runtime_error(msg + ": " + path), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// Legacy-VTK structured-points text dump with three point arrays:
/// scalar "qnorm", scalar "beta", vectors "director". Floats use scientific
/// notation with 9 significant digits; nodes are written x-fastest.
void write_field_vtk(const QField& field, const DirectorField& directors,
                     const std::string& path);

/// Summary table, one row per record, sorted by (t, seed); floats use
/// scientific notation with 12 significant digits.
void write_summary_csv(std::vector<SweepRecord> records,
                       const std::string& path);

extern const char* const kSummaryCsvHeader;

}  // namespace ldg
