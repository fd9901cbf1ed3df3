#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include "qlaem/fields.hpp"

// On-disk formats of the batch driver.
//
// Snapshot (binary, little-endian regardless of host):
//   bytes 0..7   magic "QLAFLD01"
//   bytes 8..19  u32 nx, u32 ny, u32 ncomp (= 4)
//   payload      f64 (re, im) pairs, sites in row-major order (j slow, i
//                fast), components q0..q3 within each site
//
// Diagnostics (CSV): one '#' comment line holding the canonical command
// line that reproduces the run, one header row, one data row per step.
// Numbers are written in shortest round-trip form, so files are byte-stable.
namespace qlaem::io {

inline constexpr char kSnapshotMagic[8] = {'Q', 'L', 'A', 'F', 'L', 'D', '0', '1'};
inline constexpr std::uint32_t kSnapshotComponents = 4;

void write_snapshot(const std::filesystem::path& path, const Lattice2D& g);
Lattice2D read_snapshot(const std::filesystem::path& path);

// Shortest decimal string that round-trips the value (std::to_chars).
std::string format_double(double x);

struct DiagnosticsRow {
    long step = 0;
    double time = 0.0;
    double norm_sq = 0.0;
    double energy = 0.0;
    double gauss_algebraic = 0.0;
    double gauss_differential = 0.0;
    std::optional<double> oracle_max_err;
};

// Streams diagnostics rows to a CSV file.  Pass with_oracle = true when rows
// carry the oracle error column.
class DiagnosticsWriter {
  public:
    DiagnosticsWriter(const std::filesystem::path& path, const std::string& canonical_command,
                      bool with_oracle);

    void write(const DiagnosticsRow& row);

  private:
    std::ofstream out_;
    bool with_oracle_;
};

}  // namespace qlaem::io
