#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "gaborlat/io.hpp"

namespace gaborlat::cli {

inline constexpr const char* kToolName = "gaborlat";
inline constexpr const char* kVersion = "0.1.0";

/// Default knobs; each one is overridable from the config file or a flag.
struct Defaults {
  static constexpr int gram_truncation = 3;
  static constexpr double gram_tol = 5e-3;
  static constexpr std::size_t grid_n = 2048;
  static constexpr double grid_t = 8.0;
  static constexpr int zak_K = 1024;
  static constexpr std::size_t zak_omega_points = 128;
  static constexpr std::size_t zak_theta_points = 256;
  static constexpr double zak_tol = 0.02;
  static constexpr double density_tol = 0.15;
  static constexpr double comparison_half_width = 20.0;
};

struct RunConfig {
  std::string command;
  io::Json config = io::Json::object();
  std::filesystem::path config_dir = ".";
  std::optional<std::filesystem::path> out;
  std::optional<std::filesystem::path> csv_out;
  bool pretty = false;
  std::uint64_t seed = 0;
  std::optional<int> truncation;
  std::optional<std::size_t> grid_n;
  std::optional<double> grid_t;
  std::optional<double> tol;
  std::optional<bool> cesaro;
};

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view data);

/// "pi/4", "-3*pi/4", "3pi/2", "0.7" or a JSON number.
double parse_angle(const io::Json& j);

/// Runs one command; the result is the `result` member of the report.
io::Json run_command(const RunConfig& config);

/// Full report: tool, version, command, seed, config hash and result.
io::Json make_report(const RunConfig& config);

/// Human-readable summary of a report.
std::string summarize(const io::Json& report);

/// Process entry point; returns the exit code (0 verdict, 2 input error,
/// 3 numeric precondition).
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gaborlat::cli
