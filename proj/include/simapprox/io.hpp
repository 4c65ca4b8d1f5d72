#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "simapprox/builder.hpp"
#include "simapprox/extraction.hpp"

namespace simapprox {

inline constexpr int kArchiveVersion = 1;

/// Everything a run needs, parsed from the JSON config.
struct RunConfig {
  DirectionSet dirs;
  MagnitudeSequence seq = MagnitudeSequence::naturals();
  TargetLibrary targets;
  std::vector<Window> schedule;
  BuildOptions options;
  int grid = 101;
  nlohmann::json echo;  // the config as read, echoed into archives
};

/// Throws Error(Config) whose message names the line (syntax) or the field (content).
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

struct SeriesArchive {
  int version = kArchiveVersion;
  RunConfig config;
  SeriesFunction series;
};

/// Deterministic text: same inputs give byte-identical output.
std::string write_archive(const RunConfig& config, const SeriesFunction& series);
/// Throws Error(Archive) on unknown versions, precision mismatch or malformed content.
SeriesArchive read_archive(const std::string& text);
SeriesArchive load_archive(const std::string& path);

/// A complex value: number, decimal string, or [re, im] of either.
Complex parse_complex(const nlohmann::json& value, const std::string& field);
/// Coefficient array, lowest degree first.
Poly parse_poly(const nlohmann::json& value, const std::string& field);
/// "--g" text: a JSON coefficient array or comma-separated real decimals.
Poly parse_coefficients(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

/// Shortest round-trip decimal for a binary64.
std::string shortest(double x);

}  // namespace simapprox
