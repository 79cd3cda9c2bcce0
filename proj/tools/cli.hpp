#pragma once

// Command-line surface: body, construct, converge and axioms subcommands.
// Exit codes: 0 success, 1 assertion / construction / convergence failure,
// 2 usage or parse error.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "asa/constructions.hpp"

namespace asa::cli {

enum class Format { Csv, Json, Svg };

struct ExperimentConfig {
  std::filesystem::path body_path;
  ConstructionKind kind = ConstructionKind::Floating;
  double t_start = 1e-2;
  double t_ratio = 0.25;
  int t_count = 9;
  int resolution = static_cast<int>(kDefaultDirections);
  std::filesystem::path output_path;  // empty: standard output
  Format format = Format::Csv;
};

/// Throws Error(ParseError) naming the violated invariant.
void validate(const ExperimentConfig& c);

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace asa::cli
