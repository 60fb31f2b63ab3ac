#pragma once

#include <string>

#include <json.hpp>

namespace g1lp {

enum class OutputFormat { Csv, Json };

// Run-wide knobs shared by all subcommands.  Precedence: built-in defaults,
// then the G1LP_PRECISION_BITS environment variable, then a config file,
// then command-line flags.  The file is INI-style: one `key = value` per
// line, '#' or ';' comments, blank lines ignored.  Keys: precision_bits,
// tolerance, delta_factor, grid_points_per_gap, output_format (csv|json),
// threads (integer or auto).
struct RunConfig {
  int precision_bits = 128;
  double tolerance = -1.0;  // < 0 selects the scale-aware default
  double delta_factor = 1e-6;
  int grid_points_per_gap = 8;
  OutputFormat output_format = OutputFormat::Json;
  int threads = 1;  // 0 = hardware concurrency

  void validate() const;
  void apply_env();
  void apply_file(const std::string& path);

  nlohmann::json to_json() const;
};

}  // namespace g1lp
