#include "g1lp/run_config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>

#include "g1lp/errors.hpp"
#include "g1lp/numeric.hpp"

namespace g1lp {

void RunConfig::validate() const {
  if (precision_bits < 53) throw DomainError("precision_bits must be >= 53");
  if (grid_points_per_gap < 1) throw DomainError("grid_points_per_gap must be >= 1");
  if (!(delta_factor > 0.0) || !std::isfinite(delta_factor)) {
    throw DomainError("delta_factor must be positive and finite");
  }
  if (threads < 0) throw DomainError("threads must be >= 0 (0 = auto)");
}

void RunConfig::apply_env() {
  const char* bits = std::getenv("G1LP_PRECISION_BITS");
  if (bits != nullptr && *bits != '\0') {
    char* end = nullptr;
    long v = std::strtol(bits, &end, 10);
    if (end == bits || *end != '\0') {
      throw ParseError("G1LP_PRECISION_BITS is not an integer", 0);
    }
    precision_bits = static_cast<int>(v);
  }
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

void RunConfig::apply_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file: " + path, 0);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#' || s[0] == ';') continue;
    if (s.front() == '[' && s.back() == ']') continue;  // section headers carry no keys
    std::size_t eq = s.find('=');
    if (eq == std::string::npos) {
      throw ParseError("expected 'key = value'", line_no);
    }
    std::string key = trim(s.substr(0, eq));
    std::string value = trim(s.substr(eq + 1));
    try {
      if (key == "precision_bits") {
        precision_bits = static_cast<int>(std::stol(value));
      } else if (key == "tolerance") {
        tolerance = parse_double(value);
      } else if (key == "delta_factor") {
        delta_factor = parse_double(value);
      } else if (key == "grid_points_per_gap") {
        grid_points_per_gap = static_cast<int>(std::stol(value));
      } else if (key == "output_format") {
        if (value == "csv") {
          output_format = OutputFormat::Csv;
        } else if (value == "json") {
          output_format = OutputFormat::Json;
        } else {
          throw ParseError("output_format must be csv or json", line_no);
        }
      } else if (key == "threads") {
        threads = value == "auto" ? 0 : static_cast<int>(std::stol(value));
      } else {
        throw ParseError("unknown config key: " + key, line_no);
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("bad value for " + key + ": '" + value + "'", line_no);
    }
  }
}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json j;
  j["precision_bits"] = precision_bits;
  j["tolerance"] = tolerance;
  j["delta_factor"] = delta_factor;
  j["grid_points_per_gap"] = grid_points_per_gap;
  j["output_format"] = output_format == OutputFormat::Csv ? "csv" : "json";
  j["threads"] = threads;
  return j;
}

}  // namespace g1lp
