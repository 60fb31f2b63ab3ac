#include "g1lp/report.hpp"

#include <cmath>
#include <ostream>

#include "g1lp/numeric.hpp"

namespace g1lp {

void write_verdicts_csv(const ScanReport& report, std::ostream& out) {
  out << "x,N,min_eigenvalue,tail_budget,verdict\n";
  for (const auto& v : report.verdicts) {
    out << format_double(v.matrix.x) << ',' << v.matrix.N << ',';
    if (std::isfinite(v.min_eigenvalue)) out << format_double(v.min_eigenvalue);
    out << ',' << format_double(v.tail_budget) << ',' << to_string(v.verdict) << '\n';
  }
  for (const auto& e : report.excluded) {
    out << format_double(e.x) << ',' << report.N << ",,,EXCLUDED\n";
  }
}

void write_gaps_csv(const LambdaGapReport& report, std::ostream& out) {
  out << "j,t_j,lambda_j,gap_j\n";
  for (std::size_t j = 0; j < report.t.size(); ++j) {
    out << (j + 1) << ',' << format_double(report.t[j]) << ','
        << format_double(report.lambda[j]) << ',';
    if (j < report.gaps.size()) out << format_double(report.gaps[j]);
    out << '\n';
  }
}

void write_region_csv(const std::vector<std::pair<double, double>>& curve, std::ostream& out) {
  out << "t,re_boundary\n";
  for (const auto& [t, re] : curve) {
    out << format_double(t) << ',' << format_double(re) << '\n';
  }
}

void write_bound_csv(const BoundReport& report, std::ostream& out) {
  out << "name,inputs,value\n";
  out << to_string(report.name) << ',';
  bool first = true;
  for (const auto& [k, v] : report.inputs) {
    if (!first) out << ';';
    out << k << '=' << format_double(v);
    first = false;
  }
  out << ',' << format_double(report.value) << '\n';
}

nlohmann::json envelope(const std::string& command, nlohmann::json payload) {
  nlohmann::json j;
  j["command"] = command;
  j["report"] = std::move(payload);
  return j;
}

}  // namespace g1lp
