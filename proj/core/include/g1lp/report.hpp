#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "g1lp/bounds.hpp"
#include "g1lp/hankel.hpp"
#include "g1lp/zeta.hpp"

namespace g1lp {

// Deterministic CSV emitters.  Every float is printed with %.17g so the
// files round-trip; excluded grid points get verdict EXCLUDED with empty
// numeric fields.
void write_verdicts_csv(const ScanReport& report, std::ostream& out);

// Columns j, t_j, lambda_j, gap_j (gap_j = lambda_{j+1} - lambda_j; the last
// row has an empty gap field).  j is 1-based.
void write_gaps_csv(const LambdaGapReport& report, std::ostream& out);

void write_region_csv(const std::vector<std::pair<double, double>>& curve, std::ostream& out);

// Single row: name, "k1=v1;k2=v2", value (inputs sorted by key).
void write_bound_csv(const BoundReport& report, std::ostream& out);

// Uniform JSON wrapper: {"command": ..., "report": ...}.
nlohmann::json envelope(const std::string& command, nlohmann::json payload);

}  // namespace g1lp
