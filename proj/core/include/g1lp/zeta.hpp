#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "g1lp/bigfloat.hpp"
#include "g1lp/bounds.hpp"
#include "g1lp/hankel.hpp"
#include "g1lp/zero_model.hpp"

namespace g1lp {

// Ordered table of zeta-zero heights t_k (zeros at 1/2 + i t_k on the
// baseline).  parse_odlyzko enforces strict increase and the > 14 first-zero
// floor; programmatic construction (synthetic tests) may bypass them.
struct ZetaZeroTable {
  std::vector<BigFloat> heights;
  std::string source;

  std::size_t count() const { return heights.size(); }
};

// Plain-text reader: one or more decimal heights per line, separated by
// whitespace; lines starting with '#' are comments.  Heights are parsed at
// `prec` bits so later squaring keeps the gap digits.
ZetaZeroTable parse_odlyzko(std::istream& in, mpfr_prec_t prec = 128,
                            const std::string& source = "stream");
ZetaZeroTable parse_odlyzko_file(const std::string& path, mpfr_prec_t prec = 128);

// Writes one height per line at round-trip precision for `prec` bits.
void serialize_table(const ZetaZeroTable& table, std::ostream& out);

// Zero configuration in the lambda coordinates lambda_k = eta_k^2 with
// eta_k = t_k + i(1/2 - sigma_k).  Default sigma = 1/2 everywhere gives the
// real, strictly increasing lambda_k = t_k^2; an override sigma_k != 1/2
// inserts the conjugate pair lambda_k, conj(lambda_k).  The attached
// ArithmeticReal tail continues the last observed lambda-gap; that is a
// heuristic (the true zero density grows), so every derived report carries
// the caveat string.
struct LambdaConfig {
  ZeroConfig config;
  std::vector<BigFloat> heights;  // source heights, kept for exact gap math
  std::map<std::size_t, double> sigma_overrides;
  bool heuristic_tail = false;
  std::string caveat;
};

// overrides: 0-based index -> sigma in (0, 1).  DomainError outside (0, 1).
LambdaConfig to_lambda(const ZetaZeroTable& table,
                       const std::map<std::size_t, double>& overrides = {});

// Spacing statistics over the first `limit` zeros plus the consecutive-gap
// table lambda_{j+1} - lambda_j computed from the stored heights in extended
// precision (the subtraction cancels most leading digits).
struct LambdaGapReport {
  SpacingReport spacing;
  std::vector<double> t;       // heights (first `limit`)
  std::vector<double> lambda;  // t^2
  std::vector<double> gaps;    // lambda_{j+1} - lambda_j, size limit-1
  std::size_t argmin = 0;      // 0-based index of the minimal gap
  double min_gap = 0.0;
  bool heuristic_tail = false;
  std::string caveat;

  nlohmann::json to_json() const;
};

LambdaGapReport lambda_spacing_report(const LambdaConfig& config, std::size_t limit);

// Hankel positivity scan over the lambda configuration.  For all-real data
// the PSD outcome at N = 1 is automatic (each entry is a sum of positive
// terms); the report says so, and always repeats the truncation caveat.
struct HrrhReport {
  ScanReport scan;
  int order = 1;
  bool all_real = true;
  std::string caveat;

  nlohmann::json to_json() const;
};

HrrhReport hrrh_check(const LambdaConfig& config, int N, const std::vector<double>& grid = {},
                      const ScanOptions& opts = {});

// 1 - 1/(49.13 (ln t)^(2/3) (ln ln t)^(1/3)), the classical zero-free
// boundary; valid for t > e.
double ford_boundary(double t);

// Uniformly sampled (t, re_boundary) pairs: re = 1/2 + o/t for the
// corollary kinds (constant offset o) and the classical curve for Ford.
std::vector<std::pair<double, double>> region_curve(RegionKind kind, const RegionParams& params,
                                                    double t_lo, double t_hi, int samples);

}  // namespace g1lp
