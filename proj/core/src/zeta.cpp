#include "g1lp/zeta.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "g1lp/errors.hpp"
#include "g1lp/numeric.hpp"

namespace g1lp {

namespace {

const std::string kTailCaveat =
    "non-rigorous tail: the omitted zeros are modeled by continuing the last "
    "observed gap arithmetically, which understates the true zero density";

}  // namespace

ZetaZeroTable parse_odlyzko(std::istream& in, mpfr_prec_t prec, const std::string& source) {
  ZetaZeroTable table;
  table.source = source;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line);
    std::string token;
    while (ls >> token) {
      BigFloat h(prec);
      try {
        h = BigFloat::parse(token, prec);
      } catch (const Error&) {
        throw ParseError("not a decimal height: '" + token + "'", line_no);
      }
      if (!h.is_finite()) {
        throw ParseError("height must be finite: '" + token + "'", line_no);
      }
      if (!(h > BigFloat(14.0, prec))) {
        throw ParseError("height must exceed 14: '" + token + "'", line_no);
      }
      table.heights.push_back(std::move(h));
    }
  }
  std::vector<std::size_t> bad;
  for (std::size_t i = 1; i < table.heights.size(); ++i) {
    if (!(table.heights[i] > table.heights[i - 1])) bad.push_back(i + 1);
  }
  if (!bad.empty()) {
    throw MonotonicityError("heights must be strictly increasing", bad);
  }
  return table;
}

ZetaZeroTable parse_odlyzko_file(const std::string& path, mpfr_prec_t prec) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open zero table: " + path, 0);
  return parse_odlyzko(in, prec, path);
}

void serialize_table(const ZetaZeroTable& table, std::ostream& out) {
  for (const auto& h : table.heights) {
    out << h.to_string() << '\n';
  }
}

LambdaConfig to_lambda(const ZetaZeroTable& table,
                       const std::map<std::size_t, double>& overrides) {
  for (const auto& [idx, sigma] : overrides) {
    if (idx >= table.count()) {
      throw DomainError("override index " + std::to_string(idx) + " out of range");
    }
    if (!(sigma > 0.0) || !(sigma < 1.0)) {
      throw DomainError("sigma override must lie in (0, 1)");
    }
  }
  LambdaConfig lc;
  lc.heights = table.heights;
  lc.sigma_overrides = overrides;

  std::vector<Zero> zeros;
  zeros.reserve(table.count() + overrides.size());
  for (std::size_t k = 0; k < table.count(); ++k) {
    double t = table.heights[k].to_double();
    auto it = overrides.find(k);
    double sigma = it == overrides.end() ? 0.5 : it->second;
    double y = 0.5 - sigma;
    if (y == 0.0) {
      zeros.push_back({sqr(table.heights[k]).to_double(), 0.0, 1});
    } else {
      // (t + iy)^2 = t^2 - y^2 + 2ty i
      double re = sqr(table.heights[k]).to_double() - y * y;
      double im = 2.0 * t * y;
      zeros.push_back({re, im, 1});
      zeros.push_back({re, -im, 1});
    }
  }

  std::optional<TailModel> tail;
  if (table.count() >= 2) {
    const BigFloat& a = table.heights[table.count() - 2];
    const BigFloat& b = table.heights[table.count() - 1];
    double gap = (sqr(b) - sqr(a)).to_double();
    double start = sqr(b).to_double() + gap;
    tail = TailModel{TailModel::Kind::ArithmeticReal, start, gap, false};
    lc.heuristic_tail = true;
    lc.caveat = kTailCaveat;
  }

  lc.config = ZeroConfig(zeros, 0, 0.0, tail);
  return lc;
}

LambdaGapReport lambda_spacing_report(const LambdaConfig& config, std::size_t limit) {
  if (config.heights.size() < 2) {
    throw DomainError("gap report requires at least 2 zeros");
  }
  if (limit < 2 || limit > config.heights.size()) {
    throw DomainError("limit must lie in [2, count]");
  }
  LambdaGapReport rep;
  rep.heuristic_tail = config.heuristic_tail;
  rep.caveat = config.caveat;

  rep.t.reserve(limit);
  rep.lambda.reserve(limit);
  rep.gaps.reserve(limit - 1);
  BigFloat prev_sq = sqr(config.heights[0]);
  rep.t.push_back(config.heights[0].to_double());
  rep.lambda.push_back(prev_sq.to_double());
  for (std::size_t j = 1; j < limit; ++j) {
    BigFloat cur_sq = sqr(config.heights[j]);
    rep.t.push_back(config.heights[j].to_double());
    rep.lambda.push_back(cur_sq.to_double());
    rep.gaps.push_back((cur_sq - prev_sq).to_double());
    prev_sq = cur_sq;
  }
  rep.argmin = 0;
  for (std::size_t j = 1; j < rep.gaps.size(); ++j) {
    if (rep.gaps[j] < rep.gaps[rep.argmin]) rep.argmin = j;
  }
  rep.min_gap = rep.gaps[rep.argmin];

  // SpacingReport on the first `limit` zeros; overrides are honored by
  // rebuilding the configured zeros whose baseline index is below limit.
  std::vector<Zero> zeros;
  for (std::size_t k = 0; k < limit; ++k) {
    double t = config.heights[k].to_double();
    auto it = config.sigma_overrides.find(k);
    double sigma = it == config.sigma_overrides.end() ? 0.5 : it->second;
    double y = 0.5 - sigma;
    if (y == 0.0) {
      zeros.push_back({sqr(config.heights[k]).to_double(), 0.0, 1});
    } else {
      double re = sqr(config.heights[k]).to_double() - y * y;
      zeros.push_back({re, 2.0 * t * y, 1});
      zeros.push_back({re, -2.0 * t * y, 1});
    }
  }
  ZeroConfig sub(zeros, 0, 0.0, config.config.tail());
  rep.spacing = spacing_report(sub);
  return rep;
}

nlohmann::json LambdaGapReport::to_json() const {
  nlohmann::json j;
  j["spacing"] = spacing.to_json();
  j["count"] = t.size();
  j["min_gap"] = min_gap;
  j["argmin_j"] = argmin + 1;  // 1-based gap index: gap_j = lambda_{j+1} - lambda_j
  j["exceeds_159"] = min_gap > 159.0;
  j["heuristic_tail"] = heuristic_tail;
  if (!caveat.empty()) j["caveat"] = caveat;
  return j;
}

HrrhReport hrrh_check(const LambdaConfig& config, int N, const std::vector<double>& grid,
                      const ScanOptions& opts) {
  if (N < 1) throw DomainError("Hankel order must be >= 1");
  HrrhReport rep;
  rep.order = N;
  rep.all_real = true;
  for (const auto& z : config.config.zeros()) {
    if (z.im != 0.0) {
      rep.all_real = false;
      break;
    }
  }
  std::vector<double> xs = grid.empty() ? default_grid(config.config) : grid;
  rep.scan = nlp_scan(config.config, N, xs, opts);
  rep.caveat = "finite truncation of an infinite zero set";
  if (config.heuristic_tail) rep.caveat += "; " + config.caveat;
  if (rep.all_real) {
    rep.caveat +=
        "; all zeros are real, so order-1 positivity is automatic (every odd "
        "coefficient is a sum of positive terms)";
  }
  return rep;
}

nlohmann::json HrrhReport::to_json() const {
  nlohmann::json j = scan.to_json();
  j["order"] = order;
  j["all_real"] = all_real;
  j["caveat"] = caveat;
  return j;
}

double ford_boundary(double t) {
  if (!(t > std::exp(1.0))) throw DomainError("the classical curve requires t > e");
  double lt = std::log(t);
  double llt = std::log(lt);
  return 1.0 - 1.0 / (49.13 * std::pow(lt, 2.0 / 3.0) * std::pow(llt, 1.0 / 3.0));
}

std::vector<std::pair<double, double>> region_curve(RegionKind kind, const RegionParams& params,
                                                    double t_lo, double t_hi, int samples) {
  if (samples < 2) throw DomainError("region curve requires at least 2 samples");
  if (!(t_lo < t_hi)) throw DomainError("region curve requires t_lo < t_hi");
  if (kind == RegionKind::Ford) {
    if (!(t_lo > std::exp(1.0))) throw DomainError("the classical curve requires t_lo > e");
  } else {
    if (!(t_lo > 0.0)) throw DomainError("region curve requires t_lo > 0");
  }
  std::vector<std::pair<double, double>> out;
  out.reserve(static_cast<std::size_t>(samples));
  double step = (t_hi - t_lo) / (samples - 1);
  if (kind == RegionKind::Ford) {
    for (int i = 0; i < samples; ++i) {
      double t = i + 1 == samples ? t_hi : t_lo + step * i;
      out.emplace_back(t, ford_boundary(t));
    }
  } else {
    double o = corollary_offset(kind, params);
    for (int i = 0; i < samples; ++i) {
      double t = i + 1 == samples ? t_hi : t_lo + step * i;
      out.emplace_back(t, 0.5 + o / t);
    }
  }
  return out;
}

}  // namespace g1lp
