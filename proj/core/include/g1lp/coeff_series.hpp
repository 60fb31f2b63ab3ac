#pragma once

#include <complex>
#include <vector>

#include <json.hpp>

#include "g1lp/bigfloat.hpp"
#include "g1lp/zero_model.hpp"

namespace g1lp {

struct CoeffOptions {
  // Pole-exclusion radius factor: evaluation aborts when a real zero lies
  // within delta = delta_factor * max(1, |x|) of x.
  double delta_factor = 1e-6;
};

// One power-sum coefficient a_n(x) = sum_i m_i / (lambda_i - x)^(n+1) over
// the listed zeros, with a certified bound on the omitted tail and a tracked
// floating round-off budget for |value|'s components.
struct CoeffValue {
  std::complex<double> value;
  double tail_radius = 0.0;
  double round_off = 0.0;
  int n = 0;
  double x = 0.0;

  nlohmann::json to_json() const;
};

// Upper bound on one tail arm: sum_{k>=0} 1/(D + k g)^(n+1) <= 1/D^(n+1) +
// D^(-n)/(n g) by integral comparison, where D = first_omitted_distance.
double tail_bound(const TailModel& tail, double x, int n, double first_omitted_distance);

// a_n(x) over listed zeros plus the origin zero of order ell; summed in
// ascending |lambda_i - x| with compensated summation.  tail_radius sums
// tail_bound over the modeled arms.
CoeffValue coefficient(const ZeroConfig& config, double x, int n, const CoeffOptions& opts = {});

// All of a_1(x) .. a_{n_max}(x) in one pass (identical values to per-index
// coefficient calls; powers are built incrementally per zero).
std::vector<CoeffValue> coefficients_batch(const ZeroConfig& config, double x, int n_max,
                                           const CoeffOptions& opts = {});

// Extended-precision a_n(x) used as an oracle by tests and by consumers that
// need more than binary64; no round-off tracking (precision is the budget).
BigComplex coefficient_big(const ZeroConfig& config, double x, int n, mpfr_prec_t prec,
                           const CoeffOptions& opts = {});

}  // namespace g1lp
