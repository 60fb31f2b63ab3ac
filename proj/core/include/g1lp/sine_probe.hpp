#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "g1lp/bigfloat.hpp"
#include "g1lp/coeff_series.hpp"
#include "g1lp/zero_model.hpp"

namespace g1lp {

// Degree-N Taylor polynomial of sin at 0: S_N(z) = sum_k (-1)^k z^(2k+1)/(2k+1)!
// for 2k+1 <= N.  Even coefficients are zero; S_N(0) = 0 with real
// coefficients, so S_N is admissible as a quadratic-form test polynomial.
struct SineTaylor {
  int degree = 1;
  std::vector<double> odd_coeffs;  // c_1, c_3, ... as doubles

  static SineTaylor make(int degree);
  // c_1, c_3, ... at the requested precision (recurrence, not factorials).
  static std::vector<BigFloat> odd_coeffs_big(int degree, mpfr_prec_t prec);
  // Dense (q_1..q_degree) view for quadratic_form.
  std::vector<double> dense() const;
};

// Result of a probe sum over the listed zeros.
//   value       compensated sum (listed zeros only)
//   round_off   two-sided bound on the numeric error of value
//   tail_upper  one-sided upper bound on the omitted tail's contribution
//               (the tail itself is >= 0 for real tails, so the true total
//               lies in [value - round_off, value + round_off + tail_upper])
//   upper_bound value + round_off + tail_upper rounded upward at the working
//               precision; the certified ceiling on the true total
//   sign_certified  |value| > round_off at the precision finally used
struct ProbeSum {
  double value = 0.0;
  double round_off = 0.0;
  double tail_upper = 0.0;
  double upper_bound = 0.0;
  bool sign_certified = false;
  int precision_bits = 53;
};

struct ProbeOptions {
  CoeffOptions coeff;
  mpfr_prec_t max_precision_bits = 4096;
};

// sum_i m_i re(sin^2(t/(lambda_i - x))) using re(sin^2(u+iv)) =
// sin^2(u) cosh^2(v) - cos^2(u) sinh^2(v).  Escalates to extended precision
// when binary64 overflows or cannot certify the sign; never throws for
// uncertified results (the flag reports it).  Tail arms contribute at most
// t^2 * tail_bound(n=1) since |sin r| <= |r| on the real line.
ProbeSum sin_sq_sum(const ZeroConfig& config, double x, double t, const ProbeOptions& opts = {});

// sum_i m_i re(S_N(t/(lambda_i - x))^2), Horner evaluation; retries at
// doubled mantissa width (53 -> 128 -> 256 -> ... -> max_precision_bits)
// until the sign certifies.  Throws PrecisionError when the cap is reached
// with the sign still uncertified.  Real tail arms contribute at most
// cosh^2(t/D) t^2 * tail_bound(n=1) since |S_N(r)| <= r cosh(r) pointwise.
ProbeSum taylor_sq_sum(const ZeroConfig& config, double x, double t, int N,
                       const ProbeOptions& opts = {});

// t-tilde = pi^2 c (1+kappa^2)^(3/2) (sqrt(1+kappa^2)+kappa)^6, the probe
// scale at which the sine test is guaranteed to cross its threshold.
double witness_t(double c, double kappa);

// ceil(ln(4 pi^2/3 + 4)/ln 2 + (3 t/(ln 2 * c)) max{1, 1/kappa}): Taylor
// degree sufficient for the polynomial test at probe scale t.
long long witness_N(double c, double kappa, double t);

// 2 z^(N+1) e^(2R) / (2R)^(N+1) for |z| = z_mag <= R, computed in log space.
double taylor_remainder_bound(double z_mag, double R, int N);

enum class ProbeMode { SinSum, TaylorSum };

struct Witness {
  double x = 0.0;
  double t = 0.0;
  std::optional<int> order;  // empty = full sine
  double value = 0.0;
  ProbeMode kind = ProbeMode::SinSum;
  bool certified = false;

  nlohmann::json to_json() const;
};

struct WitnessOptions {
  ProbeOptions probe;
  int t_samples = 128;
  int refine_iters = 48;
  int threads = 1;
};

// Searches for a certified negative probe value: threshold -1 for SinSum,
// 0 for TaylorSum, where certified means upper_bound < threshold (so the
// true total, tail included, is below the threshold).  Candidate x: re of
// every complex zero within the proof's half-epsilon window above the
// minimal height (all minimal-height zeros when the window degenerates).
// Candidate t: log-spaced on [b/10, t-tilde] (upper end 100 b when t-tilde
// is unavailable) plus golden-section refinement around the most negative
// probe.  Returns the most negative certified witness (ties: smaller t,
// then smaller x), or nothing.
std::optional<Witness> witness_search(const ZeroConfig& config, ProbeMode mode,
                                      std::optional<int> N = std::nullopt,
                                      const WitnessOptions& opts = {});

}  // namespace g1lp
