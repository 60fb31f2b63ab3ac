#pragma once

#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "g1lp/coeff_series.hpp"
#include "g1lp/zero_model.hpp"

namespace g1lp {

// Truncated Hankel matrix A_N(x) with entry (j,k) = re(a_{j+k-1}(x)),
// 1-based j,k.  Symmetry and Hankel structure hold by construction.
struct HankelMatrix {
  int N = 0;
  double x = 0.0;
  std::vector<CoeffValue> entries;  // a_1 .. a_{2N-1}
  Eigen::MatrixXd matrix;
  // Entrywise perturbation budgets over all entries.
  double max_tail_radius = 0.0;
  double max_round_off = 0.0;
};

enum class Psd { PSD, NotPSD, Inconclusive };

std::string to_string(Psd verdict);

// Sign classification of min eig(A_N(x)) under the entrywise uncertainty
// budget: PSD when min_eig >= -tol and min_eig - N*tail_budget >= -tol;
// NotPSD when min_eig + N*tail_budget < -tol; else Inconclusive.
// tail_budget = max entrywise (tail_radius + round_off); the N* factor is
// Weyl's inequality for an entrywise perturbation.
struct HankelVerdict {
  HankelMatrix matrix;
  double min_eigenvalue = 0.0;
  double tolerance = 0.0;
  double tail_budget = 0.0;
  Psd verdict = Psd::Inconclusive;
  // Unit eigenvector of the minimal eigenvalue when NotPSD, as coefficients
  // (v_1..v_N) of the witness polynomial q(z) = sum v_j z^j reusable in
  // quadratic_form.
  std::vector<double> certificate;
  // Non-empty when the verdict came from an evaluation error.
  std::string reason;

  nlohmann::json to_json() const;
};

struct ScanOptions {
  double tolerance = -1.0;  // < 0: auto, 1e-10 * (1 + norm estimate)
  CoeffOptions coeff;
  int threads = 1;
};

struct ExcludedPoint {
  double x = 0.0;
  std::string reason;
};

struct ScanReport {
  int N = 0;
  std::vector<HankelVerdict> verdicts;  // admitted points, grid order
  std::vector<ExcludedPoint> excluded;
  bool any_not_psd = false;
  bool any_inconclusive = false;

  nlohmann::json to_json() const;
};

HankelMatrix build_hankel(const ZeroConfig& config, double x, int N,
                          const CoeffOptions& opts = {});

// tolerance < 0 selects the default 1e-10 * (1 + ||A||_inf).
HankelVerdict psd_check(const HankelMatrix& matrix, double tolerance = -1.0);

// sum_i m_i re(q(t/(lambda_i - x))^2) for a real polynomial q with q(0) = 0,
// passed as coefficients (q_1..q_deg) of z..z^deg.
double quadratic_form(const ZeroConfig& config, double x, std::span<const double> q_coeffs,
                      double t, const CoeffOptions& opts = {});

// One verdict per admitted grid point in grid order; pole-excluded points are
// reported, not silently dropped; per-point evaluation errors yield
// Inconclusive verdicts carrying the reason.
ScanReport nlp_scan(const ZeroConfig& config, int N, std::span<const double> grid,
                    const ScanOptions& opts = {});

// Midpoints of consecutive distinct re(lambda_i) plus points_per_gap uniform
// interior points per gap, plus re(lambda) of every non-real zero; clipped by
// the pole-exclusion radius.  Failures of the Hankel conditions concentrate
// at the abscissae of complex zeros and between consecutive real zeros.
std::vector<double> default_grid(const ZeroConfig& config, int points_per_gap = 8,
                                 double delta_factor = 1e-6);

// Largest N <= n_max whose scan over the grid has no NotPSD verdict; 0 when
// N = 1 already fails.  Nested classes make the first failing order final
// for this grid.
int max_nlp_order(const ZeroConfig& config, std::span<const double> grid, int n_max,
                  const ScanOptions& opts = {});

}  // namespace g1lp
