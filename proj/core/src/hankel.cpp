#include "g1lp/hankel.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <set>

#include <Eigen/Eigenvalues>

#include "g1lp/errors.hpp"
#include "g1lp/numeric.hpp"

namespace g1lp {

std::string to_string(Psd verdict) {
  switch (verdict) {
    case Psd::PSD:
      return "PSD";
    case Psd::NotPSD:
      return "NotPSD";
    case Psd::Inconclusive:
      return "Inconclusive";
  }
  return "Inconclusive";
}

HankelMatrix build_hankel(const ZeroConfig& config, double x, int N, const CoeffOptions& opts) {
  if (N < 1) throw DomainError("Hankel order must be >= 1");
  HankelMatrix hm;
  hm.N = N;
  hm.x = x;
  hm.entries = coefficients_batch(config, x, 2 * N - 1, opts);
  hm.matrix.resize(N, N);
  for (const auto& e : hm.entries) {
    // For conjugate-closed inputs the imaginary parts cancel to round-off;
    // anything bigger is a malformed configuration.
    double budget = std::max(e.round_off, 1e-15);
    if (std::abs(e.value.imag()) > budget) {
      throw RealnessError("a_" + std::to_string(e.n) + "(" + format_double(x) +
                          ") has imaginary part " + format_double(e.value.imag()) +
                          " beyond the round-off budget; config is not conjugate-closed");
    }
    hm.max_tail_radius = std::max(hm.max_tail_radius, e.tail_radius);
    hm.max_round_off = std::max(hm.max_round_off, e.round_off);
  }
  for (int j = 0; j < N; ++j) {
    for (int k = 0; k < N; ++k) {
      hm.matrix(j, k) = hm.entries[static_cast<std::size_t>(j + k)].value.real();
    }
  }
  return hm;
}

HankelVerdict psd_check(const HankelMatrix& matrix, double tolerance) {
  HankelVerdict v;
  v.matrix = matrix;
  if (!matrix.matrix.allFinite()) {
    throw NumericalError("Hankel matrix has non-finite entries");
  }
  double norm_estimate = matrix.matrix.cwiseAbs().rowwise().sum().maxCoeff();
  v.tolerance = tolerance >= 0.0 ? tolerance : 1e-10 * (1.0 + norm_estimate);
  v.tail_budget = matrix.max_tail_radius + matrix.max_round_off;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(matrix.matrix);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("symmetric eigensolver failed to converge");
  }
  v.min_eigenvalue = solver.eigenvalues()(0);

  double margin = v.tail_budget * matrix.N;
  if (v.min_eigenvalue >= -v.tolerance && v.min_eigenvalue - margin >= -v.tolerance) {
    v.verdict = Psd::PSD;
  } else if (v.min_eigenvalue + margin < -v.tolerance) {
    v.verdict = Psd::NotPSD;
    Eigen::VectorXd vec = solver.eigenvectors().col(0);
    v.certificate.assign(vec.data(), vec.data() + vec.size());
  } else {
    v.verdict = Psd::Inconclusive;
  }
  return v;
}

double quadratic_form(const ZeroConfig& config, double x, std::span<const double> q_coeffs,
                      double t, const CoeffOptions& opts) {
  if (q_coeffs.empty()) throw DomainError("quadratic_form requires deg q >= 1");
  double delta = opts.delta_factor * std::max(1.0, std::abs(x));
  Accumulator acc;
  auto add_zero = [&](double re, double im, int mult) {
    if (im == 0.0 && std::abs(re - x) < delta) {
      throw PoleError("x = " + format_double(x) + " is within " + format_double(delta) +
                      " of the real zero at " + format_double(re));
    }
    std::complex<double> z(re - x, im);
    std::complex<double> u = t / z;
    // q(u) = u * (q_1 + u*(q_2 + ...)) by Horner; q(0) = 0 by construction.
    std::complex<double> h = 0.0;
    for (std::size_t i = q_coeffs.size(); i-- > 0;) {
      h = h * u + q_coeffs[i];
    }
    std::complex<double> w = h * u;
    acc.add(static_cast<double>(mult) * (w * w).real());
  };
  if (config.ell() > 0) add_zero(0.0, 0.0, config.ell());
  for (const auto& z : config.zeros()) add_zero(z.re, z.im, z.multiplicity);
  return acc.value();
}

std::vector<double> default_grid(const ZeroConfig& config, int points_per_gap,
                                 double delta_factor) {
  if (points_per_gap < 0) throw DomainError("points_per_gap must be >= 0");
  std::set<double> res;  // distinct abscissae incl. the origin zero
  if (config.ell() > 0) res.insert(0.0);
  for (const auto& z : config.zeros()) res.insert(z.re);

  std::vector<double> candidates;
  for (const auto& z : config.zeros()) {
    if (z.im != 0.0) candidates.push_back(z.re);
  }
  std::vector<double> sorted_re(res.begin(), res.end());
  for (std::size_t i = 0; i + 1 < sorted_re.size(); ++i) {
    double lo = sorted_re[i];
    double hi = sorted_re[i + 1];
    candidates.push_back(0.5 * (lo + hi));
    for (int k = 1; k <= points_per_gap; ++k) {
      candidates.push_back(lo + (hi - lo) * k / (points_per_gap + 1.0));
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<double> grid;
  for (double xv : candidates) {
    double delta = delta_factor * std::max(1.0, std::abs(xv));
    bool excluded = config.ell() > 0 && std::abs(xv) < delta;
    if (!excluded) {
      for (const auto& z : config.zeros()) {
        if (z.im == 0.0 && std::abs(z.re - xv) < delta) {
          excluded = true;
          break;
        }
      }
    }
    if (!excluded) grid.push_back(xv);
  }
  return grid;
}

ScanReport nlp_scan(const ZeroConfig& config, int N, std::span<const double> grid,
                    const ScanOptions& opts) {
  if (N < 1) throw DomainError("Hankel order must be >= 1");
  ScanReport report;
  report.N = N;

  // Pole-proximity exclusion up front; excluded points get no verdict.
  std::vector<double> admitted;
  for (double xv : grid) {
    double delta = opts.coeff.delta_factor * std::max(1.0, std::abs(xv));
    std::string reason;
    if (config.ell() > 0 && std::abs(xv) < delta) {
      reason = "within pole-exclusion radius of the origin zero";
    } else {
      for (const auto& z : config.zeros()) {
        if (z.im == 0.0 && std::abs(z.re - xv) < delta) {
          reason = "within pole-exclusion radius of the real zero at " + format_double(z.re);
          break;
        }
      }
    }
    if (reason.empty()) {
      admitted.push_back(xv);
    } else {
      report.excluded.push_back({xv, std::move(reason)});
    }
  }

  report.verdicts.resize(admitted.size());
  parallel_for(admitted.size(), opts.threads, [&](std::size_t i) {
    double xv = admitted[i];
    try {
      HankelMatrix hm = build_hankel(config, xv, N, opts.coeff);
      report.verdicts[i] = psd_check(hm, opts.tolerance);
    } catch (const Error& e) {
      HankelVerdict v;
      v.matrix.N = N;
      v.matrix.x = xv;
      v.min_eigenvalue = std::numeric_limits<double>::quiet_NaN();
      v.verdict = Psd::Inconclusive;
      v.reason = e.what();
      report.verdicts[i] = std::move(v);
    }
  });

  for (const auto& v : report.verdicts) {
    if (v.verdict == Psd::NotPSD) report.any_not_psd = true;
    if (v.verdict == Psd::Inconclusive) report.any_inconclusive = true;
  }
  return report;
}

int max_nlp_order(const ZeroConfig& config, std::span<const double> grid, int n_max,
                  const ScanOptions& opts) {
  if (n_max < 1) throw DomainError("n_max must be >= 1");
  for (int n = 1; n <= n_max; ++n) {
    ScanReport rep = nlp_scan(config, n, grid, opts);
    if (rep.any_not_psd) return n - 1;
  }
  return n_max;
}

nlohmann::json HankelVerdict::to_json() const {
  nlohmann::json j;
  j["x"] = matrix.x;
  j["N"] = matrix.N;
  j["min_eig"] = std::isfinite(min_eigenvalue) ? nlohmann::json(min_eigenvalue)
                                               : nlohmann::json(nullptr);
  j["tolerance"] = tolerance;
  j["tail_budget"] = tail_budget;
  j["verdict"] = to_string(verdict);
  if (!certificate.empty()) j["certificate"] = certificate;
  if (!reason.empty()) j["reason"] = reason;
  return j;
}

nlohmann::json ScanReport::to_json() const {
  nlohmann::json j;
  j["N"] = N;
  j["any_not_psd"] = any_not_psd;
  j["any_inconclusive"] = any_inconclusive;
  j["verdicts"] = nlohmann::json::array();
  for (const auto& v : verdicts) j["verdicts"].push_back(v.to_json());
  j["excluded"] = nlohmann::json::array();
  for (const auto& e : excluded) {
    j["excluded"].push_back({{"x", e.x}, {"reason", e.reason}});
  }
  return j;
}

}  // namespace g1lp
