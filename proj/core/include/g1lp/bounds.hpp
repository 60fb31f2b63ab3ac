#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

namespace g1lp {

// sqrt(3)/pi, the unconditional aperture threshold: every genus-one
// configuration in the first-order class has kappa >= this.
double thm1_bound();

// Unique positive root of kappa*pi*coth(kappa*pi) = 2, bisected on
// [0.1, 2] to absolute tolerance tol.  The left side increases strictly
// from 1 as kappa -> 0+, so the bracket is valid.
double refined_kappa_bound(double tol = 1e-12);

// ln(4 pi^2/3 + 4)/ln 2 + (pi^3 sqrt(3)/ln 2)(kappa + sqrt(1+kappa^2))^6
// (1+kappa^2)^(3/2): a matrix order sufficient to detect any violation at
// aperture kappa.  Grows like kappa^9.
double thm2_N_bound(double kappa);

// Spacing lower bound for strongly spaced configurations:
// C*(sqrt(3)/pi)*re_half^gamma for j = 1, C*(sqrt(3)/(2 pi))*re_half^gamma
// for j > 1, where re_half = |Re(lambda_{floor(j/2)})| (|Re(lambda_1)| when
// j = 1).
double thm3_bound(double C, double gamma, long long j, double re_half);

enum class RegionKind { HRRH1, HRRHN, Ford };
std::string to_string(RegionKind kind);

struct RegionParams {
  std::optional<long long> N;  // HRRHN matrix order, >= 5
  std::optional<double> M;     // HRRHN spacing constant, > 0 (caller-supplied:
                               // only its existence is known, not its value)
};

// Constant boundary offset o such that off-line zeros rho must satisfy
// |1/2 - Re(rho)| >= o/|Im(rho)|: o = 159 sqrt(3)/(2 pi) for HRRH1,
// o = (159 M / 2) N^(1/9) for HRRHN.
double corollary_offset(RegionKind kind, const RegionParams& params = {});

// Same offset packaged as a function handle t -> o (t-independent for both
// corollaries; the handle form matches the region-curve interface).
std::function<double(double)> corollary_region(RegionKind kind, const RegionParams& params = {});

// (2 pi^2 t^2 / (3 c^2)) e^(2t/d) - (1/2) e^(4t/(b+d)) + 1 with
// d = sqrt(b^2 + c^2), evaluated in log space so witness-scale t does not
// overflow; +-inf results are honest limits.
double est1_rhs(double t, double b, double c);

enum class BoundName { Thm1, Refined, Thm2N, Thm3, Corollary1, Corollary2 };
std::string to_string(BoundName name);

struct BoundReport {
  BoundName name = BoundName::Thm1;
  std::map<std::string, double> inputs;
  double value = 0.0;
  std::string notes;

  nlohmann::json to_json() const;
};

}  // namespace g1lp
