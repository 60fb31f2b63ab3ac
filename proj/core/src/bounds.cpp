#include "g1lp/bounds.hpp"

#include <cmath>

#include "g1lp/errors.hpp"
#include "g1lp/numeric.hpp"

namespace g1lp {

namespace {

const double kPi = std::acos(-1.0);
constexpr double kLn2 = 0.6931471805599453;

// coth(u) = 1 + 2/(e^(2u) - 1); expm1 keeps small u accurate.
double coth(double u) { return 1.0 + 2.0 / std::expm1(2.0 * u); }

}  // namespace

double thm1_bound() { return std::sqrt(3.0) / kPi; }

double refined_kappa_bound(double tol) {
  if (!(tol > 0.0)) throw DomainError("bisection tolerance must be positive");
  auto f = [](double k) { return k * kPi * coth(k * kPi) - 2.0; };
  double lo = 0.1;
  double hi = 2.0;
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    if (f(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double thm2_N_bound(double kappa) {
  if (!(kappa > 0.0)) throw DomainError("matrix-order bound requires kappa > 0");
  double s = std::sqrt(1.0 + kappa * kappa);
  double base = std::log(4.0 * kPi * kPi / 3.0 + 4.0) / kLn2;
  double factor = kPi * kPi * kPi * std::sqrt(3.0) / kLn2;
  return base + factor * std::pow(kappa + s, 6.0) * s * s * s;
}

double thm3_bound(double C, double gamma, long long j, double re_half) {
  if (!(C > 0.0)) throw DomainError("spacing bound requires C > 0");
  if (!(gamma >= 0.0)) throw DomainError("spacing bound requires gamma >= 0");
  if (j < 1) throw DomainError("spacing bound requires j >= 1");
  if (!(re_half > 0.0)) throw DomainError("spacing bound requires re_half > 0");
  double constant = j == 1 ? std::sqrt(3.0) / kPi : std::sqrt(3.0) / (2.0 * kPi);
  return C * constant * std::pow(re_half, gamma);
}

std::string to_string(RegionKind kind) {
  switch (kind) {
    case RegionKind::HRRH1:
      return "hrrh1";
    case RegionKind::HRRHN:
      return "hrrhn";
    case RegionKind::Ford:
      return "ford";
  }
  return "unknown";
}

double corollary_offset(RegionKind kind, const RegionParams& params) {
  switch (kind) {
    case RegionKind::HRRH1:
      return 159.0 * std::sqrt(3.0) / (2.0 * kPi);
    case RegionKind::HRRHN: {
      if (!params.M) throw DomainError("the order-N region requires a spacing constant M");
      if (!params.N) throw DomainError("the order-N region requires the order N");
      if (!(*params.M > 0.0)) throw DomainError("M must be positive");
      if (*params.N < 5) throw DomainError("the order-N region requires N >= 5");
      return 159.0 * *params.M / 2.0 * std::pow(static_cast<double>(*params.N), 1.0 / 9.0);
    }
    case RegionKind::Ford:
      break;
  }
  throw DomainError("no constant offset for this region kind");
}

std::function<double(double)> corollary_region(RegionKind kind, const RegionParams& params) {
  double o = corollary_offset(kind, params);
  return [o](double) { return o; };
}

double est1_rhs(double t, double b, double c) {
  if (!(t > 0.0) || !(b > 0.0) || !(c > 0.0)) {
    throw DomainError("est1 evaluation requires positive t, b, c");
  }
  double d = std::hypot(b, c);
  double la = std::log(2.0 * kPi * kPi * t * t / (3.0 * c * c)) + 2.0 * t / d;
  double lb = std::log(0.5) + 4.0 * t / (b + d);
  if (la < 700.0 && lb < 700.0) {
    return std::exp(la) - std::exp(lb) + 1.0;
  }
  // |e^la - e^lb| = e^max (1 - e^(-|la-lb|))
  double hi = std::max(la, lb);
  double diff = std::abs(la - lb);
  if (diff == 0.0) return 1.0;
  double mag = std::exp(hi + std::log1p(-std::exp(-diff)));
  return (la > lb ? mag : -mag) + 1.0;
}

std::string to_string(BoundName name) {
  switch (name) {
    case BoundName::Thm1:
      return "thm1";
    case BoundName::Refined:
      return "refined";
    case BoundName::Thm2N:
      return "thm2";
    case BoundName::Thm3:
      return "thm3";
    case BoundName::Corollary1:
      return "corollary1";
    case BoundName::Corollary2:
      return "corollary2";
  }
  return "unknown";
}

nlohmann::json BoundReport::to_json() const {
  nlohmann::json j;
  j["name"] = to_string(name);
  nlohmann::json in = nlohmann::json::object();
  for (const auto& [k, v] : inputs) in[k] = v;
  j["inputs"] = in;
  j["value"] = std::isfinite(value) ? nlohmann::json(value)
                                    : nlohmann::json(value > 0 ? "inf" : "-inf");
  if (!notes.empty()) j["notes"] = notes;
  return j;
}

}  // namespace g1lp
