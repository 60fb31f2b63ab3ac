#include "g1lp/zero_model.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <tuple>

#include "g1lp/errors.hpp"

namespace g1lp {

namespace {

double normalize_signed_zero(double x) { return x == 0.0 ? 0.0 : x; }

bool mutually_conjugate(const Zero& a, const Zero& b) {
  return a.re == b.re && a.im == -b.im && a.im != 0.0;
}

void snap_zeros(std::vector<Zero>& zeros, double tol) {
  for (auto& z : zeros) {
    if (std::abs(z.im) <= tol) z.im = 0.0;
  }
  std::vector<bool> used(zeros.size(), false);
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    if (zeros[i].im <= 0.0) continue;
    std::size_t best = zeros.size();
    double best_d = tol;
    for (std::size_t j = 0; j < zeros.size(); ++j) {
      if (used[j] || zeros[j].im >= 0.0) continue;
      double d = std::max(std::abs(zeros[i].re - zeros[j].re),
                          std::abs(zeros[i].im + zeros[j].im));
      if (d <= best_d) {
        best_d = d;
        best = j;
      }
    }
    if (best == zeros.size()) continue;
    used[best] = true;
    double re = 0.5 * (zeros[i].re + zeros[best].re);
    double im = 0.5 * (zeros[i].im - zeros[best].im);
    zeros[i] = {re, im, zeros[i].multiplicity};
    zeros[best] = {re, -im, zeros[best].multiplicity};
  }
}

}  // namespace

ZeroConfig::ZeroConfig(std::vector<Zero> zeros, int ell, double d2,
                       std::optional<TailModel> tail, const ConfigOptions& opts)
    : zeros_(std::move(zeros)), ell_(ell), d2_(d2), tail_(std::move(tail)) {
  if (ell_ < 0) throw DomainError("ell must be non-negative");
  if (!std::isfinite(d2_)) throw DomainError("d2 must be finite");
  for (auto& z : zeros_) {
    if (!std::isfinite(z.re) || !std::isfinite(z.im)) {
      throw DomainError("zero coordinates must be finite");
    }
    if (z.multiplicity < 1) throw DomainError("multiplicity must be >= 1");
    z.re = normalize_signed_zero(z.re);
    z.im = normalize_signed_zero(z.im);
    if (z.re == 0.0 && z.im == 0.0) {
      throw DomainError("a zero at the origin must be modeled by ell, not listed");
    }
  }
  if (opts.snap_tolerance > 0.0) snap_zeros(zeros_, opts.snap_tolerance);
  if (opts.require_f0_nonzero && ell_ != 0) {
    throw DomainError("this construction requires f(0) != 0, so ell must be 0");
  }
  if (tail_ && tail_->kind == TailModel::Kind::None) tail_.reset();
  if (tail_) {
    if (!std::isfinite(tail_->start) || !std::isfinite(tail_->gap)) {
      throw DomainError("tail parameters must be finite");
    }
    if (tail_->gap <= 0.0) throw DomainError("tail gap must be positive");
    if (tail_->symmetric && tail_->start <= 0.0) {
      throw DomainError("a symmetric tail requires start > 0");
    }
  }
  std::sort(zeros_.begin(), zeros_.end(), [](const Zero& a, const Zero& b) {
    return std::tie(a.re, a.im) < std::tie(b.re, b.im);
  });
  std::vector<Zero> merged;
  merged.reserve(zeros_.size());
  for (const auto& z : zeros_) {
    if (!merged.empty() && merged.back().re == z.re && merged.back().im == z.im) {
      merged.back().multiplicity += z.multiplicity;
    } else {
      merged.push_back(z);
    }
  }
  zeros_ = std::move(merged);
}

bool validate_conjugate_symmetry(const ZeroConfig& config) {
  const auto& zs = config.zeros();
  for (const auto& z : zs) {
    if (z.im == 0.0) continue;
    Zero want{z.re, -z.im, z.multiplicity};
    bool found = std::any_of(zs.begin(), zs.end(), [&](const Zero& w) { return w == want; });
    if (!found) return false;
  }
  return true;
}

SpacingReport spacing_report(const ZeroConfig& config) {
  const auto& zs = config.zeros();
  SpacingReport rep;

  for (std::size_t i = 0; i < zs.size(); ++i) {
    double a = std::abs(zs[i].im);
    if (a != 0.0 && a < rep.b) {
      rep.b = a;
      rep.b_index = i;
    }
  }

  for (const auto& z : zs) {
    if (z.multiplicity > 1) {
      rep.repeated_zero = true;
      break;
    }
  }

  double c = kInf;
  std::optional<std::pair<std::size_t, std::size_t>> c_pair;
  bool any_admissible = false;
  // Zeros are sorted by (re, im): the minimal |re difference| over admissible
  // pairs is attained either inside an equal-re group or between consecutive
  // distinct re values.
  std::size_t i = 0;
  while (i < zs.size()) {
    std::size_t j = i;
    while (j < zs.size() && zs[j].re == zs[i].re) ++j;
    // pairs within the group: admissible unless mutually conjugate
    for (std::size_t p = i; p < j && !rep.equal_re_nonconjugate; ++p) {
      for (std::size_t q = p + 1; q < j; ++q) {
        if (!mutually_conjugate(zs[p], zs[q])) {
          rep.equal_re_nonconjugate = true;
          any_admissible = true;
          if (0.0 < c) {
            c = 0.0;
            c_pair = {p, q};
          }
          break;
        }
      }
    }
    if (j < zs.size()) {
      any_admissible = true;
      double gap = zs[j].re - zs[i].re;
      if (gap < c) {
        c = gap;
        c_pair = {i, j};
      }
    }
    i = j;
  }
  if (rep.repeated_zero) {
    c = 0.0;
    c_pair.reset();
    any_admissible = true;
  }
  if (!any_admissible) {
    c = kInf;
    rep.empty_pair_set = true;
  }
  if (config.tail()) {
    double tail_c = config.tail()->gap;
    if (config.tail()->symmetric) tail_c = std::min(tail_c, 2.0 * config.tail()->start);
    if (tail_c < c) {
      c = tail_c;
      c_pair.reset();
      rep.tail_limited_c = true;
      rep.empty_pair_set = false;
    }
  }
  rep.c = c;
  rep.c_pair = c_pair;

  if (rep.c == 0.0 || rep.b == kInf) {
    rep.kappa = kInf;
  } else if (rep.c == kInf) {
    rep.kappa = 0.0;
  } else {
    rep.kappa = rep.b / rep.c;
  }
  return rep;
}

double spacing_constant(const ZeroConfig& config) { return spacing_report(config).c; }

double height(const ZeroConfig& config) { return spacing_report(config).b; }

double aperture(const ZeroConfig& config) { return spacing_report(config).kappa; }

double strong_spacing_fit(const ZeroConfig& config, double gamma) {
  const auto& zs = config.zeros();
  for (const auto& z : zs) {
    if (z.re <= 0.0) throw DomainError("strong spacing requires all re > 0");
  }
  for (const auto& z : zs) {
    if (z.multiplicity > 1) return 0.0;
  }
  double c_fit = kInf;
  for (std::size_t j = 0; j + 1 < zs.size(); ++j) {
    if (mutually_conjugate(zs[j], zs[j + 1])) continue;
    double gap = zs[j + 1].re - zs[j].re;
    if (gap <= 0.0) return 0.0;
    double ratio = gap / std::pow(std::abs(zs[j].re), gamma);
    c_fit = std::min(c_fit, ratio);
  }
  return c_fit;
}

ZeroConfig power_zeros(const ZeroConfig& config, int n) {
  if (n < 1) throw DomainError("power_zeros requires n >= 1");
  std::vector<Zero> out;
  out.reserve(config.zeros().size());
  for (const auto& z : config.zeros()) {
    std::complex<double> w(z.re, z.im);
    for (int k = 0; k < n; ++k) w *= w;
    out.push_back({w.real(), w.imag(), z.multiplicity});
  }
  return ZeroConfig(std::move(out), config.ell(), config.d2());
}

ZeroConfig ZeroConfig::from_json(const nlohmann::json& j, const ConfigOptions& opts) {
  auto number_field = [](const nlohmann::json& v, const char* name) -> double {
    if (v.is_string()) return parse_double(v.get<std::string>());
    if (v.is_number()) return v.get<double>();
    throw DomainError(std::string("field '") + name + "' must be a number or decimal string");
  };
  if (!j.is_object()) throw DomainError("zero config must be a JSON object");
  int ell = j.value("ell", 0);
  double d2 = j.contains("d2") ? number_field(j.at("d2"), "d2") : 0.0;
  std::vector<Zero> zeros;
  if (j.contains("zeros")) {
    if (!j.at("zeros").is_array()) throw DomainError("'zeros' must be an array");
    for (const auto& e : j.at("zeros")) {
      Zero z;
      z.re = number_field(e.at("re"), "re");
      z.im = e.contains("im") ? number_field(e.at("im"), "im") : 0.0;
      z.multiplicity = e.value("mult", 1);
      zeros.push_back(z);
    }
  }
  std::optional<TailModel> tail;
  if (j.contains("tail") && !j.at("tail").is_null()) {
    const auto& t = j.at("tail");
    TailModel tm;
    std::string kind = t.value("kind", "arithmetic_real");
    if (kind == "arithmetic_real") {
      tm.kind = TailModel::Kind::ArithmeticReal;
    } else if (kind == "none") {
      tm.kind = TailModel::Kind::None;
    } else {
      throw DomainError("unknown tail kind '" + kind + "'");
    }
    if (tm.kind != TailModel::Kind::None) {
      tm.start = number_field(t.at("start"), "start");
      tm.gap = number_field(t.at("gap"), "gap");
      tm.symmetric = t.value("symmetric", false);
      tail = tm;
    }
  }
  return ZeroConfig(std::move(zeros), ell, d2, std::move(tail), opts);
}

nlohmann::json ZeroConfig::to_json() const {
  nlohmann::json j;
  j["ell"] = ell_;
  j["d2"] = d2_;
  j["zeros"] = nlohmann::json::array();
  for (const auto& z : zeros_) {
    j["zeros"].push_back({{"re", format_double(z.re)},
                          {"im", format_double(z.im)},
                          {"mult", z.multiplicity}});
  }
  if (tail_) {
    j["tail"] = {{"kind", "arithmetic_real"},
                 {"start", tail_->start},
                 {"gap", tail_->gap},
                 {"symmetric", tail_->symmetric}};
  } else {
    j["tail"] = nullptr;
  }
  return j;
}

nlohmann::json SpacingReport::to_json() const {
  auto ext = [](double v) -> nlohmann::json {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
  };
  nlohmann::json j;
  j["c"] = ext(c);
  j["b"] = ext(b);
  j["kappa"] = ext(kappa);
  if (c_pair) {
    j["c_pair"] = {c_pair->first, c_pair->second};
  } else {
    j["c_pair"] = nullptr;
  }
  if (b_index) {
    j["b_index"] = *b_index;
  } else {
    j["b_index"] = nullptr;
  }
  j["repeated_zero"] = repeated_zero;
  j["equal_re_nonconjugate"] = equal_re_nonconjugate;
  j["empty_pair_set"] = empty_pair_set;
  j["tail_limited_c"] = tail_limited_c;
  return j;
}

}  // namespace g1lp
