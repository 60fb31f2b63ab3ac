#include "g1lp/coeff_series.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "g1lp/errors.hpp"
#include "g1lp/numeric.hpp"

namespace g1lp {

namespace {

struct Term {
  double re;
  double im;
  int mult;
  double dist;
};

// Listed zeros plus the ell-fold origin zero, sorted ascending by |lambda - x|
// (ties by (re, im) for determinism), with the pole exclusion applied.
std::vector<Term> sorted_terms(const ZeroConfig& config, double x, const CoeffOptions& opts) {
  double delta = opts.delta_factor * std::max(1.0, std::abs(x));
  std::vector<Term> terms;
  terms.reserve(config.zeros().size() + 1);
  if (config.ell() > 0) {
    if (std::abs(x) < delta) {
      throw PoleError("x = " + format_double(x) + " is within " + format_double(delta) +
                      " of the origin zero");
    }
    terms.push_back({0.0, 0.0, config.ell(), std::abs(x)});
  }
  for (const auto& z : config.zeros()) {
    if (z.im == 0.0 && std::abs(z.re - x) < delta) {
      throw PoleError("x = " + format_double(x) + " is within " + format_double(delta) +
                      " of the real zero at " + format_double(z.re));
    }
    terms.push_back({z.re, z.im, z.multiplicity, std::hypot(z.re - x, z.im)});
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return std::tie(a.dist, a.re, a.im) < std::tie(b.dist, b.re, b.im);
  });
  return terms;
}

// Certified distance from x to the first zero of each modeled tail arm;
// throws if x does not lie strictly outside an arm.
std::vector<double> arm_distances(const TailModel& tail, double x) {
  std::vector<double> out;
  if (tail.kind != TailModel::Kind::ArithmeticReal) return out;
  if (tail.symmetric) {
    double s = tail.start;
    if (!(x < s) || !(x > -s)) {
      throw DomainError("x must lie strictly between the symmetric tail arms");
    }
    out.push_back(s - x);
    out.push_back(x + s);
  } else {
    // one arm marching away from the origin from `start`
    if (tail.start >= 0.0) {
      if (!(x < tail.start)) throw DomainError("x must lie left of the tail start");
      out.push_back(tail.start - x);
    } else {
      if (!(x > tail.start)) throw DomainError("x must lie right of the tail start");
      out.push_back(x - tail.start);
    }
  }
  return out;
}

}  // namespace

double tail_bound(const TailModel& tail, double x, int n, double first_omitted_distance) {
  (void)x;
  if (tail.kind != TailModel::Kind::ArithmeticReal) {
    throw DomainError("tail_bound requires an arithmetic real tail");
  }
  if (n < 1) throw DomainError("tail_bound requires n >= 1");
  if (!(first_omitted_distance > 0.0)) {
    throw DomainError("first omitted distance must be positive");
  }
  double d = first_omitted_distance;
  return std::pow(d, -(n + 1)) + std::pow(d, -n) / (static_cast<double>(n) * tail.gap);
}

std::vector<CoeffValue> coefficients_batch(const ZeroConfig& config, double x, int n_max,
                                           const CoeffOptions& opts) {
  if (n_max < 1) throw DomainError("coefficient index must be >= 1");
  auto terms = sorted_terms(config, x, opts);

  std::vector<Accumulator> acc_re(static_cast<std::size_t>(n_max));
  std::vector<Accumulator> acc_im(static_cast<std::size_t>(n_max));
  std::vector<double> abs_sum(static_cast<std::size_t>(n_max), 0.0);

  for (const auto& t : terms) {
    // u = 1/(lambda - x); w starts at u^2 (the n = 1 term) and gains one
    // factor of u per index.
    double zr = t.re - x;
    double zi = t.im;
    double nrm = zr * zr + zi * zi;
    double ur = zr / nrm;
    double ui = -zi / nrm;
    double wr = ur * ur - ui * ui;
    double wi = 2.0 * ur * ui;
    double m = static_cast<double>(t.mult);
    for (int k = 1; k <= n_max; ++k) {
      acc_re[k - 1].add(m * wr);
      acc_im[k - 1].add(m * wi);
      abs_sum[k - 1] += m * std::hypot(wr, wi);
      double nr = wr * ur - wi * ui;
      double ni = wr * ui + wi * ur;
      wr = nr;
      wi = ni;
    }
  }

  std::vector<CoeffValue> out;
  out.reserve(static_cast<std::size_t>(n_max));
  for (int k = 1; k <= n_max; ++k) {
    CoeffValue cv;
    cv.n = k;
    cv.x = x;
    cv.value = {acc_re[k - 1].value(), acc_im[k - 1].value()};
    // Per-term forward error: u carries ~8u_round relative error from the
    // complex reciprocal, each of the k+1 multiplies adds ~5u_round; the
    // compensated sums add 2u_round * abs_sum.
    cv.round_off = (5.0 * (k + 3)) * kEps * abs_sum[k - 1];
    if (config.tail()) {
      double r = 0.0;
      for (double d : arm_distances(*config.tail(), x)) {
        r += tail_bound(*config.tail(), x, k, d);
      }
      cv.tail_radius = r;
    }
    out.push_back(cv);
  }
  return out;
}

CoeffValue coefficient(const ZeroConfig& config, double x, int n, const CoeffOptions& opts) {
  return coefficients_batch(config, x, n, opts).back();
}

BigComplex coefficient_big(const ZeroConfig& config, double x, int n, mpfr_prec_t prec,
                           const CoeffOptions& opts) {
  if (n < 1) throw DomainError("coefficient index must be >= 1");
  auto terms = sorted_terms(config, x, opts);
  BigFloat xb(x, prec);
  BigComplex sum(prec);
  for (const auto& t : terms) {
    BigComplex z(BigFloat(t.re, prec) - xb, BigFloat(t.im, prec));
    BigComplex u = BigFloat(1.0, prec) / z;
    BigComplex w = u * u;
    for (int k = 1; k < n; ++k) w = w * u;
    sum = sum + w * BigFloat(static_cast<double>(t.mult), prec);
  }
  return sum;
}

nlohmann::json CoeffValue::to_json() const {
  return {{"value", {value.real(), value.imag()}},
          {"tail", tail_radius},
          {"round_off", round_off},
          {"n", n},
          {"x", x}};
}

}  // namespace g1lp
