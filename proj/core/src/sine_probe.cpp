#include "g1lp/sine_probe.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <set>

#include "g1lp/errors.hpp"
#include "g1lp/numeric.hpp"

namespace g1lp {

namespace {

constexpr double kLn2 = 0.6931471805599453;

double to_double_up(const BigFloat& v) { return mpfr_get_d(v.raw(), MPFR_RNDU); }

struct ProbeZero {
  double re;
  double im;
  int mult;
};

// Listed zeros plus the origin zero, pole-checked against x.
std::vector<ProbeZero> probe_zeros(const ZeroConfig& config, double x, const CoeffOptions& opts) {
  double delta = opts.delta_factor * std::max(1.0, std::abs(x));
  std::vector<ProbeZero> zs;
  zs.reserve(config.zeros().size() + 1);
  if (config.ell() > 0) {
    if (std::abs(x) < delta) {
      throw PoleError("x = " + format_double(x) + " is within " + format_double(delta) +
                      " of the origin zero");
    }
    zs.push_back({0.0, 0.0, config.ell()});
  }
  for (const auto& z : config.zeros()) {
    if (z.im == 0.0 && std::abs(z.re - x) < delta) {
      throw PoleError("x = " + format_double(x) + " is within " + format_double(delta) +
                      " of the real zero at " + format_double(z.re));
    }
    zs.push_back({z.re, z.im, z.multiplicity});
  }
  return zs;
}

double sin_tail_upper(const ZeroConfig& config, double x, double t, bool taylor_mode) {
  if (!config.tail()) return 0.0;
  const TailModel& tail = *config.tail();
  double total = 0.0;
  std::vector<double> dists;
  if (tail.symmetric) {
    dists = {tail.start - x, x + tail.start};
  } else if (tail.start >= 0.0) {
    dists = {tail.start - x};
  } else {
    dists = {x - tail.start};
  }
  for (double d : dists) {
    double arm = t * t * tail_bound(tail, x, 1, d);
    if (taylor_mode) {
      // |S_N(r)| <= r cosh(r) for real r, so the squared tail term is at
      // most cosh^2(t/d) (t/r_k)^2 with r_k >= d.
      double ch = std::cosh(t / d);
      arm *= ch * ch;
    }
    total += arm;
  }
  return total;
}

struct DoubleAttempt {
  double value = 0.0;
  double round_off = 0.0;
  bool overflow = false;
};

DoubleAttempt sin_kernel_double(const std::vector<ProbeZero>& zs, double x, double t) {
  DoubleAttempt out;
  Accumulator acc;
  double err = 0.0;
  for (const auto& z : zs) {
    double zr = z.re - x;
    double zi = z.im;
    double nrm = zr * zr + zi * zi;
    double a = t * zr / nrm;
    double v = -t * zi / nrm;
    if (std::abs(v) > 350.0) {
      out.overflow = true;
      return out;
    }
    double sa = std::sin(a);
    double ca = std::cos(a);
    double chv = std::cosh(v);
    double shv = std::sinh(v);
    double pos = sa * sa * chv * chv;
    double neg = ca * ca * shv * shv;
    double m = static_cast<double>(z.mult);
    acc.add(m * (pos - neg));
    // |d re(sin^2 w)/dw| = |sin 2w| <= cosh(2v); argument error ~10u(|a|+|v|)
    double arg_err = 10.0 * kEps * (std::abs(a) + std::abs(v));
    err += m * (arg_err * std::cosh(2.0 * v) + 6.0 * kEps * (pos + neg));
  }
  out.value = acc.value();
  out.round_off = err + acc.round_off();
  if (!std::isfinite(out.value) || !std::isfinite(out.round_off)) out.overflow = true;
  return out;
}

struct BigAttempt {
  BigFloat value;
  BigFloat round_off;
  BigAttempt(mpfr_prec_t p) : value(p), round_off(p) {}
};

BigAttempt sin_kernel_big(const std::vector<ProbeZero>& zs, double x, double t,
                          mpfr_prec_t prec) {
  BigAttempt out(prec);
  BigFloat tb(t, prec);
  BigFloat xb(x, prec);
  BigFloat u_eps = BigFloat(0.0, prec).eps();
  for (const auto& z : zs) {
    BigFloat zr = BigFloat(z.re, prec) - xb;
    BigFloat zi(z.im, prec);
    BigFloat nrm = sqr(zr) + sqr(zi);
    BigFloat a = tb * zr / nrm;
    BigFloat v = -(tb * zi / nrm);
    BigFloat sa = sin(a);
    BigFloat ca = cos(a);
    BigFloat chv = cosh(v);
    BigFloat shv = sinh(v);
    BigFloat pos = sqr(sa * chv);
    BigFloat neg = sqr(ca * shv);
    BigFloat m(static_cast<double>(z.mult), prec);
    out.value += m * (pos - neg);
    BigFloat arg_err = BigFloat(10.0, prec) * u_eps * (abs(a) + abs(v));
    out.round_off += m * (arg_err * cosh(v + v) + BigFloat(6.0, prec) * u_eps * (pos + neg));
  }
  // compensation-free big summation: charge 2u per add on the running scale
  out.round_off += BigFloat(2.0 * zs.size(), prec) * u_eps * abs(out.value);
  return out;
}

DoubleAttempt taylor_kernel_double(const std::vector<ProbeZero>& zs, double x, double t,
                                   const SineTaylor& poly) {
  DoubleAttempt out;
  Accumulator acc;
  double err = 0.0;
  const auto& c = poly.odd_coeffs;
  for (const auto& z : zs) {
    double zr = z.re - x;
    double zi = z.im;
    double nrm = zr * zr + zi * zi;
    std::complex<double> u(t * zr / nrm, -t * zi / nrm);
    std::complex<double> s = u * u;
    double s_mag = std::norm(u);
    // P(s) = c_1 + c_3 s + c_5 s^2 + ..., then w = u P(s)
    std::complex<double> p = 0.0;
    double p_mag = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) {
      p = p * s + c[i];
      p_mag = p_mag * s_mag + std::abs(c[i]);
    }
    std::complex<double> w = u * p;
    double w_hat = std::abs(u) * p_mag;  // >= |w|
    double w_err = kEps * (6.0 * static_cast<double>(c.size()) + 10.0) * w_hat;
    double term = (w * w).real();
    double m = static_cast<double>(z.mult);
    acc.add(m * term);
    err += m * ((2.0 * w_hat + w_err) * w_err + 4.0 * kEps * w_hat * w_hat);
    if (!std::isfinite(w_hat)) {
      out.overflow = true;
      return out;
    }
  }
  out.value = acc.value();
  out.round_off = err + acc.round_off();
  if (!std::isfinite(out.value) || !std::isfinite(out.round_off)) out.overflow = true;
  return out;
}

BigAttempt taylor_kernel_big(const std::vector<ProbeZero>& zs, double x, double t, int degree,
                             mpfr_prec_t prec) {
  BigAttempt out(prec);
  auto c = SineTaylor::odd_coeffs_big(degree, prec);
  BigFloat tb(t, prec);
  BigFloat xb(x, prec);
  BigFloat u_eps = BigFloat(0.0, prec).eps();
  for (const auto& z : zs) {
    BigFloat zr = BigFloat(z.re, prec) - xb;
    BigFloat zi(z.im, prec);
    BigFloat nrm = sqr(zr) + sqr(zi);
    BigComplex u(tb * zr / nrm, -(tb * zi / nrm));
    BigComplex s = u * u;
    BigFloat s_mag = u.norm();
    BigComplex p(prec);
    BigFloat p_mag(prec);
    for (std::size_t i = c.size(); i-- > 0;) {
      p = p * s;
      p.re += c[i];
      p_mag = p_mag * s_mag + abs(c[i]);
    }
    BigComplex w = u * p;
    BigFloat w_hat = u.abs() * p_mag;
    BigFloat w_err = u_eps * BigFloat(6.0 * static_cast<double>(c.size()) + 10.0, prec) * w_hat;
    BigFloat term = sqr(w.re) - sqr(w.im);
    BigFloat m(static_cast<double>(z.mult), prec);
    out.value += m * term;
    out.round_off += m * ((BigFloat(2.0, prec) * w_hat + w_err) * w_err +
                          BigFloat(4.0, prec) * u_eps * sqr(w_hat));
  }
  out.round_off += BigFloat(2.0 * zs.size(), prec) * u_eps * abs(out.value);
  return out;
}

ProbeSum finish_big(const BigAttempt& att, double tail_upper, mpfr_prec_t prec) {
  ProbeSum ps;
  ps.value = att.value.to_double();
  ps.round_off = to_double_up(att.round_off);
  ps.tail_upper = tail_upper;
  ps.upper_bound = to_double_up(att.value + att.round_off + BigFloat(tail_upper, prec));
  ps.sign_certified = abs(att.value) > att.round_off;
  ps.precision_bits = static_cast<int>(prec);
  return ps;
}

double double_upper(double value, double round_off, double tail_upper) {
  double ub = value + round_off + tail_upper;
  return ub + 4.0 * kEps * (std::abs(value) + round_off + tail_upper);
}

}  // namespace

SineTaylor SineTaylor::make(int degree) {
  if (degree < 1) throw DomainError("Taylor degree must be >= 1");
  SineTaylor st;
  st.degree = degree;
  double c = 1.0;
  st.odd_coeffs.push_back(c);
  for (int k = 1; 2 * k + 1 <= degree; ++k) {
    c = -c / (2.0 * k * (2.0 * k + 1.0));
    st.odd_coeffs.push_back(c);
  }
  return st;
}

std::vector<BigFloat> SineTaylor::odd_coeffs_big(int degree, mpfr_prec_t prec) {
  if (degree < 1) throw DomainError("Taylor degree must be >= 1");
  std::vector<BigFloat> out;
  BigFloat c(1.0, prec);
  out.push_back(c);
  for (int k = 1; 2 * k + 1 <= degree; ++k) {
    c = -(c / BigFloat(2.0 * k * (2.0 * k + 1.0), prec));
    out.push_back(c);
  }
  return out;
}

std::vector<double> SineTaylor::dense() const {
  std::vector<double> q(static_cast<std::size_t>(degree), 0.0);
  for (std::size_t k = 0; k < odd_coeffs.size(); ++k) {
    q[2 * k] = odd_coeffs[k];  // q[i] multiplies z^(i+1)
  }
  return q;
}

ProbeSum sin_sq_sum(const ZeroConfig& config, double x, double t, const ProbeOptions& opts) {
  auto zs = probe_zeros(config, x, opts.coeff);
  double tail_upper = sin_tail_upper(config, x, t, false);
  DoubleAttempt d = sin_kernel_double(zs, x, t);
  ProbeSum last{d.overflow ? kInf : d.value, d.overflow ? kInf : d.round_off, tail_upper,
                d.overflow ? kInf : double_upper(d.value, d.round_off, tail_upper),
                !d.overflow && std::abs(d.value) > d.round_off, 53};
  if (last.sign_certified) return last;
  for (mpfr_prec_t bits = 128; bits <= opts.max_precision_bits; bits *= 2) {
    BigAttempt att = sin_kernel_big(zs, x, t, bits);
    last = finish_big(att, tail_upper, bits);
    if (last.sign_certified) return last;
  }
  return last;
}

ProbeSum taylor_sq_sum(const ZeroConfig& config, double x, double t, int N,
                       const ProbeOptions& opts) {
  if (N < 1) throw DomainError("Taylor degree must be >= 1");
  auto zs = probe_zeros(config, x, opts.coeff);
  double tail_upper = sin_tail_upper(config, x, t, true);
  SineTaylor poly = SineTaylor::make(N);
  DoubleAttempt d = taylor_kernel_double(zs, x, t, poly);
  if (!d.overflow) {
    ProbeSum ps{d.value, d.round_off, tail_upper,
                double_upper(d.value, d.round_off, tail_upper),
                std::abs(d.value) > d.round_off, 53};
    if (ps.sign_certified) return ps;
  }
  for (mpfr_prec_t bits = 128; bits <= opts.max_precision_bits; bits *= 2) {
    BigAttempt att = taylor_kernel_big(zs, x, t, N, bits);
    ProbeSum last = finish_big(att, tail_upper, bits);
    if (last.sign_certified) return last;
  }
  throw PrecisionError("sign of the Taylor probe sum not certified at " +
                       std::to_string(opts.max_precision_bits) + " bits (x=" +
                       format_double(x) + ", t=" + format_double(t) + ", N=" +
                       std::to_string(N) + ")");
}

double witness_t(double c, double kappa) {
  if (!(c > 0.0)) throw DomainError("witness scale requires c > 0");
  if (!(kappa >= 0.0) || std::isinf(kappa)) {
    throw DomainError("witness scale requires finite kappa >= 0");
  }
  double s = std::sqrt(1.0 + kappa * kappa);
  double pi = std::acos(-1.0);
  return pi * pi * c * s * s * s * std::pow(s + kappa, 6.0);
}

long long witness_N(double c, double kappa, double t) {
  if (!(c > 0.0) || !(kappa > 0.0) || !(t > 0.0)) {
    throw DomainError("witness degree requires positive c, kappa, t");
  }
  double pi = std::acos(-1.0);
  double base = std::log(4.0 * pi * pi / 3.0 + 4.0) / kLn2;
  double slope = 3.0 * t / (kLn2 * c) * std::max(1.0, 1.0 / kappa);
  return static_cast<long long>(std::ceil(base + slope));
}

double taylor_remainder_bound(double z_mag, double R, int N) {
  if (!(R > 0.0)) throw DomainError("remainder bound requires R > 0");
  if (N < 1) throw DomainError("remainder bound requires N >= 1");
  if (z_mag < 0.0 || z_mag > R) {
    throw DomainError("remainder bound requires 0 <= |z| <= R");
  }
  if (z_mag == 0.0) return 0.0;
  double ln_b = kLn2 + (N + 1.0) * (std::log(z_mag) - std::log(2.0 * R)) + 2.0 * R;
  return std::exp(ln_b);
}

namespace {

struct ProbeEval {
  bool ok = false;
  ProbeSum sum;
};

struct XSearchResult {
  bool found = false;
  double t = 0.0;
  ProbeSum sum;
};

}  // namespace

std::optional<Witness> witness_search(const ZeroConfig& config, ProbeMode mode,
                                      std::optional<int> N, const WitnessOptions& opts) {
  if (mode == ProbeMode::TaylorSum && !N) {
    throw DomainError("Taylor witness search requires a degree N");
  }
  bool any_complex = std::any_of(config.zeros().begin(), config.zeros().end(),
                                 [](const Zero& z) { return z.im != 0.0; });
  if (!any_complex) return std::nullopt;

  SpacingReport rep = spacing_report(config);
  double b = rep.b;
  double threshold = mode == ProbeMode::SinSum ? -1.0 : 0.0;

  // Proof's alpha choice: abscissae of complex zeros within half of
  // epsilon = d - b above the minimal height.
  double window = b;
  if (std::isfinite(rep.c) && rep.c > 0.0 && std::isfinite(b)) {
    double d = std::hypot(b, rep.c);
    window = b + 0.5 * (d - b);
  }
  std::set<double> xset;
  for (const auto& z : config.zeros()) {
    if (z.im != 0.0 && std::abs(z.im) <= window) xset.insert(z.re);
  }
  std::vector<double> xs(xset.begin(), xset.end());

  double t_lo = b / 10.0;
  double t_hi;
  if (std::isfinite(rep.c) && rep.c > 0.0 && std::isfinite(rep.kappa) && rep.kappa > 0.0) {
    t_hi = witness_t(rep.c, rep.kappa);
  } else {
    t_hi = 100.0 * b;
  }
  if (!(t_hi > t_lo)) t_hi = 100.0 * t_lo;

  auto evaluate = [&](double x, double t) -> ProbeEval {
    ProbeEval ev;
    try {
      ev.sum = mode == ProbeMode::SinSum ? sin_sq_sum(config, x, t, opts.probe)
                                         : taylor_sq_sum(config, x, t, *N, opts.probe);
      ev.ok = true;
    } catch (const Error&) {
      ev.ok = false;
    }
    return ev;
  };
  auto certified = [&](const ProbeEval& ev) {
    return ev.ok && ev.sum.sign_certified && ev.sum.upper_bound < threshold;
  };

  std::vector<XSearchResult> results(xs.size());
  int samples = std::max(opts.t_samples, 8);
  parallel_for(xs.size(), opts.threads, [&](std::size_t xi) {
    double x = xs[xi];
    XSearchResult res;
    // best certified candidate so far: most negative value, ties smaller t
    auto consider = [&](double t, const ProbeEval& ev) {
      if (!certified(ev)) return;
      if (!res.found || ev.sum.value < res.sum.value ||
          (ev.sum.value == res.sum.value && t < res.t)) {
        res.found = true;
        res.t = t;
        res.sum = ev.sum;
      }
    };

    std::vector<double> ts(static_cast<std::size_t>(samples));
    std::vector<ProbeEval> evals(static_cast<std::size_t>(samples));
    double lr = std::log(t_lo);
    double step = (std::log(t_hi) - lr) / (samples - 1);
    for (int i = 0; i < samples; ++i) {
      ts[static_cast<std::size_t>(i)] = std::exp(lr + step * i);
      evals[static_cast<std::size_t>(i)] = evaluate(x, ts[static_cast<std::size_t>(i)]);
      consider(ts[static_cast<std::size_t>(i)], evals[static_cast<std::size_t>(i)]);
    }

    int most_negative = -1;
    for (int i = 0; i < samples; ++i) {
      const auto& ev = evals[static_cast<std::size_t>(i)];
      if (!ev.ok) continue;
      if (most_negative < 0 ||
          ev.sum.value < evals[static_cast<std::size_t>(most_negative)].sum.value) {
        most_negative = i;
      }
    }

    if (most_negative >= 0) {
      // golden-section refinement around the most negative probe; every
      // evaluation stays a candidate, so refinement can only improve
      const double phi = 0.6180339887498949;
      int lo_i = most_negative > 0 ? most_negative - 1 : most_negative;
      int hi_i = most_negative + 1 < samples ? most_negative + 1 : most_negative;
      if (lo_i < hi_i) {
        double a = ts[static_cast<std::size_t>(lo_i)];
        double d = ts[static_cast<std::size_t>(hi_i)];
        double bpt = d - phi * (d - a);
        double cpt = a + phi * (d - a);
        ProbeEval eb = evaluate(x, bpt);
        ProbeEval ec = evaluate(x, cpt);
        consider(bpt, eb);
        consider(cpt, ec);
        for (int it = 0; it < opts.refine_iters && d - a > 1e-12 * d; ++it) {
          double vb = eb.ok ? eb.sum.value : kInf;
          double vc = ec.ok ? ec.sum.value : kInf;
          if (vb <= vc) {
            d = cpt;
            cpt = bpt;
            ec = eb;
            bpt = d - phi * (d - a);
            eb = evaluate(x, bpt);
            consider(bpt, eb);
          } else {
            a = bpt;
            bpt = cpt;
            eb = ec;
            cpt = a + phi * (d - a);
            ec = evaluate(x, cpt);
            consider(cpt, ec);
          }
        }
      }
    }
    results[xi] = res;
  });

  std::optional<Witness> best;
  for (std::size_t xi = 0; xi < xs.size(); ++xi) {
    const auto& res = results[xi];
    if (!res.found) continue;
    bool better = !best || res.sum.value < best->value ||
                  (res.sum.value == best->value &&
                   (res.t < best->t || (res.t == best->t && xs[xi] < best->x)));
    if (better) {
      Witness w;
      w.x = xs[xi];
      w.t = res.t;
      w.order = mode == ProbeMode::TaylorSum ? N : std::nullopt;
      w.value = res.sum.value;
      w.kind = mode;
      w.certified = true;
      best = w;
    }
  }
  return best;
}

nlohmann::json Witness::to_json() const {
  nlohmann::json j;
  j["x"] = x;
  j["t"] = t;
  if (order) {
    j["N"] = *order;
  } else {
    j["N"] = "inf";
  }
  j["value"] = std::isfinite(value) ? nlohmann::json(value)
                                    : nlohmann::json(value > 0 ? "inf" : "-inf");
  j["kind"] = kind == ProbeMode::SinSum ? "sin" : "taylor";
  j["certified"] = certified;
  return j;
}

}  // namespace g1lp
