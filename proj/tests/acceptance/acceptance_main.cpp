// Acceptance suite: one line per criterion, [PASS]/[FAIL] verdicts, nonzero
// exit when anything fails.  Each criterion carries its stated tolerance and
// wall-clock budget; slow passes are failures.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "../support/spawn.hpp"
#include "g1lp/bounds.hpp"
#include "g1lp/hankel.hpp"
#include "g1lp/numeric.hpp"
#include "g1lp/report.hpp"
#include "g1lp/sine_probe.hpp"
#include "g1lp/zero_model.hpp"
#include "g1lp/zeta.hpp"

namespace fs = std::filesystem;
using namespace g1lp;
using testsupport::run_command;

namespace {

constexpr double kPi = 3.14159265358979323846;

const std::string kCli = G1LP_CLI_PATH;
const std::string kDataDir = G1LP_TEST_DATA_DIR;

struct Outcome {
  bool pass = false;
  std::string detail;
};

fs::path work_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "g1lp_acceptance";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
  fs::path p = work_dir() / name;
  std::ofstream out(p);
  out << content;
  return p.string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Pair at +-0.5i over the integer lattice m = -200..200 (m != 0) with a
// symmetric unit-gap arm from 201: aperture 1/2, below the sqrt(3)/pi line.
ZeroConfig half_aperture_config() {
  std::vector<Zero> zs = {{0.0, 0.5, 1}, {0.0, -0.5, 1}};
  for (int m = 1; m <= 200; ++m) {
    zs.push_back({static_cast<double>(m), 0.0, 1});
    zs.push_back({static_cast<double>(-m), 0.0, 1});
  }
  TailModel tail;
  tail.kind = TailModel::Kind::ArithmeticReal;
  tail.start = 201.0;
  tail.gap = 1.0;
  tail.symmetric = true;
  return ZeroConfig(std::move(zs), 0, 0.0, tail);
}

// Strongly spaced squares j^2, j = 1..50, plus a conjugate pair at 650 with
// the requested height.
ZeroConfig squares_with_pair(double height) {
  std::vector<Zero> zs;
  for (int j = 1; j <= 50; ++j) {
    zs.push_back({static_cast<double>(j) * j, 0.0, 1});
  }
  zs.push_back({650.0, height, 1});
  zs.push_back({650.0, -height, 1});
  return ZeroConfig(std::move(zs));
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f s", s);
  return buf;
}

double witness_value_from_json(const nlohmann::json& v) {
  if (v.is_number()) return v.get<double>();
  std::string s = v.get<std::string>();
  return s == "-inf" ? -kInf : kInf;
}

Outcome refined_bound_via_cli() {
  auto r = run_command(kCli + " bounds --which refined");
  if (r.exit_code != 0) return {false, "exit code " + std::to_string(r.exit_code)};
  double v = nlohmann::json::parse(r.out).at("report").at("value").get<double>();
  double err = std::abs(v - 0.609566);
  if (err > 1e-5) {
    return {false, "value " + format_double(v) + " misses 0.609566 by " + format_double(err)};
  }
  return {true, "value " + format_double(v)};
}

Outcome half_aperture_violation() {
  ZeroConfig cfg = half_aperture_config();
  if (aperture(cfg) != 0.5) return {false, "aperture is " + format_double(aperture(cfg))};
  if (!(aperture(cfg) < thm1_bound())) return {false, "aperture not below the threshold"};

  HankelMatrix m = build_hankel(cfg, 0.0, 1);
  double exact = -8.0 + kPi * kPi / 3.0;
  double a1 = m.entries.at(0).value.real();
  double tol = m.entries.at(0).tail_radius + 1e-9;
  if (std::abs(a1 - exact) > tol) {
    return {false, "a_1(0) = " + format_double(a1) + " not within " + format_double(tol) +
                       " of " + format_double(exact)};
  }

  std::string zf = write_file("half_aperture.json", cfg.to_json().dump(2));
  std::string grid = write_file("grid_origin.txt", "0\n");
  auto r = run_command(kCli + " check-nlp " + zf + " --order 1 --grid " + grid + " >/dev/null");
  if (r.exit_code != 1) {
    return {false, "check-nlp exit " + std::to_string(r.exit_code) + ", expected 1 (NotPSD)"};
  }
  return {true, "a_1(0) = " + format_double(a1) + " within " + format_double(tol) +
                    " of -8+pi^2/3, verdict NotPSD"};
}

Outcome gram_identity() {
  std::mt19937_64 rng(20260817);
  std::uniform_real_distribution<double> coord(0.5, 8.0);
  std::uniform_real_distribution<double> vdist(-1.0, 1.0);
  std::uniform_int_distribution<int> ndist(1, 6);
  std::uniform_int_distribution<int> pairs_dist(0, 4);
  std::uniform_int_distribution<int> reals_dist(1, 4);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Zero> zs;
    int npairs = pairs_dist(rng);
    int nreals = reals_dist(rng);
    double base = 0.5;
    for (int p = 0; p < npairs; ++p) {
      double re = base + coord(rng);
      double im = coord(rng);
      zs.push_back({re, im, 1});
      zs.push_back({re, -im, 1});
      base = re;
    }
    for (int q = 0; q < nreals; ++q) {
      base += coord(rng);
      zs.push_back({base, 0.0, 1});
    }
    ZeroConfig cfg(zs);
    int N = ndist(rng);
    HankelMatrix m = build_hankel(cfg, 0.0, N);
    std::vector<double> v(static_cast<std::size_t>(N));
    for (auto& vi : v) vi = vdist(rng);
    Eigen::Map<Eigen::VectorXd> vv(v.data(), N);
    double lhs = vv.transpose() * m.matrix * vv;
    double rhs = quadratic_form(cfg, 0.0, v, 1.0);
    double err = std::abs(lhs - rhs);
    double budget = 1e-9 * (1.0 + std::abs(lhs));
    worst = std::max(worst, err / budget);
    if (err > budget) {
      return {false, "trial " + std::to_string(trial) + ": |lhs-rhs| = " + format_double(err) +
                         " exceeds " + format_double(budget)};
    }
  }
  return {true, "200 configs, worst error at " + format_double(worst) + " of budget"};
}

Outcome real_zero_positivity() {
  std::mt19937_64 rng(424242);
  std::uniform_real_distribution<double> gap(0.2, 3.0);
  std::uniform_int_distribution<int> count_dist(2, 12);
  std::uniform_int_distribution<int> ndist(1, 6);
  std::uniform_int_distribution<int> mult_dist(1, 2);
  int points = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Zero> zs;
    double t = gap(rng);
    int count = count_dist(rng);
    for (int i = 0; i < count; ++i) {
      zs.push_back({t, 0.0, mult_dist(rng)});
      t += gap(rng);
    }
    ZeroConfig cfg(zs);
    int N = ndist(rng);
    std::vector<double> grid = default_grid(cfg);
    ScanReport rep = nlp_scan(cfg, N, grid);
    points += static_cast<int>(rep.verdicts.size());
    for (const auto& v : rep.verdicts) {
      if (v.verdict != Psd::PSD) {
        return {false, "trial " + std::to_string(trial) + " x = " + format_double(v.matrix.x) +
                           " N = " + std::to_string(N) + " verdict " + to_string(v.verdict) +
                           " min_eig = " + format_double(v.min_eigenvalue)};
      }
    }
  }
  return {true, "200 all-real configs, " + std::to_string(points) + " grid verdicts all PSD"};
}

Outcome sine_recovery() {
  // certified witness below -1 on the half-aperture configuration
  ZeroConfig cfg = half_aperture_config();
  std::string zf = write_file("half_aperture.json", cfg.to_json().dump(2));
  auto r = run_command(kCli + " sine-witness " + zf + " --mode sin");
  if (r.exit_code != 0) return {false, "sine-witness exit " + std::to_string(r.exit_code)};
  nlohmann::json w = nlohmann::json::parse(r.out).at("report");
  if (!w.at("certified").get<bool>()) return {false, "witness not certified"};
  double value = witness_value_from_json(w.at("value"));
  if (!(value < -1.0)) return {false, "witness value " + format_double(value) + " not below -1"};

  // envelope at the guaranteed scale stays below -1 across the aperture grid
  for (double c : {0.1, 1.0, 10.0}) {
    for (int i = 0; i <= 48; ++i) {
      double lo = std::sqrt(3.0) / kPi;
      double kappa = lo * std::pow(8.0 / lo, i / 48.0);
      double rhs = est1_rhs(witness_t(c, kappa), kappa * c, c);
      if (!(rhs < -1.0)) {
        return {false, "envelope " + format_double(rhs) + " at kappa = " + format_double(kappa) +
                           ", c = " + format_double(c)};
      }
    }
  }

  // polynomial probe consistency with the full sine under the remainder bound
  ZeroConfig mixed({{1.0, 1.0, 1}, {1.0, -1.0, 1}, {2.0, 0.0, 1}, {4.0, 3.0, 2}, {4.0, -3.0, 2}});
  for (double t : {1.0, 2.5, 5.0}) {
    ProbeSum ps = sin_sq_sum(mixed, 0.0, t);
    for (int N : {10, 20, 30}) {
      ProbeSum pt = taylor_sq_sum(mixed, 0.0, t, N);
      SineTaylor s = SineTaylor::make(N);
      double envelope = 0.0;
      for (const Zero& z : mixed.zeros()) {
        std::complex<double> u = t / std::complex<double>(z.re, z.im);
        double um = std::abs(u);
        std::complex<double> u2 = u * u, h = 0.0;
        for (std::size_t i = s.odd_coeffs.size(); i-- > 0;) h = h * u2 + s.odd_coeffs[i];
        double tmag = std::abs(h * u);
        envelope += z.multiplicity * (std::abs(std::sin(u)) + tmag) *
                    taylor_remainder_bound(um, um, N);
      }
      double gap = std::abs(ps.value - pt.value);
      if (gap > envelope + ps.round_off + pt.round_off) {
        return {false, "probe gap " + format_double(gap) + " exceeds envelope " +
                           format_double(envelope) + " at t = " + format_double(t) +
                           ", N = " + std::to_string(N)};
      }
    }
  }
  return {true, "witness value " + format_double(value) + ", envelope and consistency hold"};
}

Outcome remainder_domination() {
  // the interesting bounds sit far below binary64 noise, so both sides are
  // evaluated at 256 bits: sin(a+bi) = sin a cosh b + i cos a sinh b, S_N by
  // Horner over BigComplex
  constexpr mpfr_prec_t kPrec = 256;
  std::mt19937_64 rng(555);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> ndist(1, 25);
  double slack = kInf;
  for (double R : {1.0, 2.0, 5.0}) {
    for (int i = 0; i < 100; ++i) {
      double mag = (i == 0) ? R : R * (0.1 + 0.9 * unit(rng));
      double arg = 2.0 * kPi * unit(rng);
      std::complex<double> z = std::polar(mag, arg);
      int N = ndist(rng);
      std::vector<BigFloat> c = SineTaylor::odd_coeffs_big(N, kPrec);
      BigComplex zb(z.real(), z.imag(), kPrec);
      BigComplex s = zb * zb;
      BigComplex p(kPrec);
      for (std::size_t k = c.size(); k-- > 0;) {
        p = p * s;
        p.re += c[k];
      }
      BigComplex taylor = zb * p;
      BigFloat a(z.real(), kPrec), b(z.imag(), kPrec);
      BigComplex sin_z(sin(a) * cosh(b), cos(a) * sinh(b));
      double err = (sin_z - taylor).abs().to_double();
      double bound = taylor_remainder_bound(mag, R, N);
      if (err > bound) {
        return {false, "|sin(z)-S_N(z)| = " + format_double(err) + " exceeds " +
                           format_double(bound) + " at |z| = " + format_double(mag) +
                           ", R = " + format_double(R) + ", N = " + std::to_string(N)};
      }
      slack = std::min(slack, bound / std::max(err, 1e-300));
    }
  }
  return {true, "300 samples dominated; smallest bound/error ratio " + format_double(slack)};
}

Outcome zeta_gap_floor() {
  ZetaZeroTable table = parse_odlyzko_file(kDataDir + "/zeta_zeros_100k.txt");
  if (table.count() != 100000) {
    return {false, "table holds " + std::to_string(table.count()) + " heights"};
  }
  LambdaGapReport rep = lambda_spacing_report(to_lambda(table), table.count());
  if (!(rep.min_gap > 159.0)) return {false, "min gap " + format_double(rep.min_gap)};
  const double golden = 159.04519452290831;
  if (std::abs(rep.min_gap - golden) > 1e-10 * golden) {
    return {false, "min gap " + format_double(rep.min_gap) + " drifted from " +
                       format_double(golden)};
  }
  std::size_t argmin_j = rep.argmin + 1;
  if (argmin_j != 4 || argmin_j > 6) {
    return {false, "argmin j = " + std::to_string(argmin_j) + ", expected 4"};
  }
  int near = 0;
  for (double gp : rep.gaps) {
    if (std::abs(gp - rep.min_gap) < 1e-6) ++near;
  }
  if (near != 1) return {false, std::to_string(near) + " gaps tie the minimum"};
  return {true, "min gap " + format_double(rep.min_gap) + " at j = 4, unique"};
}

Outcome boundary_curves() {
  auto hrrh1 = region_curve(RegionKind::HRRH1, {}, 10.0, 1000.0, 10000);
  double at100 = 0.5 + corollary_offset(RegionKind::HRRH1) / 100.0;
  if (std::abs(at100 - 0.938304) > 1e-5) {
    return {false, "order-1 boundary at t=100 is " + format_double(at100)};
  }
  double ford100 = ford_boundary(100.0);
  if (std::abs(ford100 - 0.993615) > 1e-4) {
    return {false, "classical boundary at t=100 is " + format_double(ford100)};
  }
  auto ford = region_curve(RegionKind::Ford, {}, 10.0, 1000.0, 10000);
  for (std::size_t i = 0; i + 1 < ford.size(); ++i) {
    if (!(hrrh1[i].first < hrrh1[i + 1].first) || !(hrrh1[i].second > hrrh1[i + 1].second)) {
      return {false, "order-1 curve not decreasing at sample " + std::to_string(i)};
    }
    if (!(ford[i].first < ford[i + 1].first) || !(ford[i].second < ford[i + 1].second)) {
      return {false, "classical curve not increasing at sample " + std::to_string(i)};
    }
  }
  return {true, "t=100 values " + format_double(at100) + " and " + format_double(ford100) +
                    ", monotone at 10^4 samples"};
}

Outcome strong_spacing_sanity() {
  ZeroConfig tight = squares_with_pair(1.0);
  double fit = strong_spacing_fit(tight, 0.5);
  if (fit != 1.0) return {false, "spacing fit " + format_double(fit) + ", expected exactly 1"};
  double bound = thm3_bound(fit, 0.5, 2, 650.0);
  if (!(1.0 < bound)) return {false, "pair height 1 not below the bound " + format_double(bound)};

  ScanReport bad = nlp_scan(tight, 1, default_grid(tight));
  bool failed_at_pair = false;
  for (const auto& v : bad.verdicts) {
    if (v.verdict == Psd::NotPSD && std::abs(v.matrix.x - 650.0) < 13.0) failed_at_pair = true;
  }
  if (!failed_at_pair) return {false, "no violation near the pair abscissa at height 1"};

  ZeroConfig safe = squares_with_pair(10.0 * bound);
  ScanReport ok = nlp_scan(safe, 1, default_grid(safe));
  if (ok.any_not_psd) {
    for (const auto& v : ok.verdicts) {
      if (v.verdict == Psd::NotPSD) {
        return {false, "violation at x = " + format_double(v.matrix.x) + " with the pair at 10x"};
      }
    }
  }
  return {true, "fit C = 1, bound " + format_double(bound) +
                    ": violation at height 1, clean at 10x"};
}

Outcome byte_determinism() {
  ZeroConfig cfg = half_aperture_config();
  std::string zf = write_file("half_aperture.json", cfg.to_json().dump(2));
  std::string grid = write_file("grid_origin.txt", "0\n");
  std::string zeros100k = kDataDir + "/zeta_zeros_100k.txt";

  struct Job {
    std::string name;
    std::string cmd;  // without --threads/-o
    int expect_exit;
  };
  std::vector<Job> jobs = {
      {"first-order scan", kCli + " check-nlp " + zf + " --order 1 --grid " + grid + " --format csv", 1},
      {"gap table", kCli + " zeta gaps " + zeros100k + " --format csv", 0},
      {"boundary curve",
       kCli + " zeta region --kind hrrh1 --t-lo 10 --t-hi 1000 --samples 10000 --format csv", 0},
  };
  for (const auto& job : jobs) {
    fs::path one = work_dir() / "det_t1.out";
    fs::path eight = work_dir() / "det_t8.out";
    auto r1 = run_command(job.cmd + " --threads 1 -o " + one.string() + " 2>/dev/null");
    auto r8 = run_command(job.cmd + " --threads 8 -o " + eight.string() + " 2>/dev/null");
    if (r1.exit_code != job.expect_exit || r8.exit_code != job.expect_exit) {
      return {false, job.name + ": exit codes " + std::to_string(r1.exit_code) + "/" +
                         std::to_string(r8.exit_code)};
    }
    std::string b1 = read_file(one.string());
    std::string b8 = read_file(eight.string());
    if (b1.empty() || b1 != b8) {
      return {false, job.name + ": outputs differ across thread counts"};
    }
  }
  return {true, "3 reports byte-identical across threads {1, 8}"};
}

}  // namespace

int main() {
  struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria = {
      {"refined aperture bound via cli", 1.0, refined_bound_via_cli},
      {"first-order violation below the aperture threshold", 1.0, half_aperture_violation},
      {"gram identity on random configs", 10.0, gram_identity},
      {"real-zero positivity on random configs", 30.0, real_zero_positivity},
      {"sine recovery at desk scale", 30.0, sine_recovery},
      {"taylor remainder domination", 5.0, remainder_domination},
      {"zeta lambda-gap floor", 5.0, zeta_gap_floor},
      {"zero-free boundary curves", 1.0, boundary_curves},
      {"strong-spacing pair placement", 5.0, strong_spacing_sanity},
      {"byte-identical reports across threads", 60.0, byte_determinism},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.pass && secs > c.budget_seconds) {
      out.pass = false;
      out.detail += " [over budget " + fmt_seconds(c.budget_seconds) + "]";
    }
    std::printf("[%s] %zu. %s (%s): %s\n", out.pass ? "PASS" : "FAIL", i + 1, c.name.c_str(),
                fmt_seconds(secs).c_str(), out.detail.c_str());
    if (!out.pass) ++failures;
  }
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
