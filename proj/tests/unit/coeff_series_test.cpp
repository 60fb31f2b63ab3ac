#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "g1lp/coeff_series.hpp"
#include "g1lp/errors.hpp"
#include "g1lp/zero_model.hpp"

using namespace g1lp;

namespace {

constexpr double kPi = 3.14159265358979323846;

ZeroConfig half_aperture_config() {
  TailModel tail;
  tail.kind = TailModel::Kind::ArithmeticReal;
  tail.start = 1.0;
  tail.gap = 1.0;
  tail.symmetric = true;
  return ZeroConfig({{0.0, 0.5, 1}, {0.0, -0.5, 1}}, 0, 0.0, tail);
}

}  // namespace

TEST_CASE("first coefficient on single and paired zeros") {
  ZeroConfig single({{2.0, 0.0, 1}});
  CoeffValue v = coefficient(single, 0.0, 1);
  CHECK(v.value.real() == doctest::Approx(0.25));
  CHECK(v.value.imag() == 0.0);
  CHECK(v.tail_radius == 0.0);

  ZeroConfig pair({{0.0, 1.0, 1}, {0.0, -1.0, 1}});
  CoeffValue w = coefficient(pair, 0.0, 1);
  CHECK(w.value.real() == doctest::Approx(-2.0));
  CHECK(std::abs(w.value.imag()) <= 1e-15);
}

TEST_CASE("multiplicity scales the contribution") {
  ZeroConfig m2({{2.0, 0.0, 2}});
  CHECK(coefficient(m2, 0.0, 1).value.real() == doctest::Approx(0.5));
  // the origin zero contributes ell / (0 - x)^(n+1): -ell/x^3 at n = 2
  ZeroConfig with_ell({{5.0, 0.0, 1}}, 3);
  CoeffValue v = coefficient(with_ell, 1.0, 2);
  CHECK(v.value.real() == doctest::Approx(-3.0 + 1.0 / std::pow(4.0, 3)));
}

TEST_CASE("tail interval brackets the exact coefficient") {
  // pair at +-i/2 with a symmetric unit-gap arm from 1: a_1(0) = -8 + pi^2/3
  ZeroConfig cfg = half_aperture_config();
  CoeffValue v = coefficient(cfg, 0.0, 1);
  double exact = -8.0 + kPi * kPi / 3.0;
  CHECK(v.value.real() == doctest::Approx(-8.0));
  CHECK(v.tail_radius > 0.0);
  CHECK(v.value.real() - 1e-12 <= exact);
  CHECK(v.value.real() + v.tail_radius + 1e-12 >= exact);
}

TEST_CASE("tail bound closed form and dominance") {
  TailModel tail;
  tail.kind = TailModel::Kind::ArithmeticReal;
  tail.start = 1.0;
  tail.gap = 1.0;

  CHECK(tail_bound(tail, 0.0, 1, 1.0) == doctest::Approx(2.0));
  CHECK(tail_bound(tail, 0.0, 1, 1.0) >= kPi * kPi / 6.0);  // >= zeta(2)
  CHECK(tail_bound(tail, 0.0, 1, 10.0) == doctest::Approx(0.11));
  CHECK(tail_bound(tail, 0.0, 3, 10.0) == doctest::Approx(1e-4 + 1e-3 / 3.0));

  // the bound dominates the truncated tail sum it models
  for (int n : {1, 2, 5}) {
    for (double d : {1.0, 2.5, 10.0}) {
      double sum = 0.0;
      for (long k = 0; k <= 100000; ++k) sum += std::pow(d + k * tail.gap, -(n + 1));
      CHECK(sum <= tail_bound(tail, 0.0, n, d));
    }
  }

  CHECK_THROWS_AS(tail_bound(TailModel{}, 0.0, 1, 1.0), DomainError);
  CHECK_THROWS_AS(tail_bound(tail, 0.0, 0, 1.0), DomainError);
  CHECK_THROWS_AS(tail_bound(tail, 0.0, 1, 0.0), DomainError);
}

TEST_CASE("conjugate-symmetric configs give near-real coefficients") {
  ZeroConfig cfg({{2.0, 1.0, 1}, {2.0, -1.0, 1}, {5.0, 3.0, 2}, {5.0, -3.0, 2}, {9.0, 0.0, 1}});
  for (int n = 1; n <= 8; ++n) {
    CoeffValue v = coefficient(cfg, 0.5, n);
    double scale = std::abs(v.value.real()) + std::abs(v.value.imag()) + v.round_off;
    CHECK(std::abs(v.value.imag()) <= 1e-12 * std::max(scale, 1e-300));
  }
}

TEST_CASE("coefficients decay geometrically when all zeros are far") {
  ZeroConfig cfg({{3.0, 0.0, 1}, {7.0, 2.0, 1}, {7.0, -2.0, 1}});
  double prev = std::abs(coefficient(cfg, 0.0, 1).value);
  for (int n = 2; n <= 10; ++n) {
    double cur = std::abs(coefficient(cfg, 0.0, n).value);
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("translation and scaling covariance") {
  ZeroConfig base({{2.0, 1.0, 1}, {2.0, -1.0, 1}, {5.0, 0.0, 1}});
  double x = 0.5;
  for (int n : {1, 2, 3}) {
    CoeffValue v0 = coefficient(base, x, n);

    std::vector<Zero> shifted;
    for (const Zero& z : base.zeros()) shifted.push_back({z.re + 10.0, z.im, z.multiplicity});
    CoeffValue v1 = coefficient(ZeroConfig(shifted), x + 10.0, n);
    CHECK(v1.value.real() == doctest::Approx(v0.value.real()).epsilon(1e-14));
    CHECK(v1.value.imag() == doctest::Approx(v0.value.imag()).epsilon(1e-14).scale(1.0));

    std::vector<Zero> scaled;
    for (const Zero& z : base.zeros()) scaled.push_back({2.0 * z.re, 2.0 * z.im, z.multiplicity});
    CoeffValue v2 = coefficient(ZeroConfig(scaled), 2.0 * x, n);
    double factor = std::pow(2.0, n + 1);
    CHECK(v2.value.real() * factor == doctest::Approx(v0.value.real()).epsilon(1e-13));
    CHECK(v2.value.imag() * factor == doctest::Approx(v0.value.imag()).epsilon(1e-13).scale(1.0));
  }
}

TEST_CASE("pole exclusion and index validation") {
  ZeroConfig cfg({{2.0, 0.0, 1}});
  CHECK_THROWS_AS(coefficient(cfg, 2.0, 1), PoleError);
  CHECK_THROWS_AS(coefficient(cfg, 2.0 + 1e-9, 1), PoleError);
  CoeffOptions wide;
  wide.delta_factor = 0.5;
  CHECK_THROWS_AS(coefficient(cfg, 1.5, 1, wide), PoleError);
  CHECK_NOTHROW(coefficient(cfg, 1.5, 1));

  ZeroConfig with_ell({{2.0, 0.0, 1}}, 1);
  CHECK_THROWS_AS(coefficient(with_ell, 0.0, 1), PoleError);

  CHECK_THROWS_AS(coefficient(cfg, 0.0, 0), DomainError);
  CHECK_THROWS_AS(coefficients_batch(cfg, 0.0, 0), DomainError);
}

TEST_CASE("x outside a tail arm is rejected") {
  ZeroConfig sym = half_aperture_config();
  CHECK_THROWS_AS(coefficient(sym, 1.5, 1), DomainError);   // beyond the right arm
  CHECK_THROWS_AS(coefficient(sym, -1.0, 1), DomainError);  // on the left arm

  TailModel one_arm;
  one_arm.kind = TailModel::Kind::ArithmeticReal;
  one_arm.start = 10.0;
  one_arm.gap = 1.0;
  ZeroConfig right({{1.0, 0.0, 1}}, 0, 0.0, one_arm);
  CHECK_THROWS_AS(coefficient(right, 11.0, 1), DomainError);
  CHECK_NOTHROW(coefficient(right, 5.0, 1));
}

TEST_CASE("batch evaluation matches per-index calls exactly") {
  ZeroConfig cfg({{2.0, 1.0, 1}, {2.0, -1.0, 1}, {5.0, 0.0, 1}, {9.0, 4.0, 3}, {9.0, -4.0, 3}});
  auto batch = coefficients_batch(cfg, 0.25, 6);
  REQUIRE(batch.size() == 6);
  for (int n = 1; n <= 6; ++n) {
    CoeffValue v = coefficient(cfg, 0.25, n);
    CHECK(batch[n - 1].value == v.value);
    CHECK(batch[n - 1].tail_radius == v.tail_radius);
    CHECK(batch[n - 1].n == n);
    CHECK(batch[n - 1].x == 0.25);
  }
}

TEST_CASE("extended precision evaluation agrees with binary64") {
  ZeroConfig cfg({{2.0, 1.0, 1}, {2.0, -1.0, 1}, {5.0, 0.0, 1}});
  for (int n : {1, 3, 6}) {
    CoeffValue v = coefficient(cfg, 0.5, n);
    BigComplex w = coefficient_big(cfg, 0.5, n, 256);
    CHECK(std::abs(w.re.to_double() - v.value.real()) <=
          v.round_off + 1e-15 * std::abs(v.value.real()));
    CHECK(std::abs(w.im.to_double() - v.value.imag()) <= v.round_off + 1e-15);
  }
  ZeroConfig poley({{2.0, 0.0, 1}});
  CHECK_THROWS_AS(coefficient_big(poley, 2.0, 1, 128), PoleError);
}
