#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "g1lp/errors.hpp"
#include "g1lp/zero_model.hpp"

using namespace g1lp;

namespace {

ZeroConfig reals(std::initializer_list<double> xs) {
  std::vector<Zero> zs;
  for (double x : xs) zs.push_back({x, 0.0, 1});
  return ZeroConfig(std::move(zs));
}

ZeroConfig pair_and_real(double re, double im, double x) {
  return ZeroConfig({{re, im, 1}, {re, -im, 1}, {x, 0.0, 1}});
}

}  // namespace

TEST_CASE("conjugate symmetry detection") {
  CHECK(validate_conjugate_symmetry(pair_and_real(2.0, 1.0, 5.0)));
  CHECK(validate_conjugate_symmetry(reals({1.0, 4.0, 9.0})));  // vacuous
  CHECK_FALSE(validate_conjugate_symmetry(ZeroConfig({{2.0, 1.0, 1}, {5.0, 0.0, 1}})));
  // partner exists but multiplicities disagree
  CHECK_FALSE(validate_conjugate_symmetry(ZeroConfig({{2.0, 1.0, 2}, {2.0, -1.0, 1}})));
}

TEST_CASE("spacing constant on the basic examples") {
  CHECK(spacing_constant(reals({1.0, 4.0, 9.0})) == 3.0);
  CHECK(spacing_constant(pair_and_real(2.0, 1.0, 5.0)) == 3.0);
  CHECK(spacing_constant(ZeroConfig({{3.0, 0.0, 2}})) == 0.0);  // repeated zero
  // distinct non-conjugate zeros sharing a real part
  CHECK(spacing_constant(ZeroConfig({{2.0, 1.0, 1}, {2.0, -1.0, 1}, {2.0, 3.0, 1}, {2.0, -3.0, 1}})) == 0.0);
  // single zero: no admissible pair
  CHECK(spacing_constant(reals({7.0})) == kInf);
}

TEST_CASE("height on the basic examples") {
  CHECK(height(ZeroConfig({{1.0, 0.5, 1}, {1.0, -0.5, 1}, {3.0, 2.0, 1}, {3.0, -2.0, 1}})) == 0.5);
  CHECK(height(reals({1.0, 2.0})) == kInf);
  CHECK(height(pair_and_real(2.0, 1.0, 5.0)) == 1.0);
}

TEST_CASE("aperture covers the finite and degenerate cases") {
  // b = 1, c = 2 -> kappa = 0.5
  CHECK(aperture(ZeroConfig({{1.0, 1.0, 1}, {1.0, -1.0, 1}, {3.0, 0.0, 1}})) == 0.5);
  CHECK(aperture(reals({1.0, 4.0})) == kInf);                // b infinite
  CHECK(aperture(ZeroConfig({{3.0, 1.0, 2}, {3.0, -1.0, 2}})) == kInf);  // c = 0
  // only a mutual-conjugate pair: c = +inf, b finite -> kappa = 0
  SpacingReport rep = spacing_report(ZeroConfig({{0.0, 1.0, 1}, {0.0, -1.0, 1}}));
  CHECK(rep.c == kInf);
  CHECK(rep.b == 1.0);
  CHECK(rep.kappa == 0.0);
  CHECK(rep.empty_pair_set);
}

TEST_CASE("spacing report localizes the extremal pair") {
  SpacingReport rep = spacing_report(pair_and_real(2.0, 1.0, 5.0));
  CHECK(rep.c == 3.0);
  CHECK(rep.b == 1.0);
  CHECK(rep.kappa == doctest::Approx(1.0 / 3.0));
  REQUIRE(rep.c_pair.has_value());
  REQUIRE(rep.b_index.has_value());
  CHECK_FALSE(rep.repeated_zero);
  CHECK_FALSE(rep.empty_pair_set);
}

TEST_CASE("tail gap participates in the spacing constant") {
  TailModel tail;
  tail.kind = TailModel::Kind::ArithmeticReal;
  tail.start = 100.0;
  tail.gap = 2.0;
  ZeroConfig cfg({{1.0, 0.0, 1}, {11.0, 0.0, 1}}, 0, 0.0, tail);
  SpacingReport rep = spacing_report(cfg);
  CHECK(rep.c == 2.0);
  CHECK(rep.tail_limited_c);
}

TEST_CASE("strong spacing fit") {
  CHECK(strong_spacing_fit(reals({1.0, 2.0, 4.0, 8.0}), 1.0) == 1.0);
  CHECK(strong_spacing_fit(reals({1.0, 2.0, 3.0}), 1.0) == 0.5);
  // gamma = 0 reduces to the plain minimal gap over consecutive zeros
  CHECK(strong_spacing_fit(reals({1.0, 2.0, 4.0}), 0.0) == 1.0);
  // mutual conjugates are skipped, the surviving gap constrains C
  ZeroConfig mixed({{1.0, 1.0, 1}, {1.0, -1.0, 1}, {3.0, 0.0, 1}});
  CHECK(strong_spacing_fit(mixed, 1.0) == 2.0);
  // single zero: nothing constrains C
  CHECK(strong_spacing_fit(reals({5.0}), 1.0) == kInf);
  CHECK_THROWS_AS(strong_spacing_fit(reals({-1.0, 2.0}), 1.0), DomainError);
}

TEST_CASE("power_zeros squares repeatedly") {
  ZeroConfig sq = power_zeros(reals({2.0, 3.0}), 1);
  REQUIRE(sq.zeros().size() == 2);
  CHECK(sq.zeros()[0].re == 4.0);
  CHECK(sq.zeros()[1].re == 9.0);

  ZeroConfig c = power_zeros(ZeroConfig({{1.0, 1.0, 1}}), 1);
  REQUIRE(c.zeros().size() == 1);
  CHECK(c.zeros()[0].re == doctest::Approx(0.0).scale(1.0));
  CHECK(c.zeros()[0].im == doctest::Approx(2.0));

  ZeroConfig q = power_zeros(reals({2.0, 3.0}), 2);
  CHECK(q.zeros()[0].re == 16.0);
  CHECK(q.zeros()[1].re == 81.0);

  // two single squarings compose to n = 2
  ZeroConfig twice = power_zeros(power_zeros(reals({2.0, 3.0}), 1), 1);
  CHECK(twice.zeros() == q.zeros());

  CHECK_THROWS_AS(power_zeros(reals({2.0}), 0), DomainError);

  // squaring merges zeros that collide, multiplicities add
  ZeroConfig merge = power_zeros(reals({-2.0, 2.0}), 1);
  // -2 is rejected by strong spacing but fine here; both zeros land on 4
  REQUIRE(merge.zeros().size() == 1);
  CHECK(merge.zeros()[0].re == 4.0);
  CHECK(merge.zeros()[0].multiplicity == 2);
}

TEST_CASE("spacing is translation invariant and scales linearly") {
  ZeroConfig base = pair_and_real(2.0, 1.0, 5.0);
  SpacingReport r0 = spacing_report(base);

  std::vector<Zero> shifted;
  for (const Zero& z : base.zeros()) shifted.push_back({z.re + 10.0, z.im, z.multiplicity});
  SpacingReport r1 = spacing_report(ZeroConfig(shifted));
  CHECK(r1.c == r0.c);
  CHECK(r1.b == r0.b);
  CHECK(r1.kappa == r0.kappa);

  std::vector<Zero> scaled;
  for (const Zero& z : base.zeros()) scaled.push_back({2.0 * z.re, 2.0 * z.im, z.multiplicity});
  SpacingReport r2 = spacing_report(ZeroConfig(scaled));
  CHECK(r2.c == 2.0 * r0.c);
  CHECK(r2.b == 2.0 * r0.b);
  CHECK(r2.kappa == doctest::Approx(r0.kappa));
}

TEST_CASE("construction is permutation invariant") {
  ZeroConfig a({{5.0, 0.0, 1}, {2.0, -1.0, 1}, {2.0, 1.0, 1}});
  ZeroConfig b({{2.0, 1.0, 1}, {5.0, 0.0, 1}, {2.0, -1.0, 1}});
  CHECK(a.zeros() == b.zeros());
  CHECK(a.to_json() == b.to_json());
}

TEST_CASE("duplicate zeros merge with summed multiplicity") {
  ZeroConfig cfg({{3.0, 0.0, 1}, {3.0, 0.0, 2}});
  REQUIRE(cfg.zeros().size() == 1);
  CHECK(cfg.zeros()[0].multiplicity == 3);
}

TEST_CASE("negative zero imaginary part is normalized") {
  ZeroConfig cfg({{3.0, -0.0, 1}});
  CHECK_FALSE(std::signbit(cfg.zeros()[0].im));
}

TEST_CASE("json serialization round-trips") {
  TailModel tail;
  tail.kind = TailModel::Kind::ArithmeticReal;
  tail.start = 50.0;
  tail.gap = 3.0;
  tail.symmetric = true;
  ZeroConfig cfg({{2.0, 1.0, 1}, {2.0, -1.0, 1}, {5.0, 0.0, 2}}, 1, 0.25, tail);
  ZeroConfig back = ZeroConfig::from_json(cfg.to_json());
  CHECK(back.zeros() == cfg.zeros());
  CHECK(back.ell() == cfg.ell());
  CHECK(back.d2() == cfg.d2());
  CHECK(back.tail() == cfg.tail());
}

TEST_CASE("snap tolerance flattens near-real zeros and symmetrizes pairs") {
  ConfigOptions opts;
  opts.snap_tolerance = 1e-6;
  ZeroConfig cfg({{3.0, 1e-9, 1}, {7.0, 1.0 + 1e-9, 1}, {7.0, -1.0, 1}}, 0, 0.0, std::nullopt, opts);
  CHECK(cfg.zeros()[0].im == 0.0);
  // the near-conjugate pair ends up exactly mirrored
  CHECK(cfg.zeros()[1].im == -cfg.zeros()[2].im);
  CHECK(validate_conjugate_symmetry(cfg));
}

TEST_CASE("constructor rejects malformed configurations") {
  CHECK_THROWS_AS(ZeroConfig({{1.0, 0.0, 0}}), DomainError);                  // multiplicity < 1
  CHECK_THROWS_AS(ZeroConfig({{0.0, 0.0, 1}}), DomainError);                  // zero listed at origin
  CHECK_THROWS_AS(ZeroConfig({{kInf, 0.0, 1}}), DomainError);                 // non-finite coordinate
  CHECK_THROWS_AS(ZeroConfig({{1.0, 0.0, 1}}, -1), DomainError);              // ell < 0

  ConfigOptions strict;
  strict.require_f0_nonzero = true;
  CHECK_THROWS_AS(ZeroConfig({{1.0, 0.0, 1}}, 2, 0.0, std::nullopt, strict), DomainError);

  TailModel bad;
  bad.kind = TailModel::Kind::ArithmeticReal;
  bad.start = 10.0;
  bad.gap = 0.0;  // gap must be positive
  CHECK_THROWS_AS(ZeroConfig({{1.0, 0.0, 1}}, 0, 0.0, bad), DomainError);

  TailModel sym;
  sym.kind = TailModel::Kind::ArithmeticReal;
  sym.start = 0.0;  // symmetric tail needs start > 0
  sym.gap = 1.0;
  sym.symmetric = true;
  CHECK_THROWS_AS(ZeroConfig({{1.0, 0.0, 1}}, 0, 0.0, sym), DomainError);
}

TEST_CASE("from_json rejects malformed input") {
  CHECK_THROWS_AS(ZeroConfig::from_json(nlohmann::json::array()), DomainError);
  nlohmann::json bad = {{"zeros", "nope"}};
  CHECK_THROWS_AS(ZeroConfig::from_json(bad), DomainError);
  nlohmann::json badtail = {{"zeros", nlohmann::json::array()},
                            {"tail", {{"kind", "mystery"}, {"start", 1.0}, {"gap", 1.0}}}};
  CHECK_THROWS_AS(ZeroConfig::from_json(badtail), DomainError);
}
