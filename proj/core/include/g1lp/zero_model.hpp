#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "g1lp/numeric.hpp"

namespace g1lp {

// One root of the Hadamard product.  im == 0 is exactly real (normalized to
// +0); multiplicity >= 1.
struct Zero {
  double re = 0.0;
  double im = 0.0;
  int multiplicity = 1;

  friend bool operator==(const Zero& a, const Zero& b) = default;
};

// Certified description of the zeros beyond the explicit list: a real
// arithmetic-progression-like arm starting at `start`, marching away from the
// origin with successive gaps >= `gap`.  With `symmetric`, a mirrored arm
// starts at -start.  Real-only by construction, so a tail never affects the
// height b; it affects c only through its gap lower bound.
struct TailModel {
  enum class Kind { None, ArithmeticReal };
  Kind kind = Kind::None;
  double start = 0.0;
  double gap = 0.0;
  bool symmetric = false;

  friend bool operator==(const TailModel& a, const TailModel& b) = default;
};

struct ConfigOptions {
  // Merge radius applied at construction: zeros within this distance of the
  // real axis are flattened onto it, near-conjugate pairs are symmetrized.
  // 0 disables snapping (definitions are exact; ingestion decides fuzziness).
  double snap_tolerance = 0.0;
  // Set by constructors used for theorem checks, which require f(0) != 0.
  bool require_f0_nonzero = false;
};

// Immutable zero configuration of f(z) = z^ell e^{d1 + d2 z} prod (1 - z/l_i) e^{z/l_i}.
// Zeros are sorted by (re, im), exact duplicates merged with summed
// multiplicity, im = -0 normalized to +0.
class ZeroConfig {
 public:
  ZeroConfig() = default;
  ZeroConfig(std::vector<Zero> zeros, int ell = 0, double d2 = 0.0,
             std::optional<TailModel> tail = std::nullopt, const ConfigOptions& opts = {});

  const std::vector<Zero>& zeros() const { return zeros_; }
  int ell() const { return ell_; }
  double d2() const { return d2_; }
  const std::optional<TailModel>& tail() const { return tail_; }

  static ZeroConfig from_json(const nlohmann::json& j, const ConfigOptions& opts = {});
  nlohmann::json to_json() const;

 private:
  std::vector<Zero> zeros_;
  int ell_ = 0;
  double d2_ = 0.0;
  std::optional<TailModel> tail_;
};

// Spacing statistics: c (minimal real gap over non-conjugate pairs), b
// (minimal |im| over non-real zeros), kappa = b/c.  +inf sentinels are IEEE
// infinities; serialization writes them as the string "inf".
struct SpacingReport {
  double c = kInf;
  double b = kInf;
  double kappa = kInf;
  std::optional<std::pair<std::size_t, std::size_t>> c_pair;  // 0-based indices into zeros()
  std::optional<std::size_t> b_index;
  // Degeneracy flags.
  bool repeated_zero = false;           // forces c = 0
  bool equal_re_nonconjugate = false;   // distinct non-conjugate zeros sharing re: c = 0
  bool empty_pair_set = false;          // no admissible pair: c = +inf, kappa = 0 if b finite
  bool tail_limited_c = false;          // c equals the tail gap bound, not a listed pair

  nlohmann::json to_json() const;
};

// True iff every zero with im != 0 has a partner with (re, -im) of equal
// multiplicity.  Real zeros are unconstrained.
bool validate_conjugate_symmetry(const ZeroConfig& config);

SpacingReport spacing_report(const ZeroConfig& config);

// c: 0 if any multiplicity > 1 or a non-conjugate pair shares a real part;
// else min |re(l_i) - re(l_j)| over pairs with l_i != conj(l_j); +inf if no
// admissible pair exists.  With a tail, min against the tail's gap bound.
double spacing_constant(const ZeroConfig& config);

// b: min |im| over non-real zeros; +inf when all zeros are real.
double height(const ZeroConfig& config);

// kappa = b/c for finite positive c and finite b; +inf when c = 0 or
// b = +inf; 0 when c = +inf with finite b.
double aperture(const ZeroConfig& config);

// Largest C >= 0 with re(l_{j+1} - l_j) >= C |re(l_j)|^gamma for all
// consecutive pairs except mutual conjugates; 0 if an admissible gap is <= 0;
// +inf if no pair constrains C.  Requires all re > 0.
double strong_spacing_fit(const ZeroConfig& config, double gamma);

// Config with zeros l_j^(2^n), multiplicities preserved, re-sorted and
// re-merged.  ell and d2 carry through unchanged; a tail model does not
// survive squaring and is dropped.
ZeroConfig power_zeros(const ZeroConfig& config, int n);

}  // namespace g1lp
