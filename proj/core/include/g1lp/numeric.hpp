#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <string>

namespace g1lp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kEps = std::numeric_limits<double>::epsilon();

// Neumaier compensated accumulator.  value() carries the compensated sum;
// abs_sum() the sum of |term|, which bounds the condition of the summation
// and feeds round-off budgets.
class Accumulator {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
    abs_ += std::abs(x);
    ++count_;
  }

  double value() const { return sum_ + comp_; }
  double abs_sum() const { return abs_; }
  std::size_t count() const { return count_; }

  // Upper bound on the error of value() relative to the exact sum of the
  // added terms: 2u * abs_sum covers compensated summation of any length
  // realizable in memory.
  double round_off() const { return 2.0 * kEps * abs_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
  double abs_ = 0.0;
  std::size_t count_ = 0;
};

// Runs fn(i) for i in [0, n) on `threads` workers with static contiguous
// chunking.  Results must be written to disjoint slots so the output is
// independent of the thread count; threads <= 1 runs inline.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

// Shortest-faithful decimal for a double ("%.17g"); infinities map to
// "inf" / "-inf", which the parsers accept back.
std::string format_double(double x);

// strtod with full-string validation; throws DomainError on trailing junk.
double parse_double(const std::string& text);

}  // namespace g1lp
