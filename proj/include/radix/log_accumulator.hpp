#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace radix {

// Neumaier-compensated sum of floating terms with a running a-priori error
// bound. Terms are added in caller order; callers iterate bases ascending so
// results are reproducible.
class LogAccumulator {
 public:
  static constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon() / 2;
  // Each term such as c * log(b) / (b - 1) carries a few roundings of its own.
  static constexpr double kDefaultTermError = 4 * kUnitRoundoff;

  void add(double term, double term_rel_error = kDefaultTermError) {
    const double t = sum_ + term;
    if (std::fabs(sum_) >= std::fabs(term))
      compensation_ += (sum_ - t) + term;
    else
      compensation_ += (term - t) + sum_;
    sum_ = t;
    abs_sum_ += std::fabs(term);
    term_error_ += std::fabs(term) * term_rel_error;
    ++term_count_;
  }

  double value() const { return sum_ + compensation_; }
  double sum() const { return sum_; }
  double compensation() const { return compensation_; }
  std::uint64_t term_count() const { return term_count_; }
  double abs_sum() const { return abs_sum_; }

  // |value() - exact sum of the supplied real terms| is at most this.
  double error_bound() const {
    const double n = static_cast<double>(term_count_);
    const double summation = (2 * kUnitRoundoff + n * kUnitRoundoff * kUnitRoundoff) * abs_sum_;
    return summation + term_error_ + kUnitRoundoff * std::fabs(value());
  }

 private:
  double sum_ = 0;
  double compensation_ = 0;
  double abs_sum_ = 0;
  double term_error_ = 0;
  std::uint64_t term_count_ = 0;
};

}  // namespace radix
