#pragma once

// A real number carried as sign * exp(log_magnitude). Sphere areas and Z_N
// leave the double range well before N = 1024, so all of that arithmetic
// happens here.

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace kaclab {

class LogValue {
 public:
  constexpr LogValue() = default;

  static LogValue from_log(double log_magnitude, int sign = 1) {
    LogValue v;
    v.sign_ = sign == 0 ? 0 : (sign > 0 ? 1 : -1);
    v.log_ = v.sign_ == 0 ? -std::numeric_limits<double>::infinity()
                          : log_magnitude;
    return v;
  }

  static LogValue from_double(double x) {
    if (x == 0.0) return zero();
    return from_log(std::log(std::abs(x)), x > 0.0 ? 1 : -1);
  }

  static LogValue zero() { return LogValue(); }
  static LogValue one() { return from_log(0.0, 1); }

  double log_magnitude() const noexcept { return log_; }
  int sign() const noexcept { return sign_; }
  bool is_zero() const noexcept { return sign_ == 0; }

  // May overflow to +-inf or underflow to 0; intended for final reporting.
  double to_double() const noexcept {
    return sign_ == 0 ? 0.0 : sign_ * std::exp(log_);
  }

  LogValue pow(double p) const {
    if (sign_ == 0) return p > 0.0 ? zero() : from_log(HUGE_VAL);
    return from_log(log_ * p, sign_ > 0 ? 1 : (std::fmod(p, 2.0) == 0.0 ? 1 : -1));
  }

  friend LogValue operator*(LogValue a, LogValue b) {
    if (a.sign_ == 0 || b.sign_ == 0) return zero();
    return from_log(a.log_ + b.log_, a.sign_ * b.sign_);
  }

  friend LogValue operator/(LogValue a, LogValue b) {
    if (a.sign_ == 0) return zero();
    if (b.sign_ == 0) return from_log(HUGE_VAL, a.sign_);
    return from_log(a.log_ - b.log_, a.sign_ * b.sign_);
  }

  friend LogValue operator-(LogValue a) {
    a.sign_ = -a.sign_;
    return a;
  }

  friend LogValue operator+(LogValue a, LogValue b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    if (a.log_ < b.log_) std::swap(a, b);
    const double d = std::exp(b.log_ - a.log_);  // in [0, 1]
    if (a.sign_ == b.sign_) return from_log(a.log_ + std::log1p(d), a.sign_);
    if (d == 1.0) return zero();
    return from_log(a.log_ + std::log1p(-d), a.sign_);
  }

  friend LogValue operator-(LogValue a, LogValue b) { return a + (-b); }

 private:
  double log_ = -std::numeric_limits<double>::infinity();
  int sign_ = 0;
};

// log-sum-exp of a range of log magnitudes (all positive terms).
template <typename Range>
double log_sum_exp(const Range& logs) {
  double top = -std::numeric_limits<double>::infinity();
  for (double x : logs) top = std::max(top, x);
  if (!std::isfinite(top)) return top;
  double s = 0.0;
  for (double x : logs) s += std::exp(x - top);
  return top + std::log(s);
}

}  // namespace kaclab
