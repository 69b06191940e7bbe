#pragma once

#include <mpfr.h>

#include <string>

#include "latred/exactlin.hpp"

namespace latred {

// Working precision for all log-domain values (potentials, swap bounds).
// Fixed so that results are bit-reproducible across runs and platforms.
inline constexpr mpfr_prec_t kWorkingPrecisionBits = 192;

// Fixed-precision real number. Exact rationals are the currency of the
// reduction itself; HiReal only ever appears downstream of a logarithm.
class HiReal {
 public:
  HiReal();
  HiReal(const HiReal& other);
  HiReal(HiReal&& other) noexcept;
  HiReal& operator=(const HiReal& other);
  HiReal& operator=(HiReal&& other) noexcept;
  ~HiReal();

  explicit HiReal(long v);
  explicit HiReal(double v);

  static HiReal from_rational(const BigRat& q);
  /// log2(q) for q > 0, exact input, correctly rounded at working precision.
  static HiReal log2(const BigRat& q);
  /// Parse a decimal string produced by to_string().
  static HiReal parse(const std::string& s);

  HiReal& operator+=(const HiReal& rhs);
  HiReal& operator-=(const HiReal& rhs);
  HiReal& operator*=(const HiReal& rhs);
  HiReal& operator/=(const HiReal& rhs);

  friend HiReal operator+(HiReal lhs, const HiReal& rhs) { return lhs += rhs; }
  friend HiReal operator-(HiReal lhs, const HiReal& rhs) { return lhs -= rhs; }
  friend HiReal operator*(HiReal lhs, const HiReal& rhs) { return lhs *= rhs; }
  friend HiReal operator/(HiReal lhs, const HiReal& rhs) { return lhs /= rhs; }
  HiReal operator-() const;

  friend bool operator<(const HiReal& a, const HiReal& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const HiReal& a, const HiReal& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const HiReal& a, const HiReal& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const HiReal& a, const HiReal& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
  friend bool operator==(const HiReal& a, const HiReal& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

  double to_double() const;
  std::string to_string(int significant_digits = 40) const;

 private:
  mpfr_t v_;
};

/// log2(2/sqrt(3)), the per-swap potential decrease constant.
const HiReal& log2_two_over_sqrt3();

}  // namespace latred
