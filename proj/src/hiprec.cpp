#include "latred/hiprec.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace latred {

HiReal::HiReal() { mpfr_init2(v_, kWorkingPrecisionBits); mpfr_set_zero(v_, 1); }

HiReal::HiReal(const HiReal& other) {
  mpfr_init2(v_, kWorkingPrecisionBits);
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

HiReal::HiReal(HiReal&& other) noexcept {
  mpfr_init2(v_, kWorkingPrecisionBits);
  mpfr_swap(v_, other.v_);
}

HiReal& HiReal::operator=(const HiReal& other) {
  if (this != &other) mpfr_set(v_, other.v_, MPFR_RNDN);
  return *this;
}

HiReal& HiReal::operator=(HiReal&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

HiReal::~HiReal() { mpfr_clear(v_); }

HiReal::HiReal(long v) : HiReal() { mpfr_set_si(v_, v, MPFR_RNDN); }
HiReal::HiReal(double v) : HiReal() { mpfr_set_d(v_, v, MPFR_RNDN); }

HiReal HiReal::from_rational(const BigRat& q) {
  HiReal r;
  mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
  return r;
}

HiReal HiReal::log2(const BigRat& q) {
  if (q <= 0) throw InputError("log2 of non-positive value");
  HiReal r = from_rational(q);
  mpfr_log2(r.v_, r.v_, MPFR_RNDN);
  return r;
}

HiReal HiReal::parse(const std::string& s) {
  HiReal r;
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
    throw InputError("malformed real literal: " + s);
  return r;
}

HiReal& HiReal::operator+=(const HiReal& rhs) { mpfr_add(v_, v_, rhs.v_, MPFR_RNDN); return *this; }
HiReal& HiReal::operator-=(const HiReal& rhs) { mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN); return *this; }
HiReal& HiReal::operator*=(const HiReal& rhs) { mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN); return *this; }
HiReal& HiReal::operator/=(const HiReal& rhs) { mpfr_div(v_, v_, rhs.v_, MPFR_RNDN); return *this; }

HiReal HiReal::operator-() const {
  HiReal r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

double HiReal::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

std::string HiReal::to_string(int significant_digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", significant_digits - 1, v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

const HiReal& log2_two_over_sqrt3() {
  // log2(2/sqrt(3)) = 1 - log2(3)/2
  static const HiReal v = HiReal(1L) - HiReal::log2(BigRat(3)) / HiReal(2L);
  return v;
}

}  // namespace latred
