#pragma once

#include <mpfr.h>

namespace optocav::detail {

// Owning handle for an mpfr_t. Only what the series engine needs.
class MpReal {
 public:
  explicit MpReal(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  MpReal(mpfr_prec_t prec, double x) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }
  ~MpReal() { mpfr_clear(v_); }
  MpReal(const MpReal&) = delete;
  MpReal& operator=(const MpReal&) = delete;

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

// Complex number as a pair of MpReal with in-place arithmetic.
class MpComplex {
 public:
  MpComplex(mpfr_prec_t prec, double re, double im) : re_(prec, re), im_(prec, im), t1_(prec), t2_(prec) {}

  MpReal& re() { return re_; }
  MpReal& im() { return im_; }

  // this *= (yr + i yi)
  void mul(const MpReal& yr, const MpReal& yi) {
    mpfr_mul(t1_.get(), re_.get(), yr.get(), MPFR_RNDN);
    mpfr_mul(t2_.get(), im_.get(), yi.get(), MPFR_RNDN);
    mpfr_mul(im_.get(), im_.get(), yr.get(), MPFR_RNDN);
    mpfr_fma(im_.get(), re_.get(), yi.get(), im_.get(), MPFR_RNDN);
    mpfr_sub(re_.get(), t1_.get(), t2_.get(), MPFR_RNDN);
  }

  void scale(const MpReal& s) {
    mpfr_mul(re_.get(), re_.get(), s.get(), MPFR_RNDN);
    mpfr_mul(im_.get(), im_.get(), s.get(), MPFR_RNDN);
  }

  void unscale(const MpReal& s) {
    mpfr_div(re_.get(), re_.get(), s.get(), MPFR_RNDN);
    mpfr_div(im_.get(), im_.get(), s.get(), MPFR_RNDN);
  }

  void add(MpComplex& o) {
    mpfr_add(re_.get(), re_.get(), o.re_.get(), MPFR_RNDN);
    mpfr_add(im_.get(), im_.get(), o.im_.get(), MPFR_RNDN);
  }

  void set(MpComplex& o) {
    mpfr_set(re_.get(), o.re_.get(), MPFR_RNDN);
    mpfr_set(im_.get(), o.im_.get(), MPFR_RNDN);
  }

 private:
  MpReal re_, im_, t1_, t2_;
};

}  // namespace optocav::detail
