#pragma once

#include <mpfr.h>

#include <cmath>
#include <ostream>
#include <string>
#include <utility>

namespace ptsqw {

/// Arbitrary-precision real backed by MPFR. Every operation rounds to the
/// thread-local working precision, set in decimal digits via ScopedDigits,
/// so a whole evaluation runs uniformly at the digits requested by the
/// active PrecisionPolicy.
class BigFloat {
 public:
  static mpfr_prec_t prec_from_digits(int digits) {
    if (digits < 2) digits = 2;
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873626)) + 8;
  }

  static int& default_digits_ref() {
    thread_local int digits = 16;
    return digits;
  }
  static int default_digits() { return default_digits_ref(); }
  static void set_default_digits(int d) { default_digits_ref() = d; }
  static mpfr_prec_t working_prec() { return prec_from_digits(default_digits()); }

  class ScopedDigits {
   public:
    explicit ScopedDigits(int d) : saved_(default_digits()) { set_default_digits(d); }
    ~ScopedDigits() { set_default_digits(saved_); }
    ScopedDigits(const ScopedDigits&) = delete;
    ScopedDigits& operator=(const ScopedDigits&) = delete;

   private:
    int saved_;
  };

  BigFloat() {
    mpfr_init2(v_, working_prec());
    mpfr_set_zero(v_, 1);
  }
  BigFloat(double x) {
    mpfr_init2(v_, working_prec());
    mpfr_set_d(v_, x, MPFR_RNDN);
  }
  BigFloat(int x) {
    mpfr_init2(v_, working_prec());
    mpfr_set_si(v_, x, MPFR_RNDN);
  }
  BigFloat(long x) {
    mpfr_init2(v_, working_prec());
    mpfr_set_si(v_, x, MPFR_RNDN);
  }
  explicit BigFloat(const std::string& s) {
    mpfr_init2(v_, working_prec());
    mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN);
  }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, working_prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  explicit operator double() const { return to_double(); }
  int sign() const { return mpfr_sgn(v_); }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }

  std::string str(int digits = 0) const {
    if (digits <= 0) digits = default_digits();
    char* raw = nullptr;
    mpfr_asprintf(&raw, "%.*Rg", digits, v_);
    std::string out(raw);
    mpfr_free_str(raw);
    return out;
  }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

#define PTSQW_BF_BINOP(op, fn)                                \
  friend BigFloat operator op(const BigFloat& a, const BigFloat& b) { \
    BigFloat r;                                               \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                          \
    return r;                                                 \
  }                                                           \
  friend BigFloat operator op(const BigFloat& a, double b) {  \
    return a op BigFloat(b);                                  \
  }                                                           \
  friend BigFloat operator op(double a, const BigFloat& b) {  \
    return BigFloat(a) op b;                                  \
  }                                                           \
  friend BigFloat operator op(const BigFloat& a, int b) {     \
    return a op BigFloat(b);                                  \
  }                                                           \
  friend BigFloat operator op(int a, const BigFloat& b) { return BigFloat(a) op b; }

  PTSQW_BF_BINOP(+, mpfr_add)
  PTSQW_BF_BINOP(-, mpfr_sub)
  PTSQW_BF_BINOP(*, mpfr_mul)
  PTSQW_BF_BINOP(/, mpfr_div)
#undef PTSQW_BF_BINOP

  BigFloat operator-() const {
    BigFloat r;
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }
  BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
  BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
  BigFloat& operator*=(const BigFloat& o) { return *this = *this * o; }
  BigFloat& operator/=(const BigFloat& o) { return *this = *this / o; }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const BigFloat& a, double b) { return mpfr_cmp_d(a.v_, b) < 0; }
  friend bool operator>(const BigFloat& a, double b) { return mpfr_cmp_d(a.v_, b) > 0; }
  friend bool operator<=(const BigFloat& a, double b) { return mpfr_cmp_d(a.v_, b) <= 0; }
  friend bool operator>=(const BigFloat& a, double b) { return mpfr_cmp_d(a.v_, b) >= 0; }
  friend bool operator==(const BigFloat& a, double b) { return mpfr_cmp_d(a.v_, b) == 0; }
  friend bool operator<(double a, const BigFloat& b) { return b > a; }
  friend bool operator>(double a, const BigFloat& b) { return b < a; }
  friend bool operator<=(double a, const BigFloat& b) { return b >= a; }
  friend bool operator>=(double a, const BigFloat& b) { return b <= a; }

#define PTSQW_BF_UNFN(name, fn)            \
  friend BigFloat name(const BigFloat& a) { \
    BigFloat r;                            \
    fn(r.v_, a.v_, MPFR_RNDN);             \
    return r;                              \
  }

  PTSQW_BF_UNFN(sqrt, mpfr_sqrt)
  PTSQW_BF_UNFN(cbrt, mpfr_cbrt)
  PTSQW_BF_UNFN(sin, mpfr_sin)
  PTSQW_BF_UNFN(cos, mpfr_cos)
  PTSQW_BF_UNFN(tan, mpfr_tan)
  PTSQW_BF_UNFN(exp, mpfr_exp)
  PTSQW_BF_UNFN(log, mpfr_log)
  PTSQW_BF_UNFN(abs, mpfr_abs)
  PTSQW_BF_UNFN(asin, mpfr_asin)
  PTSQW_BF_UNFN(acos, mpfr_acos)
  PTSQW_BF_UNFN(atan, mpfr_atan)
#undef PTSQW_BF_UNFN

  friend BigFloat atan2(const BigFloat& y, const BigFloat& x) {
    BigFloat r;
    mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat hypot(const BigFloat& a, const BigFloat& b) {
    BigFloat r;
    mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat pow(const BigFloat& a, long n) {
    BigFloat r;
    mpfr_pow_si(r.v_, a.v_, n, MPFR_RNDN);
    return r;
  }
  friend bool isfinite(const BigFloat& a) { return a.is_finite(); }

  static BigFloat pi() {
    BigFloat r;
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  friend std::ostream& operator<<(std::ostream& os, const BigFloat& a) { return os << a.str(); }

 private:
  mpfr_t v_;
};

/// Scalar shims so templated numerics can be instantiated for double and
/// BigFloat alike.
template <class T>
inline double to_double(const T& x) {
  return static_cast<double>(x);
}
inline double to_double(double x) { return x; }
inline double to_double(const BigFloat& x) { return x.to_double(); }

template <class T>
inline T scalar_pi();
template <>
inline double scalar_pi<double>() {
  return 3.14159265358979323846264338327950288;
}
template <>
inline BigFloat scalar_pi<BigFloat>() {
  return BigFloat::pi();
}

}  // namespace ptsqw
