#pragma once

#include <complex>

#include "ptsqw/bigfloat.hpp"

namespace ptsqw {

/// Minimal complex-over-T built from pairs of reals so the same code runs at
/// double and at MPFR precision.
template <class T>
struct Cplx {
  T re{}, im{};

  Cplx() = default;
  Cplx(T r) : re(std::move(r)), im(T(0)) {}
  Cplx(T r, T i) : re(std::move(r)), im(std::move(i)) {}

  friend Cplx operator+(const Cplx& a, const Cplx& b) { return {a.re + b.re, a.im + b.im}; }
  friend Cplx operator-(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }
  friend Cplx operator-(const Cplx& a) { return {-a.re, -a.im}; }
  friend Cplx operator*(const Cplx& a, const Cplx& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Cplx operator*(const T& s, const Cplx& a) { return {s * a.re, s * a.im}; }
  friend Cplx operator*(const Cplx& a, const T& s) { return {a.re * s, a.im * s}; }
  friend Cplx operator/(const Cplx& a, const T& s) { return {a.re / s, a.im / s}; }
  friend Cplx operator/(const Cplx& a, const Cplx& b) {
    T d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }

  friend Cplx conj(const Cplx& a) { return {a.re, -a.im}; }
  friend T abs(const Cplx& a) {
    using std::sqrt;
    return sqrt(a.re * a.re + a.im * a.im);
  }
  friend Cplx exp(const Cplx& a) {
    using std::cos;
    using std::exp;
    using std::sin;
    T m = exp(a.re);
    return {m * cos(a.im), m * sin(a.im)};
  }

  std::complex<double> to_std() const { return {to_double(re), to_double(im)}; }
};

}  // namespace ptsqw
