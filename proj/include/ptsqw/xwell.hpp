#pragma once

#include <complex>
#include <tuple>
#include <vector>

#include "ptsqw/cplx.hpp"
#include "ptsqw/errors.hpp"
#include "ptsqw/numerics.hpp"

namespace ptsqw::xwell {

/// Coordinate-space well with imaginary steps +-i T^2 outside |x| > pi,
/// in units hbar = 2m = 1.
struct Model {
  double T = 1.0;
};

enum class Parity { plus, minus };

/// One bound state. N is the combined index (N = 2n for the plus series,
/// N = 2n+1 for minus); omega in (0,1) is the secular root, alpha = pi*omega/2,
/// k the interior wavenumber, sigma = p_decay + i q_osc the outer exponent,
/// E = k^2, G the log-derivative parameter at the origin, R_aux = (k/T)^2.
struct Level {
  int N = 0;
  Parity parity = Parity::plus;
  double omega = 0;
  double alpha = 0;
  double k = 0;
  double p_decay = 0;
  double q_osc = 0;
  double E = 0;
  double G = 0;
  double R_aux = 0;
};

/// Outer amplitude and exponent of the explicit wave function, with
/// psi(0) = 1 and psi'(0) = i G fixed by normalization.
struct WaveFunction {
  Level level;
  double B_imag = 0;  // psi = cos(kx) + i*B_imag*sin(kx) inside; B_imag = G/k
  double L_out = 0;
  double N_out = 0;
  double sigma_re = 0;
  double sigma_im = 0;

  std::complex<double> operator()(double x) const;
};

namespace core {

template <class T>
T sqrt_R(const T& omega, int N, const T& well_T) {
  return (T(2 * N + 2) - omega) / (4 * well_T);
}

// sin/cos of pi*omega/2 computed from the short side, so omega near 1 keeps
// full relative accuracy in the cosine.
template <class T>
void half_angle_sc(const T& omega, T& s, T& c) {
  using std::cos;
  using std::sin;
  const T pi = scalar_pi<T>();
  if (omega <= 0.5) {
    s = sin(pi * omega / 2);
    c = cos(pi * omega / 2);
  } else {
    T eta = 1 - omega;
    s = cos(pi * eta / 2);
    c = sin(pi * eta / 2);
  }
}

template <class T>
T secular_residual_t(const T& omega, int N, const T& well_T) {
  using std::sqrt;
  if (!(omega > 0 && omega < 1)) throw DomainError("secular_residual: omega outside (0,1)");
  T s, c;
  half_angle_sc(omega, s, c);
  return s - sqrt_R(omega, N, well_T) * sqrt(2 * c);
}

template <class T>
void params_from_alpha_t(const T& alpha, const T& well_T, T& p, T& q, T& k) {
  using std::cos;
  using std::sin;
  using std::sqrt;
  const T pi = scalar_pi<T>();
  if (!(alpha > 0 && alpha < pi / 2)) throw DomainError("params_from_alpha: alpha outside (0, pi/2)");
  q = well_T / sqrt(2 * cos(alpha));
  p = q * cos(alpha);
  k = q * sin(alpha);
}

template <class T>
Level solve_level_t(int N, const T& well_T, const num::PrecisionPolicy& policy) {
  using std::cos;
  using std::sqrt;
  auto residual = [&](const T& w) { return secular_residual_t(w, N, well_T); };

  // The residual is strictly increasing in omega (sin grows, sqrt(R)*sqrt(2cos)
  // shrinks), so one bracket spans the whole interval. A coarse scan still
  // guards against a broken evaluation producing several crossings.
  {
    num::PrecisionPolicy coarse = policy;
    coarse.scan_points = 128;
    auto brs = num::scan_t<T>(residual, T(0), T(1), coarse);
    if (brs.size() != 1)
      throw ConvergenceFailure("solve_level: expected exactly one secular bracket, found " +
                               std::to_string(brs.size()));
  }

  const T edge(1e-8);
  num::BracketT<T> b{edge, T(1) - edge, residual(edge), residual(T(1) - edge)};
  num::Root root = num::bisect_t<T>(residual, b, policy);

  Level lv;
  lv.N = N;
  lv.parity = (N % 2 == 0) ? Parity::plus : Parity::minus;
  T omega(root.x);
  T s, c;
  half_angle_sc(omega, s, c);
  T k = (T(2 * N + 2) - omega) / 4;
  T q = well_T / sqrt(2 * c);
  T p = q * c;
  lv.omega = to_double(omega);
  lv.alpha = to_double(scalar_pi<T>() * omega / 2);
  lv.k = to_double(k);
  lv.q_osc = to_double(q);
  lv.p_decay = to_double(p);
  lv.E = to_double(k * k);
  lv.R_aux = to_double((k / well_T) * (k / well_T));
  // Eq. (12); the minus branch -k^2/(q-p) equals -(q+p) exactly because
  // (q-p)(q+p) = k^2.
  lv.G = (lv.parity == Parity::plus) ? to_double(-(k * k) / (q + p)) : to_double(-(q + p));
  return lv;
}

}  // namespace core

std::tuple<double, double, double> params_from_alpha(double alpha, double T);
double secular_residual(double omega, int N, double T);
Level solve_level(int N, double T, const num::PrecisionPolicy& policy = {});
std::vector<Level> spectrum(double T, int N_max, const num::PrecisionPolicy& policy = {});
double g_parameter(const Level& level);
WaveFunction make_wavefunction(const Level& level);
std::complex<double> wavefunction(const Level& level, double x);
std::complex<double> matching_residual(const Level& level);
double weak_coupling_estimate(int N, double T, int terms = 2);
double strong_coupling_estimate(int N, double T);
std::vector<double> hermitian_box_levels(int count);

}  // namespace ptsqw::xwell
