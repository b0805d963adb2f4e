#include "ptsqw/xwell.hpp"

#include <cmath>

namespace ptsqw::xwell {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

template <class Fn>
auto with_policy_digits(const num::PrecisionPolicy& policy, Fn&& fn) {
  if (policy.digits <= 16) return fn(double{});
  BigFloat::ScopedDigits guard(policy.digits);
  return fn(BigFloat{});
}

}  // namespace

std::tuple<double, double, double> params_from_alpha(double alpha, double T) {
  double p, q, k;
  core::params_from_alpha_t<double>(alpha, T, p, q, k);
  return {p, q, k};
}

double secular_residual(double omega, int N, double T) {
  return core::secular_residual_t<double>(omega, N, T);
}

Level solve_level(int N, double T, const num::PrecisionPolicy& policy) {
  if (N < 0) throw DomainError("solve_level: N must be >= 0");
  if (!(T > 0)) throw DomainError("solve_level: T must be > 0");
  policy.validate();
  return with_policy_digits(policy, [&](auto tag) {
    using S = decltype(tag);
    return core::solve_level_t<S>(N, S(T), policy);
  });
}

std::vector<Level> spectrum(double T, int N_max, const num::PrecisionPolicy& policy) {
  if (N_max < 0) throw DomainError("spectrum: N_max must be >= 0");
  std::vector<Level> out;
  out.reserve(N_max + 1);
  for (int N = 0; N <= N_max; ++N) {
    out.push_back(solve_level(N, T, policy));
    if (N > 0 && !(out[N].E > out[N - 1].E))
      throw ConvergenceFailure("spectrum: levels not strictly increasing in E");
  }
  return out;
}

double g_parameter(const Level& level) {
  if (level.parity == Parity::plus) return -(level.k * level.k) / (level.q_osc + level.p_decay);
  return -(level.q_osc + level.p_decay);
}

WaveFunction make_wavefunction(const Level& level) {
  WaveFunction wf;
  wf.level = level;
  wf.B_imag = level.G / level.k;
  wf.sigma_re = level.p_decay;
  wf.sigma_im = level.q_osc;
  // outer amplitude from continuity of psi at x = pi
  Cplx<double> psi_pi(std::cos(level.k * kPi), wf.B_imag * std::sin(level.k * kPi));
  Cplx<double> amp = psi_pi * exp(Cplx<double>(wf.sigma_re * kPi, wf.sigma_im * kPi));
  wf.L_out = amp.re;
  wf.N_out = amp.im;
  return wf;
}

std::complex<double> WaveFunction::operator()(double x) const {
  if (x < 0) return std::conj((*this)(-x));
  if (x < kPi) {
    return {std::cos(level.k * x), B_imag * std::sin(level.k * x)};
  }
  Cplx<double> amp(L_out, N_out);
  Cplx<double> tail = amp * exp(Cplx<double>(-sigma_re * x, -sigma_im * x));
  return tail.to_std();
}

std::complex<double> wavefunction(const Level& level, double x) {
  return make_wavefunction(level)(x);
}

std::complex<double> matching_residual(const Level& level) {
  const double k = level.k;
  Cplx<double> sigma(level.p_decay, level.q_osc);
  const double skp = std::sin(k * kPi);
  const double ckp = std::cos(k * kPi);
  // tan((k+Omega)pi) with tan(Omega pi) = -sigma/k, via the addition formula
  Cplx<double> numer = Cplx<double>(k * skp) - sigma * ckp;
  Cplx<double> denom = Cplx<double>(k * ckp) + sigma * skp;
  const double scale = std::abs(k) + abs(sigma);
  if (abs(denom) < 1e-10 * scale)
    throw TangentPole("matching_residual: (k+Omega)pi within 1e-10 of a tangent pole");
  Cplx<double> tanfull = numer / denom;
  Cplx<double> residual = Cplx<double>(level.G) + Cplx<double>(0.0, k) * tanfull;
  return residual.to_std();
}

double weak_coupling_estimate(int N, double T, int terms) {
  if (N < 0 || !(T > 0)) throw DomainError("weak_coupling_estimate: bad N or T");
  const double sR = (2.0 * N + 1.0) / (4.0 * T);  // sqrt(R) at omega = 1
  const double R = sR * sR;
  if (R < 10.0) throw OutOfRegime("weak_coupling_estimate: R < 10");
  double eta = 1.0 / (2.0 * R);
  if (terms >= 2) eta -= 5.0 / (48.0 * R * R * R);
  return 1.0 - (2.0 / kPi) * eta;
}

double strong_coupling_estimate(int N, double T) {
  if (N < 0 || !(T > 0)) throw DomainError("strong_coupling_estimate: bad N or T");
  const double sR = (2.0 * N + 2.0) / (4.0 * T);  // sqrt(R) at omega = 0
  const double R = sR * sR;
  if (R > 0.1) throw OutOfRegime("strong_coupling_estimate: R > 0.1");
  // sqrt(1+R^2)-1 written to avoid cancellation
  const double grow = R * R / (1.0 + std::sqrt(1.0 + R * R));
  const double arg = 0.5 * (R - grow);
  return (4.0 / kPi) * std::asin(std::sqrt(std::max(arg, 0.0)));
}

std::vector<double> hermitian_box_levels(int count) {
  if (count < 1) throw DomainError("hermitian_box_levels: count must be >= 1");
  std::vector<double> out(count);
  for (int n = 0; n < count; ++n) out[n] = (n + 1.0) * (n + 1.0) / 4.0;
  return out;
}

}  // namespace ptsqw::xwell
