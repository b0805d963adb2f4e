#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ptsqw/errors.hpp"
#include "ptsqw/numerics.hpp"

namespace ptsqw::pwell {

/// Momentum-space model: third-order operator d^3/dp^3 + T(p) with kinetic
/// square well T(p) = Z for |p| > 1, 0 for |p| < 1; bound-state domain 0 < E < Z.
struct Model {
  double Z = 1.0;
};

/// Derived quantities at candidate energy E: E = 8 alpha^3, Z - E = 8 beta^3,
/// t = beta/alpha, R = (1 - t + t^2)^(-1/2).
struct Params {
  double E = 0;
  double alpha = 0;
  double beta = 0;
  double t = 0;
  double R = 0;
};

/// Wave-function constants fixed by the p = +1 matching with g = 1:
/// D = d e^{2a}, F = f e^{-a}, interior phase theta, common sign epsilon,
/// left amplitude/phase (c, eta) from the p = -1 continuity of psi and psi'.
struct Coeffs {
  double g = 1.0;
  double D = 0;
  double F = 0;
  double theta = 0;
  int epsilon = 1;
  double c = 0;
  double eta = 0;
};

struct RootRec {
  double alpha = 0;
  double E = 0;
  double residual = 0;
};

/// Diagnostic for the narrowest interior extremum met during a scan.
struct Peak {
  double alpha = 0;
  double value = 0;
  int digits = 0;
  bool resolved = true;
};

struct Spectrum {
  double Z = 0;
  std::vector<RootRec> roots;
  std::optional<Peak> peak;
  int digits_used = 0;
};

enum class EventKind { doublet_birth, doublet_loss, threshold_entry };

struct Event {
  EventKind kind = EventKind::threshold_entry;
  double alpha = 0;
  double E = 0;
};

struct SweepRecord {
  double Z = 0;
  int n_levels = 0;
  int delta = 0;
  std::vector<Event> events;
  std::vector<double> root_alphas;
};

struct DoubletBirth {
  double Z_star = 0;
  double alpha_star = 0;
  double E_star = 0;
};

enum class Region { left, middle, right };

namespace core {

template <class T>
struct ParamsT {
  T E, alpha, beta, t, R;
};

template <class T>
ParamsT<T> params_t(const T& E, const T& Z) {
  using std::cbrt;
  using std::sqrt;
  if (!(E > 0 && E < Z)) throw DomainError("params: E outside (0, Z)");
  ParamsT<T> out{E, cbrt(E / 8), cbrt((Z - E) / 8), T(0), T(0)};
  out.t = out.beta / out.alpha;
  out.R = 1 / sqrt(1 - out.t + out.t * out.t);
  return out;
}

/// Eq.-style secular function, LHS - RHS:
///   (1-4t+t^2) cos(2 sqrt3 a) + sqrt3 (1-t^2) sin(2 sqrt3 a)
///     - ((1-t+t^2)/(1+t))^2 e^{-6a}.
template <class T>
T secular_from_params_t(const ParamsT<T>& par) {
  using std::cos;
  using std::exp;
  using std::sin;
  using std::sqrt;
  const T s3 = sqrt(T(3));
  const T& t = par.t;
  const T phi = 2 * s3 * par.alpha;
  T lhs = (1 - 4 * t + t * t) * cos(phi) + s3 * (1 - t * t) * sin(phi);
  T ratio = (1 - t + t * t) / (1 + t);
  return lhs - ratio * ratio * exp(-6 * par.alpha);
}

template <class T>
T secular_value_t(const T& E, const T& Z) {
  return secular_from_params_t(params_t(E, Z));
}

template <class T>
T secular_alpha_t(const T& alpha, const T& Z) {
  return secular_value_t(8 * alpha * alpha * alpha, Z);
}

/// Magnitude of the terms entering the secular value; |f| below
/// ~10^{-digits} of this is indistinguishable from zero.
template <class T>
T secular_scale_t(const ParamsT<T>& par) {
  using std::abs;
  using std::exp;
  using std::sqrt;
  const T s3 = sqrt(T(3));
  const T& t = par.t;
  T ratio = (1 - t + t * t) / (1 + t);
  return abs(1 - 4 * t + t * t) + s3 * abs(1 - t * t) + ratio * ratio * exp(-6 * par.alpha) + 1;
}

}  // namespace core

Params params(double E, double Z);
double secular_value(double E, double Z);
double threshold_alpha(double Z);
Coeffs coefficients(double E, double Z);
std::array<double, 6> matching_residuals(double E, double Z, const Coeffs& coeffs);
double psi(double p, const Params& par, const Coeffs& coeffs);
Spectrum find_spectrum(double Z, const num::PrecisionPolicy& policy = {});
int count_levels(double Z, const num::PrecisionPolicy& policy = {});
std::vector<SweepRecord> sweep(const std::vector<double>& Z_values,
                               const num::PrecisionPolicy& policy = {});
DoubletBirth locate_doublet_birth(double Z_lo, double Z_hi,
                                  const num::PrecisionPolicy& policy = {});
std::vector<double> nodal_zeros(const Params& par, const Coeffs& coeffs, Region region, int limit,
                                const num::PrecisionPolicy& policy = {});

/// digits demanded by the e^{-6 alpha_max} term staying above roundoff.
int adaptive_digits_floor(double Z);

std::string to_string(EventKind kind);

}  // namespace ptsqw::pwell
