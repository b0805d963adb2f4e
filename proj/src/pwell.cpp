#include "ptsqw/pwell.hpp"

#include <algorithm>
#include <cmath>

namespace ptsqw::pwell {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
const double kSqrt3 = std::sqrt(3.0);

double norm_angle(double x) {
  double y = std::remainder(x, 2.0 * kPi);
  if (y <= -kPi) y += 2.0 * kPi;
  return y;
}

struct Triple {
  double v, d1, d2;
};

Triple psi0_triple(double p, double alpha, double D, double F, double theta) {
  const double at = kSqrt3 * alpha;
  const double e2 = D * std::exp(2.0 * alpha * (p - 1.0));
  const double ef = F * std::exp(-alpha * (p - 1.0));
  const double c = std::cos(at * p + theta);
  const double s = std::sin(at * p + theta);
  return {e2 + ef * c,
          2.0 * alpha * e2 + ef * (-alpha * c - at * s),
          4.0 * alpha * alpha * e2 + ef * (-2.0 * alpha * alpha * c + 2.0 * kSqrt3 * alpha * alpha * s)};
}

Triple psi_plus_triple(double p, double beta, double g) {
  const double e = g * std::exp(-2.0 * beta * p);
  return {e, -2.0 * beta * e, 4.0 * beta * beta * e};
}

Triple psi_minus_triple(double p, double beta, double c_amp, double eta) {
  const double bt = kSqrt3 * beta;
  const double e = c_amp * std::exp(beta * p);
  const double c = std::cos(bt * p + eta);
  const double s = std::sin(bt * p + eta);
  return {e * c, e * (beta * c - bt * s),
          e * (-2.0 * beta * beta * c - 2.0 * kSqrt3 * beta * beta * s)};
}

// One full grid scan + bracket refinement + dip hunting at a fixed digit count.
struct ScanOutcome {
  std::vector<std::pair<double, double>> roots;  // (alpha, f at root)
  std::optional<Peak> peak;
  bool unresolved = false;
};

template <class T>
ScanOutcome scan_once(double Z, const num::PrecisionPolicy& policy, int digits) {
  using std::abs;
  using std::cbrt;
  using std::isfinite;
  const T z(Z);
  const T amax = cbrt(z / 8);
  const T edge = amax * T(1e-8);
  const T lo = edge, hi = amax - edge;
  const int n = std::max(65, static_cast<int>(std::ceil(policy.scan_points * to_double(amax))) + 1);

  auto f = [&](const T& a) { return core::secular_alpha_t(a, z); };

  std::vector<T> xs(n), fs(n);
  std::vector<int> sg(n);
  for (int i = 0; i < n; ++i) {
    xs[i] = lo + (hi - lo) * T(i) / T(n - 1);
    fs[i] = f(xs[i]);
    if (!isfinite(fs[i]))
      throw NonFiniteEvaluation("find_spectrum: secular value not finite on scan grid");
    sg[i] = num::detail::sign_of(fs[i]);
  }

  ScanOutcome out;
  std::vector<int> change_at;  // sign change between i and i+1
  {
    int last_sign = sg[0];
    int last_idx = 0;
    for (int i = 1; i < n; ++i) {
      if (sg[i] == 0) continue;
      if (last_sign != 0 && sg[i] != last_sign) {
        num::BracketT<T> b{xs[last_idx], xs[i], fs[last_idx], fs[i]};
        num::Root r = num::bisect_t<T>(f, b, policy);
        out.roots.emplace_back(r.x, r.f_at_x);
        change_at.push_back(last_idx);
      }
      last_sign = sg[i];
      last_idx = i;
    }
  }

  // Same-sign runs between crossings: hunt for interior |f| dips, which are
  // either an unresolved root pair or a near-tangent extremum.
  std::vector<int> bounds;
  bounds.push_back(0);
  for (int i : change_at) bounds.push_back(i + 1);
  bounds.push_back(n);
  double best_rel = 1e300;
  for (size_t k = 0; k + 1 < bounds.size(); ++k) {
    const int i0 = bounds[k], i1 = bounds[k + 1] - 1;
    if (i1 - i0 + 1 < 9) continue;
    const bool after_bracket = (k > 0);
    const bool before_bracket = (k + 1 < bounds.size() - 1);
    const int ilo = i0 + (after_bracket ? 3 : 0);
    const int ihi = i1 - (before_bracket ? 3 : 0);
    if (ihi - ilo < 3) continue;

    std::vector<double> mags;
    mags.reserve(i1 - i0 + 1);
    for (int i = i0; i <= i1; ++i) mags.push_back(std::abs(to_double(fs[i])));
    std::nth_element(mags.begin(), mags.begin() + mags.size() / 2, mags.end());
    const double med = mags[mags.size() / 2];

    int j = ilo;
    for (int i = ilo + 1; i <= ihi; ++i)
      if (abs(fs[i]) < abs(fs[j])) j = i;
    const double fj = std::abs(to_double(fs[j]));
    if (!(fj < 1e-3 * med)) continue;

    int run_sign = 0;
    for (int i = i0; i <= i1 && run_sign == 0; ++i) run_sign = sg[i];
    if (run_sign == 0) continue;

    const int jlo = std::max(i0, j - 2), jhi = std::min(i1, j + 2);
    auto [xe, fe] =
        num::refine_extremum_t<T>(f, xs[jlo], xs[jhi], policy, run_sign < 0 ? +1 : -1);
    const double fe_d = to_double(fe);
    const double xe_d = to_double(xe);

    if (num::detail::sign_of(fe) == -run_sign && fe_d != 0.0) {
      // the extremum pokes through zero: a root pair hides in this dip
      num::Root r1 = num::bisect_t<T>(f, num::BracketT<T>{xs[jlo], xe, fs[jlo], fe}, policy);
      num::Root r2 = num::bisect_t<T>(f, num::BracketT<T>{xe, xs[jhi], fe, fs[jhi]}, policy);
      out.roots.emplace_back(r1.x, r1.f_at_x);
      out.roots.emplace_back(r2.x, r2.f_at_x);
      continue;
    }

    auto par = core::params_t(8 * xe * xe * xe, z);
    const double scale = to_double(core::secular_scale_t(par));
    const double noise_floor = 100.0 * scale * std::pow(10.0, -digits);
    const bool resolved = std::abs(fe_d) >= noise_floor;
    const double rel = std::abs(fe_d) / scale;
    if (rel < best_rel) {
      best_rel = rel;
      out.peak = Peak{xe_d, fe_d, digits, resolved};
    }
    if (!resolved) out.unresolved = true;
  }

  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

template <class T>
Spectrum run_scan(double Z, const num::PrecisionPolicy& policy, int digits, bool& unresolved) {
  auto oc = scan_once<T>(Z, policy, digits);
  unresolved = oc.unresolved;
  Spectrum spec;
  spec.Z = Z;
  spec.digits_used = digits;
  spec.peak = oc.peak;
  for (auto& [a, r] : oc.roots) spec.roots.push_back(RootRec{a, 8.0 * a * a * a, r});
  return spec;
}

}  // namespace

int adaptive_digits_floor(double Z) {
  const double amax = std::cbrt(Z / 8.0);
  return static_cast<int>(std::ceil(6.0 * amax * 0.43429448190325176)) + 10;
}

Params params(double E, double Z) {
  auto p = core::params_t<double>(E, Z);
  return Params{p.E, p.alpha, p.beta, p.t, p.R};
}

double secular_value(double E, double Z) { return core::secular_value_t<double>(E, Z); }

double threshold_alpha(double Z) {
  if (!(Z > 0)) throw DomainError("threshold_alpha: Z must be > 0");
  return std::cbrt(Z / 8.0);
}

Coeffs coefficients(double E, double Z) {
  auto par = core::params_t<double>(E, Z);
  const double t = par.t, R = par.R, alpha = par.alpha, beta = par.beta;
  const double at = kSqrt3 * alpha;
  const double bt = kSqrt3 * beta;

  Coeffs cf;
  cf.g = 1.0;
  const double G = std::exp(-2.0 * beta);
  cf.D = G * (1.0 - t + t * t) / 3.0;

  // two-argument arctangent keeps the t = 2 pole of tan(at+theta) regular
  const double phase = std::atan2(kSqrt3 * t, 2.0 - t);
  cf.theta = norm_angle(phase - at);

  const double cpt = std::cos(at + cf.theta);
  const double ref_c = (1.0 - t / 2.0) * R;
  if (std::abs(ref_c) > 1e-8) {
    cf.epsilon = (cpt / ref_c > 0) ? 1 : -1;
  } else {
    const double spt = std::sin(at + cf.theta);
    cf.epsilon = (spt / (kSqrt3 * t * R / 2.0) > 0) ? 1 : -1;
  }
  cf.F = 2.0 * (t + 1.0) * G / (3.0 * cf.epsilon * R);

  // left amplitude and phase from psi, psi' continuity at p = -1
  Triple in = psi0_triple(-1.0, alpha, cf.D, cf.F, cf.theta);
  const double u = in.v;
  const double v = (beta * in.v - in.d1) / (kSqrt3 * beta);
  cf.c = std::exp(beta) * std::hypot(u, v);
  cf.eta = norm_angle(std::atan2(v, u) + bt);
  return cf;
}

std::array<double, 6> matching_residuals(double E, double Z, const Coeffs& cf) {
  auto par = core::params_t<double>(E, Z);
  std::array<double, 6> out{};
  Triple in1 = psi0_triple(1.0, par.alpha, cf.D, cf.F, cf.theta);
  Triple r1 = psi_plus_triple(1.0, par.beta, cf.g);
  out[0] = in1.v - r1.v;
  out[1] = in1.d1 - r1.d1;
  out[2] = in1.d2 - r1.d2;
  Triple inm = psi0_triple(-1.0, par.alpha, cf.D, cf.F, cf.theta);
  Triple lm = psi_minus_triple(-1.0, par.beta, cf.c, cf.eta);
  out[3] = inm.v - lm.v;
  out[4] = inm.d1 - lm.d1;
  out[5] = inm.d2 - lm.d2;
  return out;
}

double psi(double p, const Params& par, const Coeffs& cf) {
  if (p > 1.0) return cf.g * std::exp(-2.0 * par.beta * p);
  if (p < -1.0) return cf.c * std::exp(par.beta * p) * std::cos(kSqrt3 * par.beta * p + cf.eta);
  return psi0_triple(p, par.alpha, cf.D, cf.F, cf.theta).v;
}

Spectrum find_spectrum(double Z, const num::PrecisionPolicy& policy) {
  if (!(Z > 0)) throw DomainError("find_spectrum: Z must be > 0");
  policy.validate();
  int d = policy.digits;
  if (policy.adaptive()) d = std::max(d, adaptive_digits_floor(Z));
  d = std::min(d, policy.max_digits);

  for (;;) {
    bool unresolved = false;
    Spectrum spec;
    if (d <= 16) {
      spec = run_scan<double>(Z, policy, d, unresolved);
    } else {
      BigFloat::ScopedDigits guard(d);
      spec = run_scan<BigFloat>(Z, policy, d, unresolved);
    }
    if (!unresolved || !policy.adaptive()) return spec;
    if (d >= policy.max_digits)
      throw PrecisionExhausted("find_spectrum: extremum unresolved at the " +
                               std::to_string(policy.max_digits) + "-digit ceiling (Z=" +
                               std::to_string(Z) + ")");
    d = std::min(2 * d, policy.max_digits);
  }
}

int count_levels(double Z, const num::PrecisionPolicy& policy) {
  return static_cast<int>(find_spectrum(Z, policy).roots.size());
}

std::vector<SweepRecord> sweep(const std::vector<double>& Z_values,
                               const num::PrecisionPolicy& policy) {
  for (size_t i = 0; i + 1 < Z_values.size(); ++i)
    if (!(Z_values[i] < Z_values[i + 1]))
      throw DomainError("sweep: Z values must be strictly increasing");

  std::vector<SweepRecord> out;
  out.reserve(Z_values.size());
  std::vector<double> prev_alphas;
  for (size_t iz = 0; iz < Z_values.size(); ++iz) {
    const double Z = Z_values[iz];
    Spectrum spec = find_spectrum(Z, policy);
    SweepRecord rec;
    rec.Z = Z;
    rec.n_levels = static_cast<int>(spec.roots.size());
    rec.delta = iz == 0 ? 0 : rec.n_levels - static_cast<int>(prev_alphas.size());
    for (const auto& r : spec.roots) rec.root_alphas.push_back(r.alpha);

    if (rec.delta != 0 && iz > 0) {
      // roots with no close companion in the previous record
      std::vector<double> fresh;
      for (double a : rec.root_alphas) {
        double nearest = 1e300;
        for (double b : prev_alphas) nearest = std::min(nearest, std::abs(a - b));
        if (nearest > 0.02 * threshold_alpha(Z)) fresh.push_back(a);
      }
      if (rec.delta >= 2 && fresh.size() >= 2) {
        double a0 = fresh[0], a1 = fresh[1], gap = std::abs(a1 - a0);
        for (size_t i = 0; i + 1 < fresh.size(); ++i)
          if (std::abs(fresh[i + 1] - fresh[i]) < gap) {
            a0 = fresh[i];
            a1 = fresh[i + 1];
            gap = a1 - a0;
          }
        const double mid = 0.5 * (a0 + a1);
        rec.events.push_back(Event{EventKind::doublet_birth, mid, 8 * mid * mid * mid});
      } else if (rec.delta == 1 && !fresh.empty()) {
        const double a = fresh.back();
        if (threshold_alpha(Z) - a < 0.2 * threshold_alpha(Z))
          rec.events.push_back(Event{EventKind::threshold_entry, a, 8 * a * a * a});
      } else if (rec.delta <= -2) {
        // the vanished pair, located in the previous record
        std::vector<double> gone;
        for (double b : prev_alphas) {
          double nearest = 1e300;
          for (double a : rec.root_alphas) nearest = std::min(nearest, std::abs(a - b));
          if (nearest > 0.02 * threshold_alpha(Z)) gone.push_back(b);
        }
        const double mid = gone.empty() ? 0.0
                                        : gone.size() == 1 ? gone[0]
                                                           : 0.5 * (gone[0] + gone[1]);
        rec.events.push_back(Event{EventKind::doublet_loss, mid, 8 * mid * mid * mid});
      }
    }
    prev_alphas = rec.root_alphas;
    out.push_back(std::move(rec));
  }
  return out;
}

DoubletBirth locate_doublet_birth(double Z_lo, double Z_hi, const num::PrecisionPolicy& policy) {
  if (!(0 < Z_lo && Z_lo < Z_hi)) throw DomainError("locate_doublet_birth: need 0 < Z_lo < Z_hi");
  const int n_lo = count_levels(Z_lo, policy);
  const int n_hi = count_levels(Z_hi, policy);
  if (n_hi != n_lo + 2)
    throw NoBirthInInterval("locate_doublet_birth: level count goes " + std::to_string(n_lo) +
                            " -> " + std::to_string(n_hi) + " over (" + std::to_string(Z_lo) +
                            ", " + std::to_string(Z_hi) + "), not +2");

  double lo = Z_lo, hi = Z_hi;
  const double tol = 1e-6 * std::max(1.0, Z_hi);
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (count_levels(mid, policy) < n_lo + 2)
      lo = mid;
    else
      hi = mid;
  }

  Spectrum born = find_spectrum(hi, policy);
  double a0 = born.roots[0].alpha, a1 = born.roots.size() > 1 ? born.roots[1].alpha : a0;
  double gap = std::abs(a1 - a0);
  for (size_t i = 0; i + 1 < born.roots.size(); ++i) {
    const double g = born.roots[i + 1].alpha - born.roots[i].alpha;
    if (g < gap) {
      gap = g;
      a0 = born.roots[i].alpha;
      a1 = born.roots[i + 1].alpha;
    }
  }
  const double alpha_star = 0.5 * (a0 + a1);
  return DoubletBirth{0.5 * (lo + hi), alpha_star, 8 * alpha_star * alpha_star * alpha_star};
}

std::vector<double> nodal_zeros(const Params& par, const Coeffs& cf, Region region, int limit,
                                const num::PrecisionPolicy& policy) {
  if (limit < 1) throw DomainError("nodal_zeros: limit must be >= 1");
  const double Z = par.E + 8.0 * par.beta * par.beta * par.beta;
  const double res = secular_value(par.E, Z);
  if (std::abs(res) > policy.residual_tol)
    throw NotAnEigenvalue("nodal_zeros: secular residual " + std::to_string(res) +
                          " exceeds residual_tol");

  std::vector<double> out;
  if (region == Region::right) return out;

  if (region == Region::left) {
    const double bt = kSqrt3 * par.beta;
    // zeros of cos(bt*p + eta): p_k = (pi/2 + k*pi - eta)/bt, walking down from p = -1
    const int k_max = static_cast<int>(std::floor((-bt - kPi / 2 + cf.eta) / kPi));
    for (int k = k_max; static_cast<int>(out.size()) < limit; --k)
      out.push_back((kPi / 2 + k * kPi - cf.eta) / bt);
    return out;
  }

  auto f = [&](double p) { return psi(p, par, cf); };
  auto brackets = num::scan_sign_changes(f, -1.0, 1.0, policy);
  for (const auto& b : brackets) out.push_back(num::bisect(f, b, policy).x);
  return out;
}

std::string to_string(EventKind kind) {
  switch (kind) {
    case EventKind::doublet_birth: return "doublet_birth";
    case EventKind::doublet_loss: return "doublet_loss";
    case EventKind::threshold_entry: return "threshold_entry";
  }
  return "unknown";
}

}  // namespace ptsqw::pwell
