#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "ptsqw/bigfloat.hpp"
#include "ptsqw/errors.hpp"

namespace ptsqw::num {

/// Working-precision contract governing every root/extremum search.
/// digits <= 16 runs in native double; larger values switch the evaluation
/// to MPFR at that many decimal digits. max_digits > digits enables adaptive
/// escalation (see pwell::find_spectrum); max_digits == digits pins the
/// arithmetic, which is how the fixed-precision baseline is expressed.
struct PrecisionPolicy {
  int digits = 16;
  int scan_points = 512;
  double root_tol = 1e-12;
  double residual_tol = 1e-10;
  int max_digits = 120;

  bool adaptive() const { return max_digits > digits; }

  void validate() const {
    if (digits < 15) throw DomainError("PrecisionPolicy: digits must be >= 15");
    if (scan_points < 64) throw DomainError("PrecisionPolicy: scan_points must be >= 64");
    if (!(root_tol > 0)) throw DomainError("PrecisionPolicy: root_tol must be > 0");
    if (!(residual_tol > 0)) throw DomainError("PrecisionPolicy: residual_tol must be > 0");
    if (max_digits < digits) throw DomainError("PrecisionPolicy: max_digits must be >= digits");
  }
};

struct Bracket {
  double lo = 0;
  double hi = 0;
  double f_lo = 0;
  double f_hi = 0;
};

struct Root {
  double x = 0;
  double f_at_x = 0;
  double width = 0;
  int refinements = 0;
};

template <class T>
struct BracketT {
  T lo, hi, f_lo, f_hi;
};

namespace detail {

template <class T>
int sign_of(const T& x) {
  if (x > 0) return 1;
  if (x < 0) return -1;
  return 0;
}

inline int grid_size(double lo, double hi, int scan_points) {
  double span = hi - lo;
  int n = static_cast<int>(std::ceil(scan_points * span)) + 1;
  return std::max(n, 65);
}

}  // namespace detail

/// Bracket-halving to width <= root_tol and |f| <= residual_tol.
template <class T, class F>
Root bisect_t(F&& f, BracketT<T> b, const PrecisionPolicy& policy) {
  using std::abs;
  using std::isfinite;
  policy.validate();
  if (!(b.lo < b.hi) || !isfinite(b.f_lo) || !isfinite(b.f_hi))
    throw InvalidBracket("bisect: endpoints not ordered or not finite");
  int slo = detail::sign_of(b.f_lo), shi = detail::sign_of(b.f_hi);
  if (slo * shi >= 0) throw InvalidBracket("bisect: no sign change across bracket");

  const T tol(policy.root_tol);
  const T rtol(policy.residual_tol);
  T lo = b.lo, hi = b.hi, flo = b.f_lo;
  T m = (lo + hi) / 2, fm = f(m);
  int iters = 0;
  const int max_iters = 64 + 10 * policy.max_digits;
  while (true) {
    if (!isfinite(fm)) throw NonFiniteEvaluation("bisect: f not finite inside bracket");
    if (fm == 0) return Root{to_double(m), 0.0, 0.0, iters};  // exact hit
    if (hi - lo <= tol && abs(fm) <= rtol) break;
    if (detail::sign_of(flo) * detail::sign_of(fm) < 0) {
      hi = m;
    } else {
      lo = m;
      flo = fm;
    }
    T mid = (lo + hi) / 2;
    if (!(mid > lo && mid < hi)) {
      // interval collapsed to adjacent representables
      if (abs(fm) <= rtol) break;
      throw ConvergenceFailure("bisect: interval exhausted with |f| above residual_tol");
    }
    m = mid;
    fm = f(m);
    if (++iters > max_iters)
      throw ConvergenceFailure("bisect: iteration limit reached");
  }
  return Root{to_double(m), to_double(fm), to_double(hi - lo), iters};
}

/// Uniform-grid sign-change detection on (lo, hi). The interval is shrunk by
/// 1e-8*(hi-lo) at both ends so one-sided limits stand in for singular
/// endpoints; exact grid zeros are swallowed into the surrounding bracket.
template <class T, class F>
std::vector<BracketT<T>> scan_t(F&& f, T lo, T hi, const PrecisionPolicy& policy) {
  using std::isfinite;
  policy.validate();
  if (!(lo < hi)) throw EmptyInterval("scan_sign_changes: hi <= lo");
  const T edge = (hi - lo) * T(1e-8);
  const T a = lo + edge, b = hi - edge;
  const int n = detail::grid_size(to_double(lo), to_double(hi), policy.scan_points);

  std::vector<BracketT<T>> out;
  T last_x = a;
  T last_f = f(a);
  if (!isfinite(last_f)) throw NonFiniteEvaluation("scan_sign_changes: f not finite at grid point");
  int last_sign = detail::sign_of(last_f);
  for (int i = 1; i < n; ++i) {
    T x = a + (b - a) * T(i) / T(n - 1);
    T fx = f(x);
    if (!isfinite(fx)) throw NonFiniteEvaluation("scan_sign_changes: f not finite at grid point");
    int s = detail::sign_of(fx);
    if (s != 0) {
      if (last_sign != 0 && s != last_sign) out.push_back(BracketT<T>{last_x, x, last_f, fx});
      last_x = x;
      last_f = fx;
      last_sign = s;
    }
  }
  return out;
}

/// Golden-section refinement of the single interior extremum of f on
/// (lo, hi). orientation: +1 locate a maximum, -1 a minimum, 0 decide from a
/// coarse presample (raising NoInteriorExtremum when the presample is
/// monotone).
template <class T, class F>
std::pair<T, T> refine_extremum_t(F&& f, T lo, T hi, const PrecisionPolicy& policy,
                                  int orientation = 0) {
  using std::isfinite;
  policy.validate();
  if (!(lo < hi)) throw EmptyInterval("refine_extremum: hi <= lo");
  const T edge = (hi - lo) * T(1e-8);
  const T a0 = lo + edge, b0 = hi - edge;

  const int m = 33;
  std::vector<T> xs(m), fs(m);
  int imax = 0, imin = 0;
  for (int i = 0; i < m; ++i) {
    xs[i] = a0 + (b0 - a0) * T(i) / T(m - 1);
    fs[i] = f(xs[i]);
    if (!isfinite(fs[i])) throw NonFiniteEvaluation("refine_extremum: f not finite");
    if (fs[i] > fs[imax]) imax = i;
    if (fs[i] < fs[imin]) imin = i;
  }
  if (orientation == 0) {
    if (imax > 0 && imax < m - 1)
      orientation = 1;
    else if (imin > 0 && imin < m - 1)
      orientation = -1;
    else
      throw NoInteriorExtremum("refine_extremum: sampled f is monotone on the interval");
  }
  int ic = orientation > 0 ? imax : imin;
  if (ic == 0) ic = 1;
  if (ic == m - 1) ic = m - 2;
  T a = xs[ic - 1], b = xs[ic + 1];

  const T gr = (sqrt(T(5)) - 1) / 2;
  const T tol(policy.root_tol);
  T c = b - gr * (b - a), d = a + gr * (b - a);
  T fc = f(c), fd = f(d);
  const int max_iters = 64 + 10 * policy.max_digits;
  int iters = 0;
  while (b - a > tol && iters++ < max_iters) {
    bool pick_left = orientation > 0 ? (fc > fd) : (fc < fd);
    if (pick_left) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = f(d);
    }
    if (!(a < c && c < d && d < b)) break;  // exhausted representables
  }
  T x = (a + b) / 2;
  return {x, f(x)};
}

/// double-facing entry points

inline Root bisect(const std::function<double(double)>& f, const Bracket& b,
                   const PrecisionPolicy& policy) {
  return bisect_t<double>(f, BracketT<double>{b.lo, b.hi, b.f_lo, b.f_hi}, policy);
}

inline std::vector<Bracket> scan_sign_changes(const std::function<double(double)>& f, double lo,
                                              double hi, const PrecisionPolicy& policy) {
  auto raw = scan_t<double>(f, lo, hi, policy);
  std::vector<Bracket> out;
  out.reserve(raw.size());
  for (const auto& r : raw) out.push_back(Bracket{r.lo, r.hi, r.f_lo, r.f_hi});
  return out;
}

inline std::pair<double, double> refine_extremum(const std::function<double(double)>& f, double lo,
                                                 double hi, const PrecisionPolicy& policy) {
  return refine_extremum_t<double>(f, lo, hi, policy);
}

}  // namespace ptsqw::num
