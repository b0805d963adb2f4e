#pragma once

#include <array>
#include <complex>

#include "ptsqw/cplx.hpp"
#include "ptsqw/errors.hpp"

namespace ptsqw::oracle {

/// One sample of a matching determinant, as emitted by the CLI.
struct DetSample {
  double parameter = 0;
  double det_value = 0;
  int digits = 0;
};

namespace core {

/// Coordinate-model connection determinant: the x -> -inf decaying branch
/// exp(conj(sigma) x) propagated analytically across (-pi, pi) and matched
/// onto exp(-sigma x); scaled by the two column norms. Zero iff bound state.
/// Built directly from the regional solutions, independent of the secular
/// equation code paths.
template <class T>
Cplx<T> x_matching_det_t(const T& E, const T& well_T) {
  using std::cos;
  using std::sin;
  using std::sqrt;
  if (!(E > 0)) throw DomainError("x_matching_det: E must be > 0");
  const T pi = scalar_pi<T>();
  const T k = sqrt(E);
  const T hyp = sqrt(E * E + well_T * well_T * well_T * well_T);
  const T q = sqrt((E + hyp) / 2);
  const T p = well_T * well_T / (2 * q);
  const Cplx<T> sigma(p, q);
  const Cplx<T> sigma_bar(p, -q);

  // value and slope of the left branch at x = -pi
  const Cplx<T> vL = exp(sigma_bar * Cplx<T>(-pi));
  const Cplx<T> dL = sigma_bar * vL;

  const T ckp = cos(k * pi), skp = sin(k * pi);
  // interior A cos(kx) + B sin(kx) fitted at x = -pi
  const Cplx<T> A = vL * ckp + dL * (skp / k);
  const Cplx<T> B = dL * (ckp / k) - vL * skp;
  const Cplx<T> psi = A * ckp + B * skp;
  const Cplx<T> dpsi = (B * ckp - A * skp) * k;

  const Cplx<T> vR = exp(sigma * Cplx<T>(-pi));
  const Cplx<T> dR = -(sigma * vR);

  Cplx<T> det = psi * dR - dpsi * vR;
  const T n1 = sqrt(abs(psi) * abs(psi) + abs(dpsi) * abs(dpsi));
  const T n2 = sqrt(abs(vR) * abs(vR) + abs(dR) * abs(dR));
  return det / (n1 * n2);
}

/// 6x6 determinant over T with partial pivoting; columns pre-normalized.
template <class T>
T det6(std::array<std::array<T, 6>, 6>& m) {
  using std::abs;
  T det(1);
  for (int col = 0; col < 6; ++col) {
    int piv = col;
    for (int r = col + 1; r < 6; ++r)
      if (abs(m[r][col]) > abs(m[piv][col])) piv = r;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    if (m[col][col] == 0) return T(0);
    det = det * m[col][col];
    for (int r = col + 1; r < 6; ++r) {
      T factor = m[r][col] / m[col][col];
      for (int c = col; c < 6; ++c) m[r][c] = m[r][c] - factor * m[col][c];
    }
  }
  return det;
}

template <class T>
struct Tr {
  T v, d1, d2;
};

// Regional basis triples (value, psi', psi'') for the momentum model.
template <class T>
Tr<T> exp_triple(const T& r, const T& p, const T& p0) {
  using std::exp;
  T e = exp(r * (p - p0));
  return {e, r * e, r * r * e};
}

template <class T>
Tr<T> osc_triple(const T& rre, const T& rim, const T& p, const T& p0, bool sine) {
  using std::cos;
  using std::exp;
  using std::sin;
  T e = exp(rre * (p - p0));
  T c = cos(rim * (p - p0));
  T s = sin(rim * (p - p0));
  if (!sine)
    return {e * c, e * (rre * c - rim * s),
            e * ((rre * rre - rim * rim) * c - 2 * rre * rim * s)};
  return {e * s, e * (rre * s + rim * c), e * ((rre * rre - rim * rim) * s + 2 * rre * rim * c)};
}

/// Momentum-model matching determinant: continuity of psi, psi', psi'' at
/// p = +-1 over the six admissible regional solutions (one decaying on the
/// right, three interior, two decaying on the left), scaled by column norms.
template <class T>
T p_matching_det_t(const T& E, const T& Z) {
  using std::cbrt;
  using std::sqrt;
  if (!(E > 0 && E < Z)) throw DomainError("p_matching_det: E outside (0, Z)");
  const T a = cbrt(E / 8);
  const T b = cbrt((Z - E) / 8);
  const T s3 = sqrt(T(3));

  auto col_at = [](const Tr<T>& t) { return std::array<T, 3>{t.v, t.d1, t.d2}; };

  // columns: right decay | interior (exp, cos, sin) | left (cos, sin)
  std::array<std::array<T, 6>, 6> m{};
  auto put = [&](int col, int row0, const std::array<T, 3>& vals, int sign) {
    for (int i = 0; i < 3; ++i) m[row0 + i][col] = T(sign) * vals[i];
  };

  const T one(1), mone(-1);
  put(0, 0, col_at(exp_triple(-2 * b, one, one)), -1);
  put(1, 0, col_at(exp_triple(2 * a, one, T(0))), 1);
  put(2, 0, col_at(osc_triple(-a, s3 * a, one, T(0), false)), 1);
  put(3, 0, col_at(osc_triple(-a, s3 * a, one, T(0), true)), 1);
  put(1, 3, col_at(exp_triple(2 * a, mone, T(0))), 1);
  put(2, 3, col_at(osc_triple(-a, s3 * a, mone, T(0), false)), 1);
  put(3, 3, col_at(osc_triple(-a, s3 * a, mone, T(0), true)), 1);
  put(4, 3, col_at(osc_triple(b, s3 * b, mone, mone, false)), -1);
  put(5, 3, col_at(osc_triple(b, s3 * b, mone, mone, true)), -1);

  for (int c = 0; c < 6; ++c) {
    using std::sqrt;
    T nrm(0);
    for (int r = 0; r < 6; ++r) nrm = nrm + m[r][c] * m[r][c];
    nrm = sqrt(nrm);
    if (nrm > 0)
      for (int r = 0; r < 6; ++r) m[r][c] = m[r][c] / nrm;
  }
  return det6(m);
}

}  // namespace core

std::complex<double> x_matching_det(double E, double T);
double p_matching_det(double E, double Z);
double left_contamination_probe(double E, double Z, double p_probe);

}  // namespace ptsqw::oracle
