#include "ptsqw/oracle.hpp"

#include <cmath>

namespace ptsqw::oracle {

namespace {

// Solve the 3x3 system M x = rhs by elimination with partial pivoting.
std::array<double, 3> solve3(std::array<std::array<double, 3>, 3> m, std::array<double, 3> rhs) {
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    for (int r = col + 1; r < 3; ++r) {
      const double f = m[r][col] / m[col][col];
      for (int c = col; c < 3; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::array<double, 3> x{};
  for (int r = 2; r >= 0; --r) {
    double s = rhs[r];
    for (int c = r + 1; c < 3; ++c) s -= m[r][c] * x[c];
    x[r] = s / m[r][r];
  }
  return x;
}

}  // namespace

std::complex<double> x_matching_det(double E, double T) {
  return core::x_matching_det_t<double>(E, T).to_std();
}

double p_matching_det(double E, double Z) { return core::p_matching_det_t<double>(E, Z); }

double left_contamination_probe(double E, double Z, double p_probe) {
  if (!(p_probe < -1.0)) throw DomainError("left_contamination_probe: p_probe must be < -1");
  if (!(E > 0 && E < Z)) throw DomainError("left_contamination_probe: E outside (0, Z)");
  const double a = std::cbrt(E / 8.0);
  const double b = std::cbrt((Z - E) / 8.0);
  const double s3 = std::sqrt(3.0);

  using core::exp_triple;
  using core::osc_triple;
  using core::Tr;

  // start on the physical right branch, exp(-2b(p-1)), at p = 1
  std::array<double, 3> state{1.0, -2.0 * b, 4.0 * b * b};

  // express it in the interior basis anchored at p = 1
  Tr<double> j1 = exp_triple(2.0 * a, 1.0, 1.0);
  Tr<double> j2 = osc_triple(-a, s3 * a, 1.0, 1.0, false);
  Tr<double> j3 = osc_triple(-a, s3 * a, 1.0, 1.0, true);
  auto coef = solve3({{{j1.v, j2.v, j3.v}, {j1.d1, j2.d1, j3.d1}, {j1.d2, j2.d2, j3.d2}}}, state);

  // propagate to p = -1
  j1 = exp_triple(2.0 * a, -1.0, 1.0);
  j2 = osc_triple(-a, s3 * a, -1.0, 1.0, false);
  j3 = osc_triple(-a, s3 * a, -1.0, 1.0, true);
  std::array<double, 3> left{};
  for (int i = 0; i < 3; ++i) {
    const double v1 = (i == 0 ? j1.v : i == 1 ? j1.d1 : j1.d2);
    const double v2 = (i == 0 ? j2.v : i == 1 ? j2.d1 : j2.d2);
    const double v3 = (i == 0 ? j3.v : i == 1 ? j3.d1 : j3.d2);
    left[i] = coef[0] * v1 + coef[1] * v2 + coef[2] * v3;
  }

  // decompose over the left basis anchored at p = -1; the exp(-2b p) column
  // is the unphysical growing component
  Tr<double> g = exp_triple(-2.0 * b, -1.0, -1.0);
  Tr<double> lc = osc_triple(b, s3 * b, -1.0, -1.0, false);
  Tr<double> ls = osc_triple(b, s3 * b, -1.0, -1.0, true);
  auto amp = solve3({{{g.v, lc.v, ls.v}, {g.d1, lc.d1, ls.d1}, {g.d2, lc.d2, ls.d2}}}, left);

  return amp[0] * std::exp(-2.0 * b * (p_probe + 1.0));
}

}  // namespace ptsqw::oracle
