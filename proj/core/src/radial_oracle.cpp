#include "cubicalg/radial_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cubicalg::radial_oracle {

namespace {

// eigenvalues of the symmetric tridiagonal (diag d, offdiag e) below x
int count_below(const std::vector<double>& d, double off_sq, double x) {
  // constant off-diagonal: off_sq = e^2
  int cnt = 0;
  double q = 1.0;
  constexpr double tiny = 1e-290;
  for (size_t i = 0; i < d.size(); ++i) {
    q = i == 0 ? d[0] - x : d[i] - x - off_sq / q;
    if (std::abs(q) < tiny) q = q < 0 ? -tiny : tiny;
    if (q < 0) ++cnt;
  }
  return cnt;
}

double bisect_eigenvalue(const std::vector<double>& d, double off, int k) {
  const double asum = 2 * std::abs(off);
  double lo = d[0] - asum, hi = d[0] + asum;
  for (double v : d) {
    lo = std::min(lo, v - asum);
    hi = std::max(hi, v + asum);
  }
  const double off_sq = off * off;
  const double span = hi - lo;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * span; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (count_below(d, off_sq, mid) > k)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

void check_problem(const RadialProblem& p) {
  if (!(p.kinetic_prefactor > 0))
    throw std::invalid_argument("radial oracle: kinetic prefactor must be positive");
  if (!(p.quadratic_coeff > 0))
    throw std::invalid_argument("radial oracle: quadratic coefficient must be positive");
}

}  // namespace

RadialProblem dso_problem(double omega_prime, double alpha) {
  if (!(omega_prime > 0)) throw std::invalid_argument("dso_problem: omega' must be positive");
  return {0.5, omega_prime * omega_prime, alpha * alpha - 0.25};
}

RadialProblem kc_problem(double gamma, double alpha) {
  if (!(gamma > 0)) throw std::invalid_argument("kc_problem: gamma must be positive");
  return {0.25, gamma * gamma, alpha * alpha - 0.25};
}

std::vector<double> solve_grid(const RadialProblem& p, double rmax, int points, int count) {
  check_problem(p);
  if (!(rmax > 0)) throw std::invalid_argument("solve_grid: rmax must be positive");
  if (points < 3) throw std::invalid_argument("solve_grid: need at least 3 interior points");
  if (count < 1 || count > points)
    throw std::invalid_argument("solve_grid: count out of range");
  const double h = rmax / (points + 1);
  std::vector<double> diag(points);
  for (int j = 1; j <= points; ++j) {
    const double r = j * h;
    diag[j - 1] =
        p.kinetic_prefactor * (2.0 / (h * h) + p.quadratic_coeff * r * r +
                               p.centrifugal_coeff / (r * r));
  }
  const double off = -p.kinetic_prefactor / (h * h);
  std::vector<double> ev(count);
  for (int k = 0; k < count; ++k) ev[k] = bisect_eigenvalue(diag, off, k);
  return ev;
}

OracleResult solve_lowest(const RadialProblem& p, double rmax, int base_points, int count) {
  const std::vector<double> l1 = solve_grid(p, rmax, base_points, count);
  const std::vector<double> l2 = solve_grid(p, rmax, 2 * base_points + 1, count);
  const std::vector<double> l3 = solve_grid(p, rmax, 4 * base_points + 3, count);
  OracleResult out;
  out.eigenvalues.resize(count);
  out.error_estimates.resize(count);
  for (int k = 0; k < count; ++k) {
    const double d12 = l2[k] - l1[k];
    const double d23 = l3[k] - l2[k];
    const double scale = std::max({std::abs(l1[k]), std::abs(l3[k]), 1.0});
    if (std::abs(d23) > 0.75 * std::abs(d12) && std::abs(d23) > 1e-12 * scale)
      throw std::runtime_error("radial oracle: grid refinement is not converging");
    const double extra2 = (4 * l2[k] - l1[k]) / 3;
    const double extra3 = (4 * l3[k] - l2[k]) / 3;
    out.eigenvalues[k] = extra3;
    out.error_estimates[k] = std::abs(extra3 - extra2);
  }
  return out;
}

ConvergenceStudy convergence_study(const RadialProblem& p, double rmax, int base_points,
                                   int count) {
  ConvergenceStudy s;
  s.coarse = solve_grid(p, rmax, base_points, count);
  s.medium = solve_grid(p, rmax, 2 * base_points + 1, count);
  s.fine = solve_grid(p, rmax, 4 * base_points + 3, count);
  s.observed_order.resize(count);
  s.extrapolated.resize(count);
  for (int k = 0; k < count; ++k) {
    const double d12 = s.medium[k] - s.coarse[k];
    const double d23 = s.fine[k] - s.medium[k];
    s.observed_order[k] = std::log2(std::abs(d12) / std::abs(d23));
    s.extrapolated[k] = (4 * s.fine[k] - s.medium[k]) / 3;
  }
  return s;
}

std::vector<CombinedLevel> dso_combined_levels(const models::DsoParams& p, int levels,
                                               double rmax, int base_points) {
  if (levels < 1) throw std::invalid_argument("dso_combined_levels: levels must be >= 1");
  const models::DsoSector sec = models::derive_dso_sector(p);
  const int modes_needed = levels;  // n_i < levels suffices for the first `levels` groups
  const OracleResult m1 =
      solve_lowest(dso_problem(sec.omega_prime, sec.alpha1), rmax, base_points, modes_needed);
  const OracleResult m2 =
      solve_lowest(dso_problem(sec.omega_prime, sec.alpha2), rmax, base_points, modes_needed);
  std::vector<double> sums;
  for (int a = 0; a < modes_needed; ++a)
    for (int b = 0; b < modes_needed; ++b)
      sums.push_back(p.hbar * p.hbar * (m1.eigenvalues[a] + m2.eigenvalues[b]));
  std::sort(sums.begin(), sums.end());
  // level spacing is 2 hbar omega; group with half a spacing of slack
  const double gap = p.hbar * p.hbar * sec.omega_prime;
  std::vector<CombinedLevel> out;
  for (double e : sums) {
    if (out.empty() || e - out.back().energy > gap) {
      out.push_back({e, 1});
    } else {
      ++out.back().multiplicity;
    }
  }
  if ((int)out.size() > levels) out.resize(levels);
  return out;
}

}  // namespace cubicalg::radial_oracle
