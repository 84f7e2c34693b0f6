#include "cubicalg/ladder_grid.hpp"

#include <cmath>

namespace cubicalg::ladder_grid {

using laguerre::Jet;
using laguerre::RadialWavefunction;

RadialGrid RadialGrid::uniform(double lo, double hi, int points) {
  if (!(lo > 0) || !(hi > lo)) throw std::invalid_argument("RadialGrid: need 0 < lo < hi");
  if (points < 2) throw std::invalid_argument("RadialGrid: need at least 2 points");
  RadialGrid g;
  g.r.resize(points);
  const double h = (hi - lo) / (points - 1);
  for (int i = 0; i < points; ++i) g.r[i] = lo + h * i;
  return g;
}

namespace {

void apply_mode_fault(DiffLadder& d, int mode, const lattice::Mutation& m) {
  if (m.target.empty()) return;
  const std::string alpha_t = mode == 1 ? "alpha1" : "alpha2";
  const std::string up_t = mode == 1 ? "d1p" : "d2p";
  const std::string dn_t = mode == 1 ? "d1m" : "d2m";
  if (m.target == alpha_t) {
    d.op_alpha += m.delta;
  } else if (m.target == up_t) {
    d.eps_up += m.delta;
  } else if (m.target == dn_t) {
    d.eps_dn += m.delta;
  } else if (m.target != "alpha1" && m.target != "alpha2" && m.target != "d1p" &&
             m.target != "d1m" && m.target != "d2p" && m.target != "d2m") {
    throw std::invalid_argument("unknown mutation target: " + m.target);
  }
}

struct Terms {
  double value;      // (D X)(r)
  double magnitude;  // sum of |term| before cancellation
};

Terms diff_terms(const DiffLadder& d, int dir, const Jet& j, double r) {
  const double s = d.scale;
  const double beta = d.op_alpha * d.op_alpha - 0.25;
  const double sign = d.model == models::Model::dso ? 1.0 : -1.0;
  const double t1 = sign * j.d2;
  const double t2 = -sign * dir * 2 * s * r * j.d1;
  const double t3 = sign * (s * s * r * r - beta / (r * r) - dir * s) * j.value;
  return {t1 + t2 + t3, std::abs(t1) + std::abs(t2) + std::abs(t3)};
}

}  // namespace

DiffLadder dso_diff_ladder(const models::DsoParams& p, int mode, const lattice::Mutation& m) {
  if (mode != 1 && mode != 2) throw std::invalid_argument("dso_diff_ladder: mode must be 1 or 2");
  const models::DsoSector s = models::derive_dso_sector(p);
  DiffLadder d;
  d.model = models::Model::dso;
  d.scale = s.omega_prime;
  d.alpha = mode == 1 ? s.alpha1 : s.alpha2;
  d.op_alpha = d.alpha;
  apply_mode_fault(d, mode, m);
  return d;
}

DiffLadder kc_diff_ladder(const models::KcParams& p, int mode, double gamma,
                          const lattice::Mutation& m) {
  if (mode != 1 && mode != 2) throw std::invalid_argument("kc_diff_ladder: mode must be 1 or 2");
  if (!(gamma > 0)) throw std::invalid_argument("kc_diff_ladder: gamma must be positive");
  const models::KcSector s = models::derive_kc_sector(p);
  DiffLadder d;
  d.model = models::Model::kc;
  d.scale = gamma;
  d.alpha = mode == 1 ? s.alpha1 : s.alpha2;
  d.op_alpha = d.alpha;
  apply_mode_fault(d, mode, m);
  return d;
}

std::vector<double> apply_diff_ladder(const DiffLadder& d, int dir, int n, const RadialGrid& g) {
  if (dir != 1 && dir != -1) throw std::invalid_argument("apply_diff_ladder: dir must be +-1");
  const RadialWavefunction w{n, d.alpha, d.scale};
  std::vector<double> out(g.r.size());
  for (size_t i = 0; i < g.r.size(); ++i)
    out[i] = diff_terms(d, dir, laguerre::radial_jet(w, g.r[i]), g.r[i]).value;
  return out;
}

double recurrence_residual(const DiffLadder& d, int dir, int n, const RadialGrid& g) {
  if (dir != 1 && dir != -1) throw std::invalid_argument("recurrence_residual: dir must be +-1");
  const double sigma = d.model == models::Model::dso ? -1.0 : 1.0;
  const double coeff =
      dir == 1 ? sigma * 4 * d.scale * (n + 1 + d.eps_up)
               : sigma * 4 * d.scale * (n + d.alpha + d.eps_dn);
  const RadialWavefunction w{n, d.alpha, d.scale};
  const int nt = n + dir;
  double num = 0, denom = 0;
  for (double r : g.r) {
    const Terms t = diff_terms(d, dir, laguerre::radial_jet(w, r), r);
    const double rhs = nt < 0 ? 0.0 : coeff * laguerre::radial_eval({nt, d.alpha, d.scale}, r);
    num = std::max(num, std::abs(t.value - rhs));
    denom = std::max(denom, t.magnitude + std::abs(rhs));
  }
  return denom > 0 ? num / denom : num;
}

double hamiltonian_residual(const DiffLadder& d, int n, const RadialGrid& g) {
  const double s = d.scale;
  const double beta = d.op_alpha * d.op_alpha - 0.25;
  const double pref = d.model == models::Model::dso ? 0.5 : 0.25;
  const double lambda = d.model == models::Model::dso ? s * (2 * n + d.alpha + 1)
                                                      : s * (2 * n + d.alpha + 1) / 2;
  const RadialWavefunction w{n, d.alpha, d.scale};
  double num = 0, denom = 0;
  for (double r : g.r) {
    const Jet j = laguerre::radial_jet(w, r);
    const double t1 = -pref * j.d2;
    const double t2 = pref * (s * s * r * r + beta / (r * r)) * j.value;
    const double rhs = lambda * j.value;
    num = std::max(num, std::abs(t1 + t2 - rhs));
    denom = std::max(denom, std::abs(t1) + std::abs(t2) + std::abs(rhs));
  }
  return denom > 0 ? num / denom : num;
}

double gauge_conjugation_residual(const DiffLadder& d, double kappa, int dir, int n,
                                  const RadialGrid& g) {
  if (dir != 1 && dir != -1)
    throw std::invalid_argument("gauge_conjugation_residual: dir must be +-1");
  const double s = d.scale;
  const double beta = d.op_alpha * d.op_alpha - 0.25;
  const double sign = d.model == models::Model::dso ? 1.0 : -1.0;
  const RadialWavefunction w{n, d.alpha, d.scale};
  double num = 0, denom = 0;
  for (double r : g.r) {
    const Jet j = laguerre::radial_jet(w, r);
    const double rk = std::pow(r, kappa);
    // jet of f = r^kappa X
    const double f = rk * j.value;
    const double fp = rk * (j.d1 + kappa * j.value / r);
    const double fpp =
        rk * (j.d2 + 2 * kappa * j.d1 / r + kappa * (kappa - 1) * j.value / (r * r));
    // conjugated operator: d^2 -> d^2 - (2k/r) d + k(k+1)/r^2,  r d -> r d - k
    const double t1 = sign * (fpp - 2 * kappa * fp / r + kappa * (kappa + 1) * f / (r * r));
    const double t2 = -sign * dir * 2 * s * (r * fp - kappa * f);
    const double t3 = sign * (s * s * r * r - beta / (r * r) - dir * s) * f;
    const double lhs = t1 + t2 + t3;
    const double rhs = rk * diff_terms(d, dir, j, r).value;
    num = std::max(num, std::abs(lhs - rhs));
    denom = std::max(denom, std::abs(t1) + std::abs(t2) + std::abs(t3));
  }
  return denom > 0 ? num / denom : num;
}

RadialGrid default_grid(double scale, double alpha_max, int nmax, int points) {
  if (!(scale > 0)) throw std::invalid_argument("default_grid: scale must be positive");
  if (nmax < 0) throw std::invalid_argument("default_grid: nmax must be >= 0");
  const double lo = 0.2 / std::sqrt(scale);
  const double hi = laguerre::radial_cutoff({nmax + 1, alpha_max, scale}, 1e-13);
  return RadialGrid::uniform(lo, hi, points);
}

}  // namespace cubicalg::ladder_grid
