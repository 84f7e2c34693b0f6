#include "cubicalg/laguerre.hpp"

#include <cmath>
#include <vector>

namespace cubicalg::laguerre {

namespace {

void check_params(const RadialWavefunction& w) {
  if (w.n < 0) throw std::invalid_argument("radial wavefunction: n must be >= 0");
  if (!(w.alpha > -1)) throw std::invalid_argument("radial wavefunction: alpha must exceed -1");
  if (!(w.scale > 0)) throw std::invalid_argument("radial wavefunction: scale must be positive");
}

}  // namespace

double laguerre_eval(int n, double alpha, double x) {
  if (n < 0) throw std::invalid_argument("laguerre_eval: n must be >= 0");
  if (n == 0) return 1.0;
  double lm1 = 1.0;
  double l = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double lp1 = ((2 * k + 1 + alpha - x) * l - (k + alpha) * lm1) / (k + 1);
    lm1 = l;
    l = lp1;
  }
  return l;
}

double laguerre_derivative(int n, double alpha, double x) {
  if (n <= 0) return 0.0;
  return -laguerre_eval(n - 1, alpha + 1, x);
}

double radial_eval(const RadialWavefunction& w, double r) {
  check_params(w);
  if (!(r > 0)) throw std::domain_error("radial_eval: r must be positive");
  const double u = w.scale * r * r;
  return std::exp(-u / 2) * std::pow(r, w.alpha + 0.5) * laguerre_eval(w.n, w.alpha, u);
}

double radial_derivative(const RadialWavefunction& w, double r) {
  return radial_jet(w, r).d1;
}

Jet radial_jet(const RadialWavefunction& w, double r) {
  check_params(w);
  if (!(r > 0)) throw std::domain_error("radial_jet: r must be positive");
  const double s = w.scale;
  const double u = s * r * r;
  const double kappa = w.alpha + 0.5;

  // X = A * B * C with A = exp(-u/2), B = r^kappa, C = L(u(r))
  const double A = std::exp(-u / 2);
  const double Ap = -s * r * A;
  const double App = (s * s * r * r - s) * A;

  const double B = std::pow(r, kappa);
  const double Bp = kappa * B / r;
  const double Bpp = kappa * (kappa - 1) * B / (r * r);

  const double L = laguerre_eval(w.n, w.alpha, u);
  const double Lu = laguerre_derivative(w.n, w.alpha, u);
  const double Luu = w.n >= 2 ? laguerre_eval(w.n - 2, w.alpha + 2, u) : 0.0;
  const double C = L;
  const double Cp = Lu * 2 * s * r;
  const double Cpp = Luu * 4 * s * s * r * r + Lu * 2 * s;

  Jet j;
  j.value = A * B * C;
  j.d1 = Ap * B * C + A * Bp * C + A * B * Cp;
  j.d2 = App * B * C + A * Bpp * C + A * B * Cpp +
         2 * (Ap * Bp * C + Ap * B * Cp + A * Bp * Cp);
  return j;
}

double radial_norm_sq(const RadialWavefunction& w) {
  check_params(w);
  const double logg = std::lgamma(w.n + w.alpha + 1) - std::lgamma(w.n + 1) -
                      (w.alpha + 1) * std::log(w.scale);
  return 0.5 * std::exp(logg);
}

double radial_cutoff(const RadialWavefunction& w, double tail) {
  check_params(w);
  if (!(tail > 0)) throw std::invalid_argument("radial_cutoff: tail must be positive");
  // |L_n^alpha(u)| <= M(u) = sum_k |c_k| u^k with c_k the monomial coefficients;
  // the envelope exp(-u/2) r^kappa M(u) decays past the turning point.
  const double s = w.scale;
  const double kappa = w.alpha + 0.5;
  const int n = w.n;
  // |c_k| = binom(n + alpha, n - k) / k!
  std::vector<double> absc(n + 1);
  for (int k = 0; k <= n; ++k) {
    double b = 1.0;
    for (int j = 1; j <= n - k; ++j) b *= (w.alpha + k + j) / j;
    absc[k] = std::abs(b) / std::tgamma(k + 1.0);
  }
  auto envelope = [&](double r) {
    const double u = s * r * r;
    double m = 0, up = 1;
    for (int k = 0; k <= n; ++k) {
      m += absc[k] * up;
      up *= u;
    }
    return std::exp(-u / 2) * std::pow(r, kappa) * m;
  };
  const double turning = std::sqrt((2 * n + w.alpha + 1) / s);
  const double step = 0.25 / std::sqrt(s);
  double r = std::max(turning, step);
  const double rmax = turning + 60 / std::sqrt(s);
  while (r < rmax && envelope(r) >= tail) r += step;
  return r;
}

}  // namespace cubicalg::laguerre
