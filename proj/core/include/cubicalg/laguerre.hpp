#pragma once

// Generalized Laguerre polynomials and the gauge-rotated radial wavefunctions
//   X_n(r) = exp(-s r^2 / 2) r^(alpha + 1/2) L_n^alpha(s r^2)
// shared by both models (s = omega' for the oscillator one, s = gamma for the
// Kepler-Coulomb one after the coupling-constant exchange).

#include <stdexcept>

namespace cubicalg::laguerre {

/// L_n^alpha(x) by the stable three-term recurrence.
double laguerre_eval(int n, double alpha, double x);

/// d/dx L_n^alpha(x) = -L_{n-1}^{alpha+1}(x).
double laguerre_derivative(int n, double alpha, double x);

struct RadialWavefunction {
  int n = 0;        // Laguerre index
  double alpha = 0; // sector exponent, alpha > -1
  double scale = 1; // s > 0
};

struct Jet {
  double value = 0;
  double d1 = 0;
  double d2 = 0;
};

double radial_eval(const RadialWavefunction& w, double r);
double radial_derivative(const RadialWavefunction& w, double r);

/// X, X', X'' at r, all analytic (no finite differences).
Jet radial_jet(const RadialWavefunction& w, double r);

/// Closed form of the L2 norm on the half line:
///   integral X_n^2 dr = Gamma(n + alpha + 1) / (2 n! s^(alpha+1)).
double radial_norm_sq(const RadialWavefunction& w);

/// Radius beyond which |X_n| stays below `tail` (envelope bound, so it is
/// conservative).  Used to place outer grid boundaries.
double radial_cutoff(const RadialWavefunction& w, double tail);

}  // namespace cubicalg::laguerre
