#pragma once

// Differential realization of the ladder pair on a radial grid.  The rotated
// operators act on X_n(r) = exp(-s r^2/2) r^(alpha+1/2) L_n^alpha(s r^2):
//
//   dso:  D^+- X = X'' -+ 2 s r X' + (s^2 r^2 - beta/r^2 -+ s) X
//   kc:   D^+- X = -X'' +- 2 s r X' + (-s^2 r^2 + beta/r^2 +- s) X
//
// with beta = alpha^2 - 1/4, and must reproduce the lattice coefficients:
//
//   dso:  D^+ X_n = -4 s (n+1) X_{n+1},   D^- X_n = -4 s (n+alpha) X_{n-1}
//   kc:   D^+ X_n = +4 s (n+1) X_{n+1},   D^- X_n = +4 s (n+alpha) X_{n-1}
//
// All derivatives are analytic (Laguerre jets), so the residuals measure the
// identities themselves, not a discretization error.

#include <vector>

#include "cubicalg/laguerre.hpp"
#include "cubicalg/lattice.hpp"
#include "cubicalg/models.hpp"

namespace cubicalg::ladder_grid {

struct RadialGrid {
  std::vector<double> r;
  static RadialGrid uniform(double lo, double hi, int points);
};

/// One radial mode with its operator data.  A fault can detune the exponent
/// used by the operator (op_alpha) or the additive ladder constants while the
/// wavefunctions keep the model exponent alpha.
struct DiffLadder {
  models::Model model = models::Model::dso;
  double scale = 1;     // omega' or gamma
  double alpha = 0;     // exponent defining the wavefunctions
  double op_alpha = 0;  // exponent used by the differential operator
  double eps_up = 0;    // additive fault on the raising coefficient
  double eps_dn = 0;    // additive fault on the lowering coefficient
};

DiffLadder dso_diff_ladder(const models::DsoParams& p, int mode,
                           const lattice::Mutation& m = {});
DiffLadder kc_diff_ladder(const models::KcParams& p, int mode, double gamma,
                          const lattice::Mutation& m = {});

/// (D^dir X_n)(r) over the grid, dir = +1 or -1.
std::vector<double> apply_diff_ladder(const DiffLadder& d, int dir, int n, const RadialGrid& g);

/// sup_r |D^dir X_n - c X_{n+dir}| normalized by the size of the operator
/// terms, so an exact identity sits at roundoff level.
double recurrence_residual(const DiffLadder& d, int dir, int n, const RadialGrid& g);

/// sup_r |H X_n - lambda_n X_n| with the same normalization;
/// dso: H = (-d^2 + s^2 r^2 + beta/r^2)/2, lambda = s (2n + alpha + 1)
/// kc:  H = (-d^2 + s^2 r^2 + beta/r^2)/4, lambda = s (2n + alpha + 1)/2
double hamiltonian_residual(const DiffLadder& d, int n, const RadialGrid& g);

/// Undoes the gauge rotation: the original-picture operator
///   D_orig = r^kappa o D o r^(-kappa)
/// applied to f = r^kappa X_n must land on c r^kappa X_{n+dir}.  Checks the
/// explicit conjugated form (first-derivative and 1/r^2 terms restored)
/// against r^kappa (D X_n) pointwise.
double gauge_conjugation_residual(const DiffLadder& d, double kappa, int dir, int n,
                                  const RadialGrid& g);

/// Grid covering the support of all X_k, k <= nmax + 1, for this sector.
RadialGrid default_grid(double scale, double alpha_max, int nmax, int points = 4001);

}  // namespace cubicalg::ladder_grid
