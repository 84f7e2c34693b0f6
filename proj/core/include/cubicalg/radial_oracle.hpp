#pragma once

// Independent cross-check for the algebraic spectra: a second-order finite
// difference discretization of the effective radial Hamiltonians
//
//   H = pref (-d^2/dr^2 + quad r^2 + cent / r^2)
//
// on a uniform Dirichlet grid, eigenvalues by Sturm bisection (deterministic,
// no iterative solver state), sharpened by Richardson extrapolation over a
// three-grid refinement.  Nothing here knows about ladder operators or the
// closed-form spectra.

#include <vector>

#include "cubicalg/models.hpp"

namespace cubicalg::radial_oracle {

struct RadialProblem {
  double kinetic_prefactor = 0.5;
  double quadratic_coeff = 1;   // omega'^2 or gamma^2
  double centrifugal_coeff = 0; // beta = alpha^2 - 1/4
};

RadialProblem dso_problem(double omega_prime, double alpha);
RadialProblem kc_problem(double gamma, double alpha);

/// Lowest `count` eigenvalues of the discretization with `points` interior
/// grid points on (0, rmax).
std::vector<double> solve_grid(const RadialProblem& p, double rmax, int points, int count);

struct OracleResult {
  std::vector<double> eigenvalues;       // Richardson-extrapolated
  std::vector<double> error_estimates;   // difference of successive extrapolants
};

/// Three grids with h, h/2, h/4; extrapolates the h^2 term away and throws
/// std::runtime_error when the refinement is not actually converging.
OracleResult solve_lowest(const RadialProblem& p, double rmax, int base_points, int count);

struct ConvergenceStudy {
  std::vector<double> coarse, medium, fine;
  std::vector<double> observed_order;  // log2 of successive error ratios, ~2
  std::vector<double> extrapolated;
};

ConvergenceStudy convergence_study(const RadialProblem& p, double rmax, int base_points,
                                   int count);

struct CombinedLevel {
  double energy = 0;
  int multiplicity = 0;
};

/// Two-mode oscillator spectrum assembled purely from grid eigenvalues:
/// E = hbar^2 (lambda1 + lambda2), grouped into degenerate levels.
std::vector<CombinedLevel> dso_combined_levels(const models::DsoParams& p, int levels,
                                               double rmax, int base_points);

}  // namespace cubicalg::radial_oracle
