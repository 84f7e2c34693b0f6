#pragma once

// Deformed-oscillator layer: the quartic structure function shared by both
// models, its finite-dimension constraints, and the algebraic spectra they
// produce.  The number-like operator is B/(4 mu w) and the pair (L1, L2)
// plays (b+, b), so the structure function evaluated on the mode index must
// reproduce the lattice product eigenvalues exactly.

#include <array>
#include <vector>

#include "cubicalg/exact.hpp"
#include "cubicalg/lattice.hpp"
#include "cubicalg/models.hpp"

namespace cubicalg::oscillator {

/// Sign branch (e1, e2) of the constraint solution; each entry is +1 or -1.
struct Branch {
  int s1 = +1;
  int s2 = +1;
};

/// Reduced sector data entering the structure function: the two exponent
/// constants and the frequency-like scale (omega' for the oscillator model,
/// gamma for the Kepler-Coulomb one).
struct SectorShape {
  double alpha1 = 0;
  double alpha2 = 0;
  double scale = 1;
};

/// Quartic structure function in factored form.  `u` and `energy` are free
/// parameters here; the constraint solver below pins them per branch.
struct StructureFunction {
  models::Model model = models::Model::dso;
  SectorShape shape;
  double u = 0;
  double energy = 0;

  /// The four linear brackets at position x, before the model prefactor.
  std::array<double, 4> factors(double x) const;
  /// Product of the four brackets (times 16 for the Kepler-Coulomb model).
  double value(double x) const;
  /// Expanded coefficients, ascending powers of x.
  std::array<double, 5> quartic() const;
};

StructureFunction build_structure_function(models::Model model, const SectorShape& shape,
                                           double u, double energy);

/// Closed-form (u, energy) solving phi(0) = 0 and phi(p+1) = 0 on one branch.
struct BranchSolution {
  Branch branch;
  double u = 0;
  double energy = 0;  // reduced energy parameter: E~' (dso) or eps~ (kc)
};

BranchSolution solve_branch(models::Model model, const SectorShape& shape, int p, Branch b);

/// 256 s^4 x (x + s1 a1)(1 + p - x)(1 + p - x + s2 a2); equals the factored
/// form with the solved (u, energy) substituted, for either model.
double phi_closed_form(models::Model model, const SectorShape& shape, int p, Branch b,
                       double x);

/// One candidate (p+1)-dimensional representation.
struct Unirrep {
  Branch branch;
  double u = 0;
  double energy = 0;
  std::vector<double> phi;        // values at x = 0 .. p+1
  double boundary_residual = 0;   // max |phi(0)|, |phi(p+1)| over the factor scale
  bool positive = false;          // phi > 0 on 1 .. p
  bool physical = false;          // (+,+) branch with interior positivity
};

/// Classifies all four sign branches at dimension p+1; nothing is rejected,
/// failures are flagged.
std::vector<Unirrep> solve_constraints(models::Model model, const SectorShape& shape, int p);

/// Structure function on the (+,+) branch in lattice normalization, exact:
/// 256 w^4 x (x + a1)(1 + p - x)(1 + p - x + a2).  The exponents come from
/// the sector constants, not from the ladder coefficients, so this is an
/// independent target for the lattice product eigenvalues.
exact::Scalar exact_phi(const lattice::ExactSector& sec, int p, int x);

/// Physical (+,+) spectrum, E_p = hbar^2 E~'(p), multiplicity p+1.
std::vector<models::QuantumLevel> dso_spectrum(const models::DsoParams& params, int pmax);

/// Kepler-Coulomb branch energy E = -c0^2 / (hbar^2 D^2) with
/// D = p + 1 + (k1 a1 + k2 a2)/2.  Throws std::domain_error when D <= 0.
double kc_energy_branch(const models::KcParams& params, int p, int k1, int k2);

/// All branches with a finite energy at each p <= pmax; only (+,+) is marked
/// physical.  Rows keep the combinatorial multiplicity p+1.
std::vector<models::QuantumLevel> kc_spectrum(const models::KcParams& params, int pmax);

/// Numerical confirmation that the oscillator-side eigenvalue is linear in
/// the frequency gamma, with the slope the constraint solution predicts.
/// This is the step that lets the coupling constant take over the role of
/// the energy when mapping back to the Kepler-Coulomb spectrum.
struct CcmReport {
  double slope_expected = 0;
  double slope_fitted = 0;
  double intercept_fitted = 0;
  double fit_residual = 0;  // max deviation of the samples from the fit
};

CcmReport ccm_slope_check(const models::KcParams& params, int p,
                          const std::vector<double>& gammas, int base_points = 2000);

}  // namespace cubicalg::oscillator
