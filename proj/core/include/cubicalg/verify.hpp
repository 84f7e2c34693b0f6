#pragma once

// Orchestration of the full check battery behind the command-line tool:
// exact lattice algebra, grid recurrences, structure-function constraints,
// spectrum identities, and the finite-difference cross-checks.  Everything
// here is serialization-free; the tool layers formatting on top.

#include <string>
#include <vector>

#include "cubicalg/lattice.hpp"
#include "cubicalg/models.hpp"

namespace cubicalg::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  double max_residual = 0;  // 0 for an exact pass
  std::string witness;      // where the worst residual (or first failure) sits
};

struct SpectrumRow {
  int p = 0;
  double energy = 0;
  int multiplicity = 1;
  int k1 = 1, k2 = 1;
  bool physical = true;
};

/// Derived sector constants echoed into reports.
struct SectorInfo {
  std::string model;  // "dso" or "kc"
  double alpha1 = 0, alpha2 = 0;
  double delta1 = 0, delta2 = 0;
  double scale = 0;  // omega' for dso; the p=0 physical gamma for kc
};

struct Report {
  std::vector<SectorInfo> sectors;
  std::vector<SpectrumRow> spectrum;
  std::vector<CheckResult> checks;
  bool all_pass = true;
};

struct Options {
  int pmax = 10;        // spectrum depth and structure-function range
  int max_level = 10;   // lattice states n1 + n2 <= max_level
  int grid_points = 900;
  double rmax = 0;      // 0 picks a tail-bound cutoff
  lattice::Mutation mutation;  // empty target means none
};

Report run_dso_spectrum(const models::DsoParams& params, int pmax);
Report run_kc_spectrum(const models::KcParams& params, int pmax);

/// Exact algebra, grid recurrences, structure-function constraints, the
/// lattice realization of the structure function, and the spectrum
/// identities (closed form, branch identity, oracle cross-checks).
Report run_verify(const models::DsoParams& dso, const models::KcParams& kc,
                  const Options& opts);

/// Finite-difference comparisons only: mode spectra, combined levels,
/// convergence order, and the slope fits behind the Kepler-Coulomb mapping.
Report run_oracle(const models::DsoParams& dso, const models::KcParams& kc,
                  const Options& opts);

}  // namespace cubicalg::verify
