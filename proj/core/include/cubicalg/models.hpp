#pragma once

// Model parameters and derived sector data for the two N-dimensional systems:
//
//  dso: double singular oscillator split into blocks of dimension n and N-n,
//       couplings c1, c2 on the two radii, frequency omega.
//  kc:  Kepler-Coulomb system with strength c0 plus two non-central terms
//       with couplings c1, c2, angular momentum l.
//
// A "sector" fixes the angular quantum numbers and carries the exponents
// alpha_i of the effective radial problems.  alpha_i^2 is rational in the
// inputs, which is what makes fully symbolic algebra checks possible.

#include "cubicalg/exact.hpp"

namespace cubicalg::models {

enum class Model { dso, kc };

struct DsoParams {
  int N = 4;        // ambient dimension
  int n = 2;        // first block dimension; second block has N - n
  double c1 = 1;    // singular coupling of block 1, >= 0
  double c2 = 1;    // singular coupling of block 2, >= 0
  double omega = 1; // oscillator frequency, > 0
  double hbar = 1;
  int l1 = 0;       // angular momentum of block 1
  int l2 = 0;       // angular momentum of block 2
};

struct KcParams {
  int N = 3;
  double c0 = 1;    // Coulomb strength, > 0
  double c1 = 1;    // non-central couplings, >= 0
  double c2 = 1;
  double hbar = 1;
  int l = 0;
};

struct DsoSector {
  double delta1 = 0, delta2 = 0;
  double alpha1 = 0, alpha2 = 0;
  double beta1 = 0, beta2 = 0;    // centrifugal strengths, beta_i = alpha_i^2 - 1/4
  double omega_prime = 0;         // radial scale, omega / hbar
};

struct KcSector {
  double delta1 = 0, delta2 = 0;
  double alpha1 = 0, alpha2 = 0;  // the primed exponents
  double beta1 = 0, beta2 = 0;    // c_i / hbar^2
};

/// Throws std::invalid_argument on out-of-domain parameters.
DsoSector derive_dso_sector(const DsoParams& p);
KcSector derive_kc_sector(const KcParams& p);

/// Exact squared exponents.  Doubles are dyadic rationals, so these are
/// exact values of what the double-precision sector squares approximate.
exact::Rat dso_alpha1_squared(const DsoParams& p);
exact::Rat dso_alpha2_squared(const DsoParams& p);
exact::Rat kc_alpha1_squared(const KcParams& p);
exact::Rat kc_alpha2_squared(const KcParams& p);

/// Combined oscillator level: E_p = hbar omega (2p + 2 + alpha1 + alpha2).
double dso_energy(const DsoParams& p, const DsoSector& s, int level);

/// Closed form in the separation quantum numbers (n1, n2):
///   E = -c0^2 / (hbar^2 {n1 + n2 + (delta1 + delta2 + 2l + N - 1)/2}^2).
double kc_energy_quantum_numbers(const KcParams& p, const KcSector& s, int n1, int n2);

/// Number of (n1, n2) pairs with n1 + n2 = level.
int level_multiplicity(int level);

struct QuantumLevel {
  int p = 0;
  double energy = 0;
  int multiplicity = 1;
  int k1 = 1, k2 = 1;    // exponent branch signs; dso uses (+1, +1) only
  bool physical = true;  // normalizable branch
};

}  // namespace cubicalg::models
