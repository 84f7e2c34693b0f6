#include "cubicalg/models.hpp"

#include <cmath>

namespace cubicalg::models {

namespace {

void check_dso(const DsoParams& p) {
  if (p.N < 4) throw std::invalid_argument("dso: N must be >= 4");
  if (p.n < 2 || p.n > p.N - 2)
    throw std::invalid_argument("dso: block dimension n must satisfy 2 <= n <= N-2");
  if (p.c1 < 0 || p.c2 < 0) throw std::invalid_argument("dso: couplings must be >= 0");
  if (!(p.omega > 0)) throw std::invalid_argument("dso: omega must be positive");
  if (!(p.hbar > 0)) throw std::invalid_argument("dso: hbar must be positive");
  if (p.l1 < 0 || p.l2 < 0) throw std::invalid_argument("dso: angular momenta must be >= 0");
}

void check_kc(const KcParams& p) {
  if (p.N < 3) throw std::invalid_argument("kc: N must be >= 3");
  if (!(p.c0 > 0)) throw std::invalid_argument("kc: c0 must be positive");
  if (p.c1 < 0 || p.c2 < 0) throw std::invalid_argument("kc: couplings must be >= 0");
  if (!(p.hbar > 0)) throw std::invalid_argument("kc: hbar must be positive");
  if (p.l < 0) throw std::invalid_argument("kc: l must be >= 0");
}

// (l + (dim-2)/2)^2 + 2 c / hbar^2 for one oscillator block
exact::Rat dso_block_alpha_sq(int l, int dim, double c, double hbar) {
  using exact::Rat;
  Rat half_shift(2 * l + dim - 2, 2);
  half_shift.canonicalize();
  const Rat cp = exact::rat_from_double(c) /
                 (exact::rat_from_double(hbar) * exact::rat_from_double(hbar));
  return half_shift * half_shift + 2 * cp;
}

// (l + (N-3)/2)^2 + 4 c / hbar^2 for one Kepler-Coulomb channel
exact::Rat kc_channel_alpha_sq(int l, int N, double c, double hbar) {
  using exact::Rat;
  Rat half_shift(2 * l + N - 3, 2);
  half_shift.canonicalize();
  const Rat beta = exact::rat_from_double(c) /
                   (exact::rat_from_double(hbar) * exact::rat_from_double(hbar));
  return half_shift * half_shift + 4 * beta;
}

}  // namespace

exact::Rat dso_alpha1_squared(const DsoParams& p) {
  check_dso(p);
  return dso_block_alpha_sq(p.l1, p.n, p.c1, p.hbar);
}

exact::Rat dso_alpha2_squared(const DsoParams& p) {
  check_dso(p);
  return dso_block_alpha_sq(p.l2, p.N - p.n, p.c2, p.hbar);
}

exact::Rat kc_alpha1_squared(const KcParams& p) {
  check_kc(p);
  return kc_channel_alpha_sq(p.l, p.N, p.c1, p.hbar);
}

exact::Rat kc_alpha2_squared(const KcParams& p) {
  check_kc(p);
  return kc_channel_alpha_sq(p.l, p.N, p.c2, p.hbar);
}

DsoSector derive_dso_sector(const DsoParams& p) {
  check_dso(p);
  DsoSector s;
  const double cp1 = p.c1 / (p.hbar * p.hbar);
  const double cp2 = p.c2 / (p.hbar * p.hbar);
  const int n2dim = p.N - p.n;

  s.alpha1 = std::sqrt(exact::rat_to_double(dso_block_alpha_sq(p.l1, p.n, p.c1, p.hbar)));
  s.alpha2 = std::sqrt(exact::rat_to_double(dso_block_alpha_sq(p.l2, n2dim, p.c2, p.hbar)));
  s.delta1 = (s.alpha1 - p.l1 - (p.n - 2) / 2.0) / 2;
  s.delta2 = (s.alpha2 - p.l2 - (n2dim - 2) / 2.0) / 2;
  s.beta1 = (p.n - 1) * (p.n - 3) / 4.0 + 2 * cp1 + p.l1 * (p.l1 + p.n - 2.0);
  s.beta2 = (n2dim - 1) * (n2dim - 3) / 4.0 + 2 * cp2 + p.l2 * (p.l2 + n2dim - 2.0);
  s.omega_prime = p.omega / p.hbar;
  return s;
}

KcSector derive_kc_sector(const KcParams& p) {
  check_kc(p);
  KcSector s;
  s.beta1 = p.c1 / (p.hbar * p.hbar);
  s.beta2 = p.c2 / (p.hbar * p.hbar);
  const double shift = p.l + (p.N - 3) / 2.0;
  s.alpha1 = std::sqrt(exact::rat_to_double(kc_channel_alpha_sq(p.l, p.N, p.c1, p.hbar)));
  s.alpha2 = std::sqrt(exact::rat_to_double(kc_channel_alpha_sq(p.l, p.N, p.c2, p.hbar)));
  s.delta1 = s.alpha1 - shift;
  s.delta2 = s.alpha2 - shift;
  return s;
}

double dso_energy(const DsoParams& p, const DsoSector& s, int level) {
  if (level < 0) throw std::invalid_argument("dso_energy: level must be >= 0");
  // hbar^2 times the reduced energy, associated exactly as the constraint
  // solver computes it so the two routes agree to the last bit
  return p.hbar * p.hbar * ((2 * level + 2 + s.alpha1 + s.alpha2) * s.omega_prime);
}

double kc_energy_quantum_numbers(const KcParams& p, const KcSector& s, int n1, int n2) {
  if (n1 < 0 || n2 < 0)
    throw std::invalid_argument("kc_energy_quantum_numbers: indices must be >= 0");
  const double d = n1 + n2 + (s.delta1 + s.delta2 + 2 * p.l + p.N - 1) / 2.0;
  return -p.c0 * p.c0 / (p.hbar * p.hbar * d * d);
}

int level_multiplicity(int level) {
  if (level < 0) throw std::invalid_argument("level_multiplicity: level must be >= 0");
  return level + 1;
}

}  // namespace cubicalg::models
