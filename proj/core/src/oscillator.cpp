#include "cubicalg/oscillator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cubicalg/radial_oracle.hpp"

namespace cubicalg::oscillator {

namespace {

void check_branch(Branch b) {
  if ((b.s1 != 1 && b.s1 != -1) || (b.s2 != 1 && b.s2 != -1))
    throw std::invalid_argument("branch signs must be +1 or -1");
}

void check_shape(const SectorShape& s) {
  if (!(s.scale > 0)) throw std::invalid_argument("sector scale must be positive");
  if (!std::isfinite(s.alpha1) || !std::isfinite(s.alpha2))
    throw std::invalid_argument("sector exponents must be finite");
}

}  // namespace

std::array<double, 4> StructureFunction::factors(double x) const {
  const double a1 = shape.alpha1, a2 = shape.alpha2, s = shape.scale;
  if (model == models::Model::dso) {
    const double base = 4 * s * (x + u);
    return {base + energy - 2 * (1 - a1) * s, base + energy - 2 * (1 + a1) * s,
            base - energy - 2 * (1 - a2) * s, base - energy - 2 * (1 + a2) * s};
  }
  const double base = 2 * s * (x + u);
  return {base + energy - (1 - a1) * s, base + energy - (1 + a1) * s,
          base - energy - (1 - a2) * s, base - energy - (1 + a2) * s};
}

double StructureFunction::value(double x) const {
  const auto f = factors(x);
  const double pref = model == models::Model::kc ? 16.0 : 1.0;
  return pref * f[0] * f[1] * f[2] * f[3];
}

std::array<double, 5> StructureFunction::quartic() const {
  // every bracket is slope * x + f(0)
  const auto c = factors(0.0);
  const double slope = (model == models::Model::dso ? 4.0 : 2.0) * shape.scale;
  std::array<double, 5> out{1, 0, 0, 0, 0};
  int deg = 0;
  for (int i = 0; i < 4; ++i) {
    for (int k = deg; k >= 0; --k) {
      out[k + 1] += slope * out[k];
      out[k] *= c[i];
    }
    ++deg;
  }
  if (model == models::Model::kc)
    for (double& v : out) v *= 16.0;
  return out;
}

StructureFunction build_structure_function(models::Model model, const SectorShape& shape,
                                           double u, double energy) {
  check_shape(shape);
  return {model, shape, u, energy};
}

BranchSolution solve_branch(models::Model model, const SectorShape& shape, int p, Branch b) {
  check_shape(shape);
  check_branch(b);
  if (p < 0) throw std::invalid_argument("representation index p must be >= 0");
  const double a1 = shape.alpha1, a2 = shape.alpha2, s = shape.scale;
  BranchSolution sol;
  sol.branch = b;
  if (model == models::Model::dso) {
    sol.energy = (2 * p + 2 + b.s1 * a1 + b.s2 * a2) * s;
    sol.u = (-sol.energy + 2 * s * (1 + b.s1 * a1)) / (4 * s);
  } else {
    sol.energy = 0.5 * s * (2 * p + 2 + b.s1 * a1 + b.s2 * a2);
    sol.u = (-sol.energy + s * (1 + b.s1 * a1)) / (2 * s);
  }
  return sol;
}

double phi_closed_form(models::Model model, const SectorShape& shape, int p, Branch b,
                       double x) {
  check_shape(shape);
  check_branch(b);
  if (p < 0) throw std::invalid_argument("representation index p must be >= 0");
  (void)model;  // the closed form is shared once the scale is chosen
  const double s = shape.scale;
  const double s4 = s * s * s * s;
  return 256.0 * s4 * x * (x + b.s1 * shape.alpha1) * (1 + p - x) *
         (1 + p - x + b.s2 * shape.alpha2);
}

std::vector<Unirrep> solve_constraints(models::Model model, const SectorShape& shape, int p) {
  check_shape(shape);
  if (p < 0) throw std::invalid_argument("representation index p must be >= 0");
  std::vector<Unirrep> out;
  for (int s1 : {+1, -1}) {
    for (int s2 : {+1, -1}) {
      const Branch b{s1, s2};
      const BranchSolution sol = solve_branch(model, shape, p, b);
      const StructureFunction fn = build_structure_function(model, shape, sol.u, sol.energy);
      Unirrep rep;
      rep.branch = b;
      rep.u = sol.u;
      rep.energy = sol.energy;
      std::array<double, 4> mag{0, 0, 0, 0};
      for (int x = 0; x <= p + 1; ++x) {
        rep.phi.push_back(fn.value(x));
        const auto f = fn.factors(x);
        for (int i = 0; i < 4; ++i) mag[i] = std::max(mag[i], std::abs(f[i]));
      }
      const double scale4 = mag[0] * mag[1] * mag[2] * mag[3];
      rep.boundary_residual =
          std::max(std::abs(rep.phi.front()), std::abs(rep.phi.back())) / scale4;
      rep.positive = true;
      for (int x = 1; x <= p; ++x) rep.positive = rep.positive && rep.phi[x] > 0;
      rep.physical = rep.positive && s1 == 1 && s2 == 1;
      out.push_back(std::move(rep));
    }
  }
  return out;
}

exact::Scalar exact_phi(const lattice::ExactSector& sec, int p, int x) {
  if (p < 0) throw std::invalid_argument("representation index p must be >= 0");
  using exact::Ext2;
  using exact::Scalar;
  const Scalar a1 = Scalar::from(Ext2::alpha1(sec.rad));
  const Scalar a2 = Scalar::from(Ext2::alpha2(sec.rad));
  const Scalar xs = Scalar::integer(x);
  const Scalar top = Scalar::integer(1 + p - x);
  return Scalar::monomial(Ext2::integer(256), 4) * xs * (xs + a1) * top * (top + a2);
}

std::vector<models::QuantumLevel> dso_spectrum(const models::DsoParams& params, int pmax) {
  if (pmax < 0) throw std::invalid_argument("pmax must be >= 0");
  const models::DsoSector sec = models::derive_dso_sector(params);
  const SectorShape shape{sec.alpha1, sec.alpha2, sec.omega_prime};
  std::vector<models::QuantumLevel> out;
  for (int p = 0; p <= pmax; ++p) {
    const BranchSolution sol = solve_branch(models::Model::dso, shape, p, {+1, +1});
    models::QuantumLevel lv;
    lv.p = p;
    lv.energy = params.hbar * params.hbar * sol.energy;
    lv.multiplicity = models::level_multiplicity(p);
    lv.k1 = lv.k2 = +1;
    lv.physical = true;
    out.push_back(lv);
  }
  return out;
}

double kc_energy_branch(const models::KcParams& params, int p, int k1, int k2) {
  check_branch({k1, k2});
  if (p < 0) throw std::invalid_argument("representation index p must be >= 0");
  const models::KcSector sec = models::derive_kc_sector(params);
  const double d = p + 1 + 0.5 * (k1 * sec.alpha1 + k2 * sec.alpha2);
  if (d <= 0) throw std::domain_error("kc_energy_branch: non-positive denominator");
  return -(params.c0 * params.c0) / (params.hbar * params.hbar * d * d);
}

std::vector<models::QuantumLevel> kc_spectrum(const models::KcParams& params, int pmax) {
  if (pmax < 0) throw std::invalid_argument("pmax must be >= 0");
  std::vector<models::QuantumLevel> out;
  for (int p = 0; p <= pmax; ++p) {
    for (int k1 : {+1, -1}) {
      for (int k2 : {+1, -1}) {
        models::QuantumLevel lv;
        lv.p = p;
        try {
          lv.energy = kc_energy_branch(params, p, k1, k2);
        } catch (const std::domain_error&) {
          continue;  // no finite energy on this branch at this p
        }
        lv.multiplicity = models::level_multiplicity(p);
        lv.k1 = k1;
        lv.k2 = k2;
        lv.physical = k1 == 1 && k2 == 1;
        out.push_back(lv);
      }
    }
  }
  return out;
}

CcmReport ccm_slope_check(const models::KcParams& params, int p,
                          const std::vector<double>& gammas, int base_points) {
  if (p < 0) throw std::invalid_argument("representation index p must be >= 0");
  if (gammas.size() < 2) throw std::invalid_argument("need at least two gamma samples");
  for (double g : gammas)
    if (!(g > 0)) throw std::invalid_argument("gamma samples must be positive");
  const models::KcSector sec = models::derive_kc_sector(params);
  const double amax = std::max(sec.alpha1, sec.alpha2);
  // dimensionless box; scaling it as 1/sqrt(gamma) keeps the discretized
  // problem an exact rescaling across samples
  const double box = std::max(12.0, std::sqrt(2 * (2.0 * (p + 1) + amax + 1)) + 8.0);

  std::vector<double> eps;
  for (double g : gammas) {
    const double rmax = box / std::sqrt(g);
    const auto ch1 =
        radial_oracle::solve_lowest(radial_oracle::kc_problem(g, sec.alpha1), rmax,
                                    base_points, 1);
    const auto ch2 =
        radial_oracle::solve_lowest(radial_oracle::kc_problem(g, sec.alpha2), rmax,
                                    base_points, p + 1);
    eps.push_back(ch1.eigenvalues[0] + ch2.eigenvalues[p]);
  }

  const auto n = static_cast<double>(gammas.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < gammas.size(); ++i) {
    sx += gammas[i];
    sy += eps[i];
    sxx += gammas[i] * gammas[i];
    sxy += gammas[i] * eps[i];
  }
  const double det = n * sxx - sx * sx;
  if (!(det > 0)) throw std::invalid_argument("gamma samples must not coincide");

  CcmReport rep;
  rep.slope_expected = p + 1 + 0.5 * (sec.alpha1 + sec.alpha2);
  rep.slope_fitted = (n * sxy - sx * sy) / det;
  rep.intercept_fitted = (sy - rep.slope_fitted * sx) / n;
  for (size_t i = 0; i < gammas.size(); ++i)
    rep.fit_residual = std::max(
        rep.fit_residual,
        std::abs(eps[i] - rep.slope_fitted * gammas[i] - rep.intercept_fitted));
  return rep;
}

}  // namespace cubicalg::oscillator
