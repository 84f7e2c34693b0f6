#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cubicalg/ladder_grid.hpp"

using namespace cubicalg;
using namespace cubicalg::ladder_grid;

namespace {

const models::DsoParams kDso1{4, 2, 1, 1, 1, 1, 0, 0};
const models::DsoParams kDso2{5, 2, 1, 2, 1, 1, 1, 0};
const models::DsoParams kDso3{6, 3, 2, 0.5, 1, 1, 0, 2};
const models::KcParams kKc1{3, 1, 1, 1, 1, 0};
const models::KcParams kKc2{4, 2, 1, 2, 1, 1};
const models::KcParams kKc3{5, 1, 1, 2, 1, 1};

RadialGrid grid_for(const DiffLadder& d, int nmax) {
  return default_grid(d.scale, d.alpha, nmax, 2001);
}

}  // namespace

TEST_CASE("ladder recurrences hold to roundoff on the grid") {
  std::vector<DiffLadder> ladders;
  for (int mode : {1, 2}) {
    ladders.push_back(dso_diff_ladder(kDso1, mode));
    ladders.push_back(dso_diff_ladder(kDso2, mode));
    ladders.push_back(dso_diff_ladder(kDso3, mode));
    ladders.push_back(kc_diff_ladder(kKc1, mode, 1.0));
    ladders.push_back(kc_diff_ladder(kKc2, mode, 0.7));
    ladders.push_back(kc_diff_ladder(kKc3, mode, 2.3));
  }
  for (const auto& d : ladders) {
    CAPTURE(d.alpha);
    CAPTURE(d.scale);
    const RadialGrid g = grid_for(d, 8);
    for (int n = 0; n <= 8; ++n) {
      for (int dir : {+1, -1}) {
        CAPTURE(n);
        CAPTURE(dir);
        CHECK(recurrence_residual(d, dir, n, g) < 1e-11);
      }
    }
  }
}

TEST_CASE("lowering annihilates the ground level") {
  const DiffLadder d = dso_diff_ladder(kDso2, 1);
  const RadialGrid g = grid_for(d, 1);
  // coefficient n + alpha is nonzero at n = 0, but X_{-1} = 0; the operator
  // itself must produce zero, which the residual covers via the rhs = 0 case
  const std::vector<double> v = apply_diff_ladder(d, -1, 0, g);
  double vmax = 0, xmax = 0;
  for (size_t i = 0; i < g.r.size(); ++i) {
    vmax = std::max(vmax, std::abs(v[i]));
    xmax = std::max(xmax, std::abs(laguerre::radial_eval({0, d.alpha, d.scale}, g.r[i])));
  }
  CHECK(vmax < 1e-10 * 4 * d.scale * xmax);
}

TEST_CASE("mode hamiltonians are diagonal on the wavefunctions") {
  for (int mode : {1, 2}) {
    for (int n : {0, 2, 5, 8}) {
      CHECK(hamiltonian_residual(dso_diff_ladder(kDso3, mode), n,
                                 grid_for(dso_diff_ladder(kDso3, mode), n)) < 1e-11);
      CHECK(hamiltonian_residual(kc_diff_ladder(kKc3, mode, 1.3), n,
                                 grid_for(kc_diff_ladder(kKc3, mode, 1.3), n)) < 1e-11);
    }
  }
}

TEST_CASE("finite differences confirm the analytic application") {
  const DiffLadder d = dso_diff_ladder(kDso2, 2);
  const RadialGrid g = RadialGrid::uniform(0.5, 4.0, 101);
  const std::vector<double> v = apply_diff_ladder(d, +1, 3, g);
  const double h = 1e-5;
  const double beta = d.alpha * d.alpha - 0.25;
  double sup = 0, scale = 0;
  for (size_t i = 0; i < g.r.size(); ++i) {
    const double r = g.r[i];
    auto X = [&](double rr) { return laguerre::radial_eval({3, d.alpha, d.scale}, rr); };
    const double d1 = (X(r + h) - X(r - h)) / (2 * h);
    const double d2 = (X(r + h) - 2 * X(r) + X(r - h)) / (h * h);
    const double fd = d2 - 2 * d.scale * r * d1 +
                      (d.scale * d.scale * r * r - beta / (r * r) - d.scale) * X(r);
    sup = std::max(sup, std::abs(fd - v[i]));
    scale = std::max(scale, std::abs(v[i]));
  }
  CHECK(sup < 1e-5 * scale);
}

TEST_CASE("gauge conjugation restores the original-picture operators") {
  // dso blocks: kappa = (1 - dim)/2 per block
  for (const auto& p : {kDso1, kDso2, kDso3}) {
    const double k1 = (1.0 - p.n) / 2;
    const double k2 = (1.0 - (p.N - p.n)) / 2;
    for (int n : {0, 2, 5}) {
      for (int dir : {+1, -1}) {
        const DiffLadder d1 = dso_diff_ladder(p, 1);
        const DiffLadder d2 = dso_diff_ladder(p, 2);
        CHECK(gauge_conjugation_residual(d1, k1, dir, n, grid_for(d1, n)) < 1e-11);
        CHECK(gauge_conjugation_residual(d2, k2, dir, n, grid_for(d2, n)) < 1e-11);
      }
    }
  }
  // kc channels: kappa = (2 - N)/2
  for (const auto& p : {kKc1, kKc2, kKc3}) {
    const double k = (2.0 - p.N) / 2;
    for (int n : {0, 3}) {
      const DiffLadder d = kc_diff_ladder(p, 1, 1.1);
      CHECK(gauge_conjugation_residual(d, k, +1, n, grid_for(d, n)) < 1e-11);
      CHECK(gauge_conjugation_residual(d, k, -1, n, grid_for(d, n)) < 1e-11);
    }
  }
}

TEST_CASE("coefficient faults surface in the grid residuals") {
  const RadialGrid g = grid_for(dso_diff_ladder(kDso2, 1), 4);
  // detuned exponent: operator centrifugal term no longer matches the states
  const DiffLadder da = dso_diff_ladder(kDso2, 1, {"alpha1", 1e-3});
  CHECK(recurrence_residual(da, +1, 2, g) > 1e-8);
  CHECK(hamiltonian_residual(da, 2, g) > 1e-8);
  // detuned raising constant
  const DiffLadder dup = dso_diff_ladder(kDso2, 1, {"d1p", 1e-3});
  CHECK(recurrence_residual(dup, +1, 2, g) > 1e-8);
  CHECK(recurrence_residual(dup, -1, 2, g) < 1e-11);  // lowering untouched
  // detuned lowering constant
  const DiffLadder ddn = dso_diff_ladder(kDso2, 1, {"d1m", 1e-3});
  CHECK(recurrence_residual(ddn, -1, 2, g) > 1e-8);
  // faults on the other mode leave this one alone
  const DiffLadder other = dso_diff_ladder(kDso2, 1, {"alpha2", 1e-3});
  CHECK(recurrence_residual(other, +1, 2, g) < 1e-11);
  // kc side
  const DiffLadder kca = kc_diff_ladder(kKc2, 2, 1.0, {"alpha2", 1e-3});
  CHECK(recurrence_residual(kca, +1, 1, g) > 1e-8);
}

TEST_CASE("grid construction guards") {
  CHECK_THROWS_AS(RadialGrid::uniform(0.0, 1.0, 10), std::invalid_argument);
  CHECK_THROWS_AS(RadialGrid::uniform(1.0, 0.5, 10), std::invalid_argument);
  CHECK_THROWS_AS(RadialGrid::uniform(0.1, 1.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(default_grid(-1.0, 1.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(kc_diff_ladder(kKc1, 1, -0.5), std::invalid_argument);
  CHECK_THROWS_AS(dso_diff_ladder(kDso1, 3), std::invalid_argument);
  const DiffLadder d = dso_diff_ladder(kDso1, 1);
  CHECK_THROWS_AS(apply_diff_ladder(d, 0, 1, grid_for(d, 1)), std::invalid_argument);
}
