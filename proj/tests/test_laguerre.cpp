#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>

#include "cubicalg/laguerre.hpp"

using namespace cubicalg::laguerre;

namespace {

// Independent oracle: the explicit monomial series
//   L_n^a(x) = sum_k (-1)^k binom(n+a, n-k) x^k / k!
double laguerre_series(int n, double alpha, double x) {
  double sum = 0;
  for (int k = 0; k <= n; ++k) {
    double b = 1.0;
    for (int j = 1; j <= n - k; ++j) b *= (alpha + k + j) / j;
    double xk = 1.0;
    for (int j = 0; j < k; ++j) xk *= x / (j + 1);
    sum += ((k % 2) ? -b : b) * xk;
  }
  return sum;
}

double simpson(const std::function<double(double)>& f, double a, double b, double fa, double fm,
               double fb, double tol, int depth) {
  const double m = (a + b) / 2;
  const double lm = (a + m) / 2, rm = (m + b) / 2;
  const double flm = f(lm), frm = f(rm);
  const double whole = (b - a) / 6 * (fa + 4 * fm + fb);
  const double left = (m - a) / 6 * (fa + 4 * flm + fm);
  const double right = (b - m) / 6 * (fm + 4 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15 * tol)
    return left + right + (left + right - whole) / 15;
  return simpson(f, a, m, fa, flm, fm, tol / 2, depth - 1) +
         simpson(f, m, b, fm, frm, fb, tol / 2, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
  const double m = (a + b) / 2;
  return simpson(f, a, b, f(a), f(m), f(b), tol, 40);
}

}  // namespace

TEST_CASE("three-term recurrence matches the monomial series") {
  for (double alpha : {0.0, 0.5, 1.0, std::sqrt(2.0), 2.5, 4.25}) {
    for (int n = 0; n <= 12; ++n) {
      for (double x : {0.0, 0.3, 1.0, 2.7, 5.0, 9.5}) {
        const double got = laguerre_eval(n, alpha, x);
        const double want = laguerre_series(n, alpha, x);
        // the alternating series sheds digits at larger n*x, hence the loose bound
        CHECK(got == doctest::Approx(want).epsilon(1e-8));
      }
    }
  }
}

TEST_CASE("low orders agree with hand-expanded polynomials") {
  const double a = 1.75, x = 2.3;
  CHECK(laguerre_eval(0, a, x) == 1.0);
  CHECK(laguerre_eval(1, a, x) == doctest::Approx(1 + a - x));
  CHECK(laguerre_eval(2, a, x) ==
        doctest::Approx((a + 1) * (a + 2) / 2 - (a + 2) * x + x * x / 2));
  CHECK(laguerre_eval(3, a, x) ==
        doctest::Approx((a + 1) * (a + 2) * (a + 3) / 6 - (a + 2) * (a + 3) * x / 2 +
                        (a + 3) * x * x / 2 - x * x * x / 6));
}

TEST_CASE("recurrence contiguity holds") {
  const double alpha = std::sqrt(3.0);
  for (int n = 1; n <= 10; ++n) {
    for (double x : {0.4, 1.7, 6.2}) {
      const double lhs = (n + 1) * laguerre_eval(n + 1, alpha, x);
      const double rhs = (2 * n + 1 + alpha - x) * laguerre_eval(n, alpha, x) -
                         (n + alpha) * laguerre_eval(n - 1, alpha, x);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
  }
}

TEST_CASE("derivative identity against central differences") {
  const double h = 1e-6;
  for (double alpha : {0.5, std::sqrt(2.0), 3.0}) {
    for (int n = 0; n <= 8; ++n) {
      for (double x : {0.5, 2.0, 4.5}) {
        const double fd =
            (laguerre_eval(n, alpha, x + h) - laguerre_eval(n, alpha, x - h)) / (2 * h);
        CHECK(laguerre_derivative(n, alpha, x) == doctest::Approx(fd).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("radial jet matches high-order finite differences") {
  for (double alpha : {0.5, std::sqrt(2.0), 2.5}) {
    for (int n : {0, 1, 3, 6}) {
      RadialWavefunction w{n, alpha, 1.0};
      for (double r : {0.4, 1.0, 2.2}) {
        const Jet j = radial_jet(w, r);
        CHECK(j.value == doctest::Approx(radial_eval(w, r)));
        const double h = 1e-4;
        auto f = [&](double rr) { return radial_eval(w, rr); };
        const double d1 =
            (-f(r + 2 * h) + 8 * f(r + h) - 8 * f(r - h) + f(r - 2 * h)) / (12 * h);
        const double d2 = (-f(r + 2 * h) + 16 * f(r + h) - 30 * f(r) + 16 * f(r - h) -
                           f(r - 2 * h)) /
                          (12 * h * h);
        CHECK(j.d1 == doctest::Approx(d1).epsilon(1e-7));
        CHECK(j.d2 == doctest::Approx(d2).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("radial functions scale consistently") {
  // X depends on r only through sqrt(s) r up to an overall power of s
  RadialWavefunction w1{2, 1.5, 1.0};
  RadialWavefunction w4{2, 1.5, 4.0};
  const double r = 0.8;
  const double ratio = radial_eval(w4, r) / radial_eval(w1, 2 * r);
  CHECK(ratio == doctest::Approx(std::pow(2.0, -(1.5 + 0.5))).epsilon(1e-12));
}

TEST_CASE("orthonormality under the half-line measure") {
  const double alpha = std::sqrt(2.0);
  const double s = 1.0;
  for (int m = 0; m <= 4; ++m) {
    for (int n = m; n <= 4; ++n) {
      RadialWavefunction wm{m, alpha, s}, wn{n, alpha, s};
      const double hi = std::max(radial_cutoff(wm, 1e-14), radial_cutoff(wn, 1e-14));
      auto f = [&](double r) { return radial_eval(wm, r) * radial_eval(wn, r); };
      const double val = integrate(f, 1e-12, hi, 1e-13);
      if (m == n) {
        CHECK(val == doctest::Approx(radial_norm_sq(wn)).epsilon(1e-9));
      } else {
        CHECK(std::abs(val) < 1e-9 * radial_norm_sq(wn));
      }
    }
  }
}

TEST_CASE("norm closed form against gamma recursion") {
  // ratio of successive norms: ||X_{n+1}||^2 / ||X_n||^2 = (n + alpha + 1)/(n + 1)
  const double alpha = 2.5, s = 3.0;
  for (int n = 0; n < 6; ++n) {
    RadialWavefunction a{n, alpha, s}, b{n + 1, alpha, s};
    CHECK(radial_norm_sq(b) / radial_norm_sq(a) ==
          doctest::Approx((n + alpha + 1) / (n + 1)).epsilon(1e-12));
  }
}

TEST_CASE("cutoff bounds the tail") {
  for (int n : {0, 3, 7}) {
    RadialWavefunction w{n, 1.5, 2.0};
    const double rc = radial_cutoff(w, 1e-12);
    CHECK(std::abs(radial_eval(w, rc)) < 1e-12);
    CHECK(std::abs(radial_eval(w, rc + 1.0)) < 1e-12);
  }
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(laguerre_eval(-1, 0.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(radial_eval({0, -1.5, 1.0}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(radial_eval({0, 0.5, -1.0}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(radial_eval({0, 0.5, 1.0}, 0.0), std::domain_error);
}
