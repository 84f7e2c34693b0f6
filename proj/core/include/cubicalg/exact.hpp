#pragma once

// Exact scalar arithmetic for the lattice-operator algebra.
//
// Operator coefficients live in Q(s1, s2)[w, 1/w]: Laurent polynomials in the
// model scale symbol w (omega' for the singular-oscillator model, gamma for
// the Stackel-equivalent Kepler-Coulomb one) whose coefficients sit in the
// quadratic extension of the rationals by the two sector radicals
// s_i = alpha_i = sqrt(A_i).  Algebra identities are verified by symbolic
// zero tests in this ring, so they hold for every admissible value of the
// scale and of the radicals, not just at sampled floating-point parameters.

#include <gmpxx.h>

#include <array>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

namespace cubicalg::exact {

using Rat = mpq_class;

/// Exact rational value of a binary double (doubles are dyadic rationals).
Rat rat_from_double(double x);

double rat_to_double(const Rat& q);

/// If q = (p/r)^2 for rationals, returns true and sets root = p/r >= 0.
bool rational_square_root(const Rat& q, Rat& root);

/// The squared radicals of one sector.  When A_i is a perfect rational
/// square the radical collapses to a plain rational at construction and the
/// corresponding basis coordinate is never populated, so zero tests remain
/// decisive in that degenerate case.
struct Radicals {
  Rat a1sq, a2sq;
  bool folded1 = false, folded2 = false;
  Rat a1rat, a2rat;  // valid when folded

  Radicals(const Rat& a1_squared, const Rat& a2_squared);
};

using RadicalsPtr = std::shared_ptr<const Radicals>;

RadicalsPtr make_radicals(const Rat& a1_squared, const Rat& a2_squared);

/// Element of Q(s1, s2) on the basis {1, s1, s2, s1*s2}.
class Ext2 {
 public:
  Ext2() = default;
  static Ext2 rational(const Rat& q);
  static Ext2 integer(long v);
  static Ext2 alpha1(const RadicalsPtr& r);
  static Ext2 alpha2(const RadicalsPtr& r);

  bool is_zero() const;
  bool is_rational() const;

  Ext2 operator-() const;
  Ext2& operator+=(const Ext2& o);
  Ext2& operator-=(const Ext2& o);
  friend Ext2 operator+(Ext2 a, const Ext2& b) { return a += b; }
  friend Ext2 operator-(Ext2 a, const Ext2& b) { return a -= b; }
  friend Ext2 operator*(const Ext2& a, const Ext2& b);
  friend bool operator==(const Ext2& a, const Ext2& b);

  Ext2 scale(const Rat& q) const;

  double to_double() const;
  std::string str() const;

  const std::array<Rat, 4>& coords() const { return c_; }
  const RadicalsPtr& radicals() const { return rad_; }

 private:
  // c_[0] + c_[1]*s1 + c_[2]*s2 + c_[3]*s1*s2
  std::array<Rat, 4> c_{};
  RadicalsPtr rad_;  // null while the element is purely rational

  static const Radicals& require(const RadicalsPtr& a, const RadicalsPtr& b);
  void merge_basis(const Ext2& o);
};

/// Laurent polynomial in the scale symbol w over Ext2.
class Scalar {
 public:
  Scalar() = default;
  static Scalar zero() { return {}; }
  static Scalar rational(const Rat& q);
  static Scalar integer(long v);
  static Scalar from(const Ext2& e) { return monomial(e, 0); }
  static Scalar monomial(const Ext2& e, int wpower);
  /// w^power
  static Scalar symbol(int power = 1);

  bool is_zero() const { return terms_.empty(); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Exact division by q * w^power.
  Scalar div_monomial(const Rat& q, int power) const;

  /// Numeric value with the scale symbol set to wval.
  double eval(double wval) const;

  int min_power() const;
  int max_power() const;

  std::string str() const;

  const std::map<int, Ext2>& terms() const { return terms_; }

 private:
  std::map<int, Ext2> terms_;  // power of w -> coefficient, no zero entries
  void prune(int key);
};

}  // namespace cubicalg::exact
