#pragma once

// Exact lattice realization of the ladder construction.  Basis states are
// |n1, n2> with n_i >= 0; operators carry finitely many lattice shifts whose
// coefficients are polynomials in (n1, n2) over the exact scalar ring.  The
// cubic-algebra identities are verified as formal operator identities (zero
// residual for every state and every admissible scale), then re-checked
// state by state through explicit composition on the lattice.
//
// Both models share one algebra shape and differ only in two constants:
// the ladder sign sigma and the diagonal scale mu,
//
//   D_i^+ |n_i> = sigma 4 w (n_i + 1)       |n_i + 1>
//   D_i^- |n_i> = sigma 4 w (n_i + alpha_i) |n_i - 1>
//   H_i         = mu w (2 n_i + alpha_i + 1)
//   B = H_1 - H_2,  H = H_1 + H_2,  L_1 = D_1^+ D_2^-,  L_2 = D_1^- D_2^+
//
// with (sigma, mu) = (-1, 1) for the oscillator model (w = omega') and
// (+1, 1/2) for the Kepler-Coulomb one (w = gamma).

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cubicalg/exact.hpp"
#include "cubicalg/models.hpp"

namespace cubicalg::lattice {

using exact::Ext2;
using exact::Rat;
using exact::Scalar;

/// Polynomial in the mode indices (n1, n2) with Scalar coefficients.
class NPoly {
 public:
  NPoly() = default;
  static NPoly constant(const Scalar& c);
  static NPoly variable(int mode);  // mode 1 -> n1, mode 2 -> n2

  bool is_zero() const { return t_.empty(); }

  NPoly operator-() const;
  NPoly& operator+=(const NPoly& o);
  NPoly& operator-=(const NPoly& o);
  friend NPoly operator+(NPoly a, const NPoly& b) { return a += b; }
  friend NPoly operator-(NPoly a, const NPoly& b) { return a -= b; }
  friend NPoly operator*(const NPoly& a, const NPoly& b);
  friend bool operator==(const NPoly& a, const NPoly& b) { return (a - b).is_zero(); }

  /// Substitution n1 -> n1 + a, n2 -> n2 + b.
  NPoly shifted(int a, int b) const;

  Scalar eval(long n1, long n2) const;

  std::string str() const;
  const std::map<std::pair<int, int>, Scalar>& terms() const { return t_; }

 private:
  std::map<std::pair<int, int>, Scalar> t_;  // (deg n1, deg n2) -> coefficient
  void prune(const std::pair<int, int>& key);
};

using Shift = std::pair<int, int>;
using StateVector = std::map<std::pair<long, long>, Scalar>;

/// Finite sum of shift terms; the coefficient polynomial of a term is always
/// evaluated at the source state.
class LatticeOperator {
 public:
  LatticeOperator() = default;
  static LatticeOperator diagonal(const NPoly& p);
  static LatticeOperator single(Shift s, const NPoly& p);

  bool is_zero() const { return t_.empty(); }
  bool is_diagonal() const;

  LatticeOperator operator-() const;
  LatticeOperator& operator+=(const LatticeOperator& o);
  LatticeOperator& operator-=(const LatticeOperator& o);
  friend LatticeOperator operator+(LatticeOperator a, const LatticeOperator& b) { return a += b; }
  friend LatticeOperator operator-(LatticeOperator a, const LatticeOperator& b) { return a -= b; }
  /// Operator composition: (a * b) |state> = a (b |state>).
  friend LatticeOperator operator*(const LatticeOperator& a, const LatticeOperator& b);
  friend LatticeOperator operator*(const Scalar& c, const LatticeOperator& a);
  friend bool operator==(const LatticeOperator& a, const LatticeOperator& b) {
    return (a - b).is_zero();
  }

  NPoly coefficient(Shift s) const;
  const std::map<Shift, NPoly>& terms() const { return t_; }

  /// Numeric-exact application; targets with a negative index are dropped
  /// (annihilation at the lattice boundary).
  StateVector apply(const StateVector& state) const;

  std::string str() const;

 private:
  std::map<Shift, NPoly> t_;
  void prune(const Shift& key);
};

LatticeOperator commutator(const LatticeOperator& a, const LatticeOperator& b);

/// Single-coefficient fault injection for the sensitivity checks.
/// target names: alpha1 alpha2 (exponent as used by the operators)
///               d1p d1m d2p d2m (additive constant of one ladder coefficient)
struct Mutation {
  std::string target;
  double delta = 0;
};

struct ExactSector {
  models::Model model = models::Model::dso;
  exact::RadicalsPtr rad;
  Scalar alpha1, alpha2;  // exponents as used by the operators (mutated on request)
  Rat a1_sq, a2_sq;       // invariant squared exponents from the model data
  Rat mu;                 // diagonal scale
  int ladder_sign = -1;   // sigma
  std::array<Rat, 4> ladder_eps{};  // additive perturbations: d1p d1m d2p d2m
};

ExactSector dso_exact_sector(const models::DsoParams& p, const Mutation& m = {});
ExactSector kc_exact_sector(const models::KcParams& p, const Mutation& m = {});

LatticeOperator ladder(const ExactSector& s, int mode, int dir);
LatticeOperator mode_hamiltonian(const ExactSector& s, int mode);
LatticeOperator hamiltonian(const ExactSector& s);
LatticeOperator b_diff(const ExactSector& s);
/// L_1 (which = 1) or L_2 (which = 2).
LatticeOperator transfer(const ExactSector& s, int which);
/// Factorized right-hand side of the algebra product identity:
/// which = 1 gives the closed form of L_1 L_2, which = 2 that of L_2 L_1.
/// The exponent squares entering the braces come from the invariant model
/// data, not from the operator coefficients.
LatticeOperator product_rhs(const ExactSector& s, int which);

struct AlgebraCheck {
  std::string name;
  bool pass = false;
  double max_residual = 0;  // 0 for an exact pass
  std::string witness;      // first failing coefficient or state
};

struct AlgebraReport {
  std::vector<AlgebraCheck> checks;
  bool all_pass = true;
  int states_checked = 0;
};

/// Formal identities plus state-by-state composition checks for every
/// |n1, n2> with n1 + n2 <= pmax.
AlgebraReport verify_cubic_algebra(const ExactSector& s, int pmax);

}  // namespace cubicalg::lattice
