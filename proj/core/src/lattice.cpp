#include "cubicalg/lattice.hpp"

#include <cmath>
#include <sstream>

namespace cubicalg::lattice {

namespace {

Rat int_pow(long base, int e) {
  Rat r(1);
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

long binom(int n, int k) {
  long r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

}  // namespace

NPoly NPoly::constant(const Scalar& c) {
  NPoly p;
  if (!c.is_zero()) p.t_[{0, 0}] = c;
  return p;
}

NPoly NPoly::variable(int mode) {
  if (mode != 1 && mode != 2) throw std::invalid_argument("NPoly::variable: mode must be 1 or 2");
  NPoly p;
  p.t_[{mode == 1 ? 1 : 0, mode == 2 ? 1 : 0}] = Scalar::integer(1);
  return p;
}

void NPoly::prune(const std::pair<int, int>& key) {
  auto it = t_.find(key);
  if (it != t_.end() && it->second.is_zero()) t_.erase(it);
}

NPoly NPoly::operator-() const {
  NPoly p;
  for (const auto& [k, v] : t_) p.t_[k] = -v;
  return p;
}

NPoly& NPoly::operator+=(const NPoly& o) {
  for (const auto& [k, v] : o.t_) {
    t_[k] += v;
    prune(k);
  }
  return *this;
}

NPoly& NPoly::operator-=(const NPoly& o) {
  for (const auto& [k, v] : o.t_) {
    t_[k] -= v;
    prune(k);
  }
  return *this;
}

NPoly operator*(const NPoly& a, const NPoly& b) {
  NPoly out;
  for (const auto& [ka, va] : a.t_)
    for (const auto& [kb, vb] : b.t_) {
      const std::pair<int, int> k{ka.first + kb.first, ka.second + kb.second};
      out.t_[k] += va * vb;
      out.prune(k);
    }
  return out;
}

NPoly NPoly::shifted(int a, int b) const {
  NPoly out;
  for (const auto& [k, c] : t_) {
    const auto [i, j] = k;
    for (int ii = 0; ii <= i; ++ii) {
      const Rat ca = binom(i, ii) * int_pow(a, i - ii);
      if (sgn(ca) == 0) continue;
      for (int jj = 0; jj <= j; ++jj) {
        const Rat cb = binom(j, jj) * int_pow(b, j - jj);
        if (sgn(cb) == 0) continue;
        Scalar term = Scalar::rational(ca * cb) * c;
        const std::pair<int, int> key{ii, jj};
        out.t_[key] += term;
        out.prune(key);
      }
    }
  }
  return out;
}

Scalar NPoly::eval(long n1, long n2) const {
  Scalar out;
  for (const auto& [k, c] : t_)
    out += Scalar::rational(int_pow(n1, k.first) * int_pow(n2, k.second)) * c;
  return out;
}

std::string NPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t_) {
    if (!first) os << " + ";
    os << "[" << c.str() << "]";
    if (k.first) os << "*n1^" << k.first;
    if (k.second) os << "*n2^" << k.second;
    first = false;
  }
  return os.str();
}

LatticeOperator LatticeOperator::diagonal(const NPoly& p) { return single({0, 0}, p); }

LatticeOperator LatticeOperator::single(Shift s, const NPoly& p) {
  LatticeOperator op;
  if (!p.is_zero()) op.t_[s] = p;
  return op;
}

bool LatticeOperator::is_diagonal() const {
  for (const auto& [s, p] : t_)
    if (s != Shift{0, 0}) return false;
  return true;
}

void LatticeOperator::prune(const Shift& key) {
  auto it = t_.find(key);
  if (it != t_.end() && it->second.is_zero()) t_.erase(it);
}

LatticeOperator LatticeOperator::operator-() const {
  LatticeOperator op;
  for (const auto& [s, p] : t_) op.t_[s] = -p;
  return op;
}

LatticeOperator& LatticeOperator::operator+=(const LatticeOperator& o) {
  for (const auto& [s, p] : o.t_) {
    t_[s] += p;
    prune(s);
  }
  return *this;
}

LatticeOperator& LatticeOperator::operator-=(const LatticeOperator& o) {
  for (const auto& [s, p] : o.t_) {
    t_[s] -= p;
    prune(s);
  }
  return *this;
}

LatticeOperator operator*(const LatticeOperator& a, const LatticeOperator& b) {
  // a acts after b: the a-coefficient is evaluated at the intermediate state,
  // i.e. shifted by the b-term displacement
  LatticeOperator out;
  for (const auto& [sa, pa] : a.t_)
    for (const auto& [sb, pb] : b.t_) {
      const Shift s{sa.first + sb.first, sa.second + sb.second};
      out.t_[s] += pa.shifted(sb.first, sb.second) * pb;
      out.prune(s);
    }
  return out;
}

LatticeOperator operator*(const Scalar& c, const LatticeOperator& a) {
  LatticeOperator out;
  if (c.is_zero()) return out;
  for (const auto& [s, p] : a.t_) out.t_[s] = NPoly::constant(c) * p;
  return out;
}

NPoly LatticeOperator::coefficient(Shift s) const {
  auto it = t_.find(s);
  return it == t_.end() ? NPoly{} : it->second;
}

StateVector LatticeOperator::apply(const StateVector& state) const {
  StateVector out;
  for (const auto& [n, amp] : state) {
    for (const auto& [s, p] : t_) {
      const long m1 = n.first + s.first;
      const long m2 = n.second + s.second;
      if (m1 < 0 || m2 < 0) continue;
      Scalar c = p.eval(n.first, n.second) * amp;
      if (c.is_zero()) continue;
      auto& slot = out[{m1, m2}];
      slot += c;
      if (slot.is_zero()) out.erase({m1, m2});
    }
  }
  return out;
}

std::string LatticeOperator::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, p] : t_) {
    if (!first) os << "  +  ";
    os << "shift(" << s.first << "," << s.second << "): " << p.str();
    first = false;
  }
  return os.str();
}

LatticeOperator commutator(const LatticeOperator& a, const LatticeOperator& b) {
  return a * b - b * a;
}

namespace {

ExactSector make_sector(models::Model model, const Rat& a1_sq, const Rat& a2_sq,
                        const Mutation& m) {
  ExactSector s;
  s.model = model;
  s.a1_sq = a1_sq;
  s.a2_sq = a2_sq;
  s.rad = exact::make_radicals(a1_sq, a2_sq);
  s.alpha1 = Scalar::from(Ext2::alpha1(s.rad));
  s.alpha2 = Scalar::from(Ext2::alpha2(s.rad));
  if (model == models::Model::dso) {
    s.mu = 1;
    s.ladder_sign = -1;
  } else {
    s.mu = Rat(1, 2);
    s.ladder_sign = +1;
  }
  if (!m.target.empty()) {
    const Rat eps = exact::rat_from_double(m.delta);
    if (m.target == "alpha1") {
      s.alpha1 += Scalar::rational(eps);
    } else if (m.target == "alpha2") {
      s.alpha2 += Scalar::rational(eps);
    } else if (m.target == "d1p") {
      s.ladder_eps[0] = eps;
    } else if (m.target == "d1m") {
      s.ladder_eps[1] = eps;
    } else if (m.target == "d2p") {
      s.ladder_eps[2] = eps;
    } else if (m.target == "d2m") {
      s.ladder_eps[3] = eps;
    } else {
      throw std::invalid_argument("unknown mutation target: " + m.target);
    }
  }
  return s;
}

}  // namespace

ExactSector dso_exact_sector(const models::DsoParams& p, const Mutation& m) {
  return make_sector(models::Model::dso, models::dso_alpha1_squared(p),
                     models::dso_alpha2_squared(p), m);
}

ExactSector kc_exact_sector(const models::KcParams& p, const Mutation& m) {
  return make_sector(models::Model::kc, models::kc_alpha1_squared(p),
                     models::kc_alpha2_squared(p), m);
}

LatticeOperator ladder(const ExactSector& s, int mode, int dir) {
  if (mode != 1 && mode != 2) throw std::invalid_argument("ladder: mode must be 1 or 2");
  if (dir != 1 && dir != -1) throw std::invalid_argument("ladder: dir must be +1 or -1");
  const Scalar pref = Scalar::monomial(Ext2::integer(4 * s.ladder_sign), 1);  // sigma 4 w
  const int eps_idx = (mode - 1) * 2 + (dir == 1 ? 0 : 1);
  NPoly inner = NPoly::variable(mode);
  if (dir == 1) {
    inner += NPoly::constant(Scalar::rational(Rat(1) + s.ladder_eps[eps_idx]));
  } else {
    inner += NPoly::constant((mode == 1 ? s.alpha1 : s.alpha2) +
                             Scalar::rational(s.ladder_eps[eps_idx]));
  }
  const Shift shift = mode == 1 ? Shift{dir, 0} : Shift{0, dir};
  return LatticeOperator::single(shift, NPoly::constant(pref) * inner);
}

LatticeOperator mode_hamiltonian(const ExactSector& s, int mode) {
  if (mode != 1 && mode != 2) throw std::invalid_argument("mode_hamiltonian: mode must be 1 or 2");
  const Scalar muw = Scalar::monomial(Ext2::rational(s.mu), 1);
  NPoly inner = NPoly::constant(Scalar::integer(2)) * NPoly::variable(mode) +
                NPoly::constant((mode == 1 ? s.alpha1 : s.alpha2) + Scalar::integer(1));
  return LatticeOperator::diagonal(NPoly::constant(muw) * inner);
}

LatticeOperator hamiltonian(const ExactSector& s) {
  return mode_hamiltonian(s, 1) + mode_hamiltonian(s, 2);
}

LatticeOperator b_diff(const ExactSector& s) {
  return mode_hamiltonian(s, 1) - mode_hamiltonian(s, 2);
}

LatticeOperator transfer(const ExactSector& s, int which) {
  if (which == 1) return ladder(s, 1, +1) * ladder(s, 2, -1);
  if (which == 2) return ladder(s, 1, -1) * ladder(s, 2, +1);
  throw std::invalid_argument("transfer: which must be 1 or 2");
}

LatticeOperator product_rhs(const ExactSector& s, int which) {
  if (which != 1 && which != 2) throw std::invalid_argument("product_rhs: which must be 1 or 2");
  const LatticeOperator h = hamiltonian(s);
  const LatticeOperator b = b_diff(s);
  // shift is -2 mu w for the L1 L2 form, +2 mu w for the L2 L1 form
  const int sign = which == 1 ? -1 : +1;
  const Scalar shift = Scalar::monomial(Ext2::rational(2 * sign * s.mu), 1);
  const Scalar musq_w2 = Scalar::monomial(Ext2::rational(4 * s.mu * s.mu), 2);
  const LatticeOperator shift_id = LatticeOperator::diagonal(NPoly::constant(shift));

  const LatticeOperator f1 = b + h + shift_id;
  const LatticeOperator f2 = b - h + shift_id;
  const LatticeOperator brace1 =
      f1 * f1 - LatticeOperator::diagonal(NPoly::constant(musq_w2 * Scalar::rational(s.a1_sq)));
  const LatticeOperator brace2 =
      f2 * f2 - LatticeOperator::diagonal(NPoly::constant(musq_w2 * Scalar::rational(s.a2_sq)));

  const Rat mu4 = s.mu * s.mu * s.mu * s.mu;
  return Scalar::rational(Rat(1) / mu4) * (brace1 * brace2);
}

namespace {

// largest |coefficient| of the residual over the lattice triangle, w = 1
double residual_sup(const LatticeOperator& r, int pmax, std::string* witness) {
  double sup = 0;
  for (long n1 = 0; n1 <= pmax; ++n1)
    for (long n2 = 0; n1 + n2 <= pmax; ++n2)
      for (const auto& [s, p] : r.terms()) {
        const double v = std::abs(p.eval(n1, n2).eval(1.0));
        if (v > sup) {
          sup = v;
          if (witness) {
            std::ostringstream os;
            os << "state (" << n1 << "," << n2 << ") shift (" << s.first << "," << s.second
               << ")";
            *witness = os.str();
          }
        }
      }
  return sup;
}

void push_formal_check(AlgebraReport& rep, const std::string& name, const LatticeOperator& lhs,
                       const LatticeOperator& rhs, int pmax) {
  AlgebraCheck c;
  c.name = name;
  const LatticeOperator resid = lhs - rhs;
  c.pass = resid.is_zero();
  if (!c.pass) c.max_residual = residual_sup(resid, pmax, &c.witness);
  rep.checks.push_back(c);
  rep.all_pass = rep.all_pass && c.pass;
}

}  // namespace

AlgebraReport verify_cubic_algebra(const ExactSector& s, int pmax) {
  if (pmax < 0) throw std::invalid_argument("verify_cubic_algebra: pmax must be >= 0");
  AlgebraReport rep;

  const LatticeOperator h = hamiltonian(s);
  const LatticeOperator b = b_diff(s);
  const LatticeOperator l1 = transfer(s, 1);
  const LatticeOperator l2 = transfer(s, 2);
  const Scalar four_mu_w = Scalar::monomial(Ext2::rational(4 * s.mu), 1);

  push_formal_check(rep, "integrals_commute_l1", commutator(l1, h), LatticeOperator{}, pmax);
  push_formal_check(rep, "integrals_commute_l2", commutator(l2, h), LatticeOperator{}, pmax);
  push_formal_check(rep, "ladder_bracket_l1", commutator(l1, b), -(four_mu_w * l1), pmax);
  push_formal_check(rep, "ladder_bracket_l2", commutator(l2, b), four_mu_w * l2, pmax);
  push_formal_check(rep, "product_identity_fwd", l1 * l2, product_rhs(s, 1), pmax);
  push_formal_check(rep, "product_identity_rev", l2 * l1, product_rhs(s, 2), pmax);

  // state-by-state: composition through the lattice agrees with the formal
  // product, including at the boundary where intermediate states fall off
  AlgebraCheck states;
  states.name = "lattice_states";
  states.pass = true;
  const LatticeOperator l12 = l1 * l2;
  const LatticeOperator l21 = l2 * l1;
  const LatticeOperator rhs1 = product_rhs(s, 1);
  const LatticeOperator rhs2 = product_rhs(s, 2);
  for (long n1 = 0; n1 <= pmax && states.pass; ++n1)
    for (long n2 = 0; n1 + n2 <= pmax && states.pass; ++n2) {
      StateVector e{{{n1, n2}, Scalar::integer(1)}};
      ++rep.states_checked;
      struct Case {
        const LatticeOperator *outer, *inner, *formal, *rhs;
      };
      const Case cases[2] = {{&l1, &l2, &l12, &rhs1}, {&l2, &l1, &l21, &rhs2}};
      for (const Case& k : cases) {
        StateVector two_step = k.outer->apply(k.inner->apply(e));
        StateVector one_step = k.formal->apply(e);
        StateVector rhs_step = k.rhs->apply(e);
        auto diff = [](StateVector a, const StateVector& bv) {
          for (const auto& [n, amp] : bv) {
            a[n] -= amp;
            if (a[n].is_zero()) a.erase(n);
          }
          return a;
        };
        const StateVector d_seq = diff(two_step, one_step);
        const StateVector d_rhs = diff(one_step, rhs_step);
        if (!d_seq.empty() || !d_rhs.empty()) {
          states.pass = false;
          std::ostringstream os;
          os << "state (" << n1 << "," << n2 << ")";
          states.witness = os.str();
          for (const StateVector* d : {&d_seq, &d_rhs})
            for (const auto& [n, amp] : *d)
              states.max_residual = std::max(states.max_residual, std::abs(amp.eval(1.0)));
        }
      }
    }
  rep.checks.push_back(states);
  rep.all_pass = rep.all_pass && states.pass;
  return rep;
}

}  // namespace cubicalg::lattice
