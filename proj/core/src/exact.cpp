#include "cubicalg/exact.hpp"

#include <cmath>
#include <sstream>

namespace cubicalg::exact {

Rat rat_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("rat_from_double: non-finite input");
  Rat q(x);
  q.canonicalize();
  return q;
}

double rat_to_double(const Rat& q) { return q.get_d(); }

bool rational_square_root(const Rat& q, Rat& root) {
  if (sgn(q) < 0) return false;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  root = Rat(rn, rd);
  root.canonicalize();
  return true;
}

Radicals::Radicals(const Rat& a1_squared, const Rat& a2_squared)
    : a1sq(a1_squared), a2sq(a2_squared) {
  if (sgn(a1sq) < 0 || sgn(a2sq) < 0)
    throw std::invalid_argument("Radicals: squared radical must be nonnegative");
  folded1 = rational_square_root(a1sq, a1rat);
  folded2 = rational_square_root(a2sq, a2rat);
}

RadicalsPtr make_radicals(const Rat& a1_squared, const Rat& a2_squared) {
  return std::make_shared<const Radicals>(a1_squared, a2_squared);
}

Ext2 Ext2::rational(const Rat& q) {
  Ext2 e;
  e.c_[0] = q;
  return e;
}

Ext2 Ext2::integer(long v) { return rational(Rat(v)); }

Ext2 Ext2::alpha1(const RadicalsPtr& r) {
  if (!r) throw std::invalid_argument("Ext2::alpha1: null radical basis");
  Ext2 e;
  if (r->folded1) {
    e.c_[0] = r->a1rat;
  } else {
    e.c_[1] = 1;
  }
  e.rad_ = r;
  return e;
}

Ext2 Ext2::alpha2(const RadicalsPtr& r) {
  if (!r) throw std::invalid_argument("Ext2::alpha2: null radical basis");
  Ext2 e;
  if (r->folded2) {
    e.c_[0] = r->a2rat;
  } else {
    e.c_[2] = 1;
  }
  e.rad_ = r;
  return e;
}

bool Ext2::is_zero() const {
  for (const auto& q : c_)
    if (sgn(q) != 0) return false;
  return true;
}

bool Ext2::is_rational() const {
  return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

const Radicals& Ext2::require(const RadicalsPtr& a, const RadicalsPtr& b) {
  const RadicalsPtr& r = a ? a : b;
  if (!r) throw std::logic_error("Ext2: radical arithmetic without a basis");
  if (a && b && a != b && (a->a1sq != b->a1sq || a->a2sq != b->a2sq))
    throw std::invalid_argument("Ext2: mixing elements from different sectors");
  return *r;
}

void Ext2::merge_basis(const Ext2& o) {
  if (!rad_) {
    rad_ = o.rad_;
  } else if (o.rad_ && o.rad_ != rad_ &&
             (o.rad_->a1sq != rad_->a1sq || o.rad_->a2sq != rad_->a2sq)) {
    throw std::invalid_argument("Ext2: mixing elements from different sectors");
  }
}

Ext2 Ext2::operator-() const {
  Ext2 e(*this);
  for (auto& q : e.c_) q = -q;
  return e;
}

Ext2& Ext2::operator+=(const Ext2& o) {
  merge_basis(o);
  for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

Ext2& Ext2::operator-=(const Ext2& o) {
  merge_basis(o);
  for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

Ext2 operator*(const Ext2& a, const Ext2& b) {
  Ext2 out;
  const bool a_rad = !a.is_rational();
  const bool b_rad = !b.is_rational();
  if (a_rad && b_rad) {
    const Radicals& r = Ext2::require(a.rad_, b.rad_);
    const Rat& A1 = r.a1sq;
    const Rat& A2 = r.a2sq;
    out.c_[0] = a.c_[0] * b.c_[0] + A1 * a.c_[1] * b.c_[1] + A2 * a.c_[2] * b.c_[2] +
                A1 * A2 * a.c_[3] * b.c_[3];
    out.c_[1] = a.c_[0] * b.c_[1] + a.c_[1] * b.c_[0] + A2 * (a.c_[2] * b.c_[3] + a.c_[3] * b.c_[2]);
    out.c_[2] = a.c_[0] * b.c_[2] + a.c_[2] * b.c_[0] + A1 * (a.c_[1] * b.c_[3] + a.c_[3] * b.c_[1]);
    out.c_[3] = a.c_[0] * b.c_[3] + a.c_[3] * b.c_[0] + a.c_[1] * b.c_[2] + a.c_[2] * b.c_[1];
  } else {
    // at most one operand carries radical coordinates
    const Ext2& rad = a_rad ? a : b;
    const Rat& q = a_rad ? b.c_[0] : a.c_[0];
    for (int i = 0; i < 4; ++i) out.c_[i] = rad.c_[i] * q;
  }
  out.rad_ = a.rad_ ? a.rad_ : b.rad_;
  if (a.rad_ && b.rad_) Ext2::require(a.rad_, b.rad_);
  return out;
}

bool operator==(const Ext2& a, const Ext2& b) {
  for (int i = 0; i < 4; ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

Ext2 Ext2::scale(const Rat& q) const {
  Ext2 out(*this);
  for (auto& c : out.c_) c *= q;
  return out;
}

double Ext2::to_double() const {
  double v = c_[0].get_d();
  if (!is_rational()) {
    const double s1 = rad_ ? std::sqrt(rad_->a1sq.get_d()) : 0.0;
    const double s2 = rad_ ? std::sqrt(rad_->a2sq.get_d()) : 0.0;
    v += c_[1].get_d() * s1 + c_[2].get_d() * s2 + c_[3].get_d() * s1 * s2;
  }
  return v;
}

std::string Ext2::str() const {
  std::ostringstream os;
  static const char* basis[4] = {"", "*a1", "*a2", "*a1*a2"};
  bool first = true;
  for (int i = 0; i < 4; ++i) {
    if (sgn(c_[i]) == 0) continue;
    if (!first) os << " + ";
    os << c_[i].get_str() << basis[i];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

Scalar Scalar::rational(const Rat& q) { return monomial(Ext2::rational(q), 0); }

Scalar Scalar::integer(long v) { return rational(Rat(v)); }

Scalar Scalar::monomial(const Ext2& e, int wpower) {
  Scalar s;
  if (!e.is_zero()) s.terms_[wpower] = e;
  return s;
}

Scalar Scalar::symbol(int power) { return monomial(Ext2::integer(1), power); }

Scalar Scalar::operator-() const {
  Scalar s;
  for (const auto& [k, v] : terms_) s.terms_[k] = -v;
  return s;
}

void Scalar::prune(int key) {
  auto it = terms_.find(key);
  if (it != terms_.end() && it->second.is_zero()) terms_.erase(it);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (const auto& [k, v] : o.terms_) {
    terms_[k] += v;
    prune(k);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (const auto& [k, v] : o.terms_) {
    terms_[k] -= v;
    prune(k);
  }
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar out;
  for (const auto& [ka, va] : a.terms_)
    for (const auto& [kb, vb] : b.terms_) {
      const int k = ka + kb;
      out.terms_[k] += va * vb;
      out.prune(k);
    }
  return out;
}

bool operator==(const Scalar& a, const Scalar& b) { return (a - b).is_zero(); }

Scalar Scalar::div_monomial(const Rat& q, int power) const {
  if (sgn(q) == 0) throw std::invalid_argument("Scalar::div_monomial: divide by zero");
  Scalar out;
  const Rat inv = Rat(1) / q;
  for (const auto& [k, v] : terms_) out.terms_[k - power] = v.scale(inv);
  return out;
}

double Scalar::eval(double wval) const {
  double v = 0;
  for (const auto& [k, e] : terms_) v += e.to_double() * std::pow(wval, k);
  return v;
}

int Scalar::min_power() const {
  if (terms_.empty()) return 0;
  return terms_.begin()->first;
}

int Scalar::max_power() const {
  if (terms_.empty()) return 0;
  return terms_.rbegin()->first;
}

std::string Scalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, e] : terms_) {
    if (!first) os << " + ";
    os << "(" << e.str() << ")";
    if (k != 0) os << "*w^" << k;
    first = false;
  }
  return os.str();
}

}  // namespace cubicalg::exact
