// Exact arithmetic in Q(zeta_L): power-basis representation modulo Phi_L.
//
// Reduction uses two facts: zeta^L = 1 (exponents wrap mod L) and
// Phi_L(zeta) = 0 (exponents in [phi(L), L) fold through a precomputed table
// of x^j mod Phi_L). The table, and Phi_L itself, are memoized per conductor.

#include "l1f/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "l1f/errors.hpp"
#include "l1f/nt.hpp"

namespace l1f {

namespace {

using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient of a by monic b in Z[x]; throws if the division is not exact.
ZPoly exact_div_monic(ZPoly a, const ZPoly& b) {
  if (b.empty() || b.back() != 1)
    throw InternalError("exact_div_monic: divisor not monic");
  if (a.size() < b.size())
    throw InternalError("exact_div_monic: degree underflow");
  ZPoly q(a.size() - b.size() + 1, 0);
  for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
    mpz_class c = a[i + b.size() - 1];
    if (c == 0) continue;
    q[i] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
  }
  trim(a);
  if (!a.empty()) throw InternalError("exact_div_monic: nonzero remainder");
  return q;
}

// Phi_L = (x^L - 1) / prod_{d | L, d < L} Phi_d, divisors taken in
// increasing order so every factor is already available.
ZPoly cyclotomic_coeffs(long L) {
  std::map<long, ZPoly> phi_of;
  for (long d : divisors(L)) {
    ZPoly num(d + 1, 0);
    num[0] = -1;
    num[d] = 1;
    for (long e : divisors(d)) {
      if (e < d) num = exact_div_monic(std::move(num), phi_of.at(e));
    }
    if (num.empty() || num.back() != 1)
      throw InternalError("cyclotomic polynomial not monic");
    phi_of.emplace(d, std::move(num));
  }
  return phi_of.at(L);
}

struct FieldTable {
  long conductor = 1;
  long phi = 1;
  ZPoly minpoly;                    // Phi_L
  std::vector<ZPoly> root_pow;      // root_pow[j] = x^j mod Phi_L, 0 <= j < L
};

// Memoized per conductor. Entries are immutable once built and never erased,
// so returned references stay valid after the lock is released.
const FieldTable& field_table(long L) {
  static std::mutex mu;
  static std::map<long, std::unique_ptr<const FieldTable>> cache;
  if (L < 1) throw DomainError("conductor must be positive");

  std::scoped_lock lock(mu);
  auto it = cache.find(L);
  if (it != cache.end()) return *it->second;

  auto t = std::make_unique<FieldTable>();
  t->conductor = L;
  t->minpoly = cyclotomic_coeffs(L);
  t->phi = static_cast<long>(t->minpoly.size()) - 1;
  t->root_pow.resize(L);
  for (long j = 0; j < L; ++j) {
    if (j < t->phi) {
      ZPoly row(j + 1, 0);
      row[j] = 1;
      t->root_pow[j] = std::move(row);
    } else {
      // x * previous row, with the coefficient at x^phi eliminated via
      // x^phi = -(Phi_L - x^phi).
      ZPoly row(t->phi + 1, 0);
      const ZPoly& prev = t->root_pow[j - 1];
      for (std::size_t k = 0; k < prev.size(); ++k) row[k + 1] = prev[k];
      mpz_class lead = row[t->phi];
      row.resize(t->phi);
      if (lead != 0) {
        for (long k = 0; k < t->phi; ++k) row[k] -= lead * t->minpoly[k];
      }
      trim(row);
      t->root_pow[j] = std::move(row);
    }
  }
  auto [pos, inserted] = cache.emplace(L, std::move(t));
  (void)inserted;
  return *pos->second;
}

using QPoly = std::vector<Rational>;

long degree(const QPoly& p) {
  for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i) {
    if (p[i] != 0) return i;
  }
  return -1;
}

// Folds an arbitrary-degree coefficient vector (indexed by zeta exponent)
// into the canonical phi(L)-length power basis.
std::vector<Rational> reduce_to_basis(const QPoly& raw, const FieldTable& t) {
  std::vector<Rational> out(t.phi);
  for (std::size_t e = 0; e < raw.size(); ++e) {
    if (raw[e] == 0) continue;
    const long r = static_cast<long>(e % t.conductor);
    if (r < t.phi) {
      out[r] += raw[e];
    } else {
      const ZPoly& row = t.root_pow[r];
      for (std::size_t k = 0; k < row.size(); ++k) {
        if (row[k] != 0) out[k] += raw[e] * row[k];
      }
    }
  }
  return out;
}

}  // namespace

CycPoly cyclotomic_poly(long L) {
  if (L < 1) throw DomainError("cyclotomic_poly: L must be positive");
  return CycPoly{field_table(L).minpoly};
}

CycElem::CycElem() : conductor_(1), coeffs_(1) {}

CycElem::CycElem(long conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {}

CycElem CycElem::zero(long conductor) {
  const FieldTable& t = field_table(conductor);
  return CycElem(conductor, std::vector<Rational>(t.phi));
}

CycElem CycElem::one(long conductor) {
  return from_rational(Rational(1), conductor);
}

CycElem CycElem::from_rational(const Rational& r, long conductor) {
  const FieldTable& t = field_table(conductor);
  std::vector<Rational> c(t.phi);
  c[0] = r;
  return CycElem(conductor, std::move(c));
}

CycElem CycElem::root(long conductor, long k) {
  const FieldTable& t = field_table(conductor);
  long e = k % conductor;
  if (e < 0) e += conductor;
  QPoly raw(e + 1);
  raw[e] = 1;
  return CycElem(conductor, reduce_to_basis(raw, t));
}

CycElem CycElem::from_coeffs(long conductor, std::vector<Rational> coeffs) {
  const FieldTable& t = field_table(conductor);
  if (static_cast<long>(coeffs.size()) != t.phi)
    throw DomainError("from_coeffs: expected phi(L) coefficients");
  return CycElem(conductor, std::move(coeffs));
}

bool CycElem::is_zero() const {
  for (const Rational& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycElem::is_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) return false;
  }
  return true;
}

std::optional<Rational> CycElem::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return coeffs_[0];
}

namespace {
void require_same_conductor(const CycElem& a, const CycElem& b,
                            const char* op) {
  if (a.conductor() != b.conductor()) {
    throw ConductorMismatch(std::string(op) + ": conductors " +
                            std::to_string(a.conductor()) + " and " +
                            std::to_string(b.conductor()) +
                            " differ; lift explicitly");
  }
}
}  // namespace

CycElem CycElem::operator+(const CycElem& o) const {
  require_same_conductor(*this, o, "operator+");
  std::vector<Rational> c(coeffs_);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] += o.coeffs_[k];
  return CycElem(conductor_, std::move(c));
}

CycElem CycElem::operator-(const CycElem& o) const {
  require_same_conductor(*this, o, "operator-");
  std::vector<Rational> c(coeffs_);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] -= o.coeffs_[k];
  return CycElem(conductor_, std::move(c));
}

CycElem CycElem::operator*(const CycElem& o) const {
  require_same_conductor(*this, o, "operator*");
  const FieldTable& t = field_table(conductor_);
  QPoly raw(2 * t.phi - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      if (o.coeffs_[j] != 0) raw[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return CycElem(conductor_, reduce_to_basis(raw, t));
}

CycElem CycElem::operator-() const {
  std::vector<Rational> c(coeffs_);
  for (Rational& x : c) x = -x;
  return CycElem(conductor_, std::move(c));
}

CycElem& CycElem::operator+=(const CycElem& o) { return *this = *this + o; }
CycElem& CycElem::operator-=(const CycElem& o) { return *this = *this - o; }
CycElem& CycElem::operator*=(const CycElem& o) { return *this = *this * o; }

CycElem CycElem::operator*(const Rational& r) const {
  std::vector<Rational> c(coeffs_);
  for (Rational& x : c) x *= r;
  return CycElem(conductor_, std::move(c));
}

CycElem CycElem::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic element");
  const FieldTable& t = field_table(conductor_);

  // Extended Euclid on (Phi_L, a) over Q[x]. Phi_L is irreducible, so the
  // gcd is a nonzero constant c with u*a + v*Phi_L = c; the inverse is u/c.
  QPoly r0(t.minpoly.size());
  for (std::size_t k = 0; k < t.minpoly.size(); ++k) r0[k] = t.minpoly[k];
  QPoly r1(coeffs_);
  QPoly t0 = {Rational(0)};
  QPoly t1 = {Rational(1)};

  while (degree(r1) > 0) {
    long dr0 = degree(r0);
    long dr1 = degree(r1);
    QPoly quot(dr0 - dr1 + 1);
    while (dr0 >= dr1) {
      Rational c = r0[dr0] / r1[dr1];
      quot[dr0 - dr1] = c;
      for (long k = 0; k <= dr1; ++k) r0[dr0 - dr1 + k] -= c * r1[k];
      while (dr0 >= 0 && r0[dr0] == 0) --dr0;
    }
    std::swap(r0, r1);
    // t_new = t0 - quot * t1
    QPoly tn(std::max<std::size_t>(t0.size(), quot.size() + t1.size()));
    for (std::size_t k = 0; k < t0.size(); ++k) tn[k] = t0[k];
    for (std::size_t i = 0; i < quot.size(); ++i) {
      if (quot[i] == 0) continue;
      for (std::size_t j = 0; j < t1.size(); ++j) tn[i + j] -= quot[i] * t1[j];
    }
    t0 = std::move(t1);
    t1 = std::move(tn);
  }

  long d = degree(r1);
  if (d != 0)
    throw InternalError("inverse: gcd with irreducible Phi_L not constant");
  const Rational c = r1[0];
  std::vector<Rational> out(t.phi);
  for (std::size_t k = 0; k < t1.size() && k < out.size(); ++k)
    out[k] = t1[k] / c;
  return CycElem(conductor_, std::move(out));
}

CycElem CycElem::conj() const {
  const FieldTable& t = field_table(conductor_);
  QPoly raw(conductor_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    raw[(conductor_ - static_cast<long>(k)) % conductor_] += coeffs_[k];
  }
  return CycElem(conductor_, reduce_to_basis(raw, t));
}

CycElem CycElem::lifted(long new_conductor) const {
  if (new_conductor % conductor_ != 0) {
    throw ConductorMismatch("lifted: " + std::to_string(conductor_) +
                            " does not divide " +
                            std::to_string(new_conductor));
  }
  if (new_conductor == conductor_) return *this;
  const FieldTable& t = field_table(new_conductor);
  const long stride = new_conductor / conductor_;
  QPoly raw(new_conductor);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) raw[static_cast<long>(k) * stride] += coeffs_[k];
  }
  return CycElem(new_conductor, reduce_to_basis(raw, t));
}

CycElem CycElem::times_root(long k) const {
  const FieldTable& t = field_table(conductor_);
  long e = k % conductor_;
  if (e < 0) e += conductor_;
  QPoly raw(conductor_ + t.phi);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] != 0) raw[j + e] += coeffs_[j];
  }
  return CycElem(conductor_, reduce_to_basis(raw, t));
}

bool CycElem::operator==(const CycElem& o) const {
  require_same_conductor(*this, o, "operator==");
  return coeffs_ == o.coeffs_;
}

Rational CycElem::coeff_abs_sum() const {
  Rational s(0);
  for (const Rational& c : coeffs_) s += abs(c);
  return s;
}

std::string CycElem::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!first) os << " + ";
    os << to_string(coeffs_[k]);
    if (k > 0) os << "*z^" << k;
    first = false;
  }
  if (first) os << "0";
  os << " (conductor " << conductor_ << ")";
  return os.str();
}

}  // namespace l1f
