#include "l1f/periodic.hpp"

#include "l1f/errors.hpp"
#include "l1f/nt.hpp"

namespace l1f {

namespace {

// Common field for q values: lcm of q and every value conductor.
std::vector<CycElem> lift_all(long q, std::vector<CycElem> values,
                              long* conductor_out) {
  long W = q;
  for (const CycElem& v : values) W = lcm_long(W, v.conductor());
  for (CycElem& v : values) v = v.lifted(W);
  *conductor_out = W;
  return values;
}

long index_of(long n, long q) {
  long r = n % q;
  if (r <= 0) r += q;
  return r - 1;  // residue r in 1..q maps to slot r-1
}

}  // namespace

PeriodicFunction PeriodicFunction::make(long q, std::vector<CycElem> values) {
  if (q < 1) throw DomainError("period must be positive");
  if (static_cast<long>(values.size()) != q)
    throw DomainError("expected exactly q values");
  long W = q;
  values = lift_all(q, std::move(values), &W);
  return PeriodicFunction(q, W, std::move(values));
}

PeriodicFunction PeriodicFunction::make_rational(
    long q, const std::vector<Rational>& values) {
  std::vector<CycElem> v;
  v.reserve(values.size());
  for (const Rational& r : values) v.push_back(CycElem::from_rational(r));
  return make(q, std::move(v));
}

PeriodicFunction PeriodicFunction::zero(long q) {
  return make(q, std::vector<CycElem>(q));
}

const CycElem& PeriodicFunction::value(long a) const {
  if (a < 1 || a > q_) throw DomainError("residue index out of range 1..q");
  return values_[a - 1];
}

const CycElem& PeriodicFunction::at(long n) const {
  return values_[index_of(n, q_)];
}

PeriodicFunction PeriodicFunction::lifted(long new_conductor) const {
  if (new_conductor % q_ != 0)
    throw DomainError("lifted: conductor must stay a multiple of the period");
  std::vector<CycElem> v;
  v.reserve(values_.size());
  for (const CycElem& x : values_) v.push_back(x.lifted(new_conductor));
  return PeriodicFunction(q_, new_conductor, std::move(v));
}

PeriodicFunction PeriodicFunction::with_period(long m) const {
  if (m % q_ != 0) throw DomainError("with_period: new period must be a multiple");
  std::vector<CycElem> v;
  v.reserve(m);
  for (long n = 1; n <= m; ++n) v.push_back(at(n));
  return PeriodicFunction::make(m, std::move(v));
}

bool PeriodicFunction::is_zero() const {
  for (const CycElem& v : values_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

PeriodicFunction PeriodicFunction::operator+(const PeriodicFunction& o) const {
  const long m = lcm_long(q_, o.q_);
  const PeriodicFunction a = with_period(m);
  const PeriodicFunction b = o.with_period(m);
  const long W = lcm_long(a.conductor_, b.conductor_);
  std::vector<CycElem> v;
  v.reserve(m);
  for (long i = 0; i < m; ++i)
    v.push_back(a.values_[i].lifted(W) + b.values_[i].lifted(W));
  return PeriodicFunction(m, W, std::move(v));
}

PeriodicFunction PeriodicFunction::scaled(const CycElem& lambda) const {
  const long W = lcm_long(conductor_, lambda.conductor());
  const CycElem l = lambda.lifted(W);
  std::vector<CycElem> v;
  v.reserve(values_.size());
  for (const CycElem& x : values_) v.push_back(x.lifted(W) * l);
  return PeriodicFunction(q_, W, std::move(v));
}

bool PeriodicFunction::operator==(const PeriodicFunction& o) const {
  if (q_ != o.q_) return false;
  const long W = lcm_long(conductor_, o.conductor_);
  for (long i = 0; i < q_; ++i) {
    if (values_[i].lifted(W) != o.values_[i].lifted(W)) return false;
  }
  return true;
}

SpectralFunction SpectralFunction::make(long q, std::vector<CycElem> values) {
  if (q < 1) throw DomainError("period must be positive");
  if (static_cast<long>(values.size()) != q)
    throw DomainError("expected exactly q spectral values");
  long W = q;
  values = lift_all(q, std::move(values), &W);
  return SpectralFunction(q, W, std::move(values));
}

const CycElem& SpectralFunction::value(long x) const {
  if (x < 1 || x > q_) throw DomainError("spectral index out of range 1..q");
  return values_[x - 1];
}

const CycElem& SpectralFunction::at(long n) const {
  return values_[index_of(n, q_)];
}

SpectralFunction SpectralFunction::lifted(long new_conductor) const {
  if (new_conductor % q_ != 0)
    throw DomainError("lifted: conductor must stay a multiple of the period");
  std::vector<CycElem> v;
  v.reserve(values_.size());
  for (const CycElem& x : values_) v.push_back(x.lifted(new_conductor));
  return SpectralFunction(q_, new_conductor, std::move(v));
}

bool SpectralFunction::is_zero() const {
  for (const CycElem& v : values_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

bool SpectralFunction::operator==(const SpectralFunction& o) const {
  if (q_ != o.q_) return false;
  const long W = lcm_long(conductor_, o.conductor_);
  for (long i = 0; i < q_; ++i) {
    if (values_[i].lifted(W) != o.values_[i].lifted(W)) return false;
  }
  return true;
}

bool mean_is_zero(const PeriodicFunction& f) {
  CycElem s = CycElem::zero(f.conductor());
  for (const CycElem& v : f.values()) s += v;
  return s.is_zero();
}

std::pair<PeriodicFunction, PeriodicFunction> parity_decompose(
    const PeriodicFunction& f) {
  const long q = f.period();
  const Rational half = make_rational(1, 2);
  std::vector<CycElem> odd, even;
  odd.reserve(q);
  even.reserve(q);
  for (long a = 1; a <= q; ++a) {
    const CycElem& fa = f.value(a);
    const CycElem& fma = f.at(q - a);
    odd.push_back((fa - fma) * half);
    even.push_back((fa + fma) * half);
  }
  return {PeriodicFunction::make(q, std::move(odd)),
          PeriodicFunction::make(q, std::move(even))};
}

Parity parity_of(const PeriodicFunction& f) {
  const long q = f.period();
  bool even = true, odd = true;
  for (long a = 1; a <= q; ++a) {
    const CycElem& fa = f.value(a);
    const CycElem& fma = f.at(q - a);
    if (fma != fa) even = false;
    if (fma != -fa) odd = false;
    if (!even && !odd) return Parity::Neither;
  }
  if (even && odd) return Parity::Zero;
  return even ? Parity::Even : Parity::Odd;
}

SpectralFunction dft(const PeriodicFunction& f) {
  const long q = f.period();
  const long W = f.conductor();  // q | W by construction
  const long stride = W / q;
  const Rational inv_q = make_rational(1, q);
  std::vector<CycElem> out;
  out.reserve(q);
  for (long x = 1; x <= q; ++x) {
    CycElem acc = CycElem::zero(W);
    for (long a = 1; a <= q; ++a) {
      const CycElem& fa = f.value(a);
      if (fa.is_zero()) continue;
      long e = ((-a * x) % q + q) % q;
      acc += fa.times_root(e * stride);
    }
    out.push_back(acc * inv_q);
  }
  return SpectralFunction::make(q, std::move(out));
}

PeriodicFunction idft(const SpectralFunction& g) {
  const long q = g.period();
  const long W = g.conductor();
  const long stride = W / q;
  std::vector<CycElem> out;
  out.reserve(q);
  for (long n = 1; n <= q; ++n) {
    CycElem acc = CycElem::zero(W);
    for (long x = 1; x <= q; ++x) {
      const CycElem& gx = g.value(x);
      if (gx.is_zero()) continue;
      long e = ((x * n) % q) % q;
      acc += gx.times_root(e * stride);
    }
    out.push_back(acc);
  }
  return PeriodicFunction::make(q, std::move(out));
}

PeriodicFunction as_periodic(const SpectralFunction& g) {
  return PeriodicFunction::make(g.period(), g.values());
}

}  // namespace l1f
