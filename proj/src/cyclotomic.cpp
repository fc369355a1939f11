#include "lfrep/cyclotomic.hpp"

#include "lfrep/errors.hpp"

namespace lfrep {

namespace {

using Coeffs = std::vector<BigInt>;

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial b; the quotient goes to `quot` if given.
Coeffs reduce(Coeffs a, const Coeffs& b, Coeffs* quot = nullptr) {
  trim(a);
  const std::size_t db = b.size() - 1;
  if (quot) quot->assign(a.size() >= b.size() ? a.size() - db : 0, 0);
  while (a.size() >= b.size()) {
    const BigInt lead = a.back();
    const std::size_t shift = a.size() - b.size();
    if (quot) (*quot)[shift] = lead;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= lead * b[i];
    trim(a);
  }
  return a;
}

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(unsigned m) {
  if (m == 0) throw InvalidArgument("cyclotomic order must be positive");
  // x^m - 1 divided by Phi_d for every proper divisor d.
  Coeffs f(m + 1, 0);
  f[0] = -1;
  f[m] = 1;
  for (unsigned d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    Coeffs q;
    const Coeffs r = reduce(f, cyclotomic_polynomial(d), &q);
    if (!r.empty()) throw InternalError("cyclotomic division is not exact");
    f = q;
  }
  trim(f);
  return f;
}

CyclotomicInt::CyclotomicInt(unsigned m) : m_(m), raw_(m, 0) {
  if (m == 0) throw InvalidArgument("cyclotomic order must be positive");
}

void CyclotomicInt::add_power(unsigned e, const BigInt& c) { raw_[e % m_] += c; }

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& o) {
  if (o.m_ != m_) throw InvalidArgument("cyclotomic orders differ");
  for (unsigned i = 0; i < m_; ++i) raw_[i] += o.raw_[i];
  return *this;
}

std::vector<BigInt> CyclotomicInt::coords() const {
  const Coeffs phi = cyclotomic_polynomial(m_);
  Coeffs r = reduce(raw_, phi);
  r.resize(phi.size() - 1, 0);
  return r;
}

bool CyclotomicInt::is_rational() const {
  const auto c = coords();
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i] != 0) return false;
  return true;
}

BigInt CyclotomicInt::rational_value() const {
  if (!is_rational()) throw InternalError("cyclotomic sum is not a rational integer");
  return coords()[0];
}

}  // namespace lfrep
