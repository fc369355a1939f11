#include "lfrep/poly.hpp"

#include <algorithm>
#include <vector>

#include "lfrep/errors.hpp"

namespace lfrep {

namespace {

// Appends one term "c*m" to a running sum, handling signs and unit coefficients.
void append_term(std::string& out, const BigInt& c, const std::string& mono) {
  BigInt mag = abs(c);
  if (out.empty()) {
    if (sgn(c) < 0) out += "-";
  } else {
    out += sgn(c) < 0 ? " - " : " + ";
  }
  if (mono.empty()) {
    out += mag.get_str();
  } else if (mag == 1) {
    out += mono;
  } else {
    out += mag.get_str() + "*" + mono;
  }
}

std::string power(std::string_view var, int e) {
  if (e == 0) return "";
  std::string s(var);
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

}  // namespace

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt ipow(const BigInt& base, unsigned e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_[0] = c;
}

LaurentPoly::LaurentPoly(const BigInt& c) {
  if (c != 0) terms_[0] = c;
}

LaurentPoly LaurentPoly::monomial(const BigInt& c, int exponent) {
  LaurentPoly p;
  if (c != 0) p.terms_[exponent] = c;
  return p;
}

void LaurentPoly::add_term(int exponent, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int LaurentPoly::degree() const {
  if (terms_.empty()) throw InvalidArgument("degree of the zero polynomial");
  return terms_.rbegin()->first;
}

int LaurentPoly::low_degree() const {
  if (terms_.empty()) throw InvalidArgument("low degree of the zero polynomial");
  return terms_.begin()->first;
}

BigInt LaurentPoly::leading_coefficient() const {
  return terms_.empty() ? BigInt(0) : terms_.rbegin()->second;
}

bool LaurentPoly::is_monic() const { return !terms_.empty() && terms_.rbegin()->second == 1; }

bool LaurentPoly::is_polynomial() const { return terms_.empty() || terms_.begin()->first >= 0; }

bool LaurentPoly::has_nonnegative_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return sgn(t.second) > 0; });
}

BigInt LaurentPoly::evaluate(const BigInt& at) const {
  if (!is_polynomial()) throw InvalidArgument("cannot evaluate a Laurent polynomial at an integer");
  BigInt acc = 0;
  for (const auto& [e, c] : terms_) acc += c * ipow(at, static_cast<unsigned>(e));
  return acc;
}

LaurentPoly LaurentPoly::compose(const LaurentPoly& x) const {
  if (!is_polynomial()) throw InvalidArgument("composition requires a polynomial outer function");
  LaurentPoly acc;
  // Horner from the top degree down.
  if (terms_.empty()) return acc;
  for (int e = degree(); e >= 0; --e) {
    acc = acc * x + LaurentPoly(coeff(e));
  }
  return acc;
}

LaurentPoly LaurentPoly::invert_variable() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_[-e] = c;
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly r;
  for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
  return r;
}

std::string LaurentPoly::to_string(std::string_view var) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) append_term(out, it->second, power(var, it->first));
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw InvalidArgument("division by the zero polynomial");
  if (a.is_zero()) return {};
  // Long division on the top terms; Laurent shifts make the lower bound explicit.
  LaurentPoly rem = a;
  LaurentPoly quo;
  const int bdeg = b.degree();
  const int blow = b.low_degree();
  const BigInt& blead = b.terms().rbegin()->second;
  const int qlow = a.low_degree() - blow;
  while (!rem.is_zero()) {
    const int shift = rem.degree() - bdeg;
    if (shift < qlow) throw InternalError("inexact polynomial division");
    const BigInt& rlead = rem.terms().rbegin()->second;
    if (!mpz_divisible_p(rlead.get_mpz_t(), blead.get_mpz_t())) throw InternalError("inexact polynomial division");
    BigInt c = rlead / blead;
    LaurentPoly t = LaurentPoly::monomial(c, shift);
    quo += t;
    rem -= t * b;
  }
  return quo;
}

// ---------------------------------------------------------------------------
// BiPoly

BiPoly::BiPoly(long c) {
  if (c != 0) terms_[{0, 0}] = c;
}

BiPoly::BiPoly(const BigInt& c) {
  if (c != 0) terms_[{0, 0}] = c;
}

BiPoly BiPoly::from_first(const LaurentPoly& p) {
  BiPoly r;
  for (const auto& [e, c] : p.terms()) r.terms_[{e, 0}] = c;
  return r;
}

BiPoly BiPoly::monomial(const BigInt& c, int e1, int e2) {
  BiPoly r;
  if (c != 0) r.terms_[{e1, e2}] = c;
  return r;
}

void BiPoly::add_term(Key k, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt BiPoly::coeff(int e1, int e2) const {
  auto it = terms_.find({e1, e2});
  return it == terms_.end() ? BigInt(0) : it->second;
}

int BiPoly::min_first() const {
  if (terms_.empty()) throw InvalidArgument("exponent bound of the zero polynomial");
  int m = terms_.begin()->first.first;
  for (const auto& t : terms_) m = std::min(m, t.first.first);
  return m;
}

int BiPoly::max_first() const {
  if (terms_.empty()) throw InvalidArgument("exponent bound of the zero polynomial");
  int m = terms_.begin()->first.first;
  for (const auto& t : terms_) m = std::max(m, t.first.first);
  return m;
}

int BiPoly::min_second() const {
  if (terms_.empty()) throw InvalidArgument("exponent bound of the zero polynomial");
  int m = terms_.begin()->first.second;
  for (const auto& t : terms_) m = std::min(m, t.first.second);
  return m;
}

int BiPoly::max_second() const {
  if (terms_.empty()) throw InvalidArgument("exponent bound of the zero polynomial");
  int m = terms_.begin()->first.second;
  for (const auto& t : terms_) m = std::max(m, t.first.second);
  return m;
}

LaurentPoly BiPoly::coeff_of_second(int e2) const {
  LaurentPoly r;
  for (const auto& [k, c] : terms_)
    if (k.second == e2) r += LaurentPoly::monomial(c, k.first);
  return r;
}

BigInt BiPoly::content() const {
  BigInt g = 0;
  for (const auto& t : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_mpz_t());
  return g;
}

BiPoly BiPoly::shifted(int a, int b) const {
  BiPoly r;
  for (const auto& [k, c] : terms_) r.terms_[{k.first + a, k.second + b}] = c;
  return r;
}

BiPoly BiPoly::invert_variables() const {
  BiPoly r;
  for (const auto& [k, c] : terms_) r.terms_[{-k.first, -k.second}] = c;
  return r;
}

BiPoly BiPoly::scale_second(int k) const {
  BiPoly r;
  for (const auto& [key, c] : terms_) r.terms_[{key.first + k * key.second, key.second}] = c;
  return r;
}

LaurentPoly BiPoly::evaluate(const LaurentPoly& x1, const LaurentPoly& x2) const {
  LaurentPoly r;
  for (const auto& [k, c] : terms_) {
    if (k.first < 0 || k.second < 0) throw InvalidArgument("evaluate requires non-negative exponents");
    r += LaurentPoly(c) * x1.pow(static_cast<unsigned>(k.first)) * x2.pow(static_cast<unsigned>(k.second));
  }
  return r;
}

BiPoly BiPoly::divided_by(const BigInt& d) const {
  BiPoly r;
  for (const auto& [k, c] : terms_) {
    if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) throw InternalError("inexact coefficient division");
    r.terms_[k] = c / d;
  }
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  return r;
}

BiPoly operator-(const BiPoly& a) {
  BiPoly r;
  for (const auto& [k, c] : a.terms_) r.terms_[k] = -c;
  return r;
}

std::string BiPoly::to_string(std::string_view v1, std::string_view v2, TermOrder order) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Key, BigInt>> ts(terms_.begin(), terms_.end());
  std::sort(ts.begin(), ts.end(), [order](const auto& a, const auto& b) {
    const Key& x = a.first;
    const Key& y = b.first;
    if (order == TermOrder::graded) {
      if (x.first + x.second != y.first + y.second) return x.first + x.second > y.first + y.second;
      return x.first > y.first;
    }
    if (x.second != y.second) return x.second > y.second;
    return x.first > y.first;
  });
  std::string out;
  for (const auto& [k, c] : ts) {
    std::string mono = power(v1, k.first);
    std::string p2 = power(v2, k.second);
    if (!p2.empty()) mono = mono.empty() ? p2 : mono + "*" + p2;
    append_term(out, c, mono);
  }
  return out;
}

}  // namespace lfrep
