#pragma once

#include <map>
#include <ostream>
#include <string>

#include "lfrep/poly.hpp"

namespace lfrep {

/// Rational function in (q, T) of the form N(q, T) / prod_c (1 - q^c T)^{m_c}
/// with N an integer Laurent polynomial. Every generating function in this
/// library has such a denominator, and keeping it factored makes
/// normalization canonical: factors dividing N are cancelled, and the
/// expanded denominator always has constant term 1.
class RatFunQT {
 public:
  /// Exponent c -> multiplicity of (1 - q^c T).
  using Factors = std::map<int, int>;

  RatFunQT() = default;
  RatFunQT(long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  RatFunQT(BiPoly num) : num_(std::move(num)) {}  // NOLINT(google-explicit-constructor)
  RatFunQT(BiPoly num, Factors den);

  /// 1 / (1 - q^c T)^m.
  static RatFunQT geometric(int c, int m = 1);

  const BiPoly& numerator() const { return num_; }
  const Factors& factors() const { return den_; }
  BiPoly expanded_denominator() const;
  bool is_zero() const { return num_.is_zero(); }

  /// Highest T power in the numerator (after normalization).
  int numerator_t_degree() const;
  /// T-degree of the denominator, i.e. the number of linear factors.
  int denominator_t_degree() const;

  /// T -> q^k T.
  RatFunQT scale_t(int k) const;
  /// (q, T) -> (q^{-1}, T^{-1}).
  RatFunQT inverted() const;
  /// Coefficient of T^d in the expansion at T = 0. Throws InvalidArgument
  /// when the numerator carries a negative power of T.
  LaurentPoly series_coefficient(int d) const;

  RatFunQT& operator+=(const RatFunQT& o);
  RatFunQT& operator-=(const RatFunQT& o);
  RatFunQT& operator*=(const RatFunQT& o);
  friend RatFunQT operator+(RatFunQT a, const RatFunQT& b) { return a += b; }
  friend RatFunQT operator-(RatFunQT a, const RatFunQT& b) { return a -= b; }
  friend RatFunQT operator*(RatFunQT a, const RatFunQT& b) { return a *= b; }
  friend RatFunQT operator-(const RatFunQT& a) { return RatFunQT(-a.num_, a.den_); }
  /// Cross-multiplied comparison of the expanded forms.
  friend bool operator==(const RatFunQT& a, const RatFunQT& b);

  /// `num / den`, both expanded; negative exponents in the numerator are
  /// moved into the denominator as a monomial.
  std::string to_string() const;
  /// Same numerator with the denominator as `(1-T)^2*(1-q*T)`.
  std::string to_factored_string() const;
  /// Numerator and expanded denominator with negative exponents cleared.
  std::pair<BiPoly, BiPoly> display_pair() const;

 private:
  void normalize();
  BiPoly num_;
  Factors den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunQT& f);

/// Exact quotient of p by (1 - q^c T) when it divides, else false.
bool divide_by_linear(const BiPoly& p, int c, BiPoly& quotient);

}  // namespace lfrep
