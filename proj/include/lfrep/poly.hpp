#pragma once

#include <gmpxx.h>

#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace lfrep {

using BigInt = mpz_class;

/// Integer Laurent polynomial in one variable (q by default) with
/// arbitrary-precision coefficients. Zero coefficients are never stored, so
/// structural equality is mathematical equality.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const BigInt& c);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const BigInt& c, int exponent);
  /// The variable itself raised to `exponent`.
  static LaurentPoly var(int exponent = 1) { return monomial(1, exponent); }

  const std::map<int, BigInt>& terms() const { return terms_; }
  BigInt coeff(int exponent) const;
  bool is_zero() const { return terms_.empty(); }
  /// Highest exponent; throws InvalidArgument on the zero polynomial.
  int degree() const;
  /// Lowest exponent; throws InvalidArgument on the zero polynomial.
  int low_degree() const;
  BigInt leading_coefficient() const;
  bool is_monic() const;
  /// True when no negative exponent is present.
  bool is_polynomial() const;
  bool has_nonnegative_coefficients() const;

  /// Value at an integer point; requires is_polynomial().
  BigInt evaluate(const BigInt& at) const;
  /// Composition p(x(q)) for a polynomial p and an arbitrary Laurent x.
  LaurentPoly compose(const LaurentPoly& x) const;
  /// q -> q^{-1}.
  LaurentPoly invert_variable() const;
  /// Multiplication by q^k.
  LaurentPoly shifted(int k) const;
  LaurentPoly pow(unsigned n) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Descending powers with explicit `*`, e.g. `q^2 + 6*q + 5`.
  std::string to_string(std::string_view var = "q") const;

 private:
  void add_term(int exponent, const BigInt& c);
  std::map<int, BigInt> terms_;
};

/// Exact quotient a / b. Throws InternalError when b does not divide a.
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// Display order of bivariate terms.
enum class TermOrder {
  second_major,  // descending in the second variable, then the first
  graded,        // descending total degree, then the first variable
};

/// Integer Laurent polynomial in two variables. Keys are (first exponent,
/// second exponent); by convention the pair is (q, T) for generating
/// functions and (x, y) for Tutte polynomials.
class BiPoly {
 public:
  using Key = std::pair<int, int>;

  BiPoly() = default;
  BiPoly(long c);  // NOLINT(google-explicit-constructor)
  BiPoly(const BigInt& c);  // NOLINT(google-explicit-constructor)
  /// Embeds a polynomial in the first variable.
  static BiPoly from_first(const LaurentPoly& p);
  static BiPoly monomial(const BigInt& c, int e1, int e2);

  const std::map<Key, BigInt>& terms() const { return terms_; }
  BigInt coeff(int e1, int e2) const;
  bool is_zero() const { return terms_.empty(); }

  int min_first() const;
  int max_first() const;
  int min_second() const;
  int max_second() const;
  /// Collects the coefficient of (second variable)^e2 as a polynomial in the first.
  LaurentPoly coeff_of_second(int e2) const;
  /// gcd of the absolute values of all coefficients (0 for the zero polynomial).
  BigInt content() const;

  /// Multiplies by x1^a x2^b.
  BiPoly shifted(int a, int b) const;
  /// (x1, x2) -> (x1^{-1}, x2^{-1}).
  BiPoly invert_variables() const;
  /// x2 -> x1^k x2.
  BiPoly scale_second(int k) const;
  /// Substitutes univariate polynomials for both variables.
  LaurentPoly evaluate(const LaurentPoly& x1, const LaurentPoly& x2) const;
  /// Divides every coefficient by c; throws InternalError if inexact.
  BiPoly divided_by(const BigInt& c) const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string(std::string_view v1 = "q", std::string_view v2 = "T",
                        TermOrder order = TermOrder::second_major) const;

 private:
  void add_term(Key k, const BigInt& c);
  std::map<Key, BigInt> terms_;
};

BigInt binomial(unsigned n, unsigned k);
BigInt ipow(const BigInt& base, unsigned e);

}  // namespace lfrep
