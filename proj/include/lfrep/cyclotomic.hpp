#pragma once

#include <vector>

#include "lfrep/poly.hpp"

namespace lfrep {

/// m-th cyclotomic polynomial, coefficients from the constant term up.
std::vector<BigInt> cyclotomic_polynomial(unsigned m);

/// Element of Z[zeta_m], stored as a residue modulo Phi_m.
class CyclotomicInt {
 public:
  explicit CyclotomicInt(unsigned m);

  unsigned order() const { return m_; }
  /// Adds c * zeta^e (e taken mod m).
  void add_power(unsigned e, const BigInt& c);
  CyclotomicInt& operator+=(const CyclotomicInt& o);
  /// Coordinates in the basis 1, zeta, ..., zeta^{phi(m)-1}.
  std::vector<BigInt> coords() const;
  /// True when every non-constant coordinate vanishes.
  bool is_rational() const;
  /// Constant coordinate; throws InternalError unless is_rational().
  BigInt rational_value() const;

 private:
  unsigned m_;
  std::vector<BigInt> raw_;  // coefficients of zeta^0..zeta^{m-1}, unreduced
};

}  // namespace lfrep
