#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lfrep/limits.hpp"
#include "lfrep/linalg.hpp"

namespace lfrep {

/// Finite commutative algebra over F_p given by structure constants.
///
/// Elements are encoded as integers sum_i c_i p^i over the coordinates in
/// the F_p basis, so 0 is zero and iteration over [0, size()) visits every
/// element. All constructors produce local algebras whose residue field is
/// recorded together with a discrete logarithm table.
class FiniteAlgebra {
 public:
  using Elem = std::uint32_t;

  static FiniteAlgebra prime_field(Residue p);
  /// F_p[x]/(f) for a monic irreducible f given from the constant term up.
  static FiniteAlgebra field_extension(Residue p, const std::vector<Residue>& modulus);
  /// F_{p^k} using the smallest monic irreducible of degree k.
  static FiniteAlgebra fq(Residue p, int k = 1);
  /// base[t]/(t^d) for a field base.
  static FiniteAlgebra truncated(const FiniteAlgebra& base, int d);
  /// r[e]/(e^2).
  static FiniteAlgebra dual_numbers(const FiniteAlgebra& r);
  /// base[t_1..t_n]/(t_1..t_n)^2 for a field base.
  static FiniteAlgebra square_zero(const FiniteAlgebra& base, int n);

  const std::string& name() const { return name_; }
  Residue characteristic() const { return p_; }
  int dim() const { return dim_; }
  std::uint64_t size() const { return size_; }
  bool is_field() const { return residue_ == nullptr; }
  /// Size of the field k the algebra was built over.
  std::uint64_t base_field_size() const { return base_size_; }
  /// The residue field R/m (the algebra itself when it is a field).
  const FiniteAlgebra& residue_field() const { return residue_ ? *residue_ : *this; }
  std::uint64_t residue_size() const { return residue_field().size(); }
  /// Image of x in the residue field, as a residue-field element code.
  Elem residue(Elem x) const;

  Elem zero() const { return 0; }
  Elem one() const { return one_; }
  Elem from_coords(const std::vector<Residue>& c) const;
  std::vector<Residue> coords(Elem x) const;
  Elem add(Elem x, Elem y) const;
  Elem sub(Elem x, Elem y) const;
  Elem neg(Elem x) const;
  Elem mul(Elem x, Elem y) const;
  /// Residue r in F_p embedded as r * 1.
  Elem scalar(Residue r) const;
  bool is_unit(Elem x) const;
  /// Throws InvalidArgument for non-units.
  Elem inverse(Elem x) const;
  std::vector<Elem> units() const;
  /// Matrix of y -> x y in the F_p basis.
  ModMatrix multiplication_matrix(Elem x) const;
  /// Structure constant: coefficient of basis k in basis_i * basis_j.
  Residue structure_constant(int i, int j, int k) const { return consts_[(i * dim_ + j) * dim_ + k]; }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  std::string format(Elem x) const;

  /// For fields: the primitive elements in increasing code order.
  const std::vector<Elem>& primitive_elements() const { return primitive_; }
  /// For fields: log of a nonzero x to the base primitive_elements()[generator].
  std::uint64_t discrete_log(Elem x, std::size_t generator = 0) const;

  /// Commutativity, associativity and unit checks on basis elements.
  bool satisfies_axioms() const;

 private:
  FiniteAlgebra() = default;
  static FiniteAlgebra from_constants(Residue p, int dim, std::vector<Residue> consts, std::vector<Residue> one,
                                      std::vector<std::string> labels, std::string name);
  // r tensor S for an augmented local F_p-algebra S whose basis vector 0 is 1
  // and whose other basis vectors span the augmentation ideal.
  static FiniteAlgebra tensor_local(const FiniteAlgebra& r, int sdim, const std::vector<Residue>& sconsts,
                                    const std::vector<std::string>& slabels, std::string name);
  void build_tables();

  Residue p_ = 2;
  int dim_ = 0;
  std::uint64_t size_ = 1;
  std::vector<Residue> consts_;
  Elem one_ = 0;
  std::vector<std::string> labels_;
  std::string name_;
  std::uint64_t base_size_ = 0;

  std::shared_ptr<const FiniteAlgebra> residue_;
  std::vector<Elem> residue_code_;  // per element, when not a field
  std::vector<Elem> mul_table_;     // size^2 entries when small
  std::vector<Elem> inverse_;       // 0 marks a non-unit
  std::vector<Elem> primitive_;
  std::vector<std::vector<std::uint32_t>> logs_;  // per generator, indexed by code
};

/// Row-major matrix over a FiniteAlgebra.
struct AlgMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<FiniteAlgebra::Elem> a;

  AlgMatrix() = default;
  AlgMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
  static AlgMatrix identity(const FiniteAlgebra& R, int n);
  FiniteAlgebra::Elem& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  FiniteAlgebra::Elem at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
  friend bool operator==(const AlgMatrix&, const AlgMatrix&) = default;
};

AlgMatrix mat_mul(const FiniteAlgebra& R, const AlgMatrix& x, const AlgMatrix& y);
AlgMatrix mat_add(const FiniteAlgebra& R, const AlgMatrix& x, const AlgMatrix& y);
AlgMatrix mat_sub(const FiniteAlgebra& R, const AlgMatrix& x, const AlgMatrix& y);
FiniteAlgebra::Elem determinant(const FiniteAlgebra& R, const AlgMatrix& m);
/// Determinant is a unit. Throws InvalidArgument for non-square input.
bool matrix_is_invertible(const FiniteAlgebra& R, const AlgMatrix& m);
/// The induced F_p-linear map on R^n is bijective.
bool operator_is_invertible(const FiniteAlgebra& R, const AlgMatrix& m);
/// Inverse via the adjugate; throws InvalidArgument when singular.
AlgMatrix mat_inverse(const FiniteAlgebra& R, const AlgMatrix& m);
std::string format(const FiniteAlgebra& R, const AlgMatrix& m);

/// Some F_p-linear form with invertible Gram matrix (x, y) -> l(xy), given
/// by its values on the basis, or nothing when the algebra is not Frobenius.
/// Scans all p^dim forms; throws GuardExceeded beyond limits.max_points.
std::optional<std::vector<Residue>> find_frobenius_form(const FiniteAlgebra& R, const Limits& limits = {});

}  // namespace lfrep
