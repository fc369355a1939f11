#pragma once

#include <cstdint>
#include <vector>

namespace lfrep {

using Residue = std::uint32_t;

bool is_prime(std::uint64_t n);
/// Inverse of a nonzero residue modulo the prime p.
Residue inverse_mod(Residue a, Residue p);

/// Dense matrix over F_p, row-major.
class ModMatrix {
 public:
  ModMatrix(std::size_t rows, std::size_t cols, Residue p) : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Residue modulus() const { return p_; }
  Residue& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  Residue at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  /// Adds v (any representative) to entry (i, j) modulo p.
  void add(std::size_t i, std::size_t j, std::int64_t v);

  /// Reduces to reduced row echelon form in place and returns the pivot columns.
  std::vector<std::size_t> row_reduce();

 private:
  std::size_t rows_;
  std::size_t cols_;
  Residue p_;
  std::vector<Residue> a_;
};

std::size_t rank(ModMatrix m);
inline std::size_t nullity(const ModMatrix& m) { return m.cols() - rank(m); }
/// Basis of {x : M x = 0}, one vector of length cols() per free column.
std::vector<std::vector<Residue>> nullspace_basis(ModMatrix m);

}  // namespace lfrep
