#include "lfrep/linalg.hpp"

#include <utility>

#include "lfrep/errors.hpp"

namespace lfrep {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Residue inverse_mod(Residue a, Residue p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw InvalidArgument("residue is not invertible");
  return static_cast<Residue>(t < 0 ? t + p : t);
}

void ModMatrix::add(std::size_t i, std::size_t j, std::int64_t v) {
  const std::int64_t p = p_;
  std::int64_t r = (static_cast<std::int64_t>(at(i, j)) + v % p) % p;
  if (r < 0) r += p;
  at(i, j) = static_cast<Residue>(r);
}

std::vector<std::size_t> ModMatrix::row_reduce() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t pick = row;
    while (pick < rows_ && at(pick, col) == 0) ++pick;
    if (pick == rows_) continue;
    if (pick != row)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(at(pick, j), at(row, j));
    const std::uint64_t inv = inverse_mod(at(row, col), p_);
    for (std::size_t j = col; j < cols_; ++j) at(row, j) = static_cast<Residue>(at(row, j) * inv % p_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || at(i, col) == 0) continue;
      const std::uint64_t f = p_ - at(i, col);
      for (std::size_t j = col; j < cols_; ++j)
        at(i, j) = static_cast<Residue>((at(i, j) + f * at(row, j)) % p_);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(ModMatrix m) { return m.row_reduce().size(); }

std::vector<std::vector<Residue>> nullspace_basis(ModMatrix m) {
  const auto pivots = m.row_reduce();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Residue>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Residue> v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      const Residue c = m.at(r, free);
      v[pivots[r]] = c == 0 ? 0 : m.modulus() - c;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace lfrep
