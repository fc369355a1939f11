#include "lfrep/algebra.hpp"

#include <algorithm>
#include <numeric>

#include "lfrep/errors.hpp"

namespace lfrep {

namespace {

constexpr std::uint64_t kMaxAlgebraSize = std::uint64_t{1} << 20;
constexpr std::uint64_t kTableSize = 1024;

using Poly = std::vector<Residue>;  // over F_p, constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& b, Residue p) {
  trim(a);
  const Residue inv = inverse_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t f = std::uint64_t{a.back()} * inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = static_cast<Residue>((a[shift + i] + (p - f) * b[i]) % p);
    trim(a);
  }
  return a;
}

// Monic polynomial of the given degree whose lower coefficients are the base-p digits of `code`.
Poly monic_from_code(std::uint64_t code, int degree, Residue p) {
  Poly f(static_cast<std::size_t>(degree) + 1, 0);
  for (int i = 0; i < degree; ++i) {
    f[i] = static_cast<Residue>(code % p);
    code /= p;
  }
  f[degree] = 1;
  return f;
}

std::uint64_t upow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

bool is_irreducible(const Poly& f, Residue p) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n < 1) return false;
  for (int d = 1; 2 * d <= n; ++d)
    for (std::uint64_t c = 0; c < upow(p, d); ++c)
      if (poly_mod(f, monic_from_code(c, d, p), p).empty()) return false;
  return true;
}

std::string join_label(const std::string& a, const std::string& b) {
  if (b == "1") return a;
  if (a == "1") return b;
  return a + "*" + b;
}

}  // namespace

// ---------------------------------------------------------------------------
// Construction

FiniteAlgebra FiniteAlgebra::from_constants(Residue p, int dim, std::vector<Residue> consts, std::vector<Residue> one,
                                            std::vector<std::string> labels, std::string name) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  FiniteAlgebra a;
  a.p_ = p;
  a.dim_ = dim;
  a.size_ = upow(p, dim);
  if (a.size_ > kMaxAlgebraSize) throw GuardExceeded("algebra " + name + " has more than 2^20 elements");
  a.consts_ = std::move(consts);
  a.labels_ = std::move(labels);
  a.name_ = std::move(name);
  a.one_ = a.from_coords(one);
  if (!a.satisfies_axioms()) throw InvalidArgument("structure constants of " + a.name_ + " are not commutative and associative");
  return a;
}

FiniteAlgebra FiniteAlgebra::prime_field(Residue p) {
  FiniteAlgebra a = from_constants(p, 1, {1}, {1}, {"1"}, "fq(" + std::to_string(p) + ")");
  a.base_size_ = p;
  a.build_tables();
  return a;
}

FiniteAlgebra FiniteAlgebra::field_extension(Residue p, const std::vector<Residue>& modulus) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  Poly f = modulus;
  trim(f);
  if (f.size() < 2 || f.back() != 1) throw InvalidArgument("field modulus must be monic of positive degree");
  for (Residue c : f)
    if (c >= p) throw InvalidArgument("modulus coefficient out of range");
  if (!is_irreducible(f, p)) throw InvalidArgument("modulus is reducible over F_" + std::to_string(p));
  const int k = static_cast<int>(f.size()) - 1;
  std::vector<Residue> consts(static_cast<std::size_t>(k * k * k), 0);
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) labels.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Poly mono(static_cast<std::size_t>(i + j) + 1, 0);
      mono[i + j] = 1;
      const Poly r = poly_mod(mono, f, p);
      for (std::size_t t = 0; t < r.size(); ++t) consts[(i * k + j) * k + t] = r[t];
    }
  std::string name = "fq(" + std::to_string(p) + ";";
  for (std::size_t i = 0; i < f.size(); ++i) name += (i ? "," : "") + std::to_string(f[i]);
  name += ")";
  std::vector<Residue> one(static_cast<std::size_t>(k), 0);
  one[0] = 1;
  FiniteAlgebra a = from_constants(p, k, std::move(consts), std::move(one), std::move(labels), std::move(name));
  a.base_size_ = a.size_;
  a.build_tables();
  return a;
}

FiniteAlgebra FiniteAlgebra::fq(Residue p, int k) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  if (k < 1) throw InvalidArgument("extension degree must be positive");
  if (k == 1) return prime_field(p);
  for (std::uint64_t c = 0; c < upow(p, k); ++c) {
    const Poly f = monic_from_code(c, k, p);
    if (!is_irreducible(f, p)) continue;
    FiniteAlgebra a = field_extension(p, f);
    a.name_ = "fq(" + std::to_string(p) + "," + std::to_string(k) + ")";
    return a;
  }
  throw InternalError("no irreducible polynomial found");
}

FiniteAlgebra FiniteAlgebra::tensor_local(const FiniteAlgebra& r, int sdim, const std::vector<Residue>& sconsts,
                                          const std::vector<std::string>& slabels, std::string name) {
  const int rd = r.dim_;
  const int dim = rd * sdim;
  std::vector<Residue> consts(static_cast<std::size_t>(dim) * dim * dim, 0);
  // Basis index j * rd + i stands for r_i (x) s_j.
  for (int j1 = 0; j1 < sdim; ++j1)
    for (int j2 = 0; j2 < sdim; ++j2)
      for (int j3 = 0; j3 < sdim; ++j3) {
        const Residue cs = sconsts[(j1 * sdim + j2) * sdim + j3];
        if (cs == 0) continue;
        for (int i1 = 0; i1 < rd; ++i1)
          for (int i2 = 0; i2 < rd; ++i2)
            for (int i3 = 0; i3 < rd; ++i3) {
              const Residue cr = r.structure_constant(i1, i2, i3);
              if (cr == 0) continue;
              auto& slot = consts[((j1 * rd + i1) * dim + (j2 * rd + i2)) * dim + (j3 * rd + i3)];
              slot = static_cast<Residue>((slot + std::uint64_t{cs} * cr) % r.p_);
            }
      }
  std::vector<std::string> labels;
  for (int j = 0; j < sdim; ++j)
    for (int i = 0; i < rd; ++i) labels.push_back(join_label(r.labels_[i], slabels[j]));
  std::vector<Residue> one = r.coords(r.one_);
  one.resize(static_cast<std::size_t>(dim), 0);
  FiniteAlgebra a = from_constants(r.p_, dim, std::move(consts), std::move(one), std::move(labels), std::move(name));
  a.base_size_ = r.base_size_;
  a.residue_ = r.is_field() ? std::make_shared<const FiniteAlgebra>(r) : r.residue_;
  a.residue_code_.resize(a.size_);
  for (std::uint64_t x = 0; x < a.size_; ++x) a.residue_code_[x] = r.residue(static_cast<Elem>(x % r.size_));
  a.build_tables();
  return a;
}

FiniteAlgebra FiniteAlgebra::truncated(const FiniteAlgebra& base, int d) {
  if (!base.is_field()) throw InvalidArgument("kd needs a field as base, got " + base.name_);
  if (d < 1) throw InvalidArgument("truncation degree must be positive");
  if (d == 1) return base;
  std::vector<Residue> sc(static_cast<std::size_t>(d * d * d), 0);
  std::vector<std::string> labels;
  for (int a = 0; a < d; ++a) {
    labels.push_back(a == 0 ? "1" : (a == 1 ? "t" : "t^" + std::to_string(a)));
    for (int b = 0; b < d; ++b)
      if (a + b < d) sc[(a * d + b) * d + a + b] = 1;
  }
  return tensor_local(base, d, sc, labels, "kd(" + base.name_ + "," + std::to_string(d) + ")");
}

FiniteAlgebra FiniteAlgebra::dual_numbers(const FiniteAlgebra& r) {
  const std::vector<Residue> sc{1, 0, 0, 1, 0, 1, 0, 0};
  return tensor_local(r, 2, sc, {"1", "e"}, "eps(" + r.name_ + ")");
}

FiniteAlgebra FiniteAlgebra::square_zero(const FiniteAlgebra& base, int n) {
  if (!base.is_field()) throw InvalidArgument("sqz needs a field as base, got " + base.name_);
  if (n < 1) throw InvalidArgument("sqz needs at least one variable");
  const int sd = n + 1;
  std::vector<Residue> sc(static_cast<std::size_t>(sd * sd * sd), 0);
  std::vector<std::string> labels{"1"};
  for (int j = 1; j <= n; ++j) labels.push_back("t" + std::to_string(j));
  for (int j = 0; j < sd; ++j) {
    sc[(0 * sd + j) * sd + j] = 1;
    sc[(j * sd + 0) * sd + j] = 1;
  }
  return tensor_local(base, sd, sc, labels, "sqz(" + base.name_ + "," + std::to_string(n) + ")");
}

void FiniteAlgebra::build_tables() {
  if (size_ <= kTableSize) {
    // Filled aside: mul() reads mul_table_ as soon as it is non-empty.
    std::vector<Elem> table(size_ * size_);
    for (Elem x = 0; x < size_; ++x)
      for (Elem y = 0; y <= x; ++y) table[x * size_ + y] = table[y * size_ + x] = mul(x, y);
    mul_table_ = std::move(table);
  }
  // Inverses by solving x y = 1 over F_p.
  inverse_.assign(size_, 0);
  const std::vector<Residue> target = coords(one_);
  for (Elem x = 1; x < size_; ++x) {
    ModMatrix aug(static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_) + 1, p_);
    const ModMatrix m = multiplication_matrix(x);
    for (int i = 0; i < dim_; ++i) {
      for (int j = 0; j < dim_; ++j) aug.at(i, j) = m.at(i, j);
      aug.at(i, dim_) = target[i];
    }
    const auto pivots = aug.row_reduce();
    if (static_cast<int>(pivots.size()) != dim_ || pivots.back() == static_cast<std::size_t>(dim_)) continue;
    std::vector<Residue> y(static_cast<std::size_t>(dim_));
    for (int i = 0; i < dim_; ++i) y[i] = aug.at(i, dim_);
    inverse_[x] = from_coords(y);
  }
  for (Elem x = 0; x < size_; ++x)
    if ((inverse_[x] != 0) != (residue(x) != 0))
      throw InternalError(name_ + " is not local: " + format(x) + " breaks unit <=> nonzero residue");
  if (is_field()) {
    for (Elem g = 1; g < size_; ++g) {
      std::uint64_t order = 1;
      for (Elem y = g; y != one_; y = mul(y, g)) ++order;
      if (order == size_ - 1) primitive_.push_back(g);
    }
    for (std::size_t gi = 0; gi < std::min<std::size_t>(2, primitive_.size()); ++gi) {
      std::vector<std::uint32_t> log(size_, 0);
      Elem y = one_;
      for (std::uint32_t e = 0; e + 1 < size_; ++e) {
        log[y] = e;
        y = mul(y, primitive_[gi]);
      }
      logs_.push_back(std::move(log));
    }
  }
}

// ---------------------------------------------------------------------------
// Element arithmetic

FiniteAlgebra::Elem FiniteAlgebra::from_coords(const std::vector<Residue>& c) const {
  if (static_cast<int>(c.size()) != dim_) throw InvalidArgument("coordinate vector has the wrong length");
  std::uint64_t code = 0;
  for (int i = dim_ - 1; i >= 0; --i) code = code * p_ + c[i] % p_;
  return static_cast<Elem>(code);
}

std::vector<Residue> FiniteAlgebra::coords(Elem x) const {
  std::vector<Residue> c(static_cast<std::size_t>(dim_));
  for (int i = 0; i < dim_; ++i) {
    c[i] = x % p_;
    x /= p_;
  }
  return c;
}

FiniteAlgebra::Elem FiniteAlgebra::add(Elem x, Elem y) const {
  if (p_ == 2) return x ^ y;
  std::uint64_t code = 0;
  std::uint64_t place = 1;
  for (int i = 0; i < dim_; ++i) {
    code += ((x % p_ + y % p_) % p_) * place;
    x /= p_;
    y /= p_;
    place *= p_;
  }
  return static_cast<Elem>(code);
}

FiniteAlgebra::Elem FiniteAlgebra::neg(Elem x) const {
  if (p_ == 2) return x;
  std::uint64_t code = 0;
  std::uint64_t place = 1;
  for (int i = 0; i < dim_; ++i) {
    code += ((p_ - x % p_) % p_) * place;
    x /= p_;
    place *= p_;
  }
  return static_cast<Elem>(code);
}

FiniteAlgebra::Elem FiniteAlgebra::sub(Elem x, Elem y) const { return add(x, neg(y)); }

FiniteAlgebra::Elem FiniteAlgebra::mul(Elem x, Elem y) const {
  if (!mul_table_.empty()) return mul_table_[x * size_ + y];
  const auto a = coords(x);
  const auto b = coords(y);
  std::vector<std::uint64_t> acc(static_cast<std::size_t>(dim_), 0);
  for (int i = 0; i < dim_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (b[j] == 0) continue;
      const std::uint64_t f = std::uint64_t{a[i]} * b[j] % p_;
      const Residue* row = &consts_[(i * dim_ + j) * dim_];
      for (int k = 0; k < dim_; ++k) acc[k] += f * row[k];
    }
  }
  std::vector<Residue> c(static_cast<std::size_t>(dim_));
  for (int k = 0; k < dim_; ++k) c[k] = static_cast<Residue>(acc[k] % p_);
  return from_coords(c);
}

FiniteAlgebra::Elem FiniteAlgebra::scalar(Residue r) const {
  std::vector<Residue> c = coords(one_);
  for (auto& v : c) v = static_cast<Residue>(std::uint64_t{v} * (r % p_) % p_);
  return from_coords(c);
}

FiniteAlgebra::Elem FiniteAlgebra::residue(Elem x) const { return is_field() ? x : residue_code_[x]; }

bool FiniteAlgebra::is_unit(Elem x) const { return inverse_[x] != 0; }

FiniteAlgebra::Elem FiniteAlgebra::inverse(Elem x) const {
  if (!is_unit(x)) throw InvalidArgument(format(x) + " is not a unit in " + name_);
  return inverse_[x];
}

std::vector<FiniteAlgebra::Elem> FiniteAlgebra::units() const {
  std::vector<Elem> out;
  for (Elem x = 0; x < size_; ++x)
    if (is_unit(x)) out.push_back(x);
  return out;
}

ModMatrix FiniteAlgebra::multiplication_matrix(Elem x) const {
  ModMatrix m(static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_), p_);
  const auto a = coords(x);
  for (int i = 0; i < dim_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) m.add(k, j, std::int64_t{a[i]} * structure_constant(i, j, k));
  }
  return m;
}

std::string FiniteAlgebra::format(Elem x) const {
  const auto c = coords(x);
  std::string out;
  for (int i = 0; i < dim_; ++i) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (labels_[i] == "1")
      out += std::to_string(c[i]);
    else
      out += (c[i] == 1 ? "" : std::to_string(c[i]) + "*") + labels_[i];
  }
  return out.empty() ? "0" : out;
}

std::uint64_t FiniteAlgebra::discrete_log(Elem x, std::size_t generator) const {
  if (!is_field()) throw InvalidArgument("discrete logarithms are taken in the residue field");
  if (x == 0) throw InvalidArgument("logarithm of zero");
  if (generator >= primitive_.size()) throw InvalidArgument("generator index out of range");
  if (generator < logs_.size()) return logs_[generator][x];
  Elem y = one_;
  for (std::uint64_t e = 0; e + 1 < size_; ++e) {
    if (y == x) return e;
    y = mul(y, primitive_[generator]);
  }
  throw InternalError("element outside the cyclic group");
}

bool FiniteAlgebra::satisfies_axioms() const {
  auto basis = [this](int i) {
    std::vector<Residue> c(static_cast<std::size_t>(dim_), 0);
    c[i] = 1;
    return from_coords(c);
  };
  // The multiplication table is not built yet, so mul() uses the constants.
  for (int i = 0; i < dim_; ++i) {
    const Elem bi = basis(i);
    if (mul(one_, bi) != bi) return false;
    for (int j = 0; j < dim_; ++j) {
      const Elem bj = basis(j);
      if (mul(bi, bj) != mul(bj, bi)) return false;
      for (int k = 0; k < dim_; ++k) {
        const Elem bk = basis(k);
        if (mul(mul(bi, bj), bk) != mul(bi, mul(bj, bk))) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Matrices

AlgMatrix AlgMatrix::identity(const FiniteAlgebra& R, int n) {
  AlgMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = R.one();
  return m;
}

AlgMatrix mat_mul(const FiniteAlgebra& R, const AlgMatrix& x, const AlgMatrix& y) {
  if (x.cols != y.rows) throw InvalidArgument("matrix shapes do not compose");
  AlgMatrix out(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < y.cols; ++j) {
      FiniteAlgebra::Elem acc = 0;
      for (int k = 0; k < x.cols; ++k) acc = R.add(acc, R.mul(x.at(i, k), y.at(k, j)));
      out.at(i, j) = acc;
    }
  return out;
}

AlgMatrix mat_add(const FiniteAlgebra& R, const AlgMatrix& x, const AlgMatrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw InvalidArgument("matrix shapes differ");
  AlgMatrix out(x.rows, x.cols);
  for (std::size_t i = 0; i < x.a.size(); ++i) out.a[i] = R.add(x.a[i], y.a[i]);
  return out;
}

AlgMatrix mat_sub(const FiniteAlgebra& R, const AlgMatrix& x, const AlgMatrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw InvalidArgument("matrix shapes differ");
  AlgMatrix out(x.rows, x.cols);
  for (std::size_t i = 0; i < x.a.size(); ++i) out.a[i] = R.sub(x.a[i], y.a[i]);
  return out;
}

namespace {

AlgMatrix minor_of(const AlgMatrix& m, int row, int col) {
  AlgMatrix out(m.rows - 1, m.cols - 1);
  for (int i = 0, oi = 0; i < m.rows; ++i) {
    if (i == row) continue;
    for (int j = 0, oj = 0; j < m.cols; ++j) {
      if (j == col) continue;
      out.at(oi, oj++) = m.at(i, j);
    }
    ++oi;
  }
  return out;
}

}  // namespace

FiniteAlgebra::Elem determinant(const FiniteAlgebra& R, const AlgMatrix& m) {
  if (m.rows != m.cols) throw InvalidArgument("determinant of a non-square matrix");
  const int n = m.rows;
  if (n == 0) return R.one();
  if (n == 1) return m.at(0, 0);
  if (n == 2) return R.sub(R.mul(m.at(0, 0), m.at(1, 1)), R.mul(m.at(0, 1), m.at(1, 0)));
  FiniteAlgebra::Elem acc = 0;
  for (int j = 0; j < n; ++j) {
    if (m.at(0, j) == 0) continue;
    const FiniteAlgebra::Elem term = R.mul(m.at(0, j), determinant(R, minor_of(m, 0, j)));
    acc = j % 2 == 0 ? R.add(acc, term) : R.sub(acc, term);
  }
  return acc;
}

bool matrix_is_invertible(const FiniteAlgebra& R, const AlgMatrix& m) { return R.is_unit(determinant(R, m)); }

bool operator_is_invertible(const FiniteAlgebra& R, const AlgMatrix& m) {
  if (m.rows != m.cols) throw InvalidArgument("invertibility of a non-square matrix");
  const auto d = static_cast<std::size_t>(R.dim());
  const auto n = static_cast<std::size_t>(m.rows);
  ModMatrix big(n * d, n * d, R.characteristic());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const ModMatrix blk = R.multiplication_matrix(m.at(static_cast<int>(i), static_cast<int>(j)));
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) big.at(i * d + r, j * d + c) = blk.at(r, c);
    }
  return rank(big) == n * d;
}

AlgMatrix mat_inverse(const FiniteAlgebra& R, const AlgMatrix& m) {
  const FiniteAlgebra::Elem det = determinant(R, m);
  if (!R.is_unit(det)) throw InvalidArgument("matrix is not invertible");
  const FiniteAlgebra::Elem dinv = R.inverse(det);
  const int n = m.rows;
  AlgMatrix out(n, n);
  if (n == 1) {
    out.at(0, 0) = dinv;
    return out;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      FiniteAlgebra::Elem c = R.mul(determinant(R, minor_of(m, j, i)), dinv);
      out.at(i, j) = (i + j) % 2 == 0 ? c : R.neg(c);
    }
  return out;
}

std::string format(const FiniteAlgebra& R, const AlgMatrix& m) {
  std::string out = "[";
  for (int i = 0; i < m.rows; ++i) {
    out += i ? ", [" : "[";
    for (int j = 0; j < m.cols; ++j) out += (j ? ", " : "") + R.format(m.at(i, j));
    out += "]";
  }
  return out + "]";
}

std::optional<std::vector<Residue>> find_frobenius_form(const FiniteAlgebra& R, const Limits& limits) {
  const auto p = R.characteristic();
  const int d = R.dim();
  if (!limits.allows_points(upow(p, d)))
    throw GuardExceeded("scanning " + std::to_string(upow(p, d)) + " linear forms exceeds the limit; supply a form");
  for (std::uint64_t code = 1; code < upow(p, d); ++code) {
    std::vector<Residue> lambda(static_cast<std::size_t>(d));
    std::uint64_t c = code;
    for (int i = 0; i < d; ++i) {
      lambda[i] = static_cast<Residue>(c % p);
      c /= p;
    }
    ModMatrix gram(static_cast<std::size_t>(d), static_cast<std::size_t>(d), p);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) gram.add(i, j, std::int64_t{R.structure_constant(i, j, k)} * lambda[k]);
    if (rank(gram) == static_cast<std::size_t>(d)) return lambda;
  }
  return std::nullopt;
}

}  // namespace lfrep
