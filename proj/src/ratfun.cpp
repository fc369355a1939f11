#include "lfrep/ratfun.hpp"

#include <algorithm>
#include <vector>

#include "lfrep/errors.hpp"

namespace lfrep {

namespace {

BiPoly linear_factor(int c) { return BiPoly(1) - BiPoly::monomial(1, c, 1); }

BiPoly pow(const BiPoly& b, int m) {
  BiPoly out(1);
  for (int i = 0; i < m; ++i) out = out * b;
  return out;
}

std::string factor_string(int c) {
  if (c == 0) return "(1-T)";
  if (c == 1) return "(1-q*T)";
  return "(1-q^" + std::to_string(c) + "*T)";
}

}  // namespace

bool divide_by_linear(const BiPoly& p, int c, BiPoly& quotient) {
  if (p.is_zero()) {
    quotient = BiPoly();
    return true;
  }
  // p = Q - q^c T Q, so Q_j = p_j + q^c Q_{j-1} from the bottom up.
  const int lo = p.min_second();
  const int hi = p.max_second();
  BiPoly out;
  LaurentPoly prev;
  for (int j = lo; j < hi; ++j) {
    LaurentPoly cur = p.coeff_of_second(j) + prev.shifted(c);
    out += BiPoly::from_first(cur).shifted(0, j);
    prev = std::move(cur);
  }
  if (!(p.coeff_of_second(hi) + prev.shifted(c) == LaurentPoly())) return false;
  quotient = std::move(out);
  return true;
}

RatFunQT::RatFunQT(BiPoly num, Factors den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

RatFunQT RatFunQT::geometric(int c, int m) {
  if (m < 0) throw InvalidArgument("negative multiplicity");
  return RatFunQT(BiPoly(1), Factors{{c, m}});
}

void RatFunQT::normalize() {
  for (auto it = den_.begin(); it != den_.end();) {
    if (it->second < 0) throw InvalidArgument("negative factor multiplicity");
    BiPoly q;
    while (it->second > 0 && divide_by_linear(num_, it->first, q)) {
      num_ = std::move(q);
      --it->second;
      if (num_.is_zero()) break;
    }
    it = it->second == 0 ? den_.erase(it) : std::next(it);
  }
  if (num_.is_zero()) den_.clear();
}

BiPoly RatFunQT::expanded_denominator() const {
  BiPoly out(1);
  for (const auto& [c, m] : den_) out = out * pow(linear_factor(c), m);
  return out;
}

int RatFunQT::numerator_t_degree() const {
  if (num_.is_zero()) throw InvalidArgument("degree of the zero rational function");
  return num_.max_second();
}

int RatFunQT::denominator_t_degree() const {
  int total = 0;
  for (const auto& [c, m] : den_) total += m;
  return total;
}

RatFunQT RatFunQT::scale_t(int k) const {
  Factors den;
  for (const auto& [c, m] : den_) den[c + k] += m;
  return RatFunQT(num_.scale_second(k), std::move(den));
}

RatFunQT RatFunQT::inverted() const {
  // 1 / (1 - q^{-c} T^{-1})^m = (-1)^m q^{cm} T^m / (1 - q^c T)^m.
  BiPoly num = num_.invert_variables();
  for (const auto& [c, m] : den_) {
    num = num.shifted(c * m, m);
    if (m % 2 != 0) num = -num;
  }
  return RatFunQT(std::move(num), den_);
}

LaurentPoly RatFunQT::series_coefficient(int d) const {
  if (d < 0) throw InvalidArgument("negative series index");
  if (num_.is_zero()) return {};
  if (num_.min_second() < 0) throw InvalidArgument("denominator vanishes at T = 0; no power series expansion");
  // Truncated product of the expansions of 1/(1 - q^c T)^m.
  std::vector<LaurentPoly> s(static_cast<std::size_t>(d) + 1);
  s[0] = 1;
  for (const auto& [c, m] : den_) {
    std::vector<LaurentPoly> next(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i].is_zero()) continue;
      for (std::size_t k = 0; i + k < s.size(); ++k) {
        const auto ck = static_cast<int>(k);
        next[i + k] += s[i] * LaurentPoly::monomial(binomial(m + ck - 1, ck), c * ck);
      }
    }
    s = std::move(next);
  }
  LaurentPoly out;
  for (int j = num_.min_second(); j <= std::min(d, num_.max_second()); ++j) out += num_.coeff_of_second(j) * s[d - j];
  return out;
}

RatFunQT& RatFunQT::operator+=(const RatFunQT& o) {
  Factors common = den_;
  for (const auto& [c, m] : o.den_) common[c] = std::max(common[c], m);
  auto lift = [&](const RatFunQT& f) {
    BiPoly n = f.num_;
    for (const auto& [c, m] : common) {
      auto it = f.den_.find(c);
      n = n * pow(linear_factor(c), m - (it == f.den_.end() ? 0 : it->second));
    }
    return n;
  };
  BiPoly num = lift(*this) + lift(o);
  *this = RatFunQT(std::move(num), std::move(common));
  return *this;
}

RatFunQT& RatFunQT::operator-=(const RatFunQT& o) { return *this += -o; }

RatFunQT& RatFunQT::operator*=(const RatFunQT& o) {
  Factors den = den_;
  for (const auto& [c, m] : o.den_) den[c] += m;
  *this = RatFunQT(num_ * o.num_, std::move(den));
  return *this;
}

bool operator==(const RatFunQT& a, const RatFunQT& b) {
  return a.num_ * b.expanded_denominator() == b.num_ * a.expanded_denominator();
}

std::pair<BiPoly, BiPoly> RatFunQT::display_pair() const {
  BiPoly den = expanded_denominator();
  if (num_.is_zero()) return {num_, den};
  const int a = std::max(0, -num_.min_first());
  const int b = std::max(0, -num_.min_second());
  return {num_.shifted(a, b), den.shifted(a, b)};
}

std::string RatFunQT::to_string() const {
  const auto [n, d] = display_pair();
  if (d == BiPoly(1)) return n.to_string();
  return "(" + n.to_string() + ") / (" + d.to_string() + ")";
}

std::string RatFunQT::to_factored_string() const {
  if (num_.is_zero()) return "0";
  const int a = std::max(0, -num_.min_first());
  const int b = std::max(0, -num_.min_second());
  std::string den;
  auto append = [&den](const std::string& s) { den += den.empty() ? s : "*" + s; };
  if (a > 0) append(a == 1 ? "q" : "q^" + std::to_string(a));
  if (b > 0) append(b == 1 ? "T" : "T^" + std::to_string(b));
  for (const auto& [c, m] : den_) append(factor_string(c) + (m == 1 ? "" : "^" + std::to_string(m)));
  const std::string num = num_.shifted(a, b).to_string();
  if (den.empty()) return num;
  return "(" + num + ") / " + den;
}

std::ostream& operator<<(std::ostream& os, const RatFunQT& f) { return os << f.to_factored_string(); }

}  // namespace lfrep
