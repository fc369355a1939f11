#include "lfrep/io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "lfrep/errors.hpp"

namespace lfrep {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_int(std::string_view s, long& out) {
  s = trim(s);
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

Quiver parse_quiver(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  int n = -1;
  std::vector<std::pair<Vertex, Vertex>> arrows;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    std::istringstream words{std::string(line)};
    std::string directive;
    words >> directive;
    std::vector<std::string> args;
    for (std::string w; words >> w;) args.push_back(w);
    std::vector<long> nums;
    for (const auto& a : args) {
      long v = 0;
      if (!parse_int(a, v)) throw ParseError("expected an integer, got '" + a + "'", line_no);
      nums.push_back(v);
    }
    if (directive == "vertices") {
      if (n >= 0) throw ParseError("duplicate 'vertices' line", line_no);
      if (nums.size() != 1 || nums[0] < 1) throw ParseError("'vertices' takes one positive count", line_no);
      n = static_cast<int>(nums[0]);
    } else if (directive == "edge") {
      if (n < 0) throw ParseError("'edge' before 'vertices'", line_no);
      if (nums.size() != 2) throw ParseError("'edge' takes two vertices", line_no);
      for (long v : nums)
        if (v < 1 || v > n) throw ParseError("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n), line_no);
      arrows.emplace_back(static_cast<Vertex>(nums[0]), static_cast<Vertex>(nums[1]));
    } else {
      throw ParseError("unknown directive '" + directive + "'", line_no);
    }
  }
  if (n < 0) throw ParseError("missing 'vertices' line", line_no);
  Multigraph g(n);
  for (const auto& [u, v] : arrows) g.add_edge(u, v);
  return Quiver(std::move(g));
}

std::string format_quiver(const Quiver& q) {
  std::ostringstream out;
  out << "vertices " << q.vertex_count() << "\n";
  for (const Edge& e : q.arrows()) out << "edge " << e.u << " " << e.v << "\n";
  return out.str();
}

namespace {

class RingParser {
 public:
  explicit RingParser(std::string_view s) : s_(s) {}

  FiniteAlgebra parse() {
    FiniteAlgebra r = ring();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("ring spec '" + std::string(s_) + "': " + what + " at column " + std::to_string(pos_ + 1));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string word() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }
  long number() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    long v = 0;
    if (start == pos_ || !parse_int(s_.substr(start, pos_ - start), v)) fail("expected a number");
    return v;
  }

  FiniteAlgebra field() {
    const long p = number();
    if (p < 2 || !is_prime(static_cast<Residue>(p))) fail(std::to_string(p) + " is not prime");
    long k = 1;
    if (accept(',')) k = number();
    if (k < 1) fail("extension degree must be positive");
    expect(')');
    return FiniteAlgebra::fq(static_cast<Residue>(p), static_cast<int>(k));
  }

  FiniteAlgebra ring() {
    const std::string w = word();
    if (w.empty()) fail("expected fq, kd, eps or sqz");
    expect('(');
    if (w == "fq") return field();
    if (w == "kd") {
      FiniteAlgebra base = ring();
      expect(',');
      const long d = number();
      expect(')');
      if (!base.is_field()) fail("kd needs a field base");
      if (d < 1) fail("kd needs d >= 1");
      return FiniteAlgebra::truncated(base, static_cast<int>(d));
    }
    if (w == "eps") {
      FiniteAlgebra base = ring();
      expect(')');
      return FiniteAlgebra::dual_numbers(base);
    }
    if (w == "sqz") {
      if (word() != "fq") fail("sqz needs an fq(...) base");
      expect('(');
      FiniteAlgebra base = field();
      expect(',');
      const long n = number();
      expect(')');
      if (n < 1) fail("sqz needs n >= 1");
      return FiniteAlgebra::square_zero(base, static_cast<int>(n));
    }
    fail("unknown constructor '" + w + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

FiniteAlgebra parse_ring(std::string_view spec) {
  try {
    return RingParser(spec).parse();
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("ring spec '") + std::string(spec) + "': " + e.what());
  }
}

std::vector<int> parse_rank_vector(std::string_view text) {
  std::vector<int> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    long v = 0;
    const std::string_view piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (!parse_int(piece, v) || v < 0) throw ParseError("bad rank vector '" + std::string(text) + "'");
    out.push_back(static_cast<int>(v));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

BiPoly parse_bipoly(std::string_view text, char v1, char v2) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty polynomial");
  auto fail = [&](std::size_t at) -> ParseError {
    return ParseError("polynomial '" + std::string(text) + "': unexpected input at offset " + std::to_string(at));
  };
  BiPoly out;
  std::size_t i = 0;
  auto read_int = [&](long& v) {
    std::size_t j = i;
    if (j < s.size() && s[j] == '-') ++j;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (!parse_int(std::string_view(s).substr(i, j - i), v)) throw fail(i);
    i = j;
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw fail(i);
    }
    BigInt coef = sign;
    int e1 = 0;
    int e2 = 0;
    bool factor = false;
    while (i < s.size() && s[i] != '+' && s[i] != '-') {
      if (factor) {
        if (s[i] != '*') throw fail(i);
        ++i;
      }
      if (std::isdigit(static_cast<unsigned char>(s[i]))) {
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        coef *= BigInt(s.substr(i, j - i));
        i = j;
      } else if (s[i] == v1 || s[i] == v2) {
        int& e = s[i] == v1 ? e1 : e2;
        ++i;
        long power = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          read_int(power);
        }
        e += static_cast<int>(power);
      } else {
        throw fail(i);
      }
      factor = true;
    }
    if (!factor) throw fail(i);
    out += BiPoly::monomial(coef, e1, e2);
  }
  return out;
}

LaurentPoly parse_poly(std::string_view text, char var) {
  const BiPoly p = parse_bipoly(text, var, var == 'T' ? 'q' : 'T');
  if (!p.is_zero() && (p.min_second() != 0 || p.max_second() != 0))
    throw ParseError("polynomial '" + std::string(text) + "' uses a second variable");
  return p.coeff_of_second(0);
}

namespace json_out {

json poly(const LaurentPoly& p) {
  json out = json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = c.get_str();
  return out;
}

json bipoly(const BiPoly& p) {
  json out = json::object();
  for (const auto& [k, c] : p.terms()) out[std::to_string(k.first) + "," + std::to_string(k.second)] = c.get_str();
  return out;
}

json ratfun(const RatFunQT& f) {
  const auto [num, den] = f.display_pair();
  return json{{"num", bipoly(num)}, {"den", bipoly(den)}};
}

json count(const BigInt& n) { return n.get_str(); }

}  // namespace json_out

}  // namespace lfrep
