#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "lfrep/algebra.hpp"
#include "lfrep/multigraph.hpp"
#include "lfrep/poly.hpp"
#include "lfrep/ratfun.hpp"

namespace lfrep {

/// Line format: `vertices N`, then one `edge i j` per arrow (i -> j), with
/// `#` comments and blank lines ignored. Arrows get ids 1..m in file order.
Quiver parse_quiver(std::string_view text);
/// Inverse of parse_quiver up to comments and whitespace.
std::string format_quiver(const Quiver& q);

/// `fq(p[,k])`, `kd(spec,d)`, `eps(spec)` or `sqz(fq(p[,k]),n)`.
FiniteAlgebra parse_ring(std::string_view spec);

/// Comma separated non-negative integers, e.g. `1,2,1`.
std::vector<int> parse_rank_vector(std::string_view text);

/// Expanded sums of terms such as `3*q^2*T`, `-T^-1` or `5`, in the
/// variables `v1` and `v2`. Parentheses are not supported.
BiPoly parse_bipoly(std::string_view text, char v1 = 'q', char v2 = 'T');
LaurentPoly parse_poly(std::string_view text, char var = 'q');

namespace json_out {
using nlohmann::json;

/// {"<exp>": "<coef>", ...}
json poly(const LaurentPoly& p);
/// {"<e1>,<e2>": "<coef>", ...}
json bipoly(const BiPoly& p);
/// {"num": bipoly, "den": bipoly}, denominator expanded.
json ratfun(const RatFunQT& f);
json count(const BigInt& n);
}  // namespace json_out

}  // namespace lfrep
