#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "lfrep/limits.hpp"
#include "lfrep/multigraph.hpp"
#include "lfrep/ratfun.hpp"

namespace lfrep {

/// (c_0, c_1, ..., c_l) with c_0 = 0.
using CVector = std::vector<int>;

/// q^{c_2 + ... + c_l} T^l / prod_{i=0}^{l} (1 - q^{c_i} T).
RatFunQT r_of_cvector(const CVector& c);

/// c_i = b1(G) - b1(L_i), where L_i contracts E \ F_{i-1}.
CVector cvector_of_filtration(const Multigraph& gamma, const StrictFiltration& f);

/// R(G, q, T) as the sum of r_of_cvector over all strict filtrations of E(G).
RatFunQT r_genfun(const Multigraph& gamma, const Limits& limits = {});
/// R(G, q, T) from the subset recursion instead of filtrations.
RatFunQT r_genfun_recursive(const Multigraph& gamma, const Limits& limits = {});
/// A(Q, q, T) = sum over connected spanning G of (q-1)^{b1(G)} R(G, q, T).
RatFunQT a_genfun(const Multigraph& quiver, const Limits& limits = {});

/// prod_{i<k} (1 - q^i T).
BiPoly q_pochhammer(int k);
/// F_m with R(S_m, q, T) = T F_m / (T)_{m+1}; F_0 = 1.
BiPoly q_eulerian(int m, const Limits& limits = {});

/// Checks R(G) = eps(G) + T sum_A R(G/A, q, q^{b1(G[A])} T) exactly.
bool check_recursion(const Multigraph& gamma, const Limits& limits = {});

enum class DualityForm { a, r };
/// Checks the q -> 1/q, T -> 1/T functional equation of A or R.
bool check_duality(const Multigraph& g, DualityForm which, const Limits& limits = {});

/// Multiplicative graph function with Laurent-polynomial values. Values are
/// memoized per labeled graph; the memo is shared between copies.
class GraphChar {
 public:
  using Fn = std::function<LaurentPoly(const Multigraph&)>;

  GraphChar(std::string name, Fn fn);

  LaurentPoly operator()(const Multigraph& g) const;
  const std::string& name() const { return name_; }

 private:
  struct Memo {
    std::mutex lock;
    std::map<Multigraph, LaurentPoly> values;
  };
  std::string name_;
  Fn fn_;
  std::shared_ptr<Memo> memo_;
};

namespace chars {
/// 1 on edgeless graphs, else 0 (the convolution unit).
GraphChar epsilon();
/// 1 when every edge is a loop, else 0.
GraphChar epsilon1();
/// q^{k b1(G)}.
GraphChar psi(int k);
/// (-1)^{#E} q^{k b1(G)}, the convolution inverse of psi(k).
GraphChar signed_psi(int k);
/// R_d(G, q).
GraphChar r_d(int d);
}  // namespace chars

/// (f * g)(G) = sum_A f(G[A]) g(G/A) with G[A] spanning.
GraphChar convolve(const GraphChar& f, const GraphChar& g, const Limits& limits = {});

}  // namespace lfrep
