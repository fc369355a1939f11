// lfrep: command-line front end for the counting engines.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lfrep/catalog.hpp"
#include "lfrep/errors.hpp"
#include "lfrep/genfun.hpp"
#include "lfrep/io.hpp"
#include "lfrep/repenum.hpp"
#include "lfrep/toric.hpp"
#include "lfrep/verify.hpp"

namespace {

using namespace lfrep;
using nlohmann::json;

enum Exit { ok = 0, verification_failed = 1, usage = 2, guard = 3 };

struct Options {
  std::string quiver;
  std::string ring;
  std::string rank;
  int d = 2;
  int q = 2;
  int n = 4;
  std::string format = "text";
  std::string engine = "tables";
  std::string which = "both";
  std::string suite = "all";
  bool slow = false;
  Limits limits;
};

Quiver load_quiver(const std::string& arg) {
  if (arg.empty()) throw ParseError("--quiver is required for this command");
  if (arg.rfind("builtin:", 0) == 0) {
    try {
      return Quiver(catalog::builtin(arg.substr(8)));
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what());
    }
  }
  std::ifstream in(arg);
  if (!in) throw ParseError("cannot read quiver file '" + arg + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_quiver(buf.str());
}

FiniteAlgebra load_ring(const std::string& spec) {
  if (spec.empty()) throw ParseError("--ring is required for this command");
  return parse_ring(spec);
}

RankVector load_rank(const std::string& text, const Quiver& q) {
  if (text.empty()) throw ParseError("--rank is required for this command");
  RankVector alpha = parse_rank_vector(text);
  if (static_cast<int>(alpha.size()) != q.vertex_count())
    throw ParseError("--rank has " + std::to_string(alpha.size()) + " entries but the quiver has " +
                     std::to_string(q.vertex_count()) + " vertices");
  return alpha;
}

BurnsideEngine parse_engine(const std::string& name) {
  if (name == "tables") return BurnsideEngine::tables;
  if (name == "naive") return BurnsideEngine::naive;
  if (name == "classes") return BurnsideEngine::classes;
  throw ParseError("unknown engine '" + name + "'");
}

void emit(const Options& o, const std::string& verb, const std::string& text, const json& value) {
  if (o.format == "json")
    std::cout << json{{"command", verb}, {"result", value}}.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

std::string str(const BigInt& v) { return v.get_str(); }

int run_count(const Options& o, const std::string& verb) {
  const Quiver q = load_quiver(o.quiver);
  const FiniteAlgebra R = load_ring(o.ring);
  const RankVector alpha = load_rank(o.rank, q);
  const CountOptions opts{o.limits, parse_engine(o.engine), 0};
  BigInt v;
  if (verb == "brute-m")
    v = m_count(q, R, alpha, opts);
  else if (verb == "brute-a")
    v = a_count(q, R, alpha, opts);
  else if (verb == "brute-preproj-m")
    v = m_preproj(q, R, alpha, opts);
  else
    v = a_preproj(q, R, alpha, opts);
  emit(o, verb, str(v), json_out::count(v));
  return ok;
}

int run_verify_cmd(const Options& o) {
  VerifyOptions vo{o.limits, o.slow};
  int total = 0;
  int failed = 0;
  int errors = 0;
  json checks = json::array();
  run_verify(o.suite, vo, [&](const CheckResult& r) {
    ++total;
    failed += r.status == CheckStatus::fail;
    errors += r.status == CheckStatus::error;
    if (o.format == "json") {
      checks.push_back({{"suite", r.suite},
                        {"label", r.label},
                        {"status", to_string(r.status)},
                        {"detail", r.detail},
                        {"seconds", r.seconds}});
    } else {
      std::cout << to_string(r.status) << "  [" << r.suite << "] " << r.label;
      if (!r.detail.empty()) std::cout << "\n        " << r.detail;
      std::cout << std::endl;
    }
  });
  if (o.format == "json")
    std::cout << json{{"command", "verify"}, {"checks", checks}, {"failed", failed}, {"errors", errors}}.dump(2) << "\n";
  else
    std::cout << total << " checks, " << failed << " failed, " << errors << " errors\n";
  if (failed) return verification_failed;
  return errors ? guard : ok;
}

int dispatch(const std::string& verb, const Options& o) {
  if (verb == "verify") return run_verify_cmd(o);
  if (verb == "counterexample") {
    const CounterexampleCounts c = counterexample_counts(o.n, o.q, o.limits);
    std::ostringstream text;
    text << "A = " << c.a << "\nB = " << c.b << "\nB - A = " << (c.b - c.a);
    emit(o, verb, text.str(), json{{"a", str(c.a)}, {"b", str(c.b)}, {"difference", str(c.b - c.a)}});
    return ok;
  }
  if (verb == "qeulerian") {
    const BiPoly f = q_eulerian(o.n, o.limits);
    emit(o, verb, f.to_string(), json_out::bipoly(f));
    return ok;
  }
  if (verb.rfind("brute-", 0) == 0) return run_count(o, verb);
  if (verb == "fourier") {
    const Quiver q = load_quiver(o.quiver);
    const FourierSides s = fourier_sides(q, load_ring(o.ring), load_rank(o.rank, q), o.limits);
    std::ostringstream text;
    text << "direct  = " << s.direct << "\nfourier = " << s.fourier;
    emit(o, verb, text.str(), json{{"direct", str(s.direct)}, {"fourier", str(s.fourier)}});
    return s.direct == s.fourier ? ok : verification_failed;
  }

  const Quiver q = load_quiver(o.quiver);
  const Multigraph& g = q.graph();
  if (verb == "poly") {
    const LaurentPoly p = a_d_polynomial(g, o.d, o.limits);
    emit(o, verb, p.to_string(), json_out::poly(p));
  } else if (verb == "rdpoly") {
    const LaurentPoly p = r_d_polynomial(g, o.d, o.limits);
    emit(o, verb, p.to_string(), json_out::poly(p));
  } else if (verb == "genfun") {
    std::ostringstream text;
    json value = json::object();
    if (o.which != "r") {
      const RatFunQT a = a_genfun(g, o.limits);
      text << "A = " << a.to_factored_string();
      value["A"] = json_out::ratfun(a);
    }
    if (o.which != "a") {
      const RatFunQT r = r_genfun(g, o.limits);
      if (o.which != "r") text << "\n";
      text << "R = " << r.to_factored_string();
      value["R"] = json_out::ratfun(r);
    }
    emit(o, verb, text.str(), value);
  } else if (verb == "series") {
    const RatFunQT a = a_genfun(g, o.limits);
    std::ostringstream text;
    json value = json::array();
    for (int d = 0; d <= o.n; ++d) {
      const LaurentPoly c = a.series_coefficient(d);
      text << (d ? "\n" : "") << "T^" << d << ": " << c;
      value.push_back(json_out::poly(c));
    }
    emit(o, verb, text.str(), value);
  } else if (verb == "tutte") {
    const BiPoly t = tutte(g);
    emit(o, verb, t.to_string("x", "y", TermOrder::graded), json_out::bipoly(t));
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counts of locally free quiver representations and toric generating functions"};
  app.require_subcommand(1);
  Options o;

  auto add_limits = [&](CLI::App* c) {
    c->add_option("--max-edges", o.limits.max_edges, "Largest edge count for subset and filtration sums");
    c->add_option("--max-depth-functions", o.limits.max_depth_functions, "Largest number of depth functions");
    c->add_option("--max-group", o.limits.max_group, "Largest group (or class tuple count) walked");
    c->add_option("--max-points", o.limits.max_points, "Largest point set enumerated");
    c->add_option("--max-table", o.limits.max_table, "Largest matrix scan or memo table");
    c->add_flag("--unlimited", o.limits.unlimited, "Disable all size limits");
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_quiver = [&](CLI::App* c) {
    c->add_option("--quiver", o.quiver, "Quiver file, or builtin:NAME (C3, A3, D2, Sm:2, point)")->required();
  };
  auto add_rep = [&](CLI::App* c) {
    add_quiver(c);
    c->add_option("--ring", o.ring, "Ring spec: fq(p[,k]), kd(R,d), eps(R), sqz(fq(p[,k]),n)")->required();
    c->add_option("--rank", o.rank, "Rank vector, e.g. 1,2,1")->required();
  };

  std::vector<std::pair<std::string, CLI::App*>> cmds;
  auto cmd = [&](const std::string& name, const std::string& help) {
    CLI::App* c = app.add_subcommand(name, help);
    add_limits(c);
    cmds.emplace_back(name, c);
    return c;
  };

  auto* poly = cmd("poly", "A_d(Q, q): toric absolutely indecomposable count");
  add_quiver(poly);
  poly->add_option("-d", o.d, "Truncation depth d of k[t]/(t^d)")->check(CLI::NonNegativeNumber);
  auto* rdpoly = cmd("rdpoly", "R_d(G, q) of the underlying graph");
  add_quiver(rdpoly);
  rdpoly->add_option("-d", o.d, "Truncation depth")->check(CLI::NonNegativeNumber);
  auto* genfun = cmd("genfun", "Generating functions A(Q, q, T) and R(G, q, T)");
  add_quiver(genfun);
  genfun->add_option("--which", o.which, "Which function")->check(CLI::IsMember({"a", "r", "both"}));
  auto* series = cmd("series", "Coefficients of T^0..T^n in A(Q, q, T)");
  add_quiver(series);
  series->add_option("-n", o.n, "Series order")->check(CLI::NonNegativeNumber);
  add_quiver(cmd("tutte", "Tutte polynomial T(G; x, y)"));
  cmd("qeulerian", "q-Eulerian polynomial F_n")->add_option("-n", o.n, "Index m of F_m")->check(CLI::NonNegativeNumber);
  for (const char* name : {"brute-m", "brute-a", "brute-preproj-m", "brute-preproj-a"}) {
    auto* c = cmd(name, std::string("Burnside count ") + name + " over a finite ring");
    add_rep(c);
    c->add_option("--engine", o.engine, "Burnside engine")->check(CLI::IsMember({"tables", "naive", "classes"}));
  }
  add_rep(cmd("fourier", "Zero fiber of the moment map, directly and by Fourier transform"));
  auto* counter = cmd("counterexample", "Orbit counts over F_q[t_1..t_n]/(t)^2");
  counter->add_option("-n", o.n, "Number of variables")->check(CLI::PositiveNumber);
  counter->add_option("-q", o.q, "Residue field size")->check(CLI::PositiveNumber);
  auto* verify = cmd("verify", "Run a verification suite");
  std::vector<std::string> suites = verify_suite_names();
  suites.push_back("all");
  verify->add_option("suite", o.suite, "Suite name")->check(CLI::IsMember(suites));
  verify->add_flag("--slow", o.slow, "Include checks that take minutes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }
  for (const auto& [name, c] : cmds) {
    if (!c->parsed()) continue;
    try {
      return dispatch(name, o);
    } catch (const ParseError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return usage;
    } catch (const InvalidArgument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return usage;
    } catch (const GuardExceeded& e) {
      std::cerr << "guard exceeded: " << e.what() << "\n";
      return guard;
    } catch (const InternalError& e) {
      std::cerr << "verification failure: " << e.what() << "\n";
      return verification_failed;
    }
  }
  return usage;
}
