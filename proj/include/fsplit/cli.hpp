/*
  cli.hpp

  Command-line front end.  run_cli() parses argv, routes to the library and
  writes either text or JSON.  Exit codes: 0 the property holds / command
  succeeded, 1 it fails (witness on stderr and in JSON), 2 usage, input or
  guard error.

  Simple-root indices and Weyl words are 1-based on the command line.
*/
#pragma once

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fsplit/charalg.hpp"
#include "fsplit/fpoly.hpp"
#include "fsplit/poly_json.hpp"
#include "fsplit/report.hpp"
#include "fsplit/rootdata.hpp"
#include "fsplit/slnsplit.hpp"
#include "fsplit/verify.hpp"

namespace fsplit::cli {

using json = nlohmann::ordered_json;

inline std::vector<Int> parse_ints(const std::string& s) {
  std::vector<Int> out;
  if (s.empty() || s == "e") return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(item, &used);
      if (used != item.size()) throw InputError("");
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError("not an integer list: '" + s + "'");
    }
  }
  return out;
}

inline Weight parse_weight(const RootSystem& rs, const std::string& s) {
  auto v = parse_ints(s);
  if (v.size() != static_cast<std::size_t>(rs.rank()))
    throw InputError("weight '" + s + "' must have " + std::to_string(rs.rank()) + " coordinates");
  return Weight(std::move(v));
}

// 1-based indices from the command line to 0-based.
inline std::vector<int> parse_indices(const std::string& s, int rank) {
  std::vector<int> out;
  for (Int v : parse_ints(s)) {
    if (v < 1 || v > rank) throw InputError("simple index " + std::to_string(v) + " out of range");
    out.push_back(static_cast<int>(v - 1));
  }
  return out;
}

inline std::vector<int> one_based(const std::vector<int>& v) {
  std::vector<int> r;
  for (int i : v) r.push_back(i + 1);
  return r;
}

inline json system_json(const RootSystem& rs) {
  json j;
  j["type"] = std::string(1, rs.type());
  j["rank"] = rs.rank();
  return j;
}

inline std::string character_text(const Character& c) {
  std::string s = "dimension " + std::to_string(c.dimension()) + "\n";
  for (const auto& [w, m] : c.terms()) s += w.to_string() + " : " + std::to_string(m) + "\n";
  return s;
}

inline std::string decomposition_text(const GoodFiltrationDecomposition& d) {
  std::string s;
  for (const auto& [w, m] : d.layers) {
    if (!s.empty()) s += " + ";
    s += (m == 1 ? "" : std::to_string(m) + "*") + "H0" + w.to_string();
  }
  return s.empty() ? "0" : s;
}

inline std::string exponent_text(const SparsePolynomial& f, const Exponent& e) {
  return f.monomial(e).to_string();
}

struct Context {
  RunConfig cfg;
  std::ostream& out;
  std::ostream& err;

  void emit(const json& j, const std::string& text) const {
    if (cfg.json) out << j.dump(2) << "\n";
    else out << text;
  }
};

inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"fsplit: Frobenius splitting and character checks for cotangent bundles of flag varieties"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "TOML-style config file (flags win)");

  Context ctx{RunConfig{}, out, err};
  RunConfig& cfg = ctx.cfg;
  app.add_flag("--json", cfg.json, "machine-readable output");
  app.add_flag("--timing", cfg.timing, "include elapsed time in reports");
  app.add_option("--seed", cfg.seed, "random seed for property suites");
  app.add_option("--term-cap", cfg.limits.term_cap, "maximum terms per character or polynomial");
  app.add_option("--dim-cap", cfg.limits.dim_cap, "maximum module dimension");
  app.add_option("--weyl-cap", cfg.limits.weyl_order_cap, "maximum enumerated Weyl group order");
  app.add_option("--enum-cap", cfg.limits.enum_cap, "maximum enumeration size");

  std::function<int()> action;
  auto on = [&](CLI::App* sub, std::function<int()> fn) {
    sub->callback([&action, fn = std::move(fn)] { action = fn; });
  };

  // Shared option storage.
  std::string sys, weight, word, parabolic, than, file, times, ideal, out_file, subset, compat;
  int index = 0, degree = 0, max_degree = 6, n = 1, rank_cap = 3;
  Int p = 0;
  std::optional<int> opt_n;
  std::optional<std::uint64_t> opt_p;

  // ---- rs ----
  auto* rs_cmd = app.add_subcommand("rs", "root system data");
  rs_cmd->require_subcommand(1);
  auto* rs_show = rs_cmd->add_subcommand("show", "roots, rho, Coxeter number, good primes");
  rs_show->add_option("system", sys)->required();
  on(rs_show, [&] {
    RootSystem rs = RootSystem::parse(sys);
    json j = system_json(rs);
    j["cartan"] = rs.cartan();
    json roots = json::array();
    for (const auto& a : rs.positive_roots()) roots.push_back({{"simple", a.simple}, {"weight", a.weight.coords()}});
    j["positive_roots"] = roots;
    j["num_positive"] = rs.num_positive();
    j["rho"] = rs.rho().coords();
    j["highest_root"] = rs.highest_root().simple;
    j["coxeter_number"] = rs.coxeter_number();
    j["good_primes"] = "p ≥ " + std::to_string(rs.min_good_prime());
    j["min_good_prime"] = rs.min_good_prime();
    std::string t = rs.name() + ": N=" + std::to_string(rs.num_positive()) + " h=" +
                    std::to_string(rs.coxeter_number()) + " rho=" + rs.rho().to_string() +
                    " good primes p >= " + std::to_string(rs.min_good_prime()) + "\npositive roots:\n";
    for (const auto& a : rs.positive_roots()) t += "  " + Weight(a.simple).to_string() + "  weight " + a.weight.to_string() + "\n";
    ctx.emit(j, t);
    return 0;
  });
  auto* rs_good = rs_cmd->add_subcommand("good", "is p a good prime (exit 0 yes, 1 no)");
  rs_good->add_option("system", sys)->required();
  rs_good->add_option("--p", p)->required();
  on(rs_good, [&] {
    RootSystem rs = RootSystem::parse(sys);
    if (!is_prime(static_cast<std::uint64_t>(p))) throw InputError("p must be prime");
    bool good = rs.is_good_prime(p);
    json j = system_json(rs);
    j["p"] = p;
    j["good"] = good;
    ctx.emit(j, std::to_string(p) + (good ? " is good\n" : " is bad\n"));
    return good ? 0 : 1;
  });

  // ---- weight ----
  auto* w_cmd = app.add_subcommand("weight", "weight combinatorics");
  w_cmd->require_subcommand(1);
  auto add_sys_weight = [&](CLI::App* c) {
    c->add_option("system", sys)->required();
    c->add_option("--weight", weight, "comma-separated fundamental coordinates")->required()->allow_extra_args(false);
  };
  auto* w_reflect = w_cmd->add_subcommand("reflect", "s_i(lambda)");
  add_sys_weight(w_reflect);
  w_reflect->add_option("--index", index)->required();
  on(w_reflect, [&] {
    RootSystem rs = RootSystem::parse(sys);
    Weight lam = parse_weight(rs, weight);
    if (index < 1 || index > rs.rank()) throw InputError("index out of range");
    Weight r = rs.reflect(index - 1, lam);
    json j = system_json(rs);
    j["weight"] = lam.coords();
    j["index"] = index;
    j["result"] = r.coords();
    ctx.emit(j, r.to_string() + "\n");
    return 0;
  });
  auto* w_dot = w_cmd->add_subcommand("dot", "w . lambda");
  add_sys_weight(w_dot);
  w_dot->add_option("--word", word, "1-based simple indices, s_{w1} s_{w2} ...; empty for e");
  on(w_dot, [&] {
    RootSystem rs = RootSystem::parse(sys);
    Weight lam = parse_weight(rs, weight);
    auto w = parse_indices(word, rs.rank());
    Weight r = rs.dot(w, lam);
    json j = system_json(rs);
    j["weight"] = lam.coords();
    j["word"] = one_based(w);
    j["length"] = rs.length(w);
    j["result"] = r.coords();
    ctx.emit(j, r.to_string() + "\n");
    return 0;
  });
  auto* w_classify = w_cmd->add_subcommand("classify", "dominant / cone C / P-regular");
  add_sys_weight(w_classify);
  w_classify->add_option("--parabolic", parabolic, "1-based simple indices of I");
  on(w_classify, [&] {
    RootSystem rs = RootSystem::parse(sys);
    Weight lam = parse_weight(rs, weight);
    auto par = rs.parabolic(parse_indices(parabolic, rs.rank()));
    json j = system_json(rs);
    j["weight"] = lam.coords();
    j["dominant"] = rs.is_dominant(lam);
    j["in_cone_C"] = rs.in_cone_C(lam);
    j["parabolic"] = one_based(par.subset);
    j["P_regular"] = rs.is_P_regular(lam, par);
    if (auto sc = rs.simple_coords(lam)) j["simple_coords"] = *sc;
    else j["simple_coords"] = nullptr;
    std::string t = std::string("dominant: ") + (rs.is_dominant(lam) ? "yes" : "no") +
                    "\nin C: " + (rs.in_cone_C(lam) ? "yes" : "no") +
                    "\nP-regular: " + (rs.is_P_regular(lam, par) ? "yes" : "no") + "\n";
    ctx.emit(j, t);
    return 0;
  });
  auto* w_leq = w_cmd->add_subcommand("leq", "mu <= lambda in dominance order (exit 0 yes, 1 no)");
  add_sys_weight(w_leq);
  w_leq->add_option("--than", than, "lambda")->required();
  on(w_leq, [&] {
    RootSystem rs = RootSystem::parse(sys);
    Weight mu = parse_weight(rs, weight), lam = parse_weight(rs, than);
    bool leq = rs.dominance_leq(mu, lam);
    json j = system_json(rs);
    j["mu"] = mu.coords();
    j["lambda"] = lam.coords();
    j["leq"] = leq;
    ctx.emit(j, leq ? "yes\n" : "no\n");
    return leq ? 0 : 1;
  });
  auto* w_reduce = w_cmd->add_subcommand("reduce", "reduction along simple roots inside the cone C");
  add_sys_weight(w_reduce);
  w_reduce->add_option("--degree", degree)->required();
  on(w_reduce, [&] {
    RootSystem rs = RootSystem::parse(sys);
    Weight lam = parse_weight(rs, weight);
    auto tr = rs.cone_reduce(lam, degree);
    json j = system_json(rs);
    j["weight"] = lam.coords();
    j["degree"] = degree;
    j["steps"] = one_based(tr.steps);
    json ws = json::array();
    for (const auto& w : tr.weights) ws.push_back(w.coords());
    j["weights"] = ws;
    std::string t;
    if (auto* d = std::get_if<ReductionTrace::Dominant>(&tr.outcome)) {
      j["outcome"] = "Dominant";
      j["dominant"] = d->weight.coords();
      j["remaining_degree"] = d->remaining_degree;
      t = "Dominant(" + d->weight.to_string() + ", " + std::to_string(d->remaining_degree) + ")";
    } else {
      j["outcome"] = "AllCohomologyVanishes";
      t = "AllCohomologyVanishes";
    }
    std::string steps;
    for (int s : one_based(tr.steps)) steps += (steps.empty() ? "" : ",") + std::to_string(s);
    ctx.emit(j, "steps [" + steps + "]\n" + t + "\n");
    return 0;
  });

  // ---- char ----
  auto* c_cmd = app.add_subcommand("char", "formal characters");
  c_cmd->require_subcommand(1);
  auto emit_char = [&](const RootSystem& rs, json j, const Character& c) {
    j["dimension"] = c.dimension();
    j["character"] = character_json(c);
    (void)rs;
    ctx.emit(j, character_text(c));
    return 0;
  };
  auto* c_weyl = c_cmd->add_subcommand("weyl", "ch H^0(G/B, lambda), lambda dominant");
  add_sys_weight(c_weyl);
  on(c_weyl, [&] {
    RootSystem rs = RootSystem::parse(sys);
    Weight lam = parse_weight(rs, weight);
    json j = system_json(rs);
    j["weight"] = lam.coords();
    return emit_char(rs, j, weyl_character(rs, lam, cfg.limits));
  });
  auto* c_euler = c_cmd->add_subcommand("euler", "Euler characteristic of the line bundle");
  add_sys_weight(c_euler);
  on(c_euler, [&] {
    RootSystem rs = RootSystem::parse(sys);
    Weight lam = parse_weight(rs, weight);
    json j = system_json(rs);
    j["weight"] = lam.coords();
    return emit_char(rs, j, euler_char(rs, lam, cfg.limits));
  });
  auto* c_sym = c_cmd->add_subcommand("sym", "ch S^n(u_P^*)");
  c_sym->add_option("system", sys)->required();
  c_sym->add_option("--degree", degree)->required();
  c_sym->add_option("--parabolic", parabolic);
  on(c_sym, [&] {
    RootSystem rs = RootSystem::parse(sys);
    auto par = rs.parabolic(parse_indices(parabolic, rs.rank()));
    json j = system_json(rs);
    j["degree"] = degree;
    j["parabolic"] = one_based(par.subset);
    return emit_char(rs, j, sym_power_char(rs, par, degree, cfg.limits));
  });
  auto* c_ext = c_cmd->add_subcommand("ext", "ch Lambda^j((g/b)^*)");
  c_ext->add_option("system", sys)->required();
  c_ext->add_option("--degree", degree)->required();
  on(c_ext, [&] {
    RootSystem rs = RootSystem::parse(sys);
    json j = system_json(rs);
    j["degree"] = degree;
    return emit_char(rs, j, exterior_power_char(rs, degree, cfg.limits));
  });
  auto* c_trunc = c_cmd->add_subcommand("trunc", "ch k[U_1]");
  c_trunc->add_option("system", sys)->required();
  c_trunc->add_option("--p", p)->required();
  on(c_trunc, [&] {
    RootSystem rs = RootSystem::parse(sys);
    json j = system_json(rs);
    j["p"] = p;
    return emit_char(rs, j, truncated_char(rs, p, cfg.limits));
  });
  auto* c_koszul = c_cmd->add_subcommand("koszul", "Euler-level Koszul identity (exit 0 pass, 1 fail)");
  add_sys_weight(c_koszul);
  c_koszul->add_option("--degree", degree)->required();
  c_koszul->add_option("--index", index)->required();
  on(c_koszul, [&] {
    RootSystem rs = RootSystem::parse(sys);
    Weight lam = parse_weight(rs, weight);
    if (index < 1 || index > rs.rank()) throw InputError("index out of range");
    auto k = koszul_check(rs, degree, lam, index - 1, cfg.limits);
    json j = system_json(rs);
    j["weight"] = lam.coords();
    j["degree"] = degree;
    j["index"] = index;
    j["identity_holds"] = k.identity_holds;
    j["vanishing_asserted"] = k.vanishing_asserted;
    j["vanishing_holds"] = k.vanishing_holds;
    j["total"] = character_json(k.total);
    j["shifted"] = character_json(k.shifted);
    j["parabolic"] = character_json(k.parabolic);
    j["status"] = k.pass() ? "pass" : "fail";
    ctx.emit(j, std::string(k.pass() ? "pass" : "fail") + ": chi(S^n u* x lambda) dim " +
                    std::to_string(k.total.dimension()) + " = " + std::to_string(k.shifted.dimension()) + " + " +
                    std::to_string(k.parabolic.dimension()) + "\n");
    if (!k.pass()) err << "koszul identity failed\n";
    return k.pass() ? 0 : 1;
  });

  // ---- filt ----
  auto* filt = app.add_subcommand("filt", "graded H^0(G/B, S u_P^* (x) lambda) and good-filtration layers");
  add_sys_weight(filt);
  filt->add_option("--max-degree", max_degree)->required();
  filt->add_option("--parabolic", parabolic);
  on(filt, [&] {
    RootSystem rs = RootSystem::parse(sys);
    Weight lam = parse_weight(rs, weight);
    auto par = rs.parabolic(parse_indices(parabolic, rs.rank()));
    auto rep = graded_section_char(rs, lam, max_degree, par, cfg.limits);
    json j = system_json(rs);
    j["weight"] = lam.coords();
    j["parabolic"] = one_based(par.subset);
    json degs = json::array();
    std::string t;
    for (const auto& [d, c] : rep.graded) {
      const auto& dec = rep.decompositions.at(d);
      json e{{"degree", d}, {"dimension", c.dimension()}, {"ok", dec.ok}};
      if (dec.ok) {
        e["decomposition"] = decomposition_json(dec.decomposition);
        t += "n=" + std::to_string(d) + " dim " + std::to_string(c.dimension()) + ": " +
             decomposition_text(dec.decomposition) + "\n";
      } else {
        e["witness"] = {{"weight", dec.witness->coords()}, {"coefficient", dec.witness_coefficient}, {"reason", dec.reason}};
        t += "n=" + std::to_string(d) + " FAILS at " + dec.witness->to_string() + " (" + dec.reason + ")\n";
        err << "degree " << d << ": no good filtration, witness " << dec.witness->to_string() << "\n";
      }
      degs.push_back(e);
    }
    j["degrees"] = degs;
    j["status"] = rep.all_decompose() ? "pass" : "fail";
    ctx.emit(j, t);
    return rep.all_decompose() ? 0 : 1;
  });

  // ---- g1 ----
  auto* g1 = app.add_subcommand("g1", "predicted H^i(G_1, H^0(w.0 + p lambda))^[-1]");
  add_sys_weight(g1);
  g1->add_option("--word", word);
  g1->add_option("--p", p)->required();
  g1->add_option("--max-degree", max_degree, "largest i reported");
  on(g1, [&] {
    RootSystem rs = RootSystem::parse(sys);
    Weight lam = parse_weight(rs, weight);
    auto w = parse_indices(word, rs.rank());
    auto res = g1_cohomology_char(rs, w, lam, p, max_degree, cfg.limits);
    json j = system_json(rs);
    j["word"] = one_based(w);
    j["length"] = rs.length(w);
    j["weight"] = lam.coords();
    j["p"] = p;
    j["target"] = (rs.dot(w, rs.zero()) + p * lam).coords();
    json degs = json::array();
    std::string t;
    for (const auto& [i, c] : res) {
      auto dec = decompose_good_filtration(rs, c, cfg.limits);
      degs.push_back({{"i", i}, {"dimension", c.dimension()}, {"character", character_json(c)},
                      {"decomposition", decomposition_json(dec.decomposition)}});
      t += "i=" + std::to_string(i) + " dim " + std::to_string(c.dimension()) + ": " +
           decomposition_text(dec.decomposition) + "\n";
    }
    j["degrees"] = degs;
    ctx.emit(j, t);
    return 0;
  });

  // ---- poly ----
  auto* poly = app.add_subcommand("poly", "polynomials over F_p");
  poly->require_subcommand(1);
  auto* p_check = poly->add_subcommand("check", "splitting criterion (exit 0 splits, 1 not)");
  p_check->add_option("--file", file)->required();
  on(p_check, [&] {
    auto f = read_poly_file(file);
    auto v = is_splitting_function(f);
    json j{{"splits", v.splits}, {"top_coefficient", v.top_coefficient}};
    if (v.witness) {
      j["witness"] = *v.witness;
      j["reason"] = v.reason;
      err << "not a splitting: " << v.reason << " at " << exponent_text(f, *v.witness) << "\n";
    }
    ctx.emit(j, v.splits ? "splits\n" : "does not split\n");
    return v.splits ? 0 : 1;
  });
  auto* p_trace = poly->add_subcommand("trace", "sigma_f(g)");
  p_trace->add_option("--file", file)->required();
  p_trace->add_option("--times", times)->required();
  on(p_trace, [&] {
    auto f = read_poly_file(file);
    auto g = read_poly_file(times);
    if (!f.compatible(g)) throw InputError("f and g must share p and vars");
    auto t = frobenius_trace(f, g, cfg.limits.term_cap);
    out << poly_to_string(t) << "\n";
    return 0;
  });
  auto* p_compat = poly->add_subcommand("compat", "ideal preserved by sigma_f (exit 0 yes, 1 no)");
  p_compat->add_option("--file", file)->required();
  p_compat->add_option("--ideal", ideal, "comma-separated variable names")->required();
  on(p_compat, [&] {
    auto f = read_poly_file(file);
    VariableIdeal J;
    std::stringstream ss(ideal);
    std::string name;
    while (std::getline(ss, name, ',')) {
      auto i = f.var_index(name);
      if (!i) throw InputError("unknown variable " + name);
      J.generators.push_back(*i);
    }
    if (!is_splitting_function(f).splits) throw InputError("f is not a splitting function");
    auto v = splits_ideal_compatibly(f, J);
    json j{{"compatible", v.compatible}};
    if (!v.compatible) {
      j["witness_monomial"] = *v.witness_monomial;
      j["witness_trace"] = poly_to_json(*v.witness_trace);
      err << "trace of " << exponent_text(f, *v.witness_monomial) << " is " << v.witness_trace->to_string()
          << ", outside the ideal\n";
    }
    ctx.emit(j, v.compatible ? "compatible\n" : "not compatible\n");
    return v.compatible ? 0 : 1;
  });

  // ---- sln ----
  auto* sln = app.add_subcommand("sln", "type-A splitting functions on U^+ x u");
  sln->require_subcommand(1);
  auto add_np = [&](CLI::App* c) {
    c->add_option("--n", n, "rank")->required();
    c->add_option("--p", p, "prime")->required();
  };
  auto np_json = [&] { return json{{"n", n}, {"p", p}}; };
  auto* s_build = sln->add_subcommand("build", "minor-product function");
  add_np(s_build);
  s_build->add_option("--out", out_file);
  on(s_build, [&] {
    auto f = build_chart_function(n, static_cast<std::uint64_t>(p), cfg.limits);
    std::string s = poly_to_string(f.poly);
    if (out_file.empty()) {
      out << s << "\n";
    } else {
      std::ofstream o(out_file);
      if (!o) throw InputError("cannot write " + out_file);
      o << s << "\n";
      json j = np_json();
      j["terms"] = f.poly.size();
      j["out"] = out_file;
      ctx.emit(j, std::to_string(f.poly.size()) + " terms written to " + out_file + "\n");
    }
    return 0;
  });
  auto* s_check = sln->add_subcommand("check", "splitting criterion for the minor product");
  add_np(s_check);
  on(s_check, [&] {
    auto f = build_chart_function(n, static_cast<std::uint64_t>(p), cfg.limits);
    auto v = is_splitting_function(f.poly);
    json j = np_json();
    j["terms"] = f.poly.size();
    j["top_coefficient"] = v.top_coefficient;
    j["splits"] = v.splits;
    if (v.witness) {
      j["witness"] = *v.witness;
      err << "not a splitting: " << v.reason << " at " << exponent_text(f.poly, *v.witness) << "\n";
    }
    ctx.emit(j, std::string(v.splits ? "splits" : "does not split") + " (" + std::to_string(f.poly.size()) +
                    " terms, top coefficient " + std::to_string(v.top_coefficient) + ")\n");
    return v.splits ? 0 : 1;
  });
  auto* s_mvk = sln->add_subcommand("mvk", "homogeneous component of fibre degree N(p-1)");
  add_np(s_mvk);
  s_mvk->add_option("--compat", compat, "1-based parabolic indices, each checked separately");
  on(s_mvk, [&] {
    auto f = build_chart_function(n, static_cast<std::uint64_t>(p), cfg.limits);
    auto m = mvk_component(f);
    auto v = is_splitting_function(m);
    json j = np_json();
    j["terms"] = m.size();
    j["splits"] = v.splits;
    j["polynomial"] = poly_to_json(m);
    bool ok = v.splits;
    std::string t = m.to_string() + "\n" + (v.splits ? "splits\n" : "does not split\n");
    json cj = json::array();
    for (int i : parse_indices(compat, n)) {
      auto cv = splits_ideal_compatibly(m, levi_fiber_ideal(f, {i}));
      json e{{"subset", {i + 1}}, {"compatible", cv.compatible}};
      if (!cv.compatible) {
        e["witness_monomial"] = *cv.witness_monomial;
        err << "I={" << i + 1 << "}: trace of " << exponent_text(m, *cv.witness_monomial) << " leaves the ideal\n";
      }
      cj.push_back(e);
      t += "I={" + std::to_string(i + 1) + "}: " + (cv.compatible ? "compatible\n" : "not compatible\n");
      ok = ok && cv.compatible;
    }
    if (!compat.empty()) j["compat"] = cj;
    ctx.emit(j, t);
    return ok ? 0 : 1;
  });
  auto* s_canon = sln->add_subcommand("canonical", "canonical-splitting conditions");
  add_np(s_canon);
  on(s_canon, [&] {
    auto r = canonical_check(n, static_cast<std::uint64_t>(p), cfg.limits);
    const bool ok = r.pass(static_cast<std::uint64_t>(p));
    json j = np_json();
    j["weight_zero"] = r.weight_zero;
    json dirs = json::array();
    std::string t = std::string("T-invariant: ") + (r.weight_zero ? "yes" : "no") + "\n";
    for (const auto& d : r.directions) {
      dirs.push_back({{"simple", d.simple + 1}, {"t_degree", d.t_degree}, {"pure_weights", d.pure_weights}});
      t += "alpha_" + std::to_string(d.simple + 1) + ": t-degree " + std::to_string(d.t_degree) +
           (d.pure_weights ? ", pure weights\n" : ", mixed weights\n");
    }
    j["directions"] = dirs;
    j["status"] = ok ? "pass" : "fail";
    if (!ok) err << "canonical conditions fail\n";
    ctx.emit(j, t);
    return ok ? 0 : 1;
  });
  auto* s_par = sln->add_subcommand("parabolic", "splitting function on U_P^+ x u_P");
  add_np(s_par);
  s_par->add_option("--subset", subset, "1-based simple indices of I")->required();
  on(s_par, [&] {
    auto I = parse_indices(subset, n);
    auto f = build_parabolic_chart_function(n, static_cast<std::uint64_t>(p), I, cfg.limits);
    auto v = is_splitting_function(f.poly);
    json j = np_json();
    j["subset"] = one_based(I);
    j["polynomial"] = poly_to_json(f.poly);
    j["splits"] = v.splits;
    if (v.witness) err << "not a splitting: " << v.reason << "\n";
    ctx.emit(j, f.poly.to_string() + "\n" + (v.splits ? "splits\n" : "does not split\n"));
    return v.splits ? 0 : 1;
  });

  // ---- verify ----
  auto* ver = app.add_subcommand("verify", "run an invariant suite");
  std::string suite;
  ver->add_option("suite", suite)->required()->check(CLI::IsMember({"rootdata", "charalg", "fpoly", "sln", "full"}));
  ver->add_option("--n", opt_n);
  ver->add_option("--p", opt_p);
  ver->add_option("--rank-cap", rank_cap);
  on(ver, [&] {
    Report rep("verify " + suite, cfg);
    if (suite == "rootdata" || suite == "full") verify_rootdata(rep, cfg);
    if (suite == "charalg" || suite == "full") verify_charalg(rep, cfg, rank_cap);
    if (suite == "fpoly" || suite == "full") verify_fpoly(rep, cfg);
    if (suite == "sln" || suite == "full") verify_sln(rep, cfg, opt_n, opt_p);
    if (cfg.json) out << rep.to_json().dump(2) << "\n";
    else out << rep.to_text();
    for (const auto& c : rep.sorted_checks())
      if (c.status == Status::Fail) err << "FAIL " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    return rep.exit_code();
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    cfg.validate();
    return action ? action() : 2;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    err << "guard exceeded: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace fsplit::cli
