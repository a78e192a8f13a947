#include "trop/commands.hpp"

#include <chrono>
#include <set>
#include <json.hpp>
#include <random>

#include "trop/problem_io.hpp"
#include "trop/reconstruct.hpp"
#include "trop/resultant.hpp"
#include "trop/surface_graph.hpp"

namespace trop {

using nlohmann::json;

namespace {

json jvec(const IntVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

json jvec(const RatVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

json jmat(const IntMat& m) {
  json a = json::array();
  for (const auto& r : m) a.push_back(jvec(r));
  return a;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

std::string envelope(const std::string& command, const std::string& input,
                     const CommandOptions& opts, json payload,
                     const std::vector<std::string>& warnings, const Timer& timer) {
  json env;
  env["command"] = command;
  env["input_digest"] = fnv1a_digest(input);
  env["seed"] = opts.seed;
  env["warnings"] = warnings;
  env["payload"] = std::move(payload);
  env["timings"] = {{"total_ms", timer.ms()}};
  return env.dump(2) + "\n";
}

CommandResult fail(int code, const std::string& command, const std::string& message) {
  json env;
  env["command"] = command;
  env["error"] = message;
  return {code, env.dump(2) + "\n"};
}

template <typename Fn>
CommandResult guarded(const std::string& command, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    return fail(2, command, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(3, command, e.what());
  } catch (const std::exception& e) {
    return fail(4, command, e.what());
  }
}

json pair_to_json(const TropicalCycle& cycle, const TropicalPair& p) {
  json pj;
  json jarr = json::array();
  for (int j : p.J) jarr.push_back(j + 1);  // 1-based in the envelope
  pj["J"] = jarr;
  pj["cone_rays"] = jmat(p.normal_cone.rays());
  pj["cone_lineality"] = jmat(p.normal_cone.lineality());
  pj["witness"] = jvec(p.witness);
  pj["index"] = p.index.str();
  pj["mixed_volume"] = p.mv.str();
  pj["weight"] = p.weight().str();
  pj["span_basis"] = jmat(p.span_basis);
  json rays = json::array();
  for (const auto& r : p.cone.rays()) rays.push_back(jvec(r));
  pj["tropical_cone_rays"] = rays;
  pj["tropical_cone_lineality"] = jmat(p.cone.lineality());
  return pj;
}

json polytope_to_json(const LatticePolytope& q) {
  json out;
  out["vertices"] = json::array();
  for (const auto& v : q.vertices()) out["vertices"].push_back(jvec(v));
  out["equations"] = json::array();
  for (const auto& e : q.equations())
    out["equations"].push_back({{"normal", jvec(e.normal)}, {"value", e.offset.str()}});
  out["facets"] = json::array();
  for (const auto& f : q.facets())
    out["facets"].push_back({{"normal", jvec(f.normal)}, {"offset", f.offset.str()}});
  json fv = json::array();
  for (const auto& x : f_vector(q)) fv.push_back(x.str());
  out["f_vector"] = fv;
  out["dim"] = q.dim();
  return out;
}

ReconstructOptions recon_opts(const CommandOptions& opts) {
  ReconstructOptions r;
  r.seed = (unsigned long long)opts.seed;
  return r;
}

}  // namespace

CommandResult cmd_tropicalize(const std::string& input, const CommandOptions& opts) {
  return guarded("tropicalize", [&]() -> CommandResult {
    Timer timer;
    ProblemFile pf = parse_problem(input);
    SupportSystem sys = to_support_system(pf);
    TropicalCycle cycle = enumerate_cone_pairs(sys);
    json payload;
    payload["n"] = sys.n();
    payload["d"] = sys.dim;
    json rays = json::array();
    NormalFan fan = normal_fan(sys.sum_polytope);
    for (const auto& fc : fan.cones)
      if (fc.cone.dim() == 1 && !fc.cone.rays().empty()) {
        const IntVec& w = fc.cone.rays()[0];
        rays.push_back({{"w", jvec(w)}, {"psi", jvec(psi_int(sys, w))}});
      }
    payload["normal_rays"] = rays;
    json pairs = json::array();
    for (const auto& p : cycle.pairs) pairs.push_back(pair_to_json(cycle, p));
    payload["pairs"] = pairs;
    return {0, envelope("tropicalize", input, opts, payload, {}, timer)};
  });
}

CommandResult cmd_newton(const std::string& input, const CommandOptions& opts) {
  return guarded("newton", [&]() -> CommandResult {
    Timer timer;
    ProblemFile pf = parse_problem(input);
    SupportSystem sys = to_support_system(pf);
    if (sys.n() != sys.dim + 1 || !is_hypersurface(sys))
      return fail(3, "newton", "NOT_HYPERSURFACE: no support choice of full rank d");
    TropicalCycle cycle = enumerate_cone_pairs(sys);
    ReconstructedPolytope rec = reconstruct_newton(cycle, recon_opts(opts));
    json payload = polytope_to_json(rec.polytope);
    payload["lattice_point_count"] = std::to_string(lattice_points(rec.polytope).size());
    payload["degree"] = degree(cycle, (unsigned long long)opts.seed).str();
    return {0, envelope("newton", input, opts, payload, {}, timer)};
  });
}

CommandResult cmd_chow(const std::string& input, const CommandOptions& opts) {
  return guarded("chow", [&]() -> CommandResult {
    Timer timer;
    ProblemFile pf = parse_problem(input);
    SupportSystem sys = to_support_system(pf);
    TropicalCycle cycle = enumerate_cone_pairs(sys);
    int n = sys.n();

    // Battery of generic directions: perturbed +-coordinate directions
    // plus a few fully random ones.
    std::mt19937_64 rng((unsigned long long)opts.seed);
    Int bound = oracle_coordinate_bound(cycle);
    Int ncoef = 2000 * Int(n) * (bound + 1) + 1;
    std::vector<IntVec> bases;
    for (int i = 0; i < n; ++i)
      for (int s : {1, -1}) {
        IntVec b((size_t)n, 0);
        b[(size_t)i] = s;
        bases.push_back(b);
      }
    for (int k = 0; k < 4; ++k) {
      IntVec b((size_t)n);
      for (int i = 0; i < n; ++i) b[(size_t)i] = Int((long long)(rng() % 19)) - 9;
      bases.push_back(b);
    }
    json verts = json::array();
    std::set<IntVec> distinct;
    for (const auto& base : bases) {
      for (int attempt = 0; attempt < 64; ++attempt) {
        RatVec v((size_t)n);
        for (int i = 0; i < n; ++i)
          v[(size_t)i] = Rat(base[(size_t)i] * ncoef + Int((long long)(rng() % 2001)) - 1000);
        OracleResult r = chow_vertex(cycle, v);
        if (!r.ok) continue;
        verts.push_back({{"direction", jvec(v)}, {"vertex", jvec(r.vertex)}});
        distinct.insert(r.vertex);
        break;
      }
    }
    if (distinct.empty()) throw std::runtime_error("chow: genericity retries exhausted");
    json payload;
    payload["vertices"] = verts;
    json dv = json::array();
    for (const auto& v : distinct) dv.push_back(jvec(v));
    payload["distinct_vertices"] = dv;
    payload["degree"] = degree(cycle, (unsigned long long)opts.seed).str();
    return {0, envelope("chow", input, opts, payload, {}, timer)};
  });
}

CommandResult cmd_implicitize(const std::string& input, const CommandOptions& opts) {
  return guarded("implicitize", [&]() -> CommandResult {
    Timer timer;
    ProblemFile pf = parse_problem(input);
    SupportSystem sys = to_support_system(pf);
    std::vector<LaurentPolynomial> fs = to_laurent_system(pf);
    if (sys.n() != sys.dim + 1 || !is_hypersurface(sys))
      return fail(3, "implicitize", "NOT_HYPERSURFACE: no support choice of full rank d");
    TropicalCycle cycle = enumerate_cone_pairs(sys);
    ReconstructedPolytope rec = reconstruct_newton(cycle, recon_opts(opts));
    ImplicitizeOptions iopts;
    iopts.samples = opts.samples;
    iopts.seed = (unsigned long long)opts.seed;
    iopts.nullity_tol = opts.tol;
    ImplicitEquation eq = implicitize(fs, rec.polytope, iopts);
    if (eq.conditioning_failure)
      throw std::runtime_error("implicitize: no singular value under the nullity tolerance");
    std::vector<std::string> warnings;
    if (eq.non_generic) warnings.push_back("NON_GENERIC");
    json payload;
    payload["support"] = json::array();
    for (const auto& a : eq.support) payload["support"].push_back(jvec(a));
    payload["coefficients"] = json::array();
    for (const auto& c : eq.coefficients)
      payload["coefficients"].push_back({{"im", c.imag()}, {"re", c.real()}});
    payload["nullity"] = eq.nullity;
    payload["residual"] = {{"max", eq.residual_max}, {"mean", eq.residual_mean}};
    payload["sv_gap"] = eq.sv_gap;
    return {0, envelope("implicitize", input, opts, payload, warnings, timer)};
  });
}

CommandResult cmd_graph(const std::string& input, const CommandOptions& opts) {
  return guarded("graph", [&]() -> CommandResult {
    Timer timer;
    ProblemFile pf = parse_problem(input);
    SupportSystem sys = to_support_system(pf);
    TropicalCycle cycle = enumerate_cone_pairs(sys);
    SurfaceGraph g = surface_graph(cycle);
    if (opts.format == "dot") {
      std::string dot = "graph tropical_surface {\n";
      for (size_t i = 0; i < g.nodes.size(); ++i)
        dot += "  n" + std::to_string(i) + " [label=\"" + g.nodes[i].label + " " +
               vec_str(g.nodes[i].ray) + "\"];\n";
      for (const auto& e : g.edges)
        dot += "  n" + std::to_string(e.a) + " -- n" + std::to_string(e.b) + " [label=\"" +
               e.weight.str() + "\"];\n";
      dot += "}\n";
      return {0, dot};
    }
    json payload;
    payload["nodes"] = json::array();
    for (size_t i = 0; i < g.nodes.size(); ++i)
      payload["nodes"].push_back(
          {{"id", i}, {"label", g.nodes[i].label}, {"ray", jvec(g.nodes[i].ray)}});
    payload["edges"] = json::array();
    for (const auto& e : g.edges)
      payload["edges"].push_back({{"a", e.a}, {"b", e.b}, {"weight", e.weight.str()}});
    return {0, envelope("graph", input, opts, payload, {}, timer)};
  });
}

CommandResult cmd_oracle_curve(const std::string& input, const CommandOptions& opts) {
  return guarded("oracle-curve", [&]() -> CommandResult {
    Timer timer;
    ProblemFile pf = parse_problem(input);
    if (pf.dim != 1) throw std::invalid_argument("oracle-curve: requires d = 1");
    if (pf.polynomials.size() != 2) throw std::invalid_argument("oracle-curve: requires n = 2");
    std::vector<ExactLaurent> fs;
    for (size_t i = 0; i < 2; ++i) {
      const auto& pp = pf.polynomials[i];
      if (!pp.coefficients)
        throw std::invalid_argument("oracle-curve: coefficients required");
      ExactLaurent f;
      for (size_t k = 0; k < pp.support.size(); ++k) {
        const Complex& c = (*pp.coefficients)[k];
        if (c.imag() != 0.0)
          throw std::invalid_argument("oracle-curve: exact oracle requires real coefficients");
        f.push_back({pp.support[k][0], Rat(c.real())});
      }
      fs.push_back(std::move(f));
    }
    ExactCurveEquation eq = resultant_oracle(fs[0], fs[1]);
    json payload;
    payload["terms"] = json::array();
    for (const auto& [e, c] : eq.terms)
      payload["terms"].push_back({{"exponent", jvec(e)}, {"coefficient", c.str()}});
    LatticePolytope q = eq.newton_polygon();
    payload["newton_polygon"] = json::array();
    for (const auto& v : q.vertices()) payload["newton_polygon"].push_back(jvec(v));
    return {0, envelope("oracle-curve", input, opts, payload, {}, timer)};
  });
}

}  // namespace trop
