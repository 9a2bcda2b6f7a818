#include "qapc/qapc.h"

#include "compiler.hpp"
#include "io.hpp"
#include "mwis.hpp"
#include "oracle.hpp"
#include "qap.hpp"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

using nlohmann::json;

extern "C" {
struct qapc_instance {
  qapc::QapInstance inst;
};

struct qapc_compiled {
  std::string formulation;
  qapc::CompiledCircuit cc;
  std::optional<qapc::ReducedCircuit> rc; // reduced pipeline only
};
}

namespace {

using namespace qapc;

thread_local std::string g_last_error;

int fail(int code, const std::string &msg) {
  g_last_error = msg;
  return code;
}

int put_string(const std::string &s, char **out) {
  if (!out) return fail(QAPC_E_PARSE, "null output pointer");
  char *copy = static_cast<char *>(std::malloc(s.size() + 1));
  if (!copy) return fail(QAPC_E_INTERNAL, "out of memory");
  std::memcpy(copy, s.c_str(), s.size() + 1);
  *out = copy;
  return QAPC_OK;
}

// Exceptions crossing the C boundary become status codes: malformed input
// maps to parse, broken library invariants to internal. Verification and
// timeout outcomes are decided at the call sites, not here.
template <typename F> int guarded(F &&f) {
  try {
    g_last_error.clear();
    return f();
  } catch (const ParseError &e) {
    return fail(QAPC_E_PARSE, e.what());
  } catch (const IoError &e) {
    return fail(QAPC_E_PARSE, e.what());
  } catch (const QapError &e) {
    return fail(QAPC_E_PARSE, e.what());
  } catch (const MwisError &e) {
    return fail(QAPC_E_PARSE, e.what());
  } catch (const CertificationFailure &e) {
    return fail(QAPC_E_VERIFY, e.what());
  } catch (const std::exception &e) {
    return fail(QAPC_E_INTERNAL, e.what());
  } catch (...) {
    return fail(QAPC_E_INTERNAL, "unknown error");
  }
}

qapc_compiled build_compiled(const QapInstance &inst, const std::string &formulation,
                             const std::string &delta) {
  qapc_compiled b;
  b.formulation = formulation;
  const FragmentLibrary &lib = standard_library();
  Rat bound;
  if (formulation == "reduced") {
    b.rc = reduced_circuit(inst);
    b.cc = stitch(b.rc->circuit, lib, /*require_closed=*/true);
    bound = b.rc->delta_bound;
  } else if (formulation == "canonical") {
    Circuit c = naive_circuit(inst);
    b.cc = stitch(c, lib, /*require_closed=*/true);
    if (!b.cc.w_tilde.is_constant())
      throw CompileError("stitched slack of a concrete circuit must be numeric");
    bound = Rat(2) * b.cc.w_tilde.c;
    if (bound < 0) bound = 0;
  } else {
    throw IoError("unknown formulation '" + formulation + "' (want reduced or canonical)");
  }
  if (delta == "auto") {
    choose_delta(b.cc, bound);
  } else {
    auto v = rat_parse(delta);
    if (!v || *v <= 0) throw IoError("delta must be 'auto' or a positive rational, got '" +
                                     delta + "'");
    b.cc.delta = *v;
  }
  return b;
}

SolveReport run_solver(const LatticeGraph &g, const Rat &delta, const std::string &solver,
                       double timeout_secs) {
  SolveReport rep;
  if (solver == "brute") {
    rep = brute_mwis(g);
    if (rep.weight.bias.is_constant()) rep.resolved = rep.weight.eval(delta);
  } else if (solver == "bnb") {
    rep = bnb_mwis(g, delta, timeout_secs);
  } else {
    throw IoError("unknown solver '" + solver + "' (want brute or bnb)");
  }
  return rep;
}

json summary_json(const qapc_compiled &b) {
  json j{{"formulation", b.formulation},
         {"k", b.cc.k},
         {"w_tilde", b.cc.w_tilde.str()},
         {"matched_pairs", b.cc.matched_pairs},
         {"tiles", b.cc.source.tiles.size()},
         {"vertices", b.cc.graph.vertices.size()}};
  if (b.cc.delta > 0) j["delta"] = rat_str(b.cc.delta);
  if (b.rc) j["delta_bound"] = rat_str(b.rc->delta_bound);
  if (b.cc.measured_w_tilde) j["measured_w_tilde"] = b.cc.measured_w_tilde->str();
  return j;
}

// Wire values of the canonical layout sit on the top terminators, one per
// wire, matrix entries in row-major wire order.
std::vector<int> canonical_bits(const CircuitAssignment &a, int n) {
  std::vector<int> bits;
  for (int p = 1; p <= n * n; ++p) {
    auto it = a.values.find({0, p, 4});
    if (it == a.values.end())
      throw QapError("decoded assignment misses wire " + std::to_string(p));
    bits.push_back(it->second);
  }
  return bits;
}

// Shared by qapc_qap_solve and qapc_check. Returns a status code; fills
// `out` whenever there is something to report (including on timeout).
int do_qap_solve(const QapInstance &inst, const std::string &formulation,
                 const std::string &delta, const std::string &solver, double timeout_secs,
                 bool include_timing, json &out) {
  inst.validate();
  qapc_compiled b = build_compiled(inst, formulation, delta);
  SolveReport rep = run_solver(b.cc.graph, b.cc.delta, solver, timeout_secs);
  json report = json::parse(solve_report_to_json(rep, include_timing));
  if (rep.timed_out) {
    out = json{{"timed_out", true}, {"summary", summary_json(b)}, {"report", report}};
    return fail(QAPC_E_TIMEOUT, "solver budget exhausted before proving optimality");
  }
  Placement p;
  try {
    CircuitAssignment a = decode_assignment(b.cc.graph, rep.set);
    if (!assignment_consistent(b.cc.source, a))
      throw QapError("optimal set decodes to an inconsistent wire assignment");
    p = b.rc ? decode_placement(reduced_bits_from_assignment(*b.rc, a), inst.n)
             : placement_from_matrix(canonical_bits(a, inst.n), inst.n);
  } catch (const std::exception &e) {
    // The solver answered but the answer does not decode: the pipeline's
    // guarantee is broken, which is a verification failure, not bad input.
    out = json{{"decode_error", e.what()}, {"summary", summary_json(b)}, {"report", report}};
    return fail(QAPC_E_VERIFY, e.what());
  }
  out = json{{"placement", p.perm},
             {"cost", rat_str(cost(inst, p))},
             {"delta", rat_str(b.cc.delta)},
             {"summary", summary_json(b)},
             {"report", report}};
  return QAPC_OK;
}

} // namespace

extern "C" {

const char *qapc_version(void) { return "0.1.0"; }

const char *qapc_last_error(void) { return g_last_error.c_str(); }

void qapc_string_free(char *s) { std::free(s); }

int qapc_instance_parse(const char *text, int swap_matrices, int allow_float,
                        qapc_instance **out) {
  return guarded([&] {
    if (!text || !out) return fail(QAPC_E_PARSE, "null argument");
    InstanceParseOptions opts;
    opts.swap_matrices = swap_matrices != 0;
    opts.allow_float_as_rational = allow_float != 0;
    auto *h = new qapc_instance{parse_instance(text, opts)};
    *out = h;
    return QAPC_OK;
  });
}

int qapc_instance_from_json(const char *text, qapc_instance **out) {
  return guarded([&] {
    if (!text || !out) return fail(QAPC_E_PARSE, "null argument");
    *out = new qapc_instance{instance_from_json(text)};
    return QAPC_OK;
  });
}

int qapc_instance_random(int n, uint64_t seed, long long lo, long long hi,
                         qapc_instance **out) {
  return guarded([&] {
    if (!out) return fail(QAPC_E_PARSE, "null argument");
    *out = new qapc_instance{random_instance(n, seed, lo, hi)};
    return QAPC_OK;
  });
}

int qapc_instance_to_json(const qapc_instance *inst, char **json_out) {
  return guarded([&] {
    if (!inst) return fail(QAPC_E_PARSE, "null instance");
    return put_string(instance_to_json(inst->inst), json_out);
  });
}

int qapc_instance_size(const qapc_instance *inst) { return inst ? inst->inst.n : -1; }

void qapc_instance_free(qapc_instance *inst) { delete inst; }

int qapc_oracle(const qapc_instance *inst, char **json_out) {
  return guarded([&] {
    if (!inst) return fail(QAPC_E_PARSE, "null instance");
    return put_string(oracle_to_json(brute_qap(inst->inst)), json_out);
  });
}

int qapc_compile(const qapc_instance *inst, const char *formulation, const char *delta,
                 qapc_compiled **out) {
  return guarded([&] {
    if (!inst || !out) return fail(QAPC_E_PARSE, "null argument");
    inst->inst.validate();
    auto *b = new qapc_compiled(build_compiled(inst->inst, formulation ? formulation : "reduced",
                                               delta ? delta : "auto"));
    *out = b;
    return QAPC_OK;
  });
}

int qapc_compiled_graph_json(const qapc_compiled *cc, char **json_out) {
  return guarded([&] {
    if (!cc) return fail(QAPC_E_PARSE, "null handle");
    return put_string(graph_to_json(cc->cc.graph, cc->cc.delta), json_out);
  });
}

int qapc_compiled_circuit_json(const qapc_compiled *cc, char **json_out) {
  return guarded([&] {
    if (!cc) return fail(QAPC_E_PARSE, "null handle");
    return put_string(circuit_to_json(cc->cc.source), json_out);
  });
}

int qapc_compiled_summary_json(const qapc_compiled *cc, char **json_out) {
  return guarded([&] {
    if (!cc) return fail(QAPC_E_PARSE, "null handle");
    return put_string(summary_json(*cc).dump(2) + "\n", json_out);
  });
}

void qapc_compiled_free(qapc_compiled *cc) { delete cc; }

int qapc_solve_graph_json(const char *graph_json, const char *solver, double timeout_secs,
                          int include_timing, char **report_json_out) {
  return guarded([&] {
    if (!graph_json) return fail(QAPC_E_PARSE, "null graph");
    GraphFile gf = graph_from_json(graph_json);
    SolveReport rep = run_solver(gf.graph, gf.delta, solver ? solver : "bnb", timeout_secs);
    int rc = put_string(solve_report_to_json(rep, include_timing != 0), report_json_out);
    if (rc != QAPC_OK) return rc;
    if (rep.timed_out)
      return fail(QAPC_E_TIMEOUT, "solver budget exhausted before proving optimality");
    return QAPC_OK;
  });
}

int qapc_qap_solve(const qapc_instance *inst, const char *formulation, const char *delta,
                   const char *solver, double timeout_secs, int include_timing,
                   char **result_json_out) {
  return guarded([&] {
    if (!inst) return fail(QAPC_E_PARSE, "null instance");
    json out;
    int rc = do_qap_solve(inst->inst, formulation ? formulation : "reduced",
                          delta ? delta : "auto", solver ? solver : "bnb", timeout_secs,
                          include_timing != 0, out);
    if (!out.is_null() && result_json_out) {
      std::string msg = g_last_error;
      int prc = put_string(out.dump(2) + "\n", result_json_out);
      if (prc != QAPC_OK) return prc;
      g_last_error = msg;
    }
    return rc;
  });
}

int qapc_check(const qapc_instance *inst, const char *formulation, const char *delta,
               const char *solver, double timeout_secs, char **result_json_out) {
  return guarded([&] {
    if (!inst) return fail(QAPC_E_PARSE, "null instance");
    json pipeline;
    // Timing is excluded so repeated runs produce identical bytes.
    int rc = do_qap_solve(inst->inst, formulation ? formulation : "reduced",
                          delta ? delta : "auto", solver ? solver : "bnb", timeout_secs,
                          /*include_timing=*/false, pipeline);
    std::string msg = g_last_error;
    json out;
    if (rc != QAPC_OK) {
      out = json{{"ok", false}, {"pipeline", pipeline}};
    } else {
      OracleResult ref = brute_qap(inst->inst);
      Rat pipeline_cost = *rat_parse(pipeline.at("cost").get<std::string>());
      bool match = pipeline_cost == ref.cost;
      out = json{{"ok", match},
                 {"pipeline", pipeline},
                 {"oracle", json::parse(oracle_to_json(ref))}};
      if (!match) {
        rc = QAPC_E_VERIFY;
        msg = "pipeline cost " + rat_str(pipeline_cost) + " disagrees with reference cost " +
              rat_str(ref.cost);
      }
    }
    if (result_json_out) {
      int prc = put_string(out.dump(2) + "\n", result_json_out);
      if (prc != QAPC_OK) return prc;
    }
    g_last_error = msg;
    return rc;
  });
}

int qapc_verify_tiles(char **report_json_out) {
  return guarded([&] {
    FragmentLibrary lib = build_standard_library(); // re-runs every proof
    json frags = json::object();
    for (const auto &[key, cert] : lib.certificates) {
      const TileFragment &f = lib.fragments.at(key);
      frags[key] = json{{"k", cert.k},
                        {"w_tilde", cert.w_tilde.str()},
                        {"vertices", f.graph.vertices.size()}};
    }
    json out{{"fragments", frags}, {"count", lib.fragments.size()}};
    return put_string(out.dump(2) + "\n", report_json_out);
  });
}

int qapc_library_json(char **json_out) {
  return guarded([&] { return put_string(library_to_json(standard_library()), json_out); });
}

int qapc_render_circuit(const char *circuit_json, int cell, int show_weights, char **svg_out) {
  return guarded([&] {
    if (!circuit_json) return fail(QAPC_E_PARSE, "null circuit");
    RenderSpec spec;
    spec.cell = cell;
    spec.show_weights = show_weights != 0;
    return put_string(render_circuit(circuit_from_json(circuit_json), spec), svg_out);
  });
}

int qapc_render_graph(const char *graph_json, int cell, int show_weights,
                      const char *highlight_json, char **svg_out) {
  return guarded([&] {
    if (!graph_json) return fail(QAPC_E_PARSE, "null graph");
    GraphFile gf = graph_from_json(graph_json);
    RenderSpec spec;
    spec.cell = cell;
    spec.show_weights = show_weights != 0;
    if (highlight_json) {
      json j = json::parse(highlight_json, nullptr, false);
      if (j.is_discarded() || !j.contains("set"))
        throw IoError("highlight must be a solver report with a set field");
      VertexSet s;
      for (const auto &p : j.at("set")) s.insert({p.at(1).get<int>(), p.at(0).get<int>()});
      spec.highlight = std::move(s);
    }
    return put_string(render_graph(gf.graph, spec), svg_out);
  });
}

} // extern "C"
