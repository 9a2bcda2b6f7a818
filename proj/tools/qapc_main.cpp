// Command-line front end. Everything below talks to the library exclusively
// through the C interface; exit codes are the library status codes
// (0 ok, 1 verification mismatch, 2 parse or usage, 3 timeout, 4 internal).

#include <qapc/qapc.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Str {
  char *s = nullptr;
  ~Str() { qapc_string_free(s); }
  std::string view() const { return s ? std::string(s) : std::string(); }
};

struct Instance {
  qapc_instance *h = nullptr;
  ~Instance() { qapc_instance_free(h); }
};

struct Compiled {
  qapc_compiled *h = nullptr;
  ~Compiled() { qapc_compiled_free(h); }
};

int report(int code) {
  if (code != QAPC_OK) {
    const char *e = qapc_last_error();
    std::cerr << "error: " << (*e ? e : "unspecified failure") << "\n";
  }
  return code;
}

bool slurp(const std::string &path, std::string &out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

bool spill(const std::string &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << content;
  return bool(out);
}

int load_instance(const std::string &path, bool swap, bool allow_float, Instance &inst) {
  std::string text;
  if (!slurp(path, text)) {
    std::cerr << "error: cannot read " << path << "\n";
    return QAPC_E_PARSE;
  }
  size_t i = text.find_first_not_of(" \t\r\n");
  int rc = (i != std::string::npos && text[i] == '{')
               ? qapc_instance_from_json(text.c_str(), &inst.h)
               : qapc_instance_parse(text.c_str(), swap ? 1 : 0, allow_float ? 1 : 0, &inst.h);
  return report(rc);
}

int emit(const std::string &content, const std::string &out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return QAPC_OK;
  }
  if (!spill(out_path, content)) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return QAPC_E_PARSE;
  }
  return QAPC_OK;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"compiles assignment problems to lattice independent-set instances"};
  app.require_subcommand(1);

  std::string inst_path, out_path, formulation = "reduced", delta = "auto", solver = "bnb";
  std::string highlight_path, sizes_arg = "2,2,2";
  bool swap = false, allow_float = false, weights = false;
  double timeout = -1.0;
  int cell = 24;
  unsigned long long seed = 0;

  auto add_instance_opts = [&](CLI::App *cmd, bool required) {
    auto *opt = cmd->add_option("instance", inst_path, "instance file (text or JSON)");
    if (required) opt->required();
    cmd->add_flag("--swap-matrices", swap, "read the distance matrix first");
    cmd->add_flag("--allow-float-as-rational", allow_float,
                  "accept decimal literals as exact rationals");
  };

  auto *c_compile = app.add_subcommand("compile", "compile an instance to a weighted graph");
  add_instance_opts(c_compile, true);
  c_compile->add_option("--formulation", formulation, "canonical or reduced")
      ->check(CLI::IsMember({"canonical", "reduced"}));
  c_compile->add_option("--delta", delta, "auto or a positive rational");
  c_compile->add_option("-o,--output", out_path, "graph JSON output path")->required();
  std::string circuit_out, summary_out;
  c_compile->add_option("--circuit-out", circuit_out, "also write the tile circuit JSON");
  c_compile->add_option("--summary-out", summary_out, "also write the certificate summary");

  auto *c_solve = app.add_subcommand("solve", "find a maximum-weight independent set");
  c_solve->add_option("graph", inst_path, "graph JSON file")->required();
  c_solve->add_option("--solver", solver, "brute or bnb")
      ->check(CLI::IsMember({"brute", "bnb"}));
  c_solve->add_option("--timeout", timeout, "seconds before giving up");
  c_solve->add_option("-o,--output", out_path, "report path (default stdout)");

  auto *c_qap = app.add_subcommand("qap-solve", "compile, solve and decode a placement");
  add_instance_opts(c_qap, true);
  c_qap->add_option("--formulation", formulation, "canonical or reduced")
      ->check(CLI::IsMember({"canonical", "reduced"}));
  c_qap->add_option("--delta", delta, "auto or a positive rational");
  c_qap->add_option("--solver", solver, "brute or bnb")
      ->check(CLI::IsMember({"brute", "bnb"}));
  c_qap->add_option("--timeout", timeout, "seconds before giving up");
  c_qap->add_option("-o,--output", out_path, "result path (default stdout)");

  auto *c_oracle = app.add_subcommand("oracle", "exact reference answer by enumeration");
  add_instance_opts(c_oracle, true);
  c_oracle->add_option("-o,--output", out_path, "result path (default stdout)");

  auto *c_check = app.add_subcommand("check",
                                     "full pipeline against the reference solver; with no "
                                     "instance file, runs seeded random instances");
  add_instance_opts(c_check, false);
  c_check->add_option("--seed", seed, "generator seed for the no-file mode");
  c_check->add_option("--sizes", sizes_arg, "comma-separated instance sizes for the no-file mode");
  c_check->add_option("--formulation", formulation, "canonical or reduced")
      ->check(CLI::IsMember({"canonical", "reduced"}));
  c_check->add_option("--delta", delta, "auto or a positive rational");
  c_check->add_option("--solver", solver, "brute or bnb")
      ->check(CLI::IsMember({"brute", "bnb"}));
  c_check->add_option("--timeout", timeout, "seconds before giving up");
  c_check->add_option("-o,--output-dir", out_path,
                      "directory for report.json and per-instance SVG renders");

  auto *c_tiles = app.add_subcommand("verify-tiles", "re-certify the tile fragment library");
  c_tiles->add_option("-o,--output", out_path, "JSON report path (default: human-readable list)");

  auto *c_render = app.add_subcommand("render", "draw a circuit or graph JSON file as SVG");
  c_render->add_option("input", inst_path, "circuit or graph JSON file")->required();
  c_render->add_option("-o,--output", out_path, "SVG output path")->required();
  c_render->add_option("--cell", cell, "pixels per grid cell");
  c_render->add_flag("--weights", weights, "draw weight labels");
  c_render->add_option("--highlight", highlight_path, "solver report whose set is filled");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : QAPC_E_PARSE;
  }

  if (c_compile->parsed()) {
    Instance inst;
    int rc = load_instance(inst_path, swap, allow_float, inst);
    if (rc != QAPC_OK) return rc;
    Compiled cc;
    rc = qapc_compile(inst.h, formulation.c_str(), delta.c_str(), &cc.h);
    if (rc != QAPC_OK) return report(rc);
    Str graph;
    rc = qapc_compiled_graph_json(cc.h, &graph.s);
    if (rc != QAPC_OK) return report(rc);
    rc = emit(graph.view(), out_path);
    if (rc != QAPC_OK) return rc;
    if (!circuit_out.empty()) {
      Str circ;
      rc = qapc_compiled_circuit_json(cc.h, &circ.s);
      if (rc != QAPC_OK) return report(rc);
      rc = emit(circ.view(), circuit_out);
      if (rc != QAPC_OK) return rc;
    }
    if (!summary_out.empty()) {
      Str sum;
      rc = qapc_compiled_summary_json(cc.h, &sum.s);
      if (rc != QAPC_OK) return report(rc);
      rc = emit(sum.view(), summary_out);
      if (rc != QAPC_OK) return rc;
    }
    return 0;
  }

  if (c_solve->parsed()) {
    std::string graph;
    if (!slurp(inst_path, graph)) {
      std::cerr << "error: cannot read " << inst_path << "\n";
      return QAPC_E_PARSE;
    }
    Str rep;
    int rc = qapc_solve_graph_json(graph.c_str(), solver.c_str(), timeout, 1, &rep.s);
    if (rep.s) emit(rep.view(), out_path);
    return report(rc);
  }

  if (c_qap->parsed()) {
    Instance inst;
    int rc = load_instance(inst_path, swap, allow_float, inst);
    if (rc != QAPC_OK) return rc;
    Str res;
    rc = qapc_qap_solve(inst.h, formulation.c_str(), delta.c_str(), solver.c_str(), timeout, 1,
                        &res.s);
    if (res.s) emit(res.view(), out_path);
    return report(rc);
  }

  if (c_oracle->parsed()) {
    Instance inst;
    int rc = load_instance(inst_path, swap, allow_float, inst);
    if (rc != QAPC_OK) return rc;
    Str res;
    rc = qapc_oracle(inst.h, &res.s);
    if (rc != QAPC_OK) return report(rc);
    return emit(res.view(), out_path);
  }

  if (c_check->parsed()) {
    if (!inst_path.empty()) {
      Instance inst;
      int rc = load_instance(inst_path, swap, allow_float, inst);
      if (rc != QAPC_OK) return rc;
      Str res;
      rc = qapc_check(inst.h, formulation.c_str(), delta.c_str(), solver.c_str(), timeout,
                      &res.s);
      if (res.s) std::cout << res.view();
      return report(rc);
    }
    if (c_check->count("--seed") == 0) {
      std::cerr << "error: check needs an instance file or --seed\n";
      return QAPC_E_PARSE;
    }
    std::vector<int> sizes;
    {
      std::stringstream ss(sizes_arg);
      std::string part;
      while (std::getline(ss, part, ',')) {
        try {
          sizes.push_back(std::stoi(part));
        } catch (...) {
          std::cerr << "error: bad size list '" << sizes_arg << "'\n";
          return QAPC_E_PARSE;
        }
      }
      if (sizes.empty()) {
        std::cerr << "error: empty size list\n";
        return QAPC_E_PARSE;
      }
    }
    std::string dir = out_path;
    if (!dir.empty() && dir.back() != '/') dir += '/';
    if (!dir.empty()) {
      std::error_code ec;
      std::filesystem::create_directories(dir, ec);
      if (ec) {
        std::cerr << "error: cannot create " << out_path << ": " << ec.message() << "\n";
        return QAPC_E_PARSE;
      }
    }
    nlohmann::json all{{"seed", seed}, {"instances", nlohmann::json::array()}};
    int worst = 0;
    std::string worst_msg;
    for (size_t idx = 0; idx < sizes.size(); ++idx) {
      Instance inst;
      unsigned long long s = seed + idx;
      int rc = qapc_instance_random(sizes[idx], s, 0, 9, &inst.h);
      if (rc != QAPC_OK) return report(rc);
      Str res;
      rc = qapc_check(inst.h, formulation.c_str(), delta.c_str(), solver.c_str(), timeout,
                      &res.s);
      if (rc != QAPC_OK && !res.s) return report(rc);
      if (rc > worst) {
        worst = rc;
        worst_msg = qapc_last_error();
      }
      nlohmann::json result = nlohmann::json::parse(res.view(), nullptr, false);
      all["instances"].push_back(nlohmann::json{
          {"n", sizes[idx]}, {"instance_seed", s}, {"result", std::move(result)}});
      if (!dir.empty()) {
        Compiled cc;
        if (qapc_compile(inst.h, formulation.c_str(), delta.c_str(), &cc.h) == QAPC_OK) {
          Str circ, graph;
          std::string tag = dir + "instance_" + std::to_string(idx);
          if (qapc_compiled_circuit_json(cc.h, &circ.s) == QAPC_OK) {
            Str svg;
            if (qapc_render_circuit(circ.s, cell, 0, &svg.s) == QAPC_OK)
              spill(tag + ".circuit.svg", svg.view());
          }
          if (qapc_compiled_graph_json(cc.h, &graph.s) == QAPC_OK) {
            Str svg;
            if (qapc_render_graph(graph.s, cell, 0, nullptr, &svg.s) == QAPC_OK)
              spill(tag + ".graph.svg", svg.view());
          }
          Str ij;
          if (qapc_instance_to_json(inst.h, &ij.s) == QAPC_OK)
            spill(tag + ".instance.json", ij.view());
        }
      }
    }
    all["all_ok"] = worst == 0;
    std::string text = all.dump(2) + "\n";
    std::cout << text;
    if (!dir.empty() && !spill(dir + "report.json", text)) {
      std::cerr << "error: cannot write " << dir << "report.json\n";
      return QAPC_E_PARSE;
    }
    if (worst != 0) std::cerr << "error: " << worst_msg << "\n";
    return worst;
  }

  if (c_tiles->parsed()) {
    Str rep;
    int rc = qapc_verify_tiles(&rep.s);
    if (rc != QAPC_OK) return report(rc);
    if (!out_path.empty()) return emit(rep.view(), out_path);
    nlohmann::json j = nlohmann::json::parse(rep.view(), nullptr, false);
    if (j.is_discarded() || !j.contains("fragments")) {
      std::cerr << "error: unreadable verification report\n";
      return QAPC_E_INTERNAL;
    }
    for (const auto &[key, entry] : j.at("fragments").items())
      std::cout << key << ": k=" << entry.at("k").get<long long>()
                << ", w~=" << entry.at("w_tilde").get<std::string>() << "\n";
    std::cout << j.at("fragments").size() << " fragments verified\n";
    return 0;
  }

  if (c_render->parsed()) {
    std::string input;
    if (!slurp(inst_path, input)) {
      std::cerr << "error: cannot read " << inst_path << "\n";
      return QAPC_E_PARSE;
    }
    std::string highlight;
    if (!highlight_path.empty() && !slurp(highlight_path, highlight)) {
      std::cerr << "error: cannot read " << highlight_path << "\n";
      return QAPC_E_PARSE;
    }
    Str svg;
    int rc;
    if (input.find("\"tiles\"") != std::string::npos) {
      rc = qapc_render_circuit(input.c_str(), cell, weights ? 1 : 0, &svg.s);
    } else {
      rc = qapc_render_graph(input.c_str(), cell, weights ? 1 : 0,
                             highlight.empty() ? nullptr : highlight.c_str(), &svg.s);
    }
    if (rc != QAPC_OK) return report(rc);
    return emit(svg.view(), out_path);
  }

  return QAPC_E_PARSE;
}
