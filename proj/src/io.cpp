#include "io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace qapc {

using nlohmann::json;

namespace {

struct Token {
  std::string text;
  int line, col;
};

// Whitespace-separated tokens with 1-based positions.
std::vector<Token> tokenize(const std::string &text, int *end_line, int *end_col) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::string cur;
  int tline = 1, tcol = 1;
  auto flush = [&] {
    if (!cur.empty()) {
      out.push_back({cur, tline, tcol});
      cur.clear();
    }
  };
  bool in_comment = false;
  for (char ch : text) {
    if (ch == '\n' || ch == '\r' || ch == ' ' || ch == '\t' || ch == '\f' || ch == '\v') {
      flush();
      if (ch == '\n') {
        in_comment = false;
        ++line;
        col = 1;
      } else {
        ++col;
      }
      continue;
    }
    if (in_comment) {
      ++col;
      continue;
    }
    if (ch == '#') {
      flush();
      in_comment = true;
      ++col;
      continue;
    }
    if (cur.empty()) {
      tline = line;
      tcol = col;
    }
    cur.push_back(ch);
    ++col;
  }
  flush();
  if (end_line) *end_line = line;
  if (end_col) *end_col = col;
  return out;
}

Rat parse_entry(const Token &t, bool allow_float) {
  if (looks_like_float(t.text) && !allow_float)
    throw ParseError("float literal '" + t.text + "' requires --allow-float-as-rational", t.line,
                     t.col);
  auto v = rat_parse(t.text);
  if (!v) throw ParseError("malformed number '" + t.text + "'", t.line, t.col);
  return *v;
}

Rat json_rat(const json &j, const char *what) {
  if (!j.is_string()) throw IoError(std::string(what) + " must be a rational string");
  auto v = rat_parse(j.get<std::string>());
  if (!v) throw IoError(std::string(what) + " is not a rational: " + j.get<std::string>());
  return *v;
}

json linform_json(const LinForm &f) {
  if (f.is_constant()) return rat_str(f.c);
  json terms = json::object();
  for (const auto &[name, coeff] : f.terms) terms[name] = rat_str(coeff);
  return json{{"c", rat_str(f.c)}, {"terms", terms}};
}

LinForm linform_from(const json &j, const char *what) {
  if (j.is_string()) return LinForm(json_rat(j, what));
  if (!j.is_object()) throw IoError(std::string(what) + " must be a rational string or object");
  LinForm f(json_rat(j.at("c"), what));
  if (j.contains("terms"))
    for (const auto &[name, coeff] : j.at("terms").items())
      f += LinForm::sym(name, json_rat(coeff, what));
  return f;
}

json parse_json(const std::string &text, const char *what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw IoError(std::string("malformed JSON in ") + what);
  return j;
}

std::string dump(const json &j) { return j.dump(2) + "\n"; }

} // namespace

QapInstance parse_instance(const std::string &text, const InstanceParseOptions &opts) {
  int eline = 1, ecol = 1;
  auto tokens = tokenize(text, &eline, &ecol);
  size_t at = 0;
  auto need = [&](const char *what) -> const Token & {
    if (at >= tokens.size())
      throw ParseError(std::string("unexpected end of input, expected ") + what, eline, ecol);
    return tokens[at++];
  };
  const Token &head = need("instance size");
  int n = 0;
  try {
    size_t used = 0;
    n = std::stoi(head.text, &used);
    if (used != head.text.size()) n = -1;
  } catch (...) {
    n = -1;
  }
  if (n < 1) throw ParseError("instance size must be a positive integer, got '" + head.text + "'",
                              head.line, head.col);

  auto read_matrix = [&](const char *what) {
    std::vector<std::vector<Rat>> m(static_cast<size_t>(n),
                                    std::vector<Rat>(static_cast<size_t>(n)));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        m[static_cast<size_t>(r)][static_cast<size_t>(c)] =
            parse_entry(need(what), opts.allow_float_as_rational);
    return m;
  };
  auto first = read_matrix("matrix entry");
  auto second = read_matrix("matrix entry");
  if (at != tokens.size())
    throw ParseError("unexpected trailing token '" + tokens[at].text + "'", tokens[at].line,
                     tokens[at].col);
  QapInstance inst;
  inst.n = n;
  inst.F = opts.swap_matrices ? second : first;
  inst.D = opts.swap_matrices ? first : second;
  inst.validate();
  return inst;
}

std::string instance_to_json(const QapInstance &inst) {
  inst.validate();
  auto mat = [](const std::vector<std::vector<Rat>> &m) {
    json rows = json::array();
    for (const auto &row : m) {
      json r = json::array();
      for (const auto &v : row) r.push_back(rat_str(v));
      rows.push_back(r);
    }
    return rows;
  };
  return dump(json{{"n", inst.n}, {"F", mat(inst.F)}, {"D", mat(inst.D)}});
}

QapInstance instance_from_json(const std::string &text) {
  json j = parse_json(text, "instance");
  QapInstance inst;
  inst.n = j.at("n").get<int>();
  auto mat = [&](const char *key) {
    std::vector<std::vector<Rat>> m;
    for (const auto &row : j.at(key)) {
      std::vector<Rat> r;
      for (const auto &v : row) r.push_back(json_rat(v, key));
      m.push_back(std::move(r));
    }
    return m;
  };
  inst.F = mat("F");
  inst.D = mat("D");
  inst.validate();
  return inst;
}

namespace {

const char *kind_name(ConstraintKind k) {
  switch (k) {
  case ConstraintKind::LinearLE: return "le";
  case ConstraintKind::LinearGE: return "ge";
  case ConstraintKind::LinearEQ: return "eq";
  case ConstraintKind::TruthTable: return "table";
  }
  throw IoError("unknown constraint kind");
}

ConstraintKind kind_from(const std::string &s) {
  if (s == "le") return ConstraintKind::LinearLE;
  if (s == "ge") return ConstraintKind::LinearGE;
  if (s == "eq") return ConstraintKind::LinearEQ;
  if (s == "table") return ConstraintKind::TruthTable;
  throw IoError("unknown constraint kind: " + s);
}

} // namespace

std::string problem_to_json(const BinaryProblem &p) {
  p.validate();
  json constraints = json::array();
  for (const auto &c : p.constraints) {
    json jc{{"kind", kind_name(c.kind)}, {"vars", c.vars}};
    if (c.kind == ConstraintKind::TruthTable) {
      jc["rows"] = c.rows;
    } else {
      jc["coeffs"] = c.coeffs;
      jc["bound"] = c.bound;
    }
    constraints.push_back(jc);
  }
  json monomials = json::array();
  for (const auto &m : p.weight.monomials)
    monomials.push_back(json{{"vars", m.vars}, {"coeff", linform_json(m.coeff)}});
  return dump(json{{"vars", p.var_names},
                   {"constraints", constraints},
                   {"weight", json{{"monomials", monomials},
                                   {"constant", linform_json(p.weight.constant)}}}});
}

BinaryProblem problem_from_json(const std::string &text) {
  json j = parse_json(text, "problem");
  BinaryProblem p;
  p.var_names = j.at("vars").get<std::vector<std::string>>();
  p.num_vars = static_cast<int>(p.var_names.size());
  for (const auto &jc : j.at("constraints")) {
    ConstraintKind k = kind_from(jc.at("kind").get<std::string>());
    if (k == ConstraintKind::TruthTable) {
      p.constraints.push_back(Constraint::table(jc.at("vars").get<std::vector<int>>(),
                                                jc.at("rows").get<std::vector<std::vector<int>>>()));
    } else {
      p.constraints.push_back(Constraint::linear(k, jc.at("vars").get<std::vector<int>>(),
                                                 jc.at("coeffs").get<std::vector<long long>>(),
                                                 jc.at("bound").get<long long>()));
    }
  }
  const json &w = j.at("weight");
  for (const auto &m : w.at("monomials"))
    p.weight.add_term(m.at("vars").get<std::vector<int>>(), linform_from(m.at("coeff"), "coeff"));
  p.weight.constant = linform_from(w.at("constant"), "constant");
  p.validate();
  return p;
}

namespace {

json decoration_json(const Decoration &d) {
  json selector = json::object();
  for (const auto &[edge, bit] : d.selector) selector[std::to_string(edge)] = bit;
  json out{{"kind", d.kind == DecorationKind::Restriction ? "restriction" : "bias"},
           {"selector", selector}};
  if (d.kind == DecorationKind::Bias) out["weight"] = linform_json(d.bias);
  return out;
}

Decoration decoration_from(const json &j) {
  Decoration d;
  std::string k = j.at("kind").get<std::string>();
  if (k == "restriction") {
    d.kind = DecorationKind::Restriction;
  } else if (k == "bias") {
    d.kind = DecorationKind::Bias;
    d.bias = linform_from(j.at("weight"), "bias weight");
  } else {
    throw IoError("unknown decoration kind: " + k);
  }
  for (const auto &[edge, bit] : j.at("selector").items())
    d.selector[std::stoi(edge)] = bit.get<int>();
  return d;
}

json tile_json(const Tile &t) {
  json out{{"kind", tile_kind_name(t.kind)}, {"orientation", t.orientation}};
  if (!t.label.empty()) out["label"] = t.label;
  if (!t.decorations.empty()) {
    json ds = json::array();
    for (const auto &d : t.decorations) ds.push_back(decoration_json(d));
    out["decorations"] = ds;
  }
  return out;
}

Tile tile_from(const json &j) {
  Tile t = standard_tile(tile_kind_from_name(j.at("kind").get<std::string>()),
                         j.at("orientation").get<int>());
  if (j.contains("decorations"))
    for (const auto &jd : j.at("decorations")) t = decorate(t, decoration_from(jd));
  if (j.contains("label")) t.label = j.at("label").get<std::string>();
  return t;
}

} // namespace

std::string circuit_to_json(const Circuit &c) {
  json tiles = json::array();
  for (const auto &[pos, tile] : c.tiles) {
    json jt = tile_json(tile);
    jt["r"] = pos.first;
    jt["c"] = pos.second;
    tiles.push_back(jt);
  }
  return dump(json{{"rows", c.rows}, {"cols", c.cols}, {"tiles", tiles}});
}

Circuit circuit_from_json(const std::string &text) {
  json j = parse_json(text, "circuit");
  Circuit c;
  c.rows = j.at("rows").get<int>();
  c.cols = j.at("cols").get<int>();
  for (const auto &jt : j.at("tiles"))
    c.place(jt.at("r").get<int>(), jt.at("c").get<int>(), tile_from(jt));
  return c;
}

std::string graph_to_json(const LatticeGraph &g, const Rat &delta) {
  if (delta <= 0) throw IoError("graph export needs a positive delta");
  std::string err = g.validate();
  if (!err.empty()) throw IoError("refusing to export invalid graph: " + err);
  std::vector<const Vertex *> order;
  for (const auto &v : g.vertices) order.push_back(&v);
  std::sort(order.begin(), order.end(),
            [](const Vertex *a, const Vertex *b) { return a->pos < b->pos; });
  json verts = json::array();
  for (const Vertex *v : order) {
    if (!v->weight.bias.is_constant())
      throw IoError("cannot resolve symbolic weight at vertex " + v->label);
    Rat w = Rat(v->weight.dc) * delta + v->weight.bias.c;
    verts.push_back(json{{"x", v->pos.second},
                         {"y", v->pos.first},
                         {"weight", rat_str(w)},
                         {"connecting", v->connecting},
                         {"label", v->label}});
  }
  return dump(json{{"radius", 1.5}, {"delta", rat_str(delta)}, {"vertices", verts}});
}

GraphFile graph_from_json(const std::string &text) {
  json j = parse_json(text, "graph");
  GraphFile out;
  out.delta = json_rat(j.at("delta"), "delta");
  if (j.at("radius").is_number()) {
    double r = j.at("radius").get<double>();
    if (r < 1.4142 || r >= 2.0) throw IoError("radius outside the king-graph range");
    out.radius = Rat(3, 2);
  } else {
    out.radius = json_rat(j.at("radius"), "radius");
  }
  int max_r = -1, max_c = -1;
  std::vector<Vertex> staged;
  for (const auto &jv : j.at("vertices")) {
    Vertex v;
    v.pos = {jv.at("y").get<int>(), jv.at("x").get<int>()};
    v.weight = DeltaWeight(0, LinForm(json_rat(jv.at("weight"), "vertex weight")));
    v.connecting = jv.value("connecting", false);
    v.label = jv.value("label", std::string{});
    max_r = std::max(max_r, v.pos.first);
    max_c = std::max(max_c, v.pos.second);
    staged.push_back(std::move(v));
  }
  out.graph.box_rows = max_r / 4 + 1;
  out.graph.box_cols = max_c / 4 + 1;
  for (auto &v : staged) out.graph.add_vertex(std::move(v));
  std::string err = out.graph.validate();
  if (!err.empty()) throw IoError("invalid graph file: " + err);
  return out;
}

namespace {

uint64_t fnv1a(const std::string &bytes) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(uint64_t v) {
  static const char *digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

json fragment_json(const TileFragment &f) {
  json verts = json::array();
  std::vector<const Vertex *> order;
  for (const auto &v : f.graph.vertices) order.push_back(&v);
  std::sort(order.begin(), order.end(),
            [](const Vertex *a, const Vertex *b) { return a->pos < b->pos; });
  for (const Vertex *v : order)
    verts.push_back(json{{"x", v->pos.second},
                         {"y", v->pos.first},
                         {"dc", v->weight.dc},
                         {"bias", linform_json(v->weight.bias)},
                         {"connecting", v->connecting},
                         {"edge", v->edge},
                         {"corner_exception", v->corner_exception},
                         {"label", v->label}});
  json anchors = json::array();
  for (const auto &[row, pos] : f.bias_anchors)
    anchors.push_back(json{{"row", row}, {"x", pos.second}, {"y", pos.first}});
  return json{{"label", f.label}, {"vertices", verts}, {"anchors", anchors}};
}

TileFragment fragment_from(const json &j) {
  TileFragment f;
  f.label = j.at("label").get<std::string>();
  f.graph.box_rows = 1;
  f.graph.box_cols = 1;
  for (const auto &jv : j.at("vertices")) {
    Vertex v;
    v.pos = {jv.at("y").get<int>(), jv.at("x").get<int>()};
    v.weight = DeltaWeight(jv.at("dc").get<long long>(), linform_from(jv.at("bias"), "bias"));
    v.connecting = jv.at("connecting").get<bool>();
    v.edge = jv.at("edge").get<int>();
    v.corner_exception = jv.at("corner_exception").get<bool>();
    v.label = jv.value("label", std::string{});
    f.graph.add_vertex(v);
  }
  for (const auto &ja : j.at("anchors"))
    f.bias_anchors[ja.at("row").get<std::vector<int>>()] = {ja.at("y").get<int>(),
                                                            ja.at("x").get<int>()};
  return f;
}

} // namespace

std::string library_to_json(const FragmentLibrary &lib) {
  json fragments = json::object();
  for (const auto &[key, frag] : lib.fragments) {
    json entry = fragment_json(frag);
    auto cert = lib.certificates.find(key);
    if (cert == lib.certificates.end())
      throw IoError("fragment without certificate: " + key);
    entry["certificate"] =
        json{{"k", cert->second.k}, {"w_tilde", linform_json(cert->second.w_tilde)}};
    fragments[key] = entry;
  }
  json j{{"fragments", fragments}};
  j["verified_hash"] = hex64(fnv1a(fragments.dump()));
  return dump(j);
}

FragmentLibrary library_from_json(const std::string &text, bool *hash_matched) {
  json j = parse_json(text, "library");
  FragmentLibrary lib;
  for (const auto &[key, entry] : j.at("fragments").items()) {
    lib.fragments[key] = fragment_from(entry);
    const json &cert = entry.at("certificate");
    lib.certificates[key] =
        CompilationCertificate{cert.at("k").get<long long>(),
                               linform_from(cert.at("w_tilde"), "w_tilde")};
  }
  bool ok = j.contains("verified_hash") &&
            j.at("verified_hash").get<std::string>() == hex64(fnv1a(j.at("fragments").dump()));
  if (hash_matched) *hash_matched = ok;
  if (!ok) {
    // Stale hash: trust nothing, re-certify every fragment against the tile
    // reconstructed from its key (kind:orientation:effective-rows).
    for (const auto &[key, frag] : lib.fragments) {
      auto c1 = key.find(':');
      auto c2 = key.find(':', c1 == std::string::npos ? c1 : c1 + 1);
      if (c1 == std::string::npos || c2 == std::string::npos)
        throw IoError("malformed library key: " + key);
      Tile tile = standard_tile(tile_kind_from_name(key.substr(0, c1)),
                                std::stoi(key.substr(c1 + 1, c2 - c1 - 1)));
      std::set<std::vector<int>> target;
      std::string sig = key.substr(c2 + 1);
      size_t at = 0;
      while (at < sig.size()) {
        auto bar = sig.find('|', at);
        if (bar == std::string::npos) bar = sig.size();
        std::vector<int> row;
        for (size_t i = at; i < bar; ++i) row.push_back(sig[i] - '0');
        target.insert(row);
        at = bar + 1;
      }
      const std::vector<int> wired = tile.base.wired;
      const std::set<std::vector<int>> base_rows = tile.base.rows;
      for (const auto &row : base_rows) {
        if (target.count(row)) continue;
        Decoration d;
        d.kind = DecorationKind::Restriction;
        for (size_t i = 0; i < wired.size(); ++i) d.selector[wired[i]] = row[i];
        tile = decorate(tile, d);
      }
      CompilationCertificate fresh = certify_fragment(tile, frag, CertMode::Auto);
      const CompilationCertificate &stored = lib.certificates.at(key);
      if (fresh.k != stored.k || !(fresh.w_tilde == stored.w_tilde))
        throw IoError("library certificate does not match re-certification: " + key);
    }
  }
  return lib;
}

std::string solve_report_to_json(const SolveReport &rep, bool include_timing) {
  json set = json::array();
  for (const auto &p : rep.set) set.push_back(json::array({p.second, p.first}));
  json j{{"solver", rep.solver},
         {"set", set},
         {"weight", json{{"dc", rep.weight.dc}, {"bias", linform_json(rep.weight.bias)}}},
         {"nodes", rep.nodes},
         {"timed_out", rep.timed_out}};
  if (rep.resolved) j["resolved"] = rat_str(*rep.resolved);
  if (include_timing) j["wall_seconds"] = rep.wall_seconds;
  return dump(j);
}

std::string oracle_to_json(const OracleResult &res) {
  json optima = json::array();
  for (const auto &p : res.optima) optima.push_back(p.perm);
  return dump(json{{"cost", rat_str(res.cost)}, {"optima", optima}, {"examined", res.examined}});
}

uint64_t SplitMix64::next() {
  state += 0x9e3779b97f4a7c15ull;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

uint64_t SplitMix64::below(uint64_t bound) {
  if (bound == 0) throw IoError("empty range");
  return next() % bound;
}

QapInstance random_instance(int n, uint64_t seed, long long lo, long long hi) {
  if (n < 1) throw IoError("instance size must be positive");
  if (lo > hi) throw IoError("empty entry range");
  SplitMix64 rng(seed);
  auto mat = [&] {
    std::vector<std::vector<Rat>> m(static_cast<size_t>(n),
                                    std::vector<Rat>(static_cast<size_t>(n)));
    for (auto &row : m)
      for (auto &v : row)
        v = Rat(lo + static_cast<long long>(
                         rng.below(static_cast<uint64_t>(hi - lo + 1))));
    return m;
  };
  QapInstance inst;
  inst.n = n;
  inst.F = mat();
  inst.D = mat();
  return inst;
}

namespace {

std::string svg_open(int w, int h) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(w) +
         "\" height=\"" + std::to_string(h) + "\" viewBox=\"0 0 " + std::to_string(w) + " " +
         std::to_string(h) + "\">\n";
}

void svg_line(std::string &s, int x1, int y1, int x2, int y2, const char *color, int width) {
  s += "<line x1=\"" + std::to_string(x1) + "\" y1=\"" + std::to_string(y1) + "\" x2=\"" +
       std::to_string(x2) + "\" y2=\"" + std::to_string(y2) + "\" stroke=\"" + color +
       "\" stroke-width=\"" + std::to_string(width) + "\"/>\n";
}

void svg_text(std::string &s, int x, int y, int size, const char *color, const std::string &text) {
  s += "<text x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) + "\" font-size=\"" +
       std::to_string(size) +
       "\" font-family=\"monospace\" text-anchor=\"middle\" fill=\"" + color + "\">" + text +
       "</text>\n";
}

const char *tile_glyph(TileKind k) {
  switch (k) {
  case TileKind::Variable: return "V";
  case TileKind::Terminator: return "T";
  case TileKind::CornerMeet: return "M";
  case TileKind::OrGate: return "OR";
  case TileKind::AndGate: return "AND";
  case TileKind::TJunction: return "TJ";
  default: return "";
  }
}

} // namespace

std::string render_circuit(const Circuit &c, const RenderSpec &spec) {
  int cell = spec.cell;
  if (cell < 8) throw IoError("cell size too small");
  int w = std::max(1, c.cols * cell), h = std::max(1, c.rows * cell);
  std::string s = svg_open(w, h);
  s += "<rect width=\"" + std::to_string(w) + "\" height=\"" + std::to_string(h) +
       "\" fill=\"#ffffff\"/>\n";
  int wire_w = std::max(2, cell / 10);
  for (const auto &[pos, tile] : c.tiles) {
    int x = pos.second * cell, y = pos.first * cell;
    s += "<rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) + "\" width=\"" +
         std::to_string(cell) + "\" height=\"" + std::to_string(cell) +
         "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
    int cx = x + cell / 2, cy = y + cell / 2;
    for (int edge : tile.base.wired) {
      int ex = cx, ey = cy;
      if (edge == 1) ex = x + cell;
      if (edge == 3) ex = x;
      if (edge == 2) ey = y;
      if (edge == 4) ey = y + cell;
      svg_line(s, cx, cy, ex, ey, "#000000", wire_w);
    }
    const char *glyph = tile_glyph(tile.kind);
    if (*glyph) svg_text(s, cx, cy - cell / 8, cell / 3, "#555555", glyph);
    bool has_restriction = false, has_bias = false;
    LinForm bias_total;
    for (const auto &d : tile.decorations) {
      if (d.kind == DecorationKind::Restriction) has_restriction = true;
      if (d.kind == DecorationKind::Bias) {
        has_bias = true;
        bias_total += d.bias;
      }
    }
    if (has_restriction) {
      int a = cell / 4;
      svg_line(s, cx - a, cy - a, cx + a, cy + a, "#cc0000", std::max(2, cell / 12));
      svg_line(s, cx - a, cy + a, cx + a, cy - a, "#cc0000", std::max(2, cell / 12));
    }
    if (has_bias) {
      s += "<circle cx=\"" + std::to_string(cx) + "\" cy=\"" + std::to_string(cy) + "\" r=\"" +
           std::to_string(cell / 5) +
           "\" fill=\"none\" stroke=\"#0044cc\" stroke-width=\"" +
           std::to_string(std::max(2, cell / 12)) + "\"/>\n";
      if (spec.show_weights)
        svg_text(s, cx, y + cell - 2, cell / 5, "#0044cc", bias_total.str());
    }
    if (spec.show_weights && !tile.label.empty())
      svg_text(s, cx, y + cell / 5, cell / 5, "#888888", tile.label);
  }
  s += "</svg>\n";
  return s;
}

std::string render_graph(const LatticeGraph &g, const RenderSpec &spec) {
  int cell = spec.cell;
  if (cell < 8) throw IoError("cell size too small");
  if (spec.highlight)
    for (const auto &p : *spec.highlight)
      if (!g.find(p)) throw IoError("highlight set contains a non-vertex position");
  int w = std::max(1, 4 * g.box_cols * cell), h = std::max(1, 4 * g.box_rows * cell);
  std::string s = svg_open(w, h);
  s += "<rect width=\"" + std::to_string(w) + "\" height=\"" + std::to_string(h) +
       "\" fill=\"#ffffff\"/>\n";
  for (int r = 0; r <= 4 * g.box_rows; r += 4) svg_line(s, 0, r * cell, w, r * cell, "#eeeeee", 1);
  for (int c = 0; c <= 4 * g.box_cols; c += 4) svg_line(s, c * cell, 0, c * cell, h, "#eeeeee", 1);

  std::vector<const Vertex *> order;
  for (const auto &v : g.vertices) order.push_back(&v);
  std::sort(order.begin(), order.end(),
            [](const Vertex *a, const Vertex *b) { return a->pos < b->pos; });
  auto center = [cell](const Pos &p) {
    return std::pair<int, int>{p.second * cell + cell / 2, p.first * cell + cell / 2};
  };
  for (size_t i = 0; i < order.size(); ++i)
    for (size_t j = i + 1; j < order.size(); ++j)
      if (king_adjacent(order[i]->pos, order[j]->pos)) {
        auto [x1, y1] = center(order[i]->pos);
        auto [x2, y2] = center(order[j]->pos);
        svg_line(s, x1, y1, x2, y2, "#bbbbbb", std::max(1, cell / 20));
      }
  for (const Vertex *v : order) {
    auto [cx, cy] = center(v->pos);
    const char *fill = "#ffffff";
    if (spec.highlight && spec.highlight->count(v->pos)) fill = "#f5a623";
    else if (v->connecting) fill = "#cfe8ff";
    s += "<circle cx=\"" + std::to_string(cx) + "\" cy=\"" + std::to_string(cy) + "\" r=\"" +
         std::to_string(cell / 3) + "\" fill=\"" + fill +
         "\" stroke=\"#222222\" stroke-width=\"" + std::to_string(std::max(1, cell / 16)) +
         "\"/>\n";
    if (spec.show_weights)
      svg_text(s, cx, cy + cell / 2, cell / 4, "#333333", v->weight.str());
  }
  s += "</svg>\n";
  return s;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write file: " + path);
  out << content;
  if (!out) throw IoError("write failed: " + path);
}

} // namespace qapc
