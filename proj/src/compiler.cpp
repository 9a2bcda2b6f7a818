#include "compiler.hpp"

#include <algorithm>
#include <sstream>

namespace qapc {

namespace {

std::string pos_str(const Pos &p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

std::string row_str(const std::vector<int> &row) {
  std::string s;
  for (int b : row) s += char('0' + b);
  return s;
}

struct EnumeratedSet {
  unsigned mask;
  long long dc;
  LinForm bias;
};

VertexSet mask_to_set(const LatticeGraph &g, unsigned mask) {
  VertexSet s;
  for (size_t i = 0; i < g.vertices.size(); ++i)
    if (mask & (1u << i)) s.insert(g.vertices[i].pos);
  return s;
}

bool mode_leq(CertMode mode, const DeltaWeight &a, const DeltaWeight &b) {
  return mode == CertMode::ForAllDelta ? leq_for_all_delta(a, b) : leq_for_large_delta(a, b);
}

} // namespace

CompilationCertificate certify_fragment(const Tile &t, const TileFragment &f, CertMode mode) {
  if (mode == CertMode::Auto) {
    mode = CertMode::ForAllDelta;
    for (const auto &d : t.decorations)
      if (d.kind == DecorationKind::Bias && !d.bias.is_zero()) mode = CertMode::LargeDelta;
  }

  const auto &verts = f.graph.vertices;
  size_t n = verts.size();
  if (n > 16) throw CompileError("fragment " + f.label + " has more than 16 vertices");

  std::map<int, Pos> conn = f.connecting();
  const std::vector<int> &wired = t.base.wired;
  for (int e : wired)
    if (!conn.count(e))
      throw CompileError("fragment " + f.label + " lacks a connecting vertex on edge " +
                         std::to_string(e));
  if (conn.size() != wired.size())
    throw CompileError("fragment " + f.label + " has a connecting vertex on an unwired edge");

  std::vector<unsigned> adj(n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (i != j && king_adjacent(verts[i].pos, verts[j].pos)) adj[i] |= 1u << j;

  std::vector<size_t> conn_idx;
  std::vector<bool> reversed;
  for (int e : wired) {
    for (size_t i = 0; i < n; ++i)
      if (verts[i].pos == conn.at(e)) conn_idx.push_back(i);
    reversed.push_back(edge_reversed(e));
  }

  std::set<std::vector<int>> valid_rows = t.effective_rows();
  std::map<std::vector<int>, LinForm> desired;
  for (const auto &r : valid_rows) desired[r] = t.row_weight(r);

  std::map<std::vector<int>, std::vector<EnumeratedSet>> classes; // valid rows only
  std::vector<EnumeratedSet> invalid;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool indep = true;
    for (size_t i = 0; i < n && indep; ++i)
      if ((mask & (1u << i)) && (mask & adj[i])) indep = false;
    if (!indep) continue;
    EnumeratedSet es{mask, 0, LinForm()};
    for (size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) {
        es.dc += verts[i].weight.dc;
        if (!verts[i].weight.bias.is_zero()) es.bias += verts[i].weight.bias;
      }
    std::vector<int> row;
    for (size_t j = 0; j < conn_idx.size(); ++j) {
      bool member = (mask & (1u << conn_idx[j])) != 0;
      row.push_back(member != reversed[j] ? 1 : 0);
      if (!member) ++es.dc; // unchosen connecting vertex earns delta
    }
    if (valid_rows.count(row)) classes[row].push_back(es);
    else invalid.push_back(es);
  }

  long long k = 0;
  bool have_k = false;
  for (const auto &[row, sets] : classes)
    for (const auto &es : sets)
      if (!have_k || es.dc > k) {
        k = es.dc;
        have_k = true;
      }
  if (!have_k)
    throw CertificationFailure("fragment " + f.label + ": no valid assignment is realizable", 1,
                               {});

  for (const auto &r : valid_rows) {
    auto it = classes.find(r);
    if (it == classes.end() || it->second.empty())
      throw CertificationFailure("fragment " + f.label + ": no independent set decodes to row " +
                                     row_str(r),
                                 1, {});
    const LinForm &w = desired.at(r);
    bool exact = false;
    for (const auto &es : it->second)
      if (es.dc == k && es.bias == w) {
        exact = true;
        break;
      }
    if (!exact) {
      const EnumeratedSet *best = &it->second.front();
      for (const auto &es : it->second)
        if (es.dc > best->dc) best = &es;
      throw CertificationFailure("fragment " + f.label + ": row " + row_str(r) +
                                     " never attains its exact target weight",
                                 1, mask_to_set(f.graph, best->mask));
    }
  }

  LinForm w_tilde; // zero
  for (const auto &[r, w] : desired) w_tilde = join_upper(w_tilde, w.abs_upper());
  for (const auto &es : invalid) {
    if (es.dc > k - 1)
      throw CertificationFailure("fragment " + f.label +
                                     ": invalid set reaches delta-coefficient " +
                                     std::to_string(es.dc) + " with k = " + std::to_string(k),
                                 2, mask_to_set(f.graph, es.mask));
    if (mode == CertMode::ForAllDelta || es.dc == k - 1)
      w_tilde = join_upper(w_tilde, es.bias.abs_upper());
  }

  for (const auto &[r, sets] : classes) {
    DeltaWeight target(k, desired.at(r));
    for (const auto &es : sets)
      if (!mode_leq(mode, DeltaWeight(es.dc, es.bias), target))
        throw CertificationFailure("fragment " + f.label + ": set in class " + row_str(r) +
                                       " exceeds the class optimum",
                                   2, mask_to_set(f.graph, es.mask));
  }
  DeltaWeight slack(k - 1, w_tilde);
  for (const auto &es : invalid)
    if (!mode_leq(mode, DeltaWeight(es.dc, es.bias), slack))
      throw CertificationFailure("fragment " + f.label +
                                     ": invalid set not dominated by (k-1) delta + w_tilde",
                                 2, mask_to_set(f.graph, es.mask));

  return {k, w_tilde};
}

TileFragment inject_biases(const Tile &t, const TileFragment &f) {
  std::map<Pos, LinForm> additions;
  for (const auto &row : t.effective_rows()) {
    LinForm w = t.row_weight(row);
    if (w.is_zero()) continue;
    auto it = f.bias_anchors.find(row);
    if (it == f.bias_anchors.end())
      throw CompileError("fragment " + f.label + " has no bias anchor for row " + row_str(row));
    auto [slot, inserted] = additions.emplace(it->second, w);
    if (!inserted && !(slot->second == w))
      throw CompileError("fragment " + f.label + ": rows sharing anchor " + pos_str(it->second) +
                         " want different biases");
  }
  TileFragment out = f;
  for (auto &v : out.graph.vertices) {
    auto it = additions.find(v.pos);
    if (it != additions.end()) v.weight.bias += it->second;
  }
  return out;
}

namespace {

// Full-graph enumeration at circuit level; returns nothing when the graph is
// too large. Also cross-checks that the best valid delta-coefficient equals
// the stitched k.
std::optional<LinForm> measure_w_tilde(const Circuit &c, const LatticeGraph &g, long long k) {
  size_t n = g.vertices.size();
  if (n > 18) return std::nullopt;

  std::vector<unsigned> adj(n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (i != j && king_adjacent(g.vertices[i].pos, g.vertices[j].pos)) adj[i] |= 1u << j;

  struct TileView {
    std::vector<int> wired;
    std::set<std::vector<int>> rows;
    const Tile *tile;
    std::vector<size_t> vert_idx; // aligned with wired: index of the edge vertex
  };
  std::map<std::tuple<int, int, int>, size_t> edge_vertex;
  for (size_t i = 0; i < n; ++i)
    if (g.vertices[i].edge != 0) {
      Pos b = box_of(g.vertices[i].pos);
      edge_vertex[{b.first, b.second, g.vertices[i].edge}] = i;
    }
  std::vector<TileView> views;
  for (const auto &[pos, tile] : c.tiles) {
    TileView tv;
    tv.tile = &tile;
    tv.wired = tile.base.wired;
    tv.rows = tile.effective_rows();
    for (int e : tv.wired) {
      auto it = edge_vertex.find({pos.first, pos.second, e});
      if (it == edge_vertex.end()) return std::nullopt; // defensive; stitch guarantees tags
      tv.vert_idx.push_back(it->second);
    }
    views.push_back(std::move(tv));
  }

  LinForm measured;
  long long best_valid_dc = 0;
  bool any_valid = false;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool indep = true;
    for (size_t i = 0; i < n && indep; ++i)
      if ((mask & (1u << i)) && (mask & adj[i])) indep = false;
    if (!indep) continue;
    long long dc = 0;
    LinForm bias;
    for (size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) {
        dc += g.vertices[i].weight.dc;
        if (!g.vertices[i].weight.bias.is_zero()) bias += g.vertices[i].weight.bias;
      } else if (g.vertices[i].connecting) {
        ++dc;
      }
    bool valid = true;
    LinForm wx;
    for (const auto &tv : views) {
      std::vector<int> row;
      for (size_t j = 0; j < tv.wired.size(); ++j) {
        bool member = (mask & (1u << tv.vert_idx[j])) != 0;
        row.push_back(member != edge_reversed(tv.wired[j]) ? 1 : 0);
      }
      if (!tv.rows.count(row)) {
        valid = false;
        break;
      }
      wx += tv.tile->row_weight(row);
    }
    // facing edges share a net value only when the two memberships decode
    // equal; check via the circuit's own wiring
    if (valid) {
      for (const auto &[key, idx] : edge_vertex) {
        auto [r, cc, e] = key;
        int nr = r, nc = cc;
        switch (e) {
        case 1: nc++; break;
        case 2: nr--; break;
        case 3: nc--; break;
        default: nr++;
        }
        int opp = e == 1 ? 3 : e == 3 ? 1 : e == 2 ? 4 : 2;
        auto it = edge_vertex.find({nr, nc, opp});
        if (it == edge_vertex.end()) continue;
        bool va = ((mask >> idx) & 1u) != edge_reversed(e);
        bool vb = ((mask >> it->second) & 1u) != edge_reversed(opp);
        if (va != vb) {
          valid = false;
          break;
        }
      }
    }
    if (valid) {
      measured = join_upper(measured, wx.abs_upper());
      if (!any_valid || dc > best_valid_dc) best_valid_dc = dc;
      any_valid = true;
    } else if (dc == k - 1) {
      measured = join_upper(measured, bias.abs_upper());
    } else if (dc > k - 1) {
      throw CompileError("stitched graph: invalid set beats (k-1) delta");
    }
  }
  if (!any_valid || best_valid_dc != k)
    throw CompileError("stitched graph: best valid delta-coefficient " +
                       std::to_string(best_valid_dc) + " differs from k = " + std::to_string(k));
  return measured;
}

} // namespace

CompiledCircuit stitch(const Circuit &c, const FragmentLibrary &lib, bool require_closed) {
  std::string err = circuit_check(c);
  if (!err.empty()) throw CompileError("malformed circuit: " + err);
  if (require_closed && !circuit_closed(c))
    throw CompileError("open circuit: a wired edge dangles at the boundary");

  CompiledCircuit out;
  out.source = c;
  out.graph.box_rows = c.rows;
  out.graph.box_cols = c.cols;

  long long k_sum = 0;
  LinForm w_sum;
  std::map<std::tuple<int, int, int>, Pos> conn_global;
  for (const auto &[pos, tile] : c.tiles) {
    auto key = fragment_key(tile);
    auto fit = lib.fragments.find(key);
    if (fit == lib.fragments.end())
      throw CompileError("no certified fragment for tile " + key + " at (" +
                         std::to_string(pos.first) + "," + std::to_string(pos.second) + ")");
    TileFragment frag = fit->second;
    CompilationCertificate cert = lib.certificates.at(key);
    bool biased = false;
    for (const auto &d : tile.decorations)
      if (d.kind == DecorationKind::Bias && !d.bias.is_zero()) biased = true;
    if (biased) {
      frag = inject_biases(tile, frag);
      cert = certify_fragment(tile, frag, CertMode::LargeDelta);
    }
    k_sum += cert.k;
    w_sum += cert.w_tilde;
    for (const auto &v : frag.graph.vertices) {
      Vertex g = v;
      g.pos = {4 * pos.first + v.pos.first, 4 * pos.second + v.pos.second};
      if (!tile.label.empty()) g.label = tile.label;
      out.graph.add_vertex(g);
      if (v.edge != 0) conn_global[{pos.first, pos.second, v.edge}] = g.pos;
    }
  }

  std::set<std::pair<Pos, Pos>> matched;
  VertexSet matched_pos;
  for (const auto &[pos, tile] : c.tiles) {
    for (int e : tile.base.wired) {
      if (e != 1 && e != 4) continue; // each shared grid edge counted once
      int nr = pos.first + (e == 4 ? 1 : 0), nc = pos.second + (e == 1 ? 1 : 0);
      const Tile *nb = c.at(nr, nc);
      if (nb == nullptr) continue;
      int opp = e == 1 ? 3 : 2;
      Pos pa = conn_global.at({pos.first, pos.second, e});
      Pos pb = conn_global.at({nr, nc, opp});
      if (!king_adjacent(pa, pb))
        throw CompileError("facing connecting vertices " + pos_str(pa) + " and " + pos_str(pb) +
                           " are not adjacent");
      matched.insert({std::min(pa, pb), std::max(pa, pb)});
      matched_pos.insert(pa);
      matched_pos.insert(pb);
    }
  }
  // matched ends become interior vertices of the stitched graph
  for (auto &v : out.graph.vertices)
    if (matched_pos.count(v.pos)) v.connecting = false;

  for (const auto &v : out.graph.vertices)
    for (int dr = -1; dr <= 1; ++dr)
      for (int dc = -1; dc <= 1; ++dc) {
        if (dr == 0 && dc == 0) continue;
        Pos q{v.pos.first + dr, v.pos.second + dc};
        if (q < v.pos) continue; // each pair once
        const Vertex *u = out.graph.find(q);
        if (u == nullptr || box_of(q) == box_of(v.pos)) continue;
        if (!matched.count({std::min(v.pos, q), std::max(v.pos, q)}))
          throw CompileError("unintended adjacency between boxes at " + pos_str(v.pos) + " and " +
                             pos_str(q));
      }

  std::string verr = out.graph.validate();
  if (!verr.empty()) throw CompileError("stitched graph invalid: " + verr);

  out.matched_pairs = static_cast<int>(matched.size());
  out.k = k_sum - out.matched_pairs;
  out.w_tilde = w_sum;
  out.measured_w_tilde = measure_w_tilde(c, out.graph, out.k);
  return out;
}

Rat choose_delta(const Rat &bound, const Rat &margin) {
  if (bound < 0) throw CompileError("negative delta bound");
  if (bound == 0) return margin;
  return bound * (Rat(1) + margin);
}

Rat choose_delta(CompiledCircuit &cc, const Rat &bound, const Rat &margin) {
  cc.delta = choose_delta(bound, margin);
  return cc.delta;
}

CircuitAssignment decode_assignment(const LatticeGraph &g, const VertexSet &s) {
  if (!is_independent(g, s)) throw CompileError("decode requires an independent set");
  CircuitAssignment a;
  for (const auto &v : g.vertices) {
    if (v.edge == 0) continue;
    Pos b = box_of(v.pos);
    bool member = s.count(v.pos) != 0;
    a.values[{b.first, b.second, v.edge}] = (member != edge_reversed(v.edge)) ? 1 : 0;
  }
  return a;
}

bool assignment_consistent(const Circuit &c, const CircuitAssignment &a) {
  for (const auto &[pos, tile] : c.tiles) {
    std::vector<int> row;
    for (int e : tile.base.wired) {
      auto it = a.values.find({pos.first, pos.second, e});
      if (it == a.values.end()) return false;
      row.push_back(it->second);
    }
    if (!tile.effective_rows().count(row)) return false;
    for (int e : tile.base.wired) {
      if (e != 1 && e != 4) continue;
      int nr = pos.first + (e == 4 ? 1 : 0), nc = pos.second + (e == 1 ? 1 : 0);
      if (c.at(nr, nc) == nullptr) continue;
      int opp = e == 1 ? 3 : 2;
      auto ita = a.values.find({pos.first, pos.second, e});
      auto itb = a.values.find({nr, nc, opp});
      if (itb == a.values.end() || ita->second != itb->second) return false;
    }
  }
  return true;
}

} // namespace qapc
