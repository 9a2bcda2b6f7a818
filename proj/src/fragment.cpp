#include "fragment.hpp"

#include "compiler.hpp"

namespace qapc {

Pos canonical_conn(int edge) {
  switch (edge) {
  case 1: return {2, 3};
  case 2: return {0, 2};
  case 3: return {1, 0};
  case 4: return {3, 1};
  default: throw CompileError("edge out of range");
  }
}

bool edge_reversed(int edge) { return edge == 2 || edge == 3; }

std::map<int, Pos> TileFragment::connecting() const {
  std::map<int, Pos> out;
  for (const auto &v : graph.vertices)
    if (v.connecting) {
      if (out.count(v.edge)) throw CompileError("two connecting vertices on one edge");
      out[v.edge] = v.pos;
    }
  return out;
}

std::string fragment_key(const Tile &t) {
  return std::string(tile_kind_name(t.kind)) + ":" + std::to_string(t.orientation) + ":" +
         t.restriction_signature();
}

namespace {

struct Cell {
  Pos pos;
  long long dc;
  int conn_edge = 0; // 0 for interior vertices
};

TileFragment make_fragment(const std::string &label, const std::vector<Cell> &cells,
                           std::map<std::vector<int>, Pos> anchors) {
  TileFragment f;
  f.label = label;
  f.graph.box_rows = 1;
  f.graph.box_cols = 1;
  for (const auto &c : cells) {
    Vertex v;
    v.pos = c.pos;
    v.weight = DeltaWeight(c.dc, LinForm());
    v.connecting = c.conn_edge != 0;
    v.edge = c.conn_edge;
    v.label = label;
    f.graph.add_vertex(v);
  }
  std::string err = f.graph.validate();
  if (!err.empty()) throw CompileError("fragment " + label + ": " + err);
  f.bias_anchors = std::move(anchors);
  return f;
}

void add_entry(FragmentLibrary &lib, const Tile &t, const TileFragment &f) {
  std::string key = fragment_key(t);
  if (lib.fragments.count(key)) throw CompileError("duplicate library key " + key);
  lib.certificates[key] = certify_fragment(t, f);
  lib.fragments[key] = f;
}

// Single connecting vertex carrying weight delta; doubles as the variable
// and the terminator fragment.
TileFragment point_fragment(const std::string &label, int edge) {
  std::vector<int> on{1}, off{0};
  std::map<std::vector<int>, Pos> anchors;
  // the vertex sits in the set exactly when the decoded value matches
  anchors[edge_reversed(edge) ? off : on] = canonical_conn(edge);
  return make_fragment(label, {{canonical_conn(edge), 1, edge}}, std::move(anchors));
}

} // namespace

FragmentLibrary build_standard_library() {
  FragmentLibrary lib;
  const Pos c1 = canonical_conn(1), c2 = canonical_conn(2), c3 = canonical_conn(3),
            c4 = canonical_conn(4);

  for (int o = 0; o < 4; ++o) {
    int edge = orient_edge(1, o);
    add_entry(lib, standard_tile(TileKind::Variable, o),
              point_fragment("var" + std::to_string(edge), edge));
    add_entry(lib, standard_tile(TileKind::Terminator, o),
              point_fragment("term" + std::to_string(edge), edge));
  }

  // straight wires: a path of weight-2delta vertices between the ends
  add_entry(lib, standard_tile(TileKind::WireStraight, 0),
            make_fragment("wire13",
                          {{c3, 2, 3}, {{1, 1}, 2}, {{1, 2}, 2}, {c1, 2, 1}},
                          {{{1, 1}, c1}, {{0, 0}, c3}}));
  add_entry(lib, standard_tile(TileKind::WireStraight, 1),
            make_fragment("wire24",
                          {{c2, 2, 2}, {{1, 2}, 2}, {{2, 2}, 2}, {c4, 2, 4}},
                          {{{1, 1}, c4}, {{0, 0}, c2}}));

  // corner wires, one fragment per quarter turn
  add_entry(lib, standard_tile(TileKind::WireCorner, 0),
            make_fragment("corner12",
                          {{c2, 2, 2}, {{1, 1}, 2}, {{2, 2}, 2}, {c1, 2, 1}},
                          {{{1, 1}, c1}, {{0, 0}, c2}}));
  add_entry(lib, standard_tile(TileKind::WireCorner, 1),
            make_fragment("corner14", {{{2, 2}, 2}, {c1, 2, 1}, {c4, 2, 4}},
                          {{{1, 1}, c1}, {{0, 0}, {2, 2}}}));
  add_entry(lib, standard_tile(TileKind::WireCorner, 2),
            make_fragment("corner34",
                          {{c3, 2, 3}, {{1, 1}, 2}, {{2, 2}, 2}, {c4, 2, 4}},
                          {{{1, 1}, c4}, {{0, 0}, c3}}));
  add_entry(lib, standard_tile(TileKind::WireCorner, 3),
            make_fragment("corner23", {{c3, 2, 3}, {{1, 1}, 2}, {c2, 2, 2}},
                          {{{0, 0}, c2}, {{1, 1}, {1, 1}}}));

  // two wire ends meeting in one cell without interacting
  add_entry(lib, standard_tile(TileKind::CornerMeet, 0),
            make_fragment("meet12", {{c2, 1, 2}, {c1, 1, 1}},
                          {{{1, 0}, c1}, {{1, 1}, c1}, {{0, 0}, c2}}));

  // crossing: ring of weight-3delta interiors keyed so exactly one survives
  // per row; rows ordered over edges (1,2,3,4)
  {
    std::vector<Cell> cells{{c1, 2, 1}, {c2, 2, 2}, {c3, 2, 3}, {c4, 2, 4},
                            {{1, 1}, 3}, {{1, 2}, 3}, {{2, 1}, 3}, {{2, 2}, 3}};
    std::map<std::vector<int>, Pos> anchors{{{1, 1, 1, 1}, {1, 1}},
                                            {{0, 0, 0, 0}, {2, 2}},
                                            {{0, 1, 0, 1}, {1, 2}},
                                            {{1, 0, 1, 0}, {2, 1}}};
    add_entry(lib, standard_tile(TileKind::Intersection, 0),
              make_fragment("cross", cells, anchors));

    // both-ones forbidden: the interior vertex of the all-ones row is gone
    std::vector<Cell> restricted{{c1, 2, 1}, {c2, 2, 2}, {c3, 2, 3}, {c4, 2, 4},
                                 {{1, 2}, 3}, {{2, 1}, 3}, {{2, 2}, 3}};
    anchors.erase({1, 1, 1, 1});
    add_entry(lib, decorate(standard_tile(TileKind::Intersection, 0), xy_restriction(1, 1)),
              make_fragment("crossR11", restricted, anchors));
  }

  // gates enter from below (edges 3 and 4 in, edge 1 out); rows over (1,3,4)
  {
    Decoration or_r;
    or_r.kind = DecorationKind::Restriction;
    or_r.selector = {{3, 1}, {4, 1}};
    add_entry(lib, decorate(standard_tile(TileKind::OrGate, 2), or_r),
              make_fragment("orR",
                            {{c1, 2, 1}, {c3, 2, 3}, {c4, 2, 4}, {{2, 1}, 2}, {{2, 2}, 2}},
                            {{{0, 0, 0}, {2, 2}}, {{1, 1, 0}, {2, 1}}, {{1, 0, 1}, c4}}));

    Decoration and_r;
    and_r.kind = DecorationKind::Restriction;
    and_r.selector = {{3, 0}, {4, 0}};
    add_entry(lib, decorate(standard_tile(TileKind::AndGate, 2), and_r),
              make_fragment("andR",
                            {{c1, 2, 1}, {c3, 2, 3}, {c4, 2, 4},
                             {{1, 2}, 2}, {{2, 2}, 2}, {{0, 1}, 2}},
                            {{{0, 0, 1}, {1, 2}}, {{0, 1, 0}, {2, 2}}, {{1, 1, 1}, c1}}));
  }

  // one wire fanned over three edges
  add_entry(lib, standard_tile(TileKind::TJunction, 0),
            make_fragment("tjunc",
                          {{c3, 2, 3}, {c1, 2, 1}, {c4, 2, 4}, {{1, 1}, 2}, {{2, 2}, 3}},
                          {{{0, 0, 0}, {2, 2}}, {{1, 1, 1}, {1, 1}}}));

  return lib;
}

const FragmentLibrary &standard_library() {
  static FragmentLibrary lib = build_standard_library();
  return lib;
}

} // namespace qapc
