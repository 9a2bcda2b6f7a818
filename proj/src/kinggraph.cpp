#include "kinggraph.hpp"

#include <algorithm>
#include <cstdlib>

namespace qapc {

bool king_adjacent(const Pos &a, const Pos &b) {
  int dr = std::abs(a.first - b.first), dc = std::abs(a.second - b.second);
  return dr <= 1 && dc <= 1 && (dr != 0 || dc != 0);
}

void LatticeGraph::add_vertex(Vertex v) {
  auto [it, inserted] = index_.emplace(v.pos, vertices.size());
  (void)it;
  if (!inserted)
    throw KingError("duplicate vertex at (" + std::to_string(v.pos.first) + "," +
                    std::to_string(v.pos.second) + ")");
  vertices.push_back(std::move(v));
}

const Vertex *LatticeGraph::find(const Pos &p) const {
  auto it = index_.find(p);
  return it == index_.end() ? nullptr : &vertices[it->second];
}

VertexSet LatticeGraph::connecting_set() const {
  VertexSet out;
  for (const auto &v : vertices)
    if (v.connecting) out.insert(v.pos);
  return out;
}

std::set<Pos> LatticeGraph::boxes() const {
  std::set<Pos> out;
  for (const auto &v : vertices) out.insert(box_of(v.pos));
  return out;
}

Pos box_of(const Pos &p) { return {p.first / 4, p.second / 4}; }

std::string LatticeGraph::validate() const {
  for (const auto &v : vertices) {
    auto [r, c] = v.pos;
    if (r < 0 || c < 0 || r >= 4 * box_rows || c >= 4 * box_cols)
      return "vertex outside the lattice at (" + std::to_string(r) + "," + std::to_string(c) + ")";
    if (v.connecting) {
      if (v.edge < 1 || v.edge > 4) return "connecting vertex without a valid edge tag";
      int lr = r % 4, lc = c % 4;
      bool perim = lr == 0 || lr == 3 || lc == 0 || lc == 3;
      bool corner = (lr == 0 || lr == 3) && (lc == 0 || lc == 3);
      if (!perim) return "connecting vertex off the box perimeter at (" + std::to_string(r) + "," +
                         std::to_string(c) + ")";
      if (corner && !v.corner_exception)
        return "connecting vertex in a box corner at (" + std::to_string(r) + "," +
               std::to_string(c) + ")";
    }
    // edge tags may outlive the connecting flag: a matched wire end stays
    // tagged for decoding after stitching turns it interior
  }
  return "";
}

bool is_independent(const LatticeGraph &g, const VertexSet &s) {
  for (const auto &p : s) {
    if (g.find(p) == nullptr)
      throw KingError("set contains a vertex not in the graph at (" + std::to_string(p.first) +
                      "," + std::to_string(p.second) + ")");
    for (int dr = -1; dr <= 1; ++dr)
      for (int dc = -1; dc <= 1; ++dc) {
        if (dr == 0 && dc == 0) continue;
        if (s.count({p.first + dr, p.second + dc})) return false;
      }
  }
  return true;
}

DeltaWeight circuit_weight(const LatticeGraph &g, const VertexSet &s) {
  if (!is_independent(g, s)) throw KingError("set is not independent");
  DeltaWeight w;
  long long missing_connecting = 0;
  for (const auto &v : g.vertices) {
    if (s.count(v.pos)) w += v.weight;
    else if (v.connecting) ++missing_connecting;
  }
  w += DeltaWeight(missing_connecting, LinForm());
  return w;
}

static void check_partition(const LatticeGraph &g, const std::set<Pos> &part1) {
  std::set<Pos> all = g.boxes();
  if (part1.empty()) throw KingError("partition has an empty first part");
  for (const auto &b : part1)
    if (!all.count(b)) throw KingError("partition names a box with no vertices");
  if (part1.size() == all.size()) throw KingError("partition has an empty second part");
}

BoundarySplit split_boundary(const LatticeGraph &g, const std::set<Pos> &part1) {
  check_partition(g, part1);
  auto side = [&](const Pos &p) { return part1.count(box_of(p)) ? 1 : 2; };
  BoundarySplit out;
  for (const auto &v : g.vertices) {
    int sv = side(v.pos);
    bool boundary = false;
    for (int dr = -1; dr <= 1 && !boundary; ++dr)
      for (int dc = -1; dc <= 1; ++dc) {
        if (dr == 0 && dc == 0) continue;
        Pos q{v.pos.first + dr, v.pos.second + dc};
        if (g.find(q) != nullptr && side(q) != sv) {
          boundary = true;
          break;
        }
      }
    if (boundary) {
      (sv == 1 ? out.b1 : out.b2).insert(v.pos);
      out.b.insert(v.pos);
    }
  }
  return out;
}

LatticeGraph subgraph_of_part(const LatticeGraph &g, const std::set<Pos> &part1) {
  BoundarySplit split = split_boundary(g, part1);
  LatticeGraph out;
  out.box_rows = g.box_rows;
  out.box_cols = g.box_cols;
  for (const auto &v : g.vertices) {
    if (!part1.count(box_of(v.pos))) continue;
    Vertex copy = v;
    if (split.b1.count(v.pos)) {
      copy.connecting = true;
      if (copy.edge == 0) copy.edge = 1; // boundary vertices may lack a tile edge
      copy.corner_exception = true;      // placement rule does not bind cut vertices
    }
    out.add_vertex(copy);
  }
  return out;
}

bool check_weight_lemma(const LatticeGraph &g, const std::set<Pos> &part1, const VertexSet &s) {
  if (!is_independent(g, s)) throw KingError("set is not independent");
  BoundarySplit split = split_boundary(g, part1);
  DeltaWeight lhs = circuit_weight(g, s);

  DeltaWeight rhs;
  for (int part = 1; part <= 2; ++part) {
    const VertexSet &bp = part == 1 ? split.b1 : split.b2;
    for (const auto &v : g.vertices) {
      bool in_part = (part1.count(box_of(v.pos)) != 0) == (part == 1);
      if (!in_part) continue;
      bool conn = v.connecting || bp.count(v.pos);
      if (s.count(v.pos)) rhs += v.weight;
      else if (conn) rhs += DeltaWeight(1, LinForm());
    }
  }
  long long uncovered = 0;
  for (const auto &p : split.b)
    if (!s.count(p)) ++uncovered;
  rhs -= DeltaWeight(uncovered, LinForm());
  return lhs == rhs;
}

} // namespace qapc
