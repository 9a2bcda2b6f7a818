#include "tile.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace qapc {

int rotate_edge(int edge) {
  switch (edge) {
  case 2: return 1;
  case 1: return 4;
  case 4: return 3;
  case 3: return 2;
  default: throw TileError("edge out of range");
  }
}

static int mirror_edge(int edge) {
  if (edge == 1) return 3;
  if (edge == 3) return 1;
  return edge;
}

int orient_edge(int edge, int orientation) {
  if (orientation < 0 || orientation > 7) throw TileError("orientation out of range");
  int e = edge;
  if (orientation >= 4) e = mirror_edge(e);
  for (int r = 0; r < orientation % 4; ++r) e = rotate_edge(e);
  return e;
}

const char *tile_kind_name(TileKind k) {
  switch (k) {
  case TileKind::Variable: return "variable";
  case TileKind::WireStraight: return "wire_straight";
  case TileKind::WireCorner: return "wire_corner";
  case TileKind::Intersection: return "intersection";
  case TileKind::CornerMeet: return "corner_meet";
  case TileKind::OrGate: return "or_gate";
  case TileKind::AndGate: return "and_gate";
  case TileKind::Terminator: return "terminator";
  case TileKind::TJunction: return "t_junction";
  }
  throw TileError("bad tile kind");
}

TileKind tile_kind_from_name(const std::string &name) {
  static const std::pair<const char *, TileKind> table[] = {
      {"variable", TileKind::Variable},
      {"wire_straight", TileKind::WireStraight},
      {"wire_corner", TileKind::WireCorner},
      {"intersection", TileKind::Intersection},
      {"corner_meet", TileKind::CornerMeet},
      {"or_gate", TileKind::OrGate},
      {"and_gate", TileKind::AndGate},
      {"terminator", TileKind::Terminator},
      {"t_junction", TileKind::TJunction},
  };
  for (const auto &[n, k] : table)
    if (name == n) return k;
  throw TileError("unknown tile kind: " + name);
}

bool Decoration::matches(const std::vector<int> &wired, const std::vector<int> &row) const {
  for (const auto &[edge, bit] : selector) {
    auto it = std::find(wired.begin(), wired.end(), edge);
    if (it == wired.end()) return false;
    if (row[static_cast<size_t>(it - wired.begin())] != bit) return false;
  }
  return true;
}

Decoration xy_restriction(int i, int j) {
  Decoration d;
  d.kind = DecorationKind::Restriction;
  d.selector = {{1, i}, {2, j}};
  return d;
}

Decoration xy_bias(int i, int j, LinForm weight) {
  Decoration d;
  d.kind = DecorationKind::Bias;
  d.selector = {{1, i}, {2, j}};
  d.bias = std::move(weight);
  return d;
}

Decoration value_bias(int edge, int bit, LinForm weight) {
  Decoration d;
  d.kind = DecorationKind::Bias;
  d.selector = {{edge, bit}};
  d.bias = std::move(weight);
  return d;
}

std::set<std::vector<int>> Tile::effective_rows() const {
  std::set<std::vector<int>> out;
  for (const auto &row : base.rows) {
    bool removed = false;
    for (const auto &d : decorations)
      if (d.kind == DecorationKind::Restriction && d.matches(base.wired, row)) {
        removed = true;
        break;
      }
    if (!removed) out.insert(row);
  }
  return out;
}

LinForm Tile::row_weight(const std::vector<int> &row) const {
  LinForm w;
  for (const auto &d : decorations)
    if (d.kind == DecorationKind::Bias && d.matches(base.wired, row)) w += d.bias;
  return w;
}

std::string Tile::restriction_signature() const {
  std::ostringstream os;
  bool first = true;
  for (const auto &row : effective_rows()) {
    if (!first) os << '|';
    first = false;
    for (int b : row) os << b;
  }
  return os.str();
}

static TruthTable base_table(TileKind kind) {
  TruthTable t;
  auto all_rows = [&](int n) {
    std::set<std::vector<int>> rows;
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> row(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) row[static_cast<size_t>(i)] = (mask >> (n - 1 - i)) & 1;
      rows.insert(row);
    }
    return rows;
  };
  switch (kind) {
  case TileKind::Variable:
  case TileKind::Terminator:
    t.wired = {1};
    t.rows = {{0}, {1}};
    break;
  case TileKind::WireStraight:
    t.wired = {1, 3};
    t.rows = {{0, 0}, {1, 1}};
    break;
  case TileKind::WireCorner:
    t.wired = {1, 2};
    t.rows = {{0, 0}, {1, 1}};
    break;
  case TileKind::Intersection:
    // Opposite edges carry the same value: 1/3 horizontal, 2/4 vertical.
    t.wired = {1, 2, 3, 4};
    t.rows = {{0, 0, 0, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}, {1, 1, 1, 1}};
    break;
  case TileKind::CornerMeet:
    // Two wire ends meeting in one cell; the values are independent.
    t.wired = {1, 2};
    t.rows = all_rows(2);
    break;
  case TileKind::OrGate:
    // Inputs on edges 1 and 2, output on edge 3.
    t.wired = {1, 2, 3};
    t.rows = {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 1}};
    break;
  case TileKind::AndGate:
    t.wired = {1, 2, 3};
    t.rows = {{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}};
    break;
  case TileKind::TJunction:
    // One wire fanned out over three edges, all equal.
    t.wired = {1, 3, 4};
    t.rows = {{0, 0, 0}, {1, 1, 1}};
    break;
  }
  return t;
}

Tile standard_tile(TileKind kind, int orientation) {
  TruthTable base = base_table(kind);
  Tile t;
  t.kind = kind;
  t.orientation = orientation;
  std::vector<int> mapped;
  for (int e : base.wired) mapped.push_back(orient_edge(e, orientation));
  std::vector<size_t> order(mapped.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return mapped[a] < mapped[b]; });
  for (size_t i : order) t.base.wired.push_back(mapped[i]);
  for (const auto &row : base.rows) {
    std::vector<int> r;
    for (size_t i : order) r.push_back(row[i]);
    t.base.rows.insert(r);
  }
  return t;
}

Tile decorate(const Tile &t, const Decoration &d) {
  if (d.selector.empty()) throw TileError("decoration has empty selector");
  for (const auto &[edge, bit] : d.selector) {
    if (std::find(t.base.wired.begin(), t.base.wired.end(), edge) == t.base.wired.end())
      throw TileError("decoration selects unwired edge " + std::to_string(edge));
    if (bit != 0 && bit != 1) throw TileError("decoration selector bit out of range");
  }
  auto before = t.effective_rows();
  Tile out = t;
  out.decorations.push_back(d);
  if (d.kind == DecorationKind::Restriction) {
    auto after = out.effective_rows();
    if (after.size() == before.size()) throw TileError("dead restriction: removes no row");
    if (after.empty()) throw TileError("restriction leaves tile with no valid row");
  } else {
    bool hits = false;
    for (const auto &row : before)
      if (d.matches(t.base.wired, row)) { hits = true; break; }
    if (!hits) throw TileError("dead bias: matches no valid row");
  }
  return out;
}

void Circuit::place(int r, int c, Tile t) {
  if (r < 0 || r >= rows || c < 0 || c >= cols) throw TileError("tile out of grid bounds");
  auto [it, inserted] = tiles.emplace(std::make_pair(r, c), std::move(t));
  (void)it;
  if (!inserted)
    throw TileError("tile collision at (" + std::to_string(r) + "," + std::to_string(c) + ")");
}

const Tile *Circuit::at(int r, int c) const {
  auto it = tiles.find({r, c});
  return it == tiles.end() ? nullptr : &it->second;
}

// Cell adjacent across the given edge; top is row r - 1.
static std::pair<int, int> neighbor_cell(int r, int c, int edge) {
  switch (edge) {
  case 1: return {r, c + 1};
  case 2: return {r - 1, c};
  case 3: return {r, c - 1};
  default: return {r + 1, c};
  }
}

static int opposite_edge(int edge) {
  switch (edge) {
  case 1: return 3;
  case 3: return 1;
  case 2: return 4;
  default: return 2;
  }
}

static bool edge_wired(const Tile &t, int edge) {
  return std::find(t.base.wired.begin(), t.base.wired.end(), edge) != t.base.wired.end();
}

std::string circuit_check(const Circuit &c) {
  for (const auto &[pos, tile] : c.tiles) {
    auto [r, cc] = pos;
    if (r < 0 || r >= c.rows || cc < 0 || cc >= c.cols) return "tile outside grid";
    for (int e = 1; e <= kEdgeCount; ++e) {
      auto [nr, nc] = neighbor_cell(r, cc, e);
      bool wired = edge_wired(tile, e);
      if (nr < 0 || nr >= c.rows || nc < 0 || nc >= c.cols) continue; // boundary may dangle
      const Tile *nb = c.at(nr, nc);
      bool nb_wired = nb != nullptr && edge_wired(*nb, opposite_edge(e));
      if (wired && nb == nullptr)
        return "wired edge " + std::to_string(e) + " of tile (" + std::to_string(r) + "," +
               std::to_string(cc) + ") faces an empty cell";
      if (nb != nullptr && wired != nb_wired)
        return "edge mismatch between (" + std::to_string(r) + "," + std::to_string(cc) +
               ") and (" + std::to_string(nr) + "," + std::to_string(nc) + ")";
    }
  }
  return "";
}

bool circuit_closed(const Circuit &c) {
  if (!circuit_check(c).empty()) return false;
  for (const auto &[pos, tile] : c.tiles) {
    auto [r, cc] = pos;
    for (int e : tile.base.wired) {
      auto [nr, nc] = neighbor_cell(r, cc, e);
      if (nr < 0 || nr >= c.rows || nc < 0 || nc >= c.cols) return false;
    }
  }
  return true;
}

namespace {
struct UnionFind {
  std::vector<int> parent;
  int make() {
    parent.push_back(static_cast<int>(parent.size()));
    return parent.back();
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};
} // namespace

CircuitNets circuit_nets(const Circuit &c) {
  UnionFind uf;
  std::map<std::tuple<int, int, int>, int> slot;
  for (const auto &[pos, tile] : c.tiles)
    for (int e : tile.base.wired)
      slot[{pos.first, pos.second, e}] = uf.make();
  for (const auto &[key, id] : slot) {
    auto [r, cc, e] = key;
    auto [nr, nc] = neighbor_cell(r, cc, e);
    auto it = slot.find({nr, nc, opposite_edge(e)});
    if (it != slot.end()) uf.unite(id, it->second);
  }
  CircuitNets nets;
  std::map<int, int> renumber;
  for (const auto &[key, id] : slot) {
    int root = uf.find(id);
    auto [it, inserted] = renumber.emplace(root, nets.count);
    if (inserted) ++nets.count;
    nets.net_of[key] = it->second;
  }
  return nets;
}

std::vector<std::pair<CircuitAssignment, LinForm>>
circuit_valid_assignments(const Circuit &c, int net_cap) {
  std::string err = circuit_check(c);
  if (!err.empty()) throw TileError("malformed circuit: " + err);
  CircuitNets nets = circuit_nets(c);
  if (nets.count > net_cap)
    throw TileError("circuit has " + std::to_string(nets.count) +
                    " nets, above the enumeration cap of " + std::to_string(net_cap));

  struct Entry {
    std::tuple<int, int, int> pos{}; // (r, c, 0)
    std::vector<int> net_ids;        // aligned with tile wired edges
    std::vector<std::vector<int>> rows;
    std::vector<LinForm> weights;
  };
  std::vector<Entry> entries;
  for (const auto &[pos, tile] : c.tiles) {
    Entry e;
    e.pos = {pos.first, pos.second, 0};
    for (int edge : tile.base.wired)
      e.net_ids.push_back(nets.net_of.at({pos.first, pos.second, edge}));
    for (const auto &row : tile.effective_rows()) {
      e.rows.push_back(row);
      e.weights.push_back(tile.row_weight(row));
    }
    entries.push_back(std::move(e));
  }

  std::vector<int> net_val(static_cast<size_t>(nets.count), -1);
  std::vector<std::pair<CircuitAssignment, LinForm>> out;

  std::vector<size_t> chosen(entries.size(), 0);
  std::function<void(size_t)> rec = [&](size_t depth) {
    if (depth == entries.size()) {
      CircuitAssignment a;
      for (const auto &[key, id] : nets.net_of) a.values[key] = net_val[static_cast<size_t>(id)];
      LinForm w;
      for (size_t i = 0; i < entries.size(); ++i) w += entries[i].weights[chosen[i]];
      out.emplace_back(std::move(a), std::move(w));
      return;
    }
    const Entry &e = entries[depth];
    for (size_t ri = 0; ri < e.rows.size(); ++ri) {
      std::vector<int> touched;
      bool ok = true;
      for (size_t j = 0; j < e.net_ids.size(); ++j) {
        int id = e.net_ids[j];
        int want = e.rows[ri][j];
        int &cur = net_val[static_cast<size_t>(id)];
        if (cur == -1) {
          cur = want;
          touched.push_back(id);
        } else if (cur != want) {
          ok = false;
          break;
        }
      }
      if (ok) {
        chosen[depth] = ri;
        rec(depth + 1);
      }
      for (int id : touched) net_val[static_cast<size_t>(id)] = -1;
    }
  };
  rec(0);
  return out;
}

static Circuit build_gate_chain(int k, TileKind gate, int in_bit) {
  if (k < 1) throw TileError("gate chain needs at least one input");
  Circuit c;
  if (k == 1) {
    c.rows = 1;
    c.cols = 1;
    c.place(0, 0, standard_tile(TileKind::WireCorner, 0));
    return c;
  }
  c.rows = 2;
  c.cols = 2 * k - 1;
  c.place(0, 0, standard_tile(TileKind::WireCorner, 0));
  Decoration restrict_inputs;
  restrict_inputs.kind = DecorationKind::Restriction;
  restrict_inputs.selector = {{3, in_bit}, {4, in_bit}};
  for (int i = 2; i <= k; ++i) {
    int a = 2 * i - 3, b = 2 * i - 2;
    c.place(0, a, standard_tile(TileKind::Intersection, 0));
    c.place(1, a, standard_tile(TileKind::WireCorner, 0));
    c.place(1, b, standard_tile(TileKind::WireCorner, 3));
    c.place(0, b, decorate(standard_tile(gate, 2), restrict_inputs));
  }
  return c;
}

Circuit build_or_chain(int k) { return build_gate_chain(k, TileKind::OrGate, 1); }

Circuit build_and_chain(int k) { return build_gate_chain(k, TileKind::AndGate, 0); }

Circuit or_triple_demo_circuit() {
  LinForm w1 = LinForm::sym("w1"), w2 = LinForm::sym("w2"), w3 = LinForm::sym("w3"),
          w4 = LinForm::sym("w4");
  Circuit c;
  c.rows = 2;
  c.cols = 3;
  c.place(0, 0, standard_tile(TileKind::WireCorner, 1));
  Tile crossing = standard_tile(TileKind::Intersection, 0);
  crossing = decorate(crossing, xy_restriction(0, 0));
  crossing = decorate(crossing, xy_bias(1, 1, w4));
  c.place(0, 1, crossing);
  Tile gate = standard_tile(TileKind::AndGate, 0);
  Decoration r;
  r.kind = DecorationKind::Restriction;
  r.selector = {{1, 0}, {2, 0}};
  gate = decorate(gate, r);
  gate = decorate(gate, value_bias(2, 1, w2));
  gate = decorate(gate, value_bias(1, 1, w3));
  c.place(0, 2, gate);
  Tile meet = standard_tile(TileKind::CornerMeet, 0);
  meet = decorate(meet, value_bias(1, 1, w1));
  c.place(1, 0, meet);
  c.place(1, 1, standard_tile(TileKind::WireCorner, 3));
  return c;
}

} // namespace qapc
