#include "mwis.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>

namespace qapc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void require_valid(const LatticeGraph &g) {
  std::string err = g.validate();
  if (!err.empty()) throw MwisError("invalid lattice graph: " + err);
}

// Indices sorted by position; the tie-break order everywhere below.
std::vector<size_t> position_order(const LatticeGraph &g) {
  std::vector<size_t> order(g.vertices.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return g.vertices[a].pos < g.vertices[b].pos;
  });
  return order;
}

// Total order for delta -> infinity; throws when biases with different
// symbol profiles must break a tie.
int cmp_large_delta(const DeltaWeight &a, const DeltaWeight &b) {
  if (a.dc != b.dc) return a.dc < b.dc ? -1 : 1;
  if (a.bias.terms != b.bias.terms)
    throw MwisError("weights with unrelated symbolic parts cannot be ordered");
  if (a.bias.c == b.bias.c) return 0;
  return a.bias.c < b.bias.c ? -1 : 1;
}

struct BruteSearch {
  int n = 0;
  std::vector<uint64_t> adj;
  std::vector<DeltaWeight> w;      // effective: connecting vertices shed one delta
  std::vector<DeltaWeight> suffix; // sum of positive effective weights from i on
  DeltaWeight best;
  std::vector<int> best_set, cur;
  bool have_best = false;
  long long nodes = 0;

  void dfs(int i, uint64_t chosen, const DeltaWeight &acc) {
    ++nodes;
    if (i < n) {
      DeltaWeight reach = acc + suffix[static_cast<size_t>(i)];
      if (have_best && cmp_large_delta(reach, best) < 0) return;
    }
    if (i == n) {
      int c = have_best ? cmp_large_delta(acc, best) : 1;
      if (c > 0 || (c == 0 && cur < best_set)) {
        best = acc;
        best_set = cur;
        have_best = true;
      }
      return;
    }
    if ((adj[static_cast<size_t>(i)] & chosen) == 0) {
      cur.push_back(i);
      dfs(i + 1, chosen | (1ull << i), acc + w[static_cast<size_t>(i)]);
      cur.pop_back();
    }
    dfs(i + 1, chosen, acc);
  }
};

} // namespace

SolveReport brute_mwis(const LatticeGraph &g, int cap) {
  auto start = Clock::now();
  require_valid(g);
  if (cap > 63) throw MwisError("brute force cap exceeds the 63-vertex mask limit");
  int n = static_cast<int>(g.vertices.size());
  if (n > cap) throw MwisError("graph exceeds the brute force cap");

  auto order = position_order(g);
  BruteSearch s;
  s.n = n;
  s.adj.assign(static_cast<size_t>(n), 0);
  s.w.resize(static_cast<size_t>(n));
  long long connecting = 0;
  for (int i = 0; i < n; ++i) {
    const Vertex &v = g.vertices[order[static_cast<size_t>(i)]];
    DeltaWeight eff = v.weight;
    if (v.connecting) {
      eff.dc -= 1; // skipping it would pay delta; fold that into membership
      ++connecting;
    }
    s.w[static_cast<size_t>(i)] = eff;
    for (int j = 0; j < i; ++j)
      if (king_adjacent(v.pos, g.vertices[order[static_cast<size_t>(j)]].pos)) {
        s.adj[static_cast<size_t>(i)] |= 1ull << j;
        s.adj[static_cast<size_t>(j)] |= 1ull << i;
      }
  }
  DeltaWeight zero;
  s.suffix.assign(static_cast<size_t>(n) + 1, DeltaWeight());
  for (int i = n - 1; i >= 0; --i) {
    s.suffix[static_cast<size_t>(i)] = s.suffix[static_cast<size_t>(i) + 1];
    if (cmp_large_delta(s.w[static_cast<size_t>(i)], zero) > 0)
      s.suffix[static_cast<size_t>(i)] += s.w[static_cast<size_t>(i)];
  }
  s.dfs(0, 0, DeltaWeight(connecting));

  SolveReport rep;
  for (int i : s.best_set) rep.set.insert(g.vertices[order[static_cast<size_t>(i)]].pos);
  rep.weight = circuit_weight(g, rep.set);
  if (rep.weight != s.best) throw MwisError("internal weight mismatch in brute force");
  rep.nodes = s.nodes;
  rep.solver = "brute";
  rep.wall_seconds = seconds_since(start);
  return rep;
}

namespace {

// Branch-and-bound core over resolved weights. W is int64 when every scaled
// weight fits comfortably, exact rational otherwise.
template <class W> struct BnbCore {
  int n = 0;
  std::vector<Pos> pos;                // ascending with index
  std::vector<std::vector<int>> adj;   // sorted neighbor lists
  std::vector<W> w;
  std::map<Pos, int> at;

  std::vector<char> alive;
  std::vector<int> degree;
  std::vector<int> trail;   // removed vertices, for undo
  std::vector<int> cur_set; // included vertices

  W best{};
  std::vector<int> best_set;
  long long nodes = 0;

  bool use_target = false; // decision mode: can `target` be reached exactly?
  W target{};
  bool target_hit = false;

  Clock::time_point deadline;
  bool use_deadline = false;
  bool timed_out = false;

  // scratch for the clique-cover bound
  std::vector<int> stamp;
  int epoch = 0;

  bool adjacent(int u, int v) const {
    const auto &list = adj[static_cast<size_t>(u)];
    return std::find(list.begin(), list.end(), v) != list.end();
  }

  void remove_vertex(int v) {
    alive[static_cast<size_t>(v)] = 0;
    trail.push_back(v);
    for (int u : adj[static_cast<size_t>(v)])
      if (alive[static_cast<size_t>(u)]) --degree[static_cast<size_t>(u)];
  }

  void restore(size_t mark) {
    while (trail.size() > mark) {
      int v = trail.back();
      trail.pop_back();
      alive[static_cast<size_t>(v)] = 1;
      for (int u : adj[static_cast<size_t>(v)])
        if (alive[static_cast<size_t>(u)]) ++degree[static_cast<size_t>(u)];
    }
  }

  // Nonpositive vertices never help; a vertex at least as heavy as its
  // clique neighborhood is in some optimum (swap argument).
  void reduce(W &acc) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < n && !stop_now(); ++v) {
        if (!alive[static_cast<size_t>(v)]) continue;
        if (w[static_cast<size_t>(v)] <= W{}) {
          remove_vertex(v);
          changed = true;
          continue;
        }
        bool simplicial = true, heaviest = true;
        const auto &nb = adj[static_cast<size_t>(v)];
        for (size_t a = 0; a < nb.size() && simplicial; ++a) {
          if (!alive[static_cast<size_t>(nb[a])]) continue;
          if (w[static_cast<size_t>(nb[a])] > w[static_cast<size_t>(v)]) heaviest = false;
          for (size_t b = a + 1; b < nb.size(); ++b) {
            if (!alive[static_cast<size_t>(nb[b])]) continue;
            if (!adjacent(nb[a], nb[b])) {
              simplicial = false;
              break;
            }
          }
        }
        if (simplicial && heaviest) {
          acc += w[static_cast<size_t>(v)];
          cur_set.push_back(v);
          for (int u : nb)
            if (alive[static_cast<size_t>(u)]) remove_vertex(u);
          remove_vertex(v);
          changed = true;
        }
      }
    }
  }

  // Greedy partition of alive vertices into 2x2-block king cliques; an
  // independent set takes at most the heaviest member of each.
  W clique_bound() {
    ++epoch;
    W bound{};
    for (int v = 0; v < n; ++v) {
      if (!alive[static_cast<size_t>(v)] || stamp[static_cast<size_t>(v)] == epoch) continue;
      stamp[static_cast<size_t>(v)] = epoch;
      W heavy = w[static_cast<size_t>(v)];
      Pos p = pos[static_cast<size_t>(v)];
      for (Pos q : {Pos{p.first, p.second + 1}, Pos{p.first + 1, p.second},
                    Pos{p.first + 1, p.second + 1}}) {
        auto it = at.find(q);
        if (it == at.end()) continue;
        int u = it->second;
        if (!alive[static_cast<size_t>(u)] || stamp[static_cast<size_t>(u)] == epoch) continue;
        stamp[static_cast<size_t>(u)] = epoch;
        if (w[static_cast<size_t>(u)] > heavy) heavy = w[static_cast<size_t>(u)];
      }
      if (heavy > W{}) bound += heavy;
    }
    return bound;
  }

  bool stop_now() {
    if (timed_out || target_hit) return true;
    if (use_deadline && (nodes & 4095) == 0 && Clock::now() > deadline) {
      timed_out = true;
      return true;
    }
    return false;
  }

  void record(const W &acc) {
    if (use_target) {
      if (acc == target) target_hit = true;
      return;
    }
    std::vector<int> sorted = cur_set;
    std::sort(sorted.begin(), sorted.end());
    // the incumbent starts as the empty set at weight 0, itself a candidate
    if (acc > best || (acc == best && sorted < best_set)) {
      best = acc;
      best_set = std::move(sorted);
    }
  }

  void dfs(W acc) {
    ++nodes;
    if (stop_now()) return;
    size_t mark = trail.size(), smark = cur_set.size();
    reduce(acc);
    int branch = -1, branch_deg = -1;
    for (int v = 0; v < n; ++v)
      if (alive[static_cast<size_t>(v)] && degree[static_cast<size_t>(v)] > branch_deg) {
        branch = v;
        branch_deg = degree[static_cast<size_t>(v)];
      }
    if (branch < 0) {
      record(acc);
    } else {
      W reach = acc + clique_bound();
      bool cut = use_target ? reach < target : reach <= best;
      if (!cut && !stop_now()) {
        size_t m2 = trail.size(), s2 = cur_set.size();
        cur_set.push_back(branch);
        W inc = acc + w[static_cast<size_t>(branch)];
        for (int u : adj[static_cast<size_t>(branch)])
          if (alive[static_cast<size_t>(u)]) remove_vertex(u);
        remove_vertex(branch);
        dfs(inc);
        restore(m2);
        cur_set.resize(s2);
        if (!stop_now()) {
          remove_vertex(branch);
          dfs(acc);
          restore(m2);
        }
      }
    }
    restore(mark);
    cur_set.resize(smark);
  }

  void run_optimize() {
    use_target = false;
    best = W{};
    best_set.clear();
    cur_set.clear();
    dfs(W{});
  }

  bool run_decision(const std::vector<char> &allowed, const W &t) {
    for (int v = 0; v < n; ++v) {
      alive[static_cast<size_t>(v)] = allowed[static_cast<size_t>(v)];
      degree[static_cast<size_t>(v)] = 0;
    }
    for (int v = 0; v < n; ++v) {
      if (!alive[static_cast<size_t>(v)]) continue;
      for (int u : adj[static_cast<size_t>(v)])
        if (alive[static_cast<size_t>(u)]) ++degree[static_cast<size_t>(v)];
    }
    trail.clear();
    cur_set.clear();
    nodes = 0;
    use_target = true;
    target = t;
    target_hit = t == W{}; // the empty set reaches a zero target
    if (!target_hit && t > W{}) dfs(W{});
    return target_hit;
  }
};

template <class W> struct BnbOutcome {
  std::vector<int> set;
  W value{};
  long long nodes = 0;
  bool timed_out = false;
};

// Certify the optimal value, then grow the lexicographically smallest
// optimum front to back, deciding each vertex by one decision search.
template <class W>
BnbOutcome<W> run_bnb(const std::vector<Pos> &pos, const std::vector<std::vector<int>> &adj,
                      const std::vector<W> &w, Clock::time_point deadline) {
  BnbCore<W> core;
  core.n = static_cast<int>(pos.size());
  core.pos = pos;
  core.adj = adj;
  core.w = w;
  for (int i = 0; i < core.n; ++i) core.at[pos[static_cast<size_t>(i)]] = i;
  core.alive.assign(static_cast<size_t>(core.n), 1);
  core.degree.assign(static_cast<size_t>(core.n), 0);
  for (int v = 0; v < core.n; ++v)
    core.degree[static_cast<size_t>(v)] = static_cast<int>(adj[static_cast<size_t>(v)].size());
  core.stamp.assign(static_cast<size_t>(core.n), 0);
  core.deadline = deadline;
  core.use_deadline = true;

  core.run_optimize();
  BnbOutcome<W> out;
  out.nodes = core.nodes;
  out.timed_out = core.timed_out;
  out.value = core.best;
  out.set = core.best_set;
  if (core.timed_out) return out;

  // lexicographic extraction; every decision search is exact
  std::vector<char> allowed(static_cast<size_t>(core.n), 1);
  std::vector<int> chosen;
  W acc{};
  for (int v = 0; v < core.n && acc != out.value; ++v) {
    if (!allowed[static_cast<size_t>(v)]) continue;
    if (w[static_cast<size_t>(v)] < W{}) continue;
    std::vector<char> residual(static_cast<size_t>(core.n), 0);
    for (int u = v + 1; u < core.n; ++u)
      residual[static_cast<size_t>(u)] = allowed[static_cast<size_t>(u)];
    for (int u : adj[static_cast<size_t>(v)]) residual[static_cast<size_t>(u)] = 0;
    W t = out.value - acc - w[static_cast<size_t>(v)];
    bool ok = core.run_decision(residual, t);
    out.nodes += core.nodes;
    if (core.timed_out) return out; // keep the certified incumbent, unflagged
    if (!ok) continue;
    chosen.push_back(v);
    acc += w[static_cast<size_t>(v)];
    allowed[static_cast<size_t>(v)] = 0;
    for (int u : adj[static_cast<size_t>(v)]) allowed[static_cast<size_t>(u)] = 0;
  }
  if (acc != out.value) throw MwisError("lexicographic extraction failed to reach the optimum");
  out.set = std::move(chosen);
  return out;
}

} // namespace

SolveReport bnb_mwis(const LatticeGraph &g, const Rat &delta, double timeout_seconds) {
  auto start = Clock::now();
  require_valid(g);
  if (delta <= 0) throw MwisError("delta must be positive");
  if (timeout_seconds < 0) {
    timeout_seconds = 600.0;
    if (const char *env = std::getenv("QAPC_TIMEOUT_SECS")) {
      char *end = nullptr;
      double v = std::strtod(env, &end);
      if (end && *end == '\0' && v > 0) timeout_seconds = v;
    }
  }
  auto deadline = start + std::chrono::duration_cast<Clock::duration>(
                              std::chrono::duration<double>(timeout_seconds));

  auto order = position_order(g);
  int n = static_cast<int>(order.size());
  std::vector<Pos> pos(static_cast<size_t>(n));
  std::vector<Rat> wr(static_cast<size_t>(n));
  long long connecting = 0;
  for (int i = 0; i < n; ++i) {
    const Vertex &v = g.vertices[order[static_cast<size_t>(i)]];
    pos[static_cast<size_t>(i)] = v.pos;
    if (!v.weight.bias.terms.empty())
      throw MwisError("vertex biases must be plain rationals at solve time");
    Rat rw = Rat(v.weight.dc) * delta + v.weight.bias.c;
    if (v.connecting) {
      rw -= delta;
      ++connecting;
    }
    wr[static_cast<size_t>(i)] = rw;
  }
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (king_adjacent(pos[static_cast<size_t>(i)], pos[static_cast<size_t>(j)])) {
        adj[static_cast<size_t>(i)].push_back(j);
        adj[static_cast<size_t>(j)].push_back(i);
      }

  // int64 fast path when a common denominator keeps every sum small
  BigInt lcm = 1;
  for (const Rat &v : wr) {
    BigInt d = rat_den(v);
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
    if (lcm >= (BigInt(1) << 50)) break;
  }
  bool use_int = lcm < (BigInt(1) << 50);
  std::vector<long long> wi;
  if (use_int) {
    BigInt total = 0;
    wi.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      BigInt scaled = rat_num(wr[static_cast<size_t>(i)]) *
                      (lcm / rat_den(wr[static_cast<size_t>(i)]));
      total += boost::multiprecision::abs(scaled);
      if (total >= (BigInt(1) << 60)) {
        use_int = false;
        break;
      }
      wi[static_cast<size_t>(i)] = scaled.convert_to<long long>();
    }
  }

  SolveReport rep;
  rep.solver = "bnb";
  std::vector<int> chosen;
  if (use_int) {
    auto out = run_bnb<long long>(pos, adj, wi, deadline);
    chosen = std::move(out.set);
    rep.nodes = out.nodes;
    rep.timed_out = out.timed_out;
  } else {
    auto out = run_bnb<Rat>(pos, adj, wr, deadline);
    chosen = std::move(out.set);
    rep.nodes = out.nodes;
    rep.timed_out = out.timed_out;
  }
  for (int i : chosen) rep.set.insert(pos[static_cast<size_t>(i)]);
  rep.weight = circuit_weight(g, rep.set);
  rep.resolved = rep.weight.eval(delta);
  rep.wall_seconds = seconds_since(start);
  return rep;
}

bool verify(const LatticeGraph &g, const VertexSet &s, const DeltaWeight &claimed,
            std::string *reason) {
  try {
    if (!is_independent(g, s)) {
      if (reason) *reason = "set is not independent";
      return false;
    }
    DeltaWeight actual = circuit_weight(g, s);
    if (actual != claimed) {
      if (reason) *reason = "claimed weight " + claimed.str() + " != recomputed " + actual.str();
      return false;
    }
  } catch (const std::exception &e) {
    if (reason) *reason = e.what();
    return false;
  }
  if (reason) reason->clear();
  return true;
}

namespace {

struct MaximalEnum {
  int n = 0;
  std::vector<uint64_t> adj;
  uint64_t all = 0;
  const std::vector<Pos> *pos = nullptr;
  const std::function<void(const VertexSet &)> *visit = nullptr;
  size_t cap = 0, count = 0;

  void rec(int i, uint64_t chosen, uint64_t blocked) {
    if (i == n) {
      if ((chosen | blocked) != all) return; // some vertex still addable
      if (++count > cap) throw MwisError("maximal independent set cap exceeded");
      VertexSet s;
      for (int v = 0; v < n; ++v)
        if (chosen & (1ull << v)) s.insert((*pos)[static_cast<size_t>(v)]);
      (*visit)(s);
      return;
    }
    uint64_t bit = 1ull << i;
    if (blocked & bit) {
      rec(i + 1, chosen, blocked);
      return;
    }
    rec(i + 1, chosen | bit, blocked | adj[static_cast<size_t>(i)]);
    // excluding i needs a later neighbor to cover it
    uint64_t later = ~((bit << 1) - 1);
    if (adj[static_cast<size_t>(i)] & later & ~blocked) rec(i + 1, chosen, blocked);
  }
};

} // namespace

void for_each_maximal_is(const LatticeGraph &g,
                         const std::function<void(const VertexSet &)> &visit, size_t cap) {
  require_valid(g);
  if (g.vertices.size() > 64) throw MwisError("maximal-set enumeration handles at most 64 vertices");
  auto order = position_order(g);
  int n = static_cast<int>(order.size());
  MaximalEnum e;
  e.n = n;
  e.adj.assign(static_cast<size_t>(n), 0);
  std::vector<Pos> pos(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<size_t>(i)] = g.vertices[order[static_cast<size_t>(i)]].pos;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (king_adjacent(pos[static_cast<size_t>(i)], pos[static_cast<size_t>(j)])) {
        e.adj[static_cast<size_t>(i)] |= 1ull << j;
        e.adj[static_cast<size_t>(j)] |= 1ull << i;
      }
  e.all = n == 64 ? ~0ull : (1ull << n) - 1;
  e.pos = &pos;
  e.visit = &visit;
  e.cap = cap;
  if (n == 0) {
    visit(VertexSet{});
    return;
  }
  e.rec(0, 0, 0);
}

std::vector<VertexSet> enumerate_maximal_is(const LatticeGraph &g, size_t cap) {
  std::vector<VertexSet> out;
  for_each_maximal_is(g, [&](const VertexSet &s) { out.push_back(s); }, cap);
  return out;
}

} // namespace qapc
