#include <doctest.h>

#include "compiler.hpp"
#include "mwis.hpp"
#include "oracle.hpp"
#include "qap.hpp"

#include <cstdlib>

using namespace qapc;

namespace {

LatticeGraph line(const std::vector<long long> &weights) {
  LatticeGraph g;
  g.box_rows = 1;
  g.box_cols = static_cast<int>(weights.size()) / 4 + 1;
  for (size_t i = 0; i < weights.size(); ++i) {
    Vertex v;
    v.pos = {0, static_cast<int>(i)};
    v.weight = DeltaWeight(0, LinForm(Rat(weights[i])));
    g.add_vertex(v);
  }
  return g;
}

struct XorShift {
  uint64_t s;
  explicit XorShift(uint64_t seed) : s(seed * 2654435761u + 88172645463325252ull) {}
  uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
};

LatticeGraph scatter(uint64_t seed, int count, long long wlo, long long whi) {
  XorShift rng(seed);
  LatticeGraph g;
  g.box_rows = 2;
  g.box_cols = 2;
  while (static_cast<int>(g.vertices.size()) < count) {
    int r = static_cast<int>(rng.next() % 8);
    int c = static_cast<int>(rng.next() % 8);
    if (g.find({r, c})) continue;
    Vertex v;
    v.pos = {r, c};
    v.weight = DeltaWeight(0, LinForm(Rat(static_cast<long long>(
                                  rng.next() % static_cast<uint64_t>(whi - wlo + 1)) +
                              wlo)));
    g.add_vertex(v);
  }
  return g;
}

} // namespace

TEST_SUITE("mwis") {

TEST_CASE("exhaustive search on a short path") {
  LatticeGraph g = line({5, 3, 4});
  SolveReport rep = brute_mwis(g);
  CHECK(rep.set == VertexSet{{0, 0}, {0, 2}});
  CHECK(rep.weight == DeltaWeight(0, LinForm(9)));
  CHECK(rep.solver == "brute");
}

TEST_CASE("negative weights are left out") {
  LatticeGraph g = line({-1, 5, -2});
  SolveReport rep = brute_mwis(g);
  CHECK(rep.set == VertexSet{{0, 1}});
  CHECK(rep.weight == DeltaWeight(0, LinForm(5)));
}

TEST_CASE("ties break toward the smallest vertex sequence") {
  // both endpoints weigh the same; picking the earlier one wins ties
  LatticeGraph g = line({4, 1, 4});
  SolveReport rep = brute_mwis(g);
  CHECK(rep.set == VertexSet{{0, 0}, {0, 2}});

  LatticeGraph pair = line({4, 4});
  SolveReport two = brute_mwis(pair);
  CHECK(two.set == VertexSet{{0, 0}});
}

TEST_CASE("zero-weight vertices join the optimum when that is lexicographically smaller") {
  LatticeGraph g;
  g.box_rows = g.box_cols = 1;
  Vertex a;
  a.pos = {0, 0};
  a.weight = DeltaWeight(0, LinForm(0));
  Vertex b;
  b.pos = {0, 2};
  b.weight = DeltaWeight(0, LinForm(5));
  g.add_vertex(a);
  g.add_vertex(b);
  CHECK(brute_mwis(g).set == VertexSet{{0, 0}, {0, 2}});
  CHECK(bnb_mwis(g, Rat(1)).set == VertexSet{{0, 0}, {0, 2}});
}

TEST_CASE("connecting vertices pay delta when skipped") {
  LatticeGraph g;
  g.box_rows = g.box_cols = 1;
  Vertex conn;
  conn.pos = {0, 2};
  conn.weight = DeltaWeight(2);
  conn.connecting = true;
  conn.edge = 2;
  Vertex other;
  other.pos = {1, 2}; // adjacent to the connecting vertex
  other.weight = DeltaWeight(1, LinForm(1));
  g.add_vertex(conn);
  g.add_vertex(other);
  SolveReport rep = brute_mwis(g);
  // taking the plain vertex: delta + 1 + delta penalty = 2 delta + 1,
  // beating the bare connecting vertex at 2 delta for every delta
  CHECK(rep.set == VertexSet{{1, 2}});
  CHECK(rep.weight == DeltaWeight(2, LinForm(1)));
  CHECK(rep.weight == circuit_weight(g, rep.set));
}

TEST_CASE("incomparable symbolic weights refuse to order") {
  LatticeGraph g;
  g.box_rows = g.box_cols = 1;
  Vertex a;
  a.pos = {0, 0};
  a.weight = DeltaWeight(0, LinForm::sym("a"));
  Vertex b;
  b.pos = {0, 2};
  b.weight = DeltaWeight(0, LinForm::sym("b"));
  LatticeGraph g2 = g;
  g.add_vertex(a);
  g.add_vertex(b);
  // {a}, {b} and {a,b} cannot be ranked against each other
  CHECK_THROWS_AS(brute_mwis(g), MwisError);
}

TEST_CASE("the exhaustive solver refuses oversized graphs") {
  LatticeGraph g;
  g.box_rows = 1;
  g.box_cols = 9;
  for (int i = 0; i < 32; ++i) {
    Vertex v;
    v.pos = {0, i};
    v.weight = DeltaWeight(0, LinForm(1));
    g.add_vertex(v);
  }
  CHECK_THROWS_AS(brute_mwis(g), MwisError);
  CHECK(bnb_mwis(g, Rat(1)).resolved == Rat(16));
}

TEST_CASE("branch and bound agrees with exhaustive search everywhere") {
  for (uint64_t seed = 0; seed < 60; ++seed) {
    LatticeGraph g = scatter(seed, 14, 1, 8);
    SolveReport slow = brute_mwis(g);
    SolveReport fast = bnb_mwis(g, Rat(1));
    REQUIRE(!fast.timed_out);
    CHECK(slow.weight == fast.weight);
    CHECK(slow.set == fast.set); // identical tie-breaking
  }
}

TEST_CASE("tie-heavy graphs still produce the smallest optimum") {
  for (uint64_t seed = 100; seed < 130; ++seed) {
    LatticeGraph g = scatter(seed, 12, 1, 2);
    SolveReport slow = brute_mwis(g);
    SolveReport fast = bnb_mwis(g, Rat(1));
    CHECK(slow.set == fast.set);
  }
}

TEST_CASE("rational weights use the exact path") {
  LatticeGraph g;
  g.box_rows = g.box_cols = 1;
  for (int i = 0; i < 3; ++i) {
    Vertex v;
    v.pos = {0, i};
    v.weight = DeltaWeight(0, LinForm(Rat(1, 3 + i)));
    g.add_vertex(v);
  }
  SolveReport rep = bnb_mwis(g, Rat(1));
  CHECK(rep.set == VertexSet{{0, 0}, {0, 2}});
  CHECK(*rep.resolved == Rat(1, 3) + Rat(1, 5));
}

TEST_CASE("verification rejects tampered reports") {
  LatticeGraph g = line({5, 3, 4});
  SolveReport rep = brute_mwis(g);
  std::string why;
  CHECK(verify(g, rep.set, rep.weight, &why));
  CHECK(!verify(g, {{0, 0}, {0, 1}}, rep.weight, &why)); // not independent
  CHECK(!why.empty());
  CHECK(!verify(g, rep.set, DeltaWeight(0, LinForm(10)), &why)); // wrong value
}

namespace {

// a search space deep enough that the periodic deadline check actually fires
const LatticeGraph &deep_graph(Rat *delta) {
  static ReducedCircuit rc = [] {
    QapInstance inst;
    inst.n = 3;
    XorShift rng(5);
    inst.F.assign(3, std::vector<Rat>(3));
    inst.D.assign(3, std::vector<Rat>(3));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        inst.F[i][j] = Rat(static_cast<long long>(rng.next() % 9));
        inst.D[i][j] = Rat(static_cast<long long>(rng.next() % 9));
      }
    return reduced_circuit(inst);
  }();
  static CompiledCircuit cc = stitch(rc.circuit, standard_library(), true);
  if (delta) *delta = choose_delta(rc.delta_bound);
  return cc.graph;
}

} // namespace

TEST_CASE("a vanishing budget reports a timeout instead of an answer") {
  Rat delta;
  const LatticeGraph &g = deep_graph(&delta);
  SolveReport rep = bnb_mwis(g, delta, 1e-12);
  CHECK(rep.timed_out);
}

TEST_CASE("the timeout environment variable feeds the default budget") {
  setenv("QAPC_TIMEOUT_SECS", "0.000000000001", 1);
  Rat delta;
  const LatticeGraph &g = deep_graph(&delta);
  SolveReport rep = bnb_mwis(g, delta, -1.0);
  unsetenv("QAPC_TIMEOUT_SECS");
  CHECK(rep.timed_out);
}

TEST_CASE("maximal set enumeration visits each maximal set once") {
  LatticeGraph tri;
  tri.box_rows = tri.box_cols = 1;
  for (Pos p : {Pos{0, 0}, Pos{0, 1}, Pos{1, 0}}) {
    Vertex v;
    v.pos = p;
    v.weight = DeltaWeight(0, LinForm(1));
    tri.add_vertex(v);
  }
  auto sets = enumerate_maximal_is(tri);
  CHECK(sets.size() == 3); // a triangle: every single vertex is maximal

  LatticeGraph path = line({1, 1, 1});
  auto psets = enumerate_maximal_is(path);
  REQUIRE(psets.size() == 2);
  std::set<VertexSet> expect{{{0, 0}, {0, 2}}, {{0, 1}}};
  CHECK(std::set<VertexSet>(psets.begin(), psets.end()) == expect);

  LatticeGraph empty;
  empty.box_rows = empty.box_cols = 1;
  auto esets = enumerate_maximal_is(empty);
  REQUIRE(esets.size() == 1);
  CHECK(esets[0].empty());
}

TEST_CASE("maximal enumeration honors its cap") {
  LatticeGraph g;
  g.box_rows = 1;
  g.box_cols = 8;
  for (int i = 0; i < 15; ++i) {
    Vertex v;
    v.pos = {0, 2 * i}; // isolated: 2^15 maximal subsets is just the one full set
    v.weight = DeltaWeight(0, LinForm(1));
    g.add_vertex(v);
  }
  // every vertex is isolated so the single maximal set is all of them
  auto sets = enumerate_maximal_is(g);
  CHECK(sets.size() == 1);
  CHECK(sets[0].size() == 15);
  CHECK_THROWS_AS(for_each_maximal_is(
                      g, [](const VertexSet &) {}, 0),
                  MwisError);
}

} // TEST_SUITE

TEST_SUITE("oracle") {

TEST_CASE("tiny instances by hand") {
  QapInstance one;
  one.n = 1;
  one.F = {{Rat(3)}};
  one.D = {{Rat(4)}};
  OracleResult r1 = brute_qap(one);
  CHECK(r1.cost == Rat(12));
  CHECK(r1.examined == 1);
  REQUIRE(r1.optima.size() == 1);
  CHECK(r1.optima[0].perm == std::vector<int>{0});

  QapInstance two;
  two.n = 2;
  two.F = {{Rat(0), Rat(2)}, {Rat(1), Rat(0)}};
  two.D = {{Rat(0), Rat(3)}, {Rat(5), Rat(0)}};
  // identity: 2*3 + 1*5 = 11; swap: 2*5 + 1*3 = 13
  OracleResult r2 = brute_qap(two);
  CHECK(r2.cost == Rat(11));
  CHECK(r2.examined == 2);
  REQUIRE(r2.optima.size() == 1);
  CHECK(r2.optima[0].perm == std::vector<int>{0, 1});
}

TEST_CASE("indifferent instances keep every placement") {
  QapInstance inst;
  inst.n = 3;
  inst.F.assign(3, std::vector<Rat>(3, Rat(1)));
  inst.D.assign(3, std::vector<Rat>(3, Rat(1)));
  OracleResult r = brute_qap(inst);
  CHECK(r.examined == 6);
  CHECK(r.optima.size() == 6);
  CHECK(r.cost == Rat(9));
}

TEST_CASE("optimal cost is invariant under relabeling the facilities") {
  XorShift rng(99);
  for (int trial = 0; trial < 5; ++trial) {
    int n = 3 + static_cast<int>(rng.next() % 3);
    QapInstance inst;
    inst.n = n;
    inst.F.assign(n, std::vector<Rat>(n));
    inst.D.assign(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        inst.F[i][j] = Rat(static_cast<long long>(rng.next() % 9));
        inst.D[i][j] = Rat(static_cast<long long>(rng.next() % 9));
      }
    std::vector<int> sigma(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) sigma[static_cast<size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i)
      std::swap(sigma[static_cast<size_t>(i)],
                sigma[static_cast<size_t>(rng.next() % static_cast<uint64_t>(i + 1))]);
    QapInstance relabeled = inst;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        relabeled.F[i][j] =
            inst.F[static_cast<size_t>(sigma[static_cast<size_t>(i)])]
                  [static_cast<size_t>(sigma[static_cast<size_t>(j)])];
    CHECK(brute_qap(relabeled).cost == brute_qap(inst).cost);
  }
}

TEST_CASE("the enumeration cap is enforced") {
  QapInstance big;
  big.n = 11;
  big.F.assign(11, std::vector<Rat>(11, Rat(1)));
  big.D.assign(11, std::vector<Rat>(11, Rat(1)));
  CHECK_THROWS_AS(brute_qap(big), OracleError);
}

} // TEST_SUITE
