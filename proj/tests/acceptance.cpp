// Acceptance gate: every numbered criterion below must print PASS for the
// build to be considered correct. Each criterion re-derives its expected
// values from first principles (brute-force oracles, exhaustive enumeration,
// or symbolic arithmetic) rather than trusting the code under test. Time
// budgets and tolerances are pinned as constants next to the criterion.

#include "compiler.hpp"
#include "io.hpp"
#include "mwis.hpp"
#include "oracle.hpp"
#include "qap.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <sstream>

using namespace qapc;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct Gate {
  int failures = 0;
  std::vector<std::string> notes;

  void run(int id, const std::string &title, double budget_seconds,
           const std::function<void(std::string &)> &body) {
    std::string detail;
    bool pass = true;
    auto t0 = Clock::now();
    try {
      body(detail);
    } catch (const std::exception &e) {
      pass = false;
      detail = detail.empty() ? e.what() : detail + "; " + e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (pass && budget_seconds > 0 && secs > budget_seconds) {
      pass = false;
      detail = "exceeded the " + std::to_string(budget_seconds) + "s budget";
    }
    if (!pass) ++failures;
    std::printf("criterion %2d [%s] %s%s%s (%.2fs)\n", id, pass ? "PASS" : "FAIL",
                title.c_str(), detail.empty() ? "" : ": ", detail.c_str(), secs);
    std::fflush(stdout);
  }
};

void fail(const std::string &msg) { throw std::runtime_error(msg); }

std::string rstr(const Rat &r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

// ---- criterion 1 -----------------------------------------------------------
// Every library fragment and every decorated variant the small pipelines
// instantiate must certify, and stay within 16 vertices.

constexpr double kBudgetTiles = 60.0;

void criterion_tiles(std::string &detail) {
  FragmentLibrary lib = build_standard_library(); // certifies on construction
  for (const auto &[key, frag] : lib.fragments) {
    if (frag.graph.vertices.size() > 16)
      fail("fragment " + key + " has more than 16 vertices");
    if (!lib.certificates.count(key)) fail("fragment " + key + " lacks a certificate");
  }

  int decorated = 0, plain = 0;
  std::set<std::string> seen_plain;
  for (int n = 2; n <= 4; ++n) {
    QapInstance inst = random_instance(n, 1000 + static_cast<uint64_t>(n), 0, 9);
    std::vector<Circuit> circuits{naive_circuit(inst), reduced_circuit(inst).circuit};
    for (const Circuit &c : circuits) {
      for (const auto &[pos, tile] : c.tiles) {
        (void)pos;
        std::string key = fragment_key(tile);
        const TileFragment &base = lib.fragments.at(key);
        bool biased = false;
        for (const Decoration &d : tile.decorations)
          if (d.kind == DecorationKind::Bias) biased = true;
        if (biased) {
          TileFragment injected = inject_biases(tile, base);
          if (injected.graph.vertices.size() > 16)
            fail("decorated fragment " + key + " has more than 16 vertices");
          certify_fragment(tile, injected, CertMode::Auto); // throws on failure
          ++decorated;
        } else if (seen_plain.insert(key).second) {
          certify_fragment(tile, base, CertMode::Auto);
          ++plain;
        }
      }
    }
  }
  detail = std::to_string(lib.fragments.size()) + " library fragments, " +
           std::to_string(plain) + " distinct plain keys and " + std::to_string(decorated) +
           " biased variants re-certified";
}

// ---- criterion 2 -----------------------------------------------------------
// The worked three-variable fixture enumerates exactly four assignments whose
// symbolic weights are w1+w3, w2+w3, w1+w2 and w1+w2+w3+w4.

void criterion_demo_circuit(std::string &detail) {
  Circuit c = or_triple_demo_circuit();
  std::string shape = circuit_check(c);
  if (!shape.empty()) fail("fixture circuit malformed: " + shape);
  auto valid = circuit_valid_assignments(c);
  if (valid.size() != 4)
    fail("expected 4 valid assignments, got " + std::to_string(valid.size()));
  std::multiset<std::string> got;
  for (const auto &[a, w] : valid) {
    (void)a;
    got.insert(w.str());
  }
  LinForm w1 = LinForm::sym("w1"), w2 = LinForm::sym("w2");
  LinForm w3 = LinForm::sym("w3"), w4 = LinForm::sym("w4");
  std::multiset<std::string> want{(w1 + w3).str(), (w2 + w3).str(), (w1 + w2).str(),
                                  (w1 + w2 + w3 + w4).str()};
  if (got != want) {
    std::string s;
    for (const auto &w : got) s += w + "; ";
    fail("weight multiset mismatch, got " + s);
  }
  detail = "4 assignments, weights match exactly";
}

// ---- criterion 3 -----------------------------------------------------------
// Plain-wire arithmetic: the wire fragment certifies with k1 = 5, two stitched
// wire tiles give k = 5 + 5 - 1 = 9, the best valid circuit weight is exactly
// 9 delta, and every invalid-decoding independent set stays at or below
// 8 delta + w~ for every delta, checked symbolically.

void criterion_wire_arithmetic(std::string &detail) {
  const FragmentLibrary &lib = standard_library();
  Tile wire = standard_tile(TileKind::WireStraight, 0);
  const CompilationCertificate &cert = lib.certificates.at(fragment_key(wire));
  if (cert.k != 5) fail("wire fragment k is " + std::to_string(cert.k) + ", expected 5");

  Circuit c;
  c.rows = 1;
  c.cols = 2;
  c.place(0, 0, standard_tile(TileKind::WireStraight, 0));
  c.place(0, 1, standard_tile(TileKind::WireStraight, 0));
  CompiledCircuit cc = stitch(c, lib);
  if (cc.matched_pairs != 1) fail("expected one matched facing pair");
  if (cc.k != 9) fail("stitched k is " + std::to_string(cc.k) + ", expected 9");
  if (!cc.w_tilde.is_zero()) fail("w~ should be zero for plain wires");
  if (!cc.measured_w_tilde || !cc.measured_w_tilde->is_zero())
    fail("measured w~ should be zero");

  // exhaustive scan of the 2^8 vertex subsets
  const auto &vs = cc.graph.vertices;
  size_t nv = vs.size();
  if (nv != 8) fail("expected 8 vertices, got " + std::to_string(nv));
  bool valid_max_hit = false;
  DeltaWeight invalid_cap(cc.k - 1); // (k-1) delta, w~ = 0
  DeltaWeight valid_target(cc.k);
  for (unsigned mask = 0; mask < (1u << nv); ++mask) {
    VertexSet s;
    for (size_t i = 0; i < nv; ++i)
      if (mask & (1u << i)) s.insert(vs[i].pos);
    if (!is_independent(cc.graph, s)) continue;
    DeltaWeight w = circuit_weight(cc.graph, s);
    CircuitAssignment a = decode_assignment(cc.graph, s);
    if (assignment_consistent(c, a)) {
      if (!leq_for_all_delta(w, valid_target))
        fail("a consistent set exceeds k delta");
      if (w == valid_target) valid_max_hit = true;
    } else {
      if (!leq_for_all_delta(w, invalid_cap))
        fail("an invalid-decoding set exceeds (k-1) delta + w~");
    }
  }
  if (!valid_max_hit) fail("no valid-decoding set attains k delta");
  detail = "k1=5, k=9, valid max 9d attained, invalid max <= 8d symbolically";
}

// ---- criterion 4 -----------------------------------------------------------
// Randomized split-weight identity: 1000 (circuit, split, independent set)
// triples over small stitched circuits check the boundary bookkeeping exactly.

constexpr double kBudgetLemma = 30.0;
constexpr int kLemmaTrials = 1000;

void criterion_split_lemma(std::string &detail) {
  SplitMix64 rng(424242);
  const FragmentLibrary &lib = standard_library();

  auto make_circuit = [&](uint64_t pick) {
    Circuit c;
    switch (pick % 5) {
    case 0: // two plain wires
      c.rows = 1;
      c.cols = 2;
      c.place(0, 0, standard_tile(TileKind::WireStraight, 0));
      c.place(0, 1, standard_tile(TileKind::WireStraight, 0));
      break;
    case 1: { // two biased wires
      c.rows = 1;
      c.cols = 2;
      for (int j = 0; j < 2; ++j) {
        Tile t = standard_tile(TileKind::WireStraight, 0);
        t = decorate(t, value_bias(1, 1, LinForm(Rat(static_cast<long long>(rng.below(9)) + 1))));
        c.place(0, j, t);
      }
      break;
    }
    case 2:
      c = build_or_chain(2);
      break;
    case 3:
      c = build_and_chain(2);
      break;
    default: { // closed wire loop: straight wire flanked by terminators
      c.rows = 1;
      c.cols = 3;
      c.place(0, 0, standard_tile(TileKind::Terminator, 0));
      c.place(0, 1, standard_tile(TileKind::WireStraight, 0));
      c.place(0, 2, standard_tile(TileKind::Terminator, 2));
      break;
    }
    }
    return c;
  };

  for (int trial = 0; trial < kLemmaTrials; ++trial) {
    Circuit c = make_circuit(rng.next());
    if (c.tiles.size() > 6) fail("template exceeds 6 tiles");
    CompiledCircuit cc = stitch(c, lib);
    const LatticeGraph &g = cc.graph;

    // random proper nonempty box split
    std::set<Pos> occupied = g.boxes();
    std::vector<Pos> boxes(occupied.begin(), occupied.end());
    std::set<Pos> part1;
    do {
      part1.clear();
      for (const Pos &b : boxes)
        if (rng.below(2)) part1.insert(b);
    } while (part1.empty() || part1.size() == boxes.size());

    // random greedy independent set, thinned at random
    std::vector<size_t> order(g.vertices.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (size_t i = order.size(); i > 1; --i)
      std::swap(order[i - 1], order[rng.below(i)]);
    VertexSet s;
    for (size_t i : order) {
      const Pos &p = g.vertices[i].pos;
      bool ok = true;
      for (const Pos &q : s)
        if (king_adjacent(p, q)) {
          ok = false;
          break;
        }
      if (ok && rng.below(4) != 0) s.insert(p);
    }

    if (!check_weight_lemma(g, part1, s))
      fail("split identity failed on trial " + std::to_string(trial));
  }
  detail = std::to_string(kLemmaTrials) + " random triples verified exactly";
}

// ---- criterion 5 -----------------------------------------------------------
// The eliminated formulation encodes the full one: the affine variable map
// carries the reduced valid set onto the canonical one with a constant
// weight offset, verified by full enumeration of both problems.

constexpr double kBudgetEncoding = 120.0;
constexpr int kEncodingSeedsPerN = 50;

void criterion_encoding(std::string &detail) {
  int checked = 0;
  for (int n = 2; n <= 5; ++n) {
    for (int s = 0; s < kEncodingSeedsPerN; ++s) {
      QapInstance inst =
          random_instance(n, static_cast<uint64_t>(n) * 10000 + static_cast<uint64_t>(s), 0, 9);
      ReducedFormulation rf = reduced_formulation(inst);
      BinaryProblem cf = canonical_formulation(inst);
      EncodingCheck ec = check_encoding(rf.problem, cf, rf.to_canonical, 26);
      if (!ec.ok)
        fail("n=" + std::to_string(n) + " seed " + std::to_string(s) + ": " + ec.reason);
      if (!ec.offset.terms.empty())
        fail("n=" + std::to_string(n) + " seed " + std::to_string(s) +
             ": offset is not a constant");
      ++checked;
    }
  }
  detail = std::to_string(checked) + " instances, constant offset each time";
}

// ---- criterion 6 -----------------------------------------------------------
// The substitution coefficients satisfy weight = c_I - cost on every valid
// assignment up to n = 4. The closed-form candidates are compared against the
// substitution and the outcome recorded in an artifact; those formulas are
// documentation of an external source and never gate the build.

void criterion_coefficients(Gate &gate, std::string &detail) {
  std::ostringstream artifact;
  artifact << "{\n  \"comparisons\": [\n";
  bool first = true;
  int printed_agree = 0, lin_agree = 0, alt_agree = 0, total = 0;

  for (int n = 2; n <= 4; ++n) {
    for (uint64_t s = 0; s < 3; ++s) {
      QapInstance inst = random_instance(n, 600 + static_cast<uint64_t>(n) * 10 + s, 0, 9);
      ReducedFormulation rf = reduced_formulation(inst);

      // defining identity on the full valid set: this part is asserted
      auto valid = enumerate_valid(rf.problem);
      for (const auto &[x, w] : valid) {
        if (!w.terms.empty()) fail("weight not constant on an integer instance");
        Placement p = decode_placement(x, n);
        if (w.c != rf.coeffs.c_I - cost(inst, p))
          fail("identity failed at n=" + std::to_string(n) + " seed " + std::to_string(s));
      }

      // closed-form comparison, recorded but never asserted
      ClosedFormCoefficients cf = closed_form_coefficients(inst);
      bool lin_match = cf.linear == rf.coeffs.linear;
      bool printed_match = cf.pair_printed == rf.coeffs.pair;
      bool alt_match = cf.pair_alt == rf.coeffs.pair;
      ++total;
      if (lin_match) ++lin_agree;
      if (printed_match) ++printed_agree;
      if (alt_match) ++alt_agree;
      if (!first) artifact << ",\n";
      first = false;
      artifact << "    {\"n\": " << n << ", \"seed\": " << (600 + n * 10 + static_cast<int>(s))
               << ", \"linear_matches_substitution\": " << (lin_match ? "true" : "false")
               << ", \"printed_pair_matches\": " << (printed_match ? "true" : "false")
               << ", \"patched_pair_matches\": " << (alt_match ? "true" : "false") << "}";
    }
  }
  artifact << "\n  ],\n  \"agreements\": {\"linear\": " << lin_agree
           << ", \"printed_pair\": " << printed_agree << ", \"patched_pair\": " << alt_agree
           << ", \"total\": " << total << "}\n}\n";
  fs::path out = fs::absolute("closed_form_comparison.json");
  write_file(out.string(), artifact.str());
  gate.notes.push_back("criterion 6 artifact: " + out.string() + " (linear " +
                       std::to_string(lin_agree) + "/" + std::to_string(total) +
                       ", printed pair " + std::to_string(printed_agree) + "/" +
                       std::to_string(total) + ", patched pair " + std::to_string(alt_agree) +
                       "/" + std::to_string(total) + " agreements; informational)");
  detail = "identity exact on all valid assignments for n<=4; comparison artifact written";
}

// ---- criteria 7 and 8 ------------------------------------------------------
// End-to-end: compile the eliminated circuit, pick delta automatically, solve
// the graph exactly, decode, and match the brute-force optimum.

constexpr double kBudgetEndToEndN2 = 60.0;
constexpr double kBudgetPerSolveN3 = 600.0;

// Returns the decoded optimal cost; on solver timeout falls back to
// circuit-level enumeration and reports it through *graph_solved.
Rat pipeline_cost(const QapInstance &inst, double timeout_secs, bool *graph_solved) {
  ReducedCircuit rc = reduced_circuit(inst);
  CompiledCircuit cc = stitch(rc.circuit, standard_library(), true);
  Rat delta = choose_delta(cc, rc.delta_bound);
  SolveReport rep = bnb_mwis(cc.graph, delta, timeout_secs);
  if (!rep.timed_out) {
    if (graph_solved) *graph_solved = true;
    CircuitAssignment a = decode_assignment(cc.graph, rep.set);
    if (!assignment_consistent(rc.circuit, a))
      fail("solver output does not decode to a consistent assignment");
    Placement p = decode_placement(reduced_bits_from_assignment(rc, a), inst.n);
    return cost(inst, p);
  }
  if (graph_solved) *graph_solved = false;
  // circuit-level fallback: enumerate every reduced assignment directly
  auto valid = circuit_valid_assignments(rc.circuit, 512);
  const std::pair<CircuitAssignment, LinForm> *best = nullptr;
  for (const auto &entry : valid) {
    if (!entry.second.terms.empty()) fail("non-constant assignment weight");
    if (!best || entry.second.c > best->second.c) best = &entry;
  }
  if (!best) fail("no valid circuit assignment");
  Placement p = decode_placement(reduced_bits_from_assignment(rc, best->first), inst.n);
  return cost(inst, p);
}

void criterion_end_to_end_n2(std::string &detail) {
  for (uint64_t s = 0; s < 20; ++s) {
    QapInstance inst = random_instance(2, 7000 + s, 0, 9);
    bool graph_solved = false;
    Rat got = pipeline_cost(inst, kBudgetPerSolveN3, &graph_solved);
    if (!graph_solved) fail("n=2 solve timed out");
    if (got != brute_qap(inst).cost)
      fail("seed " + std::to_string(s) + ": cost " + rstr(got) + " vs oracle");
  }
  detail = "20 instances decoded to the brute-force optimum";
}

void criterion_end_to_end_n3(Gate &gate, std::string &detail) {
  int skipped = 0;
  for (uint64_t s = 0; s < 5; ++s) {
    QapInstance inst = random_instance(3, 8000 + s, 0, 9);
    bool graph_solved = false;
    Rat got = pipeline_cost(inst, kBudgetPerSolveN3, &graph_solved);
    if (!graph_solved) ++skipped;
    if (got != brute_qap(inst).cost)
      fail("seed " + std::to_string(s) + ": cost " + rstr(got) + " vs oracle");
  }
  if (skipped)
    gate.notes.push_back("criterion 8: graph-level solve skipped (timeout) on " +
                         std::to_string(skipped) +
                         "/5 instances; circuit-level equivalence still exact");
  detail = "5 instances matched the oracle" +
           std::string(skipped ? " (with circuit-level fallback)" : ", all graph-level");
}

// ---- criterion 9 -----------------------------------------------------------
// n = 4 at circuit level: enumerate the 2^9 assignments of the nine reduced
// variables, and the heaviest valid one must decode to an oracle optimum.

constexpr double kBudgetCircuitN4 = 120.0;

void criterion_circuit_n4(std::string &detail) {
  for (uint64_t s = 0; s < 10; ++s) {
    QapInstance inst = random_instance(4, 9000 + s, 0, 9);
    ReducedCircuit rc = reduced_circuit(inst);
    auto valid = circuit_valid_assignments(rc.circuit, 512);
    // cross-check the count against the formulation's own valid set
    size_t expect = enumerate_valid(rc.formulation.problem).size();
    if (valid.size() != expect)
      fail("valid assignment count " + std::to_string(valid.size()) + " vs problem " +
           std::to_string(expect));
    Rat oracle_cost = brute_qap(inst).cost;
    const LinForm *best = nullptr;
    for (const auto &[a, w] : valid) {
      (void)a;
      if (!w.terms.empty()) fail("non-constant weight on an integer instance");
      if (!best || w.c > best->c) best = &w;
    }
    for (const auto &[a, w] : valid) {
      if (w.c != best->c) continue;
      Placement p = decode_placement(reduced_bits_from_assignment(rc, a), 4);
      if (cost(inst, p) != oracle_cost)
        fail("seed " + std::to_string(s) + ": a max-weight assignment decodes suboptimally");
    }
  }
  detail = "10 instances, every max-weight assignment decoded to an oracle optimum";
}

// ---- criterion 10 ----------------------------------------------------------
// Contrast experiment on the compiled n = 2 pipeline: with delta strictly
// above the per-wire bound max{|w_xi| + sum |w_xi,yj|}, every independent set
// that fails to decode is strictly lighter than the optimum; at half the
// bound the outcome is documented, not asserted.

void criterion_contrast(Gate &gate, std::string &detail) {
  // asymmetric on purpose: the two placements cost 13 and 11, so the optimum
  // is strict and the coefficient bound is nonzero
  QapInstance inst;
  inst.n = 2;
  inst.F = {{Rat(0), Rat(1)}, {Rat(2), Rat(0)}};
  inst.D = {{Rat(0), Rat(3)}, {Rat(5), Rat(0)}};

  ReducedCircuit rc = reduced_circuit(inst);
  Rat bound = rc.delta_bound; // max over wires of |w_xi| + sum of |w_xi,yj|
  if (bound != theorem2_bound(rc.formulation.coeffs)) fail("delta bound mismatch");
  if (bound == 0) fail("degenerate instance: the contrast experiment needs a nonzero bound");
  Rat delta_good = choose_delta(bound);
  Rat delta_half = bound / 2;

  CompiledCircuit cc = stitch(rc.circuit, standard_library(), true);

  for (const Vertex &v : cc.graph.vertices)
    if (v.weight.eval(delta_good) <= 0) fail("nonpositive vertex weight at the chosen delta");

  // with all weights positive, restricting to maximal sets is exhaustive:
  // any independent set extends to a maximal one of no smaller weight
  auto maximal = enumerate_maximal_is(cc.graph);

  auto decode_cost = [&](const VertexSet &s, bool *ok) -> Rat {
    CircuitAssignment a = decode_assignment(cc.graph, s);
    if (!assignment_consistent(rc.circuit, a)) {
      *ok = false;
      return Rat(0);
    }
    try {
      Placement pl = decode_placement(reduced_bits_from_assignment(rc, a), inst.n);
      *ok = true;
      return cost(inst, pl);
    } catch (const QapError &) {
      *ok = false;
      return Rat(0);
    }
  };

  Rat ref_cost = brute_qap(inst).cost;
  Rat best_good(0), best_good_invalid(0);
  bool have_good = false, have_good_invalid = false;
  bool best_good_is_valid = false;
  Rat best_good_cost(0);
  Rat best_half_valid(0), best_half_invalid(0);
  bool have_half_valid = false, have_half_invalid = false;

  for (const VertexSet &s : maximal) {
    DeltaWeight w = circuit_weight(cc.graph, s);
    Rat wg = w.eval(delta_good);
    Rat wh = w.eval(delta_half);
    bool ok = false;
    Rat decoded = decode_cost(s, &ok);
    if (!have_good || wg > best_good) {
      best_good = wg;
      have_good = true;
      best_good_is_valid = ok;
      best_good_cost = decoded;
    }
    if (ok) {
      if (!have_half_valid || wh > best_half_valid) {
        best_half_valid = wh;
        have_half_valid = true;
      }
    } else {
      if (!have_good_invalid || wg > best_good_invalid) {
        best_good_invalid = wg;
        have_good_invalid = true;
      }
      if (!have_half_invalid || wh > best_half_invalid) {
        best_half_invalid = wh;
        have_half_invalid = true;
      }
    }
  }

  if (!best_good_is_valid) fail("the optimum does not decode to a placement");
  if (best_good_cost != ref_cost) fail("the optimum decodes to a suboptimal placement");
  if (have_good_invalid && best_good_invalid >= best_good)
    fail("an invalid-decoding set matches the optimum at the safe delta");

  std::string half_note;
  if (have_half_valid && have_half_invalid) {
    bool survives = best_half_invalid < best_half_valid;
    half_note = std::string("at delta = bound/2 the contrast ") +
                (survives ? "still holds" : "breaks") + " (valid max " + rstr(best_half_valid) +
                ", invalid max " + rstr(best_half_invalid) + ")";
  } else {
    half_note = "at delta = bound/2 one of the classes is empty";
  }
  gate.notes.push_back("criterion 10: delta bound " + rstr(bound) + ", safe delta " +
                       rstr(delta_good) + "; " + half_note + " (documented, not asserted)");
  detail = std::to_string(maximal.size()) +
           " maximal sets enumerated; strict separation at the safe delta";
}

// ---- criterion 11 ----------------------------------------------------------
// Exhaustive and branch-and-bound solvers agree on 500 random lattice graphs.

constexpr double kBudgetSolvers = 120.0;
constexpr int kSolverTrials = 500;

void criterion_solver_agreement(std::string &detail) {
  SplitMix64 rng(31337);
  int set_mismatches = 0;
  for (int trial = 0; trial < kSolverTrials; ++trial) {
    int count = 5 + static_cast<int>(rng.below(21)); // 5..25 vertices
    LatticeGraph g;
    g.box_rows = 3;
    g.box_cols = 3;
    while (static_cast<int>(g.vertices.size()) < count) {
      Pos p{static_cast<int>(rng.below(12)), static_cast<int>(rng.below(12))};
      if (g.find(p)) continue;
      Vertex v;
      v.pos = p;
      v.weight = DeltaWeight(0, LinForm(Rat(static_cast<long long>(rng.below(10)))));
      g.add_vertex(v);
    }
    SolveReport slow = brute_mwis(g);
    SolveReport fast = bnb_mwis(g, Rat(1));
    if (fast.timed_out) fail("branch and bound timed out on trial " + std::to_string(trial));
    if (slow.weight.bias.c != *fast.resolved)
      fail("trial " + std::to_string(trial) + ": values " + slow.weight.bias.c.str() + " vs " +
           fast.resolved->str());
    if (slow.set != fast.set) ++set_mismatches;
  }
  if (set_mismatches)
    fail(std::to_string(set_mismatches) + " tie-break mismatches between the solvers");
  detail = std::to_string(kSolverTrials) + " graphs, optimal values and sets identical";
}

// ---- criterion 12 ----------------------------------------------------------
// Byte-level determinism of the seeded check command, reports and SVGs alike.

void criterion_determinism(std::string &detail) {
  const char *cli = std::getenv("QAPC_CLI");
  if (!cli || !*cli) fail("QAPC_CLI is not set; run through ctest");

  fs::path base = fs::temp_directory_path() / "qapc_acceptance_det";
  std::error_code ec;
  fs::remove_all(base, ec);
  fs::create_directories(base / "run1");
  fs::create_directories(base / "run2");

  for (int run = 1; run <= 2; ++run) {
    fs::path dir = base / ("run" + std::to_string(run));
    std::string cmd = std::string("\"") + cli + "\" check --seed 0 -o \"" + dir.string() +
                      "\" > \"" + (dir / "stdout.txt").string() + "\" 2>&1";
    int rc = std::system(cmd.c_str());
    if (rc != 0) fail("check run " + std::to_string(run) + " exited with " + std::to_string(rc));
  }

  std::vector<std::string> names;
  for (const auto &entry : fs::directory_iterator(base / "run1"))
    names.push_back(entry.path().filename().string());
  std::sort(names.begin(), names.end());
  if (names.empty()) fail("first run produced no artifacts");
  int compared = 0;
  for (const std::string &name : names) {
    fs::path p1 = base / "run1" / name, p2 = base / "run2" / name;
    if (!fs::exists(p2)) fail("second run is missing " + name);
    if (read_file(p1.string()) != read_file(p2.string()))
      fail("artifact " + name + " differs between runs");
    ++compared;
  }
  detail = std::to_string(compared) + " artifacts byte-identical across runs";
}

} // namespace

int main() {
  Gate gate;

  gate.run(1, "fragment certification, library and decorated variants", kBudgetTiles,
           criterion_tiles);
  gate.run(2, "three-variable fixture assignments and weights", 0, criterion_demo_circuit);
  gate.run(3, "plain-wire stitching arithmetic", 0, criterion_wire_arithmetic);
  gate.run(4, "randomized split-weight identity", kBudgetLemma, criterion_split_lemma);
  gate.run(5, "eliminated-formulation encoding checks", kBudgetEncoding, criterion_encoding);
  gate.run(6, "coefficient identity and closed-form artifact", 0,
           [&](std::string &d) { criterion_coefficients(gate, d); });
  gate.run(7, "end-to-end exact solves, n=2", kBudgetEndToEndN2, criterion_end_to_end_n2);
  gate.run(8, "end-to-end exact solves, n=3", 5 * kBudgetPerSolveN3,
           [&](std::string &d) { criterion_end_to_end_n3(gate, d); });
  gate.run(9, "circuit-level exactness, n=4", kBudgetCircuitN4, criterion_circuit_n4);
  gate.run(10, "invalid-decoding contrast at the safe delta", 0,
           [&](std::string &d) { criterion_contrast(gate, d); });
  gate.run(11, "solver cross-validation", kBudgetSolvers, criterion_solver_agreement);
  gate.run(12, "seeded check determinism", 0, criterion_determinism);

  for (const std::string &n : gate.notes) std::printf("note: %s\n", n.c_str());
  std::printf("acceptance: %d/12 criteria passed\n", 12 - gate.failures);
  return gate.failures == 0 ? 0 : 1;
}
