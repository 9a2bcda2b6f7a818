#include "qap.hpp"

#include <algorithm>

namespace qapc {

void QapInstance::validate() const {
  if (n < 1) throw QapError("instance size must be at least 1");
  auto check = [&](const std::vector<std::vector<Rat>> &mat, const char *name) {
    if (static_cast<int>(mat.size()) != n)
      throw QapError(std::string(name) + " has wrong row count");
    for (const auto &row : mat)
      if (static_cast<int>(row.size()) != n)
        throw QapError(std::string(name) + " has a wrong-length row");
  };
  check(F, "flow matrix");
  check(D, "distance matrix");
}

bool Placement::is_permutation() const {
  std::vector<bool> seen(perm.size(), false);
  for (int v : perm) {
    if (v < 0 || v >= static_cast<int>(perm.size()) || seen[static_cast<size_t>(v)]) return false;
    seen[static_cast<size_t>(v)] = true;
  }
  return true;
}

Rat cost(const QapInstance &inst, const Placement &p) {
  inst.validate();
  if (static_cast<int>(p.perm.size()) != inst.n || !p.is_permutation())
    throw QapError("placement is not a permutation of the instance size");
  Rat c = 0;
  for (int x = 0; x < inst.n; ++x)
    for (int y = 0; y < inst.n; ++y)
      c += inst.F[static_cast<size_t>(x)][static_cast<size_t>(y)] *
           inst.D[static_cast<size_t>(p.perm[static_cast<size_t>(x)])]
                 [static_cast<size_t>(p.perm[static_cast<size_t>(y)])];
  return c;
}

static std::string entry_name(int x, int i) {
  return "p" + std::to_string(x) + "_" + std::to_string(i);
}

BinaryProblem canonical_formulation(const QapInstance &inst) {
  inst.validate();
  int n = inst.n;
  BinaryProblem p;
  p.num_vars = n * n;
  auto idx = [n](int x, int i) { return (x - 1) * n + (i - 1); };
  for (int x = 1; x <= n; ++x)
    for (int i = 1; i <= n; ++i) p.var_names.push_back(entry_name(x, i));
  for (int x = 1; x <= n; ++x) {
    std::vector<int> vars;
    for (int i = 1; i <= n; ++i) vars.push_back(idx(x, i));
    p.constraints.push_back(
        Constraint::linear(ConstraintKind::LinearEQ, vars, std::vector<long long>(vars.size(), 1), 1));
  }
  for (int i = 1; i <= n; ++i) {
    std::vector<int> vars;
    for (int x = 1; x <= n; ++x) vars.push_back(idx(x, i));
    p.constraints.push_back(
        Constraint::linear(ConstraintKind::LinearEQ, vars, std::vector<long long>(vars.size(), 1), 1));
  }
  std::map<std::vector<int>, Rat> acc;
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          Rat coeff = -inst.F[static_cast<size_t>(x - 1)][static_cast<size_t>(y - 1)] *
                      inst.D[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
          if (coeff == 0) continue;
          std::vector<int> vars{idx(x, i), idx(y, j)};
          std::sort(vars.begin(), vars.end());
          vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
          acc[vars] += coeff;
        }
  for (const auto &[vars, coeff] : acc)
    if (coeff != 0) p.weight.add_term(vars, LinForm(coeff));
  p.validate();
  return p;
}

namespace {

std::vector<std::vector<Rat>> difference_matrix(const std::vector<std::vector<Rat>> &m, int n) {
  std::vector<std::vector<Rat>> out(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      out[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          m[static_cast<size_t>(a)][static_cast<size_t>(b)] -
          m[static_cast<size_t>(a)][static_cast<size_t>(n - 1)] -
          m[static_cast<size_t>(n - 1)][static_cast<size_t>(b)] +
          m[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
  return out;
}

} // namespace

ReducedFormulation reduced_formulation(const QapInstance &inst) {
  inst.validate();
  int n = inst.n;
  if (n < 2) throw QapError("reduced formulation needs n >= 2");
  int m = n - 1;
  auto ridx = [m](int x, int i) { return (x - 1) * m + (i - 1); };

  ReducedFormulation out;
  out.problem.num_vars = m * m;
  for (int x = 1; x <= m; ++x)
    for (int i = 1; i <= m; ++i) out.problem.var_names.push_back(entry_name(x, i));

  for (int x = 1; x <= m; ++x) {
    std::vector<int> vars;
    for (int i = 1; i <= m; ++i) vars.push_back(ridx(x, i));
    out.problem.constraints.push_back(
        Constraint::linear(ConstraintKind::LinearLE, vars, std::vector<long long>(vars.size(), 1), 1));
  }
  for (int i = 1; i <= m; ++i) {
    std::vector<int> vars;
    for (int x = 1; x <= m; ++x) vars.push_back(ridx(x, i));
    out.problem.constraints.push_back(
        Constraint::linear(ConstraintKind::LinearLE, vars, std::vector<long long>(vars.size(), 1), 1));
  }
  {
    std::vector<int> vars;
    for (int v = 0; v < m * m; ++v) vars.push_back(v);
    out.problem.constraints.push_back(Constraint::linear(
        ConstraintKind::LinearGE, vars, std::vector<long long>(vars.size(), 1), n - 2));
  }

  // affine form of every original entry over the kept (n-1)^2 entries
  std::vector<AffineExpr> exprs(static_cast<size_t>(n) * static_cast<size_t>(n));
  auto cidx = [n](int x, int i) { return (x - 1) * n + (i - 1); };
  for (int x = 1; x <= n; ++x)
    for (int i = 1; i <= n; ++i) {
      AffineExpr e;
      if (x < n && i < n) {
        e.c = 0;
        e.terms = {{1, ridx(x, i)}};
      } else if (x < n) { // eliminated row entry: 1 - row sum
        e.c = 1;
        for (int k = 1; k <= m; ++k) e.terms.push_back({-1, ridx(x, k)});
      } else if (i < n) { // eliminated column entry: 1 - column sum
        e.c = 1;
        for (int k = 1; k <= m; ++k) e.terms.push_back({-1, ridx(k, i)});
      } else { // corner: 2 - n + total sum
        e.c = 2 - n;
        for (int a = 1; a <= m; ++a)
          for (int b = 1; b <= m; ++b) e.terms.push_back({1, ridx(a, b)});
      }
      exprs[static_cast<size_t>(cidx(x, i))] = std::move(e);
    }
  out.to_canonical.exprs = exprs;

  Rat constant = 0;
  std::map<std::vector<int>, Rat> acc;
  auto add_product = [&](const AffineExpr &a, const AffineExpr &b, const Rat &coeff) {
    if (a.c != 0 && b.c != 0) constant += coeff * Rat(a.c) * Rat(b.c);
    if (a.c != 0)
      for (const auto &[bc, bv] : b.terms) acc[{bv}] += coeff * Rat(a.c) * Rat(bc);
    if (b.c != 0)
      for (const auto &[ac, av] : a.terms) acc[{av}] += coeff * Rat(b.c) * Rat(ac);
    for (const auto &[ac, av] : a.terms)
      for (const auto &[bc, bv] : b.terms) {
        std::vector<int> vars{av, bv};
        std::sort(vars.begin(), vars.end());
        vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
        acc[vars] += coeff * Rat(ac) * Rat(bc); // squares collapse: binary vars
      }
  };
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          Rat coeff = -inst.F[static_cast<size_t>(x - 1)][static_cast<size_t>(y - 1)] *
                      inst.D[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
          if (coeff == 0) continue;
          add_product(exprs[static_cast<size_t>(cidx(x, i))],
                      exprs[static_cast<size_t>(cidx(y, j))], coeff);
        }

  auto wire_of = [m](int v) { return WireId{v / m + 1, v % m + 1}; };
  ReducedCoefficients &co = out.coeffs;
  co.n = n;
  co.fprime = difference_matrix(inst.F, n);
  co.dprime = difference_matrix(inst.D, n);
  co.c_I = -constant;
  for (const auto &[vars, coeff] : acc) {
    if (coeff == 0) continue;
    if (vars.size() == 1) {
      co.linear[wire_of(vars[0])] += coeff;
      out.problem.weight.add_term(vars, LinForm(coeff));
    } else {
      WireId a = wire_of(vars[0]), b = wire_of(vars[1]);
      // same-row and same-column products vanish on every valid assignment
      if (a.first == b.first || a.second == b.second) continue;
      co.pair[{a, b}] += coeff;
      out.problem.weight.add_term(vars, LinForm(coeff));
    }
  }
  out.problem.validate();
  return out;
}

ClosedFormCoefficients closed_form_coefficients(const QapInstance &inst) {
  inst.validate();
  int n = inst.n;
  if (n < 2) throw QapError("closed forms need n >= 2");
  auto fp = difference_matrix(inst.F, n), dp = difference_matrix(inst.D, n);
  auto F = [&](int a, int b) { return inst.F[static_cast<size_t>(a - 1)][static_cast<size_t>(b - 1)]; };
  auto D = [&](int a, int b) { return inst.D[static_cast<size_t>(a - 1)][static_cast<size_t>(b - 1)]; };
  auto Fp = [&](int a, int b) { return fp[static_cast<size_t>(a - 1)][static_cast<size_t>(b - 1)]; };
  auto Dp = [&](int a, int b) { return dp[static_cast<size_t>(a - 1)][static_cast<size_t>(b - 1)]; };

  ClosedFormCoefficients out;
  int m = n - 1;
  for (int x = 1; x <= m; ++x)
    for (int i = 1; i <= m; ++i) {
      Rat w = Rat(-2) * Fp(x, x) * Dp(i, i);
      for (int t = 1; t <= n; ++t) {
        w += Fp(x, t) * Dp(i, t) - (F(x, t) - F(x, n)) * (D(i, t) - D(n, t));
        w += Fp(t, x) * Dp(t, i) - (F(t, x) - F(n, x)) * (D(t, i) - D(t, n));
      }
      out.linear[{x, i}] = w;
    }
  for (int x = 1; x <= m; ++x)
    for (int y = 1; y <= m; ++y)
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
          WireId a{x, i}, b{y, j};
          if (!(a < b) || x == y || i == j) continue;
          out.pair_printed[{a, b}] = -(Fp(x, y) * Dp(y, j) + Fp(y, x) * Dp(j, i));
          out.pair_alt[{a, b}] = -(Fp(x, y) * Dp(i, j) + Fp(y, x) * Dp(j, i));
        }
  return out;
}

NaiveCircuitParams naive_params(const QapInstance &inst, const Rat &eps) {
  inst.validate();
  int n = inst.n;
  NaiveCircuitParams p;
  p.eps = eps;
  if (p.eps == 0) {
    BigInt den = 0; // smallest denominator above 1 across both matrices
    for (const auto *mat : {&inst.F, &inst.D})
      for (const auto &row : *mat)
        for (const auto &v : row) {
          BigInt d = rat_den(v);
          if (d > 1 && (den == 0 || d < den)) den = d;
        }
    p.eps = den == 0 ? Rat(1) : Rat(1, den);
  }
  if (p.eps <= 0) throw QapError("eps must be positive");
  Rat best = inst.F[0][0] * inst.D[0][0];
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          Rat v = inst.F[static_cast<size_t>(x - 1)][static_cast<size_t>(y - 1)] *
                  inst.D[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
          if (v > best) best = v;
        }
  p.w0 = best + p.eps;
  for (int x = 1; x <= n; ++x)
    for (int i = 1; i <= n; ++i)
      p.wxi[{x, i}] = p.w0 - inst.F[static_cast<size_t>(x - 1)][static_cast<size_t>(x - 1)] *
                                 inst.D[static_cast<size_t>(i - 1)][static_cast<size_t>(i - 1)];
  for (int x = 1; x <= n; ++x)
    for (int i = 1; i <= n; ++i)
      for (int y = 1; y <= n; ++y)
        for (int j = 1; j <= n; ++j) {
          WireId a{x, i}, b{y, j};
          if (!(a < b) || x == y || i == j) continue;
          p.wpair[{a, b}] =
              Rat(2) * p.w0 -
              inst.F[static_cast<size_t>(x - 1)][static_cast<size_t>(y - 1)] *
                  inst.D[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] -
              inst.F[static_cast<size_t>(y - 1)][static_cast<size_t>(x - 1)] *
                  inst.D[static_cast<size_t>(j - 1)][static_cast<size_t>(i - 1)];
        }
  return p;
}

Circuit naive_circuit(const QapInstance &inst, const NaiveCircuitParams &params) {
  inst.validate();
  int n = inst.n, w = n * n;
  auto wire_of = [n](int p) { return WireId{(p - 1) / n + 1, (p - 1) % n + 1}; };
  Circuit c;
  c.rows = w + 1;
  c.cols = w + 2;
  for (int p = 1; p <= w; ++p) {
    WireId wp = wire_of(p);
    Tile top = standard_tile(TileKind::Terminator, 1);
    Rat bias = params.wxi.at(wp);
    if (bias != 0) top = decorate(top, value_bias(4, 1, LinForm(bias)));
    top.label = entry_name(wp.first, wp.second);
    c.place(0, p, top);
    for (int q = 1; q < p; ++q) {
      WireId wq = wire_of(q); // horizontal wire: the earlier one
      Tile cross = standard_tile(TileKind::Intersection, 0);
      if (wq.first == wp.first || wq.second == wp.second) {
        cross = decorate(cross, xy_restriction(1, 1));
      } else {
        Rat pb = params.wpair.at({wq, wp});
        if (pb != 0) cross = decorate(cross, xy_bias(1, 1, LinForm(pb)));
      }
      c.place(q, p, cross);
    }
    c.place(p, p, standard_tile(TileKind::WireCorner, 0));
    c.place(p, w + 1, standard_tile(TileKind::Terminator, 2));
  }
  return c;
}

Circuit naive_circuit(const QapInstance &inst) { return naive_circuit(inst, naive_params(inst)); }

Rat theorem2_bound(const ReducedCoefficients &coeffs) {
  Rat bound = 0;
  int m = coeffs.n - 1;
  for (int x = 1; x <= m; ++x)
    for (int i = 1; i <= m; ++i) {
      WireId me{x, i};
      Rat s = 0;
      auto it = coeffs.linear.find(me);
      if (it != coeffs.linear.end()) s += rat_abs(it->second);
      for (const auto &[key, v] : coeffs.pair)
        if (key.first == me || key.second == me) s += rat_abs(v);
      if (s > bound) bound = s;
    }
  return bound;
}

ReducedCircuit reduced_circuit(const QapInstance &inst) {
  ReducedCircuit rc;
  rc.formulation = reduced_formulation(inst);
  rc.delta_bound = theorem2_bound(rc.formulation.coeffs);
  const auto &co = rc.formulation.coeffs;
  int n = inst.n, m = n - 1;

  auto pos = [m](int x, int i) { return (x - 1) * m + i; };
  auto colV = pos;
  auto rowH = [m](int x, int i) { return (x - 1) * m + (m + 1 - i); };
  auto colD = [m, pos](int x, int i) { return m * m + 2 * pos(x, i) - 1; };
  auto orRow = [m](int x) { return m * m + 2 * x - 1; };
  auto utRow = [m](int x) { return m * m + 2 * x; };
  auto colOut = [m](int y) { return 3 * m * m + 2 * y - 1; };
  const int andRow = m * m + 2 * m + 1;
  const int andUt = m * m + 2 * m + 2;

  Circuit &c = rc.circuit;
  c.rows = andUt + 1;
  c.cols = 3 * m * m + 2 * m + 2;

  auto wireH = [] { return standard_tile(TileKind::WireStraight, 0); };
  auto wireV = [] { return standard_tile(TileKind::WireStraight, 1); };
  auto corner21 = [] { return standard_tile(TileKind::WireCorner, 0); };
  auto corner34 = [] { return standard_tile(TileKind::WireCorner, 2); };
  auto corner23 = [] { return standard_tile(TileKind::WireCorner, 3); };
  auto plain_inter = [] { return standard_tile(TileKind::Intersection, 0); };
  auto linear_of = [&](int x, int i) {
    auto it = co.linear.find({x, i});
    return it == co.linear.end() ? Rat(0) : it->second;
  };
  auto pair_of = [&](WireId a, WireId b) {
    auto it = co.pair.find({a, b});
    return it == co.pair.end() ? Rat(0) : it->second;
  };

  for (int x = 1; x <= m; ++x)
    for (int i = 1; i <= m; ++i) {
      Tile var = standard_tile(TileKind::Variable, 1);
      Rat lb = linear_of(x, i);
      if (lb != 0) var = decorate(var, value_bias(4, 1, LinForm(lb)));
      var.label = entry_name(x, i);
      c.place(0, colV(x, i), var);

      for (int r = 1; r < rowH(x, i); ++r) {
        if (r <= (x - 1) * m) { // strand row of an earlier band crosses here
          int y = (r - 1) / m + 1;
          int j = m + 1 - (r - (y - 1) * m);
          if (j == i) {
            c.place(r, colV(x, i),
                    decorate(plain_inter(), xy_restriction(1, 1)));
          } else {
            Tile cross = plain_inter();
            Rat pb = pair_of({y, j}, {x, i});
            if (pb != 0) cross = decorate(cross, xy_bias(1, 1, LinForm(pb)));
            c.place(r, colV(x, i), cross);
          }
        } else {
          c.place(r, colV(x, i), wireV());
        }
      }
      c.place(rowH(x, i), colV(x, i), corner21());

      for (int col = colV(x, i) + 1; col < colD(x, i); ++col) {
        if (col <= m * m) {
          int y = (col - 1) / m + 1; // vertical of wire (y, j) runs here
          if (y > x) continue;       // that wire's loop places the crossing
          c.place(rowH(x, i), col, wireH());
        } else if ((col - m * m) % 2 == 1) {
          int p = (col - m * m + 1) / 2; // descent column of wire index p
          int y = (p - 1) / m + 1;
          c.place(rowH(x, i), col, y < x ? plain_inter() : wireH());
        } else {
          c.place(rowH(x, i), col, wireH());
        }
      }
      c.place(rowH(x, i), colD(x, i), corner34());

      int entry = i == 1 ? orRow(x) : utRow(x);
      for (int r = rowH(x, i) + 1; r < entry; ++r) {
        if (r <= m * m) {
          int yp = (r - 1) / m + 1; // strand row of wire (yp, jp)
          int jp = m + 1 - (r - (yp - 1) * m);
          if (pos(yp, jp) > pos(x, i)) continue; // strand side owns the tile
          c.place(r, colD(x, i), wireV());
        } else if (r == orRow(x)) {
          c.place(r, colD(x, i), plain_inter()); // carry of chain x crosses
        } else {
          bool is_or = false;
          for (int y = 1; y < x; ++y)
            if (r == orRow(y)) is_or = true;
          c.place(r, colD(x, i), is_or ? plain_inter() : wireV());
        }
      }
      if (i == 1) {
        c.place(orRow(x), colD(x, 1), corner21()); // chain head
      } else {
        c.place(utRow(x), colD(x, i), corner21());
        c.place(utRow(x), colD(x, i) + 1, corner23());
        Decoration r11;
        r11.kind = DecorationKind::Restriction;
        r11.selector = {{3, 1}, {4, 1}};
        c.place(orRow(x), colD(x, i) + 1, decorate(standard_tile(TileKind::OrGate, 2), r11));
      }
      rc.var_tiles[{x, i}] = {0, colV(x, i)};
    }

  for (int x = 1; x <= m; ++x) {
    for (int col = colD(x, 1) + 1; col < colOut(x); ++col) {
      if (c.at(orRow(x), col) != nullptr) continue;
      bool crossing = false;
      if (col > m * m && (col - m * m) % 2 == 1) {
        int p = (col - m * m + 1) / 2;
        if (p <= m * m && (p - 1) / m + 1 > x) crossing = true; // later descent
      }
      if (col > 3 * m * m && (col - 3 * m * m) % 2 == 1) {
        int y = (col - 3 * m * m + 1) / 2;
        if (y < x) crossing = true; // earlier chain's output drops through
      }
      c.place(orRow(x), col, crossing ? plain_inter() : wireH());
    }
    c.place(orRow(x), colOut(x), corner34());

    int entry = x == 1 ? andRow : andUt;
    for (int r = orRow(x) + 1; r < entry; ++r) {
      bool crossing = r == andRow;
      for (int z = x + 1; z <= m && !crossing; ++z)
        if (r == orRow(z)) crossing = true;
      c.place(r, colOut(x), crossing ? plain_inter() : wireV());
    }
    if (x == 1) {
      c.place(andRow, colOut(1), corner21());
    } else {
      c.place(andUt, colOut(x), corner21());
      c.place(andUt, colOut(x) + 1, corner23());
      Decoration r00;
      r00.kind = DecorationKind::Restriction;
      r00.selector = {{3, 0}, {4, 0}};
      c.place(andRow, colOut(x) + 1, decorate(standard_tile(TileKind::AndGate, 2), r00));
    }
  }
  for (int col = colOut(1) + 1; col <= 3 * m * m + 2 * m; ++col)
    if (c.at(andRow, col) == nullptr) c.place(andRow, col, wireH());
  c.place(andRow, 3 * m * m + 2 * m + 1, standard_tile(TileKind::Terminator, 2));
  return rc;
}

Placement decode_placement(const std::vector<int> &reduced_bits, int n) {
  if (n < 2) throw QapError("decode needs n >= 2");
  int m = n - 1;
  if (static_cast<int>(reduced_bits.size()) != m * m)
    throw QapError("reduced bit vector has wrong length");
  std::vector<std::vector<int>> pi(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
  int total = 0;
  for (int x = 0; x < m; ++x)
    for (int i = 0; i < m; ++i) {
      int b = reduced_bits[static_cast<size_t>(x * m + i)];
      if (b != 0 && b != 1) throw QapError("reduced bits must be 0/1");
      pi[static_cast<size_t>(x)][static_cast<size_t>(i)] = b;
      total += b;
    }
  for (int x = 0; x < m; ++x) {
    int row = 0;
    for (int i = 0; i < m; ++i) row += pi[static_cast<size_t>(x)][static_cast<size_t>(i)];
    pi[static_cast<size_t>(x)][static_cast<size_t>(m)] = 1 - row;
  }
  for (int i = 0; i < m; ++i) {
    int col = 0;
    for (int x = 0; x < m; ++x) col += pi[static_cast<size_t>(x)][static_cast<size_t>(i)];
    pi[static_cast<size_t>(m)][static_cast<size_t>(i)] = 1 - col;
  }
  pi[static_cast<size_t>(m)][static_cast<size_t>(m)] = 2 - n + total;

  std::vector<int> flat;
  for (const auto &row : pi)
    for (int v : row) flat.push_back(v);
  return placement_from_matrix(flat, n);
}

Placement placement_from_matrix(const std::vector<int> &pi_bits, int n) {
  if (static_cast<int>(pi_bits.size()) != n * n) throw QapError("matrix bit vector has wrong length");
  Placement p;
  p.perm.assign(static_cast<size_t>(n), -1);
  std::vector<int> col_sum(static_cast<size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    int row = 0;
    for (int i = 0; i < n; ++i) {
      int b = pi_bits[static_cast<size_t>(x * n + i)];
      if (b != 0 && b != 1)
        throw QapError("assignment decoded to a non-permutation: entry out of {0,1}");
      if (b == 1) {
        p.perm[static_cast<size_t>(x)] = i;
        ++row;
        ++col_sum[static_cast<size_t>(i)];
      }
    }
    if (row != 1) throw QapError("assignment decoded to a non-permutation: bad row sum");
  }
  for (int i = 0; i < n; ++i)
    if (col_sum[static_cast<size_t>(i)] != 1)
      throw QapError("assignment decoded to a non-permutation: bad column sum");
  return p;
}

std::vector<int> reduced_bits_from_assignment(const ReducedCircuit &rc,
                                              const CircuitAssignment &a) {
  int m = rc.formulation.coeffs.n - 1;
  std::vector<int> bits;
  for (int x = 1; x <= m; ++x)
    for (int i = 1; i <= m; ++i) {
      auto cell = rc.var_tiles.at({x, i});
      auto it = a.values.find({cell.first, cell.second, 4});
      if (it == a.values.end()) throw QapError("assignment misses a variable tile value");
      bits.push_back(it->second);
    }
  return bits;
}

} // namespace qapc
