#include <doctest.h>

#include "delta.hpp"

using namespace qapc;

TEST_SUITE("foundation") {

TEST_CASE("rational parsing accepts integers, fractions and exact decimals") {
  CHECK(*rat_parse("3") == Rat(3));
  CHECK(*rat_parse("-7/2") == Rat(-7, 2));
  CHECK(*rat_parse("+4/6") == Rat(2, 3));
  CHECK(*rat_parse("1.25") == Rat(5, 4));
  CHECK(*rat_parse("-0.5") == Rat(-1, 2));
  CHECK(*rat_parse("0") == Rat(0));

  CHECK(!rat_parse(""));
  CHECK(!rat_parse("1/0"));
  CHECK(!rat_parse("abc"));
  CHECK(!rat_parse("1e3"));
  CHECK(!rat_parse("1..2"));
  CHECK(!rat_parse("--3"));
  CHECK(!rat_parse("3/"));
  CHECK(!rat_parse("/4"));
}

TEST_CASE("rational formatting hides unit denominators") {
  CHECK(rat_str(Rat(4)) == "4");
  CHECK(rat_str(Rat(-7, 2)) == "-7/2");
  CHECK(rat_str(Rat(0)) == "0");
  CHECK(rat_str(Rat(6, 3)) == "2");
}

TEST_CASE("float-looking tokens are flagged, plain rationals are not") {
  CHECK(looks_like_float("1.5"));
  CHECK(looks_like_float("2e5"));
  CHECK(looks_like_float("3E-2"));
  CHECK(!looks_like_float("3/2"));
  CHECK(!looks_like_float("-12"));
}

TEST_CASE("linear forms cancel to constants") {
  LinForm f = LinForm::sym("w1", 2) + LinForm(3);
  f -= LinForm::sym("w1", 2);
  CHECK(f.is_constant());
  CHECK(f.c == Rat(3));
  CHECK(f == LinForm(3));

  LinForm g = LinForm::sym("a") + LinForm::sym("b", -1);
  CHECK(g.terms.size() == 2);
  CHECK((g + LinForm::sym("b")).terms.size() == 1);
}

TEST_CASE("evaluation substitutes the environment") {
  LinForm f = LinForm::sym("w1", 2) - LinForm::sym("w2") + LinForm(Rat(1, 2));
  CHECK(f.eval({{"w1", Rat(3)}, {"w2", Rat(5)}}) == Rat(3, 2));
}

TEST_CASE("abs_upper dominates the form and its negation") {
  LinForm f = LinForm::sym("w", -2) + LinForm(-3);
  LinForm up = f.abs_upper();
  CHECK(provably_le(f, up));
  CHECK(provably_le(-f, up));
  CHECK(up.c == Rat(3));
  CHECK(up.terms.at(LinForm::abs_name("w")) == Rat(2));
}

TEST_CASE("nonnegativity needs abs symbols to dominate bare ones") {
  LinForm abs_w = LinForm::sym(LinForm::abs_name("w"));
  LinForm bare_w = LinForm::sym("w");
  CHECK((abs_w + bare_w).provably_nonneg());
  CHECK((abs_w - bare_w).provably_nonneg());
  CHECK(!(abs_w - bare_w * Rat(2)).provably_nonneg());
  CHECK(!bare_w.provably_nonneg());
  CHECK(!(abs_w + LinForm(-1)).provably_nonneg());
  CHECK((abs_w * Rat(3) + LinForm(1)).provably_nonneg());
}

TEST_CASE("provable order is partial") {
  LinForm a = LinForm::sym("x");
  LinForm b = LinForm::sym("y");
  CHECK(!provably_le(a, b));
  CHECK(!provably_le(b, a));
  CHECK(provably_le(a, a));
  CHECK(provably_le(LinForm(0), a.abs_upper()));
}

TEST_CASE("join_upper is the coefficient-wise max") {
  LinForm a = (LinForm::sym("w", 2) + LinForm(1)).abs_upper();
  LinForm b = (LinForm::sym("w") + LinForm(-3)).abs_upper();
  LinForm j = join_upper(a, b);
  CHECK(j.c == Rat(3));
  CHECK(j.terms.at(LinForm::abs_name("w")) == Rat(2));
  CHECK(provably_le(a, j));
  CHECK(provably_le(b, j));
}

TEST_CASE("delta weights order for every positive delta only when both parts do") {
  CHECK(leq_for_all_delta(DeltaWeight(3, LinForm(1)), DeltaWeight(4, LinForm(1))));
  CHECK(!leq_for_all_delta(DeltaWeight(3, LinForm(5)), DeltaWeight(4, LinForm(1))));
  CHECK(!leq_for_all_delta(DeltaWeight(5, LinForm(0)), DeltaWeight(4, LinForm(100))));
}

TEST_CASE("large-delta order is decided by the delta coefficient first") {
  CHECK(leq_for_large_delta(DeltaWeight(3, LinForm(100)), DeltaWeight(4, LinForm(0))));
  CHECK(leq_for_large_delta(DeltaWeight(3, LinForm::sym("w", 1000)), DeltaWeight(4)));
  CHECK(!leq_for_large_delta(DeltaWeight(4, LinForm(1)), DeltaWeight(4, LinForm(0))));
  CHECK(leq_for_large_delta(DeltaWeight(4, LinForm(1)), DeltaWeight(4, LinForm(1))));
}

TEST_CASE("delta weight evaluation") {
  DeltaWeight w(5, LinForm::sym("b") + LinForm(2));
  CHECK(w.eval(Rat(1, 2), {{"b", Rat(3)}}) == Rat(15, 2));
}

} // TEST_SUITE
