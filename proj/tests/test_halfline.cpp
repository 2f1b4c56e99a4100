#include <doctest.h>

#include <stdexcept>

#include "lgroup/halfline.hpp"

using namespace lgroup;
using namespace lgroup::halfline;

namespace {

// The identity ramp capped at 1: x on [0,1], constant 1 afterwards.
PwlFunction ramp_cap() {
  return PwlFunction::from_breakpoint_values({Rat(0), Rat(1)}, {Rat(0), Rat(1)}, Rat(1));
}

ExtRat at(long num, long den = 1) { return ExtRat::of(Rat(num, den)); }

}  // namespace

TEST_CASE("construction validates the schema") {
  CHECK_THROWS_AS(PwlFunction::from_breakpoint_values({Rat(1)}, {Rat(0)}, Rat(0)),
                  std::invalid_argument);  // must start at 0
  CHECK_THROWS_AS(
      PwlFunction::from_breakpoint_values({Rat(0), Rat(0)}, {Rat(0), Rat(1)}, Rat(1)),
      std::invalid_argument);  // strictly increasing
  CHECK_THROWS_AS(
      PwlFunction::from_breakpoint_values({Rat(0), Rat(1)}, {Rat(0), Rat(1)}, Rat(0)),
      std::invalid_argument);  // tail must match last value
  CHECK_THROWS_AS(PwlFunction::from_pieces({Rat(0)}, {Rat(1)}, {Rat(0)}),
                  std::invalid_argument);  // final piece must be constant
  CHECK_THROWS_AS(
      PwlFunction::from_pieces({Rat(0), Rat(1)}, {Rat(1), Rat(0)}, {Rat(0), Rat(5)}),
      std::invalid_argument);  // discontinuous at 1
}

TEST_CASE("evaluation across pieces and at infinity") {
  const auto g = ramp_cap();
  CHECK(g.eval(at(0)) == 0);
  CHECK(g.eval(at(1, 2)) == Rat(1, 2));
  CHECK(g.eval(at(1)) == 1);
  CHECK(g.eval(at(3)) == 1);
  CHECK(g.eval(ExtRat::infinity()) == 1);
  CHECK(g.value_at_infinity() == 1);
}

TEST_CASE("group and lattice operations") {
  const auto g = ramp_cap();
  CHECK(g.add(g).eval(at(1, 2)) == Rat(1));
  CHECK(g.add(g.negate()).is_zero());
  CHECK(g.scale(Int(-2)).abs().same_function(g.scale(Int(2))));

  const auto half = PwlFunction::constant(Rat(1, 2));
  const auto m = g.meet(half);
  CHECK(m.eval(at(1, 4)) == Rat(1, 4));
  CHECK(m.eval(at(3, 4)) == Rat(1, 2));
  CHECK(m.eval(ExtRat::infinity()) == Rat(1, 2));
  // The crossing at 1/2 becomes a breakpoint.
  CHECK(m.breakpoints() == std::vector<Rat>{Rat(0), Rat(1, 2)});

  const auto j = g.join(half);
  CHECK(j.eval(at(1, 4)) == Rat(1, 2));
  CHECK(j.eval(at(3, 4)) == Rat(3, 4));
  CHECK(m.add(j).same_function(g.add(half)));

  // (g - 1/2)+ : zero until 1/2, then rises to the constant 1/2.
  const auto h = g.add(half.negate()).join(PwlFunction::zero());
  CHECK(h.eval(at(0)) == 0);
  CHECK(h.eval(at(1, 2)) == 0);
  CHECK(h.eval(at(3, 4)) == Rat(1, 4));
  CHECK(h.eval(ExtRat::infinity()) == Rat(1, 2));

  const auto d = g.add(half.negate()).abs();
  CHECK(d.eval(at(0)) == Rat(1, 2));
  CHECK(d.eval(at(1, 2)) == 0);
  CHECK(d.eval(ExtRat::infinity()) == Rat(1, 2));
}

TEST_CASE("interval set algebra") {
  const auto g = ramp_cap();
  const auto cg = g.coz();
  // coz g = (0, inf]
  REQUIRE(cg.parts().size() == 1);
  CHECK(cg.parts()[0].lo == at(0));
  CHECK_FALSE(cg.parts()[0].lo_closed);
  CHECK(cg.parts()[0].hi.is_inf());
  CHECK(cg.parts()[0].hi_closed);
  CHECK_FALSE(cg.contains(at(0)));
  CHECK(cg.contains(ExtRat::infinity()));

  CHECK(cg.closure().is_whole());
  CHECK(cg.closure().interior().is_whole());
  // So coz g is dense but not regular open.
  CHECK_FALSE(cg.closure().interior().same_set(cg));

  const auto c0 = cg.complement();  // {0}
  REQUIRE(c0.parts().size() == 1);
  CHECK(c0.contains(at(0)));
  CHECK(c0.parts()[0].lo == c0.parts()[0].hi);
  CHECK(c0.interior().is_empty());

  // Union with the missing point merges into the whole space.
  CHECK(cg.set_union(c0).is_whole());
  CHECK(cg.set_intersection(c0).is_empty());

  Interval a;
  a.lo = at(0);
  a.hi = at(1);
  a.hi_closed = false;
  Interval b;
  b.lo = at(1);
  b.lo_closed = false;
  b.hi = at(2);
  const auto ab = IntervalSet::of({a, b});
  CHECK(ab.parts().size() == 2);  // the point 1 is missing, no merge
  Interval pt;
  pt.lo = at(1);
  pt.hi = at(1);
  const auto merged = ab.set_union(IntervalSet::of({pt}));
  REQUIRE(merged.parts().size() == 1);
  CHECK(merged.parts()[0].lo == at(0));
  CHECK(merged.parts()[0].hi == at(2));

  CHECK(ab.subset_of(merged));
  CHECK_FALSE(merged.subset_of(ab));

  // interior of [0,1] is [0,1): the left edge of the space stays.
  Interval cl01;
  cl01.lo = at(0);
  cl01.hi = at(1);
  const auto i01 = IntervalSet::of({cl01}).interior();
  REQUIRE(i01.parts().size() == 1);
  CHECK(i01.parts()[0].lo == at(0));
  CHECK(i01.parts()[0].lo_closed);
  CHECK(i01.parts()[0].hi == at(1));
  CHECK_FALSE(i01.parts()[0].hi_closed);
}

TEST_CASE("cozero sets split at interior zeros") {
  // A wedge touching zero at 1: |x - 1| capped.
  const auto g = ramp_cap();
  const auto w = g.add(PwlFunction::constant(Rat(-1))).abs();
  const auto cw = w.coz();
  REQUIRE(cw.parts().size() == 1);
  // w = 1-x on [0,1], 0 afterwards: coz = [0, 1)
  CHECK(cw.parts()[0].lo == at(0));
  CHECK(cw.parts()[0].lo_closed);
  CHECK(cw.parts()[0].hi == at(1));
  CHECK_FALSE(cw.parts()[0].hi_closed);

  // A genuine interior zero: tent difference.
  const auto tent = PwlFunction::from_breakpoint_values(
      {Rat(0), Rat(1), Rat(2), Rat(3)}, {Rat(0), Rat(1), Rat(0), Rat(0)}, Rat(0));
  const auto vee = tent.add(tent.negate()).add(tent).add(
      PwlFunction::constant(Rat(0)));  // still the tent
  CHECK(vee.same_function(tent));
  const auto shifted = tent.add(PwlFunction::constant(Rat(-1))).abs();
  // zero exactly at the peak x = 1.
  const auto cs = shifted.coz();
  REQUIRE(cs.parts().size() == 2);
  CHECK(cs.parts()[0].hi == at(1));
  CHECK_FALSE(cs.parts()[0].hi_closed);
  CHECK(cs.parts()[1].lo == at(1));
  CHECK_FALSE(cs.parts()[1].lo_closed);
}

TEST_CASE("dominance: certified bounds and refusals") {
  const auto g = ramp_cap();
  const auto half = PwlFunction::constant(Rat(1, 2));
  const auto h = g.add(half.negate()).join(PwlFunction::zero());

  const auto n1 = dominance(h, g);
  REQUIRE(n1.has_value());
  CHECK(*n1 == 1);

  // g against h fails: (0, 1/2] is in coz g but not coz h.
  const auto d = dominance_explain(g, h);
  CHECK_FALSE(d.bound.has_value());
  REQUIRE(d.separating_point.has_value());
  CHECK(g.eval(*d.separating_point) != 0);
  CHECK(h.eval(*d.separating_point) == 0);

  // The unit escapes g at the single point 0.
  const auto du = dominance_explain(PwlFunction::unit(), g);
  CHECK_FALSE(du.bound.has_value());
  REQUIRE(du.separating_point.has_value());
  CHECK(*du.separating_point == at(0));

  // But g is dominated by the unit at bound 1.
  const auto ng = dominance(g, PwlFunction::unit());
  REQUIRE(ng.has_value());
  CHECK(*ng == 1);

  // Scaled copies: need exactly the ratio.
  const auto n3 = dominance(g.scale(Int(3)), g);
  REQUIRE(n3.has_value());
  CHECK(*n3 == 3);

  // Shared zeros at both tent feet: slope ratio decides.
  const auto tent = PwlFunction::from_breakpoint_values(
      {Rat(0), Rat(1), Rat(3, 2), Rat(2)}, {Rat(0), Rat(0), Rat(1), Rat(0)}, Rat(0));
  const auto nt = dominance(tent, tent.scale_rat(Rat(1, 2)));
  REQUIRE(nt.has_value());
  CHECK(*nt == 2);

  // Certified bound really dominates on a dense sample.
  for (int k = 0; k <= 400; ++k) {
    const ExtRat x = ExtRat::of(Rat(k, 100));
    CHECK(rat_abs(h.eval(x)) <= Rat(*n1) * rat_abs(g.eval(x)));
  }
}

TEST_CASE("realize_open covers every cozero germ") {
  const auto g = ramp_cap();
  const auto r = realize_open(g.coz());
  CHECK(r.coz().same_set(g.coz()));
  CHECK(r.same_function(g));  // (0, inf] realizes as the ramp itself

  // Tent interval.
  Interval t;
  t.lo = at(1);
  t.lo_closed = false;
  t.hi = at(2);
  t.hi_closed = false;
  const auto rt = realize_open(IntervalSet::of({t}));
  CHECK(rt.coz().same_set(IntervalSet::of({t})));
  CHECK(rt.eval(at(3, 2)) == 1);
  CHECK(rt.eval(at(1)) == 0);

  // Left edge ramp [0, b).
  Interval l;
  l.lo = at(0);
  l.hi = at(2);
  l.hi_closed = false;
  const auto rl = realize_open(IntervalSet::of({l}));
  CHECK(rl.coz().same_set(IntervalSet::of({l})));
  CHECK(rl.eval(at(0)) == 1);

  // Multi-component set.
  const auto u = IntervalSet::of({l, t}).set_union(g.coz().complement().complement());
  CHECK(realize_open(g.coz()).coz().same_set(g.coz()));
  Interval far;
  far.lo = at(5);
  far.lo_closed = false;
  far.hi = ExtRat::infinity();
  const auto multi = IntervalSet::of({l, t, far});
  const auto rm = realize_open(multi);
  CHECK(rm.coz().same_set(multi));
  CHECK(rm.eval(ExtRat::infinity()) == 1);

  CHECK(realize_open(IntervalSet::empty_set()).is_zero());
  CHECK(realize_open(IntervalSet::whole_space()).same_function(PwlFunction::unit()));

  // Not open: refused.
  Interval closed12;
  closed12.lo = at(1);
  closed12.hi = at(2);
  CHECK_THROWS_AS(realize_open(IntervalSet::of({closed12})), std::domain_error);

  // Open but not a cozero germ: [0, inf) and (c, inf).
  const auto no_inf = IntervalSet::whole_space().set_intersection(
      IntervalSet::of({closed12}).complement().set_union(IntervalSet::of({closed12})));
  Interval half_open;
  half_open.lo = at(0);
  half_open.hi = ExtRat::infinity();
  half_open.hi_closed = false;
  CHECK_THROWS_AS(realize_open(IntervalSet::of({half_open})), std::domain_error);
  Interval tail_open;
  tail_open.lo = at(3);
  tail_open.lo_closed = false;
  tail_open.hi = ExtRat::infinity();
  tail_open.hi_closed = false;
  CHECK_THROWS_AS(realize_open(IntervalSet::of({tail_open})), std::domain_error);
}

TEST_CASE("first_point picks deterministic representatives") {
  const auto g = ramp_cap();
  const auto p = g.coz().first_point();
  REQUIRE(p.has_value());
  CHECK(*p == at(1));  // (0, inf]: lo + 1

  Interval t;
  t.lo = at(1);
  t.lo_closed = false;
  t.hi = at(2);
  t.hi_closed = false;
  const auto q = IntervalSet::of({t}).first_point();
  REQUIRE(q.has_value());
  CHECK(*q == at(3, 2));

  CHECK_FALSE(IntervalSet::empty_set().first_point().has_value());
}
