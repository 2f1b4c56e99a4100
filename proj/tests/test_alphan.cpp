#include <doctest.h>

#include <stdexcept>

#include "lgroup/alphan.hpp"

using namespace lgroup;
using namespace lgroup::alphan;

namespace {

// 1/x on the naturals, 0 at alpha.
AsymptoticSequence seq_v() {
  return AsymptoticSequence::make(1, {TailPoly({Rat(0), Rat(1)})}, Rat(0));
}

// 1/x on evens, 0 on odds (and at alpha).
AsymptoticSequence seq_a() {
  return AsymptoticSequence::make(2, {TailPoly({Rat(0), Rat(1)}), TailPoly()}, Rat(0));
}

// 1/x^2 on evens, 0 on odds.
AsymptoticSequence seq_b() {
  return AsymptoticSequence::make(2, {TailPoly({Rat(0), Rat(0), Rat(1)}), TailPoly()}, Rat(0));
}

}  // namespace

TEST_CASE("tail polynomial basics") {
  TailPoly p({Rat(1), Rat(-2), Rat(3)});
  CHECK(p.eval_at_inverse(2) == Rat(3, 4));  // 1 - 2/2 + 3/4
  CHECK(p.order() == 0);
  CHECK(p.sign_near_zero() == 1);
  CHECK(p.sign_stable_from() == 5);  // (1+3)/1 rounded past

  TailPoly q({Rat(0), Rat(1), Rat(-1)});  // t - t^2 = (x-1)/x^2
  CHECK(q.order() == 1);
  CHECK(q.sign_near_zero() == 1);
  for (std::uint64_t x = q.sign_stable_from(); x < q.sign_stable_from() + 20; ++x) {
    CHECK(q.eval_at_inverse(x) > 0);
  }

  CHECK(TailPoly().is_zero());
  CHECK((p - p).is_zero());
  CHECK(TailPoly::constant(Rat(0)).is_zero());
}

TEST_CASE("construction enforces continuity at alpha") {
  CHECK_THROWS_AS(AsymptoticSequence::make(1, {TailPoly::constant(Rat(1))}, Rat(0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(AsymptoticSequence::make(2, {TailPoly()}, Rat(0)), std::invalid_argument);
  CHECK_THROWS_AS(
      AsymptoticSequence::make(1, {TailPoly()}, Rat(0), 1, {{0, Rat(1)}}),
      std::invalid_argument);
}

TEST_CASE("explicit values matching the tail are normalized away") {
  const auto v = seq_v();
  const auto w = AsymptoticSequence::make(1, {TailPoly({Rat(0), Rat(1)})}, Rat(0), 1,
                                          {{5, Rat(1, 5)}});
  CHECK(w.exceptions().empty());
  CHECK(w.same_function(v));
  CHECK(v.same_function(w));
}

TEST_CASE("evaluation of the basic sequences") {
  const auto v = seq_v();
  CHECK(v.value_at(1) == Rat(1));
  CHECK(v.value_at(7) == Rat(1, 7));
  CHECK(v.alpha_value() == 0);

  const auto a = seq_a();
  CHECK(a.value_at(1) == 0);
  CHECK(a.value_at(2) == Rat(1, 2));
  CHECK(a.value_at(3) == 0);
  CHECK(a.value_at(10) == Rat(1, 10));

  const auto b = seq_b();
  CHECK(b.value_at(2) == Rat(1, 4));
  CHECK(b.value_at(6) == Rat(1, 36));
  CHECK(b.value_at(9) == 0);
}

TEST_CASE("addition refines moduli and stays exact") {
  const auto s = seq_a().add(seq_b());
  CHECK(s.value_at(2) == Rat(3, 4));
  CHECK(s.value_at(4) == Rat(1, 4) + Rat(1, 16));
  CHECK(s.value_at(3) == 0);
  CHECK(s.alpha_value() == 0);
  CHECK(s.add(seq_b().negate()).same_function(seq_a()));
  CHECK(seq_a().add(seq_a().negate()).is_zero());
}

TEST_CASE("meet against a constant produces the expected exceptional point") {
  const auto v = seq_v();
  const auto h = AsymptoticSequence::constant(Rat(1, 2));
  const auto s = v.meet(h);
  CHECK(s.value_at(1) == Rat(1, 2));
  CHECK(s.value_at(2) == Rat(1, 2));
  CHECK(s.value_at(3) == Rat(1, 3));
  CHECK(s.value_at(100) == Rat(1, 100));
  CHECK(s.alpha_value() == 0);
  // Canonical form stores exactly one off-tail value, at x = 1.
  CHECK(s.exceptions().size() == 1);
  CHECK(s.exceptions().count(1) == 1);
  CHECK(s.exceptions().at(1) == Rat(1, 2));

  // Lattice identities.
  CHECK(v.meet(h).add(v.join(h)).same_function(v.add(h)));
  CHECK(v.join(v).same_function(v));
  CHECK(v.meet(v).same_function(v));
}

TEST_CASE("absolute value via join with the negation") {
  const auto v = seq_v();
  const auto d = v.add(AsymptoticSequence::constant(Rat(-1, 2)));
  const auto ad = d.abs();
  CHECK(ad.value_at(1) == Rat(1, 2));
  CHECK(ad.value_at(2) == 0);
  CHECK(ad.value_at(3) == Rat(1, 6));
  CHECK(ad.alpha_value() == Rat(1, 2));
  CHECK(v.negate().abs().same_function(v));
  CHECK(v.scale(Int(-3)).abs().same_function(v.scale(Int(3))));
}

TEST_CASE("representation equality is semantic, not structural") {
  const auto v = seq_v();
  const auto v2 = AsymptoticSequence::make(
      2, {TailPoly({Rat(0), Rat(1)}), TailPoly({Rat(0), Rat(1)})}, Rat(0), 7);
  CHECK(v.same_function(v2));
  CHECK_FALSE(v.same_function(seq_a()));
}

TEST_CASE("eventually periodic set algebra") {
  const auto evens = seq_a().coz();
  CHECK(evens.contains(2));
  CHECK(evens.contains(1000));
  CHECK_FALSE(evens.contains(3));
  CHECK_FALSE(evens.contains_alpha());

  const auto cl = evens.closure();
  CHECK(cl.contains_alpha());
  CHECK(cl.interior().same_set(evens));  // regular open

  const auto whole = EventuallyPeriodicSet::whole_space();
  const auto naturals = seq_v().coz();
  CHECK(naturals.subset_of(whole));
  CHECK_FALSE(whole.subset_of(naturals));
  CHECK(naturals.closure().same_set(whole));
  CHECK(whole.interior().same_set(whole));

  const auto alpha_only = naturals.complement();
  CHECK(alpha_only.contains_alpha());
  CHECK(alpha_only.first_point().has_value());
  CHECK(alpha_only.first_point()->at_alpha);
  CHECK(alpha_only.closure().same_set(alpha_only));
  CHECK(alpha_only.interior().is_empty());

  // Union with sporadic points keeps flips canonical.
  const auto sporadic = EventuallyPeriodicSet::make(1, {}, 5, {1, 3}, false);
  const auto u = evens.set_union(sporadic);
  CHECK(u.contains(1));
  CHECK(u.contains(3));
  CHECK_FALSE(u.contains(5));
  CHECK(u.contains(6));
  CHECK(u.set_intersection(sporadic).same_set(sporadic));
  CHECK(evens.set_union(evens.complement()).same_set(whole));
  CHECK(evens.set_intersection(evens.complement()).is_empty());
}

TEST_CASE("cozero sets see exceptional zeros") {
  // 1/x everywhere except a planted zero at 4.
  const auto f = AsymptoticSequence::make(1, {TailPoly({Rat(0), Rat(1)})}, Rat(0), 1,
                                          {{4, Rat(0)}});
  const auto c = f.coz();
  CHECK_FALSE(c.contains(4));
  CHECK(c.contains(5));
  CHECK_FALSE(c.contains_alpha());
}

TEST_CASE("dominance: certified bounds on the flagship pairs") {
  const auto v = seq_v();
  const auto a = seq_a();
  const auto b = seq_b();
  const auto one = AsymptoticSequence::unit();

  const auto n_ba = dominance(b, a);
  REQUIRE(n_ba.has_value());
  CHECK(*n_ba == 1);

  const auto n_v1 = dominance(v, one);
  REQUIRE(n_v1.has_value());
  CHECK(*n_v1 == 1);

  // 5/x against 1/x needs exactly 5.
  const auto n5 = dominance(v.scale(Int(5)), v);
  REQUIRE(n5.has_value());
  CHECK(*n5 == 5);

  // 5/x + 1/x^2 against 1/x: the ratio-5 margin fails on the lower term.
  const auto f = v.scale(Int(5)).add(
      AsymptoticSequence::make(1, {TailPoly({Rat(0), Rat(0), Rat(1)})}, Rat(0)));
  const auto n6 = dominance(f, v);
  REQUIRE(n6.has_value());
  CHECK(*n6 == 6);

  // Sanity: a certified bound really dominates on a long prefix.
  for (std::uint64_t x = 1; x <= 2000; ++x) {
    CHECK(rat_abs(f.value_at(x)) <= Rat(*n6) * rat_abs(v.value_at(x)));
  }
}

TEST_CASE("dominance: refusals carry certificates") {
  const auto v = seq_v();
  const auto a = seq_a();
  const auto b = seq_b();
  const auto one = AsymptoticSequence::unit();

  // the unit is not dominated by v: alpha separates the cozero sets.
  const auto d1 = dominance_explain(one, v);
  CHECK_FALSE(d1.bound.has_value());
  CHECK(d1.reason == DominanceOutcome::Reason::coz_not_contained);
  REQUIRE(d1.separating_point.has_value());
  CHECK(d1.separating_point->at_alpha);

  // a is not dominated by b: decay order 1 vs 2 on the even class.
  const auto d2 = dominance_explain(a, b);
  CHECK_FALSE(d2.bound.has_value());
  CHECK(d2.reason == DominanceOutcome::Reason::order_deficit);
  REQUIRE(d2.order_certificate.has_value());
  CHECK(d2.order_certificate->order_f == 1);
  CHECK(d2.order_certificate->order_g == 2);
  // Independent spot check of the certificate's meaning: for small n a
  // violation exists.
  for (int n = 1; n <= 8; ++n) {
    bool violated = false;
    for (std::uint64_t x = 2; x <= 100000 && !violated; x += 2) {
      if (rat_abs(a.value_at(x)) > Rat(n) * rat_abs(b.value_at(x))) violated = true;
    }
    CHECK(violated);
  }

  // odd-indexed coz escape: a vs a shifted to odds.
  const auto a_odd = AsymptoticSequence::make(2, {TailPoly(), TailPoly({Rat(0), Rat(1)})}, Rat(0));
  const auto d3 = dominance_explain(a, a_odd);
  CHECK_FALSE(d3.bound.has_value());
  CHECK(d3.reason == DominanceOutcome::Reason::coz_not_contained);
  REQUIRE(d3.separating_point.has_value());
  CHECK_FALSE(d3.separating_point->at_alpha);
  CHECK(d3.separating_point->n % 2 == 0);
}

TEST_CASE("dominance respects exceptional values") {
  const auto v = seq_v();
  // v with a spike planted at x = 3.
  const auto spiky = AsymptoticSequence::make(1, {TailPoly({Rat(0), Rat(1)})}, Rat(0), 1,
                                              {{3, Rat(7)}});
  const auto n = dominance(spiky, v);
  REQUIRE(n.has_value());
  CHECK(*n == 21);  // 7 = f(3) <= n * (1/3) forces n >= 21
}

TEST_CASE("realize_open produces elements with the requested cozero set") {
  const auto v = seq_v();
  const auto naturals = v.coz();
  const auto r1 = realize_open(naturals);
  CHECK(r1.coz().same_set(naturals));
  CHECK(r1.same_function(v));

  const auto evens = seq_a().coz();
  const auto r2 = realize_open(evens);
  CHECK(r2.coz().same_set(evens));

  // whole space minus {3}: cofinite, open, contains alpha.
  const auto u = EventuallyPeriodicSet::make(1, {0}, 4, {3}, true);
  const auto r3 = realize_open(u);
  CHECK(r3.value_at(3) == 0);
  CHECK(r3.value_at(5) == Rat(1));
  CHECK(r3.alpha_value() == Rat(1));
  CHECK(r3.coz().same_set(u));

  // evens plus alpha is not open: realization must refuse.
  CHECK_THROWS_AS(realize_open(evens.closure()), std::domain_error);
  // {alpha} alone is not open either.
  CHECK_THROWS_AS(realize_open(naturals.complement()), std::domain_error);
}

TEST_CASE("regular-open status of cozero sets distinguishes v from a") {
  const auto cv = seq_v().coz();
  const auto ca = seq_a().coz();
  CHECK_FALSE(cv.closure().interior().same_set(cv));  // int cl N = whole != N
  CHECK(ca.closure().interior().same_set(ca));        // evens are regular open
}
