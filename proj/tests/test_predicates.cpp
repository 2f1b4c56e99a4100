#include "lgroup/predicates.hpp"

#include <vector>

#include "doctest.h"
#include "lgroup/alphan.hpp"
#include "lgroup/finite.hpp"
#include "lgroup/halfline.hpp"

using namespace lgroup;
using namespace lgroup::alphan;
using namespace lgroup::halfline;
using namespace lgroup::finite;

namespace {

AsymptoticSequence seq_v() {  // 1/x everywhere
  return AsymptoticSequence::make(1, {TailPoly({Rat(0), Rat(1)})}, Rat(0));
}
AsymptoticSequence seq_a() {  // 1/x on evens, 0 on odds
  return AsymptoticSequence::make(2, {TailPoly({Rat(0), Rat(1)}), TailPoly()}, Rat(0));
}
AsymptoticSequence seq_b() {  // 1/x^2 on evens, 0 on odds
  return AsymptoticSequence::make(2, {TailPoly({Rat(0), Rat(0), Rat(1)}), TailPoly()}, Rat(0));
}
AsymptoticSequence seq_odd() {  // 1/x on odds, 0 on evens
  return AsymptoticSequence::make(2, {TailPoly(), TailPoly({Rat(0), Rat(1)})}, Rat(0));
}

PwlFunction ramp_cap() {  // x up to 1, then constant 1; value 1 at infinity
  return PwlFunction::from_breakpoint_values({Rat(0), Rat(1)}, {Rat(0), Rat(1)}, Rat(1));
}
PwlFunction tent12() {  // 0 outside (1,2), peak 1 at 3/2
  return PwlFunction::from_breakpoint_values(
      {Rat(0), Rat(1), Rat(3, 2), Rat(2)}, {Rat(0), Rat(0), Rat(1), Rat(0)}, Rat(0));
}

std::vector<AsymptoticSequence> alphan_sample() {
  const AlphaNModel m;
  std::vector<AsymptoticSequence> out = {m.zero(),  m.unit(),  seq_v(),
                                         seq_a(),   seq_b(),   seq_odd(),
                                         m.constant(Rat(1, 2))};
  out.push_back(seq_v().scale(Int(3)));
  out.push_back(seq_v().meet(m.constant(Rat(1, 2))));
  out.push_back(seq_a().add(seq_odd()));  // 1/x with mixed classes
  return out;
}

std::vector<PwlFunction> halfline_sample() {
  const HalfLineModel m;
  std::vector<PwlFunction> out = {m.zero(), m.unit(), ramp_cap(), tent12()};
  out.push_back(ramp_cap().scale(Int(2)));
  out.push_back(ramp_cap().add(m.constant(Rat(-1, 2))).join(m.zero()));  // (g - 1/2)^+
  out.push_back(ramp_cap().meet(m.constant(Rat(1, 2))));
  return out;
}

std::vector<FiniteVector> finite_sample(const FiniteModel& m) {
  std::vector<FiniteVector> out = {m.zero(), m.unit()};
  for (std::uint32_t i = 0; i < m.k; ++i) {
    std::vector<Rat> e(m.k, Rat(0));
    e[i] = Rat(1);
    out.emplace_back(e);
  }
  out.push_back(m.scale(Int(2), out[1]));
  return out;
}

}  // namespace

static_assert(SpaceModel<AlphaNModel>);
static_assert(SpaceModel<HalfLineModel>);
static_assert(SpaceModel<FiniteModel>);

TEST_CASE("pair predicates on alphaN separate the membership chain") {
  const AlphaNModel m;
  const auto v = seq_v();
  const auto a = seq_a();
  const auto b = seq_b();
  const auto one = m.unit();

  CHECK(in_principal(m, b, a));
  CHECK(*principal_witness(m, b, a) == 1);
  CHECK_FALSE(in_principal(m, a, b));
  CHECK(in_principal(m, v, one));

  // The unit sits in v's double polar and zero-set kernel gap: the chain
  // G(v) <= I(Z(v)) <= v^pp is strict at both links here.
  CHECK(in_polar(m, one, v));
  CHECK_FALSE(in_zkernel(m, one, v));
  CHECK_FALSE(in_principal(m, one, v));

  CHECK(in_zkernel(m, b, a));
  CHECK(in_zkernel(m, a, v));
  CHECK(in_polar(m, a, v));
  CHECK_FALSE(in_zkernel(m, v, a));

  CHECK(in_perp(m, a, seq_odd()));
  CHECK_FALSE(in_perp(m, a, b));
  CHECK(in_perp(m, m.zero(), v));
}

TEST_CASE("unit and regularity predicates on alphaN") {
  const AlphaNModel m;
  const auto v = seq_v();
  const auto a = seq_a();

  CHECK(is_weak_unit(m, v));
  CHECK_FALSE(is_strong_unit(m, v));
  CHECK(is_strong_unit(m, m.unit()));
  CHECK(is_weak_unit(m, m.unit()));
  CHECK_FALSE(is_weak_unit(m, a));

  CHECK_FALSE(coz_regular_open(m, v));
  CHECK(coz_regular_open(m, a));
  CHECK_FALSE(coz_closed(m, v));
  CHECK(coz_closed(m, m.unit()));
  CHECK(clcoz_open(m, v));
  CHECK_FALSE(clcoz_open(m, a));
}

TEST_CASE("zset_regular_closed mirrors coz_regular_open") {
  const AlphaNModel am;
  for (const auto& g : alphan_sample()) {
    CHECK(zset_regular_closed(am, g) == coz_regular_open(am, g));
  }
  const HalfLineModel hm;
  for (const auto& g : halfline_sample()) {
    CHECK(zset_regular_closed(hm, g) == coz_regular_open(hm, g));
  }
}

TEST_CASE("coz_closed decomposes as clcoz_open plus coz_regular_open") {
  const AlphaNModel am;
  for (const auto& g : alphan_sample()) {
    CHECK(coz_closed(am, g) == (clcoz_open(am, g) && coz_regular_open(am, g)));
  }
  const HalfLineModel hm;
  for (const auto& g : halfline_sample()) {
    CHECK(coz_closed(hm, g) == (clcoz_open(hm, g) && coz_regular_open(hm, g)));
  }
  const FiniteModel fm(3);
  for (const auto& g : finite_sample(fm)) {
    CHECK(coz_closed(fm, g));
    CHECK(clcoz_open(fm, g));
    CHECK(coz_regular_open(fm, g));
  }
}

TEST_CASE("chain_check holds for every sampled pair in every model") {
  const AlphaNModel am;
  const auto as = alphan_sample();
  for (const auto& f : as)
    for (const auto& g : as) CHECK(chain_check(am, f, g));

  const HalfLineModel hm;
  const auto hs = halfline_sample();
  for (const auto& f : hs)
    for (const auto& g : hs) CHECK(chain_check(hm, f, g));

  const FiniteModel fm(3);
  const auto fs = finite_sample(fm);
  for (const auto& f : fs)
    for (const auto& g : fs) CHECK(chain_check(fm, f, g));
}

TEST_CASE("pair predicates on the half-line") {
  const HalfLineModel m;
  const auto g = ramp_cap();
  const auto t = tent12();
  const auto one = m.unit();

  CHECK(in_polar(m, one, g));       // cl coz g is the whole space
  CHECK_FALSE(in_zkernel(m, one, g));
  CHECK_FALSE(in_principal(m, one, g));
  CHECK(in_principal(m, t, g));     // t <= 1 and g >= 1/2 on coz t
  CHECK(in_perp(m, t, m.zero()));
  CHECK_FALSE(in_perp(m, t, g));

  CHECK(is_weak_unit(m, g));
  CHECK_FALSE(is_strong_unit(m, g));
  CHECK_FALSE(coz_regular_open(m, g));
  CHECK(coz_regular_open(m, t));
  CHECK_FALSE(coz_closed(m, t));
  CHECK_FALSE(clcoz_open(m, t));
}

TEST_CASE("ideal_contains dispatches all six ideal kinds") {
  const AlphaNModel m;
  const auto v = seq_v();
  const auto a = seq_a();
  const auto b = seq_b();

  CHECK(ideal_contains(m, IdealSpec<AlphaNModel>::principal_of(a), b));
  CHECK_FALSE(ideal_contains(m, IdealSpec<AlphaNModel>::principal_of(b), a));
  CHECK(ideal_contains(m, IdealSpec<AlphaNModel>::perp_of(seq_odd()), a));
  CHECK(ideal_contains(m, IdealSpec<AlphaNModel>::polar_of(v), m.unit()));
  CHECK(ideal_contains(m, IdealSpec<AlphaNModel>::zkernel_of(v), a));
  CHECK_FALSE(ideal_contains(m, IdealSpec<AlphaNModel>::zkernel_of(v), m.unit()));

  CHECK(ideal_contains(m, IdealSpec<AlphaNModel>::point_kernel_at(AlphaNPoint::alpha()), v));
  CHECK_FALSE(ideal_contains(m, IdealSpec<AlphaNModel>::point_kernel_at(AlphaNPoint::natural(3)), v));

  // The empty set is closed and its kernel is everything.
  CHECK(ideal_contains(m, IdealSpec<AlphaNModel>::closed_kernel_of(m.empty_set()), m.unit()));
  // Evens without alpha are not closed: must be rejected.
  const auto evens = EventuallyPeriodicSet::make(2, {0}, 1, {}, false);
  CHECK_THROWS_AS(
      ideal_contains(m, IdealSpec<AlphaNModel>::closed_kernel_of(evens), v),
      std::invalid_argument);
  // With alpha added the set is closed; v is nonzero on it.
  const auto evens_cl = evens.closure();
  CHECK_FALSE(ideal_contains(m, IdealSpec<AlphaNModel>::closed_kernel_of(evens_cl), v));
  CHECK(ideal_contains(m, IdealSpec<AlphaNModel>::closed_kernel_of(evens_cl), seq_odd()));
}

TEST_CASE("d-ideal test: polars always pass, point kernel at alpha fails") {
  const AlphaNModel m;
  const auto sample = alphan_sample();

  const auto polar_verdict =
      d_ideal_test(m, IdealSpec<AlphaNModel>::polar_of(seq_a()), sample, 100);
  CHECK(polar_verdict.pass);
  CHECK(polar_verdict.examined > 0);

  const auto mp = IdealSpec<AlphaNModel>::point_kernel_at(AlphaNPoint::alpha());
  const auto mp_verdict = d_ideal_test(m, mp, sample, 100);
  REQUIRE_FALSE(mp_verdict.pass);
  CHECK(mp_verdict.exact_per_sample);
  // The first sampled member of M_alpha with dense cozero set is v.
  CHECK(m.equal(*mp_verdict.counterexample, seq_v()));

  // Same failure through the zero-set kernel I(Z(v)) = M_alpha.
  const auto zk_verdict =
      d_ideal_test(m, IdealSpec<AlphaNModel>::zkernel_of(seq_v()), sample, 100);
  REQUIRE_FALSE(zk_verdict.pass);
  CHECK(m.equal(*zk_verdict.counterexample, seq_v()));

  // A closed-kernel ideal over the empty set contains everything and
  // never obstructs: cl int Z(g) >= empty always.
  const auto ck_verdict = d_ideal_test(
      m, IdealSpec<AlphaNModel>::closed_kernel_of(m.empty_set()), sample, 100);
  CHECK(ck_verdict.pass);
}

TEST_CASE("d-ideal test respects the budget") {
  const AlphaNModel m;
  std::vector<AsymptoticSequence> sample = {m.unit(), seq_a(), seq_v()};
  const auto mp = IdealSpec<AlphaNModel>::point_kernel_at(AlphaNPoint::alpha());
  // Budget 1: only seq_a (the first member of M_alpha) is examined, and
  // it is innocent: cl int Z(a) contains the odds and alpha.
  const auto small = d_ideal_test(m, mp, sample, 1);
  CHECK(small.pass);
  CHECK(small.examined == 1);
  // Budget 2 reaches v and convicts it.
  const auto big = d_ideal_test(m, mp, sample, 2);
  CHECK_FALSE(big.pass);
  CHECK(m.equal(*big.counterexample, seq_v()));
}

TEST_CASE("d-ideal test on the half-line: point kernel at 0 fails via the ramp") {
  const HalfLineModel m;
  const auto sample = halfline_sample();
  const auto mp = IdealSpec<HalfLineModel>::point_kernel_at(ExtRat::of(Rat(0)));
  const auto verdict = d_ideal_test(m, mp, sample, 100);
  REQUIRE_FALSE(verdict.pass);
  // Z(ramp) = {0} has empty interior, so cl int Z misses the point 0.
  CHECK(m.equal(*verdict.counterexample, ramp_cap()));

  const auto polar = d_ideal_test(
      m, IdealSpec<HalfLineModel>::polar_of(tent12()), sample, 100);
  CHECK(polar.pass);
}

TEST_CASE("d-ideal test on finite spaces never finds counterexamples") {
  for (std::uint32_t k : {1u, 2u, 3u}) {
    const FiniteModel m(k);
    const auto sample = finite_sample(m);
    for (std::uint32_t p = 0; p < k; ++p) {
      const auto verdict =
          d_ideal_test(m, IdealSpec<FiniteModel>::point_kernel_at(p), sample, 100);
      CHECK(verdict.pass);
    }
    const auto zk = d_ideal_test(
        m, IdealSpec<FiniteModel>::zkernel_of(sample[2]), sample, 100);
    CHECK(zk.pass);
  }
}

TEST_CASE("d-ideal test rejects a zero budget") {
  const AlphaNModel m;
  CHECK_THROWS_AS(d_ideal_test(m, IdealSpec<AlphaNModel>::polar_of(seq_v()),
                               alphan_sample(), 0),
                  std::invalid_argument);
}
