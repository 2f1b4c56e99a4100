#pragma once

// Space-generic ideal-theoretic and topological predicates. Every model
// space (alphaN sequences, half-line piecewise-affine functions, finite
// vectors) plugs in through the SpaceModel concept; the predicates below
// are exact given exact model operations.
//
// Notation, relative to a group G of continuous functions with unit 1:
//   coz(g)  — points where g is nonzero; Z(g) its complement.
//   G(g)    — principal ideal {f : |f| <= n|g| for some integer n >= 1}.
//   g^perp  — elements with cozero-set disjoint from coz(g).
//   g^pp    — double polar {f : coz(f) <= cl coz(g)}.
//   I(S)    — kernel {f : Z(f) >= S} of a closed set S.
//   M_p     — point kernel {f : f(p) = 0}.

#include <concepts>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "lgroup/rational.hpp"

namespace lgroup {

template <class M>
concept SpaceModel = requires(const M m, const typename M::Element& f,
                              const typename M::Set& s, const typename M::Point& p,
                              const Rat& q, const Int& n) {
  { m.add(f, f) } -> std::same_as<typename M::Element>;
  { m.negate(f) } -> std::same_as<typename M::Element>;
  { m.meet(f, f) } -> std::same_as<typename M::Element>;
  { m.join(f, f) } -> std::same_as<typename M::Element>;
  { m.abs(f) } -> std::same_as<typename M::Element>;
  { m.scale(n, f) } -> std::same_as<typename M::Element>;
  { m.scale_rat(q, f) } -> std::same_as<typename M::Element>;
  { m.constant(q) } -> std::same_as<typename M::Element>;
  { m.unit() } -> std::same_as<typename M::Element>;
  { m.zero() } -> std::same_as<typename M::Element>;
  { m.equal(f, f) } -> std::same_as<bool>;
  { m.eval(f, p) } -> std::same_as<Rat>;
  { m.coz(f) } -> std::same_as<typename M::Set>;
  { m.set_union(s, s) } -> std::same_as<typename M::Set>;
  { m.set_intersection(s, s) } -> std::same_as<typename M::Set>;
  { m.set_complement(s) } -> std::same_as<typename M::Set>;
  { m.closure(s) } -> std::same_as<typename M::Set>;
  { m.interior(s) } -> std::same_as<typename M::Set>;
  { m.subset(s, s) } -> std::same_as<bool>;
  { m.set_equal(s, s) } -> std::same_as<bool>;
  { m.is_empty(s) } -> std::same_as<bool>;
  { m.is_whole(s) } -> std::same_as<bool>;
  { m.contains(s, p) } -> std::same_as<bool>;
  { m.empty_set() } -> std::same_as<typename M::Set>;
  { m.whole_set() } -> std::same_as<typename M::Set>;
  { m.pick_point(s) } -> std::same_as<std::optional<typename M::Point>>;
  { m.dominance(f, f) } -> std::same_as<std::optional<Int>>;
  { m.realize_open(s) } -> std::same_as<typename M::Element>;
  { m.sample_points() } -> std::same_as<std::vector<typename M::Point>>;
  { M::space_name() } -> std::convertible_to<const char*>;
};

// --- element-pair predicates -------------------------------------------

// f in G(g): some n >= 1 has |f| <= n|g| everywhere. Returns the witness.
template <SpaceModel M>
std::optional<Int> principal_witness(const M& m, const typename M::Element& f,
                                     const typename M::Element& g) {
  return m.dominance(f, g);
}

template <SpaceModel M>
bool in_principal(const M& m, const typename M::Element& f, const typename M::Element& g) {
  return principal_witness(m, f, g).has_value();
}

// f in g^perp: disjoint cozero-sets.
template <SpaceModel M>
bool in_perp(const M& m, const typename M::Element& f, const typename M::Element& g) {
  return m.is_empty(m.set_intersection(m.coz(f), m.coz(g)));
}

// f in g^pp: coz(f) inside the closure of coz(g).
template <SpaceModel M>
bool in_polar(const M& m, const typename M::Element& f, const typename M::Element& g) {
  return m.subset(m.coz(f), m.closure(m.coz(g)));
}

// f in I(Z(g)): Z(f) >= Z(g), i.e. coz(f) <= coz(g).
template <SpaceModel M>
bool in_zkernel(const M& m, const typename M::Element& f, const typename M::Element& g) {
  return m.subset(m.coz(f), m.coz(g));
}

// --- single-element predicates ------------------------------------------

template <SpaceModel M>
bool is_weak_unit(const M& m, const typename M::Element& v) {
  return m.is_whole(m.closure(m.coz(v)));
}

template <SpaceModel M>
bool is_strong_unit(const M& m, const typename M::Element& v) {
  return m.is_whole(m.coz(v));
}

template <SpaceModel M>
bool coz_regular_open(const M& m, const typename M::Element& g) {
  const auto c = m.coz(g);
  return m.set_equal(m.interior(m.closure(c)), c);
}

// Z(g) = cl int Z(g); a De Morgan mirror of coz_regular_open.
template <SpaceModel M>
bool zset_regular_closed(const M& m, const typename M::Element& g) {
  const auto z = m.set_complement(m.coz(g));
  return m.set_equal(m.closure(m.interior(z)), z);
}

template <SpaceModel M>
bool coz_closed(const M& m, const typename M::Element& g) {
  const auto c = m.coz(g);
  return m.set_equal(m.closure(c), c);
}

template <SpaceModel M>
bool clcoz_open(const M& m, const typename M::Element& g) {
  const auto cl = m.closure(m.coz(g));
  return m.set_equal(m.interior(cl), cl);
}

// Both links of the membership chain G(g) <= I(Z(g)) <= g^pp for one
// pair. A theorem, so it must come back true on every input; exposed so
// suites can assert it en masse.
template <SpaceModel M>
bool chain_check(const M& m, const typename M::Element& f, const typename M::Element& g) {
  if (in_principal(m, f, g) && !in_zkernel(m, f, g)) return false;
  if (in_zkernel(m, f, g) && !in_polar(m, f, g)) return false;
  return true;
}

// --- ideals ---------------------------------------------------------------

template <SpaceModel M>
struct IdealSpec {
  enum class Kind { principal, perp, polar, zkernel, point_kernel, closed_kernel };
  Kind kind;
  std::optional<typename M::Element> g;  // principal / perp / polar / zkernel
  std::optional<typename M::Point> p;    // point_kernel
  std::optional<typename M::Set> s;      // closed_kernel

  static IdealSpec principal_of(typename M::Element e) {
    return {Kind::principal, std::move(e), std::nullopt, std::nullopt};
  }
  static IdealSpec perp_of(typename M::Element e) {
    return {Kind::perp, std::move(e), std::nullopt, std::nullopt};
  }
  static IdealSpec polar_of(typename M::Element e) {
    return {Kind::polar, std::move(e), std::nullopt, std::nullopt};
  }
  static IdealSpec zkernel_of(typename M::Element e) {
    return {Kind::zkernel, std::move(e), std::nullopt, std::nullopt};
  }
  static IdealSpec point_kernel_at(typename M::Point pt) {
    return {Kind::point_kernel, std::nullopt, std::move(pt), std::nullopt};
  }
  static IdealSpec closed_kernel_of(typename M::Set set) {
    return {Kind::closed_kernel, std::nullopt, std::nullopt, std::move(set)};
  }
};

// Exact membership, dispatching over the six ideal kinds.
template <SpaceModel M>
bool ideal_contains(const M& m, const IdealSpec<M>& ideal, const typename M::Element& f) {
  using Kind = typename IdealSpec<M>::Kind;
  switch (ideal.kind) {
    case Kind::principal:
      return in_principal(m, f, *ideal.g);
    case Kind::perp:
      return in_perp(m, f, *ideal.g);
    case Kind::polar:
      return in_polar(m, f, *ideal.g);
    case Kind::zkernel:
      return in_zkernel(m, f, *ideal.g);
    case Kind::point_kernel:
      return m.eval(f, *ideal.p) == 0;
    case Kind::closed_kernel: {
      if (!m.set_equal(*ideal.s, m.closure(*ideal.s))) {
        throw std::invalid_argument("closed-kernel ideal requires a closed set");
      }
      // Z(f) >= S  <=>  coz(f) misses S.
      return m.is_empty(m.set_intersection(m.coz(f), *ideal.s));
    }
  }
  throw std::logic_error("unreachable ideal kind");
}

// --- d-ideal test -----------------------------------------------------------

// An ideal I is a d-ideal when g in I forces g^pp <= I.
template <SpaceModel M>
struct DIdealVerdict {
  bool pass = true;
  // Exact counterexample: an element of I whose double polar escapes I.
  std::optional<typename M::Element> counterexample;
  // For the sampled route, the escaping polar member.
  std::optional<typename M::Element> escape;
  std::uint64_t examined = 0;
  bool exact_per_sample = false;  // kernel route: each sampled g checked exactly
};

// Searches sampled elements g in I. For kernel-type ideals the inclusion
// g^pp <= I(S) reduces exactly (via the subset/kernel anti-isomorphism
// and g^pp = I(cl int Z(g))) to S <= cl int Z(g), decided per sampled g.
// For the other kinds, polar members f are drawn from the same sample and
// tested for membership. Counterexamples are exact either way; "pass"
// means no counterexample within the budget.
template <SpaceModel M>
DIdealVerdict<M> d_ideal_test(const M& m, const IdealSpec<M>& ideal,
                              const std::vector<typename M::Element>& sample,
                              std::uint64_t budget) {
  using Kind = typename IdealSpec<M>::Kind;
  if (budget < 1) throw std::invalid_argument("budget must be at least 1");
  DIdealVerdict<M> verdict;

  const bool kernel_route = ideal.kind == Kind::zkernel || ideal.kind == Kind::point_kernel ||
                            ideal.kind == Kind::closed_kernel;
  verdict.exact_per_sample = kernel_route;

  std::uint64_t used = 0;
  for (const auto& g : sample) {
    if (used >= budget) break;
    if (!ideal_contains(m, ideal, g)) continue;
    ++used;
    ++verdict.examined;
    const auto cl_int_z = m.closure(m.interior(m.set_complement(m.coz(g))));
    if (kernel_route) {
      bool ok = true;
      switch (ideal.kind) {
        case Kind::zkernel:
          ok = m.subset(m.set_complement(m.coz(*ideal.g)), cl_int_z);
          break;
        case Kind::point_kernel:
          ok = m.contains(cl_int_z, *ideal.p);
          break;
        case Kind::closed_kernel:
          ok = m.subset(*ideal.s, cl_int_z);
          break;
        default:
          break;
      }
      if (!ok) {
        verdict.pass = false;
        verdict.counterexample = g;
        return verdict;
      }
    } else {
      std::uint64_t inner = 0;
      for (const auto& f : sample) {
        if (inner++ >= 200) break;
        if (!in_polar(m, f, g)) continue;
        if (!ideal_contains(m, ideal, f)) {
          verdict.pass = false;
          verdict.counterexample = g;
          verdict.escape = f;
          return verdict;
        }
      }
    }
  }
  return verdict;
}

}  // namespace lgroup
