#pragma once

// Exact model of lattice-ordered groups of continuous functions on the
// one-point compactification alphaN = {1, 2, 3, ...} ∪ {alpha}.
//
// An element is a sequence that is eventually polynomial in 1/x on each
// residue class modulo m: below a threshold N0 the values are explicit,
// from N0 on the value at x is tail[x mod m](1/x). Continuity at alpha
// forces every tail's constant term to equal the declared limit value.
//
// The representation is kept canonical:
//   * tails have no trailing zero coefficients;
//   * explicit values are stored only where they differ from the tail
//     ("exceptions"), and only at positions < N0;
//   * N0 is large enough that every tail is either identically zero or
//     zero-free on (0, 1/N0] (sign stability), so the cozero-set of the
//     tail region is a plain union of residue classes.
//
// Subsets of alphaN that arise as cozero-sets and from the closure /
// interior / Boolean algebra over them are eventually periodic: a union
// of residue classes mod m past a threshold, finitely many flipped
// points below it, plus an alpha membership flag.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lgroup/rational.hpp"

namespace lgroup::alphan {

// Polynomial in the variable t = 1/x, evaluated at positive integers x.
class TailPoly {
 public:
  TailPoly() = default;  // zero polynomial
  explicit TailPoly(std::vector<Rat> coeffs);

  static TailPoly constant(const Rat& c);

  const std::vector<Rat>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // Coefficient of t^k (0 when k exceeds the degree).
  Rat coeff(std::size_t k) const;
  Rat constant_term() const { return coeff(0); }

  // Value at t = 1/x for an integer x >= 1.
  Rat eval_at_inverse(std::uint64_t x) const;

  // Index of the lowest nonzero coefficient; nullopt for the zero poly.
  // This is the decay order: the sequence behaves like c * x^(-order).
  std::optional<int> order() const;

  // Sign of the polynomial as t -> 0+ (equivalently of the sequence for
  // all large x): the sign of the lowest nonzero coefficient.
  int sign_near_zero() const;

  // Smallest X >= 1 such that for every integer x >= X the value at
  // t = 1/x is nonzero with sign sign_near_zero(). Returns 1 for the
  // zero polynomial. Certified by a root bound, no floating point.
  std::uint64_t sign_stable_from() const;

  TailPoly operator+(const TailPoly& o) const;
  TailPoly operator-() const;
  TailPoly operator-(const TailPoly& o) const;
  TailPoly scaled(const Rat& c) const;
  bool operator==(const TailPoly& o) const { return coeffs_ == o.coeffs_; }

  std::string to_string() const;  // e.g. "1/2 + 3*t^2"

 private:
  std::vector<Rat> coeffs_;  // coeffs_[k] multiplies t^k; no trailing zeros
};

struct AlphaNPoint {
  bool at_alpha = false;
  std::uint64_t n = 0;  // >= 1 when !at_alpha

  static AlphaNPoint alpha() { return {true, 0}; }
  static AlphaNPoint natural(std::uint64_t n) { return {false, n}; }
  bool operator==(const AlphaNPoint& o) const {
    return at_alpha == o.at_alpha && (at_alpha || n == o.n);
  }
  std::string to_string() const;
};

// Eventually periodic subset of alphaN. Membership of a natural x:
// x is in the set iff (x mod m in residues) XOR (x in flips); flips is a
// finite set of positions below the threshold. alpha membership is a flag.
class EventuallyPeriodicSet {
 public:
  // `flips` lists naturals whose membership differs from the residue rule.
  static EventuallyPeriodicSet make(std::uint32_t modulus,
                                    std::set<std::uint32_t> residues,
                                    std::uint64_t threshold,
                                    std::set<std::uint64_t> flips,
                                    bool contains_alpha);
  static EventuallyPeriodicSet empty_set();
  static EventuallyPeriodicSet whole_space();

  std::uint32_t modulus() const { return modulus_; }
  const std::set<std::uint32_t>& residues() const { return residues_; }
  std::uint64_t threshold() const { return threshold_; }
  const std::set<std::uint64_t>& flips() const { return flips_; }
  bool contains_alpha() const { return alpha_; }

  bool contains(std::uint64_t x) const;
  bool contains_point(const AlphaNPoint& p) const {
    return p.at_alpha ? alpha_ : contains(p.n);
  }

  // Same set re-expressed with modulus a multiple of the current one and
  // a threshold at least the current one.
  EventuallyPeriodicSet refine(std::uint32_t modulus, std::uint64_t threshold) const;

  EventuallyPeriodicSet set_union(const EventuallyPeriodicSet& o) const;
  EventuallyPeriodicSet set_intersection(const EventuallyPeriodicSet& o) const;
  EventuallyPeriodicSet complement() const;
  EventuallyPeriodicSet closure() const;
  EventuallyPeriodicSet interior() const;

  bool subset_of(const EventuallyPeriodicSet& o) const;
  bool same_set(const EventuallyPeriodicSet& o) const;
  bool is_empty() const;
  bool is_whole() const;

  // Deterministic representative: the smallest natural member if any,
  // else alpha if present, else nullopt.
  std::optional<AlphaNPoint> first_point() const;

  // All natural members < bound (useful when residues() is empty, where
  // it enumerates the whole set).
  std::vector<std::uint64_t> naturals_below(std::uint64_t bound) const;

  std::string to_string() const;

 private:
  std::uint32_t modulus_ = 1;
  std::set<std::uint32_t> residues_;
  std::uint64_t threshold_ = 1;
  std::set<std::uint64_t> flips_;
  bool alpha_ = false;
};

// A continuous function on alphaN, eventually polynomial in 1/x per
// residue class. Immutable value type.
class AsymptoticSequence {
 public:
  // Canonicalizing factory. `tails` must have size `modulus`; every
  // tail's constant term must equal `alpha_value` (continuity). Values
  // in `explicit_values` override the tails at the given positions; the
  // threshold is raised as needed so all exceptions sit below it and all
  // tails are sign-stable beyond it. Throws std::invalid_argument on a
  // malformed description (zero modulus, continuity violation, position 0).
  static AsymptoticSequence make(std::uint32_t modulus,
                                 std::vector<TailPoly> tails,
                                 Rat alpha_value,
                                 std::uint64_t min_threshold = 1,
                                 const std::map<std::uint64_t, Rat>& explicit_values = {});

  static AsymptoticSequence constant(const Rat& c);
  static AsymptoticSequence zero() { return constant(Rat(0)); }
  static AsymptoticSequence unit() { return constant(Rat(1)); }

  std::uint32_t modulus() const { return modulus_; }
  std::uint64_t threshold() const { return threshold_; }
  const std::vector<TailPoly>& tails() const { return tails_; }
  const std::map<std::uint64_t, Rat>& exceptions() const { return exceptions_; }
  const Rat& alpha_value() const { return alpha_; }

  Rat value_at(std::uint64_t x) const;
  Rat value_at_point(const AlphaNPoint& p) const {
    return p.at_alpha ? alpha_ : value_at(p.n);
  }

  AsymptoticSequence refine(std::uint32_t modulus, std::uint64_t threshold) const;

  AsymptoticSequence add(const AsymptoticSequence& o) const;
  AsymptoticSequence negate() const;
  AsymptoticSequence meet(const AsymptoticSequence& o) const;
  AsymptoticSequence join(const AsymptoticSequence& o) const;
  AsymptoticSequence abs() const;
  AsymptoticSequence scale(const Int& k) const;
  // Scaling by an arbitrary rational keeps the group divisible; used by
  // constant formation and by family normal forms.
  AsymptoticSequence scale_rat(const Rat& c) const;

  bool same_function(const AsymptoticSequence& o) const;
  bool is_zero() const;

  EventuallyPeriodicSet coz() const;
  EventuallyPeriodicSet zero_set() const { return coz().complement(); }

  std::string to_string() const;

 private:
  std::uint32_t modulus_ = 1;
  std::vector<TailPoly> tails_;
  std::uint64_t threshold_ = 1;
  std::map<std::uint64_t, Rat> exceptions_;
  Rat alpha_ = 0;
};

// Outcome of the dominance decision |f| <= n|g|.
struct DominanceOutcome {
  // Smallest-found certified witness when f lies in the principal ideal
  // generated by g; nullopt otherwise.
  std::optional<Int> bound;

  enum class Reason { dominated, coz_not_contained, order_deficit };
  Reason reason = Reason::dominated;

  // When reason == coz_not_contained: a point of coz(f) \ coz(g).
  std::optional<AlphaNPoint> separating_point;
  // When reason == order_deficit: residue class where f decays strictly
  // slower than g (order_f < order_g, with the zero tail at +infinity).
  struct OrderCertificate {
    std::uint32_t residue = 0;
    std::optional<int> order_f;  // nullopt = zero tail
    std::optional<int> order_g;
  };
  std::optional<OrderCertificate> order_certificate;
};

// Decides whether some integer n >= 1 satisfies |f| <= n|g| pointwise,
// and returns a certified n when so. Exact, terminates always.
DominanceOutcome dominance_explain(const AsymptoticSequence& f, const AsymptoticSequence& g);
std::optional<Int> dominance(const AsymptoticSequence& f, const AsymptoticSequence& g);

// Produces an element whose cozero-set is exactly `u`. Throws
// std::domain_error when `u` is not open (not every open set fails:
// every open subset of alphaN in this algebra is realizable).
AsymptoticSequence realize_open(const EventuallyPeriodicSet& u);

// Value-type facade satisfying the SpaceModel concept in predicates.hpp.
struct AlphaNModel {
  using Element = AsymptoticSequence;
  using Set = EventuallyPeriodicSet;
  using Point = AlphaNPoint;

  static constexpr const char* space_name() { return "alphaN"; }

  Element add(const Element& a, const Element& b) const { return a.add(b); }
  Element negate(const Element& a) const { return a.negate(); }
  Element meet(const Element& a, const Element& b) const { return a.meet(b); }
  Element join(const Element& a, const Element& b) const { return a.join(b); }
  Element abs(const Element& a) const { return a.abs(); }
  Element scale(const Int& k, const Element& a) const { return a.scale(k); }
  Element scale_rat(const Rat& c, const Element& a) const { return a.scale_rat(c); }
  Element constant(const Rat& c) const { return Element::constant(c); }
  Element unit() const { return Element::unit(); }
  Element zero() const { return Element::zero(); }
  bool equal(const Element& a, const Element& b) const { return a.same_function(b); }
  Rat eval(const Element& a, const Point& p) const { return a.value_at_point(p); }

  Set coz(const Element& a) const { return a.coz(); }
  Set set_union(const Set& a, const Set& b) const { return a.set_union(b); }
  Set set_intersection(const Set& a, const Set& b) const { return a.set_intersection(b); }
  Set set_complement(const Set& a) const { return a.complement(); }
  Set closure(const Set& a) const { return a.closure(); }
  Set interior(const Set& a) const { return a.interior(); }
  bool subset(const Set& a, const Set& b) const { return a.subset_of(b); }
  bool set_equal(const Set& a, const Set& b) const { return a.same_set(b); }
  bool is_empty(const Set& a) const { return a.is_empty(); }
  bool is_whole(const Set& a) const { return a.is_whole(); }
  bool contains(const Set& a, const Point& p) const { return a.contains_point(p); }
  Set empty_set() const { return Set::empty_set(); }
  Set whole_set() const { return Set::whole_space(); }
  std::optional<Point> pick_point(const Set& a) const { return a.first_point(); }

  std::optional<Int> dominance(const Element& f, const Element& g) const {
    return alphan::dominance(f, g);
  }
  Element realize_open(const Set& u) const { return alphan::realize_open(u); }

  // Deterministic sample of points used by budgeted searches.
  std::vector<Point> sample_points() const;

  std::string describe_element(const Element& a) const { return a.to_string(); }
  std::string describe_set(const Set& a) const { return a.to_string(); }
  std::string describe_point(const Point& p) const { return p.to_string(); }
};

}  // namespace lgroup::alphan
