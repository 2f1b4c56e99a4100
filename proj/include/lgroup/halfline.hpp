#pragma once

// Exact model of the finitely piecewise-affine continuous functions on
// the extended half-line [0, +inf] (one-point compactification of the
// nonnegative reals). An element is affine between consecutive rational
// breakpoints and constant from the last breakpoint on; the constant is
// its value at infinity. Cozero-sets and everything derived from them
// live in the algebra of finite unions of rational intervals.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lgroup/rational.hpp"

namespace lgroup::halfline {

// A point of [0, +inf]: a nonnegative rational or the point at infinity.
class ExtRat {
 public:
  ExtRat() : inf_(false), v_(0) {}
  static ExtRat infinity() {
    ExtRat e;
    e.inf_ = true;
    return e;
  }
  static ExtRat of(Rat v) {
    ExtRat e;
    e.v_ = std::move(v);
    return e;
  }

  bool is_inf() const { return inf_; }
  const Rat& value() const;  // throws on the infinite point

  bool operator==(const ExtRat& o) const {
    return inf_ == o.inf_ && (inf_ || v_ == o.v_);
  }
  bool operator!=(const ExtRat& o) const { return !(*this == o); }
  bool operator<(const ExtRat& o) const {
    if (inf_) return false;
    if (o.inf_) return true;
    return v_ < o.v_;
  }
  bool operator<=(const ExtRat& o) const { return *this < o || *this == o; }
  bool operator>(const ExtRat& o) const { return o < *this; }
  bool operator>=(const ExtRat& o) const { return o <= *this; }

  std::string to_string() const { return inf_ ? "inf" : rat_to_string(v_); }

 private:
  bool inf_;
  Rat v_;
};

struct Interval {
  ExtRat lo;
  bool lo_closed = true;
  ExtRat hi;
  bool hi_closed = true;

  bool is_empty() const {
    if (lo > hi) return true;
    if (lo == hi) return !(lo_closed && hi_closed);
    return false;
  }
  bool contains(const ExtRat& p) const {
    if (p < lo || p > hi) return false;
    if (p == lo && !lo_closed) return false;
    if (p == hi && !hi_closed) return false;
    return true;
  }
  std::string to_string() const;
};

// Finite union of intervals of [0, inf], kept sorted, disjoint and
// non-adjacent (canonical).
class IntervalSet {
 public:
  static IntervalSet empty_set() { return IntervalSet(); }
  static IntervalSet whole_space();
  static IntervalSet of(std::vector<Interval> parts);  // normalizes

  const std::vector<Interval>& parts() const { return parts_; }

  bool contains(const ExtRat& p) const;
  IntervalSet set_union(const IntervalSet& o) const;
  IntervalSet set_intersection(const IntervalSet& o) const;
  IntervalSet complement() const;
  IntervalSet closure() const;
  IntervalSet interior() const;
  bool subset_of(const IntervalSet& o) const;
  bool same_set(const IntervalSet& o) const;
  bool is_empty() const { return parts_.empty(); }
  bool is_whole() const;

  std::optional<ExtRat> first_point() const;
  std::string to_string() const;

 private:
  std::vector<Interval> parts_;
};

// Continuous finitely piecewise-affine function on [0, inf], constant
// near infinity. Immutable value type with a canonical representation
// (maximal pieces: adjacent pieces never share slope and intercept).
class PwlFunction {
 public:
  // Piece i is slope[i]*x + icept[i] on [breakpoints[i], breakpoints[i+1]],
  // the final piece on [breakpoints.back(), inf] must be constant.
  // Continuity across breakpoints is required. Throws std::invalid_argument.
  static PwlFunction from_pieces(std::vector<Rat> breakpoints, std::vector<Rat> slopes,
                                 std::vector<Rat> icepts);
  // Values at given breakpoints (first must be 0), affine in between,
  // constant `tail` from the last breakpoint on; tail must equal the last
  // value (continuity).
  static PwlFunction from_breakpoint_values(const std::vector<Rat>& xs,
                                            const std::vector<Rat>& ys, const Rat& tail);
  static PwlFunction constant(const Rat& c);
  static PwlFunction zero() { return constant(Rat(0)); }
  static PwlFunction unit() { return constant(Rat(1)); }

  const std::vector<Rat>& breakpoints() const { return breakpoints_; }
  const std::vector<Rat>& slopes() const { return slopes_; }
  const std::vector<Rat>& icepts() const { return icepts_; }

  Rat eval(const ExtRat& p) const;
  Rat value_at_infinity() const { return icepts_.back(); }

  PwlFunction add(const PwlFunction& o) const;
  PwlFunction negate() const;
  PwlFunction meet(const PwlFunction& o) const;
  PwlFunction join(const PwlFunction& o) const;
  PwlFunction abs() const { return join(negate()); }
  PwlFunction scale(const Int& k) const { return scale_rat(Rat(k)); }
  PwlFunction scale_rat(const Rat& c) const;

  bool same_function(const PwlFunction& o) const {
    return breakpoints_ == o.breakpoints_ && slopes_ == o.slopes_ && icepts_ == o.icepts_;
  }
  bool is_zero() const { return same_function(zero()); }

  IntervalSet coz() const;
  IntervalSet zero_set() const { return coz().complement(); }

  std::string to_string() const;

 private:
  PwlFunction() = default;
  void normalize();

  std::vector<Rat> breakpoints_;  // breakpoints_[0] == 0, strictly increasing
  std::vector<Rat> slopes_;       // slopes_.back() == 0
  std::vector<Rat> icepts_;
};

struct PwlDominanceOutcome {
  std::optional<Int> bound;
  // When absent: a point of coz(f) \ coz(g) (absence always has one in
  // this model).
  std::optional<ExtRat> separating_point;
};

PwlDominanceOutcome dominance_explain(const PwlFunction& f, const PwlFunction& g);
std::optional<Int> dominance(const PwlFunction& f, const PwlFunction& g);

// Produces an element with cozero-set exactly `u`, or throws
// std::domain_error when `u` is not open or is open but not a cozero set
// of this group (an open set whose complement clusters at infinity from
// one side only, e.g. [0, inf) or (c, inf)).
PwlFunction realize_open(const IntervalSet& u);

struct HalfLineModel {
  using Element = PwlFunction;
  using Set = IntervalSet;
  using Point = ExtRat;

  static constexpr const char* space_name() { return "halfline"; }

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
  Rat eval(const Element& a, const Point& p) const { return a.eval(p); }

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
  bool contains(const Set& a, const Point& p) const { return a.contains(p); }
  Set empty_set() const { return Set::empty_set(); }
  Set whole_set() const { return Set::whole_space(); }
  std::optional<Point> pick_point(const Set& a) const { return a.first_point(); }

  std::optional<Int> dominance(const Element& f, const Element& g) const {
    return halfline::dominance(f, g);
  }
  Element realize_open(const Set& u) const { return halfline::realize_open(u); }

  std::vector<Point> sample_points() const;

  std::string describe_element(const Element& a) const { return a.to_string(); }
  std::string describe_set(const Set& a) const { return a.to_string(); }
  std::string describe_point(const Point& p) const { return p.to_string(); }
};

}  // namespace lgroup::halfline
