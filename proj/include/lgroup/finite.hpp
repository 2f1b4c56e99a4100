#pragma once

// Exact model of C(K) for a finite discrete space K = {0, ..., k-1}.
// Elements are rational vectors; every subset is clopen. This is the
// degenerate end of the theory: all ideal classes coincide, and kernel
// ideals correspond anti-isomorphically to subsets.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lgroup/rational.hpp"

namespace lgroup::finite {

class FiniteVector {
 public:
  FiniteVector() = default;
  explicit FiniteVector(std::vector<Rat> values) : v_(std::move(values)) {}

  std::size_t size() const { return v_.size(); }
  const Rat& at(std::size_t i) const { return v_.at(i); }
  const std::vector<Rat>& values() const { return v_; }

  bool operator==(const FiniteVector& o) const { return v_ == o.v_; }
  std::string to_string() const;

 private:
  std::vector<Rat> v_;
};

class FiniteSubset {
 public:
  FiniteSubset() = default;
  FiniteSubset(std::uint32_t size, std::uint32_t bits);

  std::uint32_t size() const { return size_; }
  std::uint32_t bits() const { return bits_; }
  bool contains(std::uint32_t i) const;
  bool is_empty() const { return bits_ == 0; }
  std::string to_string() const;

  bool operator==(const FiniteSubset& o) const { return size_ == o.size_ && bits_ == o.bits_; }

 private:
  std::uint32_t size_ = 0;
  std::uint32_t bits_ = 0;
};

// Model instance; carries the space size at runtime.
struct FiniteModel {
  std::uint32_t k = 1;

  explicit FiniteModel(std::uint32_t size = 1);

  using Element = FiniteVector;
  using Set = FiniteSubset;
  using Point = std::uint32_t;

  static constexpr const char* space_name() { return "finite"; }

  Element add(const Element& a, const Element& b) const;
  Element negate(const Element& a) const;
  Element meet(const Element& a, const Element& b) const;
  Element join(const Element& a, const Element& b) const;
  Element abs(const Element& a) const;
  Element scale(const Int& n, const Element& a) const;
  Element scale_rat(const Rat& c, const Element& a) const;
  Element constant(const Rat& c) const;
  Element unit() const { return constant(Rat(1)); }
  Element zero() const { return constant(Rat(0)); }
  bool equal(const Element& a, const Element& b) const { return check(a) == check(b); }
  Rat eval(const Element& a, const Point& p) const;

  Set coz(const Element& a) const;
  Set set_union(const Set& a, const Set& b) const;
  Set set_intersection(const Set& a, const Set& b) const;
  Set set_complement(const Set& a) const;
  // Discrete topology: every set is clopen.
  Set closure(const Set& a) const { return a; }
  Set interior(const Set& a) const { return a; }
  bool subset(const Set& a, const Set& b) const;
  bool set_equal(const Set& a, const Set& b) const { return a == b; }
  bool is_empty(const Set& a) const { return a.bits() == 0; }
  bool is_whole(const Set& a) const { return a.bits() == full_bits(); }
  bool contains(const Set& a, const Point& p) const { return a.contains(p); }
  Set empty_set() const { return Set(k, 0); }
  Set whole_set() const { return Set(k, full_bits()); }
  std::optional<Point> pick_point(const Set& a) const;

  std::optional<Int> dominance(const Element& f, const Element& g) const;
  Element realize_open(const Set& u) const;  // total: every subset is open

  std::vector<Point> sample_points() const;

  std::string describe_element(const Element& a) const { return a.to_string(); }
  std::string describe_set(const Set& a) const { return a.to_string(); }
  std::string describe_point(const Point& p) const { return std::to_string(p); }

  std::uint32_t full_bits() const {
    return k >= 32 ? 0xffffffffu : ((1u << k) - 1u);
  }

 private:
  const FiniteVector& check(const FiniteVector& a) const;
};

// Exhaustive verification that S |-> {f : f vanishes on S} reverses
// inclusion, is injective, and swaps union/intersection with
// intersection/sum, over all pairs of subsets of {0,...,k-1}.
// Ideal membership is probed on all indicator-like elements.
struct DualityReport {
  bool ok = false;
  std::uint64_t pairs_checked = 0;
  std::string detail;  // first failure, empty when ok
};

DualityReport verify_anti_isomorphism(std::uint32_t k);

// Element-wise verification that C(K) for discrete K lands in every
// class: each cozero set of a sampled element is clopen (hence closed,
// regular open, and with open closure), and dominance produces a bound
// whenever supports nest. The sample is every indicator, scaled
// indicators, and mixed-denominator vectors.
DualityReport verify_finite_classes(std::uint32_t k);

}  // namespace lgroup::finite
