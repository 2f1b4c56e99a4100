#include "lgroup/alphan.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lgroup::alphan {

namespace {

std::uint32_t lcm_modulus(std::uint32_t a, std::uint32_t b) {
  const std::uint64_t l = std::lcm<std::uint64_t>(a, b);
  if (l > (1u << 20)) {
    throw std::overflow_error("modulus blow-up beyond 2^20; presentation too irregular");
  }
  return static_cast<std::uint32_t>(l);
}

// The tail with its eventual sign applied, so that for x past the sign
// stability threshold |f(x)| equals abs_tail(tail)(1/x).
TailPoly abs_tail(const TailPoly& p) { return p.sign_near_zero() < 0 ? -p : p; }

}  // namespace

// ---------------------------------------------------------------- TailPoly

TailPoly::TailPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

TailPoly TailPoly::constant(const Rat& c) {
  if (c == 0) return TailPoly();
  return TailPoly(std::vector<Rat>{c});
}

Rat TailPoly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rat(0);
}

Rat TailPoly::eval_at_inverse(std::uint64_t x) const {
  if (x == 0) throw std::invalid_argument("points of alphaN start at 1");
  if (coeffs_.empty()) return Rat(0);
  const Rat t(Int(1), Int(x));
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::optional<int> TailPoly::order() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) return static_cast<int>(k);
  }
  return std::nullopt;
}

int TailPoly::sign_near_zero() const {
  const auto j = order();
  return j ? rat_sign(coeffs_[static_cast<std::size_t>(*j)]) : 0;
}

std::uint64_t TailPoly::sign_stable_from() const {
  const auto jo = order();
  if (!jo) return 1;
  const std::size_t j = static_cast<std::size_t>(*jo);
  const Rat aj = rat_abs(coeffs_[j]);
  Rat maxhi(0);
  for (std::size_t k = j + 1; k < coeffs_.size(); ++k) {
    maxhi = std::max(maxhi, rat_abs(coeffs_[k]));
  }
  if (maxhi == 0) return 1;
  // For t in (0, aj/(aj+maxhi)) the lowest term dominates the rest:
  // |sum_{k>j} c_k t^k| <= maxhi * t^{j+1}/(1-t) < aj * t^j. Hence no
  // roots for x > (aj+maxhi)/aj.
  const Rat bound = (aj + maxhi) / aj;
  return to_u64(rat_floor(bound) + 1);
}

TailPoly TailPoly::operator+(const TailPoly& o) const {
  std::vector<Rat> out(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = coeff(k) + o.coeff(k);
  return TailPoly(std::move(out));
}

TailPoly TailPoly::operator-() const {
  std::vector<Rat> out(coeffs_);
  for (auto& c : out) c = -c;
  return TailPoly(std::move(out));
}

TailPoly TailPoly::operator-(const TailPoly& o) const { return *this + (-o); }

TailPoly TailPoly::scaled(const Rat& c) const {
  if (c == 0) return TailPoly();
  std::vector<Rat> out(coeffs_);
  for (auto& a : out) a *= c;
  return TailPoly(std::move(out));
}

std::string TailPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!first) os << " + ";
    os << rat_to_string(coeffs_[k]);
    if (k == 1) os << "*t";
    if (k > 1) os << "*t^" << k;
    first = false;
  }
  return os.str();
}

std::string AlphaNPoint::to_string() const {
  return at_alpha ? std::string("alpha") : std::to_string(n);
}

// ------------------------------------------------- EventuallyPeriodicSet

EventuallyPeriodicSet EventuallyPeriodicSet::make(std::uint32_t modulus,
                                                  std::set<std::uint32_t> residues,
                                                  std::uint64_t threshold,
                                                  std::set<std::uint64_t> flips,
                                                  bool contains_alpha) {
  if (modulus == 0) throw std::invalid_argument("modulus must be positive");
  for (const auto r : residues) {
    if (r >= modulus) throw std::invalid_argument("residue out of range");
  }
  std::uint64_t th = std::max<std::uint64_t>(threshold, 1);
  for (const auto x : flips) {
    if (x == 0) throw std::invalid_argument("points of alphaN start at 1");
    th = std::max(th, x + 1);
  }
  EventuallyPeriodicSet s;
  s.modulus_ = modulus;
  s.residues_ = std::move(residues);
  s.threshold_ = th;
  s.flips_ = std::move(flips);
  s.alpha_ = contains_alpha;
  return s;
}

EventuallyPeriodicSet EventuallyPeriodicSet::empty_set() {
  return make(1, {}, 1, {}, false);
}

EventuallyPeriodicSet EventuallyPeriodicSet::whole_space() {
  return make(1, {0}, 1, {}, true);
}

bool EventuallyPeriodicSet::contains(std::uint64_t x) const {
  if (x == 0) throw std::invalid_argument("points of alphaN start at 1");
  const bool rule = residues_.count(static_cast<std::uint32_t>(x % modulus_)) != 0;
  return flips_.count(x) ? !rule : rule;
}

EventuallyPeriodicSet EventuallyPeriodicSet::refine(std::uint32_t modulus,
                                                    std::uint64_t threshold) const {
  if (modulus % modulus_ != 0 || threshold < threshold_) {
    throw std::logic_error("refine must not coarsen");
  }
  std::set<std::uint32_t> res;
  for (std::uint32_t r = 0; r < modulus; ++r) {
    if (residues_.count(r % modulus_)) res.insert(r);
  }
  // The rule value at every natural is unchanged, so the flip set is too.
  return make(modulus, std::move(res), threshold, flips_, alpha_);
}

EventuallyPeriodicSet EventuallyPeriodicSet::set_union(const EventuallyPeriodicSet& o) const {
  const std::uint32_t m = lcm_modulus(modulus_, o.modulus_);
  const std::uint64_t n = std::max(threshold_, o.threshold_);
  const auto a = refine(m, n);
  const auto b = o.refine(m, n);
  std::set<std::uint32_t> res;
  for (std::uint32_t r = 0; r < m; ++r) {
    if (a.residues_.count(r) || b.residues_.count(r)) res.insert(r);
  }
  std::set<std::uint64_t> flips;
  for (std::uint64_t x = 1; x < n; ++x) {
    const bool actual = a.contains(x) || b.contains(x);
    const bool rule = res.count(static_cast<std::uint32_t>(x % m)) != 0;
    if (actual != rule) flips.insert(x);
  }
  return make(m, std::move(res), n, std::move(flips), a.alpha_ || b.alpha_);
}

EventuallyPeriodicSet EventuallyPeriodicSet::set_intersection(
    const EventuallyPeriodicSet& o) const {
  return complement().set_union(o.complement()).complement();
}

EventuallyPeriodicSet EventuallyPeriodicSet::complement() const {
  std::set<std::uint32_t> res;
  for (std::uint32_t r = 0; r < modulus_; ++r) {
    if (!residues_.count(r)) res.insert(r);
  }
  // Toggling membership leaves the set of rule-breaking points intact.
  return make(modulus_, std::move(res), threshold_, flips_, !alpha_);
}

EventuallyPeriodicSet EventuallyPeriodicSet::closure() const {
  // Natural points are isolated, so closure can only add alpha, and does
  // exactly when the set has infinitely many naturals, i.e. a residue class.
  if (residues_.empty() || alpha_) return *this;
  return make(modulus_, residues_, threshold_, flips_, true);
}

EventuallyPeriodicSet EventuallyPeriodicSet::interior() const {
  // Naturals are open points; alpha is interior iff the complement meets
  // only finitely many naturals, i.e. every residue class is included.
  if (!alpha_ || residues_.size() == modulus_) return *this;
  return make(modulus_, residues_, threshold_, flips_, false);
}

bool EventuallyPeriodicSet::subset_of(const EventuallyPeriodicSet& o) const {
  if (alpha_ && !o.alpha_) return false;
  const std::uint32_t m = lcm_modulus(modulus_, o.modulus_);
  const std::uint64_t n = std::max(threshold_, o.threshold_);
  const auto a = refine(m, n);
  const auto b = o.refine(m, n);
  for (const auto r : a.residues_) {
    if (!b.residues_.count(r)) return false;
  }
  for (std::uint64_t x = 1; x < n; ++x) {
    if (a.contains(x) && !b.contains(x)) return false;
  }
  return true;
}

bool EventuallyPeriodicSet::same_set(const EventuallyPeriodicSet& o) const {
  const std::uint32_t m = lcm_modulus(modulus_, o.modulus_);
  const std::uint64_t n = std::max(threshold_, o.threshold_);
  const auto a = refine(m, n);
  const auto b = o.refine(m, n);
  return a.alpha_ == b.alpha_ && a.residues_ == b.residues_ && a.flips_ == b.flips_;
}

bool EventuallyPeriodicSet::is_empty() const {
  return !alpha_ && residues_.empty() && flips_.empty();
}

bool EventuallyPeriodicSet::is_whole() const {
  return alpha_ && residues_.size() == modulus_ && flips_.empty();
}

std::optional<AlphaNPoint> EventuallyPeriodicSet::first_point() const {
  for (std::uint64_t x = 1; x <= threshold_ + modulus_; ++x) {
    if (contains(x)) return AlphaNPoint::natural(x);
  }
  if (alpha_) return AlphaNPoint::alpha();
  return std::nullopt;
}

std::vector<std::uint64_t> EventuallyPeriodicSet::naturals_below(std::uint64_t bound) const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 1; x < bound; ++x) {
    if (contains(x)) out.push_back(x);
  }
  return out;
}

std::string EventuallyPeriodicSet::to_string() const {
  std::ostringstream os;
  os << "{residues";
  if (residues_.empty()) {
    os << " (none)";
  } else {
    os << " {";
    bool first = true;
    for (const auto r : residues_) {
      if (!first) os << ",";
      os << r;
      first = false;
    }
    os << "} mod " << modulus_;
  }
  os << " from " << threshold_;
  if (!flips_.empty()) {
    os << "; toggled {";
    bool first = true;
    for (const auto x : flips_) {
      if (!first) os << ",";
      os << x;
      first = false;
    }
    os << "}";
  }
  os << "; alpha " << (alpha_ ? "in" : "out") << "}";
  return os.str();
}

// --------------------------------------------------- AsymptoticSequence

AsymptoticSequence AsymptoticSequence::make(std::uint32_t modulus,
                                            std::vector<TailPoly> tails,
                                            Rat alpha_value,
                                            std::uint64_t min_threshold,
                                            const std::map<std::uint64_t, Rat>& explicit_values) {
  if (modulus == 0) throw std::invalid_argument("modulus must be positive");
  if (tails.size() != modulus) {
    throw std::invalid_argument("tail count must equal the modulus");
  }
  for (const auto& t : tails) {
    if (t.constant_term() != alpha_value) {
      throw std::invalid_argument(
          "discontinuity at alpha: a tail's limit differs from the alpha value");
    }
  }
  std::uint64_t n = std::max<std::uint64_t>(min_threshold, 1);
  for (const auto& t : tails) n = std::max(n, t.sign_stable_from());
  for (const auto& [x, v] : explicit_values) {
    (void)v;
    if (x == 0) throw std::invalid_argument("points of alphaN start at 1");
    n = std::max(n, x + 1);
  }
  AsymptoticSequence s;
  s.modulus_ = modulus;
  s.tails_ = std::move(tails);
  s.threshold_ = n;
  s.alpha_ = std::move(alpha_value);
  for (const auto& [x, v] : explicit_values) {
    if (s.tails_[x % modulus].eval_at_inverse(x) != v) s.exceptions_.emplace(x, v);
  }
  return s;
}

AsymptoticSequence AsymptoticSequence::constant(const Rat& c) {
  return make(1, {TailPoly::constant(c)}, c);
}

Rat AsymptoticSequence::value_at(std::uint64_t x) const {
  if (x == 0) throw std::invalid_argument("points of alphaN start at 1");
  const auto it = exceptions_.find(x);
  if (it != exceptions_.end()) return it->second;
  return tails_[x % modulus_].eval_at_inverse(x);
}

AsymptoticSequence AsymptoticSequence::refine(std::uint32_t modulus,
                                              std::uint64_t threshold) const {
  if (modulus % modulus_ != 0 || threshold < threshold_) {
    throw std::logic_error("refine must not coarsen");
  }
  AsymptoticSequence s;
  s.modulus_ = modulus;
  s.tails_.reserve(modulus);
  for (std::uint32_t r = 0; r < modulus; ++r) s.tails_.push_back(tails_[r % modulus_]);
  s.threshold_ = threshold;
  s.exceptions_ = exceptions_;
  s.alpha_ = alpha_;
  return s;
}

AsymptoticSequence AsymptoticSequence::add(const AsymptoticSequence& o) const {
  const std::uint32_t m = lcm_modulus(modulus_, o.modulus_);
  const std::uint64_t n = std::max(threshold_, o.threshold_);
  const auto a = refine(m, n);
  const auto b = o.refine(m, n);
  std::vector<TailPoly> tails;
  tails.reserve(m);
  for (std::uint32_t r = 0; r < m; ++r) tails.push_back(a.tails_[r] + b.tails_[r]);
  std::map<std::uint64_t, Rat> values;
  for (std::uint64_t x = 1; x < n; ++x) values.emplace(x, a.value_at(x) + b.value_at(x));
  return make(m, std::move(tails), a.alpha_ + b.alpha_, n, values);
}

AsymptoticSequence AsymptoticSequence::negate() const {
  AsymptoticSequence s;
  s.modulus_ = modulus_;
  s.tails_.reserve(modulus_);
  for (const auto& t : tails_) s.tails_.push_back(-t);
  s.threshold_ = threshold_;
  for (const auto& [x, v] : exceptions_) s.exceptions_.emplace(x, -v);
  s.alpha_ = -alpha_;
  return s;
}

namespace {

AsymptoticSequence lattice_op(const AsymptoticSequence& lhs, const AsymptoticSequence& rhs,
                              bool is_meet) {
  const std::uint32_t m = lcm_modulus(lhs.modulus(), rhs.modulus());
  std::uint64_t n = std::max(lhs.threshold(), rhs.threshold());
  const auto a = lhs.refine(m, n);
  const auto b = rhs.refine(m, n);

  // Per residue class the eventual min/max follows whichever tail is
  // eventually smaller/larger; the crossover is certified by the sign
  // stability bound of the difference polynomial.
  std::vector<TailPoly> tails;
  tails.reserve(m);
  for (std::uint32_t r = 0; r < m; ++r) {
    const TailPoly diff = a.tails()[r] - b.tails()[r];
    if (diff.is_zero()) {
      tails.push_back(a.tails()[r]);
      continue;
    }
    n = std::max(n, diff.sign_stable_from());
    const bool a_smaller = diff.sign_near_zero() < 0;
    const bool pick_a = is_meet ? a_smaller : !a_smaller;
    tails.push_back(pick_a ? a.tails()[r] : b.tails()[r]);
  }

  std::map<std::uint64_t, Rat> values;
  for (std::uint64_t x = 1; x < n; ++x) {
    const Rat va = a.value_at(x);
    const Rat vb = b.value_at(x);
    values.emplace(x, is_meet ? std::min(va, vb) : std::max(va, vb));
  }
  const Rat alpha = is_meet ? std::min(a.alpha_value(), b.alpha_value())
                            : std::max(a.alpha_value(), b.alpha_value());
  return AsymptoticSequence::make(m, std::move(tails), alpha, n, values);
}

}  // namespace

AsymptoticSequence AsymptoticSequence::meet(const AsymptoticSequence& o) const {
  return lattice_op(*this, o, true);
}

AsymptoticSequence AsymptoticSequence::join(const AsymptoticSequence& o) const {
  return lattice_op(*this, o, false);
}

AsymptoticSequence AsymptoticSequence::abs() const { return join(negate()); }

AsymptoticSequence AsymptoticSequence::scale(const Int& k) const { return scale_rat(Rat(k)); }

AsymptoticSequence AsymptoticSequence::scale_rat(const Rat& c) const {
  if (c == 0) return zero();
  AsymptoticSequence s;
  s.modulus_ = modulus_;
  s.tails_.reserve(modulus_);
  for (const auto& t : tails_) s.tails_.push_back(t.scaled(c));
  s.threshold_ = threshold_;
  for (const auto& [x, v] : exceptions_) s.exceptions_.emplace(x, v * c);
  s.alpha_ = alpha_ * c;
  return s;
}

bool AsymptoticSequence::same_function(const AsymptoticSequence& o) const {
  const std::uint32_t m = lcm_modulus(modulus_, o.modulus_);
  const std::uint64_t n = std::max(threshold_, o.threshold_);
  const auto a = refine(m, n);
  const auto b = o.refine(m, n);
  return a.alpha_ == b.alpha_ && a.tails_ == b.tails_ && a.exceptions_ == b.exceptions_;
}

bool AsymptoticSequence::is_zero() const {
  if (alpha_ != 0 || !exceptions_.empty()) return false;
  for (const auto& t : tails_) {
    if (!t.is_zero()) return false;
  }
  return true;
}

EventuallyPeriodicSet AsymptoticSequence::coz() const {
  std::set<std::uint32_t> residues;
  for (std::uint32_t r = 0; r < modulus_; ++r) {
    if (!tails_[r].is_zero()) residues.insert(r);
  }
  std::set<std::uint64_t> flips;
  for (std::uint64_t x = 1; x < threshold_; ++x) {
    const bool actual = value_at(x) != 0;
    const bool rule = residues.count(static_cast<std::uint32_t>(x % modulus_)) != 0;
    if (actual != rule) flips.insert(x);
  }
  return EventuallyPeriodicSet::make(modulus_, std::move(residues), threshold_,
                                     std::move(flips), alpha_ != 0);
}

std::string AsymptoticSequence::to_string() const {
  std::ostringstream os;
  os << "seq(mod " << modulus_ << "; ";
  for (std::uint32_t r = 0; r < modulus_; ++r) {
    if (r) os << ", ";
    os << "[" << r << "] " << tails_[r].to_string();
  }
  os << "; alpha " << rat_to_string(alpha_);
  if (!exceptions_.empty()) {
    os << "; at";
    for (const auto& [x, v] : exceptions_) os << " " << x << ":" << rat_to_string(v);
  }
  os << ")";
  return os.str();
}

// ----------------------------------------------------------- dominance

DominanceOutcome dominance_explain(const AsymptoticSequence& f, const AsymptoticSequence& g) {
  DominanceOutcome out;
  const auto cf = f.coz();
  const auto cg = g.coz();
  if (!cf.subset_of(cg)) {
    out.reason = DominanceOutcome::Reason::coz_not_contained;
    out.separating_point = cf.set_intersection(cg.complement()).first_point();
    return out;
  }

  const std::uint32_t m = lcm_modulus(f.modulus(), g.modulus());
  const std::uint64_t n0 = std::max(f.threshold(), g.threshold());
  const auto a = f.refine(m, n0);
  const auto b = g.refine(m, n0);

  // f must not decay strictly slower than g on any residue class.
  for (std::uint32_t r = 0; r < m; ++r) {
    const auto of = a.tails()[r].order();
    const auto og = b.tails()[r].order();
    const bool f_slower = of && (!og || *of < *og);
    if (f_slower) {
      out.reason = DominanceOutcome::Reason::order_deficit;
      out.order_certificate = DominanceOutcome::OrderCertificate{r, of, og};
      return out;
    }
  }

  // Candidate bound: at least every leading-coefficient ratio on classes
  // of equal decay order, and covering the limit values.
  Int n = 1;
  for (std::uint32_t r = 0; r < m; ++r) {
    const auto of = a.tails()[r].order();
    const auto og = b.tails()[r].order();
    if (of && og && *of == *og) {
      const Rat ratio = rat_abs(a.tails()[r].coeff(static_cast<std::size_t>(*of))) /
                        rat_abs(b.tails()[r].coeff(static_cast<std::size_t>(*og)));
      n = std::max(n, rat_ceil(ratio));
    }
  }
  if (rat_abs(b.alpha_value()) > 0) {
    n = std::max(n, rat_ceil(rat_abs(a.alpha_value()) / rat_abs(b.alpha_value())));
  }

  for (int iter = 0; iter < 64; ++iter) {
    Int needed = n;
    bool ok = true;
    // Certify n|g| - |f| >= 0 beyond a scan horizon via root bounds...
    std::uint64_t scan_to = n0;
    for (std::uint32_t r = 0; r < m; ++r) {
      const TailPoly p = abs_tail(b.tails()[r]).scaled(Rat(n)) - abs_tail(a.tails()[r]);
      if (p.is_zero()) continue;
      if (p.sign_near_zero() < 0) {
        // n matches the leading ratio exactly but loses on lower-order
        // terms; the margin reappears one step up.
        ok = false;
        needed = n + 1;
      }
      scan_to = std::max(scan_to, p.sign_stable_from());
    }
    // ...and check the finite region pointwise.
    if (rat_abs(f.alpha_value()) > Rat(n) * rat_abs(g.alpha_value())) {
      ok = false;
      needed = std::max(needed, rat_ceil(rat_abs(f.alpha_value()) / rat_abs(g.alpha_value())));
    }
    for (std::uint64_t x = 1; x < scan_to; ++x) {
      const Rat fa = rat_abs(f.value_at(x));
      if (fa == 0) continue;
      const Rat ga = rat_abs(g.value_at(x));  // > 0 since coz(f) <= coz(g)
      if (fa > Rat(n) * ga) {
        ok = false;
        needed = std::max(needed, rat_ceil(fa / ga));
      }
    }
    if (ok) {
      out.bound = n;
      return out;
    }
    n = needed;
  }
  throw std::logic_error("dominance certification did not converge");
}

std::optional<Int> dominance(const AsymptoticSequence& f, const AsymptoticSequence& g) {
  return dominance_explain(f, g).bound;
}

// -------------------------------------------------------- realize_open

AsymptoticSequence realize_open(const EventuallyPeriodicSet& u) {
  if (!u.same_set(u.interior())) {
    throw std::domain_error("set is not open in alphaN: " + u.to_string());
  }
  if (u.contains_alpha()) {
    // Open and containing alpha means a finite complement inside the
    // naturals; take the characteristic-like function 1 with zeros there.
    const auto comp = u.complement();
    std::map<std::uint64_t, Rat> values;
    for (const auto x : comp.naturals_below(comp.threshold())) values.emplace(x, Rat(0));
    return AsymptoticSequence::make(1, {TailPoly::constant(1)}, 1, u.threshold(), values);
  }
  // A subset of the naturals: 1/x on members keeps continuity at alpha.
  std::vector<TailPoly> tails;
  tails.reserve(u.modulus());
  for (std::uint32_t r = 0; r < u.modulus(); ++r) {
    if (u.residues().count(r)) {
      tails.push_back(TailPoly(std::vector<Rat>{Rat(0), Rat(1)}));
    } else {
      tails.push_back(TailPoly());
    }
  }
  std::map<std::uint64_t, Rat> values;
  for (std::uint64_t x = 1; x < u.threshold(); ++x) {
    values.emplace(x, u.contains(x) ? Rat(Int(1), Int(x)) : Rat(0));
  }
  return AsymptoticSequence::make(u.modulus(), std::move(tails), Rat(0), u.threshold(), values);
}

std::vector<AlphaNPoint> AlphaNModel::sample_points() const {
  std::vector<AlphaNPoint> pts;
  for (std::uint64_t x = 1; x <= 12; ++x) pts.push_back(AlphaNPoint::natural(x));
  pts.push_back(AlphaNPoint::alpha());
  return pts;
}

}  // namespace lgroup::alphan
