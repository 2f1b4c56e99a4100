#include "lgroup/halfline.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lgroup::halfline {

const Rat& ExtRat::value() const {
  if (inf_) throw std::logic_error("the point at infinity has no rational value");
  return v_;
}

std::string Interval::to_string() const {
  std::ostringstream os;
  os << (lo_closed ? "[" : "(") << lo.to_string() << "," << hi.to_string()
     << (hi_closed ? "]" : ")");
  return os.str();
}

// ------------------------------------------------------------ IntervalSet

IntervalSet IntervalSet::whole_space() {
  Interval all;
  all.lo = ExtRat::of(Rat(0));
  all.lo_closed = true;
  all.hi = ExtRat::infinity();
  all.hi_closed = true;
  return of({all});
}

IntervalSet IntervalSet::of(std::vector<Interval> parts) {
  std::vector<Interval> kept;
  kept.reserve(parts.size());
  for (auto& p : parts) {
    if (p.lo < ExtRat::of(Rat(0))) throw std::invalid_argument("interval below 0");
    if (!p.is_empty()) kept.push_back(std::move(p));
  }
  std::sort(kept.begin(), kept.end(), [](const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.lo_closed && !b.lo_closed;
  });
  IntervalSet s;
  for (auto& p : kept) {
    if (!s.parts_.empty()) {
      Interval& cur = s.parts_.back();
      const bool overlaps = p.lo < cur.hi;
      const bool touches = p.lo == cur.hi && (cur.hi_closed || p.lo_closed);
      if (overlaps || touches) {
        if (p.hi > cur.hi) {
          cur.hi = p.hi;
          cur.hi_closed = p.hi_closed;
        } else if (p.hi == cur.hi) {
          cur.hi_closed = cur.hi_closed || p.hi_closed;
        }
        continue;
      }
    }
    s.parts_.push_back(std::move(p));
  }
  return s;
}

bool IntervalSet::contains(const ExtRat& p) const {
  for (const auto& part : parts_) {
    if (part.contains(p)) return true;
  }
  return false;
}

IntervalSet IntervalSet::set_union(const IntervalSet& o) const {
  std::vector<Interval> all(parts_);
  all.insert(all.end(), o.parts_.begin(), o.parts_.end());
  return of(std::move(all));
}

IntervalSet IntervalSet::set_intersection(const IntervalSet& o) const {
  std::vector<Interval> out;
  for (const auto& a : parts_) {
    for (const auto& b : o.parts_) {
      Interval c;
      if (a.lo > b.lo) {
        c.lo = a.lo;
        c.lo_closed = a.lo_closed;
      } else if (b.lo > a.lo) {
        c.lo = b.lo;
        c.lo_closed = b.lo_closed;
      } else {
        c.lo = a.lo;
        c.lo_closed = a.lo_closed && b.lo_closed;
      }
      if (a.hi < b.hi) {
        c.hi = a.hi;
        c.hi_closed = a.hi_closed;
      } else if (b.hi < a.hi) {
        c.hi = b.hi;
        c.hi_closed = b.hi_closed;
      } else {
        c.hi = a.hi;
        c.hi_closed = a.hi_closed && b.hi_closed;
      }
      if (!c.is_empty()) out.push_back(std::move(c));
    }
  }
  return of(std::move(out));
}

IntervalSet IntervalSet::complement() const {
  const ExtRat zero = ExtRat::of(Rat(0));
  const ExtRat inf = ExtRat::infinity();
  if (parts_.empty()) return whole_space();
  std::vector<Interval> out;
  // Gap before the first part.
  {
    Interval gap;
    gap.lo = zero;
    gap.lo_closed = true;
    gap.hi = parts_.front().lo;
    gap.hi_closed = !parts_.front().lo_closed;
    if (!gap.is_empty()) out.push_back(std::move(gap));
  }
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
    Interval gap;
    gap.lo = parts_[i].hi;
    gap.lo_closed = !parts_[i].hi_closed;
    gap.hi = parts_[i + 1].lo;
    gap.hi_closed = !parts_[i + 1].lo_closed;
    if (!gap.is_empty()) out.push_back(std::move(gap));
  }
  {
    Interval gap;
    gap.lo = parts_.back().hi;
    gap.lo_closed = !parts_.back().hi_closed;
    gap.hi = inf;
    gap.hi_closed = true;
    if (!gap.is_empty()) out.push_back(std::move(gap));
  }
  return of(std::move(out));
}

IntervalSet IntervalSet::closure() const {
  std::vector<Interval> out(parts_);
  for (auto& p : out) {
    p.lo_closed = true;
    p.hi_closed = true;
  }
  return of(std::move(out));
}

IntervalSet IntervalSet::interior() const {
  return complement().closure().complement();
}

bool IntervalSet::subset_of(const IntervalSet& o) const {
  return set_intersection(o.complement()).is_empty();
}

bool IntervalSet::same_set(const IntervalSet& o) const {
  if (parts_.size() != o.parts_.size()) return false;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    const auto& a = parts_[i];
    const auto& b = o.parts_[i];
    if (a.lo != b.lo || a.hi != b.hi || a.lo_closed != b.lo_closed ||
        a.hi_closed != b.hi_closed) {
      return false;
    }
  }
  return true;
}

bool IntervalSet::is_whole() const {
  return parts_.size() == 1 && parts_[0].lo == ExtRat::of(Rat(0)) && parts_[0].lo_closed &&
         parts_[0].hi == ExtRat::infinity() && parts_[0].hi_closed;
}

std::optional<ExtRat> IntervalSet::first_point() const {
  if (parts_.empty()) return std::nullopt;
  const Interval& p = parts_.front();
  if (p.lo_closed) return p.lo;
  if (p.hi.is_inf()) return ExtRat::of(p.lo.value() + 1);
  return ExtRat::of((p.lo.value() + p.hi.value()) / 2);
}

std::string IntervalSet::to_string() const {
  if (parts_.empty()) return "{}";
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << " u ";
    os << parts_[i].to_string();
  }
  return os.str();
}

// ------------------------------------------------------------ PwlFunction

void PwlFunction::normalize() {
  std::vector<Rat> bps{breakpoints_[0]};
  std::vector<Rat> sl{slopes_[0]};
  std::vector<Rat> ic{icepts_[0]};
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (slopes_[i] == sl.back() && icepts_[i] == ic.back()) continue;
    bps.push_back(breakpoints_[i]);
    sl.push_back(slopes_[i]);
    ic.push_back(icepts_[i]);
  }
  breakpoints_ = std::move(bps);
  slopes_ = std::move(sl);
  icepts_ = std::move(ic);
}

PwlFunction PwlFunction::from_pieces(std::vector<Rat> breakpoints, std::vector<Rat> slopes,
                                     std::vector<Rat> icepts) {
  if (breakpoints.empty() || breakpoints.size() != slopes.size() ||
      breakpoints.size() != icepts.size()) {
    throw std::invalid_argument("piece arrays must be nonempty and of equal length");
  }
  if (breakpoints[0] != 0) throw std::invalid_argument("first breakpoint must be 0");
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (!(breakpoints[i - 1] < breakpoints[i])) {
      throw std::invalid_argument("breakpoints must be strictly increasing");
    }
    const Rat left = slopes[i - 1] * breakpoints[i] + icepts[i - 1];
    const Rat right = slopes[i] * breakpoints[i] + icepts[i];
    if (left != right) throw std::invalid_argument("discontinuity at an interior breakpoint");
  }
  if (slopes.back() != 0) {
    throw std::invalid_argument("the final piece must be constant (continuity at infinity)");
  }
  PwlFunction f;
  f.breakpoints_ = std::move(breakpoints);
  f.slopes_ = std::move(slopes);
  f.icepts_ = std::move(icepts);
  f.normalize();
  return f;
}

PwlFunction PwlFunction::from_breakpoint_values(const std::vector<Rat>& xs,
                                                const std::vector<Rat>& ys, const Rat& tail) {
  if (xs.empty() || xs.size() != ys.size()) {
    throw std::invalid_argument("breakpoints and values must be nonempty and of equal length");
  }
  if (tail != ys.back()) {
    throw std::invalid_argument("tail value must equal the value at the last breakpoint");
  }
  std::vector<Rat> bps;
  std::vector<Rat> slopes;
  std::vector<Rat> icepts;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const Rat dx = xs[i + 1] - xs[i];
    if (!(dx > 0)) throw std::invalid_argument("breakpoints must be strictly increasing");
    const Rat s = (ys[i + 1] - ys[i]) / dx;
    bps.push_back(xs[i]);
    slopes.push_back(s);
    icepts.push_back(ys[i] - s * xs[i]);
  }
  bps.push_back(xs.back());
  slopes.push_back(Rat(0));
  icepts.push_back(tail);
  return from_pieces(std::move(bps), std::move(slopes), std::move(icepts));
}

PwlFunction PwlFunction::constant(const Rat& c) {
  return from_pieces({Rat(0)}, {Rat(0)}, {c});
}

Rat PwlFunction::eval(const ExtRat& p) const {
  if (p.is_inf()) return icepts_.back();
  const Rat& x = p.value();
  if (x < 0) throw std::invalid_argument("points of the half-line are nonnegative");
  // Last piece whose start is <= x.
  std::size_t i = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x) -
                  breakpoints_.begin() - 1;
  return slopes_[i] * x + icepts_[i];
}

namespace {

// Common refinement: both functions re-expressed over the union of
// breakpoints (plus any extra cut points, which must not duplicate).
std::vector<Rat> merged_breakpoints(const PwlFunction& a, const PwlFunction& b,
                                    const std::vector<Rat>& extra = {}) {
  std::set<Rat> s(a.breakpoints().begin(), a.breakpoints().end());
  s.insert(b.breakpoints().begin(), b.breakpoints().end());
  s.insert(extra.begin(), extra.end());
  return std::vector<Rat>(s.begin(), s.end());
}

struct Refined {
  std::vector<Rat> bps;
  std::vector<Rat> sa, ia;  // a's slope/intercept per merged piece
  std::vector<Rat> sb, ib;
};

Refined refine(const PwlFunction& a, const PwlFunction& b, const std::vector<Rat>& extra = {}) {
  Refined r;
  r.bps = merged_breakpoints(a, b, extra);
  auto piece_of = [](const PwlFunction& f, const Rat& x) {
    return static_cast<std::size_t>(
        std::upper_bound(f.breakpoints().begin(), f.breakpoints().end(), x) -
        f.breakpoints().begin() - 1);
  };
  for (const Rat& x : r.bps) {
    const std::size_t pa = piece_of(a, x);
    const std::size_t pb = piece_of(b, x);
    r.sa.push_back(a.slopes()[pa]);
    r.ia.push_back(a.icepts()[pa]);
    r.sb.push_back(b.slopes()[pb]);
    r.ib.push_back(b.icepts()[pb]);
  }
  return r;
}

}  // namespace

PwlFunction PwlFunction::add(const PwlFunction& o) const {
  Refined r = refine(*this, o);
  std::vector<Rat> slopes, icepts;
  for (std::size_t i = 0; i < r.bps.size(); ++i) {
    slopes.push_back(r.sa[i] + r.sb[i]);
    icepts.push_back(r.ia[i] + r.ib[i]);
  }
  return from_pieces(std::move(r.bps), std::move(slopes), std::move(icepts));
}

PwlFunction PwlFunction::negate() const {
  std::vector<Rat> slopes(slopes_), icepts(icepts_);
  for (auto& s : slopes) s = -s;
  for (auto& c : icepts) c = -c;
  return from_pieces(breakpoints_, std::move(slopes), std::move(icepts));
}

PwlFunction PwlFunction::scale_rat(const Rat& c) const {
  std::vector<Rat> slopes(slopes_), icepts(icepts_);
  for (auto& s : slopes) s *= c;
  for (auto& i : icepts) i *= c;
  return from_pieces(breakpoints_, std::move(slopes), std::move(icepts));
}

namespace {

PwlFunction lattice_op(const PwlFunction& f, const PwlFunction& g, bool is_meet) {
  // Cut at every crossing of the two graphs, then pick per piece.
  Refined r0 = refine(f, g);
  std::vector<Rat> cuts;
  for (std::size_t i = 0; i + 1 < r0.bps.size(); ++i) {
    const Rat ds = r0.sa[i] - r0.sb[i];
    const Rat di = r0.ia[i] - r0.ib[i];
    if (ds == 0) continue;
    const Rat z = -di / ds;
    if (r0.bps[i] < z && z < r0.bps[i + 1]) cuts.push_back(z);
  }
  Refined r = refine(f, g, cuts);
  std::vector<Rat> slopes, icepts;
  const std::size_t n = r.bps.size();
  for (std::size_t i = 0; i < n; ++i) {
    // Difference sign on the piece: constant except possibly 0 at the ends.
    const Rat du = (r.sa[i] - r.sb[i]) * r.bps[i] + (r.ia[i] - r.ib[i]);
    int sign = rat_sign(du);
    if (sign == 0) {
      if (i + 1 < n) {
        sign = rat_sign((r.sa[i] - r.sb[i]) * r.bps[i + 1] + (r.ia[i] - r.ib[i]));
      }
      // Final piece: both constant, so du == 0 means identical there.
    }
    const bool pick_f = is_meet ? sign <= 0 : sign >= 0;
    slopes.push_back(pick_f ? r.sa[i] : r.sb[i]);
    icepts.push_back(pick_f ? r.ia[i] : r.ib[i]);
  }
  return PwlFunction::from_pieces(std::move(r.bps), std::move(slopes), std::move(icepts));
}

}  // namespace

PwlFunction PwlFunction::meet(const PwlFunction& o) const { return lattice_op(*this, o, true); }
PwlFunction PwlFunction::join(const PwlFunction& o) const { return lattice_op(*this, o, false); }

IntervalSet PwlFunction::coz() const {
  std::vector<Interval> parts;
  auto add_part = [&parts](const Rat& u, bool uc, const Rat& v, bool vc) {
    Interval p;
    p.lo = ExtRat::of(u);
    p.lo_closed = uc;
    p.hi = ExtRat::of(v);
    p.hi_closed = vc;
    parts.push_back(std::move(p));
  };
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
    const Rat& u = breakpoints_[i];
    const Rat& v = breakpoints_[i + 1];
    const Rat& s = slopes_[i];
    const Rat& c = icepts_[i];
    if (s == 0) {
      if (c != 0) add_part(u, true, v, true);
      continue;
    }
    const Rat z = -c / s;
    if (z <= u || z >= v) {
      add_part(u, !(z == u), v, !(z == v));
    } else {
      add_part(u, true, z, false);
      add_part(z, false, v, true);
    }
  }
  if (icepts_.back() != 0) {
    Interval tail;
    tail.lo = ExtRat::of(breakpoints_.back());
    tail.lo_closed = true;
    tail.hi = ExtRat::infinity();
    tail.hi_closed = true;
    parts.push_back(std::move(tail));
  }
  return IntervalSet::of(std::move(parts));
}

std::string PwlFunction::to_string() const {
  std::ostringstream os;
  os << "pwl(";
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    if (i) os << "; ";
    os << "x>=" << rat_to_string(breakpoints_[i]) << ": " << rat_to_string(slopes_[i])
       << "*x+" << rat_to_string(icepts_[i]);
  }
  os << ")";
  return os.str();
}

// -------------------------------------------------------------- dominance

PwlDominanceOutcome dominance_explain(const PwlFunction& f, const PwlFunction& g) {
  PwlDominanceOutcome out;
  const IntervalSet cf = f.coz();
  const IntervalSet cg = g.coz();
  const IntervalSet escape = cf.set_intersection(cg.complement());
  if (!escape.is_empty()) {
    out.separating_point = escape.first_point();
    return out;
  }
  const PwlFunction fa = f.abs();
  const PwlFunction ga = g.abs();
  // Cut at the zeros of both so each bounded piece has G nonzero inside;
  // the ratio F/G is then monotone per piece and peaks at an endpoint.
  std::vector<Rat> zero_cuts;
  Refined r0 = refine(fa, ga);
  for (std::size_t i = 0; i + 1 < r0.bps.size(); ++i) {
    for (const auto& [s, c] : {std::pair{r0.sa[i], r0.ia[i]}, std::pair{r0.sb[i], r0.ib[i]}}) {
      if (s == 0) continue;
      const Rat z = -c / s;
      if (r0.bps[i] < z && z < r0.bps[i + 1]) zero_cuts.push_back(z);
    }
  }
  Refined r = refine(fa, ga, zero_cuts);
  const std::size_t n = r.bps.size();
  Rat best(0);
  auto val = [](const Rat& s, const Rat& c, const Rat& x) { return s * x + c; };
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Rat& u = r.bps[i];
    const Rat& v = r.bps[i + 1];
    const Rat fu = val(r.sa[i], r.ia[i], u), fv = val(r.sa[i], r.ia[i], v);
    const Rat gu = val(r.sb[i], r.ib[i], u), gv = val(r.sb[i], r.ib[i], v);
    if (gu == 0 && gv == 0) {
      if (fu != 0 || fv != 0) {
        throw std::logic_error("cozero containment violated on a piece");
      }
      continue;
    }
    if (gu == 0) {
      if (fu != 0) throw std::logic_error("cozero containment violated at a piece endpoint");
      best = std::max(best, Rat(fv / gv));
    } else if (gv == 0) {
      if (fv != 0) throw std::logic_error("cozero containment violated at a piece endpoint");
      best = std::max(best, Rat(fu / gu));
    } else {
      best = std::max(best, std::max(Rat(fu / gu), Rat(fv / gv)));
    }
  }
  // The constant tails cover the value at infinity.
  const Rat ft = fa.value_at_infinity();
  const Rat gt = ga.value_at_infinity();
  if (gt == 0) {
    if (ft != 0) throw std::logic_error("cozero containment violated at infinity");
  } else {
    best = std::max(best, Rat(ft / gt));
  }
  Int bound = rat_ceil(best);
  if (bound < 1) bound = 1;
  out.bound = bound;
  return out;
}

std::optional<Int> dominance(const PwlFunction& f, const PwlFunction& g) {
  return dominance_explain(f, g).bound;
}

// ------------------------------------------------------------ realize_open

PwlFunction realize_open(const IntervalSet& u) {
  if (!u.same_set(u.interior())) {
    throw std::domain_error("set is not open in [0,inf]: " + u.to_string());
  }
  if (u.is_empty()) return PwlFunction::zero();
  if (u.is_whole()) return PwlFunction::unit();
  PwlFunction acc = PwlFunction::zero();
  for (const auto& part : u.parts()) {
    PwlFunction comp = PwlFunction::zero();
    if (part.hi.is_inf() && !part.hi_closed) {
      // Open sets of the form (c, inf) are not cozero sets here: an
      // element positive on them would have a positive constant tail and
      // hence be nonzero at infinity as well.
      throw std::domain_error("open set is not a cozero set of the group: " + u.to_string());
    }
    if (part.lo == ExtRat::of(Rat(0)) && part.lo_closed) {
      const Rat b = part.hi.is_inf() ? Rat(0) : part.hi.value();
      if (part.hi.is_inf()) {
        comp = PwlFunction::unit();  // [0, inf], though is_whole caught it
      } else {
        // [0, b): descending ramp hitting zero exactly at b.
        comp = PwlFunction::from_breakpoint_values({Rat(0), b}, {Rat(1), Rat(0)}, Rat(0));
      }
    } else {
      const Rat a = part.lo.value();
      if (part.hi.is_inf()) {
        // (a, inf]: rise to 1 and stay.
        if (a == 0) {
          comp = PwlFunction::from_breakpoint_values({Rat(0), Rat(1)}, {Rat(0), Rat(1)}, Rat(1));
        } else {
          comp = PwlFunction::from_breakpoint_values({Rat(0), a, a + 1},
                                                     {Rat(0), Rat(0), Rat(1)}, Rat(1));
        }
      } else {
        // (a, b): a tent peaking midway.
        const Rat b = part.hi.value();
        const Rat mid = (a + b) / 2;
        if (a == 0) {
          comp = PwlFunction::from_breakpoint_values({Rat(0), mid, b}, {Rat(0), Rat(1), Rat(0)},
                                                     Rat(0));
        } else {
          comp = PwlFunction::from_breakpoint_values(
              {Rat(0), a, mid, b}, {Rat(0), Rat(0), Rat(1), Rat(0)}, Rat(0));
        }
      }
    }
    acc = acc.add(comp);
  }
  return acc;
}

std::vector<ExtRat> HalfLineModel::sample_points() const {
  std::vector<ExtRat> pts;
  for (const Rat& x : {Rat(0), Rat(1, 2), Rat(1), Rat(3, 2), Rat(2), Rat(3), Rat(5), Rat(10)}) {
    pts.push_back(ExtRat::of(x));
  }
  pts.push_back(ExtRat::infinity());
  return pts;
}

}  // namespace lgroup::halfline
