#include "lgroup/finite.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lgroup::finite {

std::string FiniteVector::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (i) os << ", ";
    os << rat_to_string(v_[i]);
  }
  os << ")";
  return os.str();
}

FiniteSubset::FiniteSubset(std::uint32_t size, std::uint32_t bits) : size_(size), bits_(bits) {
  if (size == 0 || size > 31) throw std::invalid_argument("finite space size must be 1..31");
  if (bits >= (1u << size)) throw std::invalid_argument("subset bits out of range");
}

bool FiniteSubset::contains(std::uint32_t i) const {
  if (i >= size_) throw std::invalid_argument("point out of range");
  return (bits_ >> i) & 1u;
}

std::string FiniteSubset::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (std::uint32_t i = 0; i < size_; ++i) {
    if (!contains(i)) continue;
    if (!first) os << ",";
    os << i;
    first = false;
  }
  os << "}";
  return os.str();
}

FiniteModel::FiniteModel(std::uint32_t size) : k(size) {
  if (size == 0 || size > 31) throw std::invalid_argument("finite space size must be 1..31");
}

const FiniteVector& FiniteModel::check(const FiniteVector& a) const {
  if (a.size() != k) throw std::invalid_argument("vector size does not match the space");
  return a;
}

FiniteModel::Element FiniteModel::add(const Element& a, const Element& b) const {
  check(a);
  check(b);
  std::vector<Rat> out;
  out.reserve(k);
  for (std::uint32_t i = 0; i < k; ++i) out.push_back(a.at(i) + b.at(i));
  return Element(std::move(out));
}

FiniteModel::Element FiniteModel::negate(const Element& a) const {
  check(a);
  std::vector<Rat> out;
  out.reserve(k);
  for (std::uint32_t i = 0; i < k; ++i) out.push_back(-a.at(i));
  return Element(std::move(out));
}

FiniteModel::Element FiniteModel::meet(const Element& a, const Element& b) const {
  check(a);
  check(b);
  std::vector<Rat> out;
  out.reserve(k);
  for (std::uint32_t i = 0; i < k; ++i) out.push_back(std::min(a.at(i), b.at(i)));
  return Element(std::move(out));
}

FiniteModel::Element FiniteModel::join(const Element& a, const Element& b) const {
  check(a);
  check(b);
  std::vector<Rat> out;
  out.reserve(k);
  for (std::uint32_t i = 0; i < k; ++i) out.push_back(std::max(a.at(i), b.at(i)));
  return Element(std::move(out));
}

FiniteModel::Element FiniteModel::abs(const Element& a) const {
  check(a);
  std::vector<Rat> out;
  out.reserve(k);
  for (std::uint32_t i = 0; i < k; ++i) out.push_back(rat_abs(a.at(i)));
  return Element(std::move(out));
}

FiniteModel::Element FiniteModel::scale(const Int& n, const Element& a) const {
  return scale_rat(Rat(n), a);
}

FiniteModel::Element FiniteModel::scale_rat(const Rat& c, const Element& a) const {
  check(a);
  std::vector<Rat> out;
  out.reserve(k);
  for (std::uint32_t i = 0; i < k; ++i) out.push_back(a.at(i) * c);
  return Element(std::move(out));
}

FiniteModel::Element FiniteModel::constant(const Rat& c) const {
  return Element(std::vector<Rat>(k, c));
}

Rat FiniteModel::eval(const Element& a, const Point& p) const {
  check(a);
  if (p >= k) throw std::invalid_argument("point out of range");
  return a.at(p);
}

FiniteModel::Set FiniteModel::coz(const Element& a) const {
  check(a);
  std::uint32_t bits = 0;
  for (std::uint32_t i = 0; i < k; ++i) {
    if (a.at(i) != 0) bits |= (1u << i);
  }
  return Set(k, bits);
}

FiniteModel::Set FiniteModel::set_union(const Set& a, const Set& b) const {
  return Set(k, a.bits() | b.bits());
}

FiniteModel::Set FiniteModel::set_intersection(const Set& a, const Set& b) const {
  return Set(k, a.bits() & b.bits());
}

FiniteModel::Set FiniteModel::set_complement(const Set& a) const {
  return Set(k, full_bits() & ~a.bits());
}

bool FiniteModel::subset(const Set& a, const Set& b) const {
  return (a.bits() & ~b.bits()) == 0;
}

std::optional<FiniteModel::Point> FiniteModel::pick_point(const Set& a) const {
  for (std::uint32_t i = 0; i < k; ++i) {
    if (a.contains(i)) return i;
  }
  return std::nullopt;
}

std::optional<Int> FiniteModel::dominance(const Element& f, const Element& g) const {
  check(f);
  check(g);
  Rat best(0);
  for (std::uint32_t i = 0; i < k; ++i) {
    const Rat fa = rat_abs(f.at(i));
    if (fa == 0) continue;
    const Rat ga = rat_abs(g.at(i));
    if (ga == 0) return std::nullopt;  // point i separates the cozero sets
    best = std::max(best, Rat(fa / ga));
  }
  Int n = rat_ceil(best);
  if (n < 1) n = 1;
  return n;
}

FiniteModel::Element FiniteModel::realize_open(const Set& u) const {
  std::vector<Rat> out;
  out.reserve(k);
  for (std::uint32_t i = 0; i < k; ++i) out.push_back(u.contains(i) ? Rat(1) : Rat(0));
  return Element(std::move(out));
}

std::vector<FiniteModel::Point> FiniteModel::sample_points() const {
  std::vector<Point> pts;
  for (std::uint32_t i = 0; i < k; ++i) pts.push_back(i);
  return pts;
}

DualityReport verify_anti_isomorphism(std::uint32_t k) {
  if (k > 12) {
    throw std::invalid_argument("exhaustive duality check is limited to k <= 12");
  }
  DualityReport report;
  const FiniteModel m(k);
  const std::uint32_t nsets = 1u << k;

  // Indicator of U; probes kernel-ideal membership: vanishes on S iff
  // U and S are disjoint.
  const auto indicator = [&m, k](std::uint32_t u) {
    std::vector<Rat> v;
    v.reserve(k);
    for (std::uint32_t i = 0; i < k; ++i) v.push_back(((u >> i) & 1u) ? Rat(1) : Rat(0));
    return FiniteModel::Element(std::move(v));
  };
  const auto in_kernel = [&m, k](const FiniteModel::Element& f, std::uint32_t s) {
    for (std::uint32_t i = 0; i < k; ++i) {
      if (((s >> i) & 1u) && f.at(i) != 0) return false;
    }
    return true;
  };

  std::ostringstream fail;
  for (std::uint32_t s = 0; s < nsets && report.detail.empty(); ++s) {
    for (std::uint32_t t = 0; t < nsets; ++t) {
      ++report.pairs_checked;
      // Order reversal: S subseteq T  <=>  I(T) subseteq I(S).
      const bool s_in_t = (s & ~t) == 0;
      bool ideal_reversed = true;
      for (std::uint32_t u = 0; u < nsets; ++u) {
        const auto e = indicator(u);
        if (in_kernel(e, t) && !in_kernel(e, s)) {
          ideal_reversed = false;
          break;
        }
      }
      if (s_in_t != ideal_reversed) {
        fail << "order reversal fails at S=" << FiniteSubset(k, s).to_string()
             << " T=" << FiniteSubset(k, t).to_string();
        report.detail = fail.str();
        break;
      }
      // I(S union T) = I(S) intersect I(T), probed on all indicators.
      for (std::uint32_t u = 0; u < nsets; ++u) {
        const auto e = indicator(u);
        if (in_kernel(e, s | t) != (in_kernel(e, s) && in_kernel(e, t))) {
          fail << "union law fails at S=" << FiniteSubset(k, s).to_string()
               << " T=" << FiniteSubset(k, t).to_string()
               << " U=" << FiniteSubset(k, u).to_string();
          report.detail = fail.str();
          break;
        }
        // I(S intersect T) = I(S) + I(T): decompose any member of the
        // left side constructively and verify both summands.
        if (in_kernel(e, s & t)) {
          const auto f = indicator(u & ~s);
          const auto g = m.add(e, m.negate(f));
          if (!in_kernel(f, s) || !in_kernel(g, t) || !m.equal(m.add(f, g), e)) {
            fail << "sum law fails at S=" << FiniteSubset(k, s).to_string()
                 << " T=" << FiniteSubset(k, t).to_string()
                 << " U=" << FiniteSubset(k, u).to_string();
            report.detail = fail.str();
            break;
          }
        }
      }
      if (!report.detail.empty()) break;
    }
  }
  report.ok = report.detail.empty();
  return report;
}

DualityReport verify_finite_classes(std::uint32_t k) {
  DualityReport report;
  const FiniteModel m(k);

  // Exhaustive over all supports for small k; for large k a bounded,
  // deterministic slice (all low supports plus the full one). Closure
  // and interior are the identity on every subset by construction, so
  // the slice checks implementation consistency, not new mathematics.
  std::vector<std::uint32_t> masks;
  if (k <= 6) {
    for (std::uint32_t u = 0; u < (1u << k); ++u) masks.push_back(u);
  } else {
    for (std::uint32_t u = 0; u < 64; ++u) masks.push_back(u);
    masks.push_back(m.full_bits());
  }

  std::vector<FiniteModel::Element> sample;
  for (const std::uint32_t u : masks) {
    std::vector<Rat> one(k, Rat(0)), three(k, Rat(0)), mixed(k, Rat(0));
    for (std::uint32_t i = 0; i < k; ++i) {
      if ((u >> i) & 1u) {
        one[i] = Rat(1);
        three[i] = Rat(-3);
        mixed[i] = Rat(1, static_cast<int>(i) + 2);
      }
    }
    sample.emplace_back(std::move(one));
    sample.emplace_back(std::move(three));
    sample.emplace_back(std::move(mixed));
  }

  std::ostringstream fail;
  for (const auto& g : sample) {
    const auto c = m.coz(g);
    if (!m.set_equal(m.closure(c), c) || !m.set_equal(m.interior(m.closure(c)), c) ||
        !m.set_equal(m.interior(c), c)) {
      fail << "cozero set not clopen for " << g.to_string();
      report.detail = fail.str();
      break;
    }
    for (const auto& f : sample) {
      ++report.pairs_checked;
      const bool nested = m.subset(m.coz(f), m.coz(g));
      const bool dominated = m.dominance(f, g).has_value();
      if (nested != dominated) {
        fail << "dominance disagrees with support nesting for f=" << f.to_string()
             << " g=" << g.to_string();
        report.detail = fail.str();
        break;
      }
    }
    if (!report.detail.empty()) break;
  }
  report.ok = report.detail.empty();
  return report;
}

}  // namespace lgroup::finite
