#include "lgroup/rational.hpp"

#include <limits>
#include <stdexcept>

namespace lgroup {

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

Int parse_int_token(std::string_view s) {
  // cpp_int's string constructor rejects a leading '+'.
  const bool neg = s[0] == '-';
  if (s[0] == '-' || s[0] == '+') s.remove_prefix(1);
  Int value{std::string(s)};
  return neg ? Int(-value) : value;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  // Trim surrounding whitespace; the grammar never produces interior spaces.
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational literal");

  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_token(text)) {
      throw std::invalid_argument("bad rational literal: " + std::string(text));
    }
    return Rat(parse_int_token(text));
  }
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den)) {
    throw std::invalid_argument("bad rational literal: " + std::string(text));
  }
  Int n = parse_int_token(num);
  Int d = parse_int_token(den);
  if (d == 0) {
    throw std::invalid_argument("zero denominator in rational literal: " + std::string(text));
  }
  if (d < 0) {  // cpp_rational requires a positive denominator
    n = -n;
    d = -d;
  }
  return Rat(n, d);
}

std::string rat_to_string(const Rat& q) {
  const Int num = numerator(q);
  const Int den = denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string int_to_string(const Int& n) { return n.str(); }

Int rat_floor(const Rat& q) {
  Int num = numerator(q);
  Int den = denominator(q);  // > 0 in canonical form
  Int quo = num / den;
  if (num % den != 0 && num < 0) --quo;
  return quo;
}

Int rat_ceil(const Rat& q) { return -rat_floor(Rat(-q)); }

std::uint64_t to_u64(const Int& n) {
  if (n < 0 || n > Int(std::numeric_limits<std::uint64_t>::max())) {
    throw std::overflow_error("integer out of uint64 range: " + n.str());
  }
  return static_cast<std::uint64_t>(n);
}

}  // namespace lgroup
