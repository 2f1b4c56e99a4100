#pragma once

// Exact integer and rational arithmetic used throughout the library.
// All numeric state in the project is one of these two types; floating
// point never appears on any decision path.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace lgroup {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Parses "p", "-p" or "p/q" (q > 0 after normalization). Throws
// std::invalid_argument on malformed input or a zero denominator.
Rat parse_rat(std::string_view text);

// Canonical rendering: "p" when the denominator is 1, else "p/q" with q > 0.
std::string rat_to_string(const Rat& q);

std::string int_to_string(const Int& n);

// Largest integer <= q and smallest integer >= q.
Int rat_floor(const Rat& q);
Int rat_ceil(const Rat& q);

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }
inline Int int_abs(const Int& n) { return n < 0 ? Int(-n) : n; }

inline int rat_sign(const Rat& q) { return q < 0 ? -1 : (q > 0 ? 1 : 0); }

// Checked narrowing used when an exact Int indexes into a concrete range.
std::uint64_t to_u64(const Int& n);

}  // namespace lgroup
