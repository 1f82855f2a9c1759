#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace reflact {

// Arbitrary-precision rational. gmpxx keeps results of arithmetic in lowest
// terms with a positive denominator.
using Rat = mpq_class;

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

// "a/b", with "/b" omitted when b == 1.
std::string to_string(const Rat& x);

// Accepts "a", "-a", "a/b". Throws std::invalid_argument on malformed input
// or a zero denominator.
Rat parse_rat(std::string_view text);

std::size_t hash_value(const Rat& x);

}  // namespace reflact
