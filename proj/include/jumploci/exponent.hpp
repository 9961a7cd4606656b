#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace jumploci {

/// Exponent q of a root of unity exp(2 pi i q). Stored exactly.
using Exponent = boost::rational<std::int64_t>;

inline bool is_zero(const Exponent& q) { return q.numerator() == 0; }

/// Representative of q in [0, 1).
Exponent mod_one(Exponent q);

/// Parses "a/b", "a" or "0". Throws Error(parse) or Error(invalid_exponent).
Exponent parse_exponent(std::string_view text);

std::string format_exponent(const Exponent& q);

/// lcm of the denominators (1 for the empty list).
std::int64_t common_order(const std::vector<Exponent>& qs);

}  // namespace jumploci
