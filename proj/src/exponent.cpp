#include "jumploci/exponent.hpp"

#include <charconv>
#include <numeric>

#include "jumploci/error.hpp"

namespace jumploci {

Exponent mod_one(Exponent q) {
  const auto num = q.numerator();
  const auto den = q.denominator();
  auto r = num % den;
  if (r < 0) r += den;
  return Exponent(r, den);
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw Error(Errc::parse, "bad exponent '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Exponent parse_exponent(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Exponent(parse_int(text, text));
  const auto num = parse_int(text.substr(0, slash), text);
  const auto den = parse_int(text.substr(slash + 1), text);
  if (den == 0) throw Error(Errc::invalid_exponent, "zero denominator in '" + std::string(text) + "'");
  return Exponent(num, den);
}

std::string format_exponent(const Exponent& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::int64_t common_order(const std::vector<Exponent>& qs) {
  std::int64_t n = 1;
  for (const auto& q : qs) n = std::lcm(n, q.denominator());
  return n;
}

}  // namespace jumploci
