#include "reflact/rational.hpp"

#include <functional>
#include <stdexcept>
#include <string>

namespace reflact {

std::string to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rat parse_rat(std::string_view text) {
  std::string s(text);
  const auto slash = s.find('/');
  auto parse_int = [&](const std::string& part) {
    std::string digits = part;
    if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
    const std::size_t start = (!digits.empty() && digits[0] == '-') ? 1 : 0;
    if (digits.size() == start) throw std::invalid_argument("malformed rational: '" + s + "'");
    for (std::size_t i = start; i < digits.size(); ++i)
      if (digits[i] < '0' || digits[i] > '9')
        throw std::invalid_argument("malformed rational: '" + s + "'");
    return mpz_class(digits, 10);
  };
  if (slash == std::string::npos) return Rat(parse_int(s));
  mpz_class num = parse_int(s.substr(0, slash));
  mpz_class den = parse_int(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::size_t hash_value(const Rat& x) {
  const std::size_t a = mpz_get_ui(x.get_num_mpz_t());
  const std::size_t b = mpz_get_ui(x.get_den_mpz_t());
  const std::size_t s = static_cast<std::size_t>(sgn(x) + 1);
  return (a * 0x9e3779b97f4a7c15ULL) ^ (b + 0x7f4a7c15ULL + (a << 6) + (a >> 2)) ^ (s << 61);
}

}  // namespace reflact
