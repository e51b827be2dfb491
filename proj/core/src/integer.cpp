#include "resint/integer.hpp"

#include <cctype>

#include "resint/errors.hpp"

namespace resint {

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

Integer ipow(const Integer& base, unsigned exponent) {
  return Integer(boost::multiprecision::pow(base, exponent));
}

std::string group_thousands(const Integer& value) {
  std::string digits = Integer(boost::multiprecision::abs(value)).str();
  std::string out;
  out.reserve(digits.size() + digits.size() / 3 + 1);
  std::size_t lead = digits.size() % 3;
  if (lead == 0) lead = 3;
  out.append(digits, 0, lead);
  for (std::size_t i = lead; i < digits.size(); i += 3) {
    out.push_back(',');
    out.append(digits, i, 3);
  }
  return value < 0 ? "-" + out : out;
}

Integer parse_integer(const std::string& text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw ParseError("expected an integer, got '" + text + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw ParseError("expected an integer, got '" + text + "'");
    }
  }
  Integer value(text.substr(i));
  return negative ? Integer(-value) : value;
}

}  // namespace resint
