#include "lipkr/rational.hpp"

#include <cctype>

#include "lipkr/error.hpp"

namespace lipkr {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(s) + "'");
  }
  Integer value{std::string(s)};
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text));
  }
  Integer num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) {
    throw Error(ErrorCode::ParseError,
                "denominator must be a positive integer: '" + std::string(text) + "'");
  }
  Integer den{std::string(den_text)};
  if (den == 0) {
    throw Error(ErrorCode::ParseError, "zero denominator: '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::string to_string(const Rational& q) {
  Integer den = denominator(q);
  std::string out = numerator(q).str();
  if (den != 1) {
    out += "/";
    out += den.str();
  }
  return out;
}

}  // namespace lipkr
