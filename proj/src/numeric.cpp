#include "ordgame/numeric.hpp"

#include <cctype>
#include <utility>

#include "ordgame/errors.hpp"

namespace ordgame {

std::string format_rational(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

namespace {

boost::multiprecision::cpp_int parse_integer(std::string_view s, std::string_view whole) {
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) throw ParseError("rational '" + std::string(whole) + "': missing digits");
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw ParseError("rational '" + std::string(whole) + "': unexpected character");
  boost::multiprecision::cpp_int v(std::string(s.substr(i)));
  return s[0] == '-' ? -v : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s, text));
  const auto den = parse_integer(s.substr(slash + 1), text);
  if (den == 0) throw ParseError("rational '" + std::string(text) + "': zero denominator");
  return Rational(parse_integer(s.substr(0, slash), text), den);
}

Weight::Weight(Rational value) : value_(std::move(value)) {
  if (value_.sign() < 0 || numerator(value_) > denominator(value_)) throw DomainError("weight " + format_rational(value_) + " outside [0,1]");
}

}  // namespace ordgame
