#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ordgame {

using Rational = boost::multiprecision::cpp_rational;

/// Always `p/q` with q >= 1, so 1 prints as `1/1`.
std::string format_rational(const Rational& r);

/// Accepts `p/q`, `-p/q` and plain integers.
Rational parse_rational(std::string_view text);

/// An exact rational in [0, 1].
class Weight {
 public:
  Weight() = default;
  explicit Weight(Rational value);

  const Rational& value() const { return value_; }
  std::string to_string() const { return format_rational(value_); }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend bool operator<(const Weight& a, const Weight& b) { return a.value_ < b.value_; }

 private:
  Rational value_;
};

}  // namespace ordgame
