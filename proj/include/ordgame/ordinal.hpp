#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ordgame {

using Natural = boost::multiprecision::cpp_int;

/// An ordinal below epsilon_0 in Cantor normal form.
///
/// The value is the finite sum w^e1*c1 + ... + w^ek*ck with e1 > ... > ek and
/// every ci >= 1; the empty sum is 0. Exponents are themselves Ordinals, so the
/// representation is a finite tree. Values are immutable once built and the
/// canonical form is unique, so structural equality is ordinal equality.
class Ordinal {
 public:
  struct Term;

  Ordinal() = default;
  Ordinal(std::uint64_t n);  // NOLINT: naturals convert implicitly
  explicit Ordinal(const Natural& n);

  /// Builds from explicit terms. Throws DomainError unless the terms are
  /// already canonical (strictly decreasing exponents, positive coefficients).
  static Ordinal from_terms(std::vector<Term> terms);

  static Ordinal omega();

  /// Reads the textual CNF grammar: `0`, `w^2*3+w+4`, `w^(w+1)`, `w^w^2`.
  /// Non-canonical sums such as `1+w` are normalized by ordinal addition.
  static Ordinal parse(std::string_view text);

  std::string to_string() const;

  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_finite() const;
  bool is_successor() const;
  bool is_limit() const;

  /// The value as a natural number, if finite.
  std::optional<Natural> as_natural() const;

  /// Exponent of the leading term. Precondition: nonzero.
  const Ordinal& leading_exponent() const;

  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);
  friend bool operator==(const Ordinal& a, const Ordinal& b);

 private:
  std::vector<Term> terms_;
};

struct Ordinal::Term {
  Ordinal exponent;
  Natural coefficient;
};

std::ostream& operator<<(std::ostream& os, const Ordinal& a);

enum class Comparison { less, equal, greater };

Comparison cmp(const Ordinal& a, const Ordinal& b);

Ordinal add(const Ordinal& a, const Ordinal& b);

/// a*n for a natural n; a*0 is 0.
Ordinal mul_nat(const Ordinal& a, const Natural& n);

/// w^x.
Ordinal omega_pow(const Ordinal& x);

/// w*a, by shifting every exponent e to 1+e.
Ordinal omega_times(const Ordinal& a);

/// The unique d with g + d = b. Throws DomainError if g > b.
Ordinal subtract_left(const Ordinal& g, const Ordinal& b);

struct QuotRem {
  Ordinal quotient;
  Ordinal remainder;
};

/// The unique (q, r) with a = w^g*q + r and r < w^g.
QuotRem quot_rem_omega_pow(const Ordinal& a, const Ordinal& g);

/// The unique (q, r) with a = w^g*q + r and 0 < r <= w^g. Throws DomainError
/// if a = 0, or if no such pair exists (a is a multiple w^g*q with q a limit).
QuotRem quot_rem_omega_pow_upper(const Ordinal& a, const Ordinal& g);

bool is_limit(const Ordinal& a);

/// Predecessor. Throws DomainError on 0 or a limit.
Ordinal pred(const Ordinal& a);

Ordinal succ(const Ordinal& a);

/// The k-th element of the fundamental sequence of a limit ordinal:
/// for lambda = gamma + w^b, lambda[k] = gamma + w^b' * k when b = b' + 1 and
/// gamma + w^(b[k]) when b is a limit. Strictly increasing in k and cofinal.
Ordinal fundamental(const Ordinal& lambda, std::uint64_t k);

}  // namespace ordgame
