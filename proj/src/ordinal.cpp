#include "ordgame/ordinal.hpp"

#include <cctype>
#include <ostream>
#include <utility>

#include "ordgame/errors.hpp"

namespace ordgame {

Ordinal::Ordinal(std::uint64_t n) {
  if (n != 0) terms_.push_back(Term{Ordinal(), Natural(n)});
}

Ordinal::Ordinal(const Natural& n) {
  if (n < 0) throw DomainError("negative natural number");
  if (n != 0) terms_.push_back(Term{Ordinal(), n});
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient < 1) throw DomainError("CNF coefficient must be positive");
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent))
      throw DomainError("CNF exponents must be strictly decreasing");
  }
  Ordinal out;
  out.terms_ = std::move(terms);
  return out;
}

Ordinal Ordinal::omega() { return omega_pow(Ordinal(1)); }

bool Ordinal::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

bool Ordinal::is_successor() const {
  return !terms_.empty() && terms_.back().exponent.is_zero();
}

bool Ordinal::is_limit() const {
  return !terms_.empty() && !terms_.back().exponent.is_zero();
}

std::optional<Natural> Ordinal::as_natural() const {
  if (terms_.empty()) return Natural(0);
  if (!is_finite()) return std::nullopt;
  return terms_[0].coefficient;
}

const Ordinal& Ordinal::leading_exponent() const {
  if (terms_.empty()) throw DomainError("zero has no leading exponent");
  return terms_[0].exponent;
}

Comparison cmp(const Ordinal& a, const Ordinal& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Comparison e = cmp(x[i].exponent, y[i].exponent);
    if (e != Comparison::equal) return e;
    if (x[i].coefficient != y[i].coefficient)
      return x[i].coefficient < y[i].coefficient ? Comparison::less : Comparison::greater;
  }
  if (x.size() == y.size()) return Comparison::equal;
  return x.size() < y.size() ? Comparison::less : Comparison::greater;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  switch (cmp(a, b)) {
    case Comparison::less:
      return std::strong_ordering::less;
    case Comparison::greater:
      return std::strong_ordering::greater;
    default:
      return std::strong_ordering::equal;
  }
}

bool operator==(const Ordinal& a, const Ordinal& b) { return cmp(a, b) == Comparison::equal; }

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const auto& lead = b.terms().front();
  std::vector<Ordinal::Term> out;
  out.reserve(a.terms().size() + b.terms().size());
  for (const auto& t : a.terms()) {
    const Comparison c = cmp(t.exponent, lead.exponent);
    if (c == Comparison::greater) {
      out.push_back(t);
    } else {
      if (c == Comparison::equal) {
        out.push_back(Ordinal::Term{lead.exponent, t.coefficient + lead.coefficient});
      }
      break;
    }
  }
  const bool merged = !out.empty() && cmp(out.back().exponent, lead.exponent) == Comparison::equal;
  auto it = b.terms().begin();
  if (merged) ++it;
  out.insert(out.end(), it, b.terms().end());
  return Ordinal::from_terms(std::move(out));
}

Ordinal mul_nat(const Ordinal& a, const Natural& n) {
  if (n < 0) throw DomainError("negative multiplier");
  if (a.is_zero() || n == 0) return Ordinal();
  // (w^e1*c1 + r) * n = w^e1*(c1*n) + r: each inner copy of r is absorbed.
  std::vector<Ordinal::Term> out = a.terms();
  out.front().coefficient *= n;
  return Ordinal::from_terms(std::move(out));
}

Ordinal omega_pow(const Ordinal& x) { return Ordinal::from_terms({Ordinal::Term{x, 1}}); }

Ordinal omega_times(const Ordinal& a) {
  std::vector<Ordinal::Term> out;
  out.reserve(a.terms().size());
  const Ordinal one(1);
  for (const auto& t : a.terms()) out.push_back(Ordinal::Term{add(one, t.exponent), t.coefficient});
  return Ordinal::from_terms(std::move(out));
}

Ordinal subtract_left(const Ordinal& g, const Ordinal& b) {
  const auto& x = g.terms();
  const auto& y = b.terms();
  std::size_t i = 0;
  while (i < x.size() && i < y.size() && x[i].coefficient == y[i].coefficient &&
         x[i].exponent == y[i].exponent)
    ++i;
  auto tail = [&](std::size_t from) {
    return Ordinal::from_terms(std::vector<Ordinal::Term>(y.begin() + static_cast<std::ptrdiff_t>(from), y.end()));
  };
  if (i == x.size()) return tail(i);
  const auto fail = [&]() -> Ordinal {
    throw DomainError("no left difference: " + g.to_string() + " > " + b.to_string());
  };
  if (i == y.size()) return fail();
  const Comparison e = cmp(x[i].exponent, y[i].exponent);
  if (e == Comparison::less) return tail(i);
  if (e == Comparison::greater || x[i].coefficient > y[i].coefficient) return fail();
  std::vector<Ordinal::Term> out;
  out.push_back(Ordinal::Term{y[i].exponent, y[i].coefficient - x[i].coefficient});
  out.insert(out.end(), y.begin() + static_cast<std::ptrdiff_t>(i + 1), y.end());
  return Ordinal::from_terms(std::move(out));
}

QuotRem quot_rem_omega_pow(const Ordinal& a, const Ordinal& g) {
  std::vector<Ordinal::Term> q;
  std::vector<Ordinal::Term> r;
  for (const auto& t : a.terms()) {
    if (cmp(t.exponent, g) == Comparison::less) {
      r.push_back(t);
    } else {
      // w^e = w^g * w^(e-g) with e-g the left difference.
      q.push_back(Ordinal::Term{subtract_left(g, t.exponent), t.coefficient});
    }
  }
  return {Ordinal::from_terms(std::move(q)), Ordinal::from_terms(std::move(r))};
}

QuotRem quot_rem_omega_pow_upper(const Ordinal& a, const Ordinal& g) {
  if (a.is_zero()) throw DomainError("zero has no decomposition with positive remainder");
  QuotRem qr = quot_rem_omega_pow(a, g);
  if (!qr.remainder.is_zero()) return qr;
  if (!qr.quotient.is_successor())
    throw DomainError(a.to_string() + " is not w^(" + g.to_string() + ")*q + w^(" + g.to_string() +
                      ") for any q");
  return {pred(qr.quotient), omega_pow(g)};
}

bool is_limit(const Ordinal& a) { return a.is_limit(); }

Ordinal pred(const Ordinal& a) {
  if (!a.is_successor()) throw DomainError("pred: " + a.to_string() + " is not a successor");
  std::vector<Ordinal::Term> out = a.terms();
  out.back().coefficient -= 1;
  if (out.back().coefficient == 0) out.pop_back();
  return Ordinal::from_terms(std::move(out));
}

Ordinal succ(const Ordinal& a) { return add(a, Ordinal(1)); }

Ordinal fundamental(const Ordinal& lambda, std::uint64_t k) {
  if (!lambda.is_limit()) throw DomainError("fundamental: " + lambda.to_string() + " is not a limit");
  std::vector<Ordinal::Term> head = lambda.terms();
  const Ordinal beta = head.back().exponent;
  head.back().coefficient -= 1;
  if (head.back().coefficient == 0) head.pop_back();
  const Ordinal gamma = Ordinal::from_terms(std::move(head));
  if (beta.is_successor()) return add(gamma, mul_nat(omega_pow(pred(beta)), Natural(k)));
  return add(gamma, omega_pow(fundamental(beta, k)));
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Ordinal parse_all() {
    Ordinal out = expr();
    skip_ws();
    if (pos_ != s_.size()) error("unexpected character");
    return out;
  }

 private:
  Ordinal expr() {
    Ordinal acc = term();
    while (accept('+')) acc = add(acc, term());
    return acc;
  }

  Ordinal term() {
    skip_ws();
    if (accept_omega()) {
      Ordinal e(1);
      if (accept('^')) e = exponent();
      Natural c = 1;
      if (accept('*')) c = natural();
      return mul_nat(omega_pow(e), c);
    }
    return Ordinal(natural());
  }

  Ordinal exponent() {
    skip_ws();
    if (accept('(')) {
      Ordinal e = expr();
      if (!accept(')')) error("expected ')'");
      return e;
    }
    if (accept_omega()) {
      Ordinal e(1);
      if (accept('^')) e = exponent();
      return omega_pow(e);
    }
    return Ordinal(natural());
  }

  Natural natural() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected a natural number or 'w'");
    return Natural(std::string(s_.substr(start, pos_ - start)));
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept_omega() {
    skip_ws();
    if (pos_ < s_.size() && (s_[pos_] == 'w' || s_[pos_] == 'W')) {
      ++pos_;
      return true;
    }
    if (s_.substr(pos_, 2) == "\xCF\x89") {  // U+03C9
      pos_ += 2;
      return true;
    }
    return false;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void error(const char* what) const {
    throw ParseError("ordinal '" + std::string(s_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Ordinal Ordinal::parse(std::string_view text) { return Parser(text).parse_all(); }

std::string Ordinal::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += '+';
    if (t.exponent.is_zero()) {
      out += t.coefficient.str();
      continue;
    }
    out += 'w';
    const auto n = t.exponent.as_natural();
    if (!n)
      out += "^(" + t.exponent.to_string() + ')';
    else if (*n != 1)
      out += '^' + n->str();
    if (t.coefficient != 1) out += '*' + t.coefficient.str();
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Ordinal& a) { return os << a.to_string(); }

}  // namespace ordgame
