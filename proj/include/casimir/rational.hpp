#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace casimir {

// Exact rational scalar. Always stored in canonical form: reduced to lowest
// terms, denominator positive. mpq_class itself does not canonicalize values
// built from a numerator/denominator pair, so all construction goes through
// this wrapper.
class Rational {
public:
  Rational() : q_(0) {}
  Rational(int n) : q_(n) {}
  Rational(long n) : q_(n) {}
  explicit Rational(mpz_class n) : q_(std::move(n)) {}

  Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

  Rational(mpz_class num, mpz_class den) {
    if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(std::move(num), std::move(den));
    q_.canonicalize();
  }

  // Accepts "3", "-1/2", "+7/14" (reduced on the way in). Throws
  // std::invalid_argument on anything else.
  static Rational parse(std::string_view s);

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }

  // "3", "-1/2"
  std::string str() const;

  Rational operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
  }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c <=> 0;
  }

private:
  mpq_class q_;
};

inline std::string Rational::str() const {
  return q_.get_str();
}

inline Rational Rational::parse(std::string_view s) {
  size_t i = 0;
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  size_t j = s.size();
  while (j > i && (s[j - 1] == ' ' || s[j - 1] == '\t')) --j;
  s = s.substr(i, j - i);
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  auto digits = [](std::string_view t) {
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!digits(num) || !digits(den))
    throw std::invalid_argument("bad rational literal '" + std::string(s) + "'");
  mpz_class n(std::string(num), 10), d(std::string(den), 10);
  if (neg) n = -n;
  return Rational(std::move(n), std::move(d));
}

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace casimir
