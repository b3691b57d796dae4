#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace minuscule {

using BigInt = mpz_class;

/*
 * Arbitrary-precision rational, always held in lowest terms with a positive
 * denominator (GMP's canonical form). The whole library computes over these;
 * there is no floating point anywhere and no tolerance parameter.
 */
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}                       // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(const BigInt& z) : v_(z) {}
  explicit Rational(mpq_class v);

  static Rational parse(std::string_view s);        // "p/q" or "p"

  const mpq_class& value() const { return v_; }
  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  std::string str() const;                          // "p/q", "/q" omitted when q == 1

  Rational operator-() const { return Rational(mpq_class(-v_), canonical_tag{}); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

  std::size_t hash() const;

 private:
  struct canonical_tag {};
  Rational(mpq_class v, canonical_tag) : v_(std::move(v)) {}
  mpq_class v_;
};

Rational pow(const Rational& r, unsigned e);
Rational abs(const Rational& r);
int compare(const Rational& a, const Rational& b);

BigInt binomial(unsigned n, unsigned k);
Rational binomial_rat(unsigned n, unsigned k);
BigInt factorial(unsigned n);

std::ostream& operator<<(std::ostream& os, const Rational& r);

struct RationalHash {
  std::size_t operator()(const Rational& r) const { return r.hash(); }
};

}  // namespace minuscule
