#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "minuscule/matrix.hpp"
#include "minuscule/vector.hpp"

namespace minuscule {

/*
 * Exponent vectors are packed into one 64-bit word, one byte per variable
 * with variable 0 in the most significant byte. Every ambient space here has
 * dimension at most 8 and every computation stays far below degree 255, so
 * the packing is lossless and plain integer comparison is lexicographic
 * comparison of exponents.
 */
using Mono = std::uint64_t;

namespace mono {

inline constexpr std::size_t kMaxVars = 8;

inline unsigned exponent(Mono m, std::size_t var) {
  return static_cast<unsigned>((m >> (8 * (7 - var))) & 0xffu);
}

inline Mono with_exponent(Mono m, std::size_t var, unsigned e) {
  const int shift = static_cast<int>(8 * (7 - var));
  return (m & ~(Mono{0xff} << shift)) | (Mono{e & 0xffu} << shift);
}

inline unsigned degree(Mono m) {
  return static_cast<unsigned>((m * 0x0101010101010101ull) >> 56);
}

Mono make(std::span<const unsigned> exps);
std::vector<unsigned> unpack(Mono m, std::size_t nvars);

inline Mono mul(Mono a, Mono b) { return a + b; }

struct GradedLexLess {
  bool operator()(Mono a, Mono b) const {
    const unsigned da = degree(a), db = degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

// All monomials in nvars variables of total degree exactly d / at most d,
// ascending graded-lex.
std::vector<Mono> of_degree(std::size_t nvars, unsigned d);
std::vector<Mono> up_to_degree(std::size_t nvars, unsigned d);

}  // namespace mono

/*
 * Sparse multivariate polynomial over exact rationals, graded by total
 * degree. Terms are kept in ascending graded-lex order; no zero coefficient
 * is ever stored.
 */
class Polynomial {
 public:
  using TermMap = std::map<Mono, Rational, mono::GradedLexLess>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars);

  static Polynomial constant(std::size_t nvars, Rational c);
  static Polynomial monomial(std::size_t nvars, Mono m, Rational c);
  // The degree-1 polynomial x -> (v, x).
  static Polynomial linear_form(const Vector& v);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  // -1 for the zero polynomial.
  int total_degree() const;
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Rational coefficient(Mono m) const;
  Mono leading_monomial() const;  // highest in graded-lex; throws on zero

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }
  Polynomial pow(unsigned e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Rational evaluate(const Vector& point) const;
  // f(M x): substitute each variable by the corresponding row form of M.
  Polynomial substitute(const Matrix& m) const;
  // f(x + a), one exact binomial shift per variable.
  Polynomial translate(const Vector& a) const;
  Polynomial derivative(std::size_t var) const;
  // Directional derivative along v.
  Polynomial derivative_along(const Vector& v) const;

  void add_term(Mono m, const Rational& c);  // accumulate, dropping zeros

  std::string str() const;  // human-readable, graded-lex order

 private:
  std::size_t nvars_ = 0;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace minuscule
