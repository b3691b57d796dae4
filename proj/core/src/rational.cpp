#include "minuscule/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace minuscule {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
  if (sgn(v_.get_den()) == 0) throw std::invalid_argument("rational with zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) {
      mpq_class v(mpz_class(std::string(s)));
      return Rational(std::move(v));
    }
    mpz_class num{std::string(s.substr(0, slash))};
    mpz_class den{std::string(s.substr(slash + 1))};
    if (sgn(den) == 0) throw std::invalid_argument("zero denominator");
    mpq_class v;
    v.get_num() = num;
    v.get_den() = den;
    return Rational(std::move(v));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("cannot parse rational: '" + std::string(s) + "'");
  }
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("rational division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

namespace {

std::size_t hash_mpz(const mpz_class& z) {
  const mpz_srcptr p = z.get_mpz_t();
  const int size = p->_mp_size;
  std::size_t h = size < 0 ? 0x9e3779b97f4a7c15ull : 0x2545f4914f6cdd1dull;
  const int n = size < 0 ? -size : size;
  for (int i = 0; i < n; ++i) {
    h ^= static_cast<std::size_t>(mpz_getlimbn(p, i));
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

std::size_t Rational::hash() const {
  return hash_mpz(v_.get_num()) * 31 + hash_mpz(v_.get_den());
}

Rational pow(const Rational& r, unsigned e) {
  mpq_class out;
  mpz_pow_ui(out.get_num().get_mpz_t(), r.value().get_num().get_mpz_t(), e);
  mpz_pow_ui(out.get_den().get_mpz_t(), r.value().get_den().get_mpz_t(), e);
  return Rational(std::move(out));  // already canonical, ctor re-canonicalizes cheaply
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

int compare(const Rational& a, const Rational& b) { return cmp(a.value(), b.value()); }

BigInt binomial(unsigned n, unsigned k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Rational binomial_rat(unsigned n, unsigned k) { return Rational(binomial(n, k)); }

BigInt factorial(unsigned n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace minuscule
