#include "minuscule/polynomial.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "minuscule/errors.hpp"

namespace minuscule {

namespace mono {

Mono make(std::span<const unsigned> exps) {
  if (exps.size() > kMaxVars) throw DimensionMismatch("more than 8 variables");
  Mono m = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] > 0xff) throw std::overflow_error("exponent exceeds the packed range");
    m = with_exponent(m, i, exps[i]);
  }
  return m;
}

std::vector<unsigned> unpack(Mono m, std::size_t nvars) {
  std::vector<unsigned> out(nvars);
  for (std::size_t i = 0; i < nvars; ++i) out[i] = exponent(m, i);
  return out;
}

namespace {
void gen_degree(std::size_t nvars, std::size_t var, unsigned rem, Mono acc,
                std::vector<Mono>& out) {
  if (var + 1 == nvars) {
    out.push_back(with_exponent(acc, var, rem));
    return;
  }
  for (unsigned e = 0; e <= rem; ++e)
    gen_degree(nvars, var + 1, rem - e, with_exponent(acc, var, e), out);
}
}  // namespace

std::vector<Mono> of_degree(std::size_t nvars, unsigned d) {
  std::vector<Mono> out;
  gen_degree(nvars, 0, d, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Mono> up_to_degree(std::size_t nvars, unsigned d) {
  std::vector<Mono> out;
  for (unsigned k = 0; k <= d; ++k) {
    auto block = of_degree(nvars, k);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

}  // namespace mono

Polynomial::Polynomial(std::size_t nvars) : nvars_(nvars) {
  if (nvars > mono::kMaxVars) throw DimensionMismatch("more than 8 variables");
}

Polynomial Polynomial::constant(std::size_t nvars, Rational c) {
  Polynomial p(nvars);
  if (!c.is_zero()) p.terms_.emplace(Mono{0}, std::move(c));
  return p;
}

Polynomial Polynomial::monomial(std::size_t nvars, Mono m, Rational c) {
  Polynomial p(nvars);
  if (!c.is_zero()) p.terms_.emplace(m, std::move(c));
  return p;
}

Polynomial Polynomial::linear_form(const Vector& v) {
  Polynomial p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) p.terms_.emplace(mono::with_exponent(0, i, 1), v[i]);
  return p;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(mono::degree(terms_.rbegin()->first));
}

Rational Polynomial::coefficient(Mono m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational() : it->second;
}

Mono Polynomial::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("leading monomial of zero");
  return terms_.rbegin()->first;
}

void Polynomial::add_term(Mono m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (nvars_ != o.nvars_) throw DimensionMismatch("polynomial addition across variable counts");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (nvars_ != o.nvars_) throw DimensionMismatch("polynomial subtraction across variable counts");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw DimensionMismatch("polynomial product across variable counts");
  Polynomial out(nvars_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) out.add_term(mono::mul(m1, m2), c1 * c2);
  return out;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial out(nvars_);
  if (c.is_zero()) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial out = Polynomial::constant(nvars_, Rational(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) out = out * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return out;
}

Rational Polynomial::evaluate(const Vector& point) const {
  if (point.size() != nvars_) throw DimensionMismatch("evaluation point of wrong dimension");
  // power tables per variable
  std::vector<std::vector<Rational>> pows(nvars_);
  unsigned maxdeg = terms_.empty() ? 0 : mono::degree(terms_.rbegin()->first);
  for (std::size_t i = 0; i < nvars_; ++i) {
    pows[i].reserve(maxdeg + 1);
    pows[i].push_back(Rational(1));
    for (unsigned e = 1; e <= maxdeg; ++e) pows[i].push_back(pows[i].back() * point[i]);
  }
  Rational acc;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      const unsigned e = mono::exponent(m, i);
      if (e) t *= pows[i][e];
    }
    acc += t;
  }
  return acc;
}

Polynomial Polynomial::substitute(const Matrix& mat) const {
  if (mat.rows() != nvars_ || mat.cols() != nvars_)
    throw DimensionMismatch("substitution matrix of wrong shape");
  // cache powers of the row linear forms
  unsigned maxdeg = terms_.empty() ? 0 : mono::degree(terms_.rbegin()->first);
  std::vector<std::vector<Polynomial>> pows(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i)
    pows[i].push_back(Polynomial::constant(nvars_, Rational(1)));
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) {
    Polynomial t = Polynomial::constant(nvars_, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      const unsigned e = mono::exponent(m, i);
      if (!e) continue;
      while (pows[i].size() <= e) {
        if (pows[i].size() == 1)
          pows[i].push_back(Polynomial::linear_form(mat.row(i)));
        else
          pows[i].push_back(pows[i].back() * pows[i][1]);
      }
      t = t * pows[i][e];
    }
    out += t;
  }
  (void)maxdeg;
  return out;
}

Polynomial Polynomial::translate(const Vector& a) const {
  if (a.size() != nvars_) throw DimensionMismatch("translation vector of wrong dimension");
  Polynomial cur = *this;
  for (std::size_t j = 0; j < nvars_; ++j) {
    if (a[j].is_zero()) continue;
    Polynomial next(nvars_);
    for (const auto& [m, c] : cur.terms_) {
      const unsigned e = mono::exponent(m, j);
      Rational shift_pow(1);
      // k runs down so the power of a_j builds incrementally
      for (unsigned k = e;; --k) {
        next.add_term(mono::with_exponent(m, j, k), c * binomial_rat(e, k) * shift_pow);
        if (k == 0) break;
        shift_pow *= a[j];
      }
    }
    cur = std::move(next);
  }
  return cur;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) {
    const unsigned e = mono::exponent(m, var);
    if (!e) continue;
    out.add_term(mono::with_exponent(m, var, e - 1), c * Rational(static_cast<long>(e)));
  }
  return out;
}

Polynomial Polynomial::derivative_along(const Vector& v) const {
  if (v.size() != nvars_) throw DimensionMismatch("direction of wrong dimension");
  Polynomial out(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (v[i].is_zero()) continue;
    out += derivative(i) * v[i];
  }
  return out;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    for (std::size_t i = 0; i < nvars_; ++i) {
      const unsigned e = mono::exponent(m, i);
      if (!e) continue;
      os << "*x" << i;
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

}  // namespace minuscule
