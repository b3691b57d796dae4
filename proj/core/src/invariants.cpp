#include "minuscule/invariants.hpp"

#include <algorithm>

#include "minuscule/errors.hpp"

namespace minuscule {

Polynomial linear_form(const Vector& v) { return Polynomial::linear_form(v); }

Polynomial orbit_power_sum(std::span<const Vector> orbit_elements, unsigned i,
                           std::size_t nvars) {
  Polynomial out(nvars);
  if (orbit_elements.empty()) return out;
  if (i == 0) return Polynomial::constant(nvars, Rational(static_cast<long>(orbit_elements.size())));
  // power tables per orbit element
  std::vector<std::vector<std::vector<Rational>>> pows;  // [elem][var][exp]
  pows.reserve(orbit_elements.size());
  for (const auto& x : orbit_elements) {
    std::vector<std::vector<Rational>> t(nvars);
    for (std::size_t v = 0; v < nvars; ++v) {
      t[v].reserve(i + 1);
      t[v].push_back(Rational(1));
      for (unsigned e = 1; e <= i; ++e) t[v].push_back(t[v].back() * x[v]);
    }
    pows.push_back(std::move(t));
  }
  // multinomial coefficients i! / prod e_j!
  const BigInt fact_i = factorial(i);
  for (Mono m : mono::of_degree(nvars, i)) {
    Rational total;
    for (std::size_t k = 0; k < orbit_elements.size(); ++k) {
      Rational prod(1);
      bool zero = false;
      for (std::size_t v = 0; v < nvars && !zero; ++v) {
        const unsigned e = mono::exponent(m, v);
        if (!e) continue;
        if (orbit_elements[k][v].is_zero()) { zero = true; break; }
        prod *= pows[k][v][e];
      }
      if (!zero) total += prod;
    }
    if (total.is_zero()) continue;
    BigInt denom(1);
    for (std::size_t v = 0; v < nvars; ++v) {
      const unsigned e = mono::exponent(m, v);
      if (e > 1) denom *= factorial(e);
    }
    mpq_class coef(fact_i, denom);
    out.add_term(m, Rational(std::move(coef)) * total);
  }
  return out;
}

Polynomial orbit_power_sum(const Orbit& o, unsigned i) {
  return orbit_power_sum(std::span<const Vector>(o.elements()), i,
                         o.base().size());
}

Polynomial orbit_product(std::span<const Vector> elements, std::size_t nvars) {
  if (elements.empty()) throw std::invalid_argument("orbit product of an empty set");
  Polynomial out = Polynomial::constant(nvars, Rational(1));
  for (const auto& x : elements) out = out * Polynomial::linear_form(x);
  return out;
}

Polynomial translate(const Polynomial& f, const Vector& a) { return f.translate(a); }

Polynomial reynolds(std::span<const GroupElement> group, const Polynomial& f) {
  if (group.empty()) throw std::invalid_argument("Reynolds average over an empty group");
  Polynomial acc(f.nvars());
  for (const auto& g : group) acc += f.substitute(g.matrix);
  return acc * (Rational(1) / Rational(static_cast<long>(group.size())));
}

BigInt HilbertSpec::degree_product() const {
  BigInt p(1);
  for (unsigned d : reflection_degrees) p *= d;
  return p;
}

std::vector<long> invariant_dims_upto(const HilbertSpec& spec, unsigned D) {
  std::vector<long> co(D + 1, 0);
  co[0] = 1;
  auto fold = [&](unsigned step) {
    for (unsigned i = step; i <= D; ++i) co[i] += co[i - step];
  };
  for (unsigned k = 0; k < spec.trivial_directions; ++k) fold(1);
  for (unsigned d : spec.reflection_degrees) fold(d);
  return co;
}

long invariant_dim(const HilbertSpec& spec, unsigned d) {
  return invariant_dims_upto(spec, d)[d];
}

std::vector<long> cumulative(const std::vector<long>& dims) {
  std::vector<long> out;
  out.reserve(dims.size());
  long acc = 0;
  for (long d : dims) {
    acc += d;
    out.push_back(acc);
  }
  return out;
}

std::optional<Polynomial> FilteredSpan::insert(Polynomial p) {
  while (!p.is_zero()) {
    const Mono lead = p.leading_monomial();
    auto it = rows_.find(lead);
    if (it == rows_.end()) {
      p = p * (Rational(1) / p.coefficient(lead));
      rows_.emplace(lead, p);
      return p;
    }
    p -= it->second * p.coefficient(lead);
  }
  return std::nullopt;
}

long FilteredSpan::dimension_up_to(unsigned d) const {
  long count = 0;
  for (const auto& [m, row] : rows_)
    if (mono::degree(m) <= d) ++count;
  return count;
}

std::vector<long> FilteredSpan::dims_up_to(unsigned D) const {
  std::vector<long> out(D + 1, 0);
  for (const auto& [m, row] : rows_) {
    const unsigned d = mono::degree(m);
    if (d <= D) ++out[d];
  }
  long acc = 0;
  for (auto& x : out) {
    acc += x;
    x = acc;
  }
  return out;
}

std::vector<long> filtered_subalgebra_dims(const GeneratorSet& G, unsigned D) {
  if (G.gens.empty()) throw std::invalid_argument("empty generator set");
  const std::size_t nvars = G.gens.front().nvars();
  // memory guard: the monomial count of the full polynomial space
  {
    BigInt count = binomial(D + static_cast<unsigned>(nvars), static_cast<unsigned>(nvars));
    if (count > 2000000) throw ResourceLimit("filtered subalgebra budget too large");
  }
  FilteredSpan span(nvars);
  std::vector<Polynomial> elems;  // reduced residuals, in derivation order
  auto admit = [&](Polynomial p) {
    if (p.is_zero() || p.total_degree() > static_cast<int>(D)) return false;
    auto residual = span.insert(std::move(p));
    if (!residual) return false;
    elems.push_back(std::move(*residual));
    return true;
  };
  admit(Polynomial::constant(nvars, Rational(1)));
  std::size_t round_start = 0;
  for (const auto& g : G.gens) admit(g);
  // closure rounds: multiply every fresh element against everything derived
  while (round_start < elems.size()) {
    const std::size_t round_end = elems.size();
    for (std::size_t i = round_start; i < round_end; ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        if (elems[i].total_degree() + elems[j].total_degree() > static_cast<int>(D)) continue;
        admit(elems[i] * elems[j]);
      }
    round_start = round_end;
  }
  return span.dims_up_to(D);
}

int jacobian_rank(std::span<const Polynomial> polys, std::span<const Vector> sample_points) {
  if (polys.empty()) return 0;
  const std::size_t nvars = polys.front().nvars();
  std::vector<std::vector<Polynomial>> grads;
  grads.reserve(polys.size());
  for (const auto& p : polys) {
    std::vector<Polynomial> g;
    g.reserve(nvars);
    for (std::size_t v = 0; v < nvars; ++v) g.push_back(p.derivative(v));
    grads.push_back(std::move(g));
  }
  int best = 0;
  for (const auto& pt : sample_points) {
    Matrix m(polys.size(), nvars);
    for (std::size_t i = 0; i < polys.size(); ++i)
      for (std::size_t v = 0; v < nvars; ++v) m.at(i, v) = grads[i][v].evaluate(pt);
    best = std::max(best, static_cast<int>(rank_of(m)));
  }
  return best;
}

long reynolds_invariant_dim(std::span<const GroupElement> group, std::size_t nvars, unsigned d,
                            std::span<const Vector> constraint_directions) {
  if (group.empty()) throw std::invalid_argument("Reynolds average over an empty group");
  if (d == 0) return 1;
  FilteredSpan invariants(nvars);
  std::vector<Polynomial> basis;
  for (Mono m : mono::of_degree(nvars, d)) {
    Polynomial avg = reynolds(group, Polynomial::monomial(nvars, m, Rational(1)));
    auto residual = invariants.insert(std::move(avg));
    if (residual) basis.push_back(std::move(*residual));
  }
  if (constraint_directions.empty()) return static_cast<long>(basis.size());
  // dim ker = dim - rank of the joint directional-derivative map
  const auto cols = mono::of_degree(nvars, d - 1);
  std::map<Mono, std::size_t> colidx;
  for (std::size_t i = 0; i < cols.size(); ++i) colidx.emplace(cols[i], i);
  const std::size_t k = constraint_directions.size();
  Matrix m(basis.size(), cols.size() * k);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t block = 0; block < k; ++block) {
      Polynomial der = basis[i].derivative_along(constraint_directions[block]);
      for (const auto& [mn, c] : der.terms())
        m.at(i, block * cols.size() + colidx.at(mn)) = c;
    }
  return static_cast<long>(basis.size() - rank_of(m));
}

}  // namespace minuscule
