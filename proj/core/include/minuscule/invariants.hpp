#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "minuscule/polynomial.hpp"
#include "minuscule/weyl.hpp"

namespace minuscule {

Polynomial linear_form(const Vector& v);

// Sum over the orbit of the i-th powers of the linear forms; for i = 0 the
// constant |orbit|. Built by direct multinomial expansion, which keeps the
// degree-12 sums over 27-element orbits cheap.
Polynomial orbit_power_sum(std::span<const Vector> orbit_elements, unsigned i,
                           std::size_t nvars);
Polynomial orbit_power_sum(const Orbit& o, unsigned i);

// Product of the linear forms of a nonempty set.
Polynomial orbit_product(std::span<const Vector> elements, std::size_t nvars);

// The translation automorphism: f -> f(. + a).
Polynomial translate(const Polynomial& f, const Vector& a);

// Group average; the group must be closed under composition.
Polynomial reynolds(std::span<const GroupElement> group, const Polynomial& f);

/*
 * Graded dimensions of a polynomial invariant ring from its fundamental
 * degrees: coefficients of 1 / ((1-t)^trivial * prod_i (1-t^{d_i})).
 */
struct HilbertSpec {
  std::vector<unsigned> reflection_degrees;
  unsigned trivial_directions = 0;

  BigInt degree_product() const;  // Chevalley check: equals the group order
};

long invariant_dim(const HilbertSpec& spec, unsigned d);
std::vector<long> invariant_dims_upto(const HilbertSpec& spec, unsigned D);
std::vector<long> cumulative(const std::vector<long>& dims);

struct GeneratorSet {
  std::vector<Polynomial> gens;
  std::vector<std::string> provenance;
};

/*
 * Echelonized spanning set of a filtered subspace, rows keyed by leading
 * monomial in graded-lex order. Because higher monomials lead, the pivots
 * of degree <= d count exactly dim(span intersected with S_{<=d}).
 */
class FilteredSpan {
 public:
  explicit FilteredSpan(std::size_t nvars) : nvars_(nvars) {}

  // Reduces p against the basis; if a pivot remains, stores the monic
  // residual and returns it. Returns nullopt when p lies in the span.
  std::optional<Polynomial> insert(Polynomial p);

  std::size_t dimension() const { return rows_.size(); }
  long dimension_up_to(unsigned d) const;
  std::vector<long> dims_up_to(unsigned D) const;  // cumulative, d = 0..D

 private:
  std::size_t nvars_;
  std::map<Mono, Polynomial, mono::GradedLexLess> rows_;
};

/*
 * Filtered dimensions of the subalgebra generated by G, computed as a
 * degree-capped closure: new basis elements (including those surfacing at
 * lower degree through cancellation) are multiplied back in while the
 * degrees fit the budget. Dimensions are certified lower bounds of
 * dim(subalgebra intersected with S_{<=d}) for d = 0..D.
 */
std::vector<long> filtered_subalgebra_dims(const GeneratorSet& G, unsigned D);

// Max over sample points of the exact rank of the gradient matrix; a lower
// bound for the transcendence degree, exact at any regular point.
int jacobian_rank(std::span<const Polynomial> polys, std::span<const Vector> sample_points);

/*
 * Reynolds-operator route to the same graded dimensions invariant_dim
 * computes from degrees: averages every monomial of degree d and counts the
 * rank, restricted to polynomials annihilated by the given directional
 * derivatives (the sum-zero style constraints of the ambient models).
 * The two routes stay fully independent so they can check each other.
 */
long reynolds_invariant_dim(std::span<const GroupElement> group, std::size_t nvars, unsigned d,
                            std::span<const Vector> constraint_directions);

}  // namespace minuscule
