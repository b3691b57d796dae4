#pragma once

#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "minuscule/matrix.hpp"
#include "minuscule/vector.hpp"

namespace minuscule {

enum class Family { A, B, C, D, E6, E7 };

std::string family_name(Family f);
std::optional<Family> family_from_string(const std::string& s);

struct RootSystemLabel {
  Family family;
  int rank;
  std::string str() const { return family_name(family) + (family == Family::E6 || family == Family::E7 ? "" : std::to_string(rank)); }
  friend bool operator==(const RootSystemLabel& a, const RootSystemLabel& b) = default;
};

/*
 * A root system in the ambient coordinates of its classical model:
 *   A_n   inside R^{n+1}, sum-zero hyperplane
 *   B_n, C_n, D_n inside R^n
 *   E7    inside R^8, sum-zero hyperplane
 *   E6    inside R^8, orthogonal to the E7 minuscule coweight
 * Immutable after build(); values can be freely shared.
 */
class RootSystem {
 public:
  static RootSystem build(RootSystemLabel label);
  static RootSystem build(Family f, int rank = 0);

  const RootSystemLabel& label() const { return label_; }
  int rank() const { return static_cast<int>(simple_roots_.size()); }
  std::size_t ambient_dim() const { return ambient_dim_; }

  const std::vector<Vector>& roots() const { return roots_; }  // sorted
  const std::vector<Vector>& simple_roots() const { return simple_roots_; }
  const Vector& highest_root() const { return highest_root_; }
  const std::vector<long>& highest_root_multiplicities() const { return highest_mults_; }
  const std::vector<Vector>& minuscule_coweights() const { return minuscule_; }
  const std::vector<std::string>& minuscule_names() const { return minuscule_names_; }
  const BigInt& weyl_order() const { return weyl_order_; }
  // Basis of the orthogonal complement of span(roots) in the ambient space.
  const std::vector<Vector>& invariant_complement() const { return complement_; }

  bool contains_root(const Vector& v) const { return root_set_.count(v) != 0; }
  bool is_dominant(const Vector& v) const;

  // Coordinates of v in the simple-root basis, if v lies in their span.
  std::optional<std::vector<Rational>> simple_root_coordinates(const Vector& v) const;
  bool is_positive_root(const Vector& v) const;
  std::vector<Vector> positive_roots() const;

  // Half the sum of the positive coroots; strictly dominant.
  Vector rho_check() const;

  std::optional<Vector> minuscule_coweight_by_name(const std::string& name) const;

 private:
  RootSystem() = default;
  void finalize();  // sorts roots, fills root_set_ and simple-basis solver

  RootSystemLabel label_{Family::A, 1};
  std::size_t ambient_dim_ = 0;
  std::vector<Vector> roots_;
  std::vector<Vector> simple_roots_;
  Vector highest_root_;
  std::vector<long> highest_mults_;
  std::vector<Vector> minuscule_;
  std::vector<std::string> minuscule_names_;
  BigInt weyl_order_;
  std::vector<Vector> complement_;
  std::unordered_set<Vector, VectorHash> root_set_;
  Matrix simple_solver_;                 // RREF of [simple-basis columns | I]
  std::vector<std::size_t> solver_pivots_;
};

struct SubSystem {
  Vector fixed_vector;
  std::vector<Vector> roots;             // sorted; the parent roots orthogonal to fixed_vector
  std::vector<Vector> simple_roots;      // indecomposable positive roots, sorted
};

// Roots of R orthogonal to v, together with a simple system for them
// (positivity inherited from the parent).
SubSystem orthogonal_subsystem(const RootSystem& R, const Vector& v);

struct MinusculeCheck {
  bool minuscule = false;
  std::optional<Vector> normalized;      // the positive multiple with pairings in {0, +-1}
};

// Tests whether some positive multiple of v pairs within {0, +-1} against
// every root, with at least one nonzero pairing.
MinusculeCheck is_minuscule(const RootSystem& R, const Vector& v);

}  // namespace minuscule
