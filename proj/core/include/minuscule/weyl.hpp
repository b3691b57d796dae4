#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "minuscule/matrix.hpp"
#include "minuscule/root_system.hpp"

namespace minuscule {

/*
 * A word in reflections, indices into some generator list (usually the
 * simple roots of a root system). Composition order: the leftmost letter
 * is applied last, so concatenating words composes the maps.
 */
struct WeylWord {
  std::vector<int> letters;
  bool empty() const { return letters.empty(); }
  std::size_t length() const { return letters.size(); }
};

WeylWord inverse(const WeylWord& w);
WeylWord concat(const WeylWord& first_applied_last, const WeylWord& first_applied_first);

// s_alpha(v) = v - (2 (v, alpha) / (alpha, alpha)) alpha
Vector reflect_root(const Vector& alpha, const Vector& v);
Matrix reflection_matrix(std::size_t dim, const Vector& alpha);

Vector apply_word(std::span<const Vector> generators, const WeylWord& w, Vector v);
Matrix word_matrix(std::size_t dim, std::span<const Vector> generators, const WeylWord& w);
Vector apply_word(const RootSystem& R, const WeylWord& w, Vector v);
Matrix word_matrix(const RootSystem& R, const WeylWord& w);

struct GroupElement {
  Matrix matrix;
  WeylWord word;
};

struct DominantRep {
  Vector dominant;
  WeylWord word;  // maps the input to the dominant representative
};

// Ascent by simple reflections, scanning simple roots in index order and
// restarting after each application. Components orthogonal to every root
// are untouched. Deterministic, so the witness words are reproducible.
DominantRep dominant_rep(const RootSystem& R, const Vector& v);

// Simple roots orthogonal to a dominant vector; they generate the full
// stabilizer. Throws NotDominant otherwise.
std::vector<Vector> stabilizer_simple_roots(const RootSystem& R, const Vector& a);
std::vector<int> stabilizer_simple_indices(const RootSystem& R, const Vector& a);

class Orbit {
 public:
  Orbit(Vector base, std::vector<Vector> generators, std::vector<Vector> elements,
        std::unordered_map<Vector, WeylWord, VectorHash> words);

  const Vector& base() const { return base_; }
  const std::vector<Vector>& generators() const { return generators_; }
  const std::vector<Vector>& elements() const { return elements_; }  // sorted
  std::size_t size() const { return elements_.size(); }
  bool contains(const Vector& v) const { return words_.count(v) != 0; }
  // Word over generators() with apply_word(generators(), word, base) == v.
  const WeylWord& word_to(const Vector& v) const;

 private:
  Vector base_;
  std::vector<Vector> generators_;
  std::vector<Vector> elements_;
  std::unordered_map<Vector, WeylWord, VectorHash> words_;
};

// Breadth-first closure of {base} under the given reflections, visiting each
// level in canonical (lexicographic) order. Throws CapExceeded past cap.
Orbit orbit(std::vector<Vector> generator_roots, Vector base, std::int64_t cap);

struct OrbitPartition {
  std::vector<std::vector<Vector>> blocks;  // each sorted; ordered by least element
  std::vector<std::size_t> block_sizes() const;
};

// Partition of S into closures under the given reflections. Throws if a
// reflection maps an element of S outside S.
OrbitPartition orbit_partition(std::span<const Vector> generator_roots,
                               const std::vector<Vector>& S);

// Full enumeration with matrices and witness words; meant for groups small
// enough to average polynomials over. Throws CapExceeded past cap.
std::vector<GroupElement> enumerate_group(std::size_t dim, std::vector<Vector> generator_roots,
                                          std::int64_t cap);

// Order of the generated reflection group, via its faithful permutation
// action on the root subsystem the generators span. Handles the subgroup
// scales where materializing matrices would be wasteful.
BigInt enumerate_group_order(std::vector<Vector> generator_roots, std::int64_t cap);

struct ConjugacyResult {
  bool conjugate = false;
  WeylWord witness;  // maps the second argument to the first when conjugate
};

ConjugacyResult conjugate(const RootSystem& R, const Vector& v, const Vector& w);

}  // namespace minuscule
