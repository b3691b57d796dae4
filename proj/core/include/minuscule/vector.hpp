#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "minuscule/errors.hpp"
#include "minuscule/rational.hpp"

namespace minuscule {

/*
 * Exact vector of a fixed ambient space. Comparison is lexicographic on the
 * coordinates; that order is the canonical enumeration order used by orbit
 * search, so identical inputs always produce identical traversals.
 */
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim) : c_(dim) {}
  explicit Vector(std::vector<Rational> coords) : c_(std::move(coords)) {}
  Vector(std::initializer_list<Rational> coords) : c_(coords) {}

  std::size_t size() const { return c_.size(); }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  Rational& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const;

  Vector operator-() const;
  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  friend Vector operator+(Vector a, const Vector& b) { a += b; return a; }
  friend Vector operator-(Vector a, const Vector& b) { a -= b; return a; }
  friend Vector operator*(const Rational& c, const Vector& v);

  friend bool operator==(const Vector& a, const Vector& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Vector& a, const Vector& b) { return !(a == b); }
  friend bool operator<(const Vector& a, const Vector& b);

  std::size_t hash() const;
  std::string str() const;  // "(1, -1/2, 0)"

 private:
  std::vector<Rational> c_;
};

Rational dot(const Vector& u, const Vector& v);
// q(v) = (v, v)/2, the quadratic form the root systems are normalized by.
Rational q_value(const Vector& v);

std::ostream& operator<<(std::ostream& os, const Vector& v);

struct VectorHash {
  std::size_t operator()(const Vector& v) const { return v.hash(); }
};

// Convenience for tests and fixtures: whole or half-integer coordinates.
Vector vec_of_longs(std::initializer_list<long> xs);
Vector vec_scaled(long den, std::initializer_list<long> nums);

}  // namespace minuscule
