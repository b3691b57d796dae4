#include "minuscule/vector.hpp"

#include <ostream>
#include <sstream>

namespace minuscule {

bool Vector::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

Vector Vector::operator-() const {
  Vector out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = -c_[i];
  return out;
}

Vector& Vector::operator+=(const Vector& o) {
  if (c_.size() != o.c_.size()) throw DimensionMismatch("vector addition with mismatched dimensions");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  if (c_.size() != o.c_.size()) throw DimensionMismatch("vector subtraction with mismatched dimensions");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Vector operator*(const Rational& c, const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

bool operator<(const Vector& a, const Vector& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = compare(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

std::size_t Vector::hash() const {
  std::size_t h = 0x811c9dc5u;
  for (const auto& x : c_) {
    h ^= x.hash();
    h *= 1099511628211ull;
  }
  return h;
}

std::string Vector::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ", ";
    os << c_[i].str();
  }
  os << ')';
  return os.str();
}

Rational dot(const Vector& u, const Vector& v) {
  if (u.size() != v.size()) throw DimensionMismatch("dot product with mismatched dimensions");
  Rational out;
  for (std::size_t i = 0; i < u.size(); ++i) out += u[i] * v[i];
  return out;
}

Rational q_value(const Vector& v) { return dot(v, v) / Rational(2); }

std::ostream& operator<<(std::ostream& os, const Vector& v) { return os << v.str(); }

Vector vec_of_longs(std::initializer_list<long> xs) {
  std::vector<Rational> c;
  c.reserve(xs.size());
  for (long x : xs) c.emplace_back(x);
  return Vector(std::move(c));
}

Vector vec_scaled(long den, std::initializer_list<long> nums) {
  std::vector<Rational> c;
  c.reserve(nums.size());
  for (long x : nums) c.emplace_back(x, den);
  return Vector(std::move(c));
}

}  // namespace minuscule
