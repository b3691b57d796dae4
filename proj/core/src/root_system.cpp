#include "minuscule/root_system.hpp"

#include <algorithm>
#include <map>

namespace minuscule {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
  }
  return "?";
}

std::optional<Family> family_from_string(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "B" || s == "b") return Family::B;
  if (s == "C" || s == "c") return Family::C;
  if (s == "D" || s == "d") return Family::D;
  if (s == "E6" || s == "e6") return Family::E6;
  if (s == "E7" || s == "e7") return Family::E7;
  return std::nullopt;
}

namespace {

Vector basis_vector(std::size_t dim, std::size_t i, long val = 1) {
  Vector v(dim);
  v[i] = Rational(val);
  return v;
}

Vector ones(std::size_t dim, const Rational& c) {
  Vector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = c;
  return v;
}

// All +-e_i +- e_j, i < j.
void append_pair_roots(std::vector<Vector>& roots, std::size_t dim) {
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      for (long si : {1L, -1L})
        for (long sj : {1L, -1L}) {
          Vector v(dim);
          v[i] = Rational(si);
          v[j] = Rational(sj);
          roots.push_back(std::move(v));
        }
}

BigInt two_pow(unsigned k) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, k);
  return out;
}

struct E7Data {
  std::vector<Vector> roots;
  std::vector<Vector> simples;
  Vector a;
};

// E7 realized inside R^8 on the sum-zero hyperplane: the integer roots
// e_i - e_j together with the half-integer vectors with four +1/2 and
// four -1/2 entries.
E7Data build_e7_data() {
  E7Data d;
  const std::size_t dim = 8;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (i != j) {
        Vector v(dim);
        v[i] = Rational(1);
        v[j] = Rational(-1);
        d.roots.push_back(std::move(v));
      }
  for (unsigned mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) != 4) continue;
    Vector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = Rational((mask >> i) & 1 ? 1 : -1, 2);
    d.roots.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < 6; ++i) {
    Vector v(dim);
    v[i] = Rational(1);
    v[i + 1] = Rational(-1);
    d.simples.push_back(std::move(v));
  }
  Vector a7p(dim);
  for (std::size_t i = 0; i < 4; ++i) a7p[i] = Rational(-1, 2);
  for (std::size_t i = 4; i < 8; ++i) a7p[i] = Rational(1, 2);
  d.simples.push_back(std::move(a7p));
  Vector a(dim);
  a[0] = Rational(3, 4);
  for (std::size_t i = 1; i < 7; ++i) a[i] = Rational(-1, 4);
  a[7] = Rational(3, 4);
  d.a = std::move(a);
  return d;
}

}  // namespace

RootSystem RootSystem::build(Family f, int rank) { return build(RootSystemLabel{f, rank}); }

RootSystem RootSystem::build(RootSystemLabel label) {
  RootSystem R;
  R.label_ = label;
  const int n = label.rank;
  switch (label.family) {
    case Family::A: {
      if (n < 1 || n > 7) throw InvalidLabel("A_n needs 1 <= n <= 7");
      const std::size_t dim = static_cast<std::size_t>(n) + 1;
      R.ambient_dim_ = dim;
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
          if (i != j) {
            Vector v(dim);
            v[i] = Rational(1);
            v[j] = Rational(-1);
            R.roots_.push_back(std::move(v));
          }
      for (int i = 0; i < n; ++i) {
        Vector v(dim);
        v[i] = Rational(1);
        v[i + 1] = Rational(-1);
        R.simple_roots_.push_back(std::move(v));
      }
      for (int r = 1; r <= n; ++r) {
        const int s = n + 1 - r;
        Vector v(dim);
        for (int i = 0; i < r; ++i) v[i] = Rational(s, n + 1);
        for (int i = r; i <= n; ++i) v[i] = Rational(-r, n + 1);
        R.minuscule_.push_back(std::move(v));
        R.minuscule_names_.push_back("a" + std::to_string(r));
      }
      R.weyl_order_ = factorial(static_cast<unsigned>(n + 1));
      R.complement_.push_back(ones(dim, Rational(1)));
      break;
    }
    case Family::B: {
      if (n < 2 || n > 8) throw InvalidLabel("B_n needs 2 <= n <= 8");
      const std::size_t dim = static_cast<std::size_t>(n);
      R.ambient_dim_ = dim;
      append_pair_roots(R.roots_, dim);
      for (std::size_t i = 0; i < dim; ++i)
        for (long s : {1L, -1L}) R.roots_.push_back(basis_vector(dim, i, s));
      for (std::size_t i = 0; i + 1 < dim; ++i) {
        Vector v(dim);
        v[i] = Rational(1);
        v[i + 1] = Rational(-1);
        R.simple_roots_.push_back(std::move(v));
      }
      R.simple_roots_.push_back(basis_vector(dim, dim - 1));
      R.minuscule_.push_back(basis_vector(dim, 0));
      R.minuscule_names_.push_back("b");
      R.weyl_order_ = two_pow(static_cast<unsigned>(n)) * factorial(static_cast<unsigned>(n));
      break;
    }
    case Family::C: {
      if (n < 2 || n > 8) throw InvalidLabel("C_n needs 2 <= n <= 8");
      const std::size_t dim = static_cast<std::size_t>(n);
      R.ambient_dim_ = dim;
      append_pair_roots(R.roots_, dim);
      for (std::size_t i = 0; i < dim; ++i)
        for (long s : {2L, -2L}) R.roots_.push_back(basis_vector(dim, i, s));
      for (std::size_t i = 0; i + 1 < dim; ++i) {
        Vector v(dim);
        v[i] = Rational(1);
        v[i + 1] = Rational(-1);
        R.simple_roots_.push_back(std::move(v));
      }
      R.simple_roots_.push_back(basis_vector(dim, dim - 1, 2));
      R.minuscule_.push_back(ones(dim, Rational(1, 2)));
      R.minuscule_names_.push_back("c");
      R.weyl_order_ = two_pow(static_cast<unsigned>(n)) * factorial(static_cast<unsigned>(n));
      break;
    }
    case Family::D: {
      if (n < 3 || n > 8) throw InvalidLabel("D_n needs 3 <= n <= 8");
      const std::size_t dim = static_cast<std::size_t>(n);
      R.ambient_dim_ = dim;
      append_pair_roots(R.roots_, dim);
      for (std::size_t i = 0; i + 1 < dim; ++i) {
        Vector v(dim);
        v[i] = Rational(1);
        v[i + 1] = Rational(-1);
        R.simple_roots_.push_back(std::move(v));
      }
      Vector last(dim);
      last[dim - 2] = Rational(1);
      last[dim - 1] = Rational(1);
      R.simple_roots_.push_back(std::move(last));
      Vector cprime = ones(dim, Rational(1, 2));
      cprime[dim - 1] = Rational(-1, 2);
      R.minuscule_.push_back(basis_vector(dim, 0));
      R.minuscule_names_.push_back("b");
      R.minuscule_.push_back(std::move(cprime));
      R.minuscule_names_.push_back("c-prime");
      R.minuscule_.push_back(ones(dim, Rational(1, 2)));
      R.minuscule_names_.push_back("c");
      R.weyl_order_ = two_pow(static_cast<unsigned>(n - 1)) * factorial(static_cast<unsigned>(n));
      break;
    }
    case Family::E7: {
      E7Data d = build_e7_data();
      R.label_.rank = 7;
      R.ambient_dim_ = 8;
      R.roots_ = std::move(d.roots);
      R.simple_roots_ = std::move(d.simples);
      R.minuscule_.push_back(std::move(d.a));
      R.minuscule_names_.push_back("a");
      R.weyl_order_ = two_pow(10) * 243 * 35;  // 2^10 3^5 5 7
      R.complement_.push_back(ones(8, Rational(1)));
      break;
    }
    case Family::E6: {
      E7Data d = build_e7_data();
      R.label_.rank = 6;
      R.ambient_dim_ = 8;
      for (auto& r : d.roots)
        if (dot(r, d.a).is_zero()) R.roots_.push_back(std::move(r));
      R.simple_roots_.assign(d.simples.begin() + 1, d.simples.end());  // alpha2..alpha6, alpha7'
      Vector bplus{Rational(-1, 2), Rational(5, 6),  Rational(-1, 6), Rational(-1, 6),
                   Rational(-1, 6), Rational(-1, 6), Rational(-1, 6), Rational(1, 2)};
      Vector bminus{Rational(-1, 2), Rational(1, 6), Rational(1, 6),  Rational(1, 6),
                    Rational(1, 6),  Rational(1, 6), Rational(-5, 6), Rational(1, 2)};
      R.minuscule_.push_back(std::move(bplus));
      R.minuscule_names_.push_back("b+");
      R.minuscule_.push_back(std::move(bminus));
      R.minuscule_names_.push_back("b-");
      R.weyl_order_ = two_pow(7) * 81 * 5;  // 2^7 3^4 5
      R.complement_.push_back(ones(8, Rational(1)));
      R.complement_.push_back(d.a);
      break;
    }
  }
  R.finalize();
  return R;
}

void RootSystem::finalize() {
  std::sort(roots_.begin(), roots_.end());
  root_set_.insert(roots_.begin(), roots_.end());

  // RREF of [simple-basis columns | I] so membership in the simple span and
  // the coordinates there come from one precomputed elimination.
  const std::size_t k = simple_roots_.size();
  Matrix aug(ambient_dim_, k + ambient_dim_);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < ambient_dim_; ++i) aug.at(i, j) = simple_roots_[j][i];
  for (std::size_t i = 0; i < ambient_dim_; ++i) aug.at(i, k + i) = Rational(1);
  RowReduction red = row_reduce(std::move(aug));
  simple_solver_ = std::move(red.echelon);
  solver_pivots_ = std::move(red.pivot_columns);

  // The highest root is the positive root of maximal height.
  const Vector* best = nullptr;
  Rational best_height;
  for (const auto& r : roots_) {
    auto coords = simple_root_coordinates(r);
    if (!coords) continue;
    Rational h;
    bool pos = true;
    for (const auto& c : *coords) {
      if (c.sign() < 0) { pos = false; break; }
      h += c;
    }
    if (!pos) continue;
    if (best == nullptr || best_height < h) {
      best = &r;
      best_height = h;
    }
  }
  highest_root_ = *best;
  auto mults = simple_root_coordinates(highest_root_);
  highest_mults_.clear();
  for (const auto& c : *mults) highest_mults_.push_back(static_cast<long>(c.numerator().get_si()));
}

bool RootSystem::is_dominant(const Vector& v) const {
  for (const auto& s : simple_roots_)
    if (dot(s, v).sign() < 0) return false;
  return true;
}

std::optional<std::vector<Rational>> RootSystem::simple_root_coordinates(const Vector& v) const {
  if (v.size() != ambient_dim_) throw DimensionMismatch("vector not in the ambient space");
  const std::size_t k = simple_roots_.size();
  // w = U v where U is the right block of the stored elimination.
  std::vector<Rational> w(ambient_dim_);
  for (std::size_t i = 0; i < ambient_dim_; ++i) {
    Rational acc;
    for (std::size_t j = 0; j < ambient_dim_; ++j) {
      if (simple_solver_.at(i, k + j).is_zero() || v[j].is_zero()) continue;
      acc += simple_solver_.at(i, k + j) * v[j];
    }
    w[i] = std::move(acc);
  }
  for (std::size_t i = k; i < ambient_dim_; ++i)
    if (!w[i].is_zero()) return std::nullopt;
  return std::vector<Rational>(w.begin(), w.begin() + k);
}

bool RootSystem::is_positive_root(const Vector& v) const {
  if (!contains_root(v)) return false;
  auto coords = simple_root_coordinates(v);
  for (const auto& c : *coords)
    if (c.sign() < 0) return false;
  return true;
}

std::vector<Vector> RootSystem::positive_roots() const {
  std::vector<Vector> out;
  for (const auto& r : roots_)
    if (is_positive_root(r)) out.push_back(r);
  return out;
}

Vector RootSystem::rho_check() const {
  Vector out(ambient_dim_);
  for (const auto& r : roots_) {
    if (!is_positive_root(r)) continue;
    out += (Rational(1) / dot(r, r)) * r;
  }
  return out;
}

std::optional<Vector> RootSystem::minuscule_coweight_by_name(const std::string& name) const {
  for (std::size_t i = 0; i < minuscule_.size(); ++i)
    if (minuscule_names_[i] == name) return minuscule_[i];
  return std::nullopt;
}

SubSystem orthogonal_subsystem(const RootSystem& R, const Vector& v) {
  SubSystem out;
  out.fixed_vector = v;
  std::unordered_set<Vector, VectorHash> positives;
  for (const auto& r : R.roots()) {
    if (!dot(r, v).is_zero()) continue;
    out.roots.push_back(r);
    if (R.is_positive_root(r)) positives.insert(r);
  }
  std::sort(out.roots.begin(), out.roots.end());
  for (const auto& alpha : positives) {
    bool decomposable = false;
    for (const auto& beta : positives) {
      if (beta == alpha) continue;
      if (positives.count(alpha - beta)) { decomposable = true; break; }
    }
    if (!decomposable) out.simple_roots.push_back(alpha);
  }
  std::sort(out.simple_roots.begin(), out.simple_roots.end());
  return out;
}

MinusculeCheck is_minuscule(const RootSystem& R, const Vector& v) {
  MinusculeCheck out;
  if (v.size() != R.ambient_dim()) throw DimensionMismatch("vector not in the ambient space");
  if (v.is_zero()) return out;
  Rational level;  // common magnitude of the nonzero pairings
  for (const auto& r : R.roots()) {
    Rational p = abs(dot(r, v));
    if (p.is_zero()) continue;
    if (level.is_zero()) {
      level = std::move(p);
    } else if (p != level) {
      return out;
    }
  }
  if (level.is_zero()) return out;  // orthogonal to every root
  out.minuscule = true;
  out.normalized = (Rational(1) / level) * v;
  return out;
}

}  // namespace minuscule
