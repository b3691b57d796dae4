#include "minuscule/weyl.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <unordered_set>

#include "minuscule/errors.hpp"

namespace minuscule {

WeylWord inverse(const WeylWord& w) {
  WeylWord out;
  out.letters.assign(w.letters.rbegin(), w.letters.rend());
  return out;
}

WeylWord concat(const WeylWord& a, const WeylWord& b) {
  WeylWord out;
  out.letters.reserve(a.letters.size() + b.letters.size());
  out.letters.insert(out.letters.end(), a.letters.begin(), a.letters.end());
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

Vector reflect_root(const Vector& alpha, const Vector& v) {
  const Rational norm = dot(alpha, alpha);
  if (norm.is_zero()) throw std::invalid_argument("reflection in the zero vector");
  const Rational c = (Rational(2) * dot(v, alpha)) / norm;
  return v - c * alpha;
}

Matrix reflection_matrix(std::size_t dim, const Vector& alpha) {
  const Rational norm = dot(alpha, alpha);
  if (norm.is_zero()) throw std::invalid_argument("reflection in the zero vector");
  Matrix m = Matrix::identity(dim);
  const Rational two_over = Rational(2) / norm;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m.at(i, j) -= two_over * alpha[i] * alpha[j];
  return m;
}

Vector apply_word(std::span<const Vector> generators, const WeylWord& w, Vector v) {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    v = reflect_root(generators[static_cast<std::size_t>(*it)], v);
  return v;
}

Matrix word_matrix(std::size_t dim, std::span<const Vector> generators, const WeylWord& w) {
  Matrix m = Matrix::identity(dim);
  for (int letter : w.letters)
    m = m * reflection_matrix(dim, generators[static_cast<std::size_t>(letter)]);
  return m;
}

Vector apply_word(const RootSystem& R, const WeylWord& w, Vector v) {
  return apply_word(std::span<const Vector>(R.simple_roots()), w, std::move(v));
}

Matrix word_matrix(const RootSystem& R, const WeylWord& w) {
  return word_matrix(R.ambient_dim(), std::span<const Vector>(R.simple_roots()), w);
}

DominantRep dominant_rep(const RootSystem& R, const Vector& v) {
  DominantRep out;
  out.dominant = v;
  std::vector<int> applied;
  const auto& simples = R.simple_roots();
  const std::size_t guard = 8 * R.roots().size() + 16;
  for (;;) {
    bool moved = false;
    for (std::size_t i = 0; i < simples.size(); ++i) {
      if (dot(simples[i], out.dominant).sign() < 0) {
        out.dominant = reflect_root(simples[i], out.dominant);
        applied.push_back(static_cast<int>(i));
        moved = true;
        break;
      }
    }
    if (!moved) break;
    if (applied.size() > guard)
      throw std::logic_error("dominant ascent failed to terminate");
  }
  out.word.letters.assign(applied.rbegin(), applied.rend());
  return out;
}

std::vector<Vector> stabilizer_simple_roots(const RootSystem& R, const Vector& a) {
  std::vector<Vector> out;
  for (int i : stabilizer_simple_indices(R, a))
    out.push_back(R.simple_roots()[static_cast<std::size_t>(i)]);
  return out;
}

std::vector<int> stabilizer_simple_indices(const RootSystem& R, const Vector& a) {
  if (!R.is_dominant(a))
    throw NotDominant("stabilizer generators need a dominant vector; take dominant_rep first");
  std::vector<int> out;
  for (std::size_t i = 0; i < R.simple_roots().size(); ++i)
    if (dot(R.simple_roots()[i], a).is_zero()) out.push_back(static_cast<int>(i));
  return out;
}

Orbit::Orbit(Vector base, std::vector<Vector> generators, std::vector<Vector> elements,
             std::unordered_map<Vector, WeylWord, VectorHash> words)
    : base_(std::move(base)),
      generators_(std::move(generators)),
      elements_(std::move(elements)),
      words_(std::move(words)) {}

const WeylWord& Orbit::word_to(const Vector& v) const {
  auto it = words_.find(v);
  if (it == words_.end()) throw std::out_of_range("vector not in orbit");
  return it->second;
}

Orbit orbit(std::vector<Vector> generator_roots, Vector base, std::int64_t cap) {
  std::unordered_map<Vector, WeylWord, VectorHash> words;
  words.emplace(base, WeylWord{});
  std::vector<Vector> frontier{base};
  while (!frontier.empty()) {
    std::sort(frontier.begin(), frontier.end());
    std::vector<Vector> next;
    for (const auto& x : frontier) {
      const WeylWord& wx = words.at(x);
      for (std::size_t g = 0; g < generator_roots.size(); ++g) {
        Vector y = reflect_root(generator_roots[g], x);
        if (words.count(y)) continue;
        WeylWord wy;
        wy.letters.reserve(wx.letters.size() + 1);
        wy.letters.push_back(static_cast<int>(g));
        wy.letters.insert(wy.letters.end(), wx.letters.begin(), wx.letters.end());
        words.emplace(y, std::move(wy));
        next.push_back(std::move(y));
        if (static_cast<std::int64_t>(words.size()) > cap)
          throw CapExceeded("orbit exceeded its cap", cap);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Vector> elements;
  elements.reserve(words.size());
  for (const auto& [v, w] : words) elements.push_back(v);
  std::sort(elements.begin(), elements.end());
  return Orbit(std::move(base), std::move(generator_roots), std::move(elements),
               std::move(words));
}

std::vector<std::size_t> OrbitPartition::block_sizes() const {
  std::vector<std::size_t> out;
  out.reserve(blocks.size());
  for (const auto& b : blocks) out.push_back(b.size());
  std::sort(out.begin(), out.end());
  return out;
}

OrbitPartition orbit_partition(std::span<const Vector> generator_roots,
                               const std::vector<Vector>& S) {
  std::unordered_set<Vector, VectorHash> pool(S.begin(), S.end());
  std::vector<Vector> sorted(S.begin(), S.end());
  std::sort(sorted.begin(), sorted.end());
  std::unordered_set<Vector, VectorHash> assigned;
  OrbitPartition out;
  for (const auto& seed : sorted) {
    if (assigned.count(seed)) continue;
    std::vector<Vector> block{seed};
    std::unordered_set<Vector, VectorHash> seen{seed};
    std::vector<Vector> frontier{seed};
    while (!frontier.empty()) {
      std::vector<Vector> next;
      for (const auto& x : frontier)
        for (const auto& g : generator_roots) {
          Vector y = reflect_root(g, x);
          if (!pool.count(y))
            throw std::invalid_argument("set is not stable under the given reflections");
          if (seen.insert(y).second) {
            block.push_back(y);
            next.push_back(std::move(y));
          }
        }
      frontier = std::move(next);
    }
    std::sort(block.begin(), block.end());
    assigned.insert(block.begin(), block.end());
    out.blocks.push_back(std::move(block));
  }
  return out;
}

std::vector<GroupElement> enumerate_group(std::size_t dim, std::vector<Vector> generator_roots,
                                          std::int64_t cap) {
  std::vector<Matrix> gens;
  gens.reserve(generator_roots.size());
  for (const auto& g : generator_roots) gens.push_back(reflection_matrix(dim, g));

  std::unordered_map<Matrix, WeylWord, MatrixHash> seen;
  seen.emplace(Matrix::identity(dim), WeylWord{});
  std::vector<Matrix> frontier{Matrix::identity(dim)};
  while (!frontier.empty()) {
    std::vector<Matrix> next;
    for (const auto& m : frontier) {
      const WeylWord& wm = seen.at(m);
      for (std::size_t g = 0; g < gens.size(); ++g) {
        Matrix prod = gens[g] * m;
        if (seen.count(prod)) continue;
        WeylWord w;
        w.letters.reserve(wm.letters.size() + 1);
        w.letters.push_back(static_cast<int>(g));
        w.letters.insert(w.letters.end(), wm.letters.begin(), wm.letters.end());
        seen.emplace(prod, std::move(w));
        next.push_back(std::move(prod));
        if (static_cast<std::int64_t>(seen.size()) > cap)
          throw CapExceeded("group enumeration exceeded its cap", cap);
      }
    }
    frontier = std::move(next);
  }
  std::vector<GroupElement> out;
  out.reserve(seen.size());
  for (auto& [m, w] : seen) out.push_back(GroupElement{m, w});
  // canonical order: by word length, then by word letters
  std::sort(out.begin(), out.end(), [](const GroupElement& a, const GroupElement& b) {
    if (a.word.length() != b.word.length()) return a.word.length() < b.word.length();
    return a.word.letters < b.word.letters;
  });
  return out;
}

namespace {

struct PermHash {
  std::size_t operator()(const std::vector<std::uint16_t>& p) const {
    std::size_t h = 0x811c9dc5u;
    for (std::uint16_t x : p) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

BigInt enumerate_group_order(std::vector<Vector> generator_roots, std::int64_t cap) {
  if (generator_roots.empty()) return 1;
  // Close the generator set into the root subsystem it generates; the group
  // acts faithfully on that finite set.
  std::unordered_set<Vector, VectorHash> closure;
  for (const auto& g : generator_roots) {
    closure.insert(g);
    closure.insert(-g);
  }
  for (bool changed = true; changed;) {
    changed = false;
    const std::vector<Vector> snapshot(closure.begin(), closure.end());
    for (const auto& alpha : snapshot)
      for (const auto& x : snapshot)
        if (closure.insert(reflect_root(alpha, x)).second) changed = true;
  }
  std::vector<Vector> pts(closure.begin(), closure.end());
  std::sort(pts.begin(), pts.end());
  std::unordered_map<Vector, std::uint16_t, VectorHash> index;
  for (std::size_t i = 0; i < pts.size(); ++i) index.emplace(pts[i], static_cast<std::uint16_t>(i));

  std::vector<std::vector<std::uint16_t>> gen_perms;
  for (const auto& g : generator_roots) {
    std::vector<std::uint16_t> p(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) p[i] = index.at(reflect_root(g, pts[i]));
    gen_perms.push_back(std::move(p));
  }
  std::vector<std::uint16_t> ident(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) ident[i] = static_cast<std::uint16_t>(i);

  std::unordered_set<std::vector<std::uint16_t>, PermHash> seen{ident};
  std::vector<std::vector<std::uint16_t>> work{ident};
  while (!work.empty()) {
    std::vector<std::vector<std::uint16_t>> next;
    for (const auto& p : work)
      for (const auto& g : gen_perms) {
        std::vector<std::uint16_t> q(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) q[i] = p[g[i]];
        if (seen.insert(q).second) {
          next.push_back(std::move(q));
          if (static_cast<std::int64_t>(seen.size()) > cap)
            throw CapExceeded("group enumeration exceeded its cap", cap);
        }
      }
    work = std::move(next);
  }
  return BigInt(static_cast<unsigned long>(seen.size()));
}

ConjugacyResult conjugate(const RootSystem& R, const Vector& v, const Vector& w) {
  if (v.size() != w.size()) throw DimensionMismatch("conjugacy test in mismatched spaces");
  DominantRep dv = dominant_rep(R, v);
  DominantRep dw = dominant_rep(R, w);
  ConjugacyResult out;
  if (dv.dominant != dw.dominant) return out;
  out.conjugate = true;
  out.witness = concat(inverse(dv.word), dw.word);
  return out;
}

}  // namespace minuscule
