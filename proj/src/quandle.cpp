#include "cq/quandle.hpp"

#include <deque>
#include <set>
#include <stdexcept>
#include <string>

namespace cq {

Quandle Quandle::from_translations(std::vector<Permutation> maps) {
  const int n = static_cast<int>(maps.size());
  if (n < 1) throw std::invalid_argument("quandle needs at least one point");
  for (const auto& m : maps)
    if (m.degree() != n)
      throw std::invalid_argument("translation degree " + std::to_string(m.degree()) +
                                  " does not match cardinality " + std::to_string(n));
  for (int x = 0; x < n; ++x)
    if (maps[x](x) != x)
      throw std::invalid_argument("S1 violated: s_" + std::to_string(x + 1) +
                                  " does not fix " + std::to_string(x + 1));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      // s_x s_y == s_{s_x(y)} s_x, pointwise
      const Permutation& sx = maps[x];
      const Permutation& sy = maps[y];
      const Permutation& sz = maps[sx(y)];
      for (int t = 0; t < n; ++t) {
        if (sx(sy(t)) != sz(sx(t)))
          throw std::invalid_argument("S3 violated at (x, y) = (" +
                                      std::to_string(x + 1) + ", " +
                                      std::to_string(y + 1) + ")");
      }
    }
  }
  return Quandle(std::move(maps));
}

int Quandle::op(int y, int x) const {
  const int n = size();
  if (x < 0 || x >= n || y < 0 || y >= n)
    throw std::invalid_argument("op: point out of range");
  return s_[x](y);
}

Quandle trivial(int n) {
  if (n < 1) throw std::invalid_argument("trivial: n must be >= 1");
  std::vector<Permutation> maps(n, Permutation(n));
  return Quandle::from_translations(std::move(maps));
}

Quandle dihedral(int n) {
  if (n < 3) throw std::invalid_argument("dihedral: n must be >= 3");
  std::vector<Permutation> maps;
  maps.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> images(n);
    for (int j = 0; j < n; ++j) images[j] = ((2 * i - j) % n + n) % n;
    maps.emplace_back(std::move(images));
  }
  return Quandle::from_translations(std::move(maps));
}

Quandle tetrahedron() {
  std::vector<Permutation> maps = {
      parse_cycles("(2 3 4)", 4),
      parse_cycles("(1 4 3)", 4),
      parse_cycles("(1 2 4)", 4),
      parse_cycles("(1 3 2)", 4),
  };
  return Quandle::from_translations(std::move(maps));
}

std::vector<Permutation> inner_group(const Quandle& q, std::size_t budget) {
  std::set<Permutation> generators(q.translations().begin(), q.translations().end());
  std::set<Permutation> elements;
  std::deque<Permutation> frontier;
  elements.insert(Permutation(q.size()));
  frontier.push_back(Permutation(q.size()));
  while (!frontier.empty()) {
    Permutation e = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : generators) {
      Permutation next = compose(g, e);
      if (elements.insert(next).second) {
        if (elements.size() > budget)
          throw std::runtime_error("inner_group: closure exceeds element budget of " +
                                   std::to_string(budget));
        frontier.push_back(std::move(next));
      }
    }
  }
  return {elements.begin(), elements.end()};
}

bool is_connected(const Quandle& q) {
  const int n = q.size();
  std::vector<char> seen(n, 0);
  std::deque<int> frontier{0};
  seen[0] = 1;
  int count = 1;
  while (!frontier.empty()) {
    const int y = frontier.front();
    frontier.pop_front();
    for (int x = 0; x < n; ++x) {
      const int z = q.translation(x)(y);
      if (!seen[z]) {
        seen[z] = 1;
        ++count;
        frontier.push_back(z);
      }
    }
  }
  return count == n;
}

bool is_two_point_homogeneous(const Quandle& q) {
  const int n = q.size();
  if (n < 2)
    throw std::invalid_argument("is_two_point_homogeneous: needs n >= 2");
  // orbit of the base pair (1, 2) under the diagonal action of the s_x
  std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
  std::deque<std::pair<int, int>> frontier{{0, 1}};
  seen[0 * n + 1] = 1;
  std::size_t count = 1;
  while (!frontier.empty()) {
    const auto [a, b] = frontier.front();
    frontier.pop_front();
    for (int x = 0; x < n; ++x) {
      const Permutation& s = q.translation(x);
      const int a2 = s(a);
      const int b2 = s(b);
      if (!seen[static_cast<std::size_t>(a2) * n + b2]) {
        seen[static_cast<std::size_t>(a2) * n + b2] = 1;
        ++count;
        frontier.push_back({a2, b2});
      }
    }
  }
  return count == static_cast<std::size_t>(n) * (n - 1);
}

bool verify_isomorphism(const Quandle& a, const Quandle& b, const Permutation& f) {
  const int n = a.size();
  if (b.size() != n || f.degree() != n) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (f(a.translation(x)(y)) != b.translation(f(x))(f(y))) return false;
  return true;
}

namespace {

// Propagates f(s_x(y)) = s'_{f(x)}(f(y)) over all pairs of assigned points
// until fixpoint; returns false on contradiction.
bool propagate(const Quandle& a, const Quandle& b, std::vector<int>& f,
               std::vector<char>& used) {
  const int n = a.size();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < n; ++x) {
      if (f[x] < 0) continue;
      for (int y = 0; y < n; ++y) {
        if (f[y] < 0) continue;
        const int z = a.translation(x)(y);
        const int fz = b.translation(f[x])(f[y]);
        if (f[z] >= 0) {
          if (f[z] != fz) return false;
        } else {
          if (used[fz]) return false;
          f[z] = fz;
          used[fz] = 1;
          changed = true;
        }
      }
    }
  }
  return true;
}

bool extend(const Quandle& a, const Quandle& b, std::vector<int> f,
            std::vector<char> used, std::vector<int>& out) {
  if (!propagate(a, b, f, used)) return false;
  const int n = a.size();
  int x = 0;
  while (x < n && f[x] >= 0) ++x;
  if (x == n) {
    out = std::move(f);
    return true;
  }
  for (int image = 0; image < n; ++image) {
    if (used[image]) continue;
    auto f2 = f;
    auto used2 = used;
    f2[x] = image;
    used2[image] = 1;
    if (extend(a, b, std::move(f2), std::move(used2), out)) return true;
  }
  return false;
}

}  // namespace

std::optional<IsoWitness> are_isomorphic(const Quandle& a, const Quandle& b) {
  if (a.size() != b.size()) return std::nullopt;
  const int n = a.size();
  if (n == 1) return IsoWitness{Permutation(1)};
  // seed f(1), f(2) in lexicographic order, then propagate
  for (int p = 0; p < n; ++p) {
    for (int r = 0; r < n; ++r) {
      if (p == r) continue;
      std::vector<int> f(n, -1);
      std::vector<char> used(n, 0);
      f[0] = p;
      used[p] = 1;
      f[1] = r;
      used[r] = 1;
      std::vector<int> out;
      if (extend(a, b, std::move(f), std::move(used), out)) {
        Permutation witness(std::move(out));
        if (!verify_isomorphism(a, b, witness))
          throw std::logic_error("are_isomorphic: produced invalid witness");
        return IsoWitness{std::move(witness)};
      }
    }
  }
  return std::nullopt;
}

}  // namespace cq
