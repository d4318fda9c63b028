#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cq/perm.hpp"

namespace cq {

/// A bijection certifying an isomorphism between two quandles on the same
/// number of points: map(s_x(y)) = s'_{map(x)}(map(y)) for all x, y.
struct IsoWitness {
  Permutation map;
};

/// A finite quandle on {0, ..., n-1}, stored as its right translations:
/// s[x] is the permutation y -> y * x. Validated against (S1) s_x(x) = x
/// and (S3) s_x s_y = s_{s_x(y)} s_x on construction; (S2) is structural.
class Quandle {
public:
  /// Validates S1 and S3 exhaustively; throws std::invalid_argument naming
  /// the offending point (S1) or pair (S3). 1-based points in messages.
  static Quandle from_translations(std::vector<Permutation> maps);

  int size() const { return static_cast<int>(s_.size()); }

  /// The right translation s_x.
  const Permutation& translation(int x) const { return s_[x]; }

  const std::vector<Permutation>& translations() const { return s_; }

  /// y * x = s_x(y).
  int op(int y, int x) const;

  bool operator==(const Quandle&) const = default;

private:
  explicit Quandle(std::vector<Permutation> maps) : s_(std::move(maps)) {}
  std::vector<Permutation> s_;
};

Quandle trivial(int n);

/// Points {1..n} as residues mod n (n standing for 0), s_i(j) = 2i - j.
Quandle dihedral(int n);

/// The 4-point quandle with translations (234), (143), (124), (132).
Quandle tetrahedron();

/// Full closure of {s_x} under composition, sorted. Throws std::runtime_error
/// if the closure exceeds the element budget.
std::vector<Permutation> inner_group(const Quandle& q,
                                     std::size_t budget = 10'000'000);

/// True iff the inner group acts transitively; computed as an orbit of one
/// point, never materializing the group.
bool is_connected(const Quandle& q);

/// True iff the inner group is transitive on ordered pairs of distinct
/// points; computed as the diagonal orbit of one base pair. Requires n >= 2.
bool is_two_point_homogeneous(const Quandle& q);

/// Finds an isomorphism if one exists. Seeds the images of the first two
/// points and propagates f(s_x(y)) = s'_{f(x)}(f(y)); falls back to
/// backtracking when propagation stalls. Deterministic: seeds are tried in
/// lexicographic order. Different cardinalities yield an empty result.
std::optional<IsoWitness> are_isomorphic(const Quandle& a, const Quandle& b);

/// Checks that f is an isomorphism from a to b.
bool verify_isomorphism(const Quandle& a, const Quandle& b, const Permutation& f);

}  // namespace cq
