#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace cq {

/// A permutation of the points {0, ..., n-1}. Immutable after construction.
///
/// Points are 0-based everywhere in the API; the 1-based convention of
/// cycle-notation text applies only at the parse/format boundary.
class Permutation {
public:
  /// Identity permutation of the given degree.
  explicit Permutation(int degree);

  /// From an image table: images[x] is the image of x. Must be a bijection.
  explicit Permutation(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }

  /// Image of a point.
  int operator()(int x) const { return images_[x]; }

  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<int> images_;
};

/// compose(p, q) applies q first, then p: result(x) = p(q(x)).
Permutation compose(const Permutation& p, const Permutation& q);

Permutation inverse(const Permutation& p);

/// m-fold composition; m may be negative, power(p, -m) = inverse(power(p, m)).
Permutation power(const Permutation& p, long long m);

/// conjugate(g, p) = g * p * g^-1; relabels each cycle entry a of p by g(a).
Permutation conjugate(const Permutation& g, const Permutation& p);

/// The points x with p(x) = x, ascending.
std::vector<int> fixed_points(const Permutation& p);

/// True iff p has exactly one fixed point and the remaining n-1 points
/// form a single cycle.
bool is_full_cycle_minus_one(const Permutation& p);

/// Parses disjoint cycles in 1-based notation, e.g. "(1 4 3)" or
/// "(1 2)(3 4)"; parentheses optional for a single cycle; "()" is the
/// identity. Throws std::invalid_argument on malformed text, points out of
/// range, or repeated points.
Permutation parse_cycles(std::string_view text, int degree);

/// Canonical 1-based cycle string: each cycle starts at its minimum point,
/// cycles ordered by minimum point, fixed points omitted, identity "()".
std::string format_cycles(const Permutation& p);

}  // namespace cq
