#pragma once

#include <vector>

#include "cq/perm.hpp"
#include "cq/quandle.hpp"

namespace cq {

/// A set of permutations of degree n, each consisting of a single fixed
/// point plus one (n-1)-cycle. Elements are kept sorted and unique.
class SigmaSet {
public:
  SigmaSet(int degree, std::vector<Permutation> elements);

  int degree() const { return degree_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(const Permutation& p) const;

  bool operator==(const SigmaSet&) const = default;

private:
  int degree_;
  std::vector<Permutation> elements_;
};

/// True iff every s_x moves the other n-1 points in a single cycle.
/// Requires n >= 3.
bool is_cyclic_type(const Quandle& q);

/// Independent route: connected and at least one s_x is an (n-1)-cycle.
/// Requires n >= 3.
bool is_cyclic_type_via_characterization(const Quandle& q);

/// (D1) closure under conjugation by members, (D2) exactly one element
/// fixing each point.
bool check_d_conditions(const SigmaSet& sigma);

/// The translation set {s_x} of a cyclic-type quandle; throws if q is not
/// of cyclic type.
SigmaSet translations_of(const Quandle& q);

/// Rebuilds the quandle whose s_x is the unique element of sigma fixing x.
/// Throws if the D-conditions fail.
Quandle quandle_from_sigma(const SigmaSet& sigma);

/// (E1) u1 fixes point 1 and u2 fixes point 2; (E2) the two conjugate
/// chains {u1^m u2 u1^-m} and {u2^m u1 u2^-m}, m = 1..n-2, coincide as sets.
bool check_e_conditions(const Permutation& u1, const Permutation& u2);

/// {u1, u2} together with the conjugates u1^m u2 u1^-m, m = 1..n-2.
/// Throws if the E-conditions fail. The result has exactly n elements and
/// passes check_d_conditions.
SigmaSet sigma_from_pair(const Permutation& u1, const Permutation& u2);

}  // namespace cq
