#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cq/perm.hpp"
#include "cq/quandle.hpp"

namespace cq {

/// Every quandle structure on n points whose translations are all
/// (n-1)-cycles, found by backtracking with S3 propagation: once s_x and
/// s_y are placed, s_{s_x(y)} is forced to s_x s_y s_x^-1. Results sorted
/// lexicographically by translation table. Supported range: 3 <= n <= 6.
std::vector<Quandle> brute_cyclic_quandles(int n);

/// Same result set by raw exhaustion over all ((n-2)!)^n translation
/// tuples, no pruning. Only feasible for n = 3, 4; used to validate the
/// pruned search.
std::vector<Quandle> brute_cyclic_quandles_exhaustive(int n);

/// Isomorphism test by scanning all n! bijections, early-exiting on the
/// first homomorphism violation. Requires n <= 8.
std::optional<IsoWitness> brute_are_isomorphic(const Quandle& a, const Quandle& b);

/// Partition into isomorphism classes via the n!-bijection search. Each
/// class lists input indices in order; the first index is the
/// representative. All inputs must share a cardinality n <= 8.
std::vector<std::vector<std::size_t>> brute_iso_classes(
    const std::vector<Quandle>& quandles);

struct CrossCheckMatch {
  std::size_t representative_index = 0;  // index into the oracle's quandle list
  Permutation s2;                        // the matching member of F_n
};

struct CrossCheckReport {
  int n = 0;
  std::size_t oracle_classes = 0;
  std::size_t fn_count = 0;
  std::vector<CrossCheckMatch> matching;
  bool agreed = false;
  std::vector<std::string> problems;  // human-readable mismatch details
};

/// Compares the brute-force classification with the main pipeline:
/// class counts must agree, every oracle class must match exactly one
/// member's reconstructed quandle, and the propagation-based isomorphism
/// search must agree with the n!-bijection scan on every tested pair.
CrossCheckReport cross_check(int n, unsigned workers = 0);

}  // namespace cq
