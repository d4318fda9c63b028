#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "cq/perm.hpp"
#include "cq/quandle.hpp"

namespace cq {

struct EnumerationStats {
  std::uint64_t candidates = 0;
  std::uint64_t filter_rejected = 0;  // killed by the necessary-condition filter
  std::uint64_t full_rejected = 0;    // passed the filter, failed the full check
};

/// The classification result for one cardinality: the members of F_n in
/// canonical cycle form, sorted lexicographically by cycle word.
struct ClassificationRow {
  int n = 0;
  std::vector<Permutation> members;
  EnumerationStats stats;
  std::chrono::milliseconds elapsed{0};

  std::size_t count() const { return members.size(); }
};

/// The base cycle (2 3 ... n), fixing point 1. Requires n >= 3.
Permutation base_cycle(int n);

/// Lazily streams the (n-2)! candidates (1 a1 ... a_{n-2}), the (n-1)-cycles
/// fixing point 2, in lexicographic order of the word (a1, ..., a_{n-2}).
class CandidateStream {
public:
  explicit CandidateStream(int n);
  std::optional<Permutation> next();

private:
  int n_;
  std::vector<int> word_;  // 0-based letters, permuted in place
  bool done_ = false;
};

/// Necessary condition on a candidate s2: with m the exponent for which
/// s1^m(2) = s2(1), require s1^m s2 s1^-m = s2 s1 s2^-1. Returning true is
/// not sufficient for membership; false is a certain rejection.
bool lemma_filter(const Permutation& s2);

/// The full membership check: the two conjugate chains
/// {s2^m s1 s2^-m} and {s1^m s2 s1^-m}, m = 1..n-2, coincide as sets.
bool satisfies_f2(const Permutation& s2);

/// Enumerates F_n. The candidate space is split into one block per first
/// letter of the cycle word; blocks run on `workers` threads (0 = hardware
/// concurrency) and merge in block order, so the result is deterministic.
ClassificationRow enumerate_fn(int n, unsigned workers = 0);

/// Reconstructs the quandle of s2 in F_n: translations s1, s2, and
/// s1^(i-2) s2 s1^-(i-2) for i = 3..n. Throws if s2 fails F1 or F2.
Quandle phi(const Permutation& s2);

std::vector<ClassificationRow> classification_table(int n_min, int n_max,
                                                    unsigned workers = 0);

bool is_prime_power(int n);

struct PrimePowerEntry {
  int n = 0;
  bool prime_power = false;
  bool nonempty = false;

  bool agree() const { return prime_power == nonempty; }
};

/// For each n in range, whether n is a prime power and whether F_n is
/// nonempty. A disagreement is reported, never thrown.
std::vector<PrimePowerEntry> prime_power_consistency(int n_min, int n_max,
                                                     unsigned workers = 0);

}  // namespace cq
