#include "cq/classify.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

namespace cq {

Permutation base_cycle(int n) {
  if (n < 3) throw std::invalid_argument("base_cycle: n must be >= 3");
  std::vector<int> images(n);
  images[0] = 0;
  for (int x = 1; x < n - 1; ++x) images[x] = x + 1;
  images[n - 1] = 1;
  return Permutation(std::move(images));
}

namespace {

// Cycle (1 a1 ... a_{n-2}) from the 0-based word (a1, ..., a_{n-2}).
Permutation candidate_from_word(int n, const std::vector<int>& word) {
  std::vector<int> images(n);
  for (int x = 0; x < n; ++x) images[x] = x;
  int prev = 0;
  for (int a : word) {
    images[prev] = a;
    prev = a;
  }
  images[prev] = 0;
  return Permutation(std::move(images));
}

}  // namespace

CandidateStream::CandidateStream(int n) : n_(n) {
  if (n < 3) throw std::invalid_argument("candidates: n must be >= 3");
  word_.resize(n - 2);
  std::iota(word_.begin(), word_.end(), 2);
}

std::optional<Permutation> CandidateStream::next() {
  if (done_) return std::nullopt;
  Permutation result = candidate_from_word(n_, word_);
  if (!std::next_permutation(word_.begin(), word_.end())) done_ = true;
  return result;
}

bool lemma_filter(const Permutation& s2) {
  const int n = s2.degree();
  const Permutation s1 = base_cycle(n);
  // s1^m(2) = s2(1) pins m = s2(1) - 2 (1-based), in 1..n-2
  const int m = s2(0) - 1;
  return conjugate(power(s1, m), s2) == conjugate(s2, s1);
}

namespace {

std::vector<Permutation> conjugate_chain_sorted(const Permutation& g,
                                                const Permutation& h) {
  const int n = g.degree();
  std::vector<Permutation> chain;
  chain.reserve(n - 2);
  Permutation c = h;
  for (int m = 1; m <= n - 2; ++m) {
    c = conjugate(g, c);
    chain.push_back(c);
  }
  std::sort(chain.begin(), chain.end());
  return chain;
}

}  // namespace

bool satisfies_f2(const Permutation& s2) {
  const Permutation s1 = base_cycle(s2.degree());
  return conjugate_chain_sorted(s2, s1) == conjugate_chain_sorted(s1, s2);
}

namespace {

struct BlockResult {
  std::vector<Permutation> members;
  EnumerationStats stats;
};

// All candidates whose cycle word starts with the given first letter,
// in lexicographic order of the remaining word.
BlockResult run_block(int n, int first_letter) {
  BlockResult result;
  std::vector<int> rest;
  for (int a = 2; a < n; ++a)
    if (a != first_letter) rest.push_back(a);
  std::vector<int> word(n - 2);
  word[0] = first_letter;
  do {
    std::copy(rest.begin(), rest.end(), word.begin() + 1);
    const Permutation s2 = candidate_from_word(n, word);
    ++result.stats.candidates;
    if (!lemma_filter(s2)) {
      ++result.stats.filter_rejected;
    } else if (!satisfies_f2(s2)) {
      ++result.stats.full_rejected;
    } else {
      result.members.push_back(s2);
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  return result;
}

}  // namespace

ClassificationRow enumerate_fn(int n, unsigned workers) {
  if (n < 3) throw std::invalid_argument("enumerate_fn: n must be >= 3");
  const auto start = std::chrono::steady_clock::now();
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());

  const int blocks = n - 2;  // one block per first letter 3..n
  std::vector<BlockResult> results(blocks);
  std::atomic<int> next_block{0};
  auto drain = [&] {
    for (int b; (b = next_block.fetch_add(1)) < blocks;)
      results[b] = run_block(n, b + 2);
  };
  if (workers == 1 || blocks == 1) {
    drain();
  } else {
    std::vector<std::thread> pool;
    const unsigned count = std::min<unsigned>(workers, blocks);
    pool.reserve(count);
    for (unsigned i = 0; i < count; ++i) pool.emplace_back(drain);
    for (auto& t : pool) t.join();
  }

  ClassificationRow row;
  row.n = n;
  for (auto& block : results) {
    row.members.insert(row.members.end(), block.members.begin(), block.members.end());
    row.stats.candidates += block.stats.candidates;
    row.stats.filter_rejected += block.stats.filter_rejected;
    row.stats.full_rejected += block.stats.full_rejected;
  }
  // blocks are emitted in first-letter order and sorted within, so members
  // are already in lexicographic cycle-word order
  row.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return row;
}

Quandle phi(const Permutation& s2) {
  const int n = s2.degree();
  if (n < 3) throw std::invalid_argument("phi: n must be >= 3");
  if (!is_full_cycle_minus_one(s2) || s2(1) != 1)
    throw std::invalid_argument("phi: " + format_cycles(s2) +
                                " fails (F1): not an (n-1)-cycle fixing 2");
  if (!satisfies_f2(s2))
    throw std::invalid_argument("phi: " + format_cycles(s2) + " fails (F2)");
  const Permutation s1 = base_cycle(n);
  std::vector<Permutation> maps;
  maps.reserve(n);
  maps.push_back(s1);
  maps.push_back(s2);
  Permutation c = s2;
  for (int i = 2; i < n; ++i) {
    c = conjugate(s1, c);  // s1^(i-1) s2 s1^-(i-1), fixing point i
    maps.push_back(c);
  }
  return Quandle::from_translations(std::move(maps));
}

std::vector<ClassificationRow> classification_table(int n_min, int n_max,
                                                    unsigned workers) {
  if (n_min < 3 || n_min > n_max)
    throw std::invalid_argument("classification_table: need 3 <= n_min <= n_max");
  std::vector<ClassificationRow> rows;
  rows.reserve(n_max - n_min + 1);
  for (int n = n_min; n <= n_max; ++n) rows.push_back(enumerate_fn(n, workers));
  return rows;
}

bool is_prime_power(int n) {
  if (n < 2) return false;
  int p = 0;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return true;  // prime
  while (n % p == 0) n /= p;
  return n == 1;
}

std::vector<PrimePowerEntry> prime_power_consistency(int n_min, int n_max,
                                                     unsigned workers) {
  if (n_min < 3 || n_min > n_max)
    throw std::invalid_argument("prime_power_consistency: need 3 <= n_min <= n_max");
  std::vector<PrimePowerEntry> entries;
  entries.reserve(n_max - n_min + 1);
  for (int n = n_min; n <= n_max; ++n) {
    PrimePowerEntry e;
    e.n = n;
    e.prime_power = is_prime_power(n);
    e.nonempty = enumerate_fn(n, workers).count() > 0;
    entries.push_back(e);
  }
  return entries;
}

}  // namespace cq
