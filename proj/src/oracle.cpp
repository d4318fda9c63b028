#include "cq/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cq/classify.hpp"
#include "cq/cyclic.hpp"

namespace cq {

namespace {

// All (n-1)-cycles fixing the point x, sorted by image table.
std::vector<Permutation> cycles_fixing(int n, int x) {
  std::vector<int> moved;
  for (int y = 0; y < n; ++y)
    if (y != x) moved.push_back(y);
  // cycle word: smallest moved point first, then permutations of the rest
  std::vector<int> rest(moved.begin() + 1, moved.end());
  std::vector<Permutation> result;
  do {
    std::vector<int> images(n);
    for (int y = 0; y < n; ++y) images[y] = y;
    int prev = moved[0];
    for (int a : rest) {
      images[prev] = a;
      prev = a;
    }
    images[prev] = moved[0];
    result.emplace_back(std::move(images));
  } while (std::next_permutation(rest.begin(), rest.end()));
  std::sort(result.begin(), result.end());
  return result;
}

bool satisfies_s3(const std::vector<Permutation>& maps) {
  const int n = static_cast<int>(maps.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const Permutation& sz = maps[maps[x](y)];
      for (int t = 0; t < n; ++t)
        if (maps[x](maps[y](t)) != sz(maps[x](t))) return false;
    }
  return true;
}

using PartialAssignment = std::vector<std::optional<Permutation>>;

// Applies S3 as a constraint propagator: s_{s_x(y)} must equal
// s_x s_y s_x^-1 whenever both s_x and s_y are placed. Returns false on a
// conflict with an existing placement.
bool propagate_s3(PartialAssignment& assigned) {
  const int n = static_cast<int>(assigned.size());
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < n; ++x) {
      if (!assigned[x]) continue;
      for (int y = 0; y < n; ++y) {
        if (!assigned[y]) continue;
        const int z = (*assigned[x])(y);
        Permutation forced = conjugate(*assigned[x], *assigned[y]);
        if (assigned[z]) {
          if (*assigned[z] != forced) return false;
        } else {
          assigned[z] = std::move(forced);
          changed = true;
        }
      }
    }
  }
  return true;
}

void search(PartialAssignment assigned,
            const std::vector<std::vector<Permutation>>& choices,
            std::vector<std::vector<Permutation>>& found) {
  if (!propagate_s3(assigned)) return;
  const int n = static_cast<int>(assigned.size());
  int x = 0;
  while (x < n && assigned[x]) ++x;
  if (x == n) {
    std::vector<Permutation> maps;
    maps.reserve(n);
    for (auto& slot : assigned) maps.push_back(std::move(*slot));
    found.push_back(std::move(maps));
    return;
  }
  for (const auto& candidate : choices[x]) {
    auto next = assigned;
    next[x] = candidate;
    search(std::move(next), choices, found);
  }
}

void check_brute_range(int n) {
  if (n < 3 || n > 6)
    throw std::invalid_argument("brute enumeration supports 3 <= n <= 6, got " +
                                std::to_string(n));
}

std::vector<Quandle> to_sorted_quandles(std::vector<std::vector<Permutation>> tables) {
  std::sort(tables.begin(), tables.end());
  std::vector<Quandle> result;
  result.reserve(tables.size());
  for (auto& maps : tables) result.push_back(Quandle::from_translations(std::move(maps)));
  return result;
}

}  // namespace

std::vector<Quandle> brute_cyclic_quandles(int n) {
  check_brute_range(n);
  std::vector<std::vector<Permutation>> choices;
  choices.reserve(n);
  for (int x = 0; x < n; ++x) choices.push_back(cycles_fixing(n, x));
  std::vector<std::vector<Permutation>> found;
  search(PartialAssignment(n), choices, found);
  return to_sorted_quandles(std::move(found));
}

std::vector<Quandle> brute_cyclic_quandles_exhaustive(int n) {
  if (n < 3 || n > 4)
    throw std::invalid_argument("exhaustive enumeration supports n = 3, 4 only");
  std::vector<std::vector<Permutation>> choices;
  choices.reserve(n);
  for (int x = 0; x < n; ++x) choices.push_back(cycles_fixing(n, x));
  std::vector<std::vector<Permutation>> found;
  std::vector<std::size_t> index(n, 0);
  for (;;) {
    std::vector<Permutation> maps;
    maps.reserve(n);
    for (int x = 0; x < n; ++x) maps.push_back(choices[x][index[x]]);
    if (satisfies_s3(maps)) found.push_back(std::move(maps));
    // odometer
    int x = n - 1;
    while (x >= 0 && ++index[x] == choices[x].size()) index[x--] = 0;
    if (x < 0) break;
  }
  return to_sorted_quandles(std::move(found));
}

std::optional<IsoWitness> brute_are_isomorphic(const Quandle& a, const Quandle& b) {
  if (a.size() != b.size()) return std::nullopt;
  const int n = a.size();
  if (n > 8)
    throw std::invalid_argument("brute_are_isomorphic supports n <= 8");
  std::vector<int> f(n);
  std::iota(f.begin(), f.end(), 0);
  do {
    bool ok = true;
    for (int x = 0; ok && x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (f[a.translation(x)(y)] != b.translation(f[x])(f[y])) {
          ok = false;
          break;
        }
    if (ok) return IsoWitness{Permutation(f)};
  } while (std::next_permutation(f.begin(), f.end()));
  return std::nullopt;
}

std::vector<std::vector<std::size_t>> brute_iso_classes(
    const std::vector<Quandle>& quandles) {
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < quandles.size(); ++i) {
    if (quandles[i].size() != quandles[0].size())
      throw std::invalid_argument("brute_iso_classes: cardinality mismatch at index " +
                                  std::to_string(i));
    bool placed = false;
    for (auto& cls : classes) {
      if (brute_are_isomorphic(quandles[cls[0]], quandles[i])) {
        cls.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({i});
  }
  return classes;
}

CrossCheckReport cross_check(int n, unsigned workers) {
  check_brute_range(n);
  CrossCheckReport report;
  report.n = n;

  const std::vector<Quandle> quandles = brute_cyclic_quandles(n);
  const auto classes = brute_iso_classes(quandles);
  const ClassificationRow row = enumerate_fn(n, workers);
  report.oracle_classes = classes.size();
  report.fn_count = row.count();
  report.agreed = true;

  if (report.oracle_classes != report.fn_count) {
    report.agreed = false;
    report.problems.push_back("class count " + std::to_string(report.oracle_classes) +
                              " != #F_n " + std::to_string(report.fn_count));
  }

  std::vector<Quandle> images;
  images.reserve(row.members.size());
  for (const auto& s2 : row.members) images.push_back(phi(s2));

  std::vector<int> member_hits(images.size(), 0);
  for (const auto& cls : classes) {
    const Quandle& rep = quandles[cls[0]];
    std::vector<std::size_t> hits;
    for (std::size_t j = 0; j < images.size(); ++j) {
      const bool fast = are_isomorphic(rep, images[j]).has_value();
      const bool brute = brute_are_isomorphic(rep, images[j]).has_value();
      if (fast != brute) {
        report.agreed = false;
        report.problems.push_back(
            "isomorphism procedures disagree on representative " +
            std::to_string(cls[0]) + " vs phi(" + format_cycles(row.members[j]) + ")");
      }
      if (brute) {
        hits.push_back(j);
        ++member_hits[j];
      }
    }
    if (hits.size() != 1) {
      report.agreed = false;
      report.problems.push_back("representative " + std::to_string(cls[0]) +
                                " matched " + std::to_string(hits.size()) +
                                " members of F_n, expected exactly 1");
    } else {
      report.matching.push_back({cls[0], row.members[hits[0]]});
    }
  }
  for (std::size_t j = 0; j < member_hits.size(); ++j) {
    if (member_hits[j] != 1) {
      report.agreed = false;
      report.problems.push_back("phi(" + format_cycles(row.members[j]) + ") matched " +
                                std::to_string(member_hits[j]) +
                                " oracle classes, expected exactly 1");
    }
  }
  return report;
}

}  // namespace cq
