#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "cq/perm.hpp"

using cq::Permutation;

namespace {

// Independent composition oracle: plain image-table expansion.
Permutation compose_oracle(const Permutation& p, const Permutation& q) {
  std::vector<int> images(p.degree());
  for (int x = 0; x < p.degree(); ++x) images[x] = p.images()[q.images()[x]];
  return Permutation(images);
}

Permutation random_perm(int n, std::mt19937& rng) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

long long order_by_cycle_lengths(const Permutation& p) {
  const int n = p.degree();
  std::vector<char> visited(n, 0);
  long long order = 1;
  for (int x = 0; x < n; ++x) {
    if (visited[x]) continue;
    long long length = 0;
    for (int y = x; !visited[y]; y = p(y)) {
      visited[y] = 1;
      ++length;
    }
    order = std::lcm(order, length);
  }
  return order;
}

}  // namespace

TEST_CASE("compose applies the right factor first") {
  const auto p = cq::parse_cycles("(2 3 4)", 4);
  const auto q = cq::parse_cycles("(1 4 3)", 4);
  // expanding both image tables by hand: 1->4->2, 2->2->3, 3->1->1, 4->3->4
  CHECK(cq::compose(p, q) == cq::parse_cycles("(1 2 3)", 4));
  CHECK(cq::compose(p, q) == compose_oracle(p, q));

  CHECK(cq::compose(p, Permutation(4)) == p);
  CHECK(cq::compose(cq::parse_cycles("(2 3)", 3), cq::parse_cycles("(1 3)", 3)) ==
        cq::parse_cycles("(1 2 3)", 3));
  CHECK_THROWS_AS(cq::compose(p, Permutation(5)), std::invalid_argument);
}

TEST_CASE("inverse") {
  CHECK(cq::inverse(Permutation(5)) == Permutation(5));
  CHECK(cq::inverse(cq::parse_cycles("(1 4 3)", 4)) == cq::parse_cycles("(1 3 4)", 4));
  CHECK(cq::inverse(cq::parse_cycles("(1 3 5 4)", 5)) == cq::parse_cycles("(1 4 5 3)", 5));

  std::mt19937 rng(20240811);
  for (int iter = 0; iter < 100; ++iter) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const auto p = random_perm(n, rng);
    CHECK(cq::compose(p, cq::inverse(p)) == Permutation(n));
  }
}

TEST_CASE("power") {
  CHECK(cq::power(cq::parse_cycles("(2 3 4)", 4), 3) == Permutation(4));
  // 2->4, 3->5, 4->6, 5->2, 6->3: the single cycle (2 4 6 3 5)
  const auto p = cq::power(cq::parse_cycles("(2 3 4 5 6)", 6), 2);
  CHECK(p == cq::parse_cycles("(2 4 6 3 5)", 6));
  CHECK(p(0) == 0);

  std::mt19937 rng(7);
  for (int iter = 0; iter < 100; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const auto q = random_perm(n, rng);
    CHECK(cq::power(q, -1) == cq::inverse(q));
    CHECK(cq::power(q, 0) == Permutation(n));
    CHECK(cq::power(q, order_by_cycle_lengths(q)) == Permutation(n));
    CHECK(cq::power(q, -3) == cq::inverse(cq::power(q, 3)));
  }
}

TEST_CASE("conjugate relabels cycle entries") {
  CHECK(cq::conjugate(cq::parse_cycles("(2 3 4)", 4), cq::parse_cycles("(1 4 3)", 4)) ==
        cq::parse_cycles("(1 2 4)", 4));
  CHECK(cq::conjugate(cq::parse_cycles("(1 3)", 3), cq::parse_cycles("(2 3)", 3)) ==
        cq::parse_cycles("(1 2)", 3));
  const auto p = cq::parse_cycles("(1 3 5 4)", 5);
  CHECK(cq::conjugate(Permutation(5), p) == p);
  CHECK_THROWS_AS(cq::conjugate(Permutation(4), p), std::invalid_argument);
}

TEST_CASE("conjugation is a homomorphism of composition") {
  std::mt19937 rng(99);
  for (int iter = 0; iter < 200; ++iter) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const auto g = random_perm(n, rng);
    const auto p = random_perm(n, rng);
    const auto q = random_perm(n, rng);
    CHECK(cq::conjugate(g, cq::compose(p, q)) ==
          cq::compose(cq::conjugate(g, p), cq::conjugate(g, q)));
    CHECK(cq::conjugate(g, p) == cq::compose(cq::compose(g, p), cq::inverse(g)));
  }
}

TEST_CASE("fixed_points") {
  CHECK(cq::fixed_points(cq::parse_cycles("(2 3 4)", 4)) == std::vector<int>{0});
  CHECK(cq::fixed_points(Permutation(5)) == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(cq::fixed_points(cq::parse_cycles("(1 3 5 4)", 5)) == std::vector<int>{1});
}

TEST_CASE("is_full_cycle_minus_one") {
  CHECK(cq::is_full_cycle_minus_one(cq::parse_cycles("(2 3 4)", 4)));
  CHECK_FALSE(cq::is_full_cycle_minus_one(Permutation(4)));
  CHECK_FALSE(cq::is_full_cycle_minus_one(cq::parse_cycles("(1 2)(3 4)", 5)));

  // equivalent to: one fixed point, order n-1, no smaller power is identity
  for (int n = 3; n <= 6; ++n) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 0);
    do {
      const Permutation p(images);
      const bool expected = [&] {
        if (cq::fixed_points(p).size() != 1) return false;
        for (int k = 1; k < n - 1; ++k)
          if (cq::power(p, k).is_identity()) return false;
        return cq::power(p, n - 1).is_identity();
      }();
      CHECK(cq::is_full_cycle_minus_one(p) == expected);
    } while (std::next_permutation(images.begin(), images.end()));
  }
}

TEST_CASE("parse and format cycles") {
  const auto p = cq::parse_cycles("(1 7 4 6 5 3)", 7);
  CHECK(cq::fixed_points(p) == std::vector<int>{1});
  CHECK(cq::is_full_cycle_minus_one(p));
  CHECK(cq::format_cycles(p) == "(1 7 4 6 5 3)");

  CHECK(cq::format_cycles(Permutation(4)) == "()");
  CHECK(cq::parse_cycles("()", 4) == Permutation(4));
  CHECK(cq::format_cycles(cq::parse_cycles("(2 3 4)", 4)) == "(2 3 4)");
  // canonical form rotates each cycle to its minimum and sorts by minimum
  CHECK(cq::format_cycles(cq::parse_cycles("(4 3 2)", 4)) == "(2 4 3)");
  CHECK(cq::format_cycles(cq::parse_cycles("(3 4)(1 2)", 4)) == "(1 2)(3 4)");
  // a bare cycle without parentheses is accepted
  CHECK(cq::parse_cycles("2 3 4", 4) == cq::parse_cycles("(2 3 4)", 4));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(cq::parse_cycles("(1 9)", 7), std::invalid_argument);
  CHECK_THROWS_AS(cq::parse_cycles("(1 2)(2 3)", 4), std::invalid_argument);
  CHECK_THROWS_AS(cq::parse_cycles("(1 2", 4), std::invalid_argument);
  CHECK_THROWS_AS(cq::parse_cycles("(1 0)", 4), std::invalid_argument);
  CHECK_THROWS_AS(cq::parse_cycles("(1 x)", 4), std::invalid_argument);
  CHECK_THROWS_AS(cq::parse_cycles("((1 2))", 4), std::invalid_argument);
}

TEST_CASE("parse/format round-trip") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 0);
    do {
      const Permutation p(images);
      CHECK(cq::parse_cycles(cq::format_cycles(p), n) == p);
    } while (std::next_permutation(images.begin(), images.end()));
  }
  std::mt19937 rng(4242);
  for (int iter = 0; iter < 500; ++iter) {
    const int n = 7 + static_cast<int>(rng() % 2);
    const auto p = random_perm(n, rng);
    CHECK(cq::parse_cycles(cq::format_cycles(p), n) == p);
  }
}
