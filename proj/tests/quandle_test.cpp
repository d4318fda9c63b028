#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <deque>

#include "cq/perm.hpp"
#include "cq/quandle.hpp"

using cq::Permutation;
using cq::Quandle;

namespace {

bool is_even(const Permutation& p) {
  int transpositions = 0;
  std::vector<char> visited(p.degree(), 0);
  for (int x = 0; x < p.degree(); ++x) {
    if (visited[x]) continue;
    int length = 0;
    for (int y = x; !visited[y]; y = p(y)) {
      visited[y] = 1;
      ++length;
    }
    transpositions += length - 1;
  }
  return transpositions % 2 == 0;
}

// orbit of a start point under the translations
std::size_t orbit_size(const Quandle& q, int start) {
  std::vector<char> seen(q.size(), 0);
  std::deque<int> frontier{start};
  seen[start] = 1;
  std::size_t count = 1;
  while (!frontier.empty()) {
    const int y = frontier.front();
    frontier.pop_front();
    for (int x = 0; x < q.size(); ++x) {
      const int z = q.translation(x)(y);
      if (!seen[z]) {
        seen[z] = 1;
        ++count;
        frontier.push_back(z);
      }
    }
  }
  return count;
}

}  // namespace

TEST_CASE("from_translations validates S1 and S3") {
  CHECK_NOTHROW(cq::tetrahedron());
  CHECK_NOTHROW(cq::trivial(3));

  // swapping the last tetrahedron translation for (123) breaks S3
  std::vector<Permutation> bad = {
      cq::parse_cycles("(2 3 4)", 4),
      cq::parse_cycles("(1 4 3)", 4),
      cq::parse_cycles("(1 2 4)", 4),
      cq::parse_cycles("(1 2 3)", 4),
  };
  CHECK_THROWS_WITH_AS(Quandle::from_translations(bad),
                       doctest::Contains("S3 violated"), std::invalid_argument);

  std::vector<Permutation> not_s1 = {cq::parse_cycles("(1 2)", 2), Permutation(2)};
  CHECK_THROWS_WITH_AS(Quandle::from_translations(not_s1),
                       doctest::Contains("S1 violated"), std::invalid_argument);
}

TEST_CASE("op") {
  const Quandle tetra = cq::tetrahedron();
  CHECK(tetra.op(2, 0) == 3);  // 3 * 1 = s_1(3) = 4
  for (int x = 0; x < 4; ++x) CHECK(tetra.op(x, x) == x);
  CHECK(cq::dihedral(5).op(1, 0) == 4);  // 2 * 1 = 2*1 - 2 = 0 = 5 mod 5
  CHECK_THROWS_AS(tetra.op(0, 4), std::invalid_argument);
}

TEST_CASE("constructors") {
  CHECK(cq::dihedral(3).translation(0) == cq::parse_cycles("(2 3)", 3));
  CHECK(cq::trivial(4).translations() == std::vector<Permutation>(4, Permutation(4)));
  const Quandle tetra = cq::tetrahedron();
  CHECK(cq::format_cycles(tetra.translation(0)) == "(2 3 4)");
  CHECK(cq::format_cycles(tetra.translation(1)) == "(1 4 3)");
  CHECK(cq::format_cycles(tetra.translation(2)) == "(1 2 4)");
  CHECK(cq::format_cycles(tetra.translation(3)) == "(1 3 2)");
  CHECK_THROWS_AS(cq::dihedral(2), std::invalid_argument);
  CHECK_THROWS_AS(cq::trivial(0), std::invalid_argument);
}

TEST_CASE("every translation is an automorphism") {
  for (const Quandle& q : {cq::trivial(5), cq::dihedral(6), cq::tetrahedron()})
    for (int x = 0; x < q.size(); ++x)
      CHECK(cq::verify_isomorphism(q, q, q.translation(x)));
}

TEST_CASE("inner_group") {
  CHECK(cq::inner_group(cq::trivial(3)) == std::vector<Permutation>{Permutation(3)});
  CHECK(cq::inner_group(cq::dihedral(3)).size() == 6);

  const auto tetra_inner = cq::inner_group(cq::tetrahedron());
  CHECK(tetra_inner.size() == 12);
  for (const auto& g : tetra_inner) CHECK(is_even(g));

  CHECK_THROWS_AS(cq::inner_group(cq::dihedral(5), 4), std::runtime_error);
}

TEST_CASE("is_connected") {
  CHECK_FALSE(cq::is_connected(cq::trivial(3)));
  CHECK(cq::is_connected(cq::trivial(1)));
  CHECK_FALSE(cq::is_connected(cq::dihedral(4)));
  CHECK(cq::is_connected(cq::dihedral(5)));
  CHECK(cq::is_connected(cq::tetrahedron()));

  // connected means every point's orbit is the whole set
  for (const Quandle& q : {cq::dihedral(5), cq::dihedral(7), cq::tetrahedron()}) {
    CHECK(cq::is_connected(q));
    for (int x = 0; x < q.size(); ++x)
      CHECK(orbit_size(q, x) == static_cast<std::size_t>(q.size()));
  }
}

TEST_CASE("is_two_point_homogeneous") {
  CHECK(cq::is_two_point_homogeneous(cq::tetrahedron()));
  CHECK_FALSE(cq::is_two_point_homogeneous(cq::trivial(3)));
  // dihedral(5) is connected but its inner group has order 10, too small to
  // move (1, 2) to all 20 ordered pairs: reflections reach differences +-1 only
  CHECK_FALSE(cq::is_two_point_homogeneous(cq::dihedral(5)));
  CHECK(cq::is_two_point_homogeneous(cq::dihedral(3)));

  for (int n = 3; n <= 9; ++n) {
    const Quandle q = cq::dihedral(n);
    if (cq::is_two_point_homogeneous(q)) CHECK(cq::is_connected(q));
  }
}

TEST_CASE("are_isomorphic") {
  const Quandle tetra = cq::tetrahedron();
  const auto self = cq::are_isomorphic(tetra, tetra);
  REQUIRE(self.has_value());
  CHECK(self->map == Permutation(4));

  CHECK_FALSE(cq::are_isomorphic(tetra, cq::dihedral(4)).has_value());
  CHECK_FALSE(cq::are_isomorphic(tetra, cq::dihedral(3)).has_value());

  // symmetry: the inverse of a witness certifies the reverse direction
  const Quandle d5 = cq::dihedral(5);
  std::vector<Permutation> relabeled(5, Permutation(5));
  const Permutation g = cq::parse_cycles("(1 3 2 5 4)", 5);
  for (int x = 0; x < 5; ++x) relabeled[g(x)] = cq::conjugate(g, d5.translation(x));
  const Quandle d5_relabeled = Quandle::from_translations(relabeled);
  const auto witness = cq::are_isomorphic(d5, d5_relabeled);
  REQUIRE(witness.has_value());
  CHECK(cq::verify_isomorphism(d5, d5_relabeled, witness->map));
  CHECK(cq::verify_isomorphism(d5_relabeled, d5, cq::inverse(witness->map)));
}
