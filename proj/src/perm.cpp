#include "cq/perm.hpp"

#include <cctype>
#include <stdexcept>

namespace cq {

namespace {

void check_bijection(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  if (n < 1) throw std::invalid_argument("permutation degree must be >= 1");
  std::vector<char> seen(n, 0);
  for (int x = 0; x < n; ++x) {
    const int y = images[x];
    if (y < 0 || y >= n)
      throw std::invalid_argument("image out of range: " + std::to_string(y + 1));
    if (seen[y])
      throw std::invalid_argument("image table is not a bijection, point " +
                                  std::to_string(y + 1) + " repeated");
    seen[y] = 1;
  }
}

}  // namespace

Permutation::Permutation(int degree) {
  if (degree < 1) throw std::invalid_argument("permutation degree must be >= 1");
  images_.resize(degree);
  for (int x = 0; x < degree; ++x) images_[x] = x;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  check_bijection(images_);
}

bool Permutation::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if (images_[x] != x) return false;
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch (" +
                                std::to_string(p.degree()) + " vs " +
                                std::to_string(q.degree()) + ")");
  std::vector<int> images(p.degree());
  for (int x = 0; x < p.degree(); ++x) images[x] = p(q(x));
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> images(p.degree());
  for (int x = 0; x < p.degree(); ++x) images[p(x)] = x;
  return Permutation(std::move(images));
}

Permutation power(const Permutation& p, long long m) {
  if (m < 0) return inverse(power(p, -m));
  Permutation result(p.degree());
  Permutation base = p;
  while (m > 0) {
    if (m & 1) result = compose(result, base);
    base = compose(base, base);
    m >>= 1;
  }
  return result;
}

Permutation conjugate(const Permutation& g, const Permutation& p) {
  if (g.degree() != p.degree())
    throw std::invalid_argument("conjugate: degree mismatch");
  // g * p * g^-1 without materializing the inverse
  std::vector<int> images(g.degree());
  for (int x = 0; x < g.degree(); ++x) images[g(x)] = g(p(x));
  return Permutation(std::move(images));
}

std::vector<int> fixed_points(const Permutation& p) {
  std::vector<int> result;
  for (int x = 0; x < p.degree(); ++x)
    if (p(x) == x) result.push_back(x);
  return result;
}

bool is_full_cycle_minus_one(const Permutation& p) {
  const int n = p.degree();
  if (n < 3) return false;
  int fixed = -1;
  for (int x = 0; x < n; ++x) {
    if (p(x) == x) {
      if (fixed >= 0) return false;
      fixed = x;
    }
  }
  if (fixed < 0) return false;
  // walk the cycle through the first moved point
  const int start = fixed == 0 ? 1 : 0;
  int length = 1;
  for (int x = p(start); x != start; x = p(x)) ++length;
  return length == n - 1;
}

Permutation parse_cycles(std::string_view text, int degree) {
  if (degree < 1) throw std::invalid_argument("parse_cycles: degree must be >= 1");
  std::vector<std::vector<int>> cycles;
  std::vector<int> current;
  bool in_paren = false;
  bool saw_paren = false;
  bool bare_cycle = false;  // points outside any parentheses
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '(') {
      if (in_paren) throw std::invalid_argument("parse_cycles: nested '('");
      if (bare_cycle)
        throw std::invalid_argument("parse_cycles: mixed bare and parenthesized cycles");
      in_paren = true;
      saw_paren = true;
      ++i;
    } else if (c == ')') {
      if (!in_paren) throw std::invalid_argument("parse_cycles: unmatched ')'");
      in_paren = false;
      if (!current.empty()) cycles.push_back(std::move(current));
      current.clear();
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (!in_paren) {
        if (saw_paren)
          throw std::invalid_argument("parse_cycles: point outside parentheses");
        bare_cycle = true;
      }
      int value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > degree)
          throw std::invalid_argument("parse_cycles: point " + std::to_string(value) +
                                      " out of range 1.." + std::to_string(degree));
        ++i;
      }
      if (value < 1)
        throw std::invalid_argument("parse_cycles: points are 1-based, got 0");
      current.push_back(value - 1);
    } else {
      throw std::invalid_argument(std::string("parse_cycles: unexpected character '") +
                                  c + "'");
    }
  }
  if (in_paren) throw std::invalid_argument("parse_cycles: unmatched '('");
  if (!current.empty()) cycles.push_back(std::move(current));

  std::vector<int> images(degree);
  for (int x = 0; x < degree; ++x) images[x] = x;
  std::vector<char> seen(degree, 0);
  for (const auto& cycle : cycles) {
    for (int point : cycle) {
      if (seen[point])
        throw std::invalid_argument("parse_cycles: point " + std::to_string(point + 1) +
                                    " repeated");
      seen[point] = 1;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      images[cycle[k]] = cycle[(k + 1) % cycle.size()];
  }
  return Permutation(std::move(images));
}

std::string format_cycles(const Permutation& p) {
  const int n = p.degree();
  std::vector<char> visited(n, 0);
  std::string out;
  for (int x = 0; x < n; ++x) {
    if (visited[x] || p(x) == x) continue;
    out += '(';
    bool first = true;
    for (int y = x; !visited[y]; y = p(y)) {
      visited[y] = 1;
      if (!first) out += ' ';
      out += std::to_string(y + 1);
      first = false;
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

}  // namespace cq
