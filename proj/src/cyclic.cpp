#include "cq/cyclic.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cq {

SigmaSet::SigmaSet(int degree, std::vector<Permutation> elements)
    : degree_(degree), elements_(std::move(elements)) {
  if (degree_ < 3) throw std::invalid_argument("SigmaSet: degree must be >= 3");
  for (const auto& p : elements_) {
    if (p.degree() != degree_)
      throw std::invalid_argument("SigmaSet: element degree mismatch");
    if (!is_full_cycle_minus_one(p))
      throw std::invalid_argument("SigmaSet: element " + format_cycles(p) +
                                  " is not an (n-1)-cycle");
  }
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool SigmaSet::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

namespace {

void require_cyclic_domain(const Quandle& q) {
  if (q.size() < 3)
    throw std::invalid_argument("cyclic type is defined only for n >= 3");
}

}  // namespace

bool is_cyclic_type(const Quandle& q) {
  require_cyclic_domain(q);
  for (const auto& s : q.translations())
    if (!is_full_cycle_minus_one(s)) return false;
  return true;
}

bool is_cyclic_type_via_characterization(const Quandle& q) {
  require_cyclic_domain(q);
  if (!is_connected(q)) return false;
  for (const auto& s : q.translations())
    if (is_full_cycle_minus_one(s)) return true;
  return false;
}

bool check_d_conditions(const SigmaSet& sigma) {
  // (D1): s^-1 t s in Sigma for all s, t
  for (const auto& s : sigma.elements()) {
    const Permutation s_inv = inverse(s);
    for (const auto& t : sigma.elements())
      if (!sigma.contains(conjugate(s_inv, t))) return false;
  }
  // (D2): exactly one element fixes each point
  for (int x = 0; x < sigma.degree(); ++x) {
    int fixers = 0;
    for (const auto& s : sigma.elements())
      if (s(x) == x) ++fixers;
    if (fixers != 1) return false;
  }
  return true;
}

SigmaSet translations_of(const Quandle& q) {
  if (!is_cyclic_type(q))
    throw std::invalid_argument("translations_of: quandle is not of cyclic type");
  return SigmaSet(q.size(), q.translations());
}

Quandle quandle_from_sigma(const SigmaSet& sigma) {
  if (!check_d_conditions(sigma))
    throw std::invalid_argument("quandle_from_sigma: D-conditions fail");
  const int n = sigma.degree();
  std::vector<Permutation> maps;
  maps.reserve(n);
  for (int x = 0; x < n; ++x) {
    const Permutation* fixer = nullptr;
    for (const auto& s : sigma.elements())
      if (s(x) == x) fixer = &s;  // unique by D2
    maps.push_back(*fixer);
  }
  return Quandle::from_translations(std::move(maps));
}

namespace {

// {g^m h g^-m | m = 1..n-2}, built by repeated conjugation, sorted.
std::vector<Permutation> conjugate_chain(const Permutation& g, const Permutation& h) {
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

bool check_e_conditions(const Permutation& u1, const Permutation& u2) {
  if (u1.degree() != u2.degree())
    throw std::invalid_argument("check_e_conditions: degree mismatch");
  if (!is_full_cycle_minus_one(u1) || !is_full_cycle_minus_one(u2))
    throw std::invalid_argument("check_e_conditions: both arguments must be (n-1)-cycles");
  if (u1(0) != 0 || u2(1) != 1) return false;  // (E1)
  return conjugate_chain(u1, u2) == conjugate_chain(u2, u1);  // (E2)
}

SigmaSet sigma_from_pair(const Permutation& u1, const Permutation& u2) {
  if (!check_e_conditions(u1, u2))
    throw std::invalid_argument("sigma_from_pair: E-conditions fail");
  const int n = u1.degree();
  std::vector<Permutation> elements = {u1, u2};
  Permutation c = u2;
  for (int m = 1; m <= n - 2; ++m) {
    c = conjugate(u1, c);
    elements.push_back(c);
  }
  SigmaSet sigma(n, std::move(elements));
  if (sigma.size() != static_cast<std::size_t>(n))
    throw std::logic_error("sigma_from_pair: expected exactly n elements");
  return sigma;
}

}  // namespace cq
