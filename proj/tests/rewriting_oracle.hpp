#pragma once

#include <map>
#include <utility>
#include <vector>

#include "weyl/poly.hpp"
#include "weyl/weyl.hpp"

namespace testing_support {

// Normal ordering by repeated single adjacent swaps, independent of the
// closed-form product used by the library. Letters are encoded as
// (is_d, index); the target order puts every z before every d and sorts by
// index within each kind. Swapping d_i z_i leaves the extra word with the pair
// deleted, from d_i z_i = z_i d_i + 1.
inline weyl::WeylElement rewrite_normal_order(std::size_t m, const weyl::Word& word) {
  using Letter = std::pair<int, std::size_t>;
  std::map<std::vector<Letter>, weyl::Rational> pending, done;
  std::vector<Letter> start;
  for (const auto& g : word) start.emplace_back(g.is_d ? 1 : 0, g.index);
  pending[start] = 1;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    auto w = node.key();
    weyl::Rational c = node.mapped();
    std::size_t k = 0;
    while (k + 1 < w.size() && !(w[k + 1] < w[k])) ++k;
    if (k + 1 >= w.size()) {
      done[w] += c;
      continue;
    }
    if (w[k].first == 1 && w[k + 1].first == 0 && w[k].second == w[k + 1].second) {
      auto shorter = w;
      shorter.erase(shorter.begin() + static_cast<long>(k), shorter.begin() + static_cast<long>(k) + 2);
      pending[shorter] += c;
    }
    std::swap(w[k], w[k + 1]);
    pending[w] += c;
  }
  weyl::WeylElement out(m);
  for (const auto& [w, c] : done) {
    if (c == 0) continue;
    weyl::Monomial mono(m);
    for (const auto& [is_d, idx] : w) (is_d ? mono.d(idx - 1) : mono.z(idx - 1)) += 1;
    out += weyl::WeylElement(mono, c);
  }
  return out;
}

}  // namespace testing_support
