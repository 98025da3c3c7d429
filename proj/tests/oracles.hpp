#ifndef WRGEN_TESTS_ORACLES_HPP
#define WRGEN_TESTS_ORACLES_HPP

// Brute-force reference computations that share no code path with the
// library: raw image vectors, std::set for membership, plain loops.

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "wrgen/perm.hpp"

namespace oracle {

using images = std::vector<unsigned>;

inline images of(const wrgen::permutation& p) {
  return images(p.images().begin(), p.images().end());
}

// apply a then b
inline images product(const images& a, const images& b) {
  images out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return out;
}

inline images identity(std::size_t n) {
  images out(n);
  std::iota(out.begin(), out.end(), 0u);
  return out;
}

inline std::set<images> closure(const std::vector<wrgen::permutation>& gens) {
  std::set<images> seen;
  std::vector<images> queue;
  for (const auto& g : gens) {
    if (seen.insert(of(g)).second) queue.push_back(of(g));
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : gens) {
      auto next = product(queue[i], of(g));
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return seen;
}

inline std::uint64_t order_by_powers(const images& a) {
  std::uint64_t k = 1;
  for (images x = a; x != identity(a.size()); x = product(x, a)) ++k;
  return k;
}

// Smallest k such that some k-element subset of the group generates it.
inline unsigned min_generators(const std::vector<wrgen::permutation>& gens) {
  const auto group = closure(gens);
  const std::vector<images> elems(group.begin(), group.end());
  const std::size_t n = elems.size();
  auto to_perm = [](const images& x) {
    return wrgen::permutation(std::vector<wrgen::point>(x.begin(), x.end()));
  };
  for (unsigned k = 1;; ++k) {
    std::vector<std::size_t> idx(k, 0);
    while (true) {
      std::vector<wrgen::permutation> tuple;
      for (auto i : idx) tuple.push_back(to_perm(elems[i]));
      if (closure(tuple).size() == n) return k;
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == n - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < k; ++j) idx[j] = idx[pos - 1];
    }
  }
}

inline wrgen::permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<wrgen::point> img(n);
  std::iota(img.begin(), img.end(), wrgen::point{0});
  std::shuffle(img.begin(), img.end(), rng);
  return wrgen::permutation(std::move(img));
}

}  // namespace oracle

#endif
