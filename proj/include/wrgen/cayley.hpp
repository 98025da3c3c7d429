#ifndef WRGEN_CAYLEY_HPP
#define WRGEN_CAYLEY_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "wrgen/element_set.hpp"
#include "wrgen/error.hpp"

namespace wrgen {

inline constexpr std::size_t max_cayley_order = 65535;

// A subgroup of an enumerated group as a membership bitmap plus the
// generators it was built from.
struct subgroup {
  std::vector<std::uint64_t> bits;
  std::size_t size = 0;
  std::vector<std::uint32_t> generators;

  bool contains(std::uint32_t i) const noexcept { return (bits[i >> 6] >> (i & 63)) & 1u; }

  friend bool operator==(const subgroup& a, const subgroup& b) noexcept {
    return a.size == b.size && a.bits == b.bits;
  }
};

struct subgroup_hash {
  std::size_t operator()(const subgroup& h) const noexcept {
    std::uint64_t x = h.size * 0x9e3779b97f4a7c15ull;
    for (auto w : h.bits) x = (x ^ w) * 0xff51afd7ed558ccdull + (x >> 29);
    return static_cast<std::size_t>(x);
  }
};

// Multiplication table of an enumerated group, elements indexed as in the
// element_set they came from.
class cayley_group {
 public:
  using index = std::uint32_t;

  template <class Codec>
  explicit cayley_group(const element_set<Codec>& set, std::size_t max_order = max_cayley_order)
      : n_(set.size()) {
    if (n_ > max_order || n_ > max_cayley_order) throw budget_exceeded(std::min(max_order, max_cayley_order));
    const std::size_t ngens = set.generators().size();
    const std::size_t w = set.width();
    for (std::size_t s = 0; s < ngens; ++s) {
      generators_.push_back(static_cast<index>(set.generator_index(s)));
    }

    // right[i * ngens + s] = e_i * g_s
    std::vector<index> right(n_ * ngens);
    std::vector<std::uint8_t> rec(w);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t s = 0; s < ngens; ++s) {
        set.codec().multiply(set.record(i), set.record(generators_[s]), rec.data());
        right[i * ngens + s] = static_cast<index>(*set.find_record(rec.data()));
      }
    }

    // Column-major table: table_[j * n + i] = e_i * e_j. Element j is either
    // generator g_s or g_s * e_p with p discovered earlier, so
    // e_i * e_j = (e_i * g_s) * e_p.
    table_.resize(n_ * n_);
    for (std::size_t j = 0; j < n_; ++j) {
      const std::size_t s = set.via(j);
      const auto p = set.parent(j);
      auto* col = table_.data() + j * n_;
      if (p == element_set<Codec>::no_parent) {
        for (std::size_t i = 0; i < n_; ++i) col[i] = static_cast<std::uint16_t>(right[i * ngens + s]);
      } else {
        const auto* pcol = table_.data() + static_cast<std::size_t>(p) * n_;
        for (std::size_t i = 0; i < n_; ++i) col[i] = pcol[right[i * ngens + s]];
      }
    }

    for (index i = 0; i < n_; ++i) {
      if (mul(i, i) == i) {
        identity_ = i;
        break;
      }
    }
    inverse_.assign(n_, 0);
    for (index i = 0; i < n_; ++i) {
      for (index j = 0; j < n_; ++j) {
        if (mul(i, j) == identity_) {
          inverse_[i] = j;
          break;
        }
      }
    }
  }

  std::size_t order() const noexcept { return n_; }
  index identity() const noexcept { return identity_; }
  index mul(index i, index j) const noexcept { return table_[static_cast<std::size_t>(j) * n_ + i]; }
  index inverse(index i) const noexcept { return inverse_[i]; }
  const std::vector<index>& generators() const noexcept { return generators_; }

  // g^-1 x g
  index conjugate(index x, index g) const noexcept { return mul(mul(inverse(g), x), g); }

  std::uint64_t element_order(index i) const noexcept {
    std::uint64_t k = 1;
    for (index x = i; x != identity_; x = mul(x, i)) ++k;
    return k;
  }

  bool is_abelian() const noexcept {
    for (auto a : generators_) {
      for (auto b : generators_) {
        if (mul(a, b) != mul(b, a)) return false;
      }
    }
    return true;
  }

  // Classes by orbit of conjugation under the group generators.
  std::vector<std::vector<index>> conjugacy_classes() const {
    std::vector<bool> seen(n_, false);
    std::vector<std::vector<index>> classes;
    for (index x = 0; x < n_; ++x) {
      if (seen[x]) continue;
      std::vector<index> cls{x};
      seen[x] = true;
      for (std::size_t k = 0; k < cls.size(); ++k) {
        for (auto g : generators_) {
          const index y = conjugate(cls[k], g);
          if (!seen[y]) {
            seen[y] = true;
            cls.push_back(y);
          }
        }
      }
      classes.push_back(std::move(cls));
    }
    return classes;
  }

  subgroup empty_subgroup() const {
    subgroup h;
    h.bits.assign((n_ + 63) / 64, 0);
    return h;
  }

  subgroup generate(std::span<const index> gens) const {
    subgroup h = empty_subgroup();
    h.generators.assign(gens.begin(), gens.end());
    std::vector<index> elems;
    add(h, elems, identity_);
    close(h, elems, 0);
    return h;
  }

  // <h, x>
  subgroup extend(const subgroup& h, index x) const {
    subgroup k = h;
    k.generators.push_back(x);
    if (h.contains(x)) return k;
    std::vector<index> elems = members(h);
    // Elements of h only need multiplying by the new generator.
    const std::size_t old = elems.size();
    for (std::size_t i = 0; i < old; ++i) add(k, elems, mul(elems[i], x));
    close(k, elems, old);
    return k;
  }

  std::vector<index> members(const subgroup& h) const {
    std::vector<index> out;
    out.reserve(h.size);
    for (std::size_t w = 0; w < h.bits.size(); ++w) {
      for (std::uint64_t bits = h.bits[w]; bits != 0; bits &= bits - 1) {
        out.push_back(static_cast<index>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
      }
    }
    return out;
  }

  // Subgroup generated by all commutators.
  subgroup derived_subgroup() const {
    std::vector<index> comms;
    std::vector<bool> seen(n_, false);
    for (index a = 0; a < n_; ++a) {
      for (index b = 0; b < n_; ++b) {
        const index c = mul(mul(inverse(a), inverse(b)), mul(a, b));
        if (!seen[c]) {
          seen[c] = true;
          comms.push_back(c);
        }
      }
    }
    return generate(comms);
  }

 private:
  static void add(subgroup& h, std::vector<index>& elems, index x) {
    auto& word = h.bits[x >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (x & 63);
    if (word & bit) return;
    word |= bit;
    ++h.size;
    elems.push_back(x);
  }

  // Closes under right multiplication by h.generators, starting at elems[from].
  void close(subgroup& h, std::vector<index>& elems, std::size_t from) const {
    for (std::size_t i = from; i < elems.size(); ++i) {
      for (auto g : h.generators) add(h, elems, mul(elems[i], g));
    }
  }

  std::size_t n_;
  std::vector<std::uint16_t> table_;
  std::vector<index> inverse_;
  std::vector<index> generators_;
  index identity_ = 0;
};

}  // namespace wrgen

#endif
