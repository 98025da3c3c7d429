#ifndef WRGEN_ELEMENT_SET_HPP
#define WRGEN_ELEMENT_SET_HPP

#include <cstddef>
#include <cstdint>
#include <cstring>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "wrgen/error.hpp"
#include "wrgen/perm.hpp"

namespace wrgen {

inline constexpr std::size_t default_closure_budget = 10'000'000;

// Maps an element type to its fixed-width record codec. A codec provides
// width(), compatible(x), encode(x, out), decode(rec), multiply(a, b, out)
// and order(rec); records are byte strings of width() bytes.
template <class T>
struct codec_for;

// Image table, one byte per point.
class perm_codec {
 public:
  using value_type = permutation;

  explicit perm_codec(std::size_t degree) : degree_(degree) {
    if (degree == 0 || degree > 256) {
      throw precondition_error("enumeration supports degrees 1..256");
    }
  }

  static perm_codec for_element(const permutation& p) { return perm_codec(p.degree()); }

  std::size_t width() const noexcept { return degree_; }
  bool compatible(const permutation& p) const noexcept { return p.degree() == degree_; }

  void encode(const permutation& p, std::uint8_t* out) const {
    for (std::size_t i = 0; i < degree_; ++i) out[i] = static_cast<std::uint8_t>(p[static_cast<point>(i)]);
  }

  permutation decode(const std::uint8_t* rec) const {
    return permutation(std::vector<point>(rec, rec + degree_));
  }

  // out = a * b (apply a, then b).
  void multiply(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out) const noexcept {
    for (std::size_t i = 0; i < degree_; ++i) out[i] = b[a[i]];
  }

  std::uint64_t order(const std::uint8_t* rec) const { return wrgen::order(decode(rec)); }

 private:
  std::size_t degree_;
};

template <>
struct codec_for<permutation> {
  using type = perm_codec;
};

template <class Codec>
class element_set;

template <class T>
auto closure(std::span<const T> generators, std::size_t budget = default_closure_budget)
    -> element_set<typename codec_for<T>::type>;

// A finite set of elements closed under multiplication, held as packed
// records with an open-addressing index. Element i was discovered as
// generators()[via(i)] * element(parent(i)), or is generator via(i) itself
// when parent(i) == no_parent.
template <class Codec>
class element_set {
 public:
  using value_type = typename Codec::value_type;
  static constexpr std::uint32_t no_parent = std::numeric_limits<std::uint32_t>::max();

  explicit element_set(Codec codec) : codec_(std::move(codec)) { slots_.assign(64, empty_slot); }

  const Codec& codec() const noexcept { return codec_; }
  std::size_t size() const noexcept { return parent_.size(); }
  std::size_t width() const noexcept { return codec_.width(); }

  const std::uint8_t* record(std::size_t i) const noexcept { return data_.data() + i * width(); }

  value_type operator[](std::size_t i) const { return codec_.decode(record(i)); }

  std::optional<std::size_t> find_record(const std::uint8_t* rec) const noexcept {
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t s = hash(rec) & mask;; s = (s + 1) & mask) {
      const auto idx = slots_[s];
      if (idx == empty_slot) return std::nullopt;
      if (std::memcmp(record(idx), rec, width()) == 0) return idx;
    }
  }

  std::optional<std::size_t> find(const value_type& x) const {
    if (!codec_.compatible(x)) return std::nullopt;
    std::vector<std::uint8_t> rec(width());
    codec_.encode(x, rec.data());
    return find_record(rec.data());
  }

  bool contains(const value_type& x) const { return find(x).has_value(); }

  std::uint32_t parent(std::size_t i) const noexcept { return parent_[i]; }
  std::uint32_t via(std::size_t i) const noexcept { return via_[i]; }

  const std::vector<value_type>& generators() const noexcept { return generators_; }
  // Index of generators()[s] within the set.
  std::size_t generator_index(std::size_t s) const noexcept { return generator_index_[s]; }

  std::vector<value_type> elements() const {
    std::vector<value_type> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) out.push_back((*this)[i]);
    return out;
  }

 private:
  template <class T>
  friend auto closure(std::span<const T> generators, std::size_t budget)
      -> element_set<typename codec_for<T>::type>;

  static constexpr std::uint32_t empty_slot = std::numeric_limits<std::uint32_t>::max();

  std::size_t hash(const std::uint8_t* rec) const noexcept {
    return std::hash<std::string_view>{}(
        std::string_view(reinterpret_cast<const char*>(rec), width()));
  }

  void grow() {
    std::vector<std::uint32_t> old(slots_.size() * 2, empty_slot);
    old.swap(slots_);
    const std::size_t mask = slots_.size() - 1;
    for (std::uint32_t idx = 0; idx < size(); ++idx) {
      std::size_t s = hash(record(idx)) & mask;
      while (slots_[s] != empty_slot) s = (s + 1) & mask;
      slots_[s] = idx;
    }
  }

  // Returns (index, inserted).
  std::pair<std::size_t, bool> insert(const std::uint8_t* rec, std::uint32_t parent,
                                      std::uint32_t via) {
    if ((size() + 1) * 2 > slots_.size()) grow();
    const std::size_t mask = slots_.size() - 1;
    std::size_t s = hash(rec) & mask;
    for (;; s = (s + 1) & mask) {
      const auto idx = slots_[s];
      if (idx == empty_slot) break;
      if (std::memcmp(record(idx), rec, width()) == 0) return {idx, false};
    }
    const auto idx = static_cast<std::uint32_t>(size());
    slots_[s] = idx;
    data_.insert(data_.end(), rec, rec + width());
    parent_.push_back(parent);
    via_.push_back(via);
    return {idx, true};
  }

  Codec codec_;
  std::vector<std::uint8_t> data_;
  std::vector<std::uint32_t> slots_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> via_;
  std::vector<value_type> generators_;
  std::vector<std::size_t> generator_index_;
};

// Semigroup closure: every product of positive powers of the generators,
// found breadth-first by left multiplication. For finite carriers this is the
// generated subgroup.
template <class T>
auto closure(std::span<const T> generators, std::size_t budget)
    -> element_set<typename codec_for<T>::type> {
  using codec_type = typename codec_for<T>::type;
  if (generators.empty()) throw precondition_error("closure needs at least one generator");
  element_set<codec_type> set(codec_type::for_element(generators.front()));
  const auto& codec = set.codec();
  const std::size_t w = codec.width();

  std::vector<std::uint8_t> gen_records;
  std::vector<std::uint8_t> rec(w);
  for (const auto& g : generators) {
    if (!codec.compatible(g)) throw shape_mismatch("generators do not share a carrier");
    codec.encode(g, rec.data());
    auto [idx, inserted] =
        set.insert(rec.data(), element_set<codec_type>::no_parent,
                   static_cast<std::uint32_t>(set.generators_.size()));
    if (!inserted) continue;
    if (set.size() > budget) throw budget_exceeded(budget);
    set.generators_.push_back(g);
    set.generator_index_.push_back(idx);
    gen_records.insert(gen_records.end(), rec.begin(), rec.end());
  }

  const std::size_t ngens = set.generators_.size();
  std::vector<std::uint8_t> current(w);
  for (std::size_t i = 0; i < set.size(); ++i) {
    std::memcpy(current.data(), set.record(i), w);
    for (std::size_t s = 0; s < ngens; ++s) {
      codec.multiply(gen_records.data() + s * w, current.data(), rec.data());
      auto [idx, inserted] =
          set.insert(rec.data(), static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(s));
      if (inserted && set.size() > budget) throw budget_exceeded(budget);
    }
  }
  return set;
}

template <class T>
auto closure(const std::vector<T>& generators, std::size_t budget = default_closure_budget) {
  return closure(std::span<const T>(generators), budget);
}

// True iff some element's order equals the number of elements.
template <class Codec>
bool is_cyclic(const element_set<Codec>& set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set.codec().order(set.record(i)) == set.size()) return true;
  }
  return false;
}

}  // namespace wrgen

#endif
