#ifndef WRGEN_PERM_HPP
#define WRGEN_PERM_HPP

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wrgen/error.hpp"

namespace wrgen {

// Points are 0-based inside the library. Every textual form (cycle notation,
// CLI, JSON) is 1-based.
using point = std::uint32_t;

enum class parity { even, odd };

inline parity operator*(parity lhs, parity rhs) noexcept {
  return lhs == rhs ? parity::even : parity::odd;
}

// A bijection on {0..degree-1} stored as an image table. Permutations act on
// the right and compose left to right: (i)(f*g) = ((i)f)g.
class permutation {
 public:
  permutation() : permutation(1) {}

  explicit permutation(std::size_t degree) : images_(degree) {
    if (degree == 0) {
      throw precondition_error("permutation degree must be positive");
    }
    std::iota(images_.begin(), images_.end(), point{0});
  }

  explicit permutation(std::vector<point> images) : images_(std::move(images)) {
    if (images_.empty()) {
      throw precondition_error("permutation degree must be positive");
    }
    std::vector<bool> seen(images_.size(), false);
    for (point p : images_) {
      if (p >= images_.size() || seen[p]) {
        throw precondition_error("image table is not a bijection");
      }
      seen[p] = true;
    }
  }

  static permutation identity(std::size_t degree) { return permutation(degree); }

  std::size_t degree() const noexcept { return images_.size(); }

  point operator[](point i) const noexcept { return images_[i]; }

  std::span<const point> images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) return false;
    }
    return true;
  }

  friend bool operator==(const permutation&, const permutation&) = default;

  // Degree first, then image tables lexicographically.
  friend std::strong_ordering operator<=>(const permutation& lhs,
                                          const permutation& rhs) {
    if (auto c = lhs.degree() <=> rhs.degree(); c != 0) return c;
    return lhs.images_ <=> rhs.images_;
  }

 private:
  struct unchecked_tag {};
  permutation(std::vector<point> images, unchecked_tag)
      : images_(std::move(images)) {}

  friend permutation compose(const permutation& f, const permutation& g);
  friend permutation inverse(const permutation& f);

  std::vector<point> images_;
};

inline bool is_identity(const permutation& f) noexcept { return f.is_identity(); }

inline permutation compose(const permutation& f, const permutation& g) {
  if (f.degree() != g.degree()) throw degree_mismatch(f.degree(), g.degree());
  std::vector<point> out(f.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = g.images_[f.images_[i]];
  return permutation(std::move(out), permutation::unchecked_tag{});
}

inline permutation operator*(const permutation& f, const permutation& g) {
  return compose(f, g);
}

inline permutation inverse(const permutation& f) {
  std::vector<point> out(f.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[f.images_[i]] = static_cast<point>(i);
  return permutation(std::move(out), permutation::unchecked_tag{});
}

inline permutation power(const permutation& f, std::uint64_t k) {
  permutation result(f.degree());
  permutation base = f;
  while (k > 0) {
    if (k & 1u) result = result * base;
    base = base * base;
    k >>= 1u;
  }
  return result;
}

// g^-1 f g
inline permutation conjugate(const permutation& f, const permutation& g) {
  if (f.degree() != g.degree()) throw degree_mismatch(f.degree(), g.degree());
  return inverse(g) * f * g;
}

inline std::vector<std::size_t> cycle_lengths(const permutation& f) {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(f.degree(), false);
  for (point start = 0; start < f.degree(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (point p = start; !seen[p]; p = f[p]) {
      seen[p] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

// lcm of the cycle lengths; throws if it does not fit in 64 bits.
inline std::uint64_t order(const permutation& f) {
  std::uint64_t result = 1;
  for (std::size_t len : cycle_lengths(f)) {
    const std::uint64_t g = std::gcd(result, static_cast<std::uint64_t>(len));
    std::uint64_t next = 0;
    if (__builtin_mul_overflow(result / g, static_cast<std::uint64_t>(len), &next)) {
      throw error("permutation order overflows 64 bits");
    }
    result = next;
  }
  return result;
}

inline parity parity_of(const permutation& f) {
  std::size_t transpositions = 0;
  for (std::size_t len : cycle_lengths(f)) transpositions += len - 1;
  return transpositions % 2 == 0 ? parity::even : parity::odd;
}

inline std::vector<point> fixed_points(const permutation& f) {
  std::vector<point> out;
  for (point i = 0; i < f.degree(); ++i) {
    if (f[i] == i) out.push_back(i);
  }
  return out;
}

// Embeds f into S_n, fixing the points beyond f's degree.
inline permutation extend(const permutation& f, std::size_t n) {
  if (n < f.degree()) {
    throw precondition_error("cannot extend a permutation to a smaller degree");
  }
  std::vector<point> out(n);
  std::iota(out.begin(), out.end(), point{0});
  for (point i = 0; i < f.degree(); ++i) out[i] = f[i];
  return permutation(std::move(out));
}

// Builds the single cycle (p1,p2,...,pk) from 1-based points.
inline permutation make_cycle(std::size_t degree, std::span<const unsigned> points) {
  std::vector<point> out(degree);
  std::iota(out.begin(), out.end(), point{0});
  std::vector<bool> used(degree, false);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const unsigned p = points[i];
    if (p < 1 || p > degree || used[p - 1]) {
      throw precondition_error("cycle point " + std::to_string(p) +
                               " is out of range or repeated");
    }
    used[p - 1] = true;
    out[p - 1] = points[(i + 1) % points.size()] - 1;
  }
  return permutation(std::move(out));
}

inline permutation make_cycle(std::size_t degree, std::initializer_list<unsigned> points) {
  return make_cycle(degree, std::span<const unsigned>(points.begin(), points.size()));
}

// The cycle (first, first+1, ..., last), 1-based. Empty or singleton ranges
// give the identity.
inline permutation cycle_range(std::size_t degree, unsigned first, unsigned last) {
  std::vector<unsigned> pts;
  for (unsigned p = first; p <= last; ++p) pts.push_back(p);
  if (pts.size() < 2) return permutation(degree);
  return make_cycle(degree, pts);
}

namespace detail {

class cycle_lexer {
 public:
  explicit cycle_lexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) {
      throw parse_error(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  // Returns (value, start position).
  std::pair<unsigned long, std::size_t> number() {
    skip_space();
    const std::size_t start = pos_;
    unsigned long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<unsigned long>(text_[pos_] - '0');
      if (value > 1'000'000'000ul) throw parse_error("point too large", start);
      ++pos_;
    }
    if (pos_ == start) throw parse_error("expected a point", start);
    return {value, start};
  }

  std::size_t position() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// perm := cycle* ; cycle := "(" point ("," point)* ")". The empty string and
// "()" denote the identity.
inline permutation parse_cycles(std::string_view text, std::size_t degree) {
  if (degree == 0) throw precondition_error("permutation degree must be positive");
  detail::cycle_lexer lex(text);
  std::vector<point> images(degree);
  std::iota(images.begin(), images.end(), point{0});
  std::vector<bool> used(degree, false);

  if (lex.at_end()) return permutation(std::move(images));
  {
    detail::cycle_lexer probe(text);
    probe.expect('(');
    if (probe.peek() == ')') {
      probe.expect(')');
      if (!probe.at_end()) {
        throw parse_error("\"()\" must stand alone", probe.position());
      }
      return permutation(std::move(images));
    }
  }

  while (!lex.at_end()) {
    lex.expect('(');
    std::vector<point> cycle;
    while (true) {
      auto [value, at] = lex.number();
      if (value < 1 || value > degree) {
        throw parse_error("point " + std::to_string(value) + " out of range 1.." +
                              std::to_string(degree),
                          at);
      }
      const point p = static_cast<point>(value - 1);
      if (used[p]) throw parse_error("repeated point " + std::to_string(value), at);
      used[p] = true;
      cycle.push_back(p);
      if (lex.peek() == ',') {
        lex.expect(',');
        continue;
      }
      lex.expect(')');
      break;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
  }
  return permutation(std::move(images));
}

// Canonical disjoint-cycle form: each cycle led by its least point, cycles in
// increasing order of leading point, fixed points omitted, identity as "()".
inline std::string format_cycles(const permutation& f) {
  std::string out;
  std::vector<bool> seen(f.degree(), false);
  for (point start = 0; start < f.degree(); ++start) {
    if (seen[start] || f[start] == start) continue;
    out += '(';
    for (point p = start; !seen[p]; p = f[p]) {
      seen[p] = true;
      if (p != start) out += ',';
      out += std::to_string(p + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace wrgen

#endif
