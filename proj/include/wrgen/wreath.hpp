#ifndef WRGEN_WREATH_HPP
#define WRGEN_WREATH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wrgen/big_int.hpp"
#include "wrgen/bsgs.hpp"
#include "wrgen/element_set.hpp"
#include "wrgen/error.hpp"
#include "wrgen/group_spec.hpp"
#include "wrgen/perm.hpp"

namespace wrgen {

// An element (a_1,...,a_n; f) of G wr S. The base type G needs operator*,
// operator== and an ADL-visible is_identity(); inverse() is needed only by
// wr_inverse.
template <class G>
class wreath_element {
 public:
  using base_type = G;

  wreath_element(std::vector<G> coords, permutation top)
      : coords_(std::move(coords)), top_(std::move(top)) {
    if (coords_.size() != top_.degree()) {
      throw shape_mismatch("tuple length " + std::to_string(coords_.size()) +
                           " does not match top degree " + std::to_string(top_.degree()));
    }
  }

  // (1,...,1; id_n) for a given base identity.
  static wreath_element identity(std::size_t n, const G& base_identity) {
    return wreath_element(std::vector<G>(n, base_identity), permutation(n));
  }

  std::size_t top_degree() const noexcept { return top_.degree(); }
  const std::vector<G>& coords() const noexcept { return coords_; }
  const G& coord(std::size_t i) const { return coords_.at(i); }
  const permutation& top() const noexcept { return top_; }

  bool is_identity() const {
    if (!top_.is_identity()) return false;
    for (const auto& c : coords_) {
      if (!is_identity_of(c)) return false;
    }
    return true;
  }

  friend bool operator==(const wreath_element&, const wreath_element&) = default;

 private:
  static bool is_identity_of(const G& c) {
    using wrgen::is_identity;
    return is_identity(c);
  }

  std::vector<G> coords_;
  permutation top_;
};

template <class G>
bool is_identity(const wreath_element<G>& x) {
  return x.is_identity();
}

using wreath_perm = wreath_element<permutation>;

// (a; f)(b; g) = (a_1 b_{1f}, ..., a_n b_{nf}; fg).
template <class G>
wreath_element<G> wr_mul(const wreath_element<G>& x, const wreath_element<G>& y) {
  if (x.top_degree() != y.top_degree()) {
    throw shape_mismatch("wreath elements have different top degrees");
  }
  const auto& f = x.top();
  std::vector<G> coords;
  coords.reserve(x.top_degree());
  for (point i = 0; i < x.top_degree(); ++i) coords.push_back(x.coord(i) * y.coord(f[i]));
  return wreath_element<G>(std::move(coords), f * y.top());
}

template <class G>
wreath_element<G> operator*(const wreath_element<G>& x, const wreath_element<G>& y) {
  return wr_mul(x, y);
}

// (a; f)^-1 = (a'; f^-1) with a'_i = (a_{(i)f^-1})^-1.
template <class G>
wreath_element<G> wr_inverse(const wreath_element<G>& x) {
  const permutation finv = inverse(x.top());
  std::vector<G> coords;
  coords.reserve(x.top_degree());
  for (point i = 0; i < x.top_degree(); ++i) coords.push_back(inverse(x.coord(finv[i])));
  return wreath_element<G>(std::move(coords), finv);
}

// x^k by repeated squaring; k >= 1.
template <class G>
wreath_element<G> wr_power(const wreath_element<G>& x, std::uint64_t k) {
  if (k == 0) throw precondition_error("wr_power needs a positive exponent");
  std::optional<wreath_element<G>> result;
  wreath_element<G> base = x;
  while (k > 0) {
    if (k & 1u) result = result ? wr_mul(*result, base) : base;
    k >>= 1u;
    if (k > 0) base = wr_mul(base, base);
  }
  return *result;
}

// Least k >= 1 with x^k = 1. x^ord(f) has trivial top, after which the
// coordinates evolve independently.
template <class G>
std::uint64_t wr_order(const wreath_element<G>& x) {
  const std::uint64_t top_order = order(x.top());
  const wreath_element<G> y = wr_power(x, top_order);
  std::uint64_t k = 1;
  for (wreath_element<G> z = y; !z.is_identity(); z = wr_mul(z, y)) ++k;
  return top_order * k;
}

// Imprimitive action on m*n points: (block i, inner j) -> point i*m + j
// (0-based), and (a; f) maps (i, j) to ((i)f, (j)a_i).
inline permutation embed(const wreath_perm& x) {
  const std::size_t n = x.top_degree();
  const std::size_t m = x.coord(0).degree();
  std::vector<point> images(m * n);
  for (point i = 0; i < n; ++i) {
    const auto& a = x.coord(i);
    if (a.degree() != m) throw degree_mismatch(a.degree(), m);
    const point block = x.top()[i];
    for (point j = 0; j < m; ++j) images[i * m + j] = static_cast<point>(block * m + a[j]);
  }
  return permutation(std::move(images));
}

// "(c1, c2, ..., cn; f)" with each entry in cycle notation.
inline std::string format_wreath(const wreath_perm& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.top_degree(); ++i) {
    if (i > 0) out += ", ";
    out += format_cycles(x.coord(i));
  }
  out += "; " + format_cycles(x.top()) + ")";
  return out;
}

inline wreath_perm parse_wreath(std::string_view text, std::size_t base_degree,
                                std::size_t top_degree) {
  std::size_t begin = 0;
  while (begin < text.size() && text[begin] == ' ') ++begin;
  std::size_t end = text.size();
  while (end > begin && text[end - 1] == ' ') --end;
  if (end - begin < 2 || text[begin] != '(' || text[end - 1] != ')') {
    throw parse_error("wreath element must be enclosed in parentheses", begin);
  }
  const std::size_t semi = text.rfind(';', end);
  if (semi == std::string_view::npos || semi < begin) {
    throw parse_error("wreath element needs ';' before the top permutation", begin);
  }
  std::vector<permutation> coords;
  std::size_t field = begin + 1;
  int depth = 0;
  for (std::size_t i = begin + 1; i <= semi; ++i) {
    const char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if ((c == ',' && depth == 0) || i == semi) {
      try {
        coords.push_back(parse_cycles(text.substr(field, i - field), base_degree));
      } catch (const parse_error& e) {
        throw parse_error("bad coordinate", field + e.position());
      }
      field = i + 1;
    }
  }
  permutation top = [&] {
    try {
      return parse_cycles(text.substr(semi + 1, end - 1 - (semi + 1)), top_degree);
    } catch (const parse_error& e) {
      throw parse_error("bad top permutation", semi + 1 + e.position());
    }
  }();
  if (coords.size() != top_degree) {
    throw parse_error("expected " + std::to_string(top_degree) + " coordinates", begin);
  }
  return wreath_perm(std::move(coords), std::move(top));
}

// G wr S for named or explicit permutation groups G (degree m) and S <= S_n.
class wreath_shape {
 public:
  wreath_shape(group_spec base, group_spec top) : base_(std::move(base)), top_(std::move(top)) {}

  const group_spec& base() const noexcept { return base_; }
  const group_spec& top() const noexcept { return top_; }
  std::size_t base_degree() const noexcept { return base_.degree(); }
  std::size_t top_degree() const noexcept { return top_.degree(); }

  // |G|^n |S|
  big_int order() const { return big_pow(base_.order(), top_degree()) * top_.order(); }

  wreath_perm identity() const {
    return wreath_perm::identity(top_degree(), permutation(base_degree()));
  }

  // Validating constructor: every coordinate in G, the top in S.
  wreath_perm element(std::vector<permutation> coords, permutation top) const {
    if (top.degree() != top_degree() || !top_.contains(top)) {
      throw precondition_error("top permutation " + format_cycles(top) + " is not in " +
                               top_.to_string());
    }
    for (const auto& c : coords) {
      if (c.degree() != base_degree() || !base_.contains(c)) {
        throw precondition_error("coordinate " + format_cycles(c) + " is not in " +
                                 base_.to_string());
      }
    }
    return wreath_perm(std::move(coords), std::move(top));
  }

  // (1,...,c,...,1; top) with c at coordinate `pos`.
  wreath_perm single(std::size_t pos, const permutation& c, const permutation& top) const {
    std::vector<permutation> coords(top_degree(), permutation(base_degree()));
    coords.at(pos) = c;
    return element(std::move(coords), top);
  }

  bool matches(const wreath_perm& x) const {
    if (x.top_degree() != top_degree() || !top_.contains(x.top())) return false;
    for (const auto& c : x.coords()) {
      if (!base_.contains(c)) return false;
    }
    return true;
  }

  // A generating set for the whole product: the generators of G placed in
  // the least coordinate of each S-orbit, plus (1; s) for each generator s
  // of S.
  std::vector<wreath_perm> generators() const {
    const auto top_gens = top_.generators();
    std::vector<wreath_perm> out;
    std::vector<bool> covered(top_degree(), false);
    for (point i = 0; i < top_degree(); ++i) {
      if (covered[i]) continue;
      for (point p : orbit(top_gens, top_degree(), i)) covered[p] = true;
      for (const auto& g : base_.generators()) {
        if (!g.is_identity()) out.push_back(single(i, g, permutation(top_degree())));
      }
    }
    for (const auto& s : top_gens) {
      if (!s.is_identity()) out.push_back(single(0, permutation(base_degree()), s));
    }
    if (out.empty()) out.push_back(identity());
    return out;
  }

 private:
  group_spec base_;
  group_spec top_;
};

// Records of n*m coordinate bytes followed by n top bytes.
class wreath_codec {
 public:
  using value_type = wreath_perm;

  wreath_codec(std::size_t base_degree, std::size_t top_degree)
      : m_(base_degree), n_(top_degree) {
    if (m_ == 0 || n_ == 0 || m_ > 256 || n_ > 256) {
      throw precondition_error("enumeration supports degrees 1..256");
    }
  }

  static wreath_codec for_element(const wreath_perm& x) {
    return wreath_codec(x.coord(0).degree(), x.top_degree());
  }

  std::size_t width() const noexcept { return n_ * m_ + n_; }

  bool compatible(const wreath_perm& x) const noexcept {
    if (x.top_degree() != n_) return false;
    for (const auto& c : x.coords()) {
      if (c.degree() != m_) return false;
    }
    return true;
  }

  void encode(const wreath_perm& x, std::uint8_t* out) const {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < m_; ++j) {
        out[i * m_ + j] = static_cast<std::uint8_t>(x.coord(i)[static_cast<point>(j)]);
      }
    }
    for (std::size_t i = 0; i < n_; ++i) {
      out[n_ * m_ + i] = static_cast<std::uint8_t>(x.top()[static_cast<point>(i)]);
    }
  }

  wreath_perm decode(const std::uint8_t* rec) const {
    std::vector<permutation> coords;
    coords.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      coords.emplace_back(std::vector<point>(rec + i * m_, rec + (i + 1) * m_));
    }
    return wreath_perm(std::move(coords),
                       permutation(std::vector<point>(rec + n_ * m_, rec + n_ * m_ + n_)));
  }

  void multiply(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out) const noexcept {
    const std::uint8_t* f = a + n_ * m_;
    const std::uint8_t* g = b + n_ * m_;
    for (std::size_t i = 0; i < n_; ++i) {
      const std::uint8_t* bi = b + static_cast<std::size_t>(f[i]) * m_;
      for (std::size_t j = 0; j < m_; ++j) out[i * m_ + j] = bi[a[i * m_ + j]];
      out[n_ * m_ + i] = g[f[i]];
    }
  }

  // Repeated multiplication on records; element orders here are small.
  std::uint64_t order(const std::uint8_t* rec) const {
    const std::size_t w = width();
    std::vector<std::uint8_t> x(rec, rec + w), next(w);
    for (std::uint64_t k = 1;; ++k) {
      if (is_identity_record(x.data())) return k;
      multiply(x.data(), rec, next.data());
      x.swap(next);
    }
  }

 private:
  bool is_identity_record(const std::uint8_t* rec) const noexcept {
    for (std::size_t i = 0; i < n_; ++i) {
      if (rec[n_ * m_ + i] != i) return false;
      for (std::size_t j = 0; j < m_; ++j) {
        if (rec[i * m_ + j] != j) return false;
      }
    }
    return true;
  }

 private:
  std::size_t m_;
  std::size_t n_;
};

template <>
struct codec_for<wreath_perm> {
  using type = wreath_codec;
};

struct tower {
  std::vector<permutation> generators;
  std::size_t degree = 1;
  big_int expected_order = 1;
};

// Permutation generators of the left-nested product
// G_1 wr G_2 wr ... wr G_k in its imprimitive action on n_1 n_2 ... n_k
// points. At each step the generators built so far are copied into the least
// block of every orbit of the next factor, which keeps non-transitive factors
// such as A_2 generating the full direct power.
inline tower tower_generators(std::span<const group_spec> specs) {
  if (specs.empty()) throw precondition_error("a tower needs at least one factor");
  tower out;
  out.degree = specs.front().degree();
  out.expected_order = specs.front().order();
  for (const auto& g : specs.front().generators()) {
    if (!g.is_identity()) out.generators.push_back(g);
  }
  for (std::size_t k = 1; k < specs.size(); ++k) {
    const auto& top = specs[k];
    const std::size_t n = top.degree();
    const std::size_t inner = out.degree;
    const auto top_gens = top.generators();
    std::vector<permutation> next;
    std::vector<bool> covered(n, false);
    for (point i = 0; i < n; ++i) {
      if (covered[i]) continue;
      for (point p : orbit(top_gens, n, i)) covered[p] = true;
      for (const auto& g : out.generators) {
        std::vector<permutation> coords(n, permutation(inner));
        coords[i] = g;
        next.push_back(embed(wreath_perm(std::move(coords), permutation(n))));
      }
    }
    for (const auto& s : top_gens) {
      if (s.is_identity()) continue;
      next.push_back(embed(wreath_perm(std::vector<permutation>(n, permutation(inner)), s)));
    }
    out.generators = std::move(next);
    out.degree = inner * n;
    out.expected_order = big_pow(out.expected_order, n) * top.order();
  }
  if (out.generators.empty()) out.generators.emplace_back(out.degree);
  return out;
}

inline tower tower_generators(std::initializer_list<group_spec> specs) {
  return tower_generators(std::span<const group_spec>(specs.begin(), specs.size()));
}

}  // namespace wrgen

#endif
