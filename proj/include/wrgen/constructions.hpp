#ifndef WRGEN_CONSTRUCTIONS_HPP
#define WRGEN_CONSTRUCTIONS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wrgen/big_int.hpp"
#include "wrgen/bsgs.hpp"
#include "wrgen/error.hpp"
#include "wrgen/group_spec.hpp"
#include "wrgen/perm.hpp"
#include "wrgen/wreath.hpp"

namespace wrgen {

// Least k >= 1 with k*r = 1 (mod p) and k = 0 (mod q). Requires gcd(p,q) = 1
// and gcd(r,p) = 1.
inline std::uint64_t crt_exponent(std::uint64_t p, std::uint64_t q, std::uint64_t r) {
  if (p == 0 || q == 0 || r == 0) throw precondition_error("crt_exponent needs positive inputs");
  if (std::gcd(p, q) != 1) throw precondition_error("orders must be coprime");
  if (std::gcd(r, p) != 1) throw precondition_error("r must be coprime to the first order");
  // k = q*t with q*t*r = 1 (mod p); the least t in [1, p] gives the least k.
  const std::uint64_t step = (q % p) * (r % p) % p;
  for (std::uint64_t t = 1; t <= p; ++t) {
    if ((step * t) % p == 1 % p) return q * t;
  }
  throw precondition_error("no exponent exists");  // unreachable for coprime inputs
}

enum class lemma_case {
  coxeter,       // (1,2),(2,3),...,(n-1,n)
  consecutive3,  // (1,2,3),(2,3,4),...,(n-2,n-1,n)
  fan_u,         // (1,2,3),(1,2,4),...,(1,2,n)
  fan_v,         // (1,2,3),(1,3,4),...,(1,n-1,n)
  transposition_full_cycle,   // (1,2),(1,2,...,n)
  transposition_tail_cycle,   // (1,2),(2,3,...,n)
  three_cycle_full_cycle,     // (1,2,3),(1,2,...,n), n odd
  three_cycle_tail_cycle,     // (1,2,3),(2,3,...,n), n even
  three_cycle_from3,          // (1,2,3),(3,4,...,n)
  three_cycle_from2,          // (1,2,3),(2,3,...,n)
  double_transposition_from2, // (1,2)(3,4),(2,3,4,...,n)
  double_transposition_skip3, // (1,2)(3,4),(2,4,5,...,n)
  four_cycle_from3,           // (1,2,3,4),(3,4,5,...,n)
};

inline constexpr std::array<std::pair<lemma_case, std::string_view>, 13> lemma_case_ids{{
    {lemma_case::coxeter, "L2.2-coxeter"},
    {lemma_case::consecutive3, "L2.2-consec3"},
    {lemma_case::fan_u, "L2.2-u"},
    {lemma_case::fan_v, "L2.2-v"},
    {lemma_case::transposition_full_cycle, "L2.3-1a"},
    {lemma_case::transposition_tail_cycle, "L2.3-1b"},
    {lemma_case::three_cycle_full_cycle, "L2.3-2"},
    {lemma_case::three_cycle_tail_cycle, "L2.3-3"},
    {lemma_case::three_cycle_from3, "L2.4-1"},
    {lemma_case::three_cycle_from2, "L2.4-2"},
    {lemma_case::double_transposition_from2, "L2.5-1"},
    {lemma_case::double_transposition_skip3, "L2.5-2"},
    {lemma_case::four_cycle_from3, "L2.6"},
}};

inline std::string_view to_string(lemma_case c) {
  for (const auto& [k, id] : lemma_case_ids) {
    if (k == c) return id;
  }
  return "?";
}

inline lemma_case parse_lemma_case(std::string_view id) {
  for (const auto& [k, name] : lemma_case_ids) {
    if (name == id) return k;
  }
  throw parse_error("unknown case id '" + std::string(id) + "'", 0);
}

struct expected_group {
  enum class kind { full_symmetric, full_alternating };
  kind which;
  std::size_t degree;

  big_int order() const {
    return which == kind::full_symmetric ? factorial(degree) : factorial(degree) / 2;
  }
  std::string to_string() const {
    return (which == kind::full_symmetric ? "S:" : "A:") + std::to_string(degree);
  }
  friend bool operator==(const expected_group&, const expected_group&) = default;
};

struct classic_set {
  std::vector<permutation> generators;
  expected_group expected;
};

namespace detail {

inline std::size_t min_degree(lemma_case c) {
  switch (c) {
    case lemma_case::coxeter:
    case lemma_case::transposition_full_cycle:
    case lemma_case::transposition_tail_cycle: return 2;
    case lemma_case::consecutive3:
    case lemma_case::fan_u:
    case lemma_case::fan_v:
    case lemma_case::three_cycle_full_cycle:
    case lemma_case::three_cycle_from3:
    case lemma_case::three_cycle_from2: return 3;
    case lemma_case::three_cycle_tail_cycle:
    case lemma_case::double_transposition_from2: return 4;
    case lemma_case::double_transposition_skip3:
    case lemma_case::four_cycle_from3: return 5;
  }
  return 0;
}

inline expected_group expected_for(lemma_case c, std::size_t n) {
  using k = expected_group::kind;
  const bool odd = n % 2 == 1;
  switch (c) {
    case lemma_case::coxeter:
    case lemma_case::transposition_full_cycle:
    case lemma_case::transposition_tail_cycle:
    case lemma_case::four_cycle_from3: return {k::full_symmetric, n};
    case lemma_case::consecutive3:
    case lemma_case::fan_u:
    case lemma_case::fan_v:
    case lemma_case::three_cycle_full_cycle:
    case lemma_case::three_cycle_tail_cycle: return {k::full_alternating, n};
    case lemma_case::three_cycle_from3:
    case lemma_case::double_transposition_skip3:
      return {odd ? k::full_alternating : k::full_symmetric, n};
    case lemma_case::three_cycle_from2:
    case lemma_case::double_transposition_from2:
      return {odd ? k::full_symmetric : k::full_alternating, n};
  }
  return {k::full_symmetric, n};
}

}  // namespace detail

// The generator list of a case without applying its degree exclusions.
// Still requires the minimum degree at which the cycles make sense.
inline std::vector<permutation> raw_generators(lemma_case c, std::size_t n) {
  if (n < detail::min_degree(c)) {
    throw precondition_error(std::string(to_string(c)) + " needs n >= " +
                             std::to_string(detail::min_degree(c)));
  }
  const auto u = static_cast<unsigned>(n);
  std::vector<permutation> out;
  switch (c) {
    case lemma_case::coxeter:
      for (unsigned i = 1; i < u; ++i) out.push_back(make_cycle(n, {i, i + 1}));
      break;
    case lemma_case::consecutive3:
      for (unsigned i = 1; i + 2 <= u; ++i) out.push_back(make_cycle(n, {i, i + 1, i + 2}));
      break;
    case lemma_case::fan_u:
      for (unsigned i = 3; i <= u; ++i) out.push_back(make_cycle(n, {1, 2, i}));
      break;
    case lemma_case::fan_v:
      for (unsigned i = 3; i <= u; ++i) out.push_back(make_cycle(n, {1, i - 1, i}));
      break;
    case lemma_case::transposition_full_cycle:
      out = {make_cycle(n, {1, 2}), cycle_range(n, 1, u)};
      break;
    case lemma_case::transposition_tail_cycle:
      out = {make_cycle(n, {1, 2}), cycle_range(n, 2, u)};
      break;
    case lemma_case::three_cycle_full_cycle:
      out = {make_cycle(n, {1, 2, 3}), cycle_range(n, 1, u)};
      break;
    case lemma_case::three_cycle_tail_cycle:
    case lemma_case::three_cycle_from2:
      out = {make_cycle(n, {1, 2, 3}), cycle_range(n, 2, u)};
      break;
    case lemma_case::three_cycle_from3:
      out = {make_cycle(n, {1, 2, 3}), cycle_range(n, 3, u)};
      break;
    case lemma_case::double_transposition_from2:
      out = {make_cycle(n, {1, 2}) * make_cycle(n, {3, 4}), cycle_range(n, 2, u)};
      break;
    case lemma_case::double_transposition_skip3: {
      std::vector<unsigned> pts{2};
      for (unsigned i = 4; i <= u; ++i) pts.push_back(i);
      out = {make_cycle(n, {1, 2}) * make_cycle(n, {3, 4}), make_cycle(n, pts)};
      break;
    }
    case lemma_case::four_cycle_from3:
      out = {make_cycle(n, {1, 2, 3, 4}), cycle_range(n, 3, u)};
      break;
  }
  return out;
}

// Generators and expected full group for a classic case. Degrees outside the
// case's range throw precondition_error; the degrees a case explicitly
// excludes (5 for L2.5-1, 6 for L2.5-2 and L2.6) throw excluded_degree.
inline classic_set classic_generators(lemma_case c, std::size_t n) {
  const std::string id(to_string(c));
  const bool odd = n % 2 == 1;
  if (c == lemma_case::three_cycle_full_cycle && n >= 3 && !odd) {
    throw precondition_error(id + " needs odd n >= 3");
  }
  if (c == lemma_case::three_cycle_tail_cycle && n >= 4 && odd) {
    throw precondition_error(id + " needs even n >= 4");
  }
  if (c == lemma_case::double_transposition_from2 && n == 5) {
    throw excluded_degree(id + " does not hold for n=5");
  }
  if ((c == lemma_case::double_transposition_skip3 || c == lemma_case::four_cycle_from3) &&
      n == 6) {
    throw excluded_degree(id + " does not hold for n=6");
  }
  return {raw_generators(c, n), detail::expected_for(c, n)};
}

// f, g generating S with (n)f = n, (1)g = 1, ord(f) a power of two and
// ord(g) odd. S must be S_n (n >= 4) or A_n (n >= 5).
inline std::pair<permutation, permutation> special_pair(const group_spec& s) {
  const std::size_t n = s.degree();
  const auto u = static_cast<unsigned>(n);
  if (s.is_symmetric() && n >= 4) {
    if (n % 2 == 0) return {make_cycle(n, {1, 2}), cycle_range(n, 2, u)};
    return {make_cycle(n, {1, 2, 3, 4}), cycle_range(n, 3, u)};
  }
  if (s.is_alternating() && n >= 5) {
    const permutation f = make_cycle(n, {1, 2}) * make_cycle(n, {3, 4});
    if (n % 2 == 0) return {f, cycle_range(n, 2, u)};
    std::vector<unsigned> pts{2};
    for (unsigned i = 4; i <= u; ++i) pts.push_back(i);
    return {f, make_cycle(n, pts)};
  }
  throw precondition_error("special_pair needs S_n with n >= 4 or A_n with n >= 5, got " +
                           s.to_string());
}

// a, b generating G with ord(a) odd and ord(b) a power of two (1 allowed).
inline std::pair<permutation, permutation> base_pair(const group_spec& g) {
  const std::size_t n = g.degree();
  if (!g.is_named()) throw precondition_error("base_pair needs a symmetric or alternating group");
  if ((g.is_symmetric() && n >= 4) || (g.is_alternating() && n >= 5)) {
    auto [f, h] = special_pair(g);
    return {h, f};
  }
  const permutation id(n);
  if (g.order() == 1) return {id, id};
  if (g.is_symmetric() && n == 2) return {id, make_cycle(2, {1, 2})};
  if (g.is_symmetric() && n == 3) return {make_cycle(3, {1, 2, 3}), make_cycle(3, {1, 2})};
  if (g.is_alternating() && n == 3) return {make_cycle(3, {1, 2, 3}), id};
  // A_4
  return {make_cycle(4, {1, 2, 3}), make_cycle(4, {1, 2}) * make_cycle(4, {3, 4})};
}

// alpha = (1; f), beta = (1; g), gamma = (.., a, ..; h1), delta = (.., b, ..; h2)
// with a at coordinate pos_a and b at pos_b (0-based). S = <f,g> must be
// transitive.
inline std::vector<wreath_perm> four_generators(const wreath_shape& shape, const permutation& a,
                                                const permutation& b, const permutation& f,
                                                const permutation& g, const permutation& h1,
                                                const permutation& h2, std::size_t pos_a,
                                                std::size_t pos_b) {
  const std::size_t n = shape.top_degree();
  const std::vector<permutation> top_pair{f, g};
  if (!is_transitive(top_pair, n)) {
    throw precondition_error("the top group must be transitive");
  }
  const permutation one(shape.base_degree());
  return {shape.single(0, one, f), shape.single(0, one, g), shape.single(pos_a, a, h1),
          shape.single(pos_b, b, h2)};
}

// True iff G wr S is cyclic: G trivial and S one of S_1, S_2, A_2, A_3, or G
// one of S_1, S_2, A_2, A_3 and S of degree one.
inline bool rank_one_classifier(const group_spec& g, const group_spec& s) {
  return (g.is_trivial() && s.is_cyclic()) || (g.is_cyclic() && s.degree() == 1);
}

struct generating_set {
  wreath_shape shape;
  std::vector<wreath_perm> elements;
  std::string provenance;
};

// One generator when G wr S is cyclic, otherwise two.
inline generating_set two_generators(const group_spec& g, const group_spec& s) {
  if (!g.is_named() || !s.is_named()) {
    throw precondition_error("two_generators needs symmetric or alternating groups");
  }
  const wreath_shape shape(g, s);
  const std::size_t m = g.degree();
  const std::size_t n = s.degree();
  const permutation one(m);
  const permutation id(n);

  if (rank_one_classifier(g, s)) {
    std::vector<permutation> coords(n, one);
    coords[0] = *g.cyclic_generator();
    return {shape, {shape.element(std::move(coords), *s.cyclic_generator())}, "rank-one"};
  }

  const auto [a, b] = base_pair(g);
  // b^-1 as the positive power b^(ord(b)-1).
  const permutation b_inv = power(b, order(b) - 1);
  auto tuple = [&](std::initializer_list<permutation> entries) {
    return std::vector<permutation>(entries);
  };

  if (n == 1) {
    return {shape, {shape.element({a}, id), shape.element({b}, id)}, "degree-one top"};
  }
  if (s.is_symmetric() && n == 2) {
    return {shape,
            {shape.element(tuple({a * b_inv, one}), id),
             shape.element(tuple({one, b}), make_cycle(2, {1, 2}))},
            "S_2 top"};
  }
  if (s.is_symmetric() && n == 3) {
    return {shape,
            {shape.element(tuple({a, b, one}), make_cycle(3, {2, 3})),
             shape.element(tuple({one, one, one}), make_cycle(3, {1, 2}))},
            "S_3 top"};
  }
  if (s.is_alternating() && n == 2) {
    return {shape, {shape.element(tuple({a, b}), id), shape.element(tuple({b, a}), id)},
            "A_2 top"};
  }
  if (s.is_alternating() && n == 3) {
    return {shape,
            {shape.element(tuple({a * b_inv, one, one}), id),
             shape.element(tuple({b, one, one}), make_cycle(3, {1, 2, 3}))},
            "A_3 top"};
  }
  if (s.is_alternating() && n == 4) {
    return {shape,
            {shape.element(tuple({a, one, one, b}), make_cycle(4, {1, 2, 3})),
             shape.element(tuple({one, one, one, one}), make_cycle(4, {2, 3, 4}))},
            "A_4 top"};
  }
  // S_n (n >= 4) or A_n (n >= 5): alpha = (1,...,1,a; f), beta = (b,1,...,1; g).
  const auto [f, h] = special_pair(s);
  return {shape, {shape.single(n - 1, a, f), shape.single(0, b, h)}, "fixed-point pair"};
}

}  // namespace wrgen

#endif
