#ifndef WRGEN_RANK_HPP
#define WRGEN_RANK_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "wrgen/big_int.hpp"
#include "wrgen/bsgs.hpp"
#include "wrgen/cayley.hpp"
#include "wrgen/element_set.hpp"
#include "wrgen/error.hpp"
#include "wrgen/group_spec.hpp"
#include "wrgen/perm.hpp"
#include "wrgen/wreath.hpp"

namespace wrgen {

inline constexpr std::size_t default_exact_order = 5000;

enum class certificate { exact_exhaustive, exact_cyclic, exact_elementary_abelian, bounds_only };

inline std::string to_string(certificate c) {
  switch (c) {
    case certificate::exact_exhaustive: return "exact-exhaustive";
    case certificate::exact_cyclic: return "exact-cyclic";
    case certificate::exact_elementary_abelian: return "exact-elementary-abelian";
    case certificate::bounds_only: return "bounds-only";
  }
  return "?";
}

// Minimal generating number d(H), either exact or as an interval. The
// witness always generates H and has `upper` elements.
struct rank_result {
  certificate cert = certificate::bounds_only;
  unsigned lower = 1;
  unsigned upper = 1;
  std::vector<permutation> witness;
  big_int group_order = 1;

  bool exact() const noexcept { return cert != certificate::bounds_only; }
  unsigned value() const {
    if (!exact()) throw precondition_error("rank is only bounded, not exact");
    return upper;
  }
};

namespace detail {

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

inline std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1u) result = result * base % p;
    base = base * base % p;
  }
  return result;
}

struct ea_analysis {
  std::uint64_t prime;
  std::vector<std::size_t> basis;  // indices into the non-identity generators
  std::vector<permutation> nontrivial;
};

// Coordinatises an elementary abelian permutation group over F_p and
// row-reduces the generator vectors. Each orbit carries a regular action of
// an elementary abelian quotient, so a point x^g records the coordinates of
// g restricted to that orbit.
inline std::optional<ea_analysis> analyse_elementary_abelian(std::span<const permutation> gens) {
  ea_analysis out{};
  for (const auto& g : gens) {
    if (!g.is_identity()) out.nontrivial.push_back(g);
  }
  if (out.nontrivial.empty()) return std::nullopt;
  const auto& gs = out.nontrivial;
  const std::size_t degree = gs.front().degree();
  for (std::size_t i = 0; i < gs.size(); ++i) {
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      if (gs[i] * gs[j] != gs[j] * gs[i]) return std::nullopt;
    }
  }
  const std::uint64_t p = order(gs.front());
  if (!is_prime(p)) return std::nullopt;
  for (const auto& g : gs) {
    if (order(g) != p) return std::nullopt;
  }
  out.prime = p;

  std::vector<std::vector<std::uint64_t>> rows(gs.size());
  std::vector<bool> covered(degree, false);
  for (point x = 0; x < degree; ++x) {
    if (covered[x]) continue;
    const auto orb = orbit(gs, degree, x);
    for (point q : orb) covered[q] = true;
    if (orb.size() == 1) continue;

    std::map<point, std::vector<std::uint64_t>> reached{{x, {}}};
    std::size_t dims = 0;
    for (const auto& h : gs) {
      if (reached.count(h[x])) continue;
      std::vector<std::pair<point, std::vector<std::uint64_t>>> frontier(reached.begin(),
                                                                          reached.end());
      for (auto& [pt, vec] : frontier) {
        vec.resize(dims + 1, 0);
        point q = pt;
        reached[pt] = vec;
        for (std::uint64_t e = 1; e < p; ++e) {
          q = h[q];
          auto v = vec;
          v[dims] = e;
          if (!reached.emplace(q, std::move(v)).second) return std::nullopt;
        }
      }
      ++dims;
    }
    if (reached.size() != orb.size()) return std::nullopt;
    for (std::size_t g = 0; g < gs.size(); ++g) {
      auto v = reached.at(gs[g][x]);
      v.resize(dims, 0);
      rows[g].insert(rows[g].end(), v.begin(), v.end());
    }
  }

  // Incremental elimination: a generator joins the basis when its row is
  // independent of the rows already kept.
  std::vector<std::vector<std::uint64_t>> echelon;
  std::vector<std::size_t> pivots;
  for (std::size_t g = 0; g < rows.size(); ++g) {
    auto row = rows[g];
    for (std::size_t e = 0; e < echelon.size(); ++e) {
      const std::uint64_t c = row[pivots[e]];
      if (c == 0) continue;
      for (std::size_t k = 0; k < row.size(); ++k) {
        row[k] = (row[k] + (p - c) * echelon[e][k]) % p;
      }
    }
    const auto it = std::find_if(row.begin(), row.end(), [](auto v) { return v != 0; });
    if (it == row.end()) continue;
    const auto pivot = static_cast<std::size_t>(it - row.begin());
    const std::uint64_t inv = mod_inverse(*it, p);
    for (auto& v : row) v = v * inv % p;
    echelon.push_back(std::move(row));
    pivots.push_back(pivot);
    out.basis.push_back(g);
  }
  return out;
}

}  // namespace detail

// If <gens> is elementary abelian of order p^r (r >= 1), returns r.
inline std::optional<unsigned> elementary_abelian_rank(std::span<const permutation> gens) {
  auto ea = detail::analyse_elementary_abelian(gens);
  if (!ea) return std::nullopt;
  return static_cast<unsigned>(ea->basis.size());
}

// Largest r such that the enumerated group has an elementary abelian
// quotient of order p^r for some prime p (0 for perfect groups).
inline unsigned elementary_abelian_quotient_rank(const cayley_group& group) {
  using index = cayley_group::index;
  const subgroup derived = group.derived_subgroup();
  std::size_t index_ab = group.order() / derived.size;
  unsigned best = 0;
  for (std::uint64_t p = 2; index_ab > 1; ++p) {
    if (index_ab % p != 0) continue;
    while (index_ab % p == 0) index_ab /= p;
    subgroup m = derived;
    for (index x = 0; x < group.order(); ++x) {
      index y = group.identity();
      for (std::uint64_t e = 0; e < p; ++e) y = group.mul(y, x);
      if (!m.contains(y)) m = group.extend(m, y);
    }
    unsigned r = 0;
    for (std::size_t q = group.order() / m.size; q > 1; q /= p) ++r;
    best = std::max(best, r);
  }
  return best;
}

namespace detail {

// Smallest k <= max_k such that some k-tuple generates the enumerated group.
// Level j holds subgroups generated by j-tuples whose first entry is a
// conjugacy-class representative. Extending H by x is skipped when x already
// lies in some <H, x'> found earlier, since then <H, x> <= <H, x'>.
inline std::optional<std::vector<cayley_group::index>> exhaustive_search(const cayley_group& group,
                                                                         unsigned max_k) {
  using index = cayley_group::index;
  const std::size_t n = group.order();
  std::vector<subgroup> level;
  {
    std::unordered_set<subgroup, subgroup_hash> seen;
    for (const auto& cls : group.conjugacy_classes()) {
      const index rep = cls.front();
      subgroup h = group.generate(std::span<const index>(&rep, 1));
      if (h.size == n) return h.generators;
      if (seen.insert(h).second) level.push_back(std::move(h));
    }
  }
  for (unsigned k = 2; k <= max_k; ++k) {
    std::vector<subgroup> next;
    std::unordered_set<subgroup, subgroup_hash> seen;
    for (const auto& h : level) {
      std::vector<std::uint64_t> covered = h.bits;
      for (index x = 0; x < n; ++x) {
        if ((covered[x >> 6] >> (x & 63)) & 1u) continue;
        subgroup ext = group.extend(h, x);
        if (ext.size == n) return ext.generators;
        for (std::size_t w = 0; w < covered.size(); ++w) covered[w] |= ext.bits[w];
        if (seen.insert(ext).second) next.push_back(std::move(ext));
      }
    }
    level = std::move(next);
  }
  return std::nullopt;
}

}  // namespace detail

// Exact d(<gens>) for groups of order at most `budget` (any order for
// trivial and elementary abelian groups). d(trivial) = 1 by convention.
inline rank_result rank_exact(std::span<const permutation> gens, unsigned max_k = 8,
                              std::size_t budget = default_exact_order) {
  if (gens.empty()) throw precondition_error("rank_exact needs generators");
  rank_result out;
  const bsgs group(gens);
  out.group_order = group.order();
  const std::size_t degree = gens.front().degree();

  if (out.group_order == 1) {
    out.cert = certificate::exact_cyclic;
    out.lower = out.upper = 1;
    out.witness = {permutation(degree)};
    return out;
  }
  if (auto ea = detail::analyse_elementary_abelian(gens)) {
    out.cert = certificate::exact_elementary_abelian;
    out.lower = out.upper = static_cast<unsigned>(ea->basis.size());
    for (auto i : ea->basis) out.witness.push_back(ea->nontrivial[i]);
    return out;
  }
  if (out.group_order > budget) throw budget_exceeded(budget);

  const auto set = closure(gens, budget);
  const cayley_group table(set);
  for (cayley_group::index i = 0; i < table.order(); ++i) {
    if (table.element_order(i) == table.order()) {
      out.cert = certificate::exact_cyclic;
      out.lower = out.upper = 1;
      out.witness = {set[i]};
      return out;
    }
  }
  if (auto found = detail::exhaustive_search(table, max_k)) {
    out.cert = certificate::exact_exhaustive;
    out.lower = out.upper = static_cast<unsigned>(found->size());
    for (auto i : *found) out.witness.push_back(set[i]);
    return out;
  }
  out.cert = certificate::bounds_only;
  out.lower = max_k + 1;
  out.upper = static_cast<unsigned>(std::max<std::size_t>(gens.size(), max_k + 1));
  out.witness.assign(gens.begin(), gens.end());
  return out;
}

// A random product of the generators, of length between 2 and 3 times the
// degree.
inline permutation random_element(std::span<const permutation> gens, std::mt19937_64& rng) {
  const std::size_t degree = gens.front().degree();
  std::uniform_int_distribution<std::size_t> length(2 * degree, 3 * degree);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  permutation out(degree);
  for (std::size_t len = length(rng); len > 0; --len) out = out * gens[pick(rng)];
  return out;
}

// Searches for a target_k-tuple generating <gens>. A supplied candidate is
// tried first; it must lie in the group. Deterministic for a given seed.
inline std::optional<std::vector<permutation>> rank_upper(
    std::span<const permutation> gens, unsigned target_k, std::size_t trials, std::uint64_t seed,
    std::span<const permutation> first_candidate = {}) {
  if (gens.empty()) throw precondition_error("rank_upper needs generators");
  if (target_k == 0) return std::nullopt;
  const bsgs group(gens);
  const big_int target = group.order();
  const std::size_t degree = gens.front().degree();
  if (target == 1) return std::vector<permutation>(target_k, permutation(degree));

  if (first_candidate.size() == target_k &&
      std::all_of(first_candidate.begin(), first_candidate.end(),
                  [&](const permutation& c) { return group.contains(c); }) &&
      bsgs(first_candidate, degree).order() == target) {
    return std::vector<permutation>(first_candidate.begin(), first_candidate.end());
  }

  std::mt19937_64 rng(seed);
  std::vector<permutation> candidate;
  for (std::size_t t = 0; t < trials; ++t) {
    candidate.clear();
    for (unsigned i = 0; i < target_k; ++i) candidate.push_back(random_element(gens, rng));
    if (bsgs(candidate, degree).order() == target) return candidate;
  }
  return std::nullopt;
}

// Exhaustively checks that no non-identity (a; id) lies in a two-element
// generating set of G wr S. S must not be cyclic.
inline bool check_filter_pair_claim(const group_spec& g, const group_spec& s,
                                    std::size_t budget = 100'000) {
  if (!s.is_named() || s.is_cyclic()) {
    throw precondition_error("the claim needs a non-cyclic top group, got " + s.to_string());
  }
  const wreath_shape shape(g, s);
  if (shape.order() > budget) throw budget_exceeded(budget);
  const auto gens = shape.generators();
  const auto set = closure(gens, budget);
  const cayley_group table(set, budget);
  using index = cayley_group::index;
  const std::size_t n = table.order();
  for (index x = 0; x < n; ++x) {
    if (x == table.identity() || !set[x].top().is_identity()) continue;
    std::vector<std::uint64_t> covered = table.empty_subgroup().bits;
    for (index y = 0; y < n; ++y) {
      if ((covered[y >> 6] >> (y & 63)) & 1u) continue;
      const index pair[2] = {x, y};
      const subgroup h = table.generate(pair);
      if (h.size == n) return false;
      for (std::size_t w = 0; w < covered.size(); ++w) covered[w] |= h.bits[w];
    }
  }
  return true;
}

}  // namespace wrgen

#endif
