#ifndef WRGEN_BSGS_HPP
#define WRGEN_BSGS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wrgen/big_int.hpp"
#include "wrgen/error.hpp"
#include "wrgen/perm.hpp"

namespace wrgen {

// Orbit of `start` under the group generated by `generators`, in BFS order.
inline std::vector<point> orbit(std::span<const permutation> generators,
                                std::size_t degree, point start) {
  std::vector<bool> seen(degree, false);
  std::vector<point> out{start};
  seen[start] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : generators) {
      const point q = g[out[i]];
      if (!seen[q]) {
        seen[q] = true;
        out.push_back(q);
      }
    }
  }
  return out;
}

inline bool is_transitive(std::span<const permutation> generators, std::size_t degree) {
  for (const auto& g : generators) {
    if (g.degree() != degree) throw degree_mismatch(g.degree(), degree);
  }
  return orbit(generators, degree, 0).size() == degree;
}

// Base and strong generating set built by the deterministic Schreier-Sims
// algorithm. Base points are chosen as the least point moved by the element
// that forced the extension.
class bsgs {
 public:
  bsgs(std::span<const permutation> generators, std::size_t degree) : degree_(degree) {
    if (degree == 0) throw precondition_error("degree must be positive");
    for (const auto& g : generators) {
      if (g.degree() != degree) throw degree_mismatch(g.degree(), degree);
      if (g.is_identity()) continue;
      if (std::find(strong_.begin(), strong_.end(), g) != strong_.end()) continue;
      strong_.push_back(g);
    }
    build();
  }

  explicit bsgs(std::span<const permutation> generators)
      : bsgs(generators, require_degree(generators)) {}

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<point>& base() const noexcept { return base_; }
  const std::vector<permutation>& strong_generators() const noexcept { return strong_; }

  std::size_t levels() const noexcept { return levels_.size(); }

  // Orbit of base point `level` under the pointwise stabiliser of the
  // earlier base points.
  const std::vector<point>& basic_orbit(std::size_t level) const {
    return levels_.at(level).orbit;
  }

  // Coset representative mapping base()[level] to p, if p is in the orbit.
  const permutation* representative(std::size_t level, point p) const {
    const auto& l = levels_.at(level);
    const auto slot = l.slot[p];
    return slot < 0 ? nullptr : &l.reps[static_cast<std::size_t>(slot)];
  }

  big_int order() const {
    big_int out = 1;
    for (const auto& l : levels_) out *= l.orbit.size();
    return out;
  }

  bool contains(const permutation& f) const {
    if (f.degree() != degree_) throw degree_mismatch(f.degree(), degree_);
    return sift(f, 0).first.is_identity();
  }

  // Strips f through the levels starting at `from`. Returns the residue and
  // the level at which stripping stopped (levels() when it passed them all).
  std::pair<permutation, std::size_t> sift(permutation f, std::size_t from) const {
    for (std::size_t l = from; l < levels_.size(); ++l) {
      const auto& lv = levels_[l];
      const point b = f[base_[l]];
      const auto slot = lv.slot[b];
      if (slot < 0) return {std::move(f), l};
      f = f * lv.inv_reps[static_cast<std::size_t>(slot)];
    }
    return {std::move(f), levels_.size()};
  }

 private:
  struct level {
    std::vector<std::size_t> gens;  // indices into strong_
    std::vector<point> orbit;
    std::vector<std::int32_t> slot;  // point -> index in orbit, or -1
    std::vector<permutation> reps;
    std::vector<permutation> inv_reps;
  };

  static std::size_t require_degree(std::span<const permutation> generators) {
    if (generators.empty()) throw precondition_error("generator list is empty");
    return generators.front().degree();
  }

  static point first_moved(const permutation& f) {
    for (point i = 0; i < f.degree(); ++i) {
      if (f[i] != i) return i;
    }
    return 0;
  }

  bool fixes_prefix(const permutation& f, std::size_t count) const {
    for (std::size_t i = 0; i < count; ++i) {
      if (f[base_[i]] != base_[i]) return false;
    }
    return true;
  }

  void rebuild_level(std::size_t l) {
    auto& lv = levels_[l];
    lv.gens.clear();
    for (std::size_t s = 0; s < strong_.size(); ++s) {
      if (fixes_prefix(strong_[s], l)) lv.gens.push_back(s);
    }
    lv.orbit.assign(1, base_[l]);
    lv.slot.assign(degree_, -1);
    lv.slot[base_[l]] = 0;
    lv.reps.assign(1, permutation(degree_));
    lv.inv_reps.assign(1, permutation(degree_));
    for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
      for (std::size_t s : lv.gens) {
        const point q = strong_[s][lv.orbit[i]];
        if (lv.slot[q] >= 0) continue;
        lv.slot[q] = static_cast<std::int32_t>(lv.orbit.size());
        lv.orbit.push_back(q);
        lv.reps.push_back(lv.reps[i] * strong_[s]);
        lv.inv_reps.push_back(inverse(lv.reps.back()));
      }
    }
  }

  void add_base_point(point p) {
    base_.push_back(p);
    levels_.emplace_back();
  }

  void build() {
    for (const auto& s : strong_) {
      if (fixes_prefix(s, base_.size())) add_base_point(first_moved(s));
    }
    for (std::size_t l = 0; l < levels_.size(); ++l) rebuild_level(l);

    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
    while (i >= 0) {
      bool restarted = false;
      const auto li = static_cast<std::size_t>(i);
      // Schreier generators u_p * s * u_{p s}^-1 of the stabiliser.
      for (std::size_t t = 0; t < levels_[li].orbit.size() && !restarted; ++t) {
        for (std::size_t gi = 0; gi < levels_[li].gens.size(); ++gi) {
          const auto& lv = levels_[li];
          const auto& s = strong_[lv.gens[gi]];
          const point q = s[lv.orbit[t]];
          permutation h = lv.reps[t] * s * lv.inv_reps[static_cast<std::size_t>(lv.slot[q])];
          if (h.is_identity()) continue;
          auto [residue, stop] = sift(std::move(h), li + 1);
          if (residue.is_identity()) continue;
          if (stop == levels_.size()) add_base_point(first_moved(residue));
          strong_.push_back(std::move(residue));
          for (std::size_t l = li + 1; l <= stop; ++l) rebuild_level(l);
          i = static_cast<std::ptrdiff_t>(stop);
          restarted = true;
          break;
        }
      }
      if (!restarted) --i;
    }
  }

  std::size_t degree_;
  std::vector<point> base_;
  std::vector<permutation> strong_;
  std::vector<level> levels_;
};

inline big_int bsgs_order(std::span<const permutation> generators) {
  return bsgs(generators).order();
}

inline nlohmann::json to_json(const bsgs& group) {
  nlohmann::json base = nlohmann::json::array();
  for (point b : group.base()) base.push_back(b + 1);
  nlohmann::json strong = nlohmann::json::array();
  for (const auto& s : group.strong_generators()) strong.push_back(format_cycles(s));
  return {{"degree", group.degree()}, {"base", base}, {"strong_generators", strong}};
}

}  // namespace wrgen

#endif
