#ifndef WRGEN_TABLE1_HPP
#define WRGEN_TABLE1_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "wrgen/cayley.hpp"
#include "wrgen/group_spec.hpp"
#include "wrgen/rank.hpp"
#include "wrgen/wreath.hpp"

namespace wrgen {

inline constexpr std::size_t default_upper_trials = 2000;

// Published values of d(G1 wr G2 wr G3). Rows are G1 wr G2 with G1, G2 in
// (A_2, A_3, S_2, S_3), G1 varying slowest; columns are G3 in
// (A_2, A_3, A_4, S_2, S_3, S_4).
inline constexpr std::array<std::array<unsigned, 6>, 16> published_d{{
    {1, 1, 2, 1, 2, 2},  // A2 wr A2
    {2, 2, 2, 2, 2, 2},  // A2 wr A3
    {2, 2, 2, 2, 2, 2},  // A2 wr S2
    {2, 2, 2, 2, 2, 2},  // A2 wr S3
    {4, 3, 3, 3, 2, 2},  // A3 wr A2
    {4, 3, 3, 3, 2, 2},  // A3 wr A3
    {2, 2, 2, 2, 2, 2},  // A3 wr S2
    {2, 2, 2, 2, 2, 2},  // A3 wr S3
    {4, 3, 2, 3, 3, 3},  // S2 wr A2
    {2, 2, 2, 2, 2, 2},  // S2 wr A3
    {4, 3, 2, 3, 3, 3},  // S2 wr S2
    {4, 3, 2, 3, 3, 3},  // S2 wr S3
    {4, 3, 2, 3, 3, 3},  // S3 wr A2
    {2, 2, 2, 2, 2, 2},  // S3 wr A3
    {4, 3, 2, 3, 3, 3},  // S3 wr S2
    {4, 3, 2, 3, 3, 3},  // S3 wr S3
}};

inline std::vector<group_spec> table_row_factors() {
  return {group_spec::alternating(2), group_spec::alternating(3), group_spec::symmetric(2),
          group_spec::symmetric(3)};
}

inline std::vector<group_spec> table_columns() {
  return {group_spec::alternating(2), group_spec::alternating(3), group_spec::alternating(4),
          group_spec::symmetric(2),   group_spec::symmetric(3),   group_spec::symmetric(4)};
}

// The three factors of cell (row, col).
inline std::vector<group_spec> table_cell_tower(std::size_t row, std::size_t col) {
  const auto rows = table_row_factors();
  return {rows[row / 4], rows[row % 4], table_columns()[col]};
}

struct rank_options {
  std::size_t max_exact_order = default_exact_order;
  std::size_t trials = default_upper_trials;
  std::uint64_t seed = 0;
  unsigned max_k = 8;
};

// d of an iterated wreath product: exact when the order is within
// max_exact_order or the group is trivial or elementary abelian, otherwise
// bounds. The lower bound is 2 for non-abelian groups, raised to 2r when the
// outermost factor is A_2 and the enumerable inner product has an elementary
// abelian quotient of rank r. The upper bound is the least k >= max(lower,
// hint) for which rank_upper finds a witness.
inline rank_result rank_tower(std::span<const group_spec> specs, const rank_options& opt,
                              unsigned hint = 0) {
  const tower t = tower_generators(specs);
  const bsgs group(t.generators, t.degree);
  const big_int order = group.order();
  if (order <= opt.max_exact_order || order == 1 ||
      detail::analyse_elementary_abelian(t.generators)) {
    return rank_exact(t.generators, opt.max_k, opt.max_exact_order);
  }

  rank_result out;
  out.cert = certificate::bounds_only;
  out.group_order = order;
  bool abelian = true;
  for (const auto& a : t.generators) {
    for (const auto& b : t.generators) abelian = abelian && a * b == b * a;
  }
  out.lower = abelian ? 1 : 2;

  const auto& outer = specs.back();
  if (specs.size() >= 2 && outer.is_alternating() && outer.degree() == 2) {
    const tower inner = tower_generators(specs.first(specs.size() - 1));
    if (inner.expected_order <= max_cayley_order) {
      const auto set = closure(inner.generators, max_cayley_order);
      const cayley_group table(set);
      out.lower = std::max(out.lower, 2 * elementary_abelian_quotient_rank(table));
    }
  }

  const auto ngens = static_cast<unsigned>(t.generators.size());
  for (unsigned k = std::max(out.lower, hint); k < ngens; ++k) {
    if (auto w = rank_upper(t.generators, k, opt.trials, opt.seed)) {
      out.upper = k;
      out.witness = std::move(*w);
      return out;
    }
  }
  out.upper = std::max(ngens, out.lower);
  out.witness = t.generators;
  return out;
}

struct table_cell {
  std::size_t row = 0;
  std::size_t col = 0;
  std::string row_label;
  std::string col_label;
  unsigned paper_value = 0;
  rank_result result;

  bool agrees() const {
    if (result.exact()) return result.upper == paper_value;
    return result.lower <= paper_value && paper_value <= result.upper;
  }
};

inline table_cell table1_cell(std::size_t row, std::size_t col, const rank_options& opt) {
  const auto specs = table_cell_tower(row, col);
  table_cell cell;
  cell.row = row;
  cell.col = col;
  cell.row_label = specs[0].to_string() + "×" + specs[1].to_string();
  cell.col_label = specs[2].to_string();
  cell.paper_value = published_d[row][col];
  rank_options cell_opt = opt;
  cell_opt.seed = opt.seed + row * 6 + col;
  cell.result = rank_tower(specs, cell_opt, cell.paper_value);
  return cell;
}

inline std::vector<table_cell> table1(const rank_options& opt = {}) {
  std::vector<table_cell> cells;
  for (std::size_t row = 0; row < published_d.size(); ++row) {
    for (std::size_t col = 0; col < published_d[row].size(); ++col) {
      cells.push_back(table1_cell(row, col, opt));
    }
  }
  return cells;
}

inline nlohmann::json computed_json(const rank_result& r) {
  if (r.exact()) return {{"exact", r.upper}};
  return {{"lower", r.lower}, {"upper", r.upper}};
}

inline nlohmann::json to_json(const table_cell& cell) {
  nlohmann::json witness = nlohmann::json::array();
  for (const auto& w : cell.result.witness) witness.push_back(format_cycles(w));
  return {{"row", cell.row_label},
          {"col", cell.col_label},
          {"order", cell.result.group_order.str()},
          {"paper_value", cell.paper_value},
          {"computed", computed_json(cell.result)},
          {"certificate", to_string(cell.result.cert)},
          {"witness", witness},
          {"agrees", cell.agrees()}};
}

inline nlohmann::json to_json(const std::vector<table_cell>& cells) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : cells) out.push_back(to_json(c));
  return out;
}

}  // namespace wrgen

#endif
