#ifndef WRGEN_TOOLS_CLI_HPP
#define WRGEN_TOOLS_CLI_HPP

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wrgen/wrgen.hpp"

namespace wrgen::cli {

enum exit_code : int { ok = 0, mismatch = 1, usage = 2 };

namespace detail {

inline std::vector<group_spec> parse_tower(const std::string& text) {
  std::vector<group_spec> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(group_spec::parse(item));
  if (out.empty()) throw parse_error("empty tower", 0);
  return out;
}

inline nlohmann::json witness_json(const std::vector<permutation>& w) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : w) out.push_back(format_cycles(p));
  return out;
}

inline std::string describe(const rank_result& r) {
  if (r.exact()) return "d = " + std::to_string(r.upper) + " (" + to_string(r.cert) + ")";
  return "d in [" + std::to_string(r.lower) + ", " + std::to_string(r.upper) + "] (" +
         to_string(r.cert) + ")";
}

inline void print_table(const std::vector<table_cell>& cells, std::ostream& out) {
  out << std::left << std::setw(12) << "G1 wr G2";
  for (const auto& c : table_columns()) out << std::setw(10) << c.to_string();
  out << '\n';
  for (std::size_t row = 0; row < published_d.size(); ++row) {
    const auto specs = table_cell_tower(row, 0);
    out << std::setw(12) << (specs[0].to_string() + " " + specs[1].to_string());
    for (std::size_t col = 0; col < 6; ++col) {
      const auto& cell = cells[row * 6 + col];
      std::string text = cell.result.exact()
                             ? std::to_string(cell.result.upper)
                             : std::to_string(cell.result.lower) + ".." +
                                   std::to_string(cell.result.upper);
      if (!cell.agrees()) text += "!";
      out << std::setw(10) << text;
    }
    out << '\n';
  }
}

}  // namespace detail

// Runs one command line. Reports go to `out`, diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wreath products of symmetric and alternating groups"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit JSON reports");

  std::string lhs, rhs;
  std::size_t degree = 0;
  auto* mul = app.add_subcommand("mul", "Compose two permutations left to right");
  mul->add_option("lhs", lhs, "First permutation, cycle notation")->required();
  mul->add_option("rhs", rhs, "Second permutation, cycle notation")->required();
  mul->add_option("--degree", degree, "Permutation degree")->required()->check(CLI::PositiveNumber);
  mul->add_flag("--json", json);

  std::string case_id;
  std::size_t lemma_n = 0;
  auto* verify = app.add_subcommand("verify-lemma", "Check the order generated by a classic set");
  verify->add_option("--case", case_id, "Case id, e.g. L2.5-1")->required();
  verify->add_option("--n", lemma_n, "Degree")->required();
  verify->add_flag("--json", json);

  std::string base_text, top_text;
  auto* gens = app.add_subcommand("gens", "Generating set for G wr S");
  gens->add_option("--base", base_text, "Base group, S:m or A:m")->required();
  gens->add_option("--top", top_text, "Top group, S:n or A:n")->required();
  gens->add_flag("--json", json);

  auto* ord = app.add_subcommand("order", "Order of the constructed generating set vs |G|^n|S|");
  ord->add_option("--base", base_text, "Base group, S:m or A:m")->required();
  ord->add_option("--top", top_text, "Top group, S:n or A:n")->required();
  ord->add_flag("--json", json);

  std::string tower_text;
  rank_options opt;
  auto* rank = app.add_subcommand("rank", "Minimal generating number of an iterated product");
  rank->add_option("--tower", tower_text, "Comma-separated factors, innermost first")->required();
  rank->add_option("--exact-order", opt.max_exact_order, "Largest order searched exhaustively");
  rank->add_option("--seed", opt.seed, "Random seed (default 0)");
  rank->add_option("--trials", opt.trials, "Random trials per upper-bound attempt");
  rank->add_flag("--json", json);

  std::string out_path;
  auto* table = app.add_subcommand("table1", "Reproduce the iterated wreath product table");
  table->add_option("--exact-order", opt.max_exact_order, "Largest order searched exhaustively");
  table->add_option("--seed", opt.seed, "Random seed (default 0)");
  table->add_option("--trials", opt.trials, "Random trials per upper-bound attempt");
  table->add_option("--out", out_path, "Write the JSON report to this file");
  table->add_flag("--json", json);

  std::size_t budget = 100'000;
  auto* footnote = app.add_subcommand(
      "footnote", "Check that no (a; id) lies in a two-element generating set");
  footnote->add_option("--base", base_text, "Base group, S:m or A:m")->required();
  footnote->add_option("--top", top_text, "Top group, S:n or A:n")->required();
  footnote->add_option("--budget", budget, "Largest group order enumerated");
  footnote->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }

  try {
    if (*mul) {
      const auto f = parse_cycles(lhs, degree);
      const auto g = parse_cycles(rhs, degree);
      const std::string result = format_cycles(compose(f, g));
      if (json) {
        out << nlohmann::json{{"result", result}}.dump() << '\n';
      } else {
        out << result << '\n';
      }
      return ok;
    }

    if (*verify) {
      const lemma_case c = parse_lemma_case(case_id);
      classic_set set;
      try {
        set = classic_generators(c, lemma_n);
      } catch (const excluded_degree& e) {
        err << "error: " << e.what();
        const auto raw = raw_generators(c, lemma_n);
        err << " (the excluded set generates a group of order " << bsgs_order(raw) << ")\n";
        return usage;
      }
      const big_int got = bsgs_order(set.generators);
      const big_int want = set.expected.order();
      const bool match = got == want;
      if (json) {
        out << nlohmann::json{{"case", case_id},
                              {"n", lemma_n},
                              {"order", got.str()},
                              {"expected", set.expected.to_string()},
                              {"expected_order", want.str()},
                              {"match", match}}
                   .dump()
            << '\n';
      } else {
        out << case_id << " n=" << lemma_n << ": order " << got << ", expected "
            << set.expected.to_string() << " (" << want << ") " << (match ? "MATCH" : "MISMATCH")
            << '\n';
      }
      return match ? ok : mismatch;
    }

    if (*gens) {
      const auto g = group_spec::parse(base_text);
      const auto s = group_spec::parse(top_text);
      const auto set = two_generators(g, s);
      if (json) {
        nlohmann::json elems = nlohmann::json::array();
        for (const auto& x : set.elements) elems.push_back(format_wreath(x));
        out << nlohmann::json{{"base", g.to_string()},
                              {"top", s.to_string()},
                              {"provenance", set.provenance},
                              {"elements", elems}}
                   .dump()
            << '\n';
      } else {
        out << g.to_string() << " wr " << s.to_string() << " (" << set.provenance << ")\n";
        const char* names[] = {"alpha", "beta"};
        for (std::size_t i = 0; i < set.elements.size(); ++i) {
          out << names[i] << " = " << format_wreath(set.elements[i]) << '\n';
        }
      }
      return ok;
    }

    if (*ord) {
      const auto g = group_spec::parse(base_text);
      const auto s = group_spec::parse(top_text);
      const auto set = two_generators(g, s);
      std::vector<permutation> embedded;
      for (const auto& x : set.elements) embedded.push_back(embed(x));
      const bsgs group(embedded);
      const big_int got = group.order();
      const big_int want = set.shape.order();
      const bool match = got == want;
      if (json) {
        out << nlohmann::json{{"base", g.to_string()},
                              {"top", s.to_string()},
                              {"computed", got.str()},
                              {"expected", want.str()},
                              {"match", match},
                              {"bsgs", to_json(group)}}
                   .dump()
            << '\n';
      } else {
        out << got << " / " << want << ' ' << (match ? "MATCH" : "MISMATCH") << '\n';
      }
      return match ? ok : mismatch;
    }

    if (*rank) {
      const auto specs = detail::parse_tower(tower_text);
      const auto r = rank_tower(specs, opt);
      if (json) {
        out << nlohmann::json{{"tower", tower_text},
                              {"order", r.group_order.str()},
                              {"computed", computed_json(r)},
                              {"certificate", to_string(r.cert)},
                              {"witness", detail::witness_json(r.witness)}}
                   .dump()
            << '\n';
      } else {
        out << tower_text << ": order " << r.group_order << ", " << detail::describe(r) << '\n';
        for (const auto& w : r.witness) out << "  " << format_cycles(w) << '\n';
      }
      return ok;
    }

    if (*table) {
      const auto cells = table1(opt);
      const auto report = to_json(cells);
      if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) {
          err << "error: cannot write " << out_path << '\n';
          return usage;
        }
        file << report.dump(2) << '\n';
      }
      bool all_agree = true;
      for (const auto& c : cells) all_agree = all_agree && c.agrees();
      if (json) {
        out << report.dump() << '\n';
      } else {
        detail::print_table(cells, out);
        out << (all_agree ? "all cells agree" : "some cells disagree (marked !)") << '\n';
      }
      return all_agree ? ok : mismatch;
    }

    if (*footnote) {
      const auto g = group_spec::parse(base_text);
      const auto s = group_spec::parse(top_text);
      const bool holds = check_filter_pair_claim(g, s, budget);
      if (json) {
        out << nlohmann::json{{"base", g.to_string()}, {"top", s.to_string()}, {"holds", holds}}
                   .dump()
            << '\n';
      } else {
        out << g.to_string() << " wr " << s.to_string() << ": " << (holds ? "holds" : "fails")
            << '\n';
      }
      return holds ? ok : mismatch;
    }
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }
  return usage;
}

}  // namespace wrgen::cli

#endif
