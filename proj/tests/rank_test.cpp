#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "wrgen/wrgen.hpp"

namespace {

using wrgen::certificate;
using wrgen::group_spec;
using wrgen::permutation;

permutation P(const char* text, std::size_t n) { return wrgen::parse_cycles(text, n); }

const group_spec A2 = group_spec::alternating(2);
const group_spec A3 = group_spec::alternating(3);
const group_spec A4 = group_spec::alternating(4);
const group_spec S2 = group_spec::symmetric(2);
const group_spec S3 = group_spec::symmetric(3);
const group_spec S4 = group_spec::symmetric(4);

void expect_witness_generates(const wrgen::rank_result& r) {
  ASSERT_EQ(r.witness.size(), r.upper);
  EXPECT_EQ(wrgen::bsgs_order(r.witness), r.group_order);
}

TEST(RankExact, Examples) {
  const auto c3_4 = wrgen::tower_generators({A3, A2, A2});
  const auto r1 = wrgen::rank_exact(c3_4.generators);
  EXPECT_EQ(r1.group_order, 81);
  EXPECT_EQ(r1.value(), 4u);
  expect_witness_generates(r1);

  const auto t2 = wrgen::tower_generators({A2, A3, S2});
  const auto r2 = wrgen::rank_exact(t2.generators);
  EXPECT_EQ(r2.group_order, 18);
  EXPECT_EQ(r2.value(), 2u);
  EXPECT_EQ(r2.cert, certificate::exact_exhaustive);
  expect_witness_generates(r2);

  const auto t3 = wrgen::tower_generators({A2, A2, A2});
  const auto r3 = wrgen::rank_exact(t3.generators);
  EXPECT_EQ(r3.group_order, 1);
  EXPECT_EQ(r3.value(), 1u);
  EXPECT_EQ(r3.cert, certificate::exact_cyclic);
}

TEST(RankExact, CyclicGroup) {
  const auto r = wrgen::rank_exact(std::vector<permutation>{P("(1,2,3)", 5), P("(4,5)", 5)});
  EXPECT_EQ(r.value(), 1u);
  EXPECT_EQ(r.cert, certificate::exact_cyclic);
  expect_witness_generates(r);
}

TEST(RankExact, BudgetAndBounds) {
  EXPECT_THROW(wrgen::rank_exact(group_spec::symmetric(8).generators(), 8, 5000),
               wrgen::budget_exceeded);
  // S_4 needs 2; with max_k = 1 only bounds remain.
  const auto r = wrgen::rank_exact(S4.generators(), 1);
  EXPECT_EQ(r.cert, certificate::bounds_only);
  EXPECT_EQ(r.lower, 2u);
  EXPECT_THROW((void)r.value(), wrgen::precondition_error);
}

TEST(RankExact, AgreesWithBruteForce) {
  const std::vector<std::vector<permutation>> groups{
      S3.generators(),
      S4.generators(),
      A4.generators(),
      {P("(1,2)", 6), P("(3,4)", 6), P("(5,6)", 6)},
      {P("(1,2)(3,4)", 4), P("(1,3)(2,4)", 4)},
      {P("(1,2,3,4)", 4), P("(1,3)", 4)},
      {P("(1,2)", 5), P("(3,4,5)", 5)},
      wrgen::tower_generators({S2, S2}).generators,
      wrgen::tower_generators({S2, A2, A2}).generators,
      wrgen::tower_generators({A3, A2}).generators,
  };
  for (const auto& gens : groups) {
    const auto r = wrgen::rank_exact(gens);
    ASSERT_TRUE(r.exact());
    EXPECT_EQ(r.value(), oracle::min_generators(gens));
    expect_witness_generates(r);
  }
}

TEST(ElementaryAbelian, Examples) {
  EXPECT_EQ(wrgen::elementary_abelian_rank(wrgen::tower_generators({S2, A2, A2, A2}).generators), 8u);
  EXPECT_EQ(wrgen::elementary_abelian_rank(wrgen::tower_generators({A3, A2, A2}).generators), 4u);
  EXPECT_FALSE(wrgen::elementary_abelian_rank(S3.generators()).has_value());
  // abelian but not elementary
  EXPECT_FALSE(wrgen::elementary_abelian_rank(std::vector<permutation>{P("(1,2,3,4)", 4)}));
  // exponent 6, abelian
  EXPECT_FALSE(wrgen::elementary_abelian_rank(
      std::vector<permutation>{P("(1,2)", 5), P("(3,4,5)", 5)}));
}

TEST(ElementaryAbelian, RedundantGenerators) {
  const std::vector<permutation> gens{P("(1,2)", 6), P("(3,4)", 6), P("(1,2)(3,4)", 6), P("(5,6)", 6),
                                      P("(1,2)(5,6)", 6)};
  EXPECT_EQ(wrgen::elementary_abelian_rank(gens), 3u);
  const std::vector<permutation> c3{P("(1,2,3)", 6), P("(1,3,2)(4,5,6)", 6), P("(4,6,5)", 6)};
  EXPECT_EQ(wrgen::elementary_abelian_rank(c3), 2u);
}

TEST(ElementaryAbelian, OrderIsPrimePower) {
  const std::vector<std::vector<permutation>> groups{
      wrgen::tower_generators({S2, A2, A2, A2}).generators,
      wrgen::tower_generators({A3, A2, A2}).generators,
      wrgen::tower_generators({A3, A2, A2, A2}).generators,
      {P("(1,2,3,4,5)", 10), P("(6,7,8,9,10)", 10)},
  };
  const unsigned primes[] = {2, 3, 3, 5};
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const auto r = wrgen::elementary_abelian_rank(groups[i]);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(wrgen::big_pow(primes[i], *r), wrgen::bsgs_order(groups[i]));
  }
}

TEST(ElementaryAbelian, AgreesWithExhaustiveSearch) {
  const std::vector<std::vector<permutation>> groups{
      wrgen::tower_generators({S2, A2}).generators,
      wrgen::tower_generators({S2, A2, A2}).generators,
      wrgen::tower_generators({S2, A2, A2, A2}).generators,
      wrgen::tower_generators({A3, A2}).generators,
      wrgen::tower_generators({A3, A2, A2}).generators,
      {P("(1,2,3,4,5)", 10), P("(6,7,8,9,10)", 10)},
  };
  for (const auto& gens : groups) {
    const auto set = wrgen::closure(gens);
    const wrgen::cayley_group table(set);
    const auto found = wrgen::detail::exhaustive_search(table, 9);
    ASSERT_TRUE(found.has_value());
    EXPECT_EQ(found->size(), *wrgen::elementary_abelian_rank(gens));
  }
}

TEST(QuotientRank, Examples) {
  const auto rank_of = [](const std::vector<permutation>& gens) {
    return wrgen::elementary_abelian_quotient_rank(wrgen::cayley_group(wrgen::closure(gens)));
  };
  EXPECT_EQ(rank_of(S3.generators()), 1u);
  EXPECT_EQ(rank_of(A4.generators()), 1u);
  EXPECT_EQ(rank_of(group_spec::alternating(5).generators()), 0u);
  EXPECT_EQ(rank_of(wrgen::tower_generators({S3, S3}).generators), 2u);
  EXPECT_EQ(rank_of(wrgen::tower_generators({A3, A3}).generators), 2u);
  EXPECT_EQ(rank_of(wrgen::tower_generators({S2, A2, A2}).generators), 4u);
}

TEST(Cayley, TableMatchesProducts) {
  const auto set = wrgen::closure(S4.generators());
  const wrgen::cayley_group table(set);
  ASSERT_EQ(table.order(), 24u);
  EXPECT_TRUE(set[table.identity()].is_identity());
  for (std::uint32_t i = 0; i < 24; ++i) {
    EXPECT_TRUE((set[i] * set[table.inverse(i)]).is_identity());
    for (std::uint32_t j = 0; j < 24; ++j) ASSERT_EQ(set[table.mul(i, j)], set[i] * set[j]);
  }
  EXPECT_EQ(table.conjugacy_classes().size(), 5u);
  EXPECT_EQ(table.derived_subgroup().size, 12u);
  EXPECT_FALSE(table.is_abelian());
}

TEST(RankUpper, TowerS3S3A2) {
  const auto tw = wrgen::tower_generators({S3, S3, A2});
  const auto w = wrgen::rank_upper(tw.generators, 4, 2000, 0);
  ASSERT_TRUE(w.has_value());
  ASSERT_EQ(w->size(), 4u);
  EXPECT_EQ(wrgen::bsgs_order(*w), wrgen::big_int(1296) * 1296);
}

TEST(RankUpper, FirstCandidateIsReturned) {
  const auto gens = group_spec::symmetric(7).generators();
  const std::vector<permutation> candidate{P("(1,2,3,4)", 7), P("(3,4,5,6,7)", 7)};
  const auto w = wrgen::rank_upper(gens, 2, 0, 99, candidate);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, candidate);
  // A candidate outside the group is ignored.
  const std::vector<permutation> outside{P("(1,2)", 7), P("(1,2,3,4,5,6,7)", 7)};
  EXPECT_FALSE(wrgen::rank_upper(group_spec::alternating(7).generators(), 2, 0, 1, outside));
}

TEST(RankUpper, ElementaryAbelianTooFewGenerators) {
  const auto tw = wrgen::tower_generators({S2, A2, A2, A2});
  EXPECT_FALSE(wrgen::rank_upper(tw.generators, 7, 500, 0).has_value());
  EXPECT_TRUE(wrgen::rank_upper(tw.generators, 8, 500, 0).has_value());
}

TEST(RankUpper, Deterministic) {
  const auto tw = wrgen::tower_generators({S3, A3, S3});
  const auto a = wrgen::rank_upper(tw.generators, 2, 200, 7);
  const auto b = wrgen::rank_upper(tw.generators, 2, 200, 7);
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(*a, *b);
}

TEST(FilterPairClaim, Examples) {
  EXPECT_TRUE(wrgen::check_filter_pair_claim(S2, S3));
  EXPECT_TRUE(wrgen::check_filter_pair_claim(A3, A4));
  EXPECT_THROW(wrgen::check_filter_pair_claim(S2, A3), wrgen::precondition_error);
  EXPECT_THROW(wrgen::check_filter_pair_claim(S3, S4, 1000), wrgen::budget_exceeded);
}

TEST(FilterPairClaim, TrivialBaseHoldsVacuously) {
  // no non-identity (a; id) exists
  EXPECT_TRUE(wrgen::check_filter_pair_claim(group_spec::symmetric(1), S3));
}

TEST(Table, CellExamples) {
  const wrgen::rank_options opt;
  // rows: A2 A3 S2 S3 with G1 slowest; cols: A2 A3 A4 S2 S3 S4
  const auto s3a3_a2 = wrgen::table1_cell(13, 0, opt);
  EXPECT_EQ(s3a3_a2.row_label, "S:3×A:3");
  EXPECT_EQ(s3a3_a2.col_label, "A:2");
  EXPECT_EQ(s3a3_a2.paper_value, 2u);
  EXPECT_EQ(s3a3_a2.result.upper, 2u);
  EXPECT_TRUE(s3a3_a2.agrees());

  const auto s3s3_a2 = wrgen::table1_cell(15, 0, opt);
  EXPECT_EQ(s3s3_a2.paper_value, 4u);
  EXPECT_EQ(s3s3_a2.result.upper, 4u);
  EXPECT_EQ(s3s3_a2.result.lower, 4u);
  expect_witness_generates(s3s3_a2.result);

  const auto a2a2_a4 = wrgen::table1_cell(0, 2, opt);
  EXPECT_TRUE(a2a2_a4.result.exact());
  EXPECT_EQ(a2a2_a4.result.value(), 2u);
}

TEST(Table, JsonSchema) {
  const auto cell = wrgen::table1_cell(15, 0, wrgen::rank_options{});
  const auto j = wrgen::to_json(cell);
  EXPECT_EQ(j.at("row"), "S:3×S:3");
  EXPECT_EQ(j.at("col"), "A:2");
  EXPECT_EQ(j.at("order"), "1679616");
  EXPECT_EQ(j.at("paper_value"), 4);
  EXPECT_EQ(j.at("computed").at("lower"), 4);
  EXPECT_EQ(j.at("computed").at("upper"), 4);
  EXPECT_EQ(j.at("certificate"), "bounds-only");
  EXPECT_EQ(j.at("witness").size(), 4u);
  EXPECT_EQ(j.at("agrees"), true);

  const auto exact = wrgen::to_json(wrgen::table1_cell(0, 2, wrgen::rank_options{}));
  EXPECT_EQ(exact.at("computed").at("exact"), 2);
  EXPECT_FALSE(exact.at("computed").contains("lower"));
}

TEST(Table, Deterministic) {
  wrgen::rank_options opt;
  opt.seed = 3;
  EXPECT_EQ(wrgen::to_json(wrgen::table1(opt)), wrgen::to_json(wrgen::table1(opt)));
}

TEST(Table, PublishedValuesShape) {
  EXPECT_EQ(wrgen::published_d.size(), 16u);
  EXPECT_EQ(wrgen::published_d[0][0], 1u);
  EXPECT_EQ(wrgen::published_d[4][0], 4u);   // A3 wr A2, col A2
  EXPECT_EQ(wrgen::published_d[1][3], 2u);   // A2 wr A3, col S2
  EXPECT_EQ(wrgen::published_d[15][0], 4u);  // S3 wr S3, col A2
  EXPECT_EQ(wrgen::published_d[13][0], 2u);  // S3 wr A3, col A2
}

// Randomised invariants.

TEST(RankProperties, ConjugationInvariance) {
  std::mt19937_64 rng(31337);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 3 + t % 8;
    std::vector<permutation> xs;
    for (int k = 0; k < 1 + t % 3; ++k) xs.push_back(oracle::random_permutation(n, rng));
    const auto g = oracle::random_permutation(n, rng);
    std::vector<permutation> ys;
    for (const auto& x : xs) ys.push_back(wrgen::conjugate(x, g));
    ASSERT_EQ(wrgen::bsgs_order(xs), wrgen::bsgs_order(ys));
  }
}

TEST(RankProperties, ExactValueNeverExceedsTowerGenerators) {
  for (std::size_t row = 0; row < 16; ++row) {
    for (std::size_t col = 0; col < 6; ++col) {
      const auto specs = wrgen::table_cell_tower(row, col);
      const auto tw = wrgen::tower_generators(specs);
      if (tw.expected_order > wrgen::default_exact_order) continue;
      const auto r = wrgen::rank_exact(tw.generators);
      ASSERT_TRUE(r.exact());
      EXPECT_LE(r.value(), std::max<std::size_t>(tw.generators.size(), 1));
      expect_witness_generates(r);
      // independent path: closure of the witness
      EXPECT_EQ(wrgen::big_int(wrgen::closure(r.witness).size()), r.group_order);
    }
  }
}

}  // namespace
