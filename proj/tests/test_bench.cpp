#include <sstream>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "stardisc/bench.hpp"
#include "stardisc/serialize.hpp"

namespace stardisc {
namespace {

GeneratorSpec tmpl(GeneratorKind kind) {
  GeneratorSpec s;
  s.kind = kind;
  return s;
}

TEST(Bench, ReferenceCurves) {
  EXPECT_EQ(upper_reference(kAistleitnerConstant, 2, 0.1), 2000.0);
  EXPECT_EQ(upper_reference(kGnewuchPasingWeissConstant, 2, 0.5), 2.4968 * 8);
}

TEST(Bench, GridSweepPicksSmallestQualifyingN) {
  const std::vector<GeneratorSpec> gens{tmpl(GeneratorKind::grid)};
  const std::vector<Index> ns{1, 4, 16};
  const auto row = bench_inverse_discrepancy(2, 0.25, gens, ns);

  std::optional<Index> expected;
  for (Index n : ns) {
    GeneratorSpec s = gens[0];
    s.n = n;
    s.dim = 2;
    if (oracle::naive_star_discrepancy(oracle::rows(generate(s))).value <= 0.25) {
      expected = n;
      break;
    }
  }
  ASSERT_TRUE(expected.has_value());
  EXPECT_EQ(row.best_n_found, expected);
  EXPECT_EQ(row.generator_of_best, "grid");
  EXPECT_TRUE(row.certified);
  EXPECT_EQ(row.lower_bound_paper, 0);  // a_max = floor(1/5) = 0
  EXPECT_GE(*row.best_n_found, row.lower_bound_paper);
}

TEST(Bench, LowerBoundColumn) {
  const std::vector<GeneratorSpec> gens{tmpl(GeneratorKind::halton)};
  const std::vector<Index> ns{4};
  const auto row = bench_inverse_discrepancy(2, 0.01, gens, ns);
  EXPECT_EQ(row.lower_bound_paper, 5);
  EXPECT_FALSE(row.best_n_found.has_value());
  EXPECT_FALSE(row.certified);
}

TEST(Bench, HaltonBracket) {
  const std::vector<GeneratorSpec> gens{tmpl(GeneratorKind::grid), tmpl(GeneratorKind::halton),
                                        tmpl(GeneratorKind::random)};
  const std::vector<Index> ns{16, 32, 64, 100, 128, 256};
  const auto row = bench_inverse_discrepancy(2, 0.05, gens, ns);
  ASSERT_TRUE(row.best_n_found.has_value());
  EXPECT_GE(*row.best_n_found, row.lower_bound_paper);
  EXPECT_LE(*row.best_discrepancy, 0.05);
  EXPECT_TRUE(row.certified);
  EXPECT_EQ(row.upper_ref_aistleitner, 10.0 * 2 / 0.05 / 0.05);
}

TEST(Bench, ResourceCapFlagsRow) {
  const std::vector<GeneratorSpec> gens{tmpl(GeneratorKind::halton)};
  const std::vector<Index> ns{200};
  BenchOptions opts;
  opts.exact.max_grid = 100;
  const auto row = bench_inverse_discrepancy(2, 0.05, gens, ns, opts);
  EXPECT_TRUE(row.resource_capped);
  EXPECT_FALSE(row.best_n_found.has_value());
}

TEST(Bench, CsvAndJsonShapes) {
  const std::vector<GeneratorSpec> gens{tmpl(GeneratorKind::grid)};
  const std::vector<Index> ns{1, 4, 16};
  const auto row = bench_inverse_discrepancy(2, 0.25, gens, ns);
  std::ostringstream csv;
  write_bench_csv(csv, std::span(&row, 1));
  const auto text = csv.str();
  EXPECT_EQ(text.substr(0, text.find('\n')),
            "d,epsilon,beta,lower_bound_paper,upper_ref_aistleitner,upper_ref_gpw,"
            "best_n_found,generator_of_best,best_discrepancy,certified,resource_capped");
  EXPECT_NE(text.find(",grid,"), std::string::npos);

  const auto j = to_json(row);
  EXPECT_EQ(j["d"], 2);
  EXPECT_EQ(j["generator_of_best"], "grid");
  EXPECT_EQ(j["certified"], true);
}

TEST(Search, BisectionOverGridAndHalton) {
  GeneratorSpec grid = tmpl(GeneratorKind::grid);
  grid.dim = 1;
  const auto g = search_smallest_n(0.06, grid, 1, 64);
  EXPECT_EQ(g.n, 9);  // 1/(2m) <= 0.06 first at m = 9

  GeneratorSpec halton = tmpl(GeneratorKind::halton);
  halton.dim = 2;
  const auto h = search_smallest_n(0.1, halton, 1, 256);
  ASSERT_TRUE(h.n.has_value());
  EXPECT_LE(*h.discrepancy, 0.1);

  GeneratorSpec random = tmpl(GeneratorKind::random);
  random.dim = 2;
  EXPECT_THROW(search_smallest_n(0.1, random, 1, 10), Error);
}

}  // namespace
}  // namespace stardisc
