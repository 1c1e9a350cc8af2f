#include "supertab/branching.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "paper_fixtures.hpp"

namespace supertab {
namespace {

TEST(Branching, Branch) {
  EXPECT_EQ(branch(BorelSequence::parse("dde"), {3, 2, 1}),
            (std::vector<Partition>{{3, 2}, {3, 1}, {2, 2}, {2, 1}}));
  EXPECT_EQ(branch(BorelSequence::parse("de"), {1}), (std::vector<Partition>{{1}, {}}));
  for (const auto& b : all_sequences(2, 2)) {
    EXPECT_EQ(branch(b, {}), (std::vector<Partition>{{}}));
  }
}

TEST(Branching, BranchErrors) {
  EXPECT_THROW(branch(BorelSequence(), {}), DomainError);
  EXPECT_THROW(branch(BorelSequence::parse("de"), {2, 2}), DomainError);
}

TEST(Branching, BranchIsMultiplicityFree) {
  for (const auto& b : all_sequences(2, 2)) {
    for (const auto& lambda : enumerate_partitions(6, std::nullopt, Hook{2, 2})) {
      const auto sigmas = branch(b, lambda);
      EXPECT_EQ(std::adjacent_find(sigmas.begin(), sigmas.end()), sigmas.end());
    }
  }
}

TEST(Branching, Chains) {
  EXPECT_EQ(chains(BorelSequence::parse("dde"), {3, 2, 1}).size(), 8u);
  const auto all = chains(fixtures::gl32_borel(), {4, 3, 3, 2, 2, 1});
  EXPECT_NE(std::find(all.begin(), all.end(), fixtures::gl32_chain()), all.end());
  for (const auto& c : all) EXPECT_TRUE(is_valid_chain(fixtures::gl32_borel(), c));

  const auto empty = chains(BorelSequence::parse("ede"), {});
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_EQ(empty.front().steps.size(), 4u);
  for (const auto& step : empty.front().steps) EXPECT_TRUE(step.lambda.empty());
  EXPECT_EQ(empty.front().steps.back().m, 0);
  EXPECT_EQ(empty.front().steps.back().n, 0);
}

TEST(Branching, ChainsRespectNodeBudget) {
  EXPECT_THROW(chains(standard(3, 2), {4, 3, 2, 1}, 10), SearchLimitExceeded);
}

TEST(Branching, ChainToTableauPaperExample) {
  const auto b = fixtures::gl32_borel();
  EXPECT_EQ(chain_to_tableau(b, fixtures::gl32_chain()), fixtures::gl32_tableau());
  EXPECT_EQ(tableau_to_chain(b, fixtures::gl32_tableau()), fixtures::gl32_chain());
}

TEST(Branching, ChainToTableauSmallCases) {
  const BranchingChain single{{{1, 0, Partition{1}}, {0, 0, Partition{}}}};
  EXPECT_EQ(chain_to_tableau(BorelSequence::parse("d"), single),
            fixtures::tab("1"));
  const BranchingChain empty{{{0, 0, Partition{}}}};
  EXPECT_TRUE(chain_to_tableau(BorelSequence(), empty).empty());

  const BranchingChain expected{
      {{1, 1, Partition{2}}, {1, 0, Partition{1}}, {0, 0, Partition{}}}};
  EXPECT_EQ(tableau_to_chain(BorelSequence::parse("de"), fixtures::tab("1,1b")), expected);
}

TEST(Branching, InvalidInputsAreRejected) {
  const auto b = BorelSequence::parse("de");
  // Removing ε must take a vertical strip; (2) -> () takes two boxes in a row.
  const BranchingChain bad{{{1, 1, Partition{2}}, {1, 0, Partition{}}, {0, 0, Partition{}}}};
  EXPECT_FALSE(is_valid_chain(b, bad));
  EXPECT_THROW(chain_to_tableau(b, bad), DomainError);
  const BranchingChain short_chain{{{1, 1, Partition{1}}}};
  EXPECT_THROW(chain_to_tableau(b, short_chain), DomainError);
  EXPECT_THROW(tableau_to_chain(b, fixtures::tab("1b,1b")), DomainError);
}

TEST(Branching, BijectionRoundTrips) {
  for (int m = 0; m <= 4; ++m) {
    for (int n = 0; m + n <= 4; ++n) {
      for (const auto& b : all_sequences(m, n)) {
        for (int s = 0; s <= 6; ++s) {
          for (const auto& lambda : enumerate_partitions(s, std::nullopt, Hook{m, n})) {
            const auto all_chains = chains(b, lambda);
            const auto all_tableaux = enumerate_tableaux(b, lambda);
            ASSERT_EQ(all_chains.size(), all_tableaux.size()) << b << " " << lambda;
            EXPECT_EQ(dimension(b, lambda), all_chains.size());
            std::vector<Tableau> images;
            for (const auto& c : all_chains) {
              const Tableau t = chain_to_tableau(b, c);
              EXPECT_TRUE(is_b_semistandard(b, t));
              EXPECT_EQ(tableau_to_chain(b, t), c);
              images.push_back(t);
            }
            for (const auto& t : all_tableaux) {
              EXPECT_EQ(chain_to_tableau(b, tableau_to_chain(b, t)), t);
            }
            std::sort(images.begin(), images.end(), [&](const Tableau& x, const Tableau& y) {
              return render(x, RenderFormat::kJson) < render(y, RenderFormat::kJson);
            });
            EXPECT_EQ(std::adjacent_find(images.begin(), images.end()), images.end());
          }
        }
      }
    }
  }
}

TEST(Branching, Dimension) {
  EXPECT_EQ(dimension(BorelSequence::parse("dde"), {3, 2, 1}), 8);
  EXPECT_EQ(dimension(BorelSequence::parse("ded"), {3, 2, 1}), 8);
  EXPECT_EQ(dimension(BorelSequence::parse("edd"), {}), 1);
  EXPECT_EQ(dimension(BorelSequence(), {}), 1);
  EXPECT_THROW(dimension(BorelSequence(), {1}), DomainError);
}

TEST(Branching, DimensionIsBorelIndependent) {
  for (int m = 0; m <= 5; ++m) {
    for (int n = 0; m + n <= 5; ++n) {
      const auto borels = all_sequences(m, n);
      std::vector<DimensionCounter> counters(borels.begin(), borels.end());
      for (int s = 0; s <= 8; ++s) {
        for (const auto& lambda : enumerate_partitions(s, std::nullopt, Hook{m, n})) {
          const BigInt reference = counters.front()(lambda);
          for (auto& counter : counters) {
            EXPECT_EQ(counter(lambda), reference) << counter.borel() << " " << lambda;
          }
        }
      }
    }
  }
}

TEST(Branching, PurelyEvenDimensionIsClassicalSsytCount) {
  for (int m = 1; m <= 4; ++m) {
    for (int s = 0; s <= 7; ++s) {
      for (const auto& lambda : enumerate_partitions(s, static_cast<std::size_t>(m))) {
        EXPECT_EQ(dimension(standard(m, 0), lambda), oracle::ssyt_count_brute(lambda, m))
            << m << " " << lambda;
      }
    }
  }
}

TEST(Branching, LargeDimensionsExceed64Bits) {
  // gl(12) on the staircase (11,...,1) has dimension 2^66.
  const Partition lambda{11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1};
  const BigInt dim = dimension(standard(12, 0), lambda);
  EXPECT_EQ(dim, BigInt(1) << 66);
  EXPECT_GT(dim, BigInt(std::numeric_limits<std::uint64_t>::max()));
  const auto exact = oracle::hook_content(lambda, 12);
  EXPECT_EQ(denominator(exact), 1);
  EXPECT_EQ(numerator(exact), dim);
}

}  // namespace
}  // namespace supertab
