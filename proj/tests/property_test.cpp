// Randomized checks against the brute-force oracles. The corpora live in
// support/corpus.cpp so the acceptance binary runs the very same cases.

#include <gtest/gtest.h>

#include "support/corpus.hpp"

namespace {

using namespace rcft::testing;

void expect_clean(const CorpusResult& r, std::size_t min_cases) {
  EXPECT_GE(r.cases, min_cases);
  EXPECT_EQ(r.violations, 0u) << "first: " << r.first_failure;
}

TEST(Property, HopDistancesMatchFloydWarshall) { expect_clean(hop_distance_corpus(), 10000); }

TEST(Property, StepTowardFollowsSmallestShortestPath) { expect_clean(step_toward_corpus(), 500); }

TEST(Property, AssignmentsMatchScans) { expect_clean(assignment_corpus(), 90); }

TEST(Property, LeachCMatchesExhaustiveSearch) { expect_clean(leach_c_corpus(), 51); }

TEST(Property, LeachCLocalSearchIsSwapOptimal) { expect_clean(local_search_corpus(), 50); }

TEST(Property, ClusteringInvariantsAfterEveryFormation) { expect_clean(formation_fuzz(), 1000); }

TEST(Property, RecenterDecisionInvariants) { expect_clean(recenter_fuzz(), 1000); }

TEST(Property, RcftClustersFrozenForWholeRun) {
  const auto r = rcft_frozen_corpus();
  expect_clean(r, 30);
  EXPECT_GT(r.extra, 0u);  // the corpus does exercise head succession
}

TEST(Property, LeachEpochRotation) {
  const auto r = leach_rotation_corpus();
  expect_clean(r, 40);
  EXPECT_GT(r.extra, 0u);  // and the dry-pool branch
}

TEST(Property, ReplayIsByteExact) { expect_clean(replay_corpus(), 9); }

}  // namespace
