#include <gtest/gtest.h>

#include <cmath>

#include "netmed/errors.hpp"
#include "netmed/generators.hpp"
#include "netmed/similarity.hpp"
#include "netmed/stats.hpp"
#include "oracle.hpp"
#include "property.hpp"

using namespace netmed;

namespace {

const NodeUniverse kU3(3);

EdgeSet set_of(NodeUniverse u, std::initializer_list<NodePair> pairs) {
  std::vector<NodePair> v(pairs);
  return EdgeSet::from_pairs(u, v);
}

}  // namespace

TEST(Nj, Examples) {
  const EdgeSet a = set_of(kU3, {{0, 1}, {0, 2}});
  const EdgeSet b = set_of(kU3, {{0, 1}, {1, 2}});
  EXPECT_DOUBLE_EQ(nj(a, b).value(), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(nj(a, a).value(), 1.0);
  EXPECT_DOUBLE_EQ(nj(set_of(kU3, {{0, 1}}), set_of(kU3, {{1, 2}})).value(), 0.0);
  EXPECT_THROW(nj(EdgeSet(kU3), EdgeSet(kU3)), EmptyUnion);
}

TEST(NjPartial, Examples) {
  const EdgeSet a = set_of(kU3, {{0, 1}, {0, 2}});
  const EdgeSet b = set_of(kU3, {{0, 1}, {1, 2}});
  const EdgeSet c = set_of(kU3, {{0, 1}});
  EXPECT_DOUBLE_EQ(nj_partial(a, b, c).value(), 0.0);
  EXPECT_DOUBLE_EQ(delta(a, b, c).value(), -1.0 / 3.0);
  EXPECT_DOUBLE_EQ(nj_partial(a, b, EdgeSet(kU3)).value(), nj(a, b).value());
  EXPECT_DOUBLE_EQ(delta(a, b, EdgeSet(kU3)).value(), 0.0);
  EXPECT_THROW(nj_partial(a, b, EdgeSet::complete(kU3)), EmptyConditionedUnion);
}

TEST(ValueTypes, RejectOutOfRange) {
  EXPECT_THROW(Similarity(1.5), InvalidArgument);
  EXPECT_THROW(Similarity(-0.1), InvalidArgument);
  EXPECT_THROW(NetDifference(-1.5), InvalidArgument);
  EXPECT_DOUBLE_EQ(Similarity(0.25).distance(), 0.75);
}

TEST(SimilarityProperty, MatchesReferenceAndInvariants) {
  prop::for_all(3000, 31, [](Rng& rng) {
    const NodeUniverse u = prop::small_universe(rng);
    const EdgeSet a = prop::edges(u, rng), b = prop::edges(u, rng), c = prop::edges(u, rng);
    const auto sa = oracle::to_set(a), sb = oracle::to_set(b), sc = oracle::to_set(c);
    if (oracle::set_or(sa, sb).empty()) {
      EXPECT_THROW(nj(a, b), EmptyUnion);
      return;
    }
    EXPECT_DOUBLE_EQ(nj(a, b).value(), oracle::jaccard(sa, sb));
    EXPECT_EQ(nj(a, b).value(), nj(b, a).value());
    if (!a.empty()) {
      EXPECT_EQ(distance(a, a), 0.0);
    }
    EXPECT_EQ(distance(a, b), distance(b, a));
    if (oracle::set_minus(oracle::set_or(sa, sb), sc).empty()) {
      EXPECT_THROW(nj_partial(a, b, c), EmptyConditionedUnion);
      return;
    }
    const double njp = nj_partial(a, b, c).value();
    EXPECT_DOUBLE_EQ(njp, oracle::partial_jaccard(sa, sb, sc));
    EXPECT_EQ(njp, nj_partial(b, a, c).value());
    EXPECT_EQ(njp, nj_partial(a, b, intersect(c, unite(a, b))).value());
    const double d = delta(a, b, c).value();
    EXPECT_GE(d, -1.0);
    EXPECT_LE(d, 1.0);
  });
}

TEST(SimilarityStatistics, UncorrelatedEnsembleCentred) {
  const GenParams params{50, 0.5, 1.0, 0.0, Model::kUncorrelated};
  std::vector<double> njs, njps, deltas;
  for (std::uint64_t r = 0; r < 1000; ++r) {
    const TriadMeasures m = measure(generate(params, r));
    njs.push_back(m.nj.value());
    njps.push_back(m.nj_partial.value());
    deltas.push_back(m.delta.value());
  }
  const double expected = oracle::expected(Model::kUncorrelated, 0.5).nj;
  EXPECT_NEAR(expected, 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(mean(njs), expected, 0.02);
  EXPECT_NEAR(mean(njps), expected, 0.02);
  EXPECT_LT(std::abs(mean(deltas)), 0.01);
}

TEST(PairwiseNull, CompleteGraphs) {
  const EdgeSet full = EdgeSet::complete(NodeUniverse(6));
  PairwiseNullOptions options;
  options.realizations = 20;
  const auto s = pairwise_null(full, full, options);
  EXPECT_EQ(s.observed_nj.value(), 1.0);
  EXPECT_EQ(s.null_mean, 1.0);
  EXPECT_EQ(s.null_std, 0.0);
  EXPECT_EQ(s.n_randomizations, 20u);
}

TEST(PairwiseNull, ErdosRenyiBaseline) {
  const Triplet t = generate({50, 0.5, 1.0, 0.0, Model::kUncorrelated}, 5);
  PairwiseNullOptions options;
  options.realizations = 500;
  options.seed = 77;
  const auto s = pairwise_null(t.a, t.b, options);
  // Uniform resampling at the observed densities; the oracle value is for p=1/2.
  EXPECT_NEAR(s.null_mean, oracle::expected(Model::kUncorrelated, 0.5).nj, 0.02);
  EXPECT_GT(s.null_std, 0.0);

  const auto again = pairwise_null(t.a, t.b, options);
  EXPECT_EQ(again.null_mean, s.null_mean);
  EXPECT_EQ(again.null_std, s.null_std);

  options.workers = 3;
  const auto threaded = pairwise_null(t.a, t.b, options);
  EXPECT_EQ(threaded.null_mean, s.null_mean);
  EXPECT_EQ(threaded.null_std, s.null_std);
}

TEST(PairwiseNull, DegreePreservingKeepsOverlapScale) {
  const Triplet t = generate({40, 0.3, 1.0, 0.0, Model::kUncorrelated}, 6);
  PairwiseNullOptions options;
  options.realizations = 50;
  options.randomization = NullRandomization::kDegreePreserving;
  const auto s = pairwise_null(t.a, t.b, options);
  EXPECT_NEAR(s.null_mean, oracle::expected(Model::kUncorrelated, 0.3).nj, 0.05);
}
