#include <gtest/gtest.h>

#include <map>
#include <vector>

#include "netmed/errors.hpp"
#include "netmed/random.hpp"
#include "property.hpp"

using namespace netmed;

namespace {

std::vector<std::size_t> degrees(const EdgeSet& e) {
  std::vector<std::size_t> d(e.universe().n_nodes(), 0);
  for (const auto& p : e.pairs()) {
    ++d[p.i];
    ++d[p.j];
  }
  return d;
}

}  // namespace

TEST(Rng, SameSeedSameStream) {
  Rng x(42), y(42);
  for (int k = 0; k < 100; ++k) ASSERT_EQ(x.next(), y.next());
}

TEST(Rng, UniformRangeAndBelow) {
  Rng rng(3);
  std::map<std::uint64_t, int> counts;
  for (int k = 0; k < 30000; ++k) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    ++counts[rng.below(3)];
  }
  ASSERT_EQ(counts.size(), 3u);
  for (const auto& [value, n] : counts) EXPECT_NEAR(n, 10000, 400) << value;
}

TEST(DeriveSeed, DistinctAcrossStreamsAndIndices) {
  EXPECT_EQ(derive_seed(1, 2, 3), derive_seed(1, 2, 3));
  EXPECT_NE(derive_seed(1, 2, 3), derive_seed(1, 3, 2));
  EXPECT_NE(derive_seed(1, 2, 3), derive_seed(2, 2, 3));
  EXPECT_NE(derive_seed(1, 2, 3), derive_seed(1, 2, 4));
}

TEST(SampleOutside, AvoidsExcludedAndHasExactCount) {
  prop::for_all(500, 21, [](Rng& rng) {
    const NodeUniverse u = prop::small_universe(rng, 30);
    const EdgeSet excluded = prop::edges(u, rng);
    const std::size_t vacant = u.pair_count() - excluded.size();
    const std::size_t count = static_cast<std::size_t>(rng.below(vacant + 1));
    const EdgeSet drawn = sample_outside(excluded, count, rng);
    EXPECT_EQ(drawn.size(), count);
    EXPECT_EQ(intersection_size(drawn, excluded), 0u);
  });
}

TEST(SampleOutside, ThrowsWhenFull) {
  Rng rng(1);
  const EdgeSet full = EdgeSet::complete(NodeUniverse(5));
  EXPECT_THROW(sample_outside(full, 1, rng), NoVacantPair);
  EXPECT_TRUE(sample_outside(full, 0, rng).empty());
}

TEST(SampleOutside, RoughlyUniform) {
  const NodeUniverse u(6);
  const EdgeSet excluded = EdgeSet::from_indices(u, {0, 1, 2});
  std::vector<int> hits(u.pair_count(), 0);
  Rng rng(9);
  for (int k = 0; k < 12000; ++k) {
    for (PairIndex p : sample_outside(excluded, 2, rng)) ++hits[p];
  }
  // 12 vacant pairs, 2 drawn per trial -> 2000 expected each.
  for (PairIndex p = 3; p < u.pair_count(); ++p) EXPECT_NEAR(hits[p], 2000, 200) << p;
}

TEST(DegreePreservingShuffle, KeepsDegreeSequence) {
  prop::for_all(200, 22, [](Rng& rng) {
    const NodeUniverse u = prop::small_universe(rng, 25);
    const EdgeSet e = prop::edges(u, rng);
    const EdgeSet shuffled = degree_preserving_shuffle(e, rng);
    EXPECT_EQ(shuffled.size(), e.size());
    EXPECT_EQ(degrees(shuffled), degrees(e));
  });
}
