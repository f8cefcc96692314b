#include <gtest/gtest.h>

#include <set>

#include "mop/common.hpp"

namespace {

using mop::MultiIndex;

TEST(MultiIndex, Shifts)
{
    const MultiIndex n{2, 0, 1};
    EXPECT_EQ(n.length(), 3);
    EXPECT_EQ(n.plus(1), (MultiIndex{2, 1, 1}));
    EXPECT_FALSE(n.minus(1).valid());
    EXPECT_TRUE(n.minus(0).valid());
    EXPECT_EQ(MultiIndex::unit(3, 2), (MultiIndex{0, 0, 1}));
    EXPECT_EQ(MultiIndex::zero(2).length(), 0);
}

TEST(MultiIndex, EnumerationByLength)
{
    const std::vector<MultiIndex> all = mop::multi_indices_of_length(3, 4);
    EXPECT_EQ(all.size(), 15U);
    EXPECT_EQ(all.front(), (MultiIndex{4, 0, 0}));
    EXPECT_EQ(all.back(), (MultiIndex{0, 0, 4}));
    const std::set<MultiIndex> unique(all.begin(), all.end());
    EXPECT_EQ(unique.size(), all.size());
    for (const MultiIndex& n : all) {
        EXPECT_EQ(n.length(), 4);
    }
}

TEST(MultiIndex, HashSeparatesPermutations)
{
    const mop::MultiIndexHash h;
    EXPECT_NE(h(MultiIndex{1, 2}), h(MultiIndex{2, 1}));
}

} // namespace
