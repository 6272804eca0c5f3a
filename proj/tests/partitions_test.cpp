#include <gtest/gtest.h>

#include <set>

#include "ellorder/partitions.hpp"
#include "oracles.hpp"

using namespace ellorder;

TEST(Partition, NormalizesTrailingZeros) {
  EXPECT_EQ(Partition({4, 2, 0, 0}), Partition({4, 2}));
  EXPECT_EQ(Partition({0}).length(), 0u);
  EXPECT_EQ(Partition().total(), 0);
}

TEST(Partition, RejectsIncreasingOrNegative) {
  EXPECT_THROW(Partition({1, 2}), Error);
  EXPECT_THROW(Partition({3, -1}), Error);
  EXPECT_THROW(Partition({2, 0, 1}), Error);
}

TEST(Partition, ParseForms) {
  EXPECT_EQ(Partition::parse("[6,6,4,2]"), Partition({6, 6, 4, 2}));
  EXPECT_EQ(Partition::parse("6+6+4+2"), Partition({6, 6, 4, 2}));
  EXPECT_EQ(Partition::parse("6 6 4 2"), Partition({6, 6, 4, 2}));
  EXPECT_EQ(Partition::parse("[]"), Partition());
  EXPECT_EQ(Partition({6, 6, 4, 2}).to_string(), "[6,6,4,2]");
  for (const char* bad : {"[1,2]", "a+b", "3-1", "[4,,x]"}) {
    try {
      Partition::parse(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::Parse) << bad;
    }
  }
}

TEST(Dominance, Examples) {
  EXPECT_TRUE(dominance_leq({2, 2}, {3, 1}));
  EXPECT_FALSE(dominance_leq({3, 1}, {2, 2}));
  EXPECT_TRUE(dominance_leq({1, 1, 1, 1}, {4}));
  EXPECT_TRUE(dominance_leq({4}, {4}));
  EXPECT_FALSE(dominance_leq({4, 1, 1}, {3, 3}));
  EXPECT_FALSE(dominance_leq({3, 3}, {4, 1, 1}));
}

TEST(Dominance, MismatchedTotalThrows) {
  try {
    dominance_leq({2}, {3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MismatchedTotal);
  }
}

TEST(Dominance, PartialOrderUpTo12) {
  for (int n = 0; n <= 12; ++n) {
    auto ps = partitions_of(n);
    for (const auto& a : ps) {
      EXPECT_TRUE(dominance_leq(a, a));
      for (const auto& b : ps) {
        bool ab = dominance_leq(a, b);
        if (ab && dominance_leq(b, a)) EXPECT_EQ(a, b);
        if (!ab) continue;
        for (const auto& c : ps)
          if (dominance_leq(b, c)) EXPECT_TRUE(dominance_leq(a, c));
      }
    }
  }
}

TEST(Dominance, TransposeReversesUpTo12) {
  for (int n = 0; n <= 12; ++n) {
    auto ps = partitions_of(n);
    for (const auto& a : ps)
      for (const auto& b : ps) EXPECT_EQ(dominance_leq(a, b), dominance_leq(transpose(b), transpose(a)));
  }
}

TEST(Dominance, ScaleAndAppendOnePreserveOrder) {
  for (int n = 1; n <= 9; ++n) {
    auto ps = partitions_of(n);
    for (const auto& a : ps)
      for (const auto& b : ps) {
        EXPECT_EQ(dominance_leq(scale(a, 2), scale(b, 2)), dominance_leq(a, b));
        EXPECT_EQ(dominance_leq(append_one(a), append_one(b)), dominance_leq(a, b));
      }
  }
}

TEST(Transpose, Examples) {
  EXPECT_EQ(transpose({6, 6, 4, 2}), Partition({4, 4, 3, 3, 2, 2}));
  EXPECT_EQ(transpose(Partition()), Partition());
  EXPECT_EQ(transpose({5}), Partition({1, 1, 1, 1, 1}));
  for (int n = 0; n <= 10; ++n)
    for (const auto& a : partitions_of(n)) {
      EXPECT_EQ(transpose(transpose(a)), a);
      EXPECT_EQ(transpose(a).part(1), static_cast<int>(a.length()));
    }
}

TEST(Multiplicity, Examples) {
  EXPECT_EQ(multiplicity({4, 4, 2}, 4), 2);
  EXPECT_EQ(multiplicity({4, 4, 2}, 3), 0);
  EXPECT_EQ(multiplicity({6, 6, 4, 2}, 6), 2);
  EXPECT_EQ(multiplicity({6, 6, 4, 2}, 0), 0);
}

TEST(Families, Examples) {
  EXPECT_EQ(family_members(PartitionFamily::all(4)),
            (std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}}));
  EXPECT_EQ(family_members(PartitionFamily::odd_parts(4)), (std::vector<Partition>{{3, 1}, {1, 1, 1, 1}}));
  EXPECT_EQ(family_members(PartitionFamily::with_kappa(4, -1)),
            (std::vector<Partition>{{4}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}}));
  EXPECT_EQ(family_members(PartitionFamily::even_length(4)), (std::vector<Partition>{{3, 1}, {2, 2}, {1, 1, 1, 1}}));
  EXPECT_EQ(family_members(PartitionFamily::odd_length(4)), (std::vector<Partition>{{4}, {2, 1, 1}}));
}

TEST(Families, MatchCompositionOracle) {
  for (int n = 0; n <= 14; ++n) {
    std::set<std::vector<int>> mine;
    for (const auto& p : partitions_of(n)) mine.insert(p.vec());
    EXPECT_EQ(mine, oracle::partitions_by_compositions(n)) << n;
    auto ps = partitions_of(n);
    EXPECT_TRUE(std::is_sorted(ps.begin(), ps.end(), [](const auto& a, const auto& b) { return a > b; }));
  }
}

TEST(Families, BoundExceeded) {
  try {
    family_members(PartitionFamily::all(30), 20);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BoundExceeded);
  }
}

TEST(Psi, Examples) {
  EXPECT_EQ(psi({6, 6, 4, 2}).values, (std::vector<int>{1, -1, 1, -1}));
  EXPECT_EQ(psi({2, 2}).values, (std::vector<int>{1, -1}));
  EXPECT_EQ(psi({2, 2, 2, 2}).values, (std::vector<int>{1, 0, 0, -1}));
  EXPECT_THROW(psi(Partition()), Error);
}

TEST(Psi, PropertiesForEvenPartsUpTo40) {
  for (int n = 2; n <= 40; n += 2)
    for (const auto& half : partitions_of(n / 2)) {
      Partition a = scale(half, 2);
      PsiVector v = psi(a);
      ASSERT_EQ(v.values.size(), a.length());
      EXPECT_EQ(v.at(1), 1);
      for (std::size_t k = 1; k <= a.length(); ++k) {
        if (k % 2 == 1) EXPECT_EQ(v.prefix_sum(k), 1);
        else EXPECT_EQ(v.prefix_sum(k), 1 + v.at(k));
      }
      EXPECT_EQ(v.prefix_sum(a.length()), a.length() % 2 ? 1 : 0);
    }
}

TEST(AddPsi, Examples) {
  EXPECT_EQ(add_psi({6, 6, 4, 2}), Partition({7, 5, 5, 1}));
  EXPECT_EQ(add_psi({4, 4}), Partition({5, 3}));
  EXPECT_EQ(add_psi({2, 2, 2, 2, 2, 2}), Partition({3, 2, 2, 2, 2, 1}));
  try {
    add_psi({3, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OddPart);
  }
}

TEST(AddPsi, MatchesClosedFormAndPrefixSums) {
  for (int half = 1; half <= 14; ++half)
    for (const auto& h : partitions_of(half)) {
      Partition a = scale(h, 2);
      Partition g = add_psi(a);
      EXPECT_EQ(g.vec(), oracle::add_psi_closed_form(a.vec())) << a.to_string();
      PsiVector v = psi(a);
      int sa = 0, sg = 0;
      for (std::size_t k = 1; k <= a.length(); ++k) {
        sa += a.part(k);
        sg += g.part(k);
        EXPECT_EQ(sg, sa + (k % 2 ? 1 : 1 + v.at(k)));
      }
      EXPECT_EQ(g.total(), a.total() + (a.length() % 2 ? 1 : 0));
    }
}

TEST(Scale, Examples) {
  EXPECT_EQ(scale({2, 1}, 2), Partition({4, 2}));
  EXPECT_EQ(append_one({4, 2}), Partition({4, 2, 1}));
  EXPECT_EQ(scale({1, 1}, 2), Partition({2, 2}));
}
