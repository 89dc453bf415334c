#include <gtest/gtest.h>

#include <random>

#include "sp/pctree.hpp"

using namespace sp;

namespace {

BinaryMatrix rows(const std::vector<std::string>& lines) {
    BinaryMatrix m;
    for (const auto& l : lines) {
        std::vector<int> r;
        for (char c : l) r.push_back(c - '0');
        m.push_back(r);
    }
    return m;
}

// Consecutive-ones instance turned into a circular-ones instance by an all-zero extra column.
BinaryMatrix with_zero_column(BinaryMatrix m) {
    for (auto& r : m) r.push_back(0);
    return m;
}

}  // namespace

TEST(PCTree, SingleSplitLeavesTwoOrders) {
    PCTree t(4);
    ASSERT_TRUE(t.apply_row({0, 1}, {2, 3}));
    EXPECT_EQ(t.allowed_orders().size(), 2u);
    for (const auto& o : t.allowed_orders()) EXPECT_TRUE(is_circular_arc(o, {0, 1}));
}

TEST(PCTree, StarOverFiveLeavesHasTwelveOrders) {
    EXPECT_EQ(PCTree(5).allowed_orders().size(), 12u);
    EXPECT_TRUE(PCTree(5).extract_constraints().empty());
}

TEST(PCTree, FullChainLeavesOneOrder) {
    PCTree t(5);
    for (int i = 0; i < 5; ++i) ASSERT_TRUE(t.apply_row({i, (i + 1) % 5}, {(i + 2) % 5, (i + 3) % 5, (i + 4) % 5}));
    EXPECT_EQ(t.allowed_orders().size(), 1u);
    EXPECT_EQ(t.count_type(PCTree::NodeType::C), 1);
}

TEST(PCTree, InfeasibleRowLeavesTheTreeUnchanged) {
    PCTree t(4);
    ASSERT_TRUE(t.apply_row({0, 1}, {2, 3}));
    ASSERT_TRUE(t.apply_row({0, 2}, {1, 3}));
    std::string before = t.to_string();
    EXPECT_FALSE(t.apply_row({0, 3}, {1, 2}));
    EXPECT_EQ(t.to_string(), before);
}

TEST(PCTree, ExtendOrderRespectsThePartialOrder) {
    PCTree t(5);
    ASSERT_TRUE(t.apply_row({0, 1}, {2, 3, 4}));
    auto ext = t.extend_order({0, 2, 1});
    ASSERT_TRUE(ext);
    EXPECT_TRUE(is_circular_arc(*ext, {0, 1}));
    EXPECT_FALSE(t.extend_order({0, 2, 1, 3}));
}

TEST(PCTree, DeletingLeavesKeepsTheRest) {
    PCTree t(6);
    t.delete_leaves({1, 4});
    EXPECT_EQ(t.num_leaves(), 4);
    EXPECT_FALSE(t.has_leaf(1));
    EXPECT_TRUE(t.has_leaf(5));
}

TEST(CircularOnes, M2BecomesInfeasibleAtItsLastRow) {
    CircularResult r = test_circular_ones(tucker_m2(), 6);
    EXPECT_FALSE(r.feasible);
    EXPECT_EQ(r.failing_row, 3);
}

TEST(CircularOnes, AllZeroRowChangesNothing) {
    BinaryMatrix m = rows({"110000", "000000", "011100"});
    CircularResult r = test_circular_ones(m, 6);
    ASSERT_TRUE(r.feasible);
    EXPECT_TRUE(order_satisfies(m, r.order));
}

TEST(CircularOnes, IdentityIsFeasible) {
    BinaryMatrix m = rows({"100", "010", "001"});
    CircularResult r = test_circular_ones(m, 3);
    ASSERT_TRUE(r.feasible);
    EXPECT_TRUE(order_satisfies(m, r.order));
}

TEST(CircularOnes, TuckerM1FamilyIsInfeasible) {
    for (int n = 5; n <= 8; ++n) EXPECT_FALSE(test_circular_ones(tucker_m1(n), n).feasible) << n;
}

TEST(CircularOnes, MatchesBruteForceOnRandomMatrices) {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 400; ++it) {
        int n = 3 + rng() % 5, m = 1 + rng() % 6;
        BinaryMatrix mat(m, std::vector<int>(n));
        for (auto& r : mat)
            for (auto& x : r) x = rng() % 2;
        CircularResult r = test_circular_ones(mat, n);
        EXPECT_EQ(r.feasible, brute_force_circular_ones(mat, n).has_value()) << "iteration " << it;
        if (r.feasible) EXPECT_TRUE(order_satisfies(mat, r.order));
    }
}

TEST(CircularOnes, ZeroColumnReducesConsecutiveOnes) {
    std::mt19937_64 rng(6);
    for (int it = 0; it < 300; ++it) {
        int n = 3 + rng() % 4, m = 1 + rng() % 5;
        BinaryMatrix mat(m, std::vector<int>(n));
        for (auto& r : mat)
            for (auto& x : r) x = rng() % 2;
        EXPECT_EQ(test_circular_ones(with_zero_column(mat), n + 1).feasible, brute_force_consecutive_ones(mat, n))
            << "iteration " << it;
    }
}

TEST(Ambiguous, AllStarMatrixIsAccepted) {
    AmbiguousMatrix m = AmbiguousMatrix::parse({"****", "****"});
    CircularResult r = test_ambiguous(m);
    ASSERT_TRUE(r.feasible);
    EXPECT_EQ(r.order.size(), 4u);
}

TEST(Ambiguous, M2WithStarRowsBelowIsInfeasible) {
    AmbiguousMatrix m = AmbiguousMatrix::parse({"110000", "001100", "000011", "010101", "1*0***", "******"});
    ASSERT_TRUE(m.stair_property());
    CircularResult r = test_ambiguous(m);
    EXPECT_FALSE(r.feasible);
    EXPECT_EQ(r.failing_row, 3);
}

TEST(Ambiguous, StairClosureStarsEverythingBelowAStar) {
    AmbiguousMatrix m = AmbiguousMatrix::parse({"1*01", "0110", "1001"});
    EXPECT_FALSE(m.stair_property());
    m.stair_closure();
    EXPECT_TRUE(m.stair_property());
    EXPECT_EQ(m.row_string(2), "1*01");
}

TEST(Ambiguous, MatchesBruteForceAfterClosure) {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 300; ++it) {
        AmbiguousMatrix m;
        m.num_columns = 3 + rng() % 4;
        int k = 1 + rng() % 5;
        for (int i = 0; i < k; ++i) {
            std::vector<int> r(m.num_columns);
            for (auto& x : r) x = rng() % 3;
            m.rows.push_back(r);
        }
        m.stair_closure();
        CircularResult r = test_ambiguous(m);
        EXPECT_EQ(r.feasible, brute_force_ambiguous(m).has_value()) << "iteration " << it;
        if (r.feasible) EXPECT_TRUE(order_satisfies(m, r.order));
    }
}

TEST(Tucker, ScanFindsM2AndNothingInFeasibleInput) {
    TuckerObstruction t = tucker_scan(tucker_m2(), 6);
    EXPECT_EQ(t.type, TuckerType::M2);
    EXPECT_EQ(tucker_scan(rows({"110000", "011000"}), 6).type, TuckerType::None);
}

TEST(Tucker, CanonicalCircularIsRotationAndReflectionInvariant) {
    EXPECT_EQ(canonical_circular({2, 0, 1, 3}), canonical_circular({3, 1, 0, 2}));
    EXPECT_EQ(canonical_circular({2, 0, 1, 3}), canonical_circular({0, 1, 3, 2}));
}
