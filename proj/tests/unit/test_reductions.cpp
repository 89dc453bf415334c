#include <gtest/gtest.h>

#include "sp/families.hpp"
#include "sp/oracle.hpp"
#include "sp/reductions.hpp"
#include "sp/tree.hpp"

using namespace sp;

namespace {

ClusteredGraph path_with(const std::vector<int>& labels) {
    ClusteredGraph g;
    for (size_t i = 0; i < labels.size(); ++i) g.add_vertex("p" + std::to_string(i), labels[i]);
    for (size_t i = 1; i < labels.size(); ++i) g.add_edge(i - 1, i);
    return g;
}

std::vector<int> labels(const ClusteredGraph& g) { return g.gammas(); }

}  // namespace

TEST(Reductions, LabelsModThree) {
    EXPECT_EQ(labels(strip_to_three_clusters(path_with({1, 2, 3}))), (std::vector<int>{1, 2, 0}));
    EXPECT_EQ(labels(strip_to_three_clusters(path_with({1, 2, 3, 4, 5, 6}))), (std::vector<int>{1, 2, 0, 1, 2, 0}));
}

TEST(Reductions, SingleClusterTreeStaysInOneCluster) {
    ClusteredGraph s = three_cluster_tree_to_strip(path_with({1, 1, 1, 1}));
    EXPECT_EQ(s.num_clusters(), 1);
}

TEST(Reductions, AscendingCyclePathBecomesMonotone) {
    ClusteredGraph s = three_cluster_tree_to_strip(path_with({0, 1, 2, 0}));
    std::vector<int> l = labels(s);
    for (size_t i = 1; i < l.size(); ++i) EXPECT_EQ(l[i], l[i - 1] + 1);
}

TEST(Reductions, StripOutputSatisfiesTheStripCondition) {
    for (const auto& t : enumerate_three_cluster_trees(6)) {
        ClusteredGraph s = three_cluster_tree_to_strip(t);
        EXPECT_NO_THROW(s.validate_strip());
    }
}

TEST(Reductions, RejectsBadInput) {
    EXPECT_THROW(three_cluster_tree_to_strip(path_with({0, 3})), Error);
    ClusteredGraph cyc = path_with({0, 1, 2});
    cyc.add_edge(2, 0);
    EXPECT_THROW(three_cluster_tree_to_strip(cyc), Error);
}

TEST(Reductions, DecisionMatchesOracleOnSmallTrees) {
    for (const auto& g : enumerate_strip_trees(6, 4)) {
        ClusteredGraph back = three_cluster_tree_to_strip(strip_to_three_clusters(g));
        EXPECT_EQ(oracle_decide(g).status, oracle_decide(back).status);
    }
}

TEST(Reductions, CompactionKeepsRelativeOrder) {
    ClusteredGraph c = compact_clusters(path_with({5, 9, 7}));
    EXPECT_EQ(labels(c), (std::vector<int>{1, 3, 2}));
}

TEST(Reductions, OneClusterTreeIsCPlanar) {
    EXPECT_TRUE(cplanarity_three_cluster_tree(path_with({1, 1, 1})));
    EXPECT_TRUE(cplanarity_three_cluster_tree(path_with({0, 1, 2, 0, 1})));
}
