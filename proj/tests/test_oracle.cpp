#include "doctest.h"
#include "treecode/hbuilt.hpp"
#include "treecode/oracle.hpp"

using namespace treecode;

namespace {

CycleFreeSpec identity_spec(int size, int c_size) {
  CycleFreeSpec s{size, c_size, {}};
  for (int i = 0; i < size; ++i) s.gamma.push_back(i);
  return s;
}

}  // namespace

TEST_CASE("cycle-free functions") {
  CHECK(oracle::enumerate_cycle_free(identity_spec(2, 2)).size() == 8);
  CHECK(oracle::enumerate_cycle_free(identity_spec(1, 1)).size() == 1);
  CHECK(oracle::enumerate_cycle_free(identity_spec(3, 1)).size() == 16);
  CHECK_THROWS_AS(oracle::enumerate_cycle_free(identity_spec(7, 1)), oracle::BudgetExceeded);
}

TEST_CASE("(k,m)-trees") {
  CHECK(oracle::enumerate_km_trees(2, 1, 3, Subset{1}).size() == 16);
  CHECK(oracle::enumerate_km_trees(3, 2, 2).size() == 6);
  for (int k = 1; k <= 5; ++k)
    for (int m = 0; m < k; ++m) {
      CHECK(oracle::enumerate_km_trees(k, m, 1).size() == 1);
      CHECK(oracle::enumerate_km_trees(k, m, 1, Subset::interval(1, m)).size() == 1);
    }
  // (2,0)-trees with 2 edges are the perfect matchings of [4].
  CHECK(oracle::enumerate_km_trees(2, 0, 2).size() == 3);
  // Every result passes the library's own validator.
  for (const auto& g : oracle::enumerate_km_trees(3, 1, 3)) CHECK(validate_km_tree(g, 1));
}

TEST_CASE("decorated trees") {
  CHECK(oracle::enumerate_hbuilt(PatternGraph::cycle(3), 2).size() == 5);
  CHECK(oracle::enumerate_hbuilt(PatternGraph::complete(3, 2), 2).size() == 5);
  for (const auto& h : {PatternGraph::cycle(4), PatternGraph::cycle(5), PatternGraph::complete(3, 1)})
    CHECK(oracle::enumerate_hbuilt(h, 1).size() == rooted_copies(h).members.size());
  for (const auto& t : oracle::enumerate_hbuilt(PatternGraph::cycle(4), 2)) CHECK(is_hbuilt(PatternGraph::cycle(4), t));
}

TEST_CASE("polygon trees") {
  CHECK(oracle::enumerate_kgon_trees(3, 1).size() == 1);
  CHECK(oracle::enumerate_kgon_trees(4, 1).size() == 3);
  CHECK(oracle::enumerate_kgon_trees(3, 2).size() == 6);
  CHECK(oracle::enumerate_kgon_trees(3, 3).size() == 70);
}

TEST_CASE("edge-labelled trees") {
  CHECK(oracle::enumerate_edge_labelled_trees(1).size() == 1);
  CHECK(oracle::enumerate_edge_labelled_trees(2).size() == 1);
  CHECK(oracle::enumerate_edge_labelled_trees(3).size() == 4);
  CHECK(oracle::enumerate_edge_labelled_trees(5).size() == 216);
  CHECK_THROWS_AS(oracle::enumerate_edge_labelled_trees(9), oracle::BudgetExceeded);
}

TEST_CASE("orbits under within-class label swaps") {
  CHECK(oracle::orbit_count_Sn(1) == 1);
  CHECK(oracle::orbit_count_Sn(3) == 2);
  CHECK(oracle::orbit_count_Sn(4) == 8);
  CHECK(oracle::orbit_count_Sn(5) == 52);
}

TEST_CASE("budget refusals carry an estimate") {
  try {
    oracle::enumerate_cycle_free(identity_spec(8, 2));
    FAIL("expected a refusal");
  } catch (const oracle::BudgetExceeded& ex) {
    CHECK(ex.estimate() > oracle::kDeskBudget);
  }
}
