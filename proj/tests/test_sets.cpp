#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "helly/sets.hpp"

using namespace helly;

TEST_CASE("set algebra on sorted vectors") {
  VertexSet a{0, 1, 2}, b{1, 2, 3};
  CHECK(setIntersect(a, b) == VertexSet{1, 2});
  CHECK(setUnion(a, b) == VertexSet{0, 1, 2, 3});
  CHECK(setDifference(a, b) == VertexSet{0});
  CHECK(isSubset({1, 2}, a));
  CHECK_FALSE(isSubset(a, b));
  CHECK(setContains(a, 2));
  CHECK_FALSE(setContains(a, 3));
  CHECK(setsDisjoint({0, 2}, {1, 3}));
  CHECK_FALSE(setsDisjoint(a, b));
  VertexSet c = a;
  setIntersectInPlace(c, b);
  CHECK(c == VertexSet{1, 2});
  CHECK(sortedUnique({3, 1, 3, 0, 1}) == VertexSet{0, 1, 3});
}

TEST_CASE("saturating binomial") {
  CHECK(binomialSat(5, 2) == 10);
  CHECK(binomialSat(3, 5) == 0);
  CHECK(binomialSat(20, 6) == 38760);
  CHECK(binomialSat(200, 100) == UINT64_MAX);
  CHECK(binomialSat(0, 0) == 1);
}

TEST_CASE("subset visitor covers all k-subsets in lexicographic order") {
  std::vector<std::vector<int>> seen;
  forEachSubset(4, 2, [&](const std::vector<int>& s) { seen.push_back(s); });
  REQUIRE(seen.size() == 6);
  CHECK(seen.front() == std::vector<int>{0, 1});
  CHECK(seen.back() == std::vector<int>{2, 3});
  CHECK(std::is_sorted(seen.begin(), seen.end()));

  int count = 0;
  forEachSubset(6, 0, [&](const std::vector<int>&) { ++count; });
  CHECK(count == 1);  // the empty subset
  forEachSubset(3, 5, [&](const std::vector<int>&) { ++count; });
  CHECK(count == 1);  // k > n visits nothing
}
