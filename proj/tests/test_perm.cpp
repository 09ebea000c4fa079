#include <doctest.h>

#include <numeric>

#include "cycgraph/errors.hpp"
#include "cycgraph/perm.hpp"

using namespace cycgraph;

namespace {

Permutation cyc(std::size_t degree, std::vector<std::vector<Point>> cycles) {
  return Permutation::from_cycles(degree, cycles);
}

}  // namespace

TEST_CASE("identity composes as a unit") {
  auto p = cyc(4, {{0, 1, 2}});
  CHECK(compose(Permutation::identity(4), p) == p);
  CHECK(compose(p, Permutation::identity(4)) == p);
}

TEST_CASE("transposition squared is the identity") {
  auto t = cyc(3, {{0, 1}});
  CHECK(compose(t, t).is_identity());
}

TEST_CASE("composition applies the left argument first") {
  // (0 1) then (1 2): 0 -> 1 -> 2, 2 -> 2 -> 1, 1 -> 0 -> 0.
  auto r = compose(cyc(3, {{0, 1}}), cyc(3, {{1, 2}}));
  CHECK(r[0] == 2);
  CHECK(r[2] == 1);
  CHECK(r[1] == 0);
}

TEST_CASE("compose rejects degree mismatch") {
  CHECK_THROWS_AS(compose(cyc(3, {{0, 1}}), cyc(4, {{0, 1}})), DegreeMismatchError);
  CHECK_THROWS_AS(commutes(cyc(3, {{0, 1}}), cyc(4, {{0, 1}})), DegreeMismatchError);
}

TEST_CASE("image validation") {
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{}), std::invalid_argument);
}

TEST_CASE("element orders") {
  CHECK(element_order(Permutation::identity(5)) == 1);
  CHECK(element_order(cyc(4, {{0, 1, 2, 3}})) == 4);
  CHECK(element_order(cyc(5, {{0, 1}, {2, 3, 4}})) == 6);
}

TEST_CASE("cyclic subgroup lists the powers with identity last") {
  SUBCASE("identity") {
    auto powers = cyclic_subgroup(Permutation::identity(3));
    REQUIRE(powers.size() == 1);
    CHECK(powers[0].is_identity());
  }
  SUBCASE("order four") {
    auto powers = cyclic_subgroup(cyc(4, {{0, 1, 2, 3}}));
    REQUIRE(powers.size() == 4);
    CHECK(powers.back().is_identity());
    for (std::size_t a = 0; a < powers.size(); ++a)
      for (std::size_t b = a + 1; b < powers.size(); ++b) CHECK(!(powers[a] == powers[b]));
  }
  SUBCASE("order six element has one involution and two order-3 powers") {
    auto powers = cyclic_subgroup(cyc(5, {{0, 1}, {2, 3, 4}}));
    REQUIRE(powers.size() == 6);
    int involutions = 0, order3 = 0;
    for (const auto& p : powers) {
      auto o = element_order(p);
      involutions += o == 2;
      order3 += o == 3;
    }
    CHECK(involutions == 1);
    CHECK(order3 == 2);
  }
}

TEST_CASE("commuting pairs") {
  auto t01 = cyc(4, {{0, 1}});
  auto t23 = cyc(4, {{2, 3}});
  auto t12 = cyc(4, {{1, 2}});
  CHECK(commutes(t01, t01));
  CHECK(commutes(t01, t23));
  CHECK(!commutes(t01, t12));
}

TEST_CASE("inverse and cycle round trips") {
  auto p = cyc(6, {{0, 1, 2}, {3, 4}});
  CHECK(compose(p, p.inverse()).is_identity());
  CHECK(compose(p.inverse(), p).is_identity());
  CHECK(Permutation::from_cycles(6, p.cycles()) == p);
  CHECK(p.cycle_string() == "(0 1 2)(3 4)");
  CHECK(Permutation::identity(4).cycle_string() == "()");
}

TEST_CASE("from_cycles validation") {
  CHECK_THROWS_AS(cyc(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(cyc(4, {{0, 1}, {1, 2}}), std::invalid_argument);
}
