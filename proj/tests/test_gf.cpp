#include <doctest.h>

#include "cycgraph/errors.hpp"
#include "cycgraph/gf.hpp"

using namespace cycgraph;

TEST_CASE("GF(4) uses the unique irreducible quadratic") {
  auto F = make_field(2, 2);
  CHECK(F.size == 4);
  CHECK(F.modulus == std::vector<std::uint32_t>{1, 1, 1});  // x^2 + x + 1
}

TEST_CASE("GF(8) picks the least irreducible cubic by encoding") {
  // Enumerating all monic cubics over GF(2) in encoding order, the first
  // irreducible one is x^3 + x + 1 (x^3, x^3+1, x^3+x, x^3+x^2 all factor).
  auto F = make_field(2, 3);
  CHECK(F.modulus == std::vector<std::uint32_t>{1, 1, 0, 1});
}

TEST_CASE("prime fields use the degree-1 convention x") {
  auto F = make_field(5, 1);
  CHECK(F.modulus == std::vector<std::uint32_t>{0, 1});
  CHECK(F.size == 5);
}

TEST_CASE("make_field validates input") {
  CHECK_THROWS_AS(make_field(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_field(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_field(2, 21), std::invalid_argument);
}

TEST_CASE("multiplication by one is the identity") {
  for (auto [p, n] : {std::pair<std::uint32_t, std::uint32_t>{2, 4}, {3, 2}, {5, 2}, {7, 1}}) {
    auto F = make_field(p, n);
    for (std::uint64_t x = 0; x < F.size; ++x) CHECK(field_mul(F, x, 1) == x);
  }
}

TEST_CASE("field axioms hold exhaustively on small fields") {
  auto F = make_field(3, 2);
  for (std::uint64_t a = 0; a < F.size; ++a) {
    for (std::uint64_t b = 0; b < F.size; ++b) {
      CHECK(field_mul(F, a, b) == field_mul(F, b, a));
      CHECK(field_add(F, a, b) == field_add(F, b, a));
      for (std::uint64_t c = 0; c < F.size; ++c) {
        CHECK(field_mul(F, a, field_mul(F, b, c)) == field_mul(F, field_mul(F, a, b), c));
        CHECK(field_mul(F, a, field_add(F, b, c)) ==
              field_add(F, field_mul(F, a, b), field_mul(F, a, c)));
      }
    }
  }
}

TEST_CASE("frobenius fixes exactly the prime field in GF(4)") {
  auto F = make_field(2, 2);
  int fixed = 0;
  for (std::uint64_t x = 0; x < F.size; ++x) fixed += frobenius(F, x) == x;
  CHECK(fixed == 2);
}

TEST_CASE("x -> x^(2^5) fixes exactly 32 elements of GF(2^15)") {
  auto F = make_field(2, 15);
  std::uint64_t fixed = 0;
  for (std::uint64_t x = 0; x < F.size; ++x) fixed += field_pow(F, x, 32) == x;
  CHECK(fixed == 32);
}

TEST_CASE("frobenius iterated n times is the identity map") {
  for (auto [p, n] :
       {std::pair<std::uint32_t, std::uint32_t>{2, 10}, {3, 5}, {5, 4}, {2, 15}}) {
    auto F = make_field(p, n);
    REQUIRE(F.size <= (1u << 15));
    for (std::uint64_t x = 0; x < F.size; ++x) {
      std::uint64_t y = x;
      for (std::uint32_t k = 0; k < n; ++k) y = frobenius(F, y);
      CHECK(y == x);
    }
  }
}

TEST_CASE("element_of_order returns elements of exact order") {
  SUBCASE("d = 1 gives the multiplicative identity") {
    auto F = make_field(2, 4);
    CHECK(element_of_order(F, 1) == 1);
  }
  SUBCASE("GF(4) has an order-3 element outside the prime field") {
    auto F = make_field(2, 2);
    auto z = element_of_order(F, 3);
    CHECK(field_element_order(F, z) == 3);
    CHECK(z >= 2);  // not 0 or 1
  }
  SUBCASE("GF(2^15) has an element of order 151, verified by powering") {
    auto F = make_field(2, 15);
    auto z = element_of_order(F, 151);
    CHECK(field_pow(F, z, 151) == 1);
    // 151 is prime, so exact order 151 follows from z != 1.
    CHECK(z != 1);
    CHECK(field_element_order(F, z) == 151);
  }
  SUBCASE("divisibility violations are rejected") {
    auto F = make_field(2, 4);
    CHECK_THROWS_AS(element_of_order(F, 7), std::invalid_argument);
  }
}

TEST_CASE("pow matches repeated multiplication") {
  auto F = make_field(7, 2);
  for (std::uint64_t x : {std::uint64_t{0}, std::uint64_t{3}, std::uint64_t{11}}) {
    std::uint64_t acc = 1;
    for (std::uint64_t k = 0; k < 12; ++k) {
      CHECK(field_pow(F, x, k) == acc);
      acc = field_mul(F, acc, x);
    }
  }
}
