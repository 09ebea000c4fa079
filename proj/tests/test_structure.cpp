#include <doctest.h>

#include <numeric>

#include "corpus.hpp"
#include "cycgraph/structure.hpp"

using namespace cycgraph;

TEST_CASE("Frobenius kernel characterization") {
  auto a4 = corpus::a4();
  auto s4 = corpus::sym(4);
  CHECK(is_frobenius_with_kernel(a4, p_core(a4, 2)));
  // In S4 a transposition centralizes a double transposition, so V4 fails.
  CHECK(!is_frobenius_with_kernel(s4, p_core(s4, 2)));
  CHECK(!is_frobenius_with_kernel(s4, whole_group(s4)));
  CHECK(!is_frobenius_with_kernel(s4, trivial_subgroup(s4)));
}

TEST_CASE("two-Frobenius detection on S4") {
  auto G = corpus::sym(4);
  auto dec = detect_two_frobenius(G);
  REQUIRE(dec);
  CHECK(dec->K.order() == 4);
  CHECK(dec->L.order() == 12);
  CHECK(dec->H_order == 3);
  CHECK(dec->index_G_L == 2);
  CHECK(dec->D_order == 8);
  CHECK(dec->N_order == 6);
  CHECK(dec->case_label == TwoFrobeniusCase::B);
  REQUIRE(dec->p);
  CHECK(*dec->p == 2);
}

TEST_CASE("two-Frobenius detection on the order-168 family") {
  auto G = corpus::affine_group({{2, 3}}, 7, 3);
  auto dec = detect_two_frobenius(G);
  REQUIRE(dec);
  CHECK(dec->K.order() == 8);
  CHECK(dec->H_order == 7);
  CHECK(dec->index_G_L == 3);
  CHECK(dec->case_label == TwoFrobeniusCase::C);
  CHECK(*dec->p == 2);
}

TEST_CASE("Frobenius groups are not 2-Frobenius") {
  CHECK(!detect_two_frobenius(corpus::a4()));
  CHECK(!detect_two_frobenius(corpus::frobenius20()));
  CHECK(!detect_two_frobenius(corpus::cyclic(12)));
  CHECK(!detect_two_frobenius(corpus::q8()));
}

TEST_CASE("Frobenius detection") {
  auto a4 = corpus::a4();
  auto dec = detect_frobenius(a4);
  REQUIRE(dec);
  CHECK(dec->kernel.order() == 4);
  CHECK(dec->complement_order == 3);

  auto s3 = corpus::sym(3);
  auto dec3 = detect_frobenius(s3);
  REQUIRE(dec3);
  CHECK(dec3->kernel.order() == 3);
  CHECK(dec3->complement_order == 2);

  CHECK(!detect_frobenius(corpus::sym(4)));
}

TEST_CASE("Frobenius detection agrees with the exhaustive kernel oracle") {
  auto check_group = [](const EnumeratedGroup& G) {
    REQUIRE(G.order() <= 500);
    auto oracle = corpus::frobenius_kernel_order_oracle(G);
    auto detected = detect_frobenius(G);
    CHECK(oracle.has_value() == detected.has_value());
    if (oracle && detected) CHECK(*oracle == detected->kernel.order());
  };
  check_group(corpus::a4());
  check_group(corpus::sym(3));
  check_group(corpus::sym(4));
  check_group(corpus::frobenius20());
  check_group(corpus::frobenius21());
  check_group(corpus::dihedral(15));  // mixed kernel Z15
  check_group(corpus::dihedral(8));
  check_group(corpus::q8());
  check_group(corpus::cyclic(30));
  check_group(corpus::affine_group({{2, 2}}, 3, 2));
  check_group(corpus::affine_group({{5, 2}}, 3, 2));
}

TEST_CASE("cyclic complement search") {
  SUBCASE("S4: a subgroup of order 3 generated by a 3-cycle") {
    auto G = corpus::sym(4);
    auto dec = detect_two_frobenius(G);
    REQUIRE(dec);
    auto H = find_cyclic_complement(G, dec->L, dec->K);
    CHECK(H.order() == 3);
    for (std::size_t i : H.member_indices()) {
      if (i == G.identity_index()) continue;
      CHECK(element_order(G.element(i)) == 3);
      CHECK(!dec->K.contains(i));
    }
  }
  SUBCASE("order-150 family: complement of order 3") {
    auto G = corpus::affine_group({{5, 2}}, 3, 2);
    auto dec = detect_two_frobenius(G);
    REQUIRE(dec);
    CHECK(find_cyclic_complement(G, dec->L, dec->K).order() == 3);
  }
}

TEST_CASE("structure verification passes on S4") {
  auto G = corpus::sym(4);
  auto dec = detect_two_frobenius(G);
  REQUIRE(dec);
  auto report = verify_structure(G, *dec);
  CHECK(report.H_order == 3);
  CHECK(report.checks.size() == 5);
  CHECK(report.all_pass());
}

TEST_CASE("abelian groups cannot produce a decomposition to verify") {
  CHECK(!detect_two_frobenius(corpus::cyclic(12)));
  CHECK(!detect_frobenius(corpus::cyclic(12)));
}

TEST_CASE("verified decompositions satisfy the order arithmetic") {
  auto inspect = [](const EnumeratedGroup& G) {
    auto dec = detect_two_frobenius(G);
    REQUIRE(dec);
    CHECK(dec->K.order() * dec->H_order * dec->index_G_L == G.order());
    CHECK(std::gcd(dec->K.order(), dec->H_order) == std::uint64_t{1});
    CHECK(std::gcd(dec->H_order, dec->index_G_L) == std::uint64_t{1});
    CHECK(dec->H_order % 2 == 1);
    CHECK(verify_structure(G, *dec).all_pass());
  };
  inspect(corpus::sym(4));
  inspect(corpus::affine_group({{5, 2}}, 3, 2));
  inspect(corpus::affine_group({{2, 3}}, 7, 3));
  inspect(corpus::affine_group({{2, 2}, {5, 2}}, 3, 2));
  inspect(corpus::affine_group({{2, 4}}, 5, 2));
  inspect(corpus::affine_group({{3, 3}}, 13, 3));
}

TEST_CASE("caller-supplied chains are verified, not trusted") {
  auto G = corpus::sym(4);
  auto K = p_core(G, 2);
  auto L = normal_closure(G, {G.index_of(Permutation::from_cycles(4, {{0, 1, 2}}))});
  REQUIRE(L.order() == 12);
  auto dec = verify_two_frobenius(G, K, L);
  REQUIRE(dec);
  CHECK(dec->case_label == TwoFrobeniusCase::B);

  // Wrong chains are rejected: L = G, K = L, or a non-Frobenius kernel.
  CHECK(!verify_two_frobenius(G, K, whole_group(G)));
  CHECK(!verify_two_frobenius(G, K, K));
  CHECK(!verify_two_frobenius(G, trivial_subgroup(G), L));
  auto a4 = corpus::a4();
  CHECK(!verify_two_frobenius(a4, p_core(a4, 2), whole_group(a4)));
}

TEST_CASE("case classification is total and exclusive") {
  struct Expectation {
    EnumeratedGroup G;
    TwoFrobeniusCase expected;
  };
  std::vector<Expectation> cases;
  cases.push_back({corpus::sym(4), TwoFrobeniusCase::B});
  cases.push_back({corpus::affine_group({{5, 2}}, 3, 2), TwoFrobeniusCase::C});
  cases.push_back({corpus::affine_group({{2, 2}, {5, 2}}, 3, 2), TwoFrobeniusCase::A});
  for (const auto& [G, expected] : cases) {
    auto dec = detect_two_frobenius(G);
    REQUIRE(dec);
    CHECK(dec->case_label == expected);
    bool a = prime_factors(dec->K.order()).size() >= 2;
    bool b = !a && dec->p && is_p_power(dec->index_G_L, *dec->p);
    bool c = !a && dec->p && !is_p_power(dec->index_G_L, *dec->p);
    CHECK(int(a) + int(b) + int(c) == 1);
  }
}
