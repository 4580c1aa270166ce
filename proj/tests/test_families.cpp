#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "signed_spectra/families.hpp"

using namespace signed_spectra;

TEST_CASE("generate pins the block matrices exactly") {
  // TJ(2,2) = [[0,1,1,1],[1,0,1,1],[1,1,0,-1],[1,1,-1,0]]
  SignedGraph tj = generate(parse_instance("TJ(2,2)"));
  SignedGraph tj_expect =
      build(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, -1}});
  CHECK(tj == tj_expect);

  // A3(1,1) = [[0,1,1,0],[1,0,1,-1],[1,1,0,1],[0,-1,1,0]]
  SignedGraph a3 = generate(parse_instance("A3(1,1)"));
  SignedGraph a3_expect =
      build(4, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {1, 3, -1}, {2, 3, 1}});
  CHECK(a3 == a3_expect);

  for (auto text : {"A5(3,8,1)", "A5(4,6,1)", "A5(6,5,1)"}) {
    SignedGraph g = generate(parse_instance(text), /*allow_a5_k1=*/true);
    for (auto e : g.edges()) CHECK(e.sign == +1);
  }
}

TEST_CASE("constraint violations are named") {
  CHECK_THROWS_WITH(generate(parse_instance("TJ(1,5)")),
                    Catch::Matchers::ContainsSubstring("m,l >= 2"));
  CHECK_THROWS_WITH(generate(parse_instance("A5(3,8,1)")),
                    Catch::Matchers::ContainsSubstring("k >= 2"));
  CHECK_THROWS_WITH(generate(parse_instance("A5(2,8,3)")),
                    Catch::Matchers::ContainsSubstring("(m,l)"));
  CHECK_THROWS_WITH(generate(parse_instance("A12(5,3,3,6)")),
                    Catch::Matchers::ContainsSubstring("(m,l,k,j)"));
  CHECK_THROWS(parse_instance("A3(1)"));
  CHECK_THROWS(parse_instance("A20(1,1)"));
  CHECK_THROWS(parse_instance("A3(1,x)"));
}

TEST_CASE("instance text round trip") {
  for (auto text : {"TJ(2,7)", "A5(3,8,2)", "A12(6,3,3,6)", "A16()", "A9(4)"}) {
    FamilyInstance inst = parse_instance(text);
    CHECK(to_string(inst) == text);
    CHECK(parse_instance(to_string(inst)) == inst);
  }
  CHECK(to_string(parse_instance("A16")) == "A16()");
}

TEST_CASE("claimed spectra on pinned instances") {
  auto a2 = claimed_spectrum(parse_instance("A2(2,2)"));
  CHECK(a2.mult_plus1 == 3);
  CHECK(a2.mult_minus1 == 3);
  CHECK(a2.residual == IntPolynomial{-17, 0, 1});

  auto a16 = claimed_spectrum(parse_instance("A16()"));
  CHECK(a16.mult_plus1 == 4);
  CHECK(a16.mult_minus1 == 4);
  CHECK(a16.residual == IntPolynomial{-17, 0, 1});

  auto a10 = claimed_spectrum(parse_instance("A10(3,4)"));
  CHECK(a10.mult_plus1 == 6);
  CHECK(a10.mult_minus1 == 6);
  CHECK(a10.residual == IntPolynomial{-36, 0, 1});

  // A3(2,3): spectrum {-1^2, 1^3, -4, 3}
  auto a3 = claimed_spectrum(parse_instance("A3(2,3)"));
  CHECK(a3.mult_plus1 == 3);
  CHECK(a3.mult_minus1 == 2);
  CHECK(a3.residual == IntPolynomial{-12, 1, 1});
}

TEST_CASE("verify_instance") {
  CHECK(bool(verify_instance(parse_instance("A2(2,2)"))));
  CHECK(bool(verify_instance(parse_instance("A3(2,3)"))));
  CHECK(bool(verify_instance(parse_instance("TJ(2,2)"))));

  // A deliberately corrupted matrix no longer matches the claim.
  FamilyInstance inst = parse_instance("A2(2,2)");
  SignedGraph g = generate(inst);
  auto claimed = claimed_spectrum(inst);
  std::vector<SignedEdge> edges = g.edges();
  edges[0].sign = -edges[0].sign;
  auto flipped = exact_spectrum(build(g.order(), edges));
  bool matches = flipped.mult_plus1 == claimed.mult_plus1 &&
                 flipped.mult_minus1 == claimed.mult_minus1 &&
                 flipped.residual == claimed.residual;
  CHECK_FALSE(matches);
}

TEST_CASE("every instance up to order 14 verifies and is a connected member") {
  for (const auto& inst : enumerate_instances(14)) {
    CAPTURE(to_string(inst));
    auto r = verify_instance(inst);
    REQUIRE(r.ok);
    SignedGraph g = generate(inst);
    auto f = structure(g);
    CHECK(f.connected);
    CHECK(f.complete == (inst.family == Family::TJ));
    CHECK(in_class_G(g).member);
  }
}

TEST_CASE("claimed multiplicities always sum to the order") {
  for (const auto& inst : enumerate_instances(30)) {
    auto c = claimed_spectrum(inst);
    CHECK(c.mult_plus1 + c.mult_minus1 + 2 == instance_order(inst));
  }
}

TEST_CASE("negation identities for A2, A3, A4") {
  CHECK(identity_checks(Family::A2, 2, 3));
  CHECK(identity_checks(Family::A3, 1, 2));
  CHECK(identity_checks(Family::A4, 1, 1));
  CHECK(identity_checks(Family::TJ, 2, 3));
  CHECK_THROWS(identity_checks(Family::A1, 2, 2));
}

TEST_CASE("several symmetric-spectrum cases are switching isomorphic to their negatives") {
  // Not all: a symmetric spectrum only makes the negative cospectral. The
  // interchange identity forces it for the m == l cases of TJ/A2/A3/A4, and
  // A16/A17 have it too; A1(2,l), A6 and A8(1) are symmetric-spectrum
  // counterexamples (their negatives are separate classes).
  std::vector<std::string> self_negative, not_self;
  for (const auto& inst : enumerate_instances(12)) {
    auto c = claimed_spectrum(inst);
    if (c.mult_plus1 != c.mult_minus1 || c.residual.coeff(1) != 0) continue;
    SignedGraph g = generate(inst);
    (switching_isomorphic(g, negated(g)) ? self_negative : not_self)
        .push_back(to_string(inst));
  }
  for (const auto& name : {"TJ(2,2)", "TJ(6,6)", "A2(2,2)", "A2(3,3)", "A3(1,1)",
                           "A3(5,5)", "A4(4,4)", "A16()", "A17()"})
    CHECK(std::count(self_negative.begin(), self_negative.end(), name) == 1);
  for (const auto& name : {"A1(2,2)", "A6(1,3,4)", "A8(1)", "A2(2,3)"})
    CHECK(std::count(not_self.begin(), not_self.end(), name) == 1);
  CHECK(self_negative.size() == 18);  // frozen after first derivation
  CHECK(not_self.size() == 11);
}

TEST_CASE("enumerate_instances respects the size table") {
  for (const auto& inst : enumerate_instances(24)) {
    CHECK(instance_order(inst) <= 24);
    CHECK(instance_order(inst) == generate(inst).order());
  }
  for (const auto& inst : instances_of_order(10)) CHECK(instance_order(inst) == 10);
  // Spot sizes: TJ m+l, A1 m+2l, A8 m+7, A17 fixed 10.
  CHECK(instance_order(parse_instance("TJ(3,4)")) == 7);
  CHECK(instance_order(parse_instance("A1(2,3)")) == 8);
  CHECK(instance_order(parse_instance("A8(2)")) == 9);
  CHECK(instance_order(parse_instance("A17()")) == 10);
  CHECK(instance_order(parse_instance("A19(4,2)")) == 13);
}
