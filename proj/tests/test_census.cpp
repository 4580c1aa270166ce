#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "signed_spectra/census.hpp"

using namespace signed_spectra;

namespace {

SignedGraph k3(int negatives) {
  std::vector<SignedEdge> es = {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}};
  for (int i = 0; i < negatives; ++i) es[i].sign = -1;
  return build(3, es);
}

}  // namespace

TEST_CASE("switching isomorphism on pinned pairs") {
  std::mt19937 rng(321);
  for (int it = 0; it < 300; ++it) {
    SignedGraph g = oracles::random_signed_graph(rng, 7);
    VertexSet x = oracles::random_subset(rng, g.order());
    auto w = switching_isomorphic(g, switched(g, x));
    REQUIRE(w.has_value());
    CHECK(check_iso_witness(g, switched(g, x), *w));
  }

  CHECK(switching_isomorphic(k3(1), k3(3)).has_value());
  CHECK_FALSE(switching_isomorphic(k3(1), k3(0)).has_value());
  CHECK_FALSE(switching_isomorphic(k3(0), build(3, {{0, 1, 1}, {1, 2, 1}})).has_value());
}

TEST_CASE("switching isomorphism behaves like an equivalence relation") {
  std::mt19937 rng(654);
  for (int it = 0; it < 200; ++it) {
    SignedGraph a = oracles::random_signed_graph(rng, 6);
    CHECK(switching_isomorphic(a, a).has_value());  // reflexive
    // symmetric + transitive across switched/relabeled copies
    std::vector<int> p = oracles::random_permutation(rng, a.order());
    SignedGraph b = switched(relabeled(a, p), oracles::random_subset(rng, a.order()));
    std::vector<int> q = oracles::random_permutation(rng, a.order());
    SignedGraph c = switched(relabeled(b, q), oracles::random_subset(rng, a.order()));
    CHECK(switching_isomorphic(b, a).has_value());
    CHECK(switching_isomorphic(a, c).has_value());
  }
}

TEST_CASE("canonical codes: invariance, separation, representative stability") {
  // Exhaustive over all signed graphs on up to 4 vertices.
  std::mt19937 rng(777);
  for (int n = 0; n <= 4; ++n) {
    oracles::for_all_signed_graphs(n, [&](const SignedGraph& g) {
      std::vector<int> p = oracles::random_permutation(rng, n);
      VertexSet x = oracles::random_subset(rng, n);
      CHECK(canonical_code(g) == canonical_code(switched(relabeled(g, p), x)));
      SignedGraph rep = canonical_form(g);
      CHECK(canonical_code(rep) == canonical_code(g));
      CHECK(to_sg1(rep) == canonical_code(g).code);
    });
  }
  CHECK_FALSE(canonical_code(k3(1)) == canonical_code(k3(0)));
  CHECK(canonical_code(k3(1)) == canonical_code(k3(3)));
}

TEST_CASE("codes agree with pairwise switching isomorphism on order 4") {
  std::map<std::string, SignedGraph> reps;
  oracles::for_all_signed_graphs(4, [&](const SignedGraph& g) {
    auto code = canonical_code(g).code;
    auto it = reps.find(code);
    if (it == reps.end()) {
      reps.emplace(code, g);
    } else {
      CHECK(switching_isomorphic(g, it->second).has_value());
    }
  });
  CHECK(reps.size() == 18);
  // Distinct codes really are distinct classes.
  for (auto a = reps.begin(); a != reps.end(); ++a)
    for (auto b = std::next(a); b != reps.end(); ++b)
      CHECK_FALSE(switching_isomorphic(a->second, b->second).has_value());
}

TEST_CASE("class counts at small orders") {
  CensusOptions conn;
  conn.connected_only = true;
  CHECK(enumerate_classes(2, conn).size() == 1);
  CHECK(enumerate_classes(3, conn).size() == 3);  // P3 plus two K3 classes
  CHECK(enumerate_classes(5, conn).size() == 79);  // frozen after first derivation

  // All graphs (not only connected): 1, 2, 5, 18, 100, 1242.
  const long long expect[] = {1, 2, 5, 18, 100, 1242};
  for (int n = 1; n <= 6; ++n) CHECK(enumerate_classes(n).size() == size_t(expect[n - 1]));

  CHECK_THROWS(enumerate_classes(8));  // default cap is 7
}

TEST_CASE("class counts match the Burnside orbit count") {
  // Independent route: orbits of Aut(U) acting on normalized co-tree
  // signatures, counted as average fixed points.
  for (int n = 1; n <= 5; ++n) {
    long long direct = static_cast<long long>(enumerate_classes(n).size());
    long long burnside_total = 0;
    for (const SignedGraph& u : underlying_graphs(n)) {
      auto uc = detail::canonical_underlying(u);
      auto forest = detail::forest_info(u);
      const uint64_t space = uint64_t(1) << forest.cotree.size();
      long long fixed = 0;
      for (const auto& aut : uc.automorphisms)
        for (uint64_t vec = 0; vec < space; ++vec) {
          SignedGraph g = detail::graph_from_bits(u, forest, vec);
          if (detail::normalized_cotree_bits(relabeled(g, aut), forest) == vec) ++fixed;
        }
      REQUIRE(fixed % static_cast<long long>(uc.automorphisms.size()) == 0);
      burnside_total += fixed / static_cast<long long>(uc.automorphisms.size());
    }
    CHECK(burnside_total == direct);
  }
}

TEST_CASE("classification of pinned graphs") {
  auto classify_one = [](const SignedGraph& g) {
    SignedGraph rep = canonical_form(g);
    FamilyIndex idx = FamilyIndex::build(g.order());
    return classify(rep, exact_spectrum(rep), to_sg1(rep), idx);
  };

  auto k2 = classify_one(build(2, {{0, 1, 1}}));
  CHECK(k2.verdict == Verdict::UNSIGNED_TYPE);
  CHECK(k2.balanced);

  auto tj = classify_one(generate(parse_instance("TJ(2,2)")));
  REQUIRE(tj.verdict == Verdict::COMPLETE_TYPE);
  CHECK(to_string(*tj.instance) == "TJ(2,2)");

  auto a3 = classify_one(generate(parse_instance("A3(1,1)")));
  REQUIRE(a3.verdict == Verdict::FAMILY);
  CHECK(to_string(*a3.instance) == "A3(1,1)");

  auto p3 = classify_one(build(3, {{0, 1, 1}, {1, 2, 1}}));
  CHECK(p3.verdict == Verdict::NOT_IN_G);

  auto k2k2 = classify_one(build(4, {{0, 1, 1}, {2, 3, -1}}));
  CHECK(k2k2.verdict == Verdict::DISCONNECTED_TYPE);
  CHECK(k2k2.parts.size() == 2);
}

TEST_CASE("every verdict witness re-checks across the order-5 census") {
  for (const auto& rec : enumerate_classes(5)) {
    CAPTURE(rec.code);
    const auto& o = rec.outcome;
    switch (o.verdict) {
      case Verdict::FAMILY:
      case Verdict::COMPLETE_TYPE: {
        REQUIRE(o.instance.has_value());
        SignedGraph target = generate(*o.instance);
        if (o.negated_instance) target = negated(target);
        CHECK(check_iso_witness(target, rec.representative, *o.witness));
        bool complete = structure(rec.representative).complete;
        CHECK(complete == (o.verdict == Verdict::COMPLETE_TYPE));
        break;
      }
      case Verdict::UNSIGNED_TYPE: {
        SignedGraph base = o.balanced ? rec.representative : negated(rec.representative);
        for (auto e : switched(base, o.unsigned_switching).edges()) CHECK(e.sign == 1);
        break;
      }
      case Verdict::DISCONNECTED_TYPE:
        CHECK(o.parts.size() >= 2);
        CHECK(components(rec.representative).size() == o.parts.size());
        break;
      case Verdict::NOT_IN_G:
        CHECK(rec.spectrum.residual.degree() > 2);
        break;
      case Verdict::BIPARTITE_TYPE:
        FAIL("bipartite member that is neither balanced nor antibalanced");
        break;
      case Verdict::UNEXPLAINED:
        FAIL("unexplained record at order 5");
        break;
    }
  }
}

TEST_CASE("census structure properties at order up to 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& rec : enumerate_classes(n)) {
      const SignedGraph& g = rec.representative;
      bool member = rec.spectrum.residual.degree() <= 2;
      // Smallest eigenvalue >= -1 forces a disjoint union of cliques.
      auto a = adjacency_matrix<BigRat>(g);
      for (int i = 0; i < n; ++i) a(i, i) += 1;
      if (inertia(a).n_neg == 0) {
        for (const auto& comp : components(g))
          CHECK(is_complete_underlying(induced(g, comp)));
      }
      // Bipartite members are balanced or antibalanced.
      if (member && is_bipartite_underlying(g))
        CHECK((is_balanced(g) || is_antibalanced(g)));
      // Disconnected members without isolated vertices/edges split into two
      // switching-unsigned complete parts.
      auto f = structure(g);
      if (member && !f.connected && !f.has_isolated_vertex && !f.has_isolated_edge) {
        auto comps = components(g);
        CHECK(comps.size() == 2);
        for (const auto& comp : comps) {
          SignedGraph h = induced(g, comp);
          CHECK(is_complete_underlying(h));
          CHECK((is_balanced(h) || is_antibalanced(h)));
        }
      }
      // Connected non-complete members have r > 1 and s < -1.
      if (member && f.connected && !f.complete && rec.spectrum.residual.degree() == 2) {
        CHECK(rec.spectrum.residual(BigInt(1)) < 0);
        CHECK(rec.spectrum.residual(BigInt(-1)) < 0);
      }
    }
  }
}

TEST_CASE("census filters") {
  CensusOptions opts;
  opts.connected_only = true;
  opts.min_degree = 2;
  for (const auto& rec : enumerate_classes(5, opts)) {
    auto f = structure(rec.representative);
    CHECK(f.connected);
    CHECK(f.min_degree >= 2);
  }
  CensusOptions prune;
  prune.forbidden_prune = true;
  for (const auto& rec : enumerate_classes(5, prune))
    CHECK_FALSE(scan(rec.representative).has_value());
}

TEST_CASE("run_census output is deterministic across job counts") {
  std::vector<std::string> codes1, codes4;
  auto r1 = run_census(5, 1, {}, [&](const CensusRecord& r) { codes1.push_back(r.code); });
  auto r4 = run_census(5, 4, {}, [&](const CensusRecord& r) { codes4.push_back(r.code); });
  CHECK(codes1 == codes4);
  CHECK(r1.ok);
  CHECK(r4.ok);
  REQUIRE(r1.orders.size() == 5);
  CHECK(r1.orders[4].classes == 100);
  CHECK(r1.orders[3].by_verdict.at("FAMILY") == 1);
  CHECK(r1.orders[3].by_verdict.at("COMPLETE_TYPE") == 1);
}
