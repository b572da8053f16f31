#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gti/enumeration.hpp"
#include "gti/families.hpp"
#include "gti/graph.hpp"

using namespace gti;

TEST_CASE("buildGraph basics") {
  Graph k3 = buildGraph(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(k3.n() == 3);
  CHECK(k3.m() == 3);

  Graph k2 = buildGraph(2, {{0, 1}, {1, 0}});  // duplicate collapsed
  CHECK(k2.m() == 1);

  CHECK_THROWS_AS(buildGraph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(buildGraph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(buildGraph(2, {{-1, 0}}), std::invalid_argument);
}

TEST_CASE("degreeProfile") {
  DegreeProfile s = degreeProfile(starGraph(5));  // K_{1,4}
  CHECK(s.maxDeg == 4);
  CHECK(s.minDeg == 1);
  CHECK(s.minNonPendant == 4);
  CHECK(s.pendantCount == 4);
  CHECK(s.m == 4);

  DegreeProfile c5 = degreeProfile(cycleGraph(5));
  CHECK(c5.maxDeg == 2);
  CHECK(c5.minDeg == 2);
  CHECK(c5.minNonPendant == 2);
  CHECK(c5.pendantCount == 0);
  CHECK(c5.m == 5);
  CHECK(c5.avgDeg == doctest::Approx(2.0));

  DegreeProfile k2 = degreeProfile(buildGraph(2, {{0, 1}}));
  CHECK(k2.maxDeg == 1);
  CHECK(k2.pendantCount == 2);
  CHECK_FALSE(k2.minNonPendant.has_value());  // δ₁ undefined: every vertex pendant
}

TEST_CASE("classify families") {
  GraphClass s = classify(starGraph(6));  // K_{1,5}
  CHECK(s.star);
  CHECK(s.semiregular);
  CHECK(s.semiS == 5);
  CHECK(s.semiR == 1);
  CHECK(s.completeBipartite);
  CHECK(s.cbP == 1);
  CHECK(s.cbQ == 5);
  CHECK_FALSE(s.regular);

  GraphClass k4 = classify(completeGraph(4));
  CHECK(k4.regular);
  CHECK(k4.regularDegree == 3);
  CHECK(k4.complete);
  CHECK_FALSE(k4.semiregular);
  CHECK_FALSE(k4.star);

  GraphClass p4 = classify(pathGraph(4));
  CHECK(p4.path);
  CHECK(p4.semiregular);  // degrees {2,1}
  CHECK(p4.semiS == 2);
  CHECK_FALSE(p4.star);
  CHECK_FALSE(p4.cycle);
  CHECK_FALSE(p4.complete);

  CHECK(classify(completeGraph(3)).k3);
  CHECK(classify(cycleGraph(7)).cycle);
  CHECK(classify(pathGraph(3)).star);  // P3 = K_{1,2}
  CHECK(classify(completeBipartiteGraph(2, 3)).completeBipartite);
  CHECK_FALSE(classify(disjointUnion(completeGraph(2), emptyGraph(1))).connected);
}

TEST_CASE("isConnected") {
  CHECK(isConnected(emptyGraph(1)));
  CHECK(isConnected(cycleGraph(7)));
  CHECK_FALSE(isConnected(disjointUnion(completeGraph(2), emptyGraph(1))));
  CHECK_FALSE(isConnected(emptyGraph(2)));
}

TEST_CASE("deleteEdge") {
  Graph p3 = deleteEdge(completeGraph(3), 0, 1);
  CHECK(p3.m() == 2);
  CHECK(canonicalForm(p3) == canonicalForm(pathGraph(3)));

  Graph e2 = deleteEdge(completeGraph(2), 0, 1);
  CHECK(e2.m() == 0);
  CHECK_FALSE(isConnected(e2));

  Graph split = deleteEdge(pathGraph(3), 0, 1);  // K2 ∪ K1
  CHECK_FALSE(isConnected(split));
  CHECK(split.edges() == std::vector<Edge>{{1, 2}});

  // original untouched
  Graph k3 = completeGraph(3);
  deleteEdge(k3, 0, 1);
  CHECK(k3.m() == 3);

  CHECK_THROWS_AS(deleteEdge(pathGraph(3), 0, 2), std::invalid_argument);
}

TEST_CASE("family constructions") {
  Graph l62 = lnkGraph(6, 2);
  DegreeProfile p = degreeProfile(l62);
  CHECK(p.m == 9);  // 1 + 2*4
  CHECK(p.degreeSequence == std::vector<int>{5, 5, 2, 2, 2, 2});

  CHECK(canonicalForm(lnkGraph(6, 1)) == canonicalForm(starGraph(6)));
  CHECK(canonicalForm(lnkGraph(6, 5)) == canonicalForm(completeGraph(6)));
  CHECK(canonicalForm(joinGraphs(completeGraph(2), emptyGraph(2))) ==
        canonicalForm(deleteEdge(completeGraph(4), 0, 1)));

  CHECK_THROWS_AS(lnkGraph(5, 0), std::invalid_argument);
  CHECK_THROWS_AS(lnkGraph(5, 5), std::invalid_argument);
  CHECK_THROWS_AS(cycleGraph(2), std::invalid_argument);
}

TEST_CASE("handshake over enumerated graphs") {
  for (int n = 1; n <= 6; n++)
    for (const Graph& g : enumerateConnected(n)) {
      long long degSum = 0;
      for (int v = 0; v < g.n(); v++) degSum += g.degree(v);
      CHECK(degSum == 2 * g.m());
    }
}

TEST_CASE("complement is an involution") {
  // exhaustive over all labeled graphs on 4 and 5 vertices
  for (int n = 4; n <= 5; n++) {
    int pairs = n * (n - 1) / 2;
    for (int bits = 0; bits < (1 << pairs); bits++) {
      std::vector<Edge> es;
      int idx = 0;
      for (int j = 1; j < n; j++)
        for (int i = 0; i < j; i++, idx++)
          if (bits & (1 << idx)) es.emplace_back(i, j);
      Graph g = buildGraph(n, es);
      CHECK(complementGraph(complementGraph(g)) == g);
    }
  }
  // random graphs up to n = 8
  std::mt19937 rng(12345);
  for (int t = 0; t < 2000; t++) {
    int n = 1 + static_cast<int>(rng() % 8);
    std::vector<Edge> es;
    for (int i = 0; i < n; i++)
      for (int j = i + 1; j < n; j++)
        if (rng() & 1) es.emplace_back(i, j);
    Graph g = buildGraph(n, es);
    CHECK(complementGraph(complementGraph(g)) == g);
  }
}

TEST_CASE("classify agreement over the enumeration") {
  for (int n = 2; n <= 6; n++)
    for (const Graph& g : enumerateConnected(n)) {
      DegreeProfile p = degreeProfile(g);
      GraphClass c = classify(g);
      CHECK(c.regular == (p.maxDeg == p.minDeg));
      bool starSeq = p.degreeSequence[0] == n - 1;
      for (size_t i = 1; i < p.degreeSequence.size(); i++)
        starSeq = starSeq && p.degreeSequence[i] == 1;
      CHECK(c.star == starSeq);
      if (c.semiregular) {
        CHECK(c.semiS > c.semiR);
        CHECK_FALSE(c.regular);
      }
    }
}
