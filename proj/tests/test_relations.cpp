#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "gti/enumeration.hpp"
#include "gti/families.hpp"
#include "gti/indices.hpp"
#include "gti/relations.hpp"

using namespace gti;

namespace {
GraphStats stats(const Graph& g) { return graphStats(g); }
}  // namespace

TEST_CASE("T7: GA <= AG <= coefficient * GA") {
  auto [l7, r7] = relationT7(stats(cycleGraph(7)));
  CHECK(l7.equality);      // regular: GA = AG = 7
  CHECK(l7.extremalMatch);
  CHECK(r7.holds);
  CHECK_FALSE(r7.equality);  // coefficient 64/48 > 1

  auto [ls, rs] = relationT7(stats(starGraph(5)));
  CHECK_FALSE(ls.equality);
  CHECK(rs.equality);  // AG/GA = 25/16 = n²/(4(n-1))
  CHECK(rs.extremalMatch);

  auto [lp, rp] = relationT7(stats(pathGraph(4)));
  CHECK(lp.holds);
  CHECK_FALSE(lp.equality);
  CHECK(rp.holds);
  CHECK_FALSE(rp.equality);

  auto [lk, rk] = relationT7(stats(completeGraph(5)));
  CHECK(lk.equality);
  CHECK(rk.equality);  // coefficient 1 on K_n
}

TEST_CASE("C5") {
  CHECK(relationC5(stats(starGraph(10))).equality);
  RelationReport k5 = relationC5(stats(completeGraph(5)));
  CHECK(k5.holds);
  CHECK_FALSE(k5.equality);  // AG = GA but coefficient > 1
  RelationReport c4 = relationC5(stats(cycleGraph(4)));
  CHECK(c4.holds);
  CHECK_FALSE(c4.equality);
}

TEST_CASE("T9 requires minimum degree 2") {
  auto [l8, r8] = relationT9(stats(cycleGraph(8)));
  CHECK(l8.applicable);
  CHECK(l8.equality);  // cycles saturate the left side: √2 · 8/√2 = 8 = AG
  CHECK(l8.extremalMatch);
  CHECK(r8.holds);
  CHECK_FALSE(r8.equality);

  auto [l6, r6] = relationT9(stats(completeGraph(6)));
  CHECK(r6.rhs == doctest::Approx(15.0).epsilon(1e-12));  // (5/√8)·6√2 = 15 = AG
  CHECK(r6.equality);
  CHECK(r6.extremalMatch);
  CHECK(l6.equality);  // complete graphs are δ-regular too

  auto diamond = stats(deleteEdge(completeGraph(4), 0, 1));
  auto [ld, rd] = relationT9(diamond);
  CHECK(ld.holds);
  CHECK_FALSE(ld.equality);
  CHECK(rd.holds);
  CHECK_FALSE(rd.equality);

  CHECK_FALSE(relationT9(stats(pathGraph(4))).first.applicable);
}

TEST_CASE("ABC remark: AG > √2·ABC unless a cycle") {
  RelationReport c5 = abcRemark(stats(cycleGraph(5)));
  CHECK(c5.equality);
  CHECK(c5.extremalMatch);

  RelationReport k4 = abcRemark(stats(completeGraph(4)));
  CHECK(k4.lhs == doctest::Approx(std::sqrt(2.0) * 4.0).epsilon(1e-12));
  CHECK(k4.rhs == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(k4.holds);
  CHECK_FALSE(k4.equality);

  RelationReport pet = abcRemark(stats(petersenGraph()));
  CHECK(pet.holds);
  CHECK_FALSE(pet.equality);

  CHECK_FALSE(abcRemark(stats(starGraph(4))).applicable);
}

TEST_CASE("T10") {
  auto [ls, rs] = relationT10(stats(starGraph(5)));
  CHECK(ls.lhs == doctest::Approx(5.0).epsilon(1e-12));  // (5/17)·17 = 5 = AG
  CHECK(ls.equality);
  CHECK(ls.extremalMatch);
  CHECK(rs.holds);
  CHECK_FALSE(rs.equality);

  auto [lc, rc] = relationT10(stats(cycleGraph(6)));
  CHECK(rc.rhs == doctest::Approx(6.0).epsilon(1e-12));  // SDD/2 = 6 = AG
  CHECK(rc.equality);
  CHECK(rc.extremalMatch);
  CHECK(lc.holds);
  CHECK_FALSE(lc.equality);

  auto [lp, rp] = relationT10(stats(pathGraph(4)));
  CHECK(lp.holds);
  CHECK_FALSE(lp.equality);
  CHECK(rp.holds);
  CHECK_FALSE(rp.equality);
}

TEST_CASE("per-edge reciprocity implies GA <= AG") {
  for (int n = 2; n <= 6; n++)
    for (const Graph& g : enumerateConnected(n)) {
      IndexVector iv = indexVector(g);
      for (const EdgeTerm& t : edgeTerms(g)) CHECK(t.gaTerm <= t.agTerm + 1e-15);
      CHECK(iv.ga <= iv.ag + 1e-12);
    }
}

TEST_CASE("AG > ABC whenever Δ-δ <= 3") {
  for (int n = 2; n <= 6; n++)
    for (const Graph& g : enumerateConnected(n)) {
      DegreeProfile p = degreeProfile(g);
      if (p.maxDeg - p.minDeg > 3) continue;
      IndexVector iv = indexVector(g);
      CHECK(iv.ag > iv.abc);
    }
  // the two named trees the bound's history singles out
  IndexVector k14 = indexVector(starGraph(5));
  CHECK(k14.ag > k14.abc);
  IndexVector tstar = indexVector(doubleStar(3, 3));
  CHECK(tstar.ag > tstar.abc);
}

TEST_CASE("exhaustive soundness and equality-class agreement, n <= 6") {
  for (int n = 2; n <= 6; n++)
    for (const Graph& g : enumerateConnected(n))
      for (const RelationReport& r : verifyRelations(g)) {
        if (!r.applicable) continue;
        CHECK(r.holds);
        CHECK(r.equality == r.extremalMatch);
        CHECK_FALSE(r.anomaly);
      }
}

TEST_CASE("disconnected and edgeless graphs are flagged") {
  for (const RelationReport& r : verifyRelations(disjointUnion(completeGraph(3), completeGraph(2))))
    CHECK_FALSE(r.applicable);
  for (const RelationReport& r : verifyRelations(emptyGraph(1))) CHECK_FALSE(r.applicable);
}
