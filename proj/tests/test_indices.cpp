#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "gti/enumeration.hpp"
#include "gti/families.hpp"
#include "gti/indices.hpp"

using namespace gti;

TEST_CASE("closed-form fixtures") {
  IndexVector k4 = indexVector(completeGraph(4));
  CHECK(k4.ga == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(k4.ag == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(k4.m1 == 36);
  CHECK(k4.m2 == 54);
  CHECK(k4.f == 108);
  CHECK(k4.sdd == doctest::Approx(12.0).epsilon(1e-12));
  CHECK(k4.abc == doctest::Approx(4.0).epsilon(1e-12));

  IndexVector s = indexVector(starGraph(5));  // K_{1,4}
  CHECK(s.ga == doctest::Approx(3.2).epsilon(1e-12));
  CHECK(s.ag == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(s.m1 == 20);
  CHECK(s.m2 == 16);
  CHECK(s.f == 68);
  CHECK(s.sdd == doctest::Approx(17.0).epsilon(1e-12));
  CHECK(s.abc == doctest::Approx(2.0 * std::sqrt(3.0)).epsilon(1e-12));

  IndexVector p4 = indexVector(pathGraph(4));
  CHECK(p4.ga == doctest::Approx(1.0 + 4.0 * std::sqrt(2.0) / 3.0).epsilon(1e-12));
  CHECK(p4.ag == doctest::Approx(1.0 + 3.0 / std::sqrt(2.0)).epsilon(1e-12));

  IndexVector k2 = indexVector(completeGraph(2));
  CHECK(k2.abc == 0.0);  // (1,1) edge: √0, well-defined
  CHECK(k2.ga == 1.0);

  IndexVector empty = indexVector(emptyGraph(3));
  CHECK(empty.ga == 0.0);
  CHECK(empty.m1 == 0);
}

TEST_CASE("edge terms") {
  auto c5 = edgeTerms(cycleGraph(5));
  REQUIRE(c5.size() == 5);
  for (const EdgeTerm& t : c5) CHECK(t.gaTerm == doctest::Approx(1.0).epsilon(1e-15));

  auto k13 = edgeTerms(starGraph(4));
  CHECK(k13[0].gaTerm == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-15));
  CHECK(k13[0].agTerm == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-15));
}

TEST_CASE("per-edge invariants over the enumeration") {
  for (int n = 2; n <= 6; n++)
    for (const Graph& g : enumerateConnected(n)) {
      IndexVector iv = indexVector(g);
      double reciprocalSum = 0.0;
      for (const EdgeTerm& t : edgeTerms(g)) {
        CHECK(t.gaTerm <= 1.0 + 1e-15);
        CHECK(t.agTerm >= 1.0 - 1e-15);
        CHECK(t.gaTerm * t.agTerm == doctest::Approx(1.0).epsilon(1e-15));
        CHECK((t.gaTerm == doctest::Approx(1.0).epsilon(1e-14)) == (t.du == t.dv));
        reciprocalSum += 1.0 / t.gaTerm;
      }
      CHECK(iv.ag == doctest::Approx(reciprocalSum).epsilon(1e-12));
      CHECK(iv.ga <= g.m() + 1e-9);
      CHECK(iv.ag >= g.m() - 1e-9);

      // GA = m ⇔ AG = m ⇔ regular, for connected graphs
      bool regular = classify(g).regular;
      CHECK((std::fabs(iv.ga - g.m()) < 1e-9) == regular);
      CHECK((std::fabs(iv.ag - g.m()) < 1e-9) == regular);

      // AG >= M1/(2Δ)
      CHECK(iv.ag >= static_cast<double>(iv.m1) / (2.0 * degreeProfile(g).maxDeg) - 1e-9);
    }
}

TEST_CASE("closed forms match direct evaluation") {
  auto close = [](const IndexVector& a, const IndexVector& b) {
    auto rel = [](double x, double y) {
      double scale = std::max({1.0, std::fabs(x), std::fabs(y)});
      return std::fabs(x - y) / scale;
    };
    CHECK(rel(a.ga, b.ga) < 1e-10);
    CHECK(rel(a.ag, b.ag) < 1e-10);
    CHECK(rel(a.abc, b.abc) < 1e-10);
    CHECK(rel(a.sdd, b.sdd) < 1e-10);
    CHECK(a.m1 == b.m1);
    CHECK(a.m2 == b.m2);
    CHECK(a.f == b.f);
  };
  for (int n : {2, 3, 5, 17, 60, 200}) {
    close(familyClosedForms("K", n), indexVector(completeGraph(n)));
    if (n >= 2) close(familyClosedForms("star", n), indexVector(starGraph(n)));
    close(familyClosedForms("P", n), indexVector(pathGraph(n)));
    if (n >= 3) close(familyClosedForms("C", n), indexVector(cycleGraph(n)));
  }
  for (int p : {1, 2, 7})
    for (int q : {1, 3, 50}) close(familyClosedForms("Kpq", p, q), indexVector(completeBipartiteGraph(p, q)));
  for (int n : {4, 6, 12, 60, 200})
    for (int k : {1, 2, 3, n / 2, n - 1})
      close(familyClosedForms("L", n, k), indexVector(lnkGraph(n, k)));
}

TEST_CASE("GA of L(n,k) closed form") {
  // GA(L(n,k)) = C(k,2) + k(n-k)·2√(k(n-1))/(n+k-1)
  int n = 10, k = 3;
  double expect = 3.0 + 3.0 * 7.0 * 2.0 * std::sqrt(3.0 * 9.0) / (n + k - 1);
  CHECK(familyClosedForms("L", n, k).ga == doctest::Approx(expect).epsilon(1e-12));
  // AG(K_{1,n-1}) = n√(n-1)/2
  CHECK(familyClosedForms("star", 5).ag == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(familyClosedForms("K", 6).ga == doctest::Approx(15.0).epsilon(1e-12));
}

TEST_CASE("unsupported family") { CHECK_THROWS(familyClosedForms("W", 5)); }
