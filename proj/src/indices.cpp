#include "gti/indices.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace gti {

std::vector<EdgeTerm> edgeTerms(const Graph& g) {
  std::vector<EdgeTerm> terms;
  terms.reserve(static_cast<size_t>(g.m()));
  for (const auto& [u, v] : g.edges()) {
    EdgeTerm t;
    t.edge = {u, v};
    t.du = g.degree(u);
    t.dv = g.degree(v);
    double p = static_cast<double>(t.du) * t.dv;
    double s = t.du + t.dv;
    t.gaTerm = 2.0 * std::sqrt(p) / s;
    t.agTerm = s / (2.0 * std::sqrt(p));
    t.abcTerm = std::sqrt((s - 2.0) / p);
    t.sddTerm = static_cast<double>(t.du) / t.dv + static_cast<double>(t.dv) / t.du;
    terms.push_back(t);
  }
  std::sort(terms.begin(), terms.end(), [](const EdgeTerm& a, const EdgeTerm& b) {
    auto key = [](const EdgeTerm& t) {
      return std::make_tuple(std::min(t.du, t.dv), std::max(t.du, t.dv), t.edge);
    };
    return key(a) < key(b);
  });
  return terms;
}

IndexVector indexVector(const Graph& g) {
  IndexVector iv;
  long long m1Edge = 0;
  for (const EdgeTerm& t : edgeTerms(g)) {
    iv.ga += t.gaTerm;
    iv.ag += t.agTerm;
    iv.abc += t.abcTerm;
    iv.sdd += t.sddTerm;
    m1Edge += t.du + t.dv;
    iv.m2 += static_cast<long long>(t.du) * t.dv;
  }
  for (int v = 0; v < g.n(); v++) {
    long long d = g.degree(v);
    iv.m1 += d * d;
    iv.f += d * d * d;
  }
  if (iv.m1 != m1Edge)
    throw std::logic_error("indexVector: first Zagreb edge and vertex forms differ");
  return iv;
}

IndexVector familyClosedForms(const std::string& name, int n, int k) {
  IndexVector iv;
  auto sq = [](double x) { return std::sqrt(x); };
  if (name == "K") {
    if (n < 1) throw std::invalid_argument("K_n: n >= 1");
    double m = n * (n - 1) / 2.0;
    double d = n - 1;
    iv.ga = m;
    iv.ag = m;
    iv.abc = (n >= 2) ? m * sq(2 * d - 2) / d : 0.0;
    iv.sdd = 2 * m;
    iv.m1 = static_cast<long long>(n) * (n - 1) * (n - 1);
    iv.m2 = static_cast<long long>(m) * (n - 1) * (n - 1);
    iv.f = static_cast<long long>(n) * (n - 1) * (n - 1) * (n - 1);
  } else if (name == "Kpq" || name == "star") {
    int p = (name == "star") ? 1 : n;
    int q = (name == "star") ? n - 1 : k;
    if (p < 1 || q < 1) throw std::invalid_argument("K_{p,q}: p,q >= 1");
    double pq = static_cast<double>(p) * q, s = p + q;
    iv.ga = pq * 2.0 * sq(pq) / s;
    iv.ag = pq * s / (2.0 * sq(pq));
    iv.abc = pq * sq((s - 2) / pq);
    iv.sdd = static_cast<double>(p) * p + static_cast<double>(q) * q;
    iv.m1 = static_cast<long long>(p) * q * (p + q);
    iv.m2 = static_cast<long long>(p) * q * p * q;
    iv.f = static_cast<long long>(p) * q * (static_cast<long long>(p) * p + static_cast<long long>(q) * q);
  } else if (name == "P") {
    if (n < 1) throw std::invalid_argument("P_n: n >= 1");
    if (n == 1) return iv;
    if (n == 2) return {1.0, 1.0, 0.0, 2.0, 2, 1, 2};
    iv.ga = 4.0 * sq(2.0) / 3.0 + (n - 3);
    iv.ag = 3.0 / sq(2.0) + (n - 3);
    iv.abc = (n - 1) / sq(2.0);
    iv.sdd = 2 * n - 1;
    iv.m1 = 4LL * n - 6;
    iv.m2 = 4LL * n - 8;
    iv.f = 8LL * n - 14;
  } else if (name == "C") {
    if (n < 3) throw std::invalid_argument("C_n: n >= 3");
    iv.ga = n;
    iv.ag = n;
    iv.abc = n / sq(2.0);
    iv.sdd = 2 * n;
    iv.m1 = 4LL * n;
    iv.m2 = 4LL * n;
    iv.f = 8LL * n;
  } else if (name == "L") {
    if (k < 1 || k > n - 1) throw std::invalid_argument("L(n,k): 1 <= k <= n-1");
    double clique = k * (k - 1) / 2.0;
    double cross = static_cast<double>(k) * (n - k);
    double dh = n - 1;  // hub degree
    iv.ga = clique + cross * 2.0 * sq(k * dh) / (dh + k);
    iv.ag = clique + cross * (dh + k) / (2.0 * sq(k * dh));
    iv.abc = (k >= 2 ? clique * sq(2 * dh - 2) / dh : 0.0) + cross * sq((dh + k - 2) / (k * dh));
    iv.sdd = 2 * clique + cross * (dh / k + k / dh);
    iv.m1 = static_cast<long long>(k) * (n - 1) * (n - 1) + static_cast<long long>(n - k) * k * k;
    iv.m2 = static_cast<long long>(clique) * (n - 1) * (n - 1) +
            static_cast<long long>(cross) * k * (n - 1);
    iv.f = static_cast<long long>(k) * (n - 1) * (n - 1) * (n - 1) +
           static_cast<long long>(n - k) * k * k * k;
  } else {
    throw std::invalid_argument("familyClosedForms: unsupported family " + name);
  }
  return iv;
}

}  // namespace gti
