#include "doctest.h"
#include "test_util.hpp"

#include "tropik/matrix.hpp"
#include "tropik/oracle.hpp"
#include "tropik/spectral.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <tuple>
#include <vector>

using namespace tropik;
using testutil::mk;
using testutil::random_matrix;

namespace {

std::set<std::tuple<int, int, long long>> edge_set(const MatrixGraph& g) {
  std::set<std::tuple<int, int, long long>> s;
  for (const auto& e : g.edges)
    s.insert({e.from, e.to, static_cast<long long>(e.weight)});
  return s;
}

// Elementary cycles of the subgraph given by the edges, as (edge list, total
// weight). Each cycle is rooted at its smallest vertex so every elementary
// cycle appears exactly once.
struct Cycle {
  std::vector<std::pair<int, int>> arcs;
  BigInt weight;
};

void extend_paths(int root, int v, const std::map<int, std::vector<std::pair<int, BigInt>>>& adj,
                  std::vector<std::pair<int, int>>& arcs, BigInt weight, std::set<int>& used,
                  std::vector<Cycle>& out) {
  auto it = adj.find(v);
  if (it == adj.end()) return;
  for (const auto& [to, w] : it->second) {
    if (to == root) {
      Cycle c;
      c.arcs = arcs;
      c.arcs.emplace_back(v, to);
      c.weight = weight + w;
      out.push_back(c);
    } else if (to > root && !used.count(to)) {
      used.insert(to);
      arcs.emplace_back(v, to);
      extend_paths(root, to, adj, arcs, weight + w, used, out);
      arcs.pop_back();
      used.erase(to);
    }
  }
}

std::vector<Cycle> elementary_cycles(const std::vector<MatrixGraph::Edge>& edges) {
  std::map<int, std::vector<std::pair<int, BigInt>>> adj;
  std::set<int> verts;
  for (const auto& e : edges) {
    adj[e.from].emplace_back(e.to, e.weight);
    verts.insert(e.from);
    verts.insert(e.to);
  }
  std::vector<Cycle> out;
  for (int root : verts) {
    std::vector<std::pair<int, int>> arcs;
    std::set<int> used{root};
    extend_paths(root, root, adj, arcs, BigInt(0), used, out);
  }
  return out;
}

}  // namespace

TEST_CASE("graph_of emits one edge per finite entry") {
  CHECK(edge_set(graph_of(TropicalMatrix::identity(2))) ==
        std::set<std::tuple<int, int, long long>>{{0, 0, 0}, {1, 1, 0}});
  CHECK(edge_set(graph_of(mk("1 -i\n-i 0"))) ==
        std::set<std::tuple<int, int, long long>>{{0, 0, 1}, {1, 1, 0}});
  CHECK(graph_of(mk("-i -i\n-i -i")).edges.empty());
  CHECK_THROWS_AS(graph_of(mk("0 0")), std::invalid_argument);
}

TEST_CASE("spectral radius is the maximum cycle mean") {
  for (int d = 1; d <= 4; ++d)
    CHECK(spectral_radius(TropicalMatrix::identity(d)) == Rational(0));
  CHECK(spectral_radius(mk("1 -i\n-i 0")) == Rational(1));
  CHECK(spectral_radius(mk("-i 0\n-i -i")).is_bottom());
  CHECK(spectral_radius(mk("-i 3\n1 -i")) == Rational(2));
  CHECK(spectral_radius(mk("-i 1\n0 -i")) == Rational(BigInt(1), BigInt(2)));
  // two components with different means: the larger wins
  CHECK(spectral_radius(mk("5 -i\n-i 2")) == Rational(5));
}

TEST_CASE("critical graph keeps exactly the cycles attaining the radius") {
  CriticalGraph c1 = critical_graph(TropicalMatrix::identity(2));
  REQUIRE(c1.components.size() == 2);
  CHECK(c1.components[0].vertices == std::vector<int>{0});
  CHECK(c1.components[1].vertices == std::vector<int>{1});
  CHECK(c1.components[0].cyclicity == 1);
  CHECK(c1.components[1].cyclicity == 1);

  CriticalGraph c2 = critical_graph(mk("1 -i\n-i 0"));
  CHECK(c2.vertices == std::vector<int>{0});
  REQUIRE(c2.components.size() == 1);
  CHECK(c2.components[0].cyclicity == 1);

  CriticalGraph c3 = critical_graph(mk("-i 0\n0 -i"));
  CHECK(c3.vertices == std::vector<int>{0, 1});
  REQUIRE(c3.components.size() == 1);
  CHECK(c3.components[0].vertices == std::vector<int>{0, 1});
  CHECK(c3.components[0].cyclicity == 2);

  CHECK(critical_graph(mk("-i 0\n-i -i")).components.empty());
}

TEST_CASE("ultimate rank sums the critical cyclicities") {
  for (int d = 1; d <= 4; ++d) CHECK(ultimate_rank(TropicalMatrix::identity(d)) == d);
  CHECK(ultimate_rank(mk("-i 0\n-i -i")) == 0);
  CHECK(ultimate_rank(mk("0 0\n0 0")) == 1);
  CHECK(ultimate_rank(mk("-i 0\n0 -i")) == 2);
}

TEST_CASE("spectral radius agrees with the elementary-cycle oracle") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 1000; ++t) {
    int d = 1 + static_cast<int>(rng() % 4);
    TropicalMatrix m = random_matrix(rng, d, -2, 2, 1, 6);
    CHECK(spectral_radius(m) == oracle::brute_rho(m));
  }
}

TEST_CASE("offset shifts the radius and leaves the critical structure alone") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 300; ++t) {
    int d = 1 + static_cast<int>(rng() % 4);
    long long k = static_cast<long long>(rng() % 11) - 5;
    TropicalMatrix m = random_matrix(rng, d, -3, 3, 1, 4);
    TropicalMatrix shifted = scalar_offset(BigInt(k), m);
    Rational rho = spectral_radius(m);
    if (rho.is_bottom()) {
      CHECK(spectral_radius(shifted).is_bottom());
    } else {
      CHECK(spectral_radius(shifted) == Rational(rho.value() + k));
    }
    CriticalGraph a = critical_graph(m), b = critical_graph(shifted);
    CHECK(a.vertices == b.vertices);
    REQUIRE(a.components.size() == b.components.size());
    for (std::size_t i = 0; i < a.components.size(); ++i) {
      CHECK(a.components[i].vertices == b.components[i].vertices);
      CHECK(a.components[i].cyclicity == b.components[i].cyclicity);
    }
    CHECK(ultimate_rank(m) == ultimate_rank(shifted));
  }
}

TEST_CASE("norm of powers converges to the radius at rate C/n") {
  // For all-finite entries in [-b, b]: a length-n walk decomposes into
  // elementary cycles (mean <= rho) plus at most d leftover arcs, and a walk
  // can be steered onto a maximal cycle within one arc, so
  // | norm(M^n) - n*rho | <= C with C = 6*d*b + 2.
  std::mt19937_64 rng(23);
  for (int t = 0; t < 20; ++t) {
    int d = 1 + static_cast<int>(rng() % 3);
    const long long b = 3;
    TropicalMatrix m = random_matrix(rng, d, -b, b, 0, 1);
    Rational rho = spectral_radius(m);
    REQUIRE(rho.is_finite());
    BigRational c(6 * d * b + 2);
    TropicalMatrix p = m;
    for (int n = 1; n <= 64; ++n) {
      TropicalValue norm = norm_inf(p);
      REQUIRE(norm.is_finite());
      BigRational gap = BigRational(norm.value()) - BigRational(n) * rho.value();
      if (gap < 0) gap = -gap;
      CHECK(gap <= c);
      if (n < 64) p = p * m;
    }
  }
}

TEST_CASE("critical components: every cycle is critical and covers the edges") {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 200; ++t) {
    int d = 1 + static_cast<int>(rng() % 4);
    TropicalMatrix m = random_matrix(rng, d, -2, 2, 1, 4);
    Rational rho = spectral_radius(m);
    CriticalGraph cg = critical_graph(m);
    if (rho.is_bottom()) {
      CHECK(cg.components.empty());
      CHECK(cg.edges.empty());
      continue;
    }
    std::set<std::pair<int, int>> covered;
    std::vector<Cycle> cycles = elementary_cycles(cg.edges);
    CHECK(!cycles.empty());
    for (const auto& c : cycles) {
      // every cycle of the critical graph attains the radius exactly
      CHECK(Rational(c.weight, BigInt(c.arcs.size())) == rho);
      for (const auto& arc : c.arcs) covered.insert(arc);
      // the enclosing component's cyclicity divides the cycle length
      int root = c.arcs.back().second;
      for (const auto& comp : cg.components) {
        if (std::binary_search(comp.vertices.begin(), comp.vertices.end(), root))
          CHECK(c.arcs.size() % comp.cyclicity == 0);
      }
    }
    // the critical graph is a union of critical cycles: no stray edges
    for (const auto& e : cg.edges) CHECK(covered.count({e.from, e.to}) == 1);
  }
}
