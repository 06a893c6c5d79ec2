#include "tropik/spectral.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <optional>
#include <queue>
#include <stdexcept>

namespace tropik {

MatrixGraph graph_of(const TropicalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("graph_of needs a square matrix");
  MatrixGraph g;
  g.vertex_count = m.rows();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j).is_finite()) g.edges.push_back({i, j, m.at(i, j).value()});
  return g;
}

std::vector<int> strongly_connected_components(int n, const std::vector<std::vector<int>>& adj,
                                               int* count_out) {
  // Iterative Tarjan; closure graphs can have 10^5+ vertices, so no recursion.
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  int next_index = 0, comp_count = 0;

  struct Frame {
    int v;
    std::size_t child;
  };
  std::vector<Frame> call;

  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    call.push_back({root, 0});
    while (!call.empty()) {
      auto& [v, child] = call.back();
      if (child == 0) {
        index[v] = low[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      if (child < adj[v].size()) {
        int w = adj[v][child++];
        if (index[w] == -1) {
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        while (true) {
          int w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = comp_count;
          if (w == v) break;
        }
        ++comp_count;
      }
      int finished = v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[finished]);
    }
  }
  if (count_out) *count_out = comp_count;
  return comp;
}

namespace {

// Karp on one strongly connected subgraph given by local vertex ids.
// Pre: at least one edge; every vertex has an outgoing edge within the subgraph.
Rational karp_scc(int n, const std::vector<MatrixGraph::Edge>& edges) {
  // D[k][v] = max weight of a walk of exactly k edges from vertex 0 to v.
  std::vector<std::vector<std::optional<BigInt>>> d(
      n + 1, std::vector<std::optional<BigInt>>(n));
  d[0][0] = BigInt(0);
  for (int k = 1; k <= n; ++k) {
    for (const auto& e : edges) {
      if (!d[k - 1][e.from]) continue;
      BigInt cand = *d[k - 1][e.from] + e.weight;
      if (!d[k][e.to] || cand > *d[k][e.to]) d[k][e.to] = std::move(cand);
    }
  }
  Rational best = Rational::bottom();
  for (int v = 0; v < n; ++v) {
    if (!d[n][v]) continue;
    std::optional<Rational> worst;  // min over k
    for (int k = 0; k < n; ++k) {
      if (!d[k][v]) continue;
      Rational val(*d[n][v] - *d[k][v], BigInt(n - k));
      if (!worst || val < *worst) worst = val;
    }
    assert(worst);
    if (best < *worst) best = *worst;
  }
  assert(best.is_finite());
  return best;
}

}  // namespace

Rational max_cycle_mean(const MatrixGraph& g) {
  std::vector<std::vector<int>> adj(g.vertex_count);
  for (const auto& e : g.edges) adj[e.from].push_back(e.to);
  int comp_count = 0;
  std::vector<int> comp = strongly_connected_components(g.vertex_count, adj, &comp_count);

  std::vector<std::vector<MatrixGraph::Edge>> internal(comp_count);
  for (const auto& e : g.edges)
    if (comp[e.from] == comp[e.to]) internal[comp[e.from]].push_back(e);

  Rational best = Rational::bottom();
  std::vector<int> local(g.vertex_count, -1);
  for (int c = 0; c < comp_count; ++c) {
    if (internal[c].empty()) continue;  // no cycle through this component
    std::vector<int> members;
    for (int v = 0; v < g.vertex_count; ++v)
      if (comp[v] == c) {
        local[v] = static_cast<int>(members.size());
        members.push_back(v);
      }
    std::vector<MatrixGraph::Edge> edges;
    edges.reserve(internal[c].size());
    for (const auto& e : internal[c]) edges.push_back({local[e.from], local[e.to], e.weight});
    Rational mean = karp_scc(static_cast<int>(members.size()), edges);
    if (best < mean) best = mean;
  }
  return best;
}

Rational spectral_radius(const TropicalMatrix& m) { return max_cycle_mean(graph_of(m)); }

namespace {

// Cyclicity of one strongly connected edge set: gcd over edges of
// depth(u) + 1 - depth(v) for BFS depths inside the component.
int component_cyclicity(const std::vector<int>& vertices,
                        const std::vector<MatrixGraph::Edge>& edges) {
  int n = static_cast<int>(vertices.size());
  std::vector<std::vector<int>> adj(n);
  // vertices is ascending; map to local ids by binary search.
  auto to_local = [&](int v) {
    return static_cast<int>(std::lower_bound(vertices.begin(), vertices.end(), v) -
                            vertices.begin());
  };
  for (const auto& e : edges) adj[to_local(e.from)].push_back(to_local(e.to));
  std::vector<int> depth(n, -1);
  std::queue<int> q;
  depth[0] = 0;
  q.push(0);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : adj[u])
      if (depth[w] == -1) {
        depth[w] = depth[u] + 1;
        q.push(w);
      }
  }
  int g = 0;
  for (const auto& e : edges) {
    int u = to_local(e.from), w = to_local(e.to);
    assert(depth[u] >= 0 && depth[w] >= 0);
    g = std::gcd(g, depth[u] + 1 - depth[w]);
  }
  assert(g > 0);
  return g;
}

}  // namespace

CriticalGraph critical_graph(const TropicalMatrix& m) {
  MatrixGraph g = graph_of(m);
  CriticalGraph out;
  out.vertex_count = g.vertex_count;
  Rational rho = max_cycle_mean(g);
  if (rho.is_bottom()) return out;

  // Scale weights so every cycle mean is <= 0 and critical cycles sum to 0:
  // w' = den * w - num.
  BigInt num = rho.num(), den = rho.den();
  std::vector<BigInt> scaled;
  scaled.reserve(g.edges.size());
  for (const auto& e : g.edges) scaled.push_back(den * e.weight - num);

  // Saturate longest-path potentials; converges because no positive cycle remains.
  int n = g.vertex_count;
  std::vector<BigInt> pot(n, BigInt(0));
  for (int pass = 0; pass < n; ++pass) {
    bool changed = false;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      BigInt cand = pot[g.edges[i].from] + scaled[i];
      if (cand > pot[g.edges[i].to]) {
        pot[g.edges[i].to] = std::move(cand);
        changed = true;
      }
    }
    if (!changed) break;
  }

  // Tight edges close exactly the zero-mean cycles; keep those on cycles,
  // i.e. edges inside one SCC of the tight subgraph.
  std::vector<std::size_t> tight;
  std::vector<std::vector<int>> tight_adj(n);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (pot[g.edges[i].from] + scaled[i] == pot[g.edges[i].to]) {
      tight.push_back(i);
      tight_adj[g.edges[i].from].push_back(g.edges[i].to);
    }
  }
  int comp_count = 0;
  std::vector<int> comp = strongly_connected_components(n, tight_adj, &comp_count);

  std::vector<std::vector<MatrixGraph::Edge>> comp_edges(comp_count);
  for (std::size_t i : tight) {
    const auto& e = g.edges[i];
    if (comp[e.from] == comp[e.to]) comp_edges[comp[e.from]].push_back(e);
  }

  std::vector<bool> critical(n, false);
  for (int c = 0; c < comp_count; ++c)
    for (const auto& e : comp_edges[c]) critical[e.from] = critical[e.to] = true;

  for (int v = 0; v < n; ++v)
    if (critical[v]) out.vertices.push_back(v);

  // Components reported in ascending order of their smallest vertex.
  std::vector<int> order;
  for (int c = 0; c < comp_count; ++c)
    if (!comp_edges[c].empty()) order.push_back(c);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    auto smallest = [&](int cc) {
      int s = out.vertex_count;
      for (const auto& e : comp_edges[cc]) s = std::min({s, e.from, e.to});
      return s;
    };
    return smallest(a) < smallest(b);
  });
  for (int c : order) {
    CriticalGraph::Component component;
    for (int v = 0; v < n; ++v)
      if (comp[v] == c && critical[v]) component.vertices.push_back(v);
    std::sort(comp_edges[c].begin(), comp_edges[c].end(),
              [](const MatrixGraph::Edge& a, const MatrixGraph::Edge& b) {
                return std::pair(a.from, a.to) < std::pair(b.from, b.to);
              });
    component.cyclicity = component_cyclicity(component.vertices, comp_edges[c]);
    for (const auto& e : comp_edges[c]) out.edges.push_back(e);
    out.components.push_back(std::move(component));
  }
  std::sort(out.edges.begin(), out.edges.end(),
            [](const MatrixGraph::Edge& a, const MatrixGraph::Edge& b) {
              return std::pair(a.from, a.to) < std::pair(b.from, b.to);
            });
  return out;
}

int ultimate_rank(const TropicalMatrix& m) {
  CriticalGraph c = critical_graph(m);
  int sum = 0;
  for (const auto& comp : c.components) sum += comp.cyclicity;
  return sum;
}

}  // namespace tropik
