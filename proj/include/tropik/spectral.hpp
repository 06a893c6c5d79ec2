#pragma once

#include "tropik/matrix.hpp"
#include "tropik/values.hpp"

#include <vector>

namespace tropik {

// Weighted digraph of the finite entries of a square matrix: edge (i, j, M_ij).
struct MatrixGraph {
  struct Edge {
    int from, to;
    BigInt weight;
  };
  int vertex_count = 0;
  std::vector<Edge> edges;
};

MatrixGraph graph_of(const TropicalMatrix& m);  // pre: square

// Component id per vertex; ids are 0..count-1 in reverse topological order.
std::vector<int> strongly_connected_components(int n, const std::vector<std::vector<int>>& adj,
                                               int* count_out = nullptr);

// Maximum cycle mean over all cycles of g (Karp per SCC, exact); bottom if acyclic.
Rational max_cycle_mean(const MatrixGraph& g);

// Spectral radius = maximum cycle mean of graph_of(m); bottom iff nilpotent.
Rational spectral_radius(const TropicalMatrix& m);

// Union of the cycles whose mean attains the spectral radius, with the
// per-component cyclicity (gcd of cycle lengths). Empty when rho is bottom.
struct CriticalGraph {
  int vertex_count = 0;                  // of the underlying matrix
  std::vector<int> vertices;             // critical vertices, ascending
  std::vector<MatrixGraph::Edge> edges;  // critical edges, original weights
  struct Component {
    std::vector<int> vertices;  // ascending
    int cyclicity = 0;
  };
  std::vector<Component> components;
};

CriticalGraph critical_graph(const TropicalMatrix& m);  // pre: square

// Sum of the critical components' cyclicities; 0 iff the matrix is nilpotent.
int ultimate_rank(const TropicalMatrix& m);

}  // namespace tropik
