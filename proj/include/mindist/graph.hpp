#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mindist/monomial_ideal.hpp"

namespace mindist {

// Simple undirected graph on vertices 0..n-1.  Loops and duplicate edges are
// rejected; edges are stored normalized (u < v) and sorted.
class Graph {
public:
  Graph(int vertices, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool adjacent(int u, int v) const;
  std::vector<int> neighbors(int v) const;
  uint64_t neighbor_mask(int v) const { return adj_[static_cast<size_t>(v)]; }

private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<uint64_t> adj_;
};

// I(G) = (t_u * t_v : {u,v} edge) in one variable per vertex.  Edgeless graphs
// are rejected (their edge ideal is zero).
MonomialIdeal edge_ideal(const Graph& g);

// All inclusion-minimal vertex covers, each ascending, ordered by size then
// lexicographically.  Guard: at most 20 vertices.
std::vector<std::vector<int>> minimal_vertex_covers(const Graph& g);

// Every minimal cover has the same size, i.e. the edge ideal is unmixed.
bool is_unmixed_graph(const Graph& g);

// Largest induced matching: pairwise disjoint edges with no further edge of G
// joining their endpoints.  Guard: at most 24 edges.
int induced_matching_number(const Graph& g);

// Bipartite labeling x_1..x_g | y_1..y_g witnessing Cohen-Macaulayness:
//   (a) {x_i, y_i} is an edge for every i,
//   (b) {x_i, y_j} an edge implies i <= j,
//   (c) {x_i, y_j} and {x_j, y_k} edges with i < j < k imply {x_i, y_k} is one.
// v1[i] holds the vertex labeled x_{i+1}, v2[i] the vertex labeled y_{i+1}.
struct HHLabeling {
  std::vector<int> v1;
  std::vector<int> v2;
};

// Deterministic search over bipartition orientations and placements; nullopt when
// no labeling exists.  Non-bipartite input is an input error.  Guard: at most 16
// vertices.
std::optional<HHLabeling> find_hh_labeling(const Graph& g);

// Full validation of the three labeling conditions plus shape checks.
bool check_hh_labeling(const Graph& g, const HHLabeling& labeling);

// Product of the x_{i_1}..x_{i_k} chosen greedily (i_1 = 1, then the position of
// the first y not yet dominated) so that their neighborhoods jointly cover V2 and
// the pair edges e_{i_1}..e_{i_k} form an induced matching.  Both properties are
// verified; a failure is an internal error.  The neighborhoods may overlap.
Monomial cm_witness_monomial(const Graph& g, const HHLabeling& labeling);

}  // namespace mindist
