#include "mindist/graph.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "mindist/errors.hpp"

namespace mindist {

Graph::Graph(int vertices, std::vector<std::pair<int, int>> edges) : n_(vertices) {
  if (vertices < 1) throw InputError("a graph needs at least one vertex");
  if (vertices > 64) throw SizeGuardError("graphs are limited to 64 vertices");
  std::set<std::pair<int, int>> seen;
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= vertices || v < 0 || v >= vertices) {
      throw InputError("edge endpoint out of range");
    }
    if (u == v) throw InputError("loops are not allowed");
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) throw InputError("duplicate edge");
  }
  edges_.assign(seen.begin(), seen.end());
  adj_.assign(static_cast<size_t>(vertices), 0);
  for (const auto& [u, v] : edges_) {
    adj_[static_cast<size_t>(u)] |= uint64_t{1} << v;
    adj_[static_cast<size_t>(v)] |= uint64_t{1} << u;
  }
}

bool Graph::adjacent(int u, int v) const {
  return (adj_[static_cast<size_t>(u)] >> v) & 1;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (int u = 0; u < n_; ++u) {
    if (adjacent(v, u)) out.push_back(u);
  }
  return out;
}

MonomialIdeal edge_ideal(const Graph& g) {
  if (g.edges().empty()) {
    throw InputError("edgeless graph: its edge ideal is the zero ideal");
  }
  std::vector<Monomial> gens;
  for (const auto& [u, v] : g.edges()) {
    std::vector<int> e(static_cast<size_t>(g.vertex_count()), 0);
    e[static_cast<size_t>(u)] = 1;
    e[static_cast<size_t>(v)] = 1;
    gens.push_back(Monomial{std::move(e)});
  }
  return MonomialIdeal::minimalize(g.vertex_count(), std::move(gens));
}

std::vector<std::vector<int>> minimal_vertex_covers(const Graph& g) {
  if (g.vertex_count() > 20) {
    throw SizeGuardError("vertex cover enumeration is limited to 20 vertices");
  }
  std::vector<std::vector<int>> covers;
  uint32_t total = uint32_t{1} << g.vertex_count();
  for (uint32_t mask = 0; mask < total; ++mask) {
    bool hits = std::all_of(g.edges().begin(), g.edges().end(),
                            [mask](const std::pair<int, int>& e) {
                              return (mask >> e.first) & 1 || (mask >> e.second) & 1;
                            });
    if (!hits) continue;
    bool minimal = true;
    for (int v = 0; v < g.vertex_count() && minimal; ++v) {
      if (!((mask >> v) & 1)) continue;
      bool witness = std::any_of(
          g.edges().begin(), g.edges().end(), [mask, v](const std::pair<int, int>& e) {
            uint32_t hit = mask & ((uint32_t{1} << e.first) | (uint32_t{1} << e.second));
            return hit == (uint32_t{1} << v);
          });
      if (!witness) minimal = false;
    }
    if (!minimal) continue;
    std::vector<int> cover;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if ((mask >> v) & 1) cover.push_back(v);
    }
    covers.push_back(std::move(cover));
  }
  std::sort(covers.begin(), covers.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return covers;
}

bool is_unmixed_graph(const Graph& g) {
  std::vector<std::vector<int>> covers = minimal_vertex_covers(g);
  for (const std::vector<int>& c : covers) {
    if (c.size() != covers.front().size()) return false;
  }
  return true;
}

namespace {

int induced_matching_search(const Graph& g, size_t from, uint64_t used,
                            const std::vector<std::pair<int, int>>& chosen) {
  int best = static_cast<int>(chosen.size());
  for (size_t i = from; i < g.edges().size(); ++i) {
    const auto& [u, v] = g.edges()[i];
    uint64_t ends = (uint64_t{1} << u) | (uint64_t{1} << v);
    if (used & ends) continue;
    // Induced: no edge of G may join {u,v} to an already matched endpoint.
    if ((g.neighbor_mask(u) | g.neighbor_mask(v)) & used) continue;
    std::vector<std::pair<int, int>> next = chosen;
    next.push_back({u, v});
    best = std::max(best,
                    induced_matching_search(g, i + 1, used | ends, next));
  }
  return best;
}

}  // namespace

int induced_matching_number(const Graph& g) {
  if (g.edges().size() > 24) {
    throw SizeGuardError("induced matching search is limited to 24 edges");
  }
  return induced_matching_search(g, 0, 0, {});
}

namespace {

// Two-color; component assignment by BFS.  Returns per-vertex side (0/1) and
// component index, or nullopt if an odd cycle shows up.
struct Bipartition {
  std::vector<int> side;
  std::vector<int> component;
  int components = 0;
};

std::optional<Bipartition> bipartition(const Graph& g) {
  Bipartition bp;
  bp.side.assign(static_cast<size_t>(g.vertex_count()), -1);
  bp.component.assign(static_cast<size_t>(g.vertex_count()), -1);
  for (int start = 0; start < g.vertex_count(); ++start) {
    if (bp.side[static_cast<size_t>(start)] != -1) continue;
    int comp = bp.components++;
    std::vector<int> queue{start};
    bp.side[static_cast<size_t>(start)] = 0;
    bp.component[static_cast<size_t>(start)] = comp;
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      for (int u : g.neighbors(v)) {
        if (bp.side[static_cast<size_t>(u)] == -1) {
          bp.side[static_cast<size_t>(u)] = 1 - bp.side[static_cast<size_t>(v)];
          bp.component[static_cast<size_t>(u)] = comp;
          queue.push_back(u);
        } else if (bp.side[static_cast<size_t>(u)] ==
                   bp.side[static_cast<size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  return bp;
}

struct LabelingSearch {
  const Graph& g;
  std::vector<int> left;   // candidate x vertices
  std::vector<int> right;  // candidate y vertices
  std::vector<int> x, y;   // placements by position
  std::vector<char> used_left, used_right;

  bool place(size_t pos) {
    size_t target = left.size();
    if (pos == target) return true;
    for (size_t a = 0; a < left.size(); ++a) {
      if (used_left[a]) continue;
      int xv = left[a];
      // Edges from x at this position may only reach y's placed later or now.
      bool ok = true;
      for (size_t p = 0; p < pos && ok; ++p) {
        if (g.adjacent(xv, y[p])) ok = false;
      }
      if (!ok) continue;
      for (size_t b = 0; b < right.size(); ++b) {
        if (used_right[b]) continue;
        int yv = right[b];
        if (!g.adjacent(xv, yv)) continue;
        // Every x-neighbor of this y must already be placed (or be xv itself).
        bool fits = true;
        for (size_t a2 = 0; a2 < left.size() && fits; ++a2) {
          if (used_left[a2] || a2 == a) continue;
          if (g.adjacent(left[a2], yv)) fits = false;
        }
        if (!fits) continue;
        used_left[a] = used_right[b] = 1;
        x[pos] = xv;
        y[pos] = yv;
        if (place(pos + 1)) return true;
        used_left[a] = used_right[b] = 0;
      }
    }
    return false;
  }
};

}  // namespace

std::optional<HHLabeling> find_hh_labeling(const Graph& g) {
  if (g.vertex_count() > 16) {
    throw SizeGuardError("labeling search is limited to 16 vertices");
  }
  std::optional<Bipartition> bp = bipartition(g);
  if (!bp) throw InputError("the graph is not bipartite");
  if (g.vertex_count() % 2 != 0) return std::nullopt;

  // One orientation bit per component decides which color class goes left.
  uint32_t orientations = uint32_t{1} << bp->components;
  for (uint32_t mask = 0; mask < orientations; ++mask) {
    std::vector<int> left, right;
    for (int v = 0; v < g.vertex_count(); ++v) {
      int flip = (mask >> bp->component[static_cast<size_t>(v)]) & 1;
      if ((bp->side[static_cast<size_t>(v)] ^ flip) == 0) {
        left.push_back(v);
      } else {
        right.push_back(v);
      }
    }
    if (left.size() != right.size()) continue;
    LabelingSearch search{g,
                          left,
                          right,
                          std::vector<int>(left.size(), -1),
                          std::vector<int>(left.size(), -1),
                          std::vector<char>(left.size(), 0),
                          std::vector<char>(left.size(), 0)};
    if (search.place(0)) {
      HHLabeling labeling{search.x, search.y};
      if (!check_hh_labeling(g, labeling)) {
        throw InternalError("labeling search produced an invalid labeling");
      }
      return labeling;
    }
  }
  return std::nullopt;
}

bool check_hh_labeling(const Graph& g, const HHLabeling& labeling) {
  size_t gsize = labeling.v1.size();
  if (gsize == 0 || labeling.v2.size() != gsize) return false;
  if (2 * gsize != static_cast<size_t>(g.vertex_count())) return false;
  std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
  for (int v : labeling.v1) {
    if (v < 0 || v >= g.vertex_count() || seen[static_cast<size_t>(v)]) return false;
    seen[static_cast<size_t>(v)] = 1;
  }
  for (int v : labeling.v2) {
    if (v < 0 || v >= g.vertex_count() || seen[static_cast<size_t>(v)]) return false;
    seen[static_cast<size_t>(v)] = 1;
  }
  // Bipartite with respect to the labeling.
  auto position_v1 = [&](int v) {
    for (size_t i = 0; i < gsize; ++i) {
      if (labeling.v1[i] == v) return static_cast<int>(i);
    }
    return -1;
  };
  for (const auto& [u, v] : g.edges()) {
    bool u1 = position_v1(u) >= 0;
    bool v1 = position_v1(v) >= 0;
    if (u1 == v1) return false;
  }
  auto edge_between = [&](size_t i, size_t j) {
    return g.adjacent(labeling.v1[i], labeling.v2[j]);
  };
  for (size_t i = 0; i < gsize; ++i) {
    if (!edge_between(i, i)) return false;
  }
  for (size_t i = 0; i < gsize; ++i) {
    for (size_t j = 0; j < i; ++j) {
      if (edge_between(i, j)) return false;  // would mean i > j with an edge
    }
  }
  for (size_t i = 0; i < gsize; ++i) {
    for (size_t j = i + 1; j < gsize; ++j) {
      if (!edge_between(i, j)) continue;
      for (size_t k = j + 1; k < gsize; ++k) {
        if (edge_between(j, k) && !edge_between(i, k)) return false;
      }
    }
  }
  return true;
}

Monomial cm_witness_monomial(const Graph& g, const HHLabeling& labeling) {
  if (!check_hh_labeling(g, labeling)) {
    throw InputError("invalid labeling for the witness construction");
  }
  size_t gsize = labeling.v1.size();
  std::vector<char> covered(gsize, 0);
  auto cover_with = [&](size_t pos) {
    for (size_t j = 0; j < gsize; ++j) {
      if (g.adjacent(labeling.v1[pos], labeling.v2[j])) covered[j] = 1;
    }
  };
  std::vector<size_t> picks{0};
  cover_with(0);
  while (true) {
    size_t next = gsize;
    for (size_t j = 0; j < gsize; ++j) {
      if (!covered[j]) {
        next = j;
        break;
      }
    }
    if (next == gsize) break;
    picks.push_back(next);
    cover_with(next);
  }
  // The picked neighborhoods must jointly cover V2 (they may overlap), and the
  // picked pair edges must form an induced matching: each pick is the partner
  // of a y uncovered by all earlier picks, so a cross edge in either direction
  // would contradict either that choice or the index ordering of the labeling.
  if (std::any_of(covered.begin(), covered.end(), [](char c) { return !c; })) {
    throw InternalError("witness neighborhoods miss part of V2");
  }
  for (size_t a = 0; a < picks.size(); ++a) {
    for (size_t b = 0; b < picks.size(); ++b) {
      if (a != b && g.adjacent(labeling.v1[picks[a]], labeling.v2[picks[b]])) {
        throw InternalError("witness pair edges are not an induced matching");
      }
    }
  }
  std::vector<int> exponents(static_cast<size_t>(g.vertex_count()), 0);
  for (size_t pick : picks) {
    exponents[static_cast<size_t>(labeling.v1[pick])] = 1;
  }
  return Monomial{std::move(exponents)};
}

}  // namespace mindist
