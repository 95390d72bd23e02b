#ifndef GAMMA_GRAPH_HPP
#define GAMMA_GRAPH_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <unordered_map>
#include <vector>

#include "gamma/symmetric.hpp"

// The graph on invertible symmetric matrices over GF(2) where two matrices
// are adjacent iff their difference has rank one, handled as an implicit
// graph: adjacency and distance come from closed forms, BFS over the
// neighbor oracle serves as the independent check at small n.
namespace gammagraph {

using gf2::BitVector;
using gf2::SymMatrix;
using gf2::Vertex;

struct GraphConfig {
  int max_enumeration_n = 5;  // hard cap 8
  int workers = 1;
};

enum class PairCase {
  Equal,
  NonAltI_AllOnes,
  NonAltI_Mixed,
  NonAltII,
  NonAltIII,
  AltRank1,
  AltHigher,
};

const char* pair_case_name(PairCase c);

struct PairClass {
  PairCase kind;
  int r;

  int distance() const;
  friend bool operator==(const PairClass&, const PairClass&) = default;
};

bool is_vertex(const SymMatrix& m);
bool are_adjacent(const Vertex& a, const Vertex& b);

// Exactly { A + xx' : x != 0, x'A^{-1}x = 0 }, in ascending order of the
// packed update vector x.
void for_each_neighbor(const Vertex& a, const std::function<void(const Vertex&)>& fn);
std::vector<Vertex> neighbors(const Vertex& a);

PairClass classify_pair(const Vertex& a, const Vertex& b);
int distance_closed(const Vertex& a, const Vertex& b);

// Distance in the ambient graph over all symmetric matrices: rank of the
// difference, plus one when the difference is alternate and nonzero.
int distance_ambient(const SymMatrix& a, const SymMatrix& b);

int distance_bfs(const Vertex& a, const Vertex& b, const GraphConfig& cfg = {});

// Shortest path A = C_0 ~ ... ~ C_d = B built by greedy descent on the
// closed-form distance, ties broken by the smallest packed update vector.
std::vector<Vertex> geodesic(const Vertex& a, const Vertex& b);

void for_each_vertex(int n, const GraphConfig& cfg, const std::function<void(const Vertex&)>& fn);
std::vector<Vertex> enumerate_vertices(int n, const GraphConfig& cfg = {});
std::uint64_t count_vertices(int n, const GraphConfig& cfg = {});

int diameter_closed(int n);
int eccentricity_bfs(const Vertex& a, const GraphConfig& cfg = {});

// Materialized copy of the graph for BFS oracles and export; vertices are
// indexed by ascending upper-triangle key.
struct IndexedGraph {
  int n = 0;
  std::vector<std::uint64_t> keys;
  std::unordered_map<std::uint64_t, int> index;
  std::vector<std::vector<int>> adj;

  std::uint64_t edge_count() const;
};

IndexedGraph build_graph(int n, const GraphConfig& cfg = {});
std::vector<int> bfs_from(const IndexedGraph& g, int src);

void export_graph(int n, std::ostream& os, const GraphConfig& cfg = {});

}  // namespace gammagraph

#endif
