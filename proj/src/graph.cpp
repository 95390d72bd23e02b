#include "gamma/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <ostream>
#include <thread>

namespace gammagraph {

using gf2::BitMatrix;
using gf2::dot;
using gf2::Errc;
using gf2::fail;
using gf2::require;
using gf2::Word;

namespace {

int effective_cap(const GraphConfig& cfg) {
  return cfg.max_enumeration_n < 8 ? cfg.max_enumeration_n : 8;
}

void check_enumeration_n(int n, const GraphConfig& cfg) {
  require(n >= 1, Errc::InvalidArgument, "dimension must be positive");
  require(n <= effective_cap(cfg), Errc::TooLarge,
          "dimension exceeds the enumeration cap");
}

// x'A^{-1}x reduces to a parity against the diagonal of A^{-1} in
// characteristic two, so the neighbor test is one AND + popcount.
Word admissibility_diag(const Vertex& a) { return a.inv().mat().diagonal().word(); }

Vertex neighbor_of(const Vertex& a, const BitVector& x) {
  SymMatrix mat = a.mat() ^ SymMatrix::square(x);
  BitVector ax = a.inv().mat() * x;
  SymMatrix inv = a.inv() ^ SymMatrix::square(ax);
  return Vertex(std::move(mat), std::move(inv));
}

}  // namespace

const char* pair_case_name(PairCase c) {
  switch (c) {
    case PairCase::Equal: return "Equal";
    case PairCase::NonAltI_AllOnes: return "NonAltI_AllOnes";
    case PairCase::NonAltI_Mixed: return "NonAltI_Mixed";
    case PairCase::NonAltII: return "NonAltII";
    case PairCase::NonAltIII: return "NonAltIII";
    case PairCase::AltRank1: return "AltRank1";
    case PairCase::AltHigher: return "AltHigher";
  }
  return "?";
}

int PairClass::distance() const {
  switch (kind) {
    case PairCase::Equal: return 0;
    case PairCase::NonAltI_AllOnes: return r + 2;
    case PairCase::NonAltI_Mixed: return r + 1;
    case PairCase::NonAltII: return r + 2;
    case PairCase::NonAltIII: return r;
    case PairCase::AltRank1: return r + 2;
    case PairCase::AltHigher: return r + 1;
  }
  return -1;
}

bool is_vertex(const SymMatrix& m) { return gf2::det(m.mat()) == 1; }

bool are_adjacent(const Vertex& a, const Vertex& b) {
  require(a.dim() == b.dim(), Errc::DimensionMismatch, "vertices have different dimensions");
  return gf2::rank((a.mat() ^ b.mat()).mat()) == 1;
}

void for_each_neighbor(const Vertex& a, const std::function<void(const Vertex&)>& fn) {
  int n = a.dim();
  Word diag = admissibility_diag(a);
  for (Word xw = 1; xw < (Word{1} << n); ++xw) {
    if (std::popcount(xw & diag) & 1) continue;
    fn(neighbor_of(a, BitVector(n, xw)));
  }
}

std::vector<Vertex> neighbors(const Vertex& a) {
  std::vector<Vertex> out;
  for_each_neighbor(a, [&](const Vertex& v) { out.push_back(v); });
  return out;
}

PairClass classify_pair(const Vertex& a, const Vertex& b) {
  require(a.dim() == b.dim(), Errc::DimensionMismatch, "vertices have different dimensions");
  SymMatrix d = a.mat() ^ b.mat();
  if (d.is_zero()) return {PairCase::Equal, 0};

  gf2::Decomposition dec = gf2::decompose_symmetric(d);
  std::vector<BitVector> vs = dec.xs;
  if (dec.kind == gf2::Decomposition::Kind::Alternate) {
    BitVector sum(dec.n);
    for (const BitVector& x : dec.xs) sum ^= x;
    vs.push_back(sum);
  }

  int m = static_cast<int>(vs.size());
  BitMatrix gram(m, m);
  std::vector<BitVector> ainv_v;
  ainv_v.reserve(vs.size());
  for (const BitVector& v : vs) ainv_v.push_back(a.inv().mat() * v);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      gram.set(i, j, dot(vs[static_cast<size_t>(i)], ainv_v[static_cast<size_t>(j)]));

  int r = dec.rank();
  if (dec.kind == gf2::Decomposition::Kind::Alternate)
    return {gf2::rank(gram) == 1 ? PairCase::AltRank1 : PairCase::AltHigher, r};

  bool all_diag_one = true;
  for (int i = 0; i < m; ++i) all_diag_one = all_diag_one && gram.get(i, i);
  if (all_diag_one) {
    bool all_one = gram == BitMatrix::ones(m, m);
    return {all_one ? PairCase::NonAltI_AllOnes : PairCase::NonAltI_Mixed, r};
  }
  if (gf2::is_r1tr0(SymMatrix(gram))) return {PairCase::NonAltII, r};
  return {PairCase::NonAltIII, r};
}

int distance_closed(const Vertex& a, const Vertex& b) { return classify_pair(a, b).distance(); }

int distance_ambient(const SymMatrix& a, const SymMatrix& b) {
  require(a.dim() == b.dim(), Errc::DimensionMismatch, "matrices have different dimensions");
  SymMatrix d = a ^ b;
  if (d.is_zero()) return 0;
  int r = gf2::rank(d.mat());
  return gf2::is_alternate(d) ? r + 1 : r;
}

int distance_bfs(const Vertex& a, const Vertex& b, const GraphConfig& cfg) {
  require(a.dim() == b.dim(), Errc::DimensionMismatch, "vertices have different dimensions");
  check_enumeration_n(a.dim(), cfg);
  std::uint64_t target = gf2::triangle_key(b.mat());
  if (gf2::triangle_key(a.mat()) == target) return 0;

  std::unordered_map<std::uint64_t, int> dist;
  dist[gf2::triangle_key(a.mat())] = 0;
  std::deque<Vertex> queue{a};
  while (!queue.empty()) {
    Vertex cur = std::move(queue.front());
    queue.pop_front();
    int d = dist[gf2::triangle_key(cur.mat())];
    int found = -1;
    for_each_neighbor(cur, [&](const Vertex& nb) {
      if (found >= 0) return;
      std::uint64_t key = gf2::triangle_key(nb.mat());
      if (key == target) {
        found = d + 1;
        return;
      }
      if (dist.emplace(key, d + 1).second) queue.push_back(nb);
    });
    if (found >= 0) return found;
  }
  fail(Errc::InvalidArgument, "target vertex not reachable");
}

std::vector<Vertex> geodesic(const Vertex& a, const Vertex& b) {
  int n = a.dim();
  int d = distance_closed(a, b);
  std::vector<Vertex> path{a};
  Vertex cur = a;
  while (d > 0) {
    Word diag = admissibility_diag(cur);
    bool advanced = false;
    for (Word xw = 1; xw < (Word{1} << n) && !advanced; ++xw) {
      if (std::popcount(xw & diag) & 1) continue;
      Vertex cand = neighbor_of(cur, BitVector(n, xw));
      if (distance_closed(cand, b) == d - 1) {
        path.push_back(cand);
        cur = std::move(cand);
        --d;
        advanced = true;
      }
    }
    require(advanced, Errc::NoDescent, "no neighbor decreases the closed-form distance");
  }
  return path;
}

void for_each_vertex(int n, const GraphConfig& cfg,
                     const std::function<void(const Vertex&)>& fn) {
  check_enumeration_n(n, cfg);
  std::uint64_t total = std::uint64_t{1} << (n * (n + 1) / 2);
  for (std::uint64_t key = 0; key < total; ++key) {
    SymMatrix m = gf2::sym_from_triangle_key(n, key);
    if (is_vertex(m)) fn(Vertex(std::move(m)));
  }
}

std::vector<Vertex> enumerate_vertices(int n, const GraphConfig& cfg) {
  std::vector<Vertex> out;
  for_each_vertex(n, cfg, [&](const Vertex& v) { out.push_back(v); });
  return out;
}

std::uint64_t count_vertices(int n, const GraphConfig& cfg) {
  check_enumeration_n(n, cfg);
  std::uint64_t total = std::uint64_t{1} << (n * (n + 1) / 2);
  int workers = cfg.workers > 1 ? cfg.workers : 1;
  if (workers == 1 || total < 1024) {
    std::uint64_t count = 0;
    for (std::uint64_t key = 0; key < total; ++key)
      if (is_vertex(gf2::sym_from_triangle_key(n, key))) ++count;
    return count;
  }
  // Shard the key range; each worker owns a private count, merged in order.
  std::vector<std::uint64_t> counts(static_cast<size_t>(workers), 0);
  std::vector<std::thread> threads;
  std::uint64_t chunk = total / static_cast<std::uint64_t>(workers);
  for (int w = 0; w < workers; ++w) {
    std::uint64_t begin = chunk * static_cast<std::uint64_t>(w);
    std::uint64_t end = w + 1 == workers ? total : begin + chunk;
    threads.emplace_back([n, begin, end, w, &counts] {
      std::uint64_t local = 0;
      for (std::uint64_t key = begin; key < end; ++key)
        if (is_vertex(gf2::sym_from_triangle_key(n, key))) ++local;
      counts[static_cast<size_t>(w)] = local;
    });
  }
  for (std::thread& t : threads) t.join();
  std::uint64_t count = 0;
  for (std::uint64_t c : counts) count += c;
  return count;
}

int diameter_closed(int n) {
  require(n >= 2, Errc::InvalidArgument, "diameter is defined for n >= 2");
  if (n == 2) return 2;
  if (n == 3) return 4;
  return n % 2 == 0 ? n + 1 : n;
}

IndexedGraph build_graph(int n, const GraphConfig& cfg) {
  IndexedGraph g;
  g.n = n;
  for_each_vertex(n, cfg, [&](const Vertex& v) { g.keys.push_back(gf2::triangle_key(v.mat())); });
  g.index.reserve(g.keys.size() * 2);
  for (size_t i = 0; i < g.keys.size(); ++i) g.index.emplace(g.keys[i], static_cast<int>(i));
  g.adj.resize(g.keys.size());
  for (size_t i = 0; i < g.keys.size(); ++i) {
    Vertex v(gf2::sym_from_triangle_key(n, g.keys[i]));
    for_each_neighbor(v, [&](const Vertex& nb) {
      g.adj[i].push_back(g.index.at(gf2::triangle_key(nb.mat())));
    });
  }
  return g;
}

std::uint64_t IndexedGraph::edge_count() const {
  std::uint64_t deg = 0;
  for (const std::vector<int>& a : adj) deg += a.size();
  return deg / 2;
}

std::vector<int> bfs_from(const IndexedGraph& g, int src) {
  std::vector<int> dist(g.keys.size(), -1);
  dist[static_cast<size_t>(src)] = 0;
  std::deque<int> queue{src};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int nb : g.adj[static_cast<size_t>(v)]) {
      if (dist[static_cast<size_t>(nb)] < 0) {
        dist[static_cast<size_t>(nb)] = dist[static_cast<size_t>(v)] + 1;
        queue.push_back(nb);
      }
    }
  }
  return dist;
}

int eccentricity_bfs(const Vertex& a, const GraphConfig& cfg) {
  IndexedGraph g = build_graph(a.dim(), cfg);
  std::vector<int> dist = bfs_from(g, g.index.at(gf2::triangle_key(a.mat())));
  int ecc = 0;
  for (int d : dist) {
    require(d >= 0, Errc::InvalidArgument, "graph is not connected");
    ecc = d > ecc ? d : ecc;
  }
  return ecc;
}

void export_graph(int n, std::ostream& os, const GraphConfig& cfg) {
  IndexedGraph g = build_graph(n, cfg);
  os << "gamma-graph n=" << n << " vertices=" << g.keys.size() << " edges=" << g.edge_count()
     << "\n";
  for (size_t i = 0; i < g.keys.size(); ++i) {
    SymMatrix m = gf2::sym_from_triangle_key(n, g.keys[i]);
    os << "v " << i << ' ';
    for (int row = 0; row < n; ++row) {
      if (row) os << '/';
      os << m.mat().row(row).to_string();
    }
    os << "\n";
  }
  for (size_t i = 0; i < g.keys.size(); ++i) {
    std::vector<int> out;
    for (int j : g.adj[i])
      if (j > static_cast<int>(i)) out.push_back(j);
    std::sort(out.begin(), out.end());
    for (int j : out) os << "e " << i << ' ' << j << "\n";
  }
  require(os.good(), Errc::Io, "failed to write graph export");
}

}  // namespace gammagraph
