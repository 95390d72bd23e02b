#include "gamma/verify.hpp"

#include <chrono>
#include <map>

#include "gamma/codes.hpp"
#include "gamma/random.hpp"

namespace verify {

using gf2::BitMatrix;
using gf2::BitVector;
using gf2::Rng;
using gf2::SymMatrix;
using gf2::Vertex;
using gammagraph::GraphConfig;
using gammagraph::PairCase;

namespace {

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

constexpr size_t kMaxMessages = 10;

}  // namespace

void SuiteResult::fail(const std::string& msg) {
  ++failures;
  if (messages.size() < kMaxMessages) messages.push_back(msg);
}

void SuiteResult::check(bool cond, const std::string& msg) {
  ++checks;
  if (!cond) fail(msg);
}

SuiteResult oracle_equivalence(int n, std::uint64_t sample_pairs, std::uint64_t seed,
                               const GraphConfig& cfg) {
  SuiteResult res;
  res.name = "oracle-n" + std::to_string(n);
  Timer timer;

  gammagraph::IndexedGraph g = gammagraph::build_graph(n, cfg);
  std::vector<Vertex> verts;
  verts.reserve(g.keys.size());
  for (std::uint64_t key : g.keys) verts.emplace_back(gf2::sym_from_triangle_key(n, key));
  int v = static_cast<int>(verts.size());

  auto check_pair = [&](int i, int j, int bfs_dist) {
    int dc = gammagraph::distance_closed(verts[static_cast<size_t>(i)], verts[static_cast<size_t>(j)]);
    res.check(dc == bfs_dist, "closed != bfs at pair (" + std::to_string(i) + "," +
                                  std::to_string(j) + "): " + std::to_string(dc) + " vs " +
                                  std::to_string(bfs_dist));
    res.check(gammagraph::distance_closed(verts[static_cast<size_t>(j)],
                                     verts[static_cast<size_t>(i)]) == dc,
              "closed-form distance is not symmetric at (" + std::to_string(i) + "," +
                  std::to_string(j) + ")");
    int da = gammagraph::distance_ambient(verts[static_cast<size_t>(i)].mat(),
                                     verts[static_cast<size_t>(j)].mat());
    res.check(dc >= da, "ambient lower bound violated at (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
  };

  if (sample_pairs == 0) {
    for (int src = 0; src < v; ++src) {
      std::vector<int> dist = gammagraph::bfs_from(g, src);
      for (int j = src + 1; j < v; ++j) check_pair(src, j, dist[static_cast<size_t>(j)]);
    }
  } else {
    Rng rng(seed);
    for (std::uint64_t t = 0; t < sample_pairs; ++t) {
      int i = static_cast<int>(rng() % static_cast<std::uint64_t>(v));
      int j = static_cast<int>(rng() % static_cast<std::uint64_t>(v));
      if (i == j) j = (j + 1) % v;
      std::vector<int> dist = gammagraph::bfs_from(g, i);
      check_pair(i, j, dist[static_cast<size_t>(j)]);
    }
  }

  res.seconds = timer.seconds();
  return res;
}

namespace {

SymMatrix sum_of_squares(int n, const std::vector<BitVector>& xs) {
  SymMatrix acc = SymMatrix::zero(n);
  for (const BitVector& x : xs) acc = acc ^ SymMatrix::square(x);
  return acc;
}

BitVector sum_vec(int n, const std::vector<BitVector>& xs) {
  BitVector s(n);
  for (const BitVector& x : xs) s ^= x;
  return s;
}

BitMatrix gram(const std::vector<BitVector>& vs, const SymMatrix& c) {
  int m = static_cast<int>(vs.size());
  BitMatrix g(m, m);
  for (int i = 0; i < m; ++i) {
    BitVector cv = c.mat() * vs[static_cast<size_t>(i)];
    for (int j = 0; j < m; ++j) g.set(j, i, gf2::dot(vs[static_cast<size_t>(j)], cv));
  }
  return g;
}

void battery_det_update(SuiteResult& res, Rng& rng, std::uint64_t iters) {
  for (std::uint64_t t = 0; t < iters; ++t) {
    int n = 2 + static_cast<int>(rng() % 7);
    int r = 1 + static_cast<int>(rng() % 4);
    Vertex a = gf2::random_vertex(rng, n);
    BitMatrix x = gf2::random_matrix(rng, n, r);
    BitMatrix y = gf2::random_matrix(rng, n, r);
    BitMatrix updated = a.mat().mat() ^ (x * y.transposed());
    res.check(gf2::det_update(a, x, y) == gf2::det(updated), "det_update disagrees with det");
  }
}

void battery_inverse_update(SuiteResult& res, Rng& rng, std::uint64_t iters) {
  std::uint64_t done = 0;
  while (done < iters) {
    int n = 2 + static_cast<int>(rng() % 7);
    int r = 1 + static_cast<int>(rng() % 4);
    Vertex a = gf2::random_vertex(rng, n);
    BitMatrix x = gf2::random_matrix(rng, n, r);
    BitMatrix y = gf2::random_matrix(rng, n, r);
    BitMatrix updated = a.mat().mat() ^ (x * y.transposed());
    if (gf2::det(updated) != 1) continue;
    res.check(gf2::inverse_update(a, x, y) == gf2::inverse(updated),
              "inverse_update disagrees with direct inversion");
    ++done;
  }
}

void battery_block_det(SuiteResult& res, Rng& rng, std::uint64_t iters) {
  std::uint64_t done = 0;
  while (done < iters) {
    int n = 2 + static_cast<int>(rng() % 5);
    int p = 1 + static_cast<int>(rng() % (n - 1));
    int q = n - p;
    BitMatrix m = gf2::random_matrix(rng, n, n);
    BitMatrix a11(p, p), a12(p, q), a21(q, p), a22(q, q);
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j) a11.set(i, j, m.get(i, j));
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < q; ++j) a12.set(i, j, m.get(i, p + j));
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < p; ++j) a21.set(i, j, m.get(p + i, j));
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < q; ++j) a22.set(i, j, m.get(p + i, p + j));
    if (gf2::det(a22) != 1) continue;
    res.check(gf2::schur_det(a11, a12, a21, a22) == gf2::det(m),
              "schur determinant disagrees with direct determinant");
    ++done;
  }
}

void battery_involution(SuiteResult& res, Rng& rng, std::uint64_t iters) {
  for (std::uint64_t t = 0; t < iters; ++t) {
    int n = 2 + static_cast<int>(rng() % 7);
    BitVector x = gf2::random_even_weight_vector(rng, n, 2);
    SymMatrix m = SymMatrix::square(x);
    auto form = gf2::is_r1tr0(m);
    if (!form) {
      res.fail("rank-one trace-zero matrix not recognized");
      ++res.checks;
      continue;
    }
    res.check(form->k == x.weight(), "R1Tr0 block size mismatch");
    BitMatrix iplusm = BitMatrix::identity(n) ^ m.mat();
    res.check(iplusm * iplusm == BitMatrix::identity(n), "(I+A)^2 != I for R1Tr0 A");
    // Odd-weight squares have trace one and must be rejected.
    BitVector odd = gf2::random_nonzero_vector(rng, n);
    if (odd.self_dot() == 1)
      res.check(!gf2::is_r1tr0(SymMatrix::square(odd)), "trace-one square accepted as R1Tr0");
  }
}

void battery_alternate_canonical(SuiteResult& res, Rng& rng, std::uint64_t iters) {
  std::uint64_t done = 0;
  while (done < iters) {
    int n = 2 + static_cast<int>(rng() % 7);
    SymMatrix m = gf2::random_alternate(rng, n);
    if (m.is_zero()) continue;
    std::vector<BitVector> ys = gf2::symplectic_pairs(m);
    SymMatrix rebuilt = SymMatrix::zero(n);
    for (size_t i = 0; i + 1 < ys.size(); i += 2)
      rebuilt = rebuilt ^ SymMatrix::sym_product(ys[i], ys[i + 1]);
    res.check(rebuilt == m, "symplectic pairs do not reconstruct the matrix");
    res.check(gf2::linearly_independent(ys), "symplectic pairs are dependent");

    gf2::Decomposition dec = gf2::decompose_symmetric(m);
    res.check(dec.kind == gf2::Decomposition::Kind::Alternate, "alternate matrix misclassified");
    res.check(dec.rank() % 2 == 0, "alternate rank is odd");
    res.check(dec.reconstruct() == m, "alternate decomposition does not reconstruct");
    res.check(gf2::linearly_independent(dec.xs), "alternate decomposition vectors dependent");
    ++done;
  }
}

void battery_square_rewriting(SuiteResult& res, Rng& rng, std::uint64_t iters) {
  for (std::uint64_t t = 0; t < iters; ++t) {
    // Shift identity: even r, arbitrary x_i and v.
    {
      int n = 2 + static_cast<int>(rng() % 7);
      int r = 2 * (1 + static_cast<int>(rng() % 3));
      std::vector<BitVector> xs;
      for (int i = 0; i < r; ++i) xs.push_back(gf2::random_vector(rng, n));
      BitVector v = gf2::random_vector(rng, n);
      SymMatrix lhs =
          sum_of_squares(n, xs) ^ SymMatrix::square(sum_vec(n, xs)) ^ SymMatrix::square(v);
      std::vector<BitVector> shifted;
      shifted.push_back(sum_vec(n, xs) ^ v);
      for (const BitVector& x : xs) shifted.push_back(x ^ v);
      res.check(lhs == sum_of_squares(n, shifted), "shift identity failed");
    }

    // Odd-split and even-split w-vector rewriting identities.
    for (int parity = 0; parity < 2; ++parity) {
      int n = 4 + static_cast<int>(rng() % 5);
      int r, s;
      if (parity == 0) {
        r = 2 + static_cast<int>(rng() % (std::min(n, 6) - 1));
        s = 1 + 2 * static_cast<int>(rng() % ((r + 1) / 2));
        if (s >= r) s = 1;
        if (s % 2 == 0) --s;
      } else {
        r = 4 + 2 * static_cast<int>(rng() % ((std::min(n, 6) - 2) / 2));
        s = 2 + 2 * static_cast<int>(rng() % ((r - 2) / 2));
      }
      if (s < 1 || s >= r) continue;

      std::vector<BitVector> xs;
      for (int i = 0; i < r; ++i) xs.push_back(gf2::random_vector(rng, n));
      std::vector<int> idx(static_cast<size_t>(r));
      for (int i = 0; i < r; ++i) idx[static_cast<size_t>(i)] = i;
      std::shuffle(idx.begin(), idx.end(), rng);

      BitVector tail(n);  // x_{i_{s+1}} + ... + x_{i_r}
      for (int i = s; i < r; ++i) tail ^= xs[static_cast<size_t>(idx[static_cast<size_t>(i)])];
      BitVector head(n);  // x_{i_1} + ... + x_{i_s}
      for (int i = 0; i < s; ++i) head ^= xs[static_cast<size_t>(idx[static_cast<size_t>(i)])];

      std::vector<BitVector> ws;
      if (parity == 0) {
        for (int i = 0; i < s; ++i)
          ws.push_back(xs[static_cast<size_t>(idx[static_cast<size_t>(i)])] ^ tail);
        for (int i = s; i < r; ++i)
          ws.push_back(xs[static_cast<size_t>(idx[static_cast<size_t>(i)])]);
      } else {
        const BitVector& xis = xs[static_cast<size_t>(idx[static_cast<size_t>(s - 1)])];
        for (int i = 0; i + 1 < s; ++i)
          ws.push_back(xs[static_cast<size_t>(idx[static_cast<size_t>(i)])] ^ tail);
        ws.push_back(xis);
        for (int i = s; i < r; ++i)
          ws.push_back(xis ^ xs[static_cast<size_t>(idx[static_cast<size_t>(i)])]);
      }

      SymMatrix rhs =
          sum_of_squares(n, xs) ^ SymMatrix::square(sum_vec(n, xs)) ^ SymMatrix::square(head);
      res.check(sum_of_squares(n, ws) == rhs,
                parity == 0 ? "odd-split square identity failed" : "even-split square identity failed");

      SymMatrix c = gf2::random_symmetric(rng, n);
      BitMatrix gw = gram(ws, c);
      BitMatrix gx = gram(xs, c);
      res.check(gf2::rank(gw) == gf2::rank(gx), "w-Gram rank differs from x-Gram rank");
      int trace = 0;
      for (int i = 0; i < r; ++i) trace ^= gw.get(i, i);
      int expected = 0;
      for (int i = 0; i < s; ++i) {
        const BitVector& xi = xs[static_cast<size_t>(idx[static_cast<size_t>(i)])];
        expected ^= gf2::dot(xi, c.mat() * xi);
      }
      res.check(trace == expected, "w-Gram trace formula failed");
    }
  }
}

void battery_isotropy_transfer(SuiteResult& res, Rng& rng, std::uint64_t iters) {
  std::uint64_t done = 0;
  while (done < iters) {
    int n = 2 + static_cast<int>(rng() % 7);
    int r = 1 + static_cast<int>(rng() % 4);
    Vertex a = gf2::random_vertex(rng, n);
    std::vector<BitVector> xs;
    for (int i = 0; i < r; ++i) xs.push_back(gf2::random_vector(rng, n));
    SymMatrix bmat = a.mat() ^ sum_of_squares(n, xs);
    if (gf2::det(bmat.mat()) != 1) continue;
    Vertex b{bmat};
    bool all_a = true, all_b = true;
    for (const BitVector& x : xs) {
      all_a = all_a && gf2::dot(x, a.inv().mat() * x) == 1;
      all_b = all_b && gf2::dot(x, b.inv().mat() * x) == 1;
    }
    res.check(all_a == all_b, "isotropy transfer equivalence failed");
    ++done;
  }
}

void battery_odd_rank_isotropy(SuiteResult& res, Rng& rng, std::uint64_t iters) {
  std::uint64_t done = 0;
  while (done < iters) {
    int n = 2 + static_cast<int>(rng() % 7);
    int r = 1 + 2 * static_cast<int>(rng() % 3);
    if (r > n) continue;
    Vertex a = gf2::random_vertex(rng, n);
    std::vector<BitVector> xs;
    for (int i = 0; i < r; ++i) xs.push_back(gf2::random_vector(rng, n));
    if (gf2::det((a.mat() ^ sum_of_squares(n, xs)).mat()) != 1) continue;
    bool some_zero = false;
    for (const BitVector& x : xs) some_zero = some_zero || gf2::dot(x, a.inv().mat() * x) == 0;
    res.check(some_zero, "no isotropic vector found in an odd-rank update");
    ++done;
  }
}

}  // namespace

SuiteResult identities(std::uint64_t iters, std::uint64_t seed) {
  SuiteResult res;
  res.name = "identities";
  Timer timer;
  Rng rng(seed);
  battery_det_update(res, rng, iters);
  battery_inverse_update(res, rng, iters);
  battery_block_det(res, rng, iters);
  battery_involution(res, rng, iters);
  battery_alternate_canonical(res, rng, iters);
  battery_square_rewriting(res, rng, iters);
  battery_isotropy_transfer(res, rng, iters);
  battery_odd_rank_isotropy(res, rng, iters);
  res.seconds = timer.seconds();
  return res;
}

SuiteResult diameter(int max_n, const GraphConfig& cfg) {
  SuiteResult res;
  res.name = "diameter";
  Timer timer;
  const std::map<int, int> expected{{2, 2}, {3, 4}, {4, 5}, {5, 5}, {6, 7}, {7, 7}, {8, 9}};
  for (int n = 2; n <= max_n; ++n) {
    auto it = expected.find(n);
    int want = it != expected.end() ? it->second : (n % 2 == 0 ? n + 1 : n);
    res.check(gammagraph::diameter_closed(n) == want,
              "diameter_closed(" + std::to_string(n) + ") != " + std::to_string(want));
  }
  int ecc_cap = std::min(max_n, std::min(cfg.max_enumeration_n, 5));
  for (int n = 2; n <= ecc_cap; ++n) {
    res.check(gammagraph::eccentricity_bfs(Vertex::identity(n), cfg) == gammagraph::diameter_closed(n),
              "ecc(I_" + std::to_string(n) + ") != diameter");
  }
  res.seconds = timer.seconds();
  return res;
}

SuiteResult geodesics(int n, int pairs, std::uint64_t seed, const GraphConfig& cfg) {
  SuiteResult res;
  res.name = "geodesics-n" + std::to_string(n);
  Timer timer;
  std::vector<Vertex> verts = gammagraph::enumerate_vertices(n, cfg);
  Rng rng(seed);
  for (int t = 0; t < pairs; ++t) {
    const Vertex& a = verts[rng() % verts.size()];
    const Vertex& b = verts[rng() % verts.size()];
    try {
      std::vector<Vertex> path = gammagraph::geodesic(a, b);
      int d = gammagraph::distance_closed(a, b);
      bool ok = static_cast<int>(path.size()) == d + 1 && path.front() == a && path.back() == b;
      for (size_t i = 0; ok && i + 1 < path.size(); ++i) {
        ok = gammagraph::are_adjacent(path[i], path[i + 1]) && gammagraph::is_vertex(path[i + 1].mat());
      }
      res.check(ok, "geodesic failed edge-chain verification");
    } catch (const gf2::Error& e) {
      res.fail(std::string("geodesic raised: ") + e.what());
      ++res.checks;
    }
  }
  res.seconds = timer.seconds();
  return res;
}

SuiteResult codes(int n, const GraphConfig& cfg) {
  SuiteResult res;
  res.name = "codes-n" + std::to_string(n);
  Timer timer;
  const std::map<int, size_t> frozen_counts{{3, 3}, {5, 15}, {7, 135}};

  try {
    sdcodes::PartitionReport report = sdcodes::verify_partition(n, cfg);
    auto it = frozen_counts.find(n);
    if (it != frozen_counts.end())
      res.check(report.code_count == it->second, "unexpected self-dual code count");
    res.check(report.families_disjoint, "families are not pairwise disjoint");
    if (report.sd_count) {
      res.check(report.union_matches_exhaustive, "family union differs from exhaustive SD_n");
      if (n == 3) res.check(*report.sd_count == 6, "|SD_3| != 6");
    }

    std::vector<sdcodes::SelfDualCode> all = sdcodes::enumerate_selfdual_codes(n + 1);
    for (const sdcodes::SelfDualCode& c : all)
      res.check(sdcodes::family_inverse_closed(c), "family not closed under inversion");

    if (n <= 5 && n <= cfg.max_enumeration_n) {
      gammagraph::for_each_vertex(n, cfg, [&](const Vertex& v) {
        res.check(sdcodes::sd_membership(v) == sdcodes::sd_membership_distances(v),
                  "membership by distances disagrees with membership by rank");
      });
    }

    if (n <= 5) {
      for (const sdcodes::SelfDualCode& c : all)
        for (const sdcodes::SelfDualCode& ct : all) {
          sdcodes::orthogonal_witness(c, ct);  // post-verified internally
          res.check(true, "");
        }
    }
  } catch (const gf2::Error& e) {
    res.fail(std::string("codes suite raised: ") + e.what());
    ++res.checks;
  }

  res.seconds = timer.seconds();
  return res;
}

namespace {

struct Construction {
  int n;
  int r;
  PairCase expected;
  SymMatrix difference;
  std::string label;
};

BitVector unit(int n, int i) { return BitVector::unit(n, i); }

BitVector prefix_sum(int n, int count) {  // e_1 + ... + e_count (1-based)
  BitVector v(n);
  for (int k = 0; k < count; ++k) v.set(k, true);
  return v;
}

// The explicit pair constructions from the diameter section, one per case.
std::vector<Construction> extremal_constructions(int max_n) {
  std::vector<Construction> out;
  for (int n = 2; n <= max_n; ++n) {
    int half = (n + 1) / 2;

    // All-ones Gram: r even, r <= floor((n+1)/2); d = r + 2.
    for (int r = 2; r <= half; r += 2) {
      std::vector<BitVector> xs;
      for (int i = 1; i <= r; ++i) xs.push_back(prefix_sum(n, 2 * i - 1));
      out.push_back({n, r, PairCase::NonAltI_AllOnes, sum_of_squares(n, xs),
                     "all-ones r=" + std::to_string(r) + " n=" + std::to_string(n)});
    }

    // Mixed unit Gram diagonal: r even >= 4, r <= n; d = r + 1.
    for (int r = 4; r <= n; r += 2) {
      std::vector<BitVector> xs;
      if (r % 4 == 0) {
        int k = r / 4;
        for (int i = 1; i <= 2 * k; ++i) xs.push_back(unit(n, i - 1));
        for (int i = 2 * k + 1; i <= 4 * k; ++i) {
          BitVector v(n);
          for (int e = i - 2 * k; e <= i; ++e) v.set(e - 1, true);
          xs.push_back(v);
        }
      } else {
        int k = (r + 2) / 4;
        for (int i = 1; i <= 2 * k - 1; ++i) xs.push_back(unit(n, i - 1));
        xs.push_back(prefix_sum(n, 2 * k + 1));
        for (int i = 2 * k + 1; i <= 4 * k - 3; ++i) {
          BitVector v(n);
          for (int e = i + 1 - 2 * k; e <= i + 1; ++e) v.set(e - 1, true);
          xs.push_back(v);
        }
        BitVector v(n);
        v.set(0, true);
        v.set(2 * k - 2, true);
        v.set(2 * k - 1, true);
        xs.push_back(v);
      }
      out.push_back({n, r, PairCase::NonAltI_Mixed, sum_of_squares(n, xs),
                     "mixed r=" + std::to_string(r) + " n=" + std::to_string(n)});
    }

    // Rank-one trace-zero Gram: 2 <= r <= floor((n+1)/2); d = r + 2. The
    // r = 2 instance is the all-ones overlap and is labeled as such.
    for (int r = 2; r <= half; ++r) {
      if (n < 3) break;
      std::vector<BitVector> xs;
      xs.push_back(unit(n, 0));
      xs.push_back(prefix_sum(n, 3));
      for (int i = 3; i <= r; ++i) {
        BitVector v(n);
        v.set(2 * i - 3, true);
        v.set(2 * i - 2, true);
        xs.push_back(v);
      }
      out.push_back({n, r, r == 2 ? PairCase::NonAltI_AllOnes : PairCase::NonAltII,
                     sum_of_squares(n, xs),
                     "r1tr0 r=" + std::to_string(r) + " n=" + std::to_string(n)});
    }

    // Plain case: every 1 <= r <= n; d = r.
    for (int r = 1; r <= n; ++r) {
      std::vector<BitVector> xs;
      for (int i = 1; i <= r; ++i) {
        if (i % 2 == 0) {
          xs.push_back(unit(n, i - 1));
        } else if (i == r && r == n) {
          BitVector v(n);
          v.set(n - 3, true);
          v.set(n - 1, true);
          xs.push_back(v);
        } else {
          BitVector v(n);
          v.set(i - 1, true);
          v.set(i, true);
          xs.push_back(v);
        }
      }
      out.push_back({n, r, PairCase::NonAltIII, sum_of_squares(n, xs),
                     "plain r=" + std::to_string(r) + " n=" + std::to_string(n)});
    }

    // Alternate difference, Gram rank != 1: even r, (r,n) not (2,2)/(2,3); d = r + 1.
    for (int r = 2; r <= n; r += 2) {
      if (r == 2 && n < 4) continue;
      SymMatrix diff = SymMatrix::zero(n);
      if (r == 2) {
        diff = SymMatrix::sym_product(unit(n, 0) ^ unit(n, 1), unit(n, 2) ^ unit(n, 3));
      } else {
        BitMatrix m(n, n);
        auto chain = [&m](int base, int len) {  // path-matrix block
          for (int i = 0; i < len - 1; ++i) {
            m.set(base + i, base + i + 1, true);
            m.set(base + i + 1, base + i, true);
          }
        };
        if (r % 4 == 0) {
          for (int b = 0; b < r; b += 4) chain(b, 4);
        } else {
          for (int b = 0; b + 6 < r; b += 4) chain(b, 4);
          chain(r - 6, 6);
        }
        diff = SymMatrix(std::move(m));
      }
      out.push_back({n, r, PairCase::AltHigher, diff,
                     "alt-higher r=" + std::to_string(r) + " n=" + std::to_string(n)});
    }

    // Alternate difference, rank-one Gram: even r <= floor((n+1)/2); d = r + 2.
    for (int r = 2; r <= half; r += 2) {
      std::vector<BitVector> xs;
      xs.push_back(unit(n, 0));
      for (int i = 2; i <= r; ++i) {
        BitVector v(n);
        v.set(2 * i - 3, true);
        v.set(2 * i - 2, true);
        xs.push_back(v);
      }
      xs.push_back(sum_vec(n, xs));
      out.push_back({n, r, PairCase::AltRank1, sum_of_squares(n, xs),
                     "alt-rank1 r=" + std::to_string(r) + " n=" + std::to_string(n)});
    }
  }
  return out;
}

}  // namespace

SuiteResult extremal_pairs(int max_n) {
  SuiteResult res;
  res.name = "extremal-pairs";
  Timer timer;
  for (const Construction& c : extremal_constructions(max_n)) {
    SymMatrix bmat = SymMatrix::identity(c.n) ^ c.difference;
    if (!gammagraph::is_vertex(bmat)) {
      res.fail(c.label + ": endpoint is not a vertex");
      ++res.checks;
      continue;
    }
    Vertex a = Vertex::identity(c.n);
    Vertex b{bmat};
    res.check(gf2::rank(c.difference.mat()) == c.r, c.label + ": difference rank mismatch");
    gammagraph::PairClass cls = gammagraph::classify_pair(a, b);
    res.check(cls == gammagraph::PairClass{c.expected, c.r},
              c.label + ": classified as " + gammagraph::pair_case_name(cls.kind) + "(" +
                  std::to_string(cls.r) + ")");
    res.check(gammagraph::distance_closed(a, b) == gammagraph::PairClass{c.expected, c.r}.distance(),
              c.label + ": distance mismatch");
  }
  res.seconds = timer.seconds();
  return res;
}

}  // namespace verify
