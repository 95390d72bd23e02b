#include <doctest.h>

#include <set>

#include "gamma/codes.hpp"
#include "gamma/random.hpp"
#include "gamma/verify.hpp"

using gf2::BitMatrix;
using gf2::BitVector;
using gf2::Rng;
using gf2::SymMatrix;
using gf2::Vertex;

TEST_CASE("identity batteries at unit-test scale") {
  verify::SuiteResult res = verify::identities(400, 2026u);
  CHECK(res.failures == 0);
}

TEST_CASE("extremal pair constructions classify as predicted up to n=6") {
  verify::SuiteResult res = verify::extremal_pairs(6);
  CHECK(res.failures == 0);
  CHECK(res.checks > 0);
  for (const std::string& m : res.messages) MESSAGE(m);
}

TEST_CASE("barred spans of rank<=1 Gram vector systems are self-orthogonal") {
  Rng rng(51);
  for (int t = 0; t < 200; ++t) {
    int n = 3 + static_cast<int>(rng() % 6);
    int r = 1 + static_cast<int>(rng() % ((n + 1) / 2));

    // Model vectors with Gram d d' (shared first coordinate for d_i = 1,
    // pairwise disjoint even blocks elsewhere), mixed by a random orthogonal
    // map and an invertible recombination; both preserve Gram rank <= 1.
    std::vector<BitVector> xs;
    int cursor = 1;
    for (int i = 0; i < r; ++i) {
      bool one = rng() & 1;
      BitVector x(n);
      if (one) x.set(0, true);
      if (cursor + 1 < n) {
        x.set(cursor, true);
        x.set(cursor + 1, true);
      }
      cursor += 2;
      xs.push_back(x);
    }
    BitMatrix q = gf2::random_orthogonal(rng, n);
    for (BitVector& x : xs) x = q * x;

    BitMatrix gram(r, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        gram.set(i, j, gf2::dot(xs[static_cast<size_t>(i)], xs[static_cast<size_t>(j)]));
    REQUIRE(gf2::rank(gram) <= 1);

    std::vector<BitVector> barred;
    for (const BitVector& x : xs) barred.push_back(sdcodes::bar(x));
    for (size_t i = 0; i < barred.size(); ++i)
      for (size_t j = i; j < barred.size(); ++j) CHECK(gf2::dot(barred[i], barred[j]) == 0);
    sdcodes::LinearCode span(n + 1, barred);
    CHECK(sdcodes::is_self_orthogonal(span));
    if (gf2::linearly_independent(xs)) CHECK(r <= (n + 1) / 2);
  }
}

TEST_CASE("decomposition span is independent of the decomposition") {
  Rng rng(52);
  for (int t = 0; t < 100; ++t) {
    int n = 2 + static_cast<int>(rng() % 6);
    SymMatrix m = gf2::random_symmetric(rng, n);
    if (m.is_zero()) continue;
    gf2::Decomposition base = gf2::decompose_symmetric(m);
    gf2::Span span(n);
    for (const BitVector& x : base.xs) span.insert(x);
    gf2::PivotChooser chooser = [&rng](const std::vector<int>& cands) {
      return static_cast<int>(rng() % cands.size());
    };
    gf2::Decomposition other = gf2::decompose_symmetric(m, chooser);
    CHECK(other.kind == base.kind);
    CHECK(other.rank() == base.rank());
    for (const BitVector& y : other.xs) CHECK(span.contains(y));
  }
}

TEST_CASE("classification is invariant under re-decomposition") {
  Rng rng(53);
  gammagraph::GraphConfig cfg;
  std::vector<Vertex> verts = gammagraph::enumerate_vertices(4, cfg);
  for (int t = 0; t < 100; ++t) {
    const Vertex& a = verts[rng() % verts.size()];
    const Vertex& b = verts[rng() % verts.size()];
    if (a == b) continue;
    int d = gammagraph::distance_closed(a, b);

    // Rebuild the distance from 100 randomized valid decompositions.
    SymMatrix diff = a.mat() ^ b.mat();
    for (int k = 0; k < 100; ++k) {
      gf2::PivotChooser chooser = [&rng](const std::vector<int>& cands) {
        return static_cast<int>(rng() % cands.size());
      };
      gf2::Decomposition dec = gf2::decompose_symmetric(diff, chooser);
      REQUIRE(dec.reconstruct() == diff);
      std::vector<BitVector> vs = dec.xs;
      if (dec.kind == gf2::Decomposition::Kind::Alternate) {
        BitVector sum(dec.n);
        for (const BitVector& x : dec.xs) sum ^= x;
        vs.push_back(sum);
      }
      int mcount = static_cast<int>(vs.size());
      BitMatrix gram(mcount, mcount);
      for (int i = 0; i < mcount; ++i) {
        BitVector ai = a.inv().mat() * vs[static_cast<size_t>(i)];
        for (int j = 0; j < mcount; ++j)
          gram.set(j, i, gf2::dot(vs[static_cast<size_t>(j)], ai));
      }
      int r = dec.rank();
      int rebuilt;
      if (dec.kind == gf2::Decomposition::Kind::Alternate) {
        rebuilt = gf2::rank(gram) == 1 ? r + 2 : r + 1;
      } else {
        bool all_diag = true;
        for (int i = 0; i < r; ++i) all_diag = all_diag && gram.get(i, i);
        if (all_diag) {
          rebuilt = gram == BitMatrix::ones(r, r) ? r + 2 : r + 1;
        } else if (gf2::is_r1tr0(SymMatrix(gram))) {
          rebuilt = r + 2;
        } else {
          rebuilt = r;
        }
      }
      CHECK(rebuilt == d);
    }
  }
}

TEST_CASE("distance is invariant under congruence and inversion automorphisms") {
  Rng rng(54);
  for (int t = 0; t < 200; ++t) {
    int n = 2 + static_cast<int>(rng() % 4);
    Vertex a = gf2::random_vertex(rng, n);
    Vertex b = gf2::random_vertex(rng, n);
    int d = gammagraph::distance_closed(a, b);

    BitMatrix p = gf2::random_invertible(rng, n);
    Vertex pa{SymMatrix(p * a.mat().mat() * p.transposed())};
    Vertex pb{SymMatrix(p * b.mat().mat() * p.transposed())};
    CHECK(gammagraph::distance_closed(pa, pb) == d);

    CHECK(gammagraph::distance_closed(a.inverted(), b.inverted()) == d);
  }
}

TEST_CASE("A-prime invertibility matches the basis parity class, n in {3,5}") {
  for (int n : {3, 5}) {
    for (const sdcodes::SelfDualCode& c : sdcodes::enumerate_selfdual_codes(n + 1)) {
      for (const std::vector<BitVector>& basis : sdcodes::all_bases(c.code())) {
        SymMatrix aprime = SymMatrix::identity(n);
        BitVector sum(n + 1);
        for (const BitVector& y : basis) {
          aprime = aprime ^ SymMatrix::square(sdcodes::underline(y));
          sum ^= y;
        }
        bool invertible = gf2::det(aprime.mat()) == 1;
        CHECK(invertible == (sdcodes::basis_parity_class(basis) == 2));
        SymMatrix asecond = aprime ^ SymMatrix::square(sdcodes::underline(sum));
        CHECK(gf2::det(asecond.mat()) == 1);
        if ((n + 1) / 2 % 2 == 1) {
          CHECK(gf2::rank((asecond ^ SymMatrix::identity(n)).mat()) != (n + 1) / 2);
          Vertex v{asecond};
          CHECK_FALSE(sdcodes::sd_membership(v));
        }
      }
    }
  }
}

TEST_CASE("classification is symmetric in the pair") {
  Rng rng(55);
  for (int t = 0; t < 300; ++t) {
    int n = 2 + static_cast<int>(rng() % 5);
    Vertex a = gf2::random_vertex(rng, n);
    Vertex b = gf2::random_vertex(rng, n);
    gammagraph::PairClass ab = gammagraph::classify_pair(a, b);
    gammagraph::PairClass ba = gammagraph::classify_pair(b, a);
    CHECK(ab == ba);
  }
}

TEST_CASE("sampled distances stay within the diameter and attain it from I_n") {
  Rng rng(56);
  for (int n : {4, 5}) {
    std::vector<Vertex> verts = gammagraph::enumerate_vertices(n, {5, 1});
    int diam = gammagraph::diameter_closed(n);
    int max_seen = 0;
    for (int t = 0; t < 2000; ++t) {
      const Vertex& a = verts[rng() % verts.size()];
      const Vertex& b = verts[rng() % verts.size()];
      int d = gammagraph::distance_closed(a, b);
      CHECK(d <= diam);
      max_seen = std::max(max_seen, d);
    }
    CHECK(max_seen <= diam);
    Vertex in = Vertex::identity(n);
    int from_identity = 0;
    for (const Vertex& v : verts)
      from_identity = std::max(from_identity, gammagraph::distance_closed(in, v));
    CHECK(from_identity == diam);
  }
}

TEST_CASE("geodesic suite at n=3 with seeded pairs") {
  verify::SuiteResult res = verify::geodesics(3, 100, 99, {});
  CHECK(res.failures == 0);
}

TEST_CASE("oracle equivalence suite at n=2") {
  verify::SuiteResult res = verify::oracle_equivalence(2, 0, 1, {});
  CHECK(res.failures == 0);
  CHECK(res.checks == 3 * 6);  // C(4,2) pairs, three checks per pair
}
