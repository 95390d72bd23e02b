#include <doctest.h>

#include "gamma/random.hpp"
#include "gamma/symmetric.hpp"

using namespace gf2;

namespace {

// Assembled bordered identity: [[a,1+a,j'],[1+a,1+a,j'],[j,j,I_m]].
BitMatrix bordered_identity(int m, bool a) {
  BitMatrix w(m + 2, m + 2);
  w.set(0, 0, a);
  w.set(0, 1, !a);
  w.set(1, 0, !a);
  w.set(1, 1, !a);
  for (int j = 0; j < m; ++j) {
    w.set(0, 2 + j, true);
    w.set(1, 2 + j, true);
    w.set(2 + j, 0, true);
    w.set(2 + j, 1, true);
    w.set(2 + j, 2 + j, true);
  }
  return w;
}

}  // namespace

TEST_CASE("symmetry is checked at construction") {
  CHECK_THROWS_AS(SymMatrix(BitMatrix::parse("01\n00\n")), Error);
  CHECK_NOTHROW(SymMatrix(BitMatrix::parse("01\n10\n")));
}

TEST_CASE("alternate test") {
  CHECK(is_alternate(SymMatrix::zero(3)));
  CHECK_FALSE(is_alternate(SymMatrix::identity(2)));
  CHECK(is_alternate(SymMatrix::parse("01\n10\n")));
}

TEST_CASE("vertex caches a symmetric inverse") {
  Vertex v{SymMatrix::parse("011\n101\n111\n")};
  CHECK(v.mat().mat() * v.inv().mat() == BitMatrix::identity(3));
  CHECK_THROWS_AS(Vertex{SymMatrix::parse("11\n11\n")}, Error);
}

TEST_CASE("det_update examples") {
  Vertex i3 = Vertex::identity(3);
  CHECK(det_update(i3, BitMatrix::zero(3, 1), BitMatrix::zero(3, 1)) == 1);
  BitMatrix e1(3, 1);
  e1.set(0, 0, true);
  CHECK(det_update(i3, e1, e1) == 0);
  CHECK_THROWS_AS(det_update(i3, BitMatrix::zero(2, 1), BitMatrix::zero(3, 1)), Error);
}

TEST_CASE("inverse_update examples") {
  Vertex i3 = Vertex::identity(3);
  BitMatrix zero(3, 1);
  CHECK(inverse_update(i3, zero, zero) == BitMatrix::identity(3));
  BitMatrix x(3, 1);
  x.set(0, 0, true);
  x.set(1, 0, true);
  BitMatrix direct = inverse(BitMatrix::identity(3) ^ (x * x.transposed()));
  CHECK(inverse_update(i3, x, x) == direct);
  BitMatrix e1(3, 1);
  e1.set(0, 0, true);
  CHECK_THROWS_AS(inverse_update(i3, e1, e1), Error);
}

TEST_CASE("schur determinant on block-diagonal and bordered-identity matrices") {
  Rng rng(21);
  for (int t = 0; t < 50; ++t) {
    BitMatrix a11 = random_matrix(rng, 3, 3);
    BitMatrix a22 = random_invertible(rng, 2);
    CHECK(schur_det(a11, BitMatrix::zero(3, 2), BitMatrix::zero(2, 3), a22) == det(a11));
  }

  // The bordered-identity family pairs a with the parity of m; both shapes are in SGL.
  for (int m : {1, 2, 3, 4}) {
    bool a = m % 2 == 1;
    BitMatrix w = bordered_identity(m, a);
    CHECK(w.is_symmetric());
    CHECK(det(w) == 1);
    BitMatrix a11(2, 2), a12(2, m), a21(m, 2), a22(m, m);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) a11.set(i, j, w.get(i, j));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < m; ++j) a12.set(i, j, w.get(i, 2 + j));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < 2; ++j) a21.set(i, j, w.get(2 + i, j));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) a22.set(i, j, w.get(2 + i, 2 + j));
    CHECK(schur_det(a11, a12, a21, a22) == 1);
  }
  // The wrong pairing is singular.
  CHECK(det(bordered_identity(2, true)) == 0);

  CHECK_THROWS_AS(schur_det(BitMatrix::identity(2), BitMatrix::zero(2, 2),
                            BitMatrix::zero(2, 2), BitMatrix::ones(2, 2)),
                  Error);
}

TEST_CASE("r1tr0 recognition") {
  SymMatrix j2pad = SymMatrix::parse("110\n110\n000\n");
  auto form = is_r1tr0(j2pad);
  REQUIRE(form.has_value());
  CHECK(form->k == 2);
  CHECK(form->permutation == BitMatrix::identity(3));

  CHECK_FALSE(is_r1tr0(SymMatrix::identity(3)).has_value());
  CHECK_FALSE(is_r1tr0(SymMatrix::square(BitVector::unit(3, 0))).has_value());

  // Scattered support needs a nontrivial permutation.
  SymMatrix scattered = SymMatrix::parse("101\n000\n101\n");
  auto f2 = is_r1tr0(scattered);
  REQUIRE(f2.has_value());
  CHECK(f2->k == 2);
  BitMatrix canon(3, 3);
  canon.set_row_word(0, 3);
  canon.set_row_word(1, 3);
  CHECK(f2->permutation * canon * f2->permutation.transposed() == scattered.mat());
}

TEST_CASE("congruence canonical form on the exhaustive 3x3 set") {
  for (std::uint64_t key = 0; key < 64; ++key) {
    SymMatrix m = sym_from_triangle_key(3, key);
    auto [p, form] = congruence_canonical(m);
    CHECK(det(p) == 1);
    CHECK(form.rank == rank(m.mat()));
    CHECK(form.alternate == is_alternate(m));
    BitMatrix expected(3, 3);
    if (form.alternate) {
      for (int b = 0; b + 1 < form.rank; b += 2) {
        expected.set(b, b + 1, true);
        expected.set(b + 1, b, true);
      }
    } else {
      for (int i = 0; i < form.rank; ++i) expected.set(i, i, true);
    }
    CHECK(p * m.mat() * p.transposed() == expected);
  }
  auto [p5, f5] = congruence_canonical(SymMatrix::identity(5));
  CHECK(p5 == BitMatrix::identity(5));
  CHECK(f5.rank == 5);
  auto [pj, fj] = congruence_canonical(SymMatrix(BitMatrix::ones(3, 3)));
  CHECK(fj.rank == 1);
  CHECK_FALSE(fj.alternate);
}

TEST_CASE("the 3x3 repair matrix is rederived by brute force over GL_3") {
  // T ([1] (+) H) T' = I_3 with T invertible; the implementation hard-codes
  // one solution, which the exhaustive scan must contain.
  BitMatrix g = BitMatrix::parse("100\n001\n010\n");
  BitMatrix hard = BitMatrix::parse("110\n101\n111\n");
  bool hard_ok = false;
  int solutions = 0;
  for (Word bits = 0; bits < 512; ++bits) {
    BitMatrix t(3, 3);
    for (int i = 0; i < 3; ++i) t.set_row_word(i, (bits >> (3 * i)) & 7u);
    if (det(t) != 1) continue;
    if (t * g * t.transposed() == BitMatrix::identity(3)) {
      ++solutions;
      if (t == hard) hard_ok = true;
    }
  }
  CHECK(solutions > 0);
  CHECK(hard_ok);
}

TEST_CASE("congruence canonical form on random matrices up to n=8") {
  Rng rng(22);
  for (int t = 0; t < 400; ++t) {
    int n = 1 + static_cast<int>(rng() % 8);
    SymMatrix m = random_symmetric(rng, n);
    auto [p, form] = congruence_canonical(m);
    CHECK(det(p) == 1);
    CHECK(form.rank == rank(m.mat()));
    BitMatrix canon = p * m.mat() * p.transposed();
    BitMatrix expected(n, n);
    if (form.alternate) {
      for (int b = 0; b + 1 < form.rank; b += 2) {
        expected.set(b, b + 1, true);
        expected.set(b + 1, b, true);
      }
    } else {
      for (int i = 0; i < form.rank; ++i) expected.set(i, i, true);
    }
    CHECK(canon == expected);
  }
}

TEST_CASE("symplectic pairs reconstruct alternate matrices") {
  SymMatrix h = SymMatrix::parse("01\n10\n");
  std::vector<BitVector> ys = symplectic_pairs(h);
  REQUIRE(ys.size() == 2);
  CHECK(SymMatrix::sym_product(ys[0], ys[1]) == h);

  // 4x4 path-form block: e1 o e2 + e3 o (e2 + e4).
  SymMatrix c = SymMatrix::parse("0100\n1010\n0101\n0010\n");
  std::vector<BitVector> cy = symplectic_pairs(c);
  REQUIRE(cy.size() == 4);
  SymMatrix rebuilt = SymMatrix::sym_product(cy[0], cy[1]) ^ SymMatrix::sym_product(cy[2], cy[3]);
  CHECK(rebuilt == c);
  CHECK(linearly_independent(cy));

  CHECK_THROWS_AS(symplectic_pairs(SymMatrix::identity(2)), Error);
  CHECK_THROWS_AS(symplectic_pairs(SymMatrix::zero(2)), Error);
}

TEST_CASE("decomposition examples") {
  SymMatrix e1sq = SymMatrix::square(BitVector::unit(3, 0));
  Decomposition d1 = decompose_symmetric(e1sq);
  CHECK(d1.kind == Decomposition::Kind::NonAlternate);
  REQUIRE(d1.xs.size() == 1);
  CHECK(d1.xs[0] == BitVector::unit(3, 0));

  SymMatrix h = SymMatrix::parse("01\n10\n");
  Decomposition d2 = decompose_symmetric(h);
  CHECK(d2.kind == Decomposition::Kind::Alternate);
  REQUIRE(d2.xs.size() == 2);
  CHECK(d2.reconstruct() == h);

  // Difference of the worked self-dual example matrix and the identity.
  SymMatrix a = SymMatrix::parse("011\n101\n111\n");
  SymMatrix diff = a ^ SymMatrix::identity(3);
  Decomposition d3 = decompose_symmetric(diff);
  CHECK(d3.kind == Decomposition::Kind::NonAlternate);
  CHECK(d3.rank() == 2);
  CHECK(d3.reconstruct() == diff);
  CHECK(linearly_independent(d3.xs));

  CHECK_THROWS_AS(decompose_symmetric(SymMatrix::zero(3)), Error);
}

TEST_CASE("decomposition reconstructs random symmetric matrices") {
  Rng rng(23);
  for (int t = 0; t < 500; ++t) {
    int n = 1 + static_cast<int>(rng() % 8);
    SymMatrix m = random_symmetric(rng, n);
    if (m.is_zero()) continue;
    Decomposition d = decompose_symmetric(m);
    CHECK(d.reconstruct() == m);
    CHECK(d.rank() == rank(m.mat()));
    CHECK(linearly_independent(d.xs));
    if (d.kind == Decomposition::Kind::Alternate) CHECK(d.rank() % 2 == 0);
  }
}

TEST_CASE("randomized pivot choices still produce valid decompositions") {
  Rng rng(24);
  for (int t = 0; t < 200; ++t) {
    int n = 2 + static_cast<int>(rng() % 7);
    SymMatrix m = random_symmetric(rng, n);
    if (m.is_zero()) continue;
    PivotChooser chooser = [&rng](const std::vector<int>& cands) {
      return static_cast<int>(rng() % cands.size());
    };
    Decomposition d = decompose_symmetric(m, chooser);
    CHECK(d.reconstruct() == m);
    CHECK(linearly_independent(d.xs));
  }
}

TEST_CASE("triangle key round trip") {
  Rng rng(25);
  for (int t = 0; t < 200; ++t) {
    int n = 1 + static_cast<int>(rng() % 8);
    SymMatrix m = random_symmetric(rng, n);
    CHECK(sym_from_triangle_key(n, triangle_key(m)) == m);
  }
}
