#include "gamma/random.hpp"

#include <algorithm>

namespace gf2 {

BitVector random_vector(Rng& rng, int n) { return BitVector(n, rng()); }

BitVector random_nonzero_vector(Rng& rng, int n) {
  while (true) {
    BitVector v = random_vector(rng, n);
    if (!v.is_zero()) return v;
  }
}

BitVector random_even_weight_vector(Rng& rng, int n, int min_weight) {
  while (true) {
    BitVector v = random_vector(rng, n);
    if (v.self_dot() == 0 && v.weight() >= min_weight) return v;
  }
}

BitMatrix random_matrix(Rng& rng, int rows, int cols) {
  BitMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) m.set_row_word(i, rng());
  return m;
}

BitMatrix random_invertible(Rng& rng, int n) {
  while (true) {
    BitMatrix m = random_matrix(rng, n, n);
    if (det(m) == 1) return m;
  }
}

SymMatrix random_symmetric(Rng& rng, int n) {
  BitMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      bool b = rng() & 1;
      m.set(i, j, b);
      m.set(j, i, b);
    }
  return SymMatrix(std::move(m));
}

SymMatrix random_alternate(Rng& rng, int n) {
  BitMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      bool b = rng() & 1;
      m.set(i, j, b);
      m.set(j, i, b);
    }
  return SymMatrix(std::move(m));
}

Vertex random_vertex(Rng& rng, int n) {
  while (true) {
    SymMatrix m = random_symmetric(rng, n);
    if (det(m.mat()) == 1) return Vertex(std::move(m));
  }
}

BitMatrix random_orthogonal(Rng& rng, int n) {
  // Random permutation times transvections I + vv' with even-weight v;
  // both factors are orthogonal over GF(2).
  std::vector<int> perm(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  BitMatrix p(n, n);
  for (int i = 0; i < n; ++i) p.set(perm[static_cast<size_t>(i)], i, true);
  if (n < 2) return p;
  for (int t = 0; t < 2 * n; ++t) {
    BitVector v = random_even_weight_vector(rng, n, 2);
    p = (BitMatrix::identity(n) ^ BitMatrix::outer(v, v)) * p;
  }
  return p;
}

std::vector<BitVector> random_independent(Rng& rng, int n, int r) {
  require(r <= n, Errc::InvalidArgument, "cannot pick more independent vectors than n");
  std::vector<BitVector> out;
  Span span(n);
  while (static_cast<int>(out.size()) < r) {
    BitVector v = random_nonzero_vector(rng, n);
    if (span.insert(v)) out.push_back(v);
  }
  return out;
}

}  // namespace gf2
