#include "gamma/symmetric.hpp"

namespace gf2 {

bool is_alternate(const SymMatrix& m) {
  for (int i = 0; i < m.dim(); ++i)
    if (m.get(i, i)) return false;
  return true;
}

SymMatrix Vertex::invert(const SymMatrix& m) {
  try {
    return SymMatrix(inverse(m.mat()));
  } catch (const Error& e) {
    if (e.code() == Errc::Singular) fail(Errc::NotAVertex, "symmetric matrix is singular");
    throw;
  }
}

SymMatrix Decomposition::reconstruct() const {
  SymMatrix acc = SymMatrix::zero(n);
  BitVector sum(n);
  for (const BitVector& x : xs) {
    acc = acc ^ SymMatrix::square(x);
    sum ^= x;
  }
  if (kind == Kind::Alternate) acc = acc ^ SymMatrix::square(sum);
  return acc;
}

namespace {

// Elementary congruence ops on the working matrix W and the transform P,
// maintaining W = P M P'.
struct Congruence {
  BitMatrix w;
  BitMatrix p;

  explicit Congruence(const SymMatrix& m)
      : w(m.mat()), p(BitMatrix::identity(m.dim())) {}

  void swap(int i, int j) {
    if (i == j) return;
    Word wi = w.row_word(i);
    w.set_row_word(i, w.row_word(j));
    w.set_row_word(j, wi);
    for (int k = 0; k < w.rows(); ++k) {
      bool bi = w.get(k, i), bj = w.get(k, j);
      w.set(k, i, bj);
      w.set(k, j, bi);
    }
    Word pi = p.row_word(i);
    p.set_row_word(i, p.row_word(j));
    p.set_row_word(j, pi);
  }

  // row dst += row src, then col dst += col src.
  void add(int dst, int src) {
    w.set_row_word(dst, w.row_word(dst) ^ w.row_word(src));
    for (int k = 0; k < w.rows(); ++k)
      if (w.get(k, src)) w.set(k, dst, !w.get(k, dst));
    p.set_row_word(dst, p.row_word(dst) ^ p.row_word(src));
  }

  // Apply an invertible 3x3 row mix T on rows (t, t+1, t+2) and the matching
  // column mix; used to rewrite a [1] (+) H block as I_3.
  void mix3(int t, const BitMatrix& tmat) {
    apply_mix3_rows(w, t, tmat);
    apply_mix3_cols(w, t, tmat);
    apply_mix3_rows(p, t, tmat);
  }

 private:
  static void apply_mix3_rows(BitMatrix& m, int t, const BitMatrix& tmat) {
    Word r[3] = {m.row_word(t), m.row_word(t + 1), m.row_word(t + 2)};
    for (int i = 0; i < 3; ++i) {
      Word acc = 0;
      for (int j = 0; j < 3; ++j)
        if (tmat.get(i, j)) acc ^= r[j];
      m.set_row_word(t + i, acc);
    }
  }

  static void apply_mix3_cols(BitMatrix& m, int t, const BitMatrix& tmat) {
    for (int k = 0; k < m.rows(); ++k) {
      bool b[3] = {m.get(k, t), m.get(k, t + 1), m.get(k, t + 2)};
      for (int i = 0; i < 3; ++i) {
        bool acc = false;
        for (int j = 0; j < 3; ++j)
          if (tmat.get(i, j)) acc ^= b[j];
        m.set(k, t + i, acc);
      }
    }
  }
};

int choose(const PivotChooser& chooser, const std::vector<int>& candidates) {
  if (!chooser) return candidates.front();
  int idx = chooser(candidates);
  return candidates[static_cast<size_t>(idx)];
}

// T (diag(1) (+) H) T' = I_3; see the brute-force unit test.
const BitMatrix& repair_matrix() {
  static const BitMatrix t = BitMatrix::parse("110\n101\n111\n");
  return t;
}

}  // namespace

std::pair<BitMatrix, CongruenceForm> congruence_canonical(const SymMatrix& m,
                                                          const PivotChooser& chooser) {
  int n = m.dim();
  Congruence c(m);
  int t = 0;
  int diag_blocks = 0;
  int hyper_blocks = 0;

  while (t < n) {
    std::vector<int> diag;
    for (int i = t; i < n; ++i)
      if (c.w.get(i, i)) diag.push_back(i);
    if (!diag.empty()) {
      int i = choose(chooser, diag);
      c.swap(t, i);
      for (int k = t + 1; k < n; ++k)
        if (c.w.get(k, t)) c.add(k, t);
      ++diag_blocks;
      ++t;
      continue;
    }
    std::vector<int> off;
    for (int i = t; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (c.w.get(i, j)) off.push_back(i * n + j);
    if (off.empty()) break;  // trailing zero block
    int pick = choose(chooser, off);
    int i = pick / n, j = pick % n;
    c.swap(t, i);
    if (j == t) j = i;
    c.swap(t + 1, j);
    for (int k = t + 2; k < n; ++k) {
      if (c.w.get(k, t + 1)) c.add(k, t);
      if (c.w.get(k, t)) c.add(k, t + 1);
    }
    ++hyper_blocks;
    t += 2;
  }

  // A nonalternate input starts with a diagonal pivot, so hyperbolic blocks
  // can be folded into the identity part via [1] (+) H ~ I_3.
  if (diag_blocks > 0) {
    while (hyper_blocks > 0) {
      c.mix3(diag_blocks - 1, repair_matrix());
      diag_blocks += 2;
      --hyper_blocks;
    }
  }

  CongruenceForm form;
  form.alternate = diag_blocks == 0;
  form.rank = diag_blocks + 2 * hyper_blocks;
  return {c.p, form};
}

std::vector<BitVector> symplectic_pairs(const SymMatrix& m, const PivotChooser& chooser) {
  require(is_alternate(m), Errc::NotAlternate, "symplectic pairs need an alternate matrix");
  require(!m.is_zero(), Errc::ZeroMatrix, "symplectic pairs of the zero matrix");
  auto [p, form] = congruence_canonical(m, chooser);
  BitMatrix pinv = inverse(p);
  std::vector<BitVector> ys;
  ys.reserve(static_cast<size_t>(form.rank));
  for (int j = 0; j < form.rank; ++j) ys.push_back(pinv.column(j));
  return ys;
}

Decomposition decompose_symmetric(const SymMatrix& m, const PivotChooser& chooser) {
  require(!m.is_zero(), Errc::ZeroMatrix, "decomposition of the zero matrix");
  int n = m.dim();
  if (is_alternate(m)) {
    std::vector<BitVector> ys = symplectic_pairs(m, chooser);
    int r = static_cast<int>(ys.size());
    std::vector<BitVector> xs(ys.begin(), ys.begin() + 2);
    BitVector prefix = ys[0] ^ ys[1];
    for (int k = 2; k + 1 < r; k += 2) {
      xs.push_back(prefix ^ ys[static_cast<size_t>(k)]);
      xs.push_back(prefix ^ ys[static_cast<size_t>(k + 1)]);
      prefix ^= ys[static_cast<size_t>(k)] ^ ys[static_cast<size_t>(k + 1)];
    }
    return {Decomposition::Kind::Alternate, std::move(xs), n};
  }
  auto [p, form] = congruence_canonical(m, chooser);
  BitMatrix pinv = inverse(p);
  std::vector<BitVector> xs;
  xs.reserve(static_cast<size_t>(form.rank));
  for (int j = 0; j < form.rank; ++j) xs.push_back(pinv.column(j));
  return {Decomposition::Kind::NonAlternate, std::move(xs), n};
}

std::optional<R1Tr0Form> is_r1tr0(const SymMatrix& m) {
  if (rank(m.mat()) != 1) return std::nullopt;
  int n = m.dim();
  std::vector<int> ones, zeros;
  for (int i = 0; i < n; ++i) (m.get(i, i) ? ones : zeros).push_back(i);
  if (ones.empty() || (ones.size() & 1) != 0) return std::nullopt;  // trace != 0
  int k = static_cast<int>(ones.size());
  BitMatrix q(n, n);
  int slot = 0;
  for (int i : ones) q.set(i, slot++, true);
  for (int i : zeros) q.set(i, slot++, true);
  // Rank-one symmetry forces m_ij = m_ii * m_jj; verify the canonical form.
  BitMatrix canon(n, n);
  for (int i = 0; i < k; ++i) canon.set_row_word(i, BitVector::mask(k));
  if (q * canon * q.transposed() != m.mat()) return std::nullopt;
  return R1Tr0Form{q, k};
}

int det_update(const Vertex& a, const BitMatrix& x, const BitMatrix& y) {
  int n = a.dim();
  require(x.rows() == n && y.rows() == n && x.cols() == y.cols(), Errc::DimensionMismatch,
          "update factors must be n x r");
  BitMatrix t = BitMatrix::identity(x.cols()) ^ (y.transposed() * a.inv().mat() * x);
  return det(t);
}

BitMatrix inverse_update(const Vertex& a, const BitMatrix& x, const BitMatrix& y) {
  int n = a.dim();
  require(x.rows() == n && y.rows() == n && x.cols() == y.cols(), Errc::DimensionMismatch,
          "update factors must be n x r");
  const BitMatrix& ainv = a.inv().mat();
  BitMatrix t = BitMatrix::identity(x.cols()) ^ (y.transposed() * ainv * x);
  require(det(t) == 1, Errc::Singular, "rank-r update is singular");
  return ainv ^ (ainv * x * inverse(t) * y.transposed() * ainv);
}

int schur_det(const BitMatrix& a11, const BitMatrix& a12, const BitMatrix& a21,
              const BitMatrix& a22) {
  require(a11.is_square() && a22.is_square(), Errc::DimensionMismatch,
          "diagonal blocks must be square");
  require(a12.rows() == a11.rows() && a12.cols() == a22.cols() && a21.rows() == a22.rows() &&
              a21.cols() == a11.cols(),
          Errc::DimensionMismatch, "blocks do not conform");
  require(det(a22) == 1, Errc::Singular, "A22 must be invertible");
  return det(a11 ^ (a12 * inverse(a22) * a21));
}

std::uint64_t triangle_key(const SymMatrix& m) {
  int n = m.dim();
  require(n * (n + 1) / 2 <= 64, Errc::TooLarge, "triangle key needs n(n+1)/2 <= 64");
  std::uint64_t key = 0;
  int t = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j, ++t)
      if (m.get(i, j)) key |= std::uint64_t{1} << t;
  return key;
}

SymMatrix sym_from_triangle_key(int n, std::uint64_t key) {
  BitMatrix m(n, n);
  int t = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j, ++t) {
      if ((key >> t) & 1u) {
        m.set(i, j, true);
        m.set(j, i, true);
      }
    }
  }
  return SymMatrix(std::move(m));
}

}  // namespace gf2
