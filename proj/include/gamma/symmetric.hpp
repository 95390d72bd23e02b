#ifndef GAMMA_SYMMETRIC_HPP
#define GAMMA_SYMMETRIC_HPP

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "gamma/bits.hpp"

namespace gf2 {

// Symmetric matrix over GF(2); construction checks symmetry bit for bit.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(BitMatrix m) : m_(std::move(m)) {
    require(m_.is_symmetric(), Errc::NotSymmetric, "matrix is not symmetric");
  }

  static SymMatrix identity(int n) { return SymMatrix(BitMatrix::identity(n)); }
  static SymMatrix zero(int n) { return SymMatrix(BitMatrix(n, n)); }
  // x x' as a symmetric rank-one matrix (x^2 in the decomposition calculus).
  static SymMatrix square(const BitVector& x) { return SymMatrix(BitMatrix::outer(x, x)); }
  // x o y = x y' + y x'
  static SymMatrix sym_product(const BitVector& x, const BitVector& y) {
    return SymMatrix(BitMatrix::outer(x, y) ^ BitMatrix::outer(y, x));
  }
  static SymMatrix parse(std::string_view text) { return SymMatrix(BitMatrix::parse(text)); }

  int dim() const { return m_.rows(); }
  bool get(int i, int j) const { return m_.get(i, j); }
  const BitMatrix& mat() const { return m_; }
  bool is_zero() const { return m_.is_zero(); }

  friend SymMatrix operator^(const SymMatrix& a, const SymMatrix& b) {
    return SymMatrix(a.m_ ^ b.m_);
  }
  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

  std::string to_string() const { return m_.to_string(); }

 private:
  BitMatrix m_;
};

// Zero diagonal; equivalently x'Mx = 0 for every x.
bool is_alternate(const SymMatrix& m);

// Invertible symmetric matrix with its inverse cached.
class Vertex {
 public:
  explicit Vertex(SymMatrix m) : mat_(std::move(m)), inv_(invert(mat_)) {}
  Vertex(SymMatrix m, SymMatrix inv) : mat_(std::move(m)), inv_(std::move(inv)) {}

  static Vertex identity(int n) { return Vertex(SymMatrix::identity(n), SymMatrix::identity(n)); }

  int dim() const { return mat_.dim(); }
  const SymMatrix& mat() const { return mat_; }
  const SymMatrix& inv() const { return inv_; }
  Vertex inverted() const { return Vertex(inv_, mat_); }

  friend bool operator==(const Vertex& a, const Vertex& b) { return a.mat_ == b.mat_; }

 private:
  static SymMatrix invert(const SymMatrix& m);

  SymMatrix mat_;
  SymMatrix inv_;
};

// Sum-of-squares form of a nonzero symmetric matrix. NonAlternate
// reconstructs as sum x_i^2; Alternate as sum x_i^2 + (sum x_i)^2 with an
// even number of x_i. The x_i are linearly independent and their count is
// the rank of the matrix.
struct Decomposition {
  enum class Kind { NonAlternate, Alternate };
  Kind kind;
  std::vector<BitVector> xs;
  int n;

  int rank() const { return static_cast<int>(xs.size()); }
  SymMatrix reconstruct() const;
};

struct CongruenceForm {
  bool alternate;
  int rank;
};

using PivotChooser = std::function<int(const std::vector<int>&)>;

// Invertible P with P M P' = I_r (+) 0 for nonalternate M of rank r, or
// H (+) ... (+) H (+) 0 for alternate M. The default pivot choice (lowest
// admissible index) makes the result deterministic; tests pass a randomized
// chooser to exercise alternative decompositions.
std::pair<BitMatrix, CongruenceForm> congruence_canonical(const SymMatrix& m,
                                                          const PivotChooser& choose = {});

// Linearly independent y_1..y_r with M = y_1 o y_2 + ... + y_{r-1} o y_r.
std::vector<BitVector> symplectic_pairs(const SymMatrix& m, const PivotChooser& choose = {});

Decomposition decompose_symmetric(const SymMatrix& m, const PivotChooser& choose = {});

// Rank-one, trace-zero test: M = Q (J_{kxk} (+) 0) Q' for a permutation Q and
// even k >= 2. Such matrices satisfy (I+M)^{-1} = I+M.
struct R1Tr0Form {
  BitMatrix permutation;
  int k;
};
std::optional<R1Tr0Form> is_r1tr0(const SymMatrix& m);

// det(A + XY') via det(I_r + Y'A^{-1}X).
int det_update(const Vertex& a, const BitMatrix& x, const BitMatrix& y);
// (A + XY')^{-1} = A^{-1} + A^{-1}X (I_r + Y'A^{-1}X)^{-1} Y'A^{-1}.
BitMatrix inverse_update(const Vertex& a, const BitMatrix& x, const BitMatrix& y);

// det of the assembled block matrix via det(A22) * det(A11 + A12 A22^{-1} A21).
int schur_det(const BitMatrix& a11, const BitMatrix& a12, const BitMatrix& a21,
              const BitMatrix& a22);

// Packed upper-triangle key; unique per symmetric matrix for n <= 10.
std::uint64_t triangle_key(const SymMatrix& m);
SymMatrix sym_from_triangle_key(int n, std::uint64_t key);

}  // namespace gf2

#endif
