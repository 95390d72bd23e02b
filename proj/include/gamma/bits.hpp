#ifndef GAMMA_BITS_HPP
#define GAMMA_BITS_HPP

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "gamma/errors.hpp"

namespace gf2 {

using Word = std::uint64_t;

// Column vector over GF(2), packed into one machine word. Coordinate i is
// bit i of the word; bits at positions >= size() are kept zero.
class BitVector {
 public:
  static constexpr int kMaxLen = 64;

  BitVector() = default;
  explicit BitVector(int len) : len_(check_len(len)) {}
  BitVector(int len, Word bits) : len_(check_len(len)), bits_(bits & mask(len)) {}

  static BitVector unit(int len, int i);
  static BitVector ones(int len) { return BitVector(len, mask(len)); }
  static BitVector parse(std::string_view line);

  int size() const { return len_; }
  Word word() const { return bits_; }
  bool get(int i) const { return (bits_ >> i) & 1u; }
  void set(int i, bool v) { bits_ = v ? (bits_ | (Word{1} << i)) : (bits_ & ~(Word{1} << i)); }

  bool is_zero() const { return bits_ == 0; }
  int weight() const { return std::popcount(bits_); }
  // x'x over GF(2): the parity of the weight.
  int self_dot() const { return weight() & 1; }

  BitVector& operator^=(const BitVector& o) {
    require(len_ == o.len_, Errc::DimensionMismatch, "vector lengths differ");
    bits_ ^= o.bits_;
    return *this;
  }
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend bool operator<(const BitVector& a, const BitVector& b) {
    return a.len_ != b.len_ ? a.len_ < b.len_ : a.bits_ < b.bits_;
  }

  std::string to_string() const;

  static Word mask(int len) { return len >= 64 ? ~Word{0} : (Word{1} << len) - 1; }

 private:
  static int check_len(int len) {
    require(len >= 0 && len <= kMaxLen, Errc::TooLarge, "vector length out of range");
    return len;
  }

  int len_ = 0;
  Word bits_ = 0;
};

int dot(const BitVector& u, const BitVector& v);

// Row-major matrix over GF(2); each row is one packed word (cols <= 64).
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols);

  static BitMatrix identity(int n);
  static BitMatrix zero(int rows, int cols) { return BitMatrix(rows, cols); }
  static BitMatrix ones(int rows, int cols);
  static BitMatrix from_rows(const std::vector<BitVector>& rows);
  // x y' (rank <= 1)
  static BitMatrix outer(const BitVector& x, const BitVector& y);
  static BitMatrix parse(std::string_view text);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool get(int i, int j) const { return (row_[static_cast<size_t>(i)] >> j) & 1u; }
  void set(int i, int j, bool v);

  Word row_word(int i) const { return row_[static_cast<size_t>(i)]; }
  void set_row_word(int i, Word w) { row_[static_cast<size_t>(i)] = w & BitVector::mask(cols_); }
  BitVector row(int i) const { return BitVector(cols_, row_[static_cast<size_t>(i)]); }
  BitVector column(int j) const;
  BitVector diagonal() const;

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  BitMatrix& operator^=(const BitMatrix& o);
  friend BitMatrix operator^(BitMatrix a, const BitMatrix& b) { return a ^= b; }
  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
  friend BitVector operator*(const BitMatrix& a, const BitVector& x);

  BitMatrix transposed() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Word> row_;
};

std::ostream& operator<<(std::ostream& os, const BitMatrix& m);

int rank(const BitMatrix& m);
int det(const BitMatrix& m);
BitMatrix inverse(const BitMatrix& m);

// Reduced row echelon form with zero rows dropped; canonical per row space.
BitMatrix rref(const BitMatrix& m);
std::vector<BitVector> nullspace_basis(const BitMatrix& m);

// Span utilities over packed vectors.
class Span {
 public:
  Span() = default;
  explicit Span(int len) : len_(len) {}

  int dim() const { return static_cast<int>(rows_.size()); }
  int length() const { return len_; }
  bool contains(const BitVector& v) const;
  // Returns false if v was already in the span, true if it enlarged it.
  bool insert(const BitVector& v);
  // Coefficients of v in terms of the inserted generators, if v is in the span.
  bool solve(const BitVector& v, BitVector& coeffs_out) const;

 private:
  struct PivotRow {
    Word reduced;  // reduced generator
    Word combo;    // combination of original generators producing it
    int pivot;
  };
  int len_ = 0;
  int inserted_ = 0;
  std::vector<PivotRow> rows_;
  std::vector<Word> originals_;
};

bool linearly_independent(const std::vector<BitVector>& vs);

}  // namespace gf2

#endif
