#include "gamma/bits.hpp"

#include <bit>
#include <ostream>
#include <sstream>

namespace gf2 {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DimensionMismatch: return "dimension mismatch";
    case Errc::NotSymmetric: return "not symmetric";
    case Errc::Singular: return "singular";
    case Errc::NotAVertex: return "not a vertex";
    case Errc::ZeroMatrix: return "zero matrix";
    case Errc::NotAlternate: return "not alternate";
    case Errc::JConditionViolated: return "j-condition violated";
    case Errc::NoExtension: return "no extension";
    case Errc::TooLarge: return "too large";
    case Errc::NoDescent: return "no descent";
    case Errc::EvenDimension: return "even dimension";
    case Errc::NotInSD: return "not in SD";
    case Errc::WitnessPostCheckFailed: return "witness post-check failed";
    case Errc::InvalidArgument: return "invalid argument";
    case Errc::ParseError: return "parse error";
    case Errc::Io: return "i/o error";
  }
  return "error";
}

BitVector BitVector::unit(int len, int i) {
  require(i >= 0 && i < len, Errc::InvalidArgument, "unit index out of range");
  return BitVector(len, Word{1} << i);
}

BitVector BitVector::parse(std::string_view line) {
  require(!line.empty(), Errc::ParseError, "empty vector line");
  require(line.size() <= kMaxLen, Errc::TooLarge, "vector line too long");
  BitVector v(static_cast<int>(line.size()));
  for (size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    require(c == '0' || c == '1', Errc::ParseError, "vector characters must be '0' or '1'");
    if (c == '1') v.set(static_cast<int>(i), true);
  }
  return v;
}

std::string BitVector::to_string() const {
  std::string s(static_cast<size_t>(len_), '0');
  for (int i = 0; i < len_; ++i)
    if (get(i)) s[static_cast<size_t>(i)] = '1';
  return s;
}

int dot(const BitVector& u, const BitVector& v) {
  require(u.size() == v.size(), Errc::DimensionMismatch, "dot of vectors with different lengths");
  return std::popcount(u.word() & v.word()) & 1;
}

BitMatrix::BitMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  require(rows >= 0 && cols >= 0 && cols <= BitVector::kMaxLen, Errc::TooLarge,
          "matrix dimensions out of range");
  row_.assign(static_cast<size_t>(rows), 0);
}

BitMatrix BitMatrix::identity(int n) {
  BitMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::ones(int rows, int cols) {
  BitMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) m.set_row_word(i, ~Word{0});
  return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVector>& rows) {
  require(!rows.empty(), Errc::InvalidArgument, "matrix needs at least one row");
  BitMatrix m(static_cast<int>(rows.size()), rows.front().size());
  for (size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == m.cols_, Errc::DimensionMismatch, "rows have different lengths");
    m.row_[i] = rows[i].word();
  }
  return m;
}

BitMatrix BitMatrix::outer(const BitVector& x, const BitVector& y) {
  BitMatrix m(x.size(), y.size());
  for (int i = 0; i < x.size(); ++i)
    if (x.get(i)) m.row_[static_cast<size_t>(i)] = y.word();
  return m;
}

BitMatrix BitMatrix::parse(std::string_view text) {
  std::vector<BitVector> rows;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    rows.push_back(BitVector::parse(line));
    require(rows.back().size() == rows.front().size(), Errc::ParseError, "ragged matrix rows");
  }
  require(!rows.empty(), Errc::ParseError, "empty matrix text");
  return from_rows(rows);
}

void BitMatrix::set(int i, int j, bool v) {
  Word& w = row_[static_cast<size_t>(i)];
  w = v ? (w | (Word{1} << j)) : (w & ~(Word{1} << j));
}

BitVector BitMatrix::column(int j) const {
  BitVector c(rows_);
  for (int i = 0; i < rows_; ++i) c.set(i, get(i, j));
  return c;
}

BitVector BitMatrix::diagonal() const {
  int n = rows_ < cols_ ? rows_ : cols_;
  BitVector d(n);
  for (int i = 0; i < n; ++i) d.set(i, get(i, i));
  return d;
}

bool BitMatrix::is_zero() const {
  for (Word w : row_)
    if (w) return false;
  return true;
}

bool BitMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (get(i, j) != get(j, i)) return false;
  return true;
}

BitMatrix& BitMatrix::operator^=(const BitMatrix& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, Errc::DimensionMismatch,
          "xor of matrices with different shapes");
  for (size_t i = 0; i < row_.size(); ++i) row_[i] ^= o.row_[i];
  return *this;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
  require(a.cols_ == b.rows_, Errc::DimensionMismatch, "product shapes do not conform");
  BitMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    Word acc = 0;
    Word row = a.row_[static_cast<size_t>(i)];
    while (row) {
      int k = std::countr_zero(row);
      row &= row - 1;
      acc ^= b.row_[static_cast<size_t>(k)];
    }
    c.row_[static_cast<size_t>(i)] = acc;
  }
  return c;
}

BitVector operator*(const BitMatrix& a, const BitVector& x) {
  require(a.cols_ == x.size(), Errc::DimensionMismatch, "matrix-vector shapes do not conform");
  BitVector y(a.rows_);
  for (int i = 0; i < a.rows_; ++i)
    y.set(i, std::popcount(a.row_[static_cast<size_t>(i)] & x.word()) & 1);
  return y;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    Word row = row_[static_cast<size_t>(i)];
    while (row) {
      int j = std::countr_zero(row);
      row &= row - 1;
      t.set(j, i, true);
    }
  }
  return t;
}

std::string BitMatrix::to_string() const {
  std::string s;
  for (int i = 0; i < rows_; ++i) {
    s += row(i).to_string();
    s += '\n';
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const BitMatrix& m) { return os << m.to_string(); }

namespace {

// Row reduction with the lowest-index admissible pivot; returns the rank and
// leaves the reduced rows in `rows` (used by rank/det/inverse/rref).
int eliminate(std::vector<Word>& rows, int cols) {
  int r = 0;
  for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    int pivot = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i) {
      if ((rows[static_cast<size_t>(i)] >> c) & 1u) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[static_cast<size_t>(r)], rows[static_cast<size_t>(pivot)]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i != r && ((rows[static_cast<size_t>(i)] >> c) & 1u))
        rows[static_cast<size_t>(i)] ^= rows[static_cast<size_t>(r)];
    }
    ++r;
  }
  return r;
}

}  // namespace

int rank(const BitMatrix& m) {
  std::vector<Word> rows;
  rows.reserve(static_cast<size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row_word(i));
  return eliminate(rows, m.cols());
}

int det(const BitMatrix& m) {
  require(m.is_square(), Errc::DimensionMismatch, "determinant of a non-square matrix");
  return rank(m) == m.rows() ? 1 : 0;
}

BitMatrix inverse(const BitMatrix& m) {
  require(m.is_square(), Errc::DimensionMismatch, "inverse of a non-square matrix");
  int n = m.rows();
  // Augment rows with the identity in the high bits.
  require(2 * n <= 128, Errc::TooLarge, "inverse dimension out of range");
  std::vector<std::pair<Word, Word>> rows(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) rows[static_cast<size_t>(i)] = {m.row_word(i), Word{1} << i};
  int r = 0;
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int i = r; i < n; ++i) {
      if ((rows[static_cast<size_t>(i)].first >> c) & 1u) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) fail(Errc::Singular, "matrix is not invertible");
    std::swap(rows[static_cast<size_t>(r)], rows[static_cast<size_t>(pivot)]);
    for (int i = 0; i < n; ++i) {
      if (i != r && ((rows[static_cast<size_t>(i)].first >> c) & 1u)) {
        rows[static_cast<size_t>(i)].first ^= rows[static_cast<size_t>(r)].first;
        rows[static_cast<size_t>(i)].second ^= rows[static_cast<size_t>(r)].second;
      }
    }
    ++r;
  }
  BitMatrix inv(n, n);
  for (int i = 0; i < n; ++i) inv.set_row_word(i, rows[static_cast<size_t>(i)].second);
  return inv;
}

BitMatrix rref(const BitMatrix& m) {
  std::vector<Word> rows;
  rows.reserve(static_cast<size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row_word(i));
  int r = eliminate(rows, m.cols());
  BitMatrix out(r == 0 ? 1 : r, m.cols());
  for (int i = 0; i < r; ++i) out.set_row_word(i, rows[static_cast<size_t>(i)]);
  return out;
}

std::vector<BitVector> nullspace_basis(const BitMatrix& m) {
  int n = m.cols();
  std::vector<Word> rows;
  for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row_word(i));
  int r = eliminate(rows, n);
  rows.resize(static_cast<size_t>(r));

  std::vector<int> pivot_col(static_cast<size_t>(r));
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (int i = 0; i < r; ++i) {
    pivot_col[static_cast<size_t>(i)] = std::countr_zero(rows[static_cast<size_t>(i)]);
    is_pivot[static_cast<size_t>(pivot_col[static_cast<size_t>(i)])] = true;
  }

  std::vector<BitVector> basis;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[static_cast<size_t>(c)]) continue;
    BitVector v(n);
    v.set(c, true);
    for (int i = 0; i < r; ++i)
      if ((rows[static_cast<size_t>(i)] >> c) & 1u) v.set(pivot_col[static_cast<size_t>(i)], true);
    basis.push_back(v);
  }
  return basis;
}

bool Span::contains(const BitVector& v) const {
  Word r = v.word();
  for (const PivotRow& row : rows_)
    if ((r >> row.pivot) & 1u) r ^= row.reduced;
  return r == 0;
}

bool Span::insert(const BitVector& v) {
  require(v.size() == len_, Errc::DimensionMismatch, "span length mismatch");
  Word r = v.word();
  Word c = 0;
  for (const PivotRow& row : rows_) {
    if ((r >> row.pivot) & 1u) {
      r ^= row.reduced;
      c ^= row.combo;
    }
  }
  if (r == 0) return false;
  PivotRow nr;
  nr.reduced = r;
  nr.combo = c | (Word{1} << inserted_);
  nr.pivot = std::countr_zero(r);
  // Keep the basis mutually reduced so a single pass suffices everywhere.
  for (PivotRow& row : rows_) {
    if ((row.reduced >> nr.pivot) & 1u) {
      row.reduced ^= nr.reduced;
      row.combo ^= nr.combo;
    }
  }
  rows_.push_back(nr);
  originals_.push_back(v.word());
  ++inserted_;
  return true;
}

bool Span::solve(const BitVector& v, BitVector& coeffs_out) const {
  Word r = v.word();
  Word c = 0;
  for (const PivotRow& row : rows_) {
    if ((r >> row.pivot) & 1u) {
      r ^= row.reduced;
      c ^= row.combo;
    }
  }
  if (r != 0) return false;
  coeffs_out = BitVector(inserted_, c);
  return true;
}

bool linearly_independent(const std::vector<BitVector>& vs) {
  if (vs.empty()) return true;
  Span s(vs.front().size());
  for (const BitVector& v : vs)
    if (!s.insert(v)) return false;
  return true;
}

}  // namespace gf2
