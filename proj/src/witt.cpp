#include "gamma/witt.hpp"

#include <optional>

namespace gf2 {

bool is_orthogonal(const BitMatrix& p) {
  return p.is_square() && p.transposed() * p == BitMatrix::identity(p.rows());
}

namespace {

struct PartialIsometry {
  int n;
  std::vector<BitVector> domain;
  std::vector<BitVector> images;
  Span domain_span;
  Span image_span;

  explicit PartialIsometry(int n_) : n(n_), domain_span(n_), image_span(n_) {}

  void push(const BitVector& d, const BitVector& im) {
    bool fresh = domain_span.insert(d);
    require(fresh, Errc::InvalidArgument, "domain vectors must be linearly independent");
    image_span.insert(im);
    domain.push_back(d);
    images.push_back(im);
  }
};

// Find w' with images[i]'w' = domain[i]'w for all i, w''w' = w'w, and w' not
// in the current image span. The affine solution set of the linear part is
// searched with weight <= 2 nullspace combinations first, then exhaustively.
std::optional<BitVector> solve_image(const PartialIsometry& iso, const BitVector& w) {
  int t = static_cast<int>(iso.images.size());
  BitMatrix lhs = t > 0 ? BitMatrix::from_rows(iso.images) : BitMatrix(0, iso.n);
  BitVector rhs(t);
  for (int i = 0; i < t; ++i) rhs.set(i, dot(iso.domain[static_cast<size_t>(i)], w));

  // Particular solution via elimination on [lhs | rhs].
  std::vector<std::pair<Word, bool>> rows;
  for (int i = 0; i < t; ++i) rows.push_back({lhs.row_word(i), rhs.get(i)});
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < iso.n && r < t; ++c) {
    int pivot = -1;
    for (int i = r; i < t; ++i)
      if ((rows[static_cast<size_t>(i)].first >> c) & 1u) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[static_cast<size_t>(r)], rows[static_cast<size_t>(pivot)]);
    for (int i = 0; i < t; ++i) {
      if (i != r && ((rows[static_cast<size_t>(i)].first >> c) & 1u)) {
        rows[static_cast<size_t>(i)].first ^= rows[static_cast<size_t>(r)].first;
        rows[static_cast<size_t>(i)].second = rows[static_cast<size_t>(i)].second !=
                                              rows[static_cast<size_t>(r)].second;
      }
    }
    pivots.push_back(c);
    ++r;
  }
  for (int i = r; i < t; ++i)
    if (rows[static_cast<size_t>(i)].second) return std::nullopt;  // inconsistent
  BitVector particular(iso.n);
  for (int i = 0; i < r; ++i)
    if (rows[static_cast<size_t>(i)].second) particular.set(pivots[static_cast<size_t>(i)], true);

  std::vector<BitVector> null = nullspace_basis(lhs);
  int target = w.self_dot();

  auto admissible = [&](const BitVector& v) -> bool {
    BitVector cand = particular ^ v;
    return cand.self_dot() == target && !iso.image_span.contains(cand);
  };

  if (admissible(BitVector(iso.n))) return particular;
  for (size_t i = 0; i < null.size(); ++i)
    if (admissible(null[i])) return particular ^ null[i];
  for (size_t i = 0; i < null.size(); ++i)
    for (size_t j = i + 1; j < null.size(); ++j)
      if (admissible(null[i] ^ null[j])) return particular ^ null[i] ^ null[j];

  size_t m = null.size();
  require(m <= 24, Errc::TooLarge, "isometry solution coset too large to enumerate");
  for (Word mask = 0; mask < (Word{1} << m); ++mask) {
    BitVector v(iso.n);
    for (size_t i = 0; i < m; ++i)
      if ((mask >> i) & 1u) v ^= null[i];
    if (admissible(v)) return particular ^ v;
  }
  return std::nullopt;
}

}  // namespace

BitMatrix extend_isometry(const IsometrySpec& spec) {
  int n = spec.n;
  require(n >= 1 && n <= BitVector::kMaxLen, Errc::InvalidArgument, "bad ambient dimension");
  require(spec.domain.size() == spec.images.size(), Errc::InvalidArgument,
          "domain and image counts differ");
  for (const BitVector& v : spec.domain)
    require(v.size() == n, Errc::DimensionMismatch, "domain vector length != n");
  for (const BitVector& v : spec.images)
    require(v.size() == n, Errc::DimensionMismatch, "image vector length != n");
  for (size_t i = 0; i < spec.domain.size(); ++i)
    for (size_t j = i; j < spec.domain.size(); ++j)
      require(dot(spec.domain[i], spec.domain[j]) == dot(spec.images[i], spec.images[j]),
              Errc::InvalidArgument, "images do not preserve dot products");

  PartialIsometry iso(n);
  for (size_t i = 0; i < spec.domain.size(); ++i) iso.push(spec.domain[i], spec.images[i]);

  // j-conditions of the extension criterion. Every orthogonal matrix fixes the
  // all-ones vector, so when j is outside the spans it is pinned up front.
  BitVector jn = BitVector::ones(n);
  BitVector coeffs;
  if (iso.domain_span.solve(jn, coeffs)) {
    BitVector sigma_j(n);
    for (int i = 0; i < coeffs.size(); ++i)
      if (coeffs.get(i)) sigma_j ^= iso.images[static_cast<size_t>(i)];
    require(sigma_j == jn, Errc::JConditionViolated, "j is in the domain but not fixed");
  } else {
    require(!iso.image_span.contains(jn), Errc::JConditionViolated,
            "j is in the image span but not in the domain");
    iso.push(jn, jn);
  }

  for (int c = 0; c < n && iso.domain_span.dim() < n; ++c) {
    BitVector w = BitVector::unit(n, c);
    if (iso.domain_span.contains(w)) continue;
    std::optional<BitVector> im = solve_image(iso, w);
    require(im.has_value(), Errc::NoExtension, "no admissible image for a basis extension");
    iso.push(w, *im);
  }

  // P = images * domain^{-1}, columns built from the full-basis pairs.
  BitMatrix dmat(n, n), imat(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      dmat.set(i, j, iso.domain[static_cast<size_t>(j)].get(i));
      imat.set(i, j, iso.images[static_cast<size_t>(j)].get(i));
    }
  }
  BitMatrix p = imat * inverse(dmat);
  for (size_t i = 0; i < spec.domain.size(); ++i)
    require(p * spec.domain[i] == spec.images[i], Errc::NoExtension,
            "extension post-check failed: image mismatch");
  require(is_orthogonal(p), Errc::NoExtension, "extension post-check failed: not orthogonal");
  return p;
}

}  // namespace gf2
