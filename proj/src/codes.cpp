#include "gamma/codes.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace sdcodes {

using gf2::Decomposition;
using gf2::Errc;
using gf2::fail;
using gf2::require;
using gf2::Span;
using gf2::Word;

LinearCode::LinearCode(int length, const std::vector<BitVector>& basis) : length_(length) {
  require(length >= 1 && length <= BitVector::kMaxLen, Errc::TooLarge, "code length out of range");
  for (const BitVector& v : basis)
    require(v.size() == length, Errc::DimensionMismatch, "generator length != code length");
  if (basis.empty()) {
    canonical_ = BitMatrix(1, length);
    dim_ = 0;
    return;
  }
  canonical_ = gf2::rref(BitMatrix::from_rows(basis));
  dim_ = canonical_.is_zero() ? 0 : canonical_.rows();
}

LinearCode LinearCode::parse(std::string_view text) {
  BitMatrix g = BitMatrix::parse(text);
  std::vector<BitVector> rows;
  for (int i = 0; i < g.rows(); ++i) rows.push_back(g.row(i));
  return LinearCode(g.cols(), rows);
}

std::vector<BitVector> LinearCode::basis() const {
  std::vector<BitVector> rows;
  for (int i = 0; i < dim_; ++i) rows.push_back(canonical_.row(i));
  return rows;
}

std::vector<BitVector> LinearCode::nonzero_codewords() const {
  std::vector<BitVector> words;
  words.reserve((size_t{1} << dim_) - 1);
  for (Word mask = 1; mask < (Word{1} << dim_); ++mask) {
    BitVector w(length_);
    Word m = mask;
    while (m) {
      int i = std::countr_zero(m);
      m &= m - 1;
      w ^= canonical_.row(i);
    }
    words.push_back(w);
  }
  return words;
}

bool LinearCode::contains(const BitVector& v) const {
  require(v.size() == length_, Errc::DimensionMismatch, "codeword length mismatch");
  Word r = v.word();
  for (int i = 0; i < dim_; ++i) {
    Word row = canonical_.row_word(i);
    if ((r >> std::countr_zero(row)) & 1u) r ^= row;
  }
  return r == 0;
}

LinearCode dual(const LinearCode& c) {
  return LinearCode(c.length(), gf2::nullspace_basis(c.generator()));
}

bool is_self_orthogonal(const LinearCode& c) {
  std::vector<BitVector> b = c.basis();
  for (size_t i = 0; i < b.size(); ++i)
    for (size_t j = i; j < b.size(); ++j)
      if (gf2::dot(b[i], b[j]) != 0) return false;
  return true;
}

bool is_self_dual(const LinearCode& c) { return c == dual(c); }

SelfDualCode::SelfDualCode(LinearCode c) : inner_(std::move(c)) {
  require(inner_.length() % 2 == 0, Errc::InvalidArgument, "self-dual codes have even length");
  require(is_self_dual(inner_), Errc::InvalidArgument, "code is not self-dual");
  require(inner_.contains(BitVector::ones(inner_.length())), Errc::InvalidArgument,
          "self-dual code must contain the all-ones vector");
}

BitVector bar(const BitVector& x) {
  int n = x.size();
  require(n + 1 <= BitVector::kMaxLen, Errc::TooLarge, "bar target length out of range");
  BitVector y(n + 1, x.word());
  y.set(n, x.self_dot());
  return y;
}

BitVector underline(const BitVector& y) {
  require(y.size() >= 1, Errc::InvalidArgument, "underline needs a nonempty vector");
  return BitVector(y.size() - 1, y.word());
}

std::vector<SelfDualCode> enumerate_selfdual_codes(int length) {
  require(length % 2 == 0, Errc::InvalidArgument, "self-dual codes have even length");
  require(length >= 2, Errc::InvalidArgument, "length must be positive and even");
  require(length <= 10, Errc::TooLarge, "exhaustive code enumeration is capped at length 10");

  int k = length / 2;
  // Level-wise extension of self-orthogonal subspaces with canonical-form
  // deduplication; a self-dual code is a maximal totally isotropic subspace.
  std::map<std::string, std::vector<BitVector>> level;
  level.emplace(std::string(), std::vector<BitVector>{});
  for (int t = 0; t < k; ++t) {
    std::map<std::string, std::vector<BitVector>> next;
    for (const auto& [key, basis] : level) {
      BitMatrix rows =
          basis.empty() ? BitMatrix(1, length) : BitMatrix::from_rows(basis);
      std::vector<BitVector> perp = gf2::nullspace_basis(rows);
      Span span(length);
      for (const BitVector& v : basis) span.insert(v);
      size_t m = perp.size();
      for (Word mask = 1; mask < (Word{1} << m); ++mask) {
        BitVector x(length);
        Word mm = mask;
        while (mm) {
          int i = std::countr_zero(mm);
          mm &= mm - 1;
          x ^= perp[static_cast<size_t>(i)];
        }
        if (x.self_dot() != 0 || span.contains(x)) continue;
        std::vector<BitVector> extended = basis;
        extended.push_back(x);
        LinearCode c(length, extended);
        next.emplace(c.key(), c.basis());
      }
    }
    level = std::move(next);
  }

  std::vector<SelfDualCode> out;
  out.reserve(level.size());
  for (const auto& [key, basis] : level) out.emplace_back(LinearCode(length, basis));
  return out;
}

namespace {

void check_odd_dim(int n) {
  require(n % 2 == 1, Errc::EvenDimension, "SD membership needs odd n");
  require(n >= 3, Errc::InvalidArgument, "SD membership needs n >= 3");
}

}  // namespace

bool sd_membership(const Vertex& a) {
  int n = a.dim();
  check_odd_dim(n);
  if (gf2::rank((a.mat() ^ SymMatrix::identity(n)).mat()) != (n + 1) / 2) return false;
  return gammagraph::distance_closed(a, Vertex::identity(n)) == (n + 5) / 2;
}

bool sd_membership_distances(const Vertex& a) {
  int n = a.dim();
  check_odd_dim(n);
  if (gammagraph::distance_closed(a, Vertex::identity(n)) != (n + 5) / 2) return false;
  int ambient = gammagraph::distance_ambient(a.mat(), SymMatrix::identity(n));
  if ((n + 1) / 2 % 2 == 1) return ambient == (n + 1) / 2;
  return ambient == (n + 1) / 2 || ambient == (n + 3) / 2;
}

SelfDualCode code_from_matrix(const Vertex& a) {
  int n = a.dim();
  check_odd_dim(n);
  require(sd_membership(a), Errc::NotInSD, "matrix is not in SD_n");
  Decomposition dec = gf2::decompose_symmetric(a.mat() ^ SymMatrix::identity(n));
  std::vector<BitVector> barred;
  barred.reserve(dec.xs.size());
  for (const BitVector& x : dec.xs) barred.push_back(bar(x));
  return SelfDualCode(LinearCode(n + 1, barred));
}

int basis_parity_class(const std::vector<BitVector>& basis) {
  int ones = 0;
  for (const BitVector& y : basis) ones += y.get(y.size() - 1) ? 1 : 0;
  return ones % 2 == 1 ? 1 : 2;
}

CodeBasis sum_j_basis(const SelfDualCode& c) {
  int len = c.length();
  std::vector<BitVector> vectors = c.code().basis();
  BitVector j = BitVector::ones(len);

  // Constructive swap procedure: grow the support of j's expansion until it
  // covers the whole basis.
  while (true) {
    Span span(len);
    for (const BitVector& v : vectors) span.insert(v);
    BitVector coeffs;
    bool solved = span.solve(j, coeffs);
    require(solved, Errc::InvalidArgument, "all-ones vector missing from a self-dual code");
    if (coeffs.weight() == static_cast<int>(vectors.size())) break;
    int s = -1, t = -1;
    for (int i = 0; i < coeffs.size(); ++i) {
      if (coeffs.get(i) && s < 0) s = i;
      if (!coeffs.get(i) && t < 0) t = i;
    }
    vectors[static_cast<size_t>(s)] ^= vectors[static_cast<size_t>(t)];
  }

  BitVector sum(len);
  for (const BitVector& v : vectors) sum ^= v;
  require(sum == j, Errc::InvalidArgument, "sum-j basis construction failed");
  return CodeBasis{vectors, basis_parity_class(vectors)};
}

std::vector<std::vector<BitVector>> all_bases(const LinearCode& c) {
  int k = c.dim();
  require(k >= 1, Errc::InvalidArgument, "basis enumeration needs a nonzero code");
  require(k <= 4, Errc::TooLarge, "basis enumeration is capped at dimension 4");
  std::vector<BitVector> words = c.nonzero_codewords();

  std::set<std::vector<Word>> seen;
  std::vector<std::vector<BitVector>> bases;
  std::vector<BitVector> current;

  // Ordered tuples of independent codewords, canonicalized to unordered
  // bases by their sorted packed words.
  auto recurse = [&](auto&& self, const Span& span) -> void {
    if (static_cast<int>(current.size()) == k) {
      std::vector<Word> key;
      for (const BitVector& v : current) key.push_back(v.word());
      std::sort(key.begin(), key.end());
      if (seen.insert(key).second) bases.push_back(current);
      return;
    }
    for (const BitVector& w : words) {
      if (span.contains(w)) continue;
      Span extended = span;
      extended.insert(w);
      current.push_back(w);
      self(self, extended);
      current.pop_back();
    }
  };
  recurse(recurse, Span(c.length()));

  std::sort(bases.begin(), bases.end(), [](const auto& a, const auto& b) {
    for (size_t i = 0; i < a.size(); ++i)
      if (!(a[i] == b[i])) return a[i] < b[i];
    return false;
  });
  return bases;
}

namespace {

Vertex vertex_from_sym(SymMatrix m) { return Vertex(std::move(m)); }

SymMatrix a_prime_matrix(int n, const std::vector<BitVector>& basis) {
  SymMatrix acc = SymMatrix::identity(n);
  for (const BitVector& y : basis) acc = acc ^ SymMatrix::square(underline(y));
  return acc;
}

}  // namespace

CodeFamily family_from_code(const SelfDualCode& c) {
  int n = c.length() - 1;
  check_odd_dim(n);
  int k = c.dim();
  bool half_even = k % 2 == 0;

  std::map<std::uint64_t, Vertex> members;
  for (const std::vector<BitVector>& basis : all_bases(c.code())) {
    SymMatrix aprime = a_prime_matrix(n, basis);
    int parity = basis_parity_class(basis);
    bool invertible = gammagraph::is_vertex(aprime);
    // The invertibility criterion for A' is exactly the parity class.
    require(invertible == (parity == 2), Errc::InvalidArgument,
            "A' invertibility disagrees with the basis parity class");
    if (invertible) {
      Vertex v = vertex_from_sym(aprime);
      members.emplace(gf2::triangle_key(v.mat()), v);
    }

    BitVector sum(n + 1);
    for (const BitVector& y : basis) sum ^= y;
    SymMatrix asecond = aprime ^ SymMatrix::square(underline(sum));
    require(gammagraph::is_vertex(asecond), Errc::InvalidArgument, "A'' must always be invertible");
    if (half_even) {
      Vertex v = vertex_from_sym(asecond);
      members.emplace(gf2::triangle_key(v.mat()), v);
    } else {
      // Invertible but outside SD_n: its distance to I drops below (n+1)/2.
      require(gf2::rank((asecond ^ SymMatrix::identity(n)).mat()) != k, Errc::InvalidArgument,
              "A'' rank should differ from (n+1)/2 when (n+1)/2 is odd");
    }
  }

  CodeFamily family{c, {}};
  family.members.reserve(members.size());
  for (const auto& [key, v] : members) {
    require(sd_membership(v), Errc::InvalidArgument, "family member fails SD membership");
    require(code_from_matrix(v) == c, Errc::InvalidArgument,
            "family member does not map back to its code");
    family.members.push_back(v);
  }
  return family;
}

bool family_inverse_closed(const CodeFamily& f) {
  std::set<std::uint64_t> keys, inv_keys;
  for (const Vertex& v : f.members) {
    keys.insert(gf2::triangle_key(v.mat()));
    inv_keys.insert(gf2::triangle_key(v.inv()));
  }
  return keys == inv_keys;
}

bool family_inverse_closed(const SelfDualCode& c) {
  return family_inverse_closed(family_from_code(c));
}

SelfDualCode transform_code(const SelfDualCode& c, const BitMatrix& p) {
  int n = c.length() - 1;
  require(p.rows() == n && p.cols() == n, Errc::DimensionMismatch,
          "transform needs an n x n matrix for a length n+1 code");
  std::vector<BitVector> mapped;
  for (const BitVector& y : c.code().basis()) {
    BitVector m(c.length(), (p * underline(y)).word());
    m.set(n, y.get(n));
    mapped.push_back(m);
  }
  return SelfDualCode(LinearCode(c.length(), mapped));
}

PartitionReport verify_partition(int n, const gammagraph::GraphConfig& cfg) {
  check_odd_dim(n);
  require(n <= 7, Errc::TooLarge, "partition verification is capped at n = 7");

  PartitionReport report;
  report.n = n;
  std::vector<SelfDualCode> codes = enumerate_selfdual_codes(n + 1);
  report.code_count = codes.size();

  report.members_valid = true;
  report.families_disjoint = true;
  std::set<std::uint64_t> all_keys;
  for (const SelfDualCode& c : codes) {
    CodeFamily f = family_from_code(c);  // validates members internally
    report.family_sizes.push_back(f.members.size());
    for (const Vertex& v : f.members) {
      if (!all_keys.insert(gf2::triangle_key(v.mat())).second) report.families_disjoint = false;
    }
  }
  report.union_size = all_keys.size();

  if (n <= 5 && n <= cfg.max_enumeration_n) {
    std::set<std::uint64_t> sd_keys;
    gammagraph::for_each_vertex(n, cfg, [&](const Vertex& v) {
      if (sd_membership(v)) sd_keys.insert(gf2::triangle_key(v.mat()));
    });
    report.sd_count = sd_keys.size();
    report.union_matches_exhaustive = sd_keys == all_keys;
  }
  return report;
}

namespace {

bool gram_is_j2(const std::vector<BitVector>& ws) {
  for (size_t i = 0; i < ws.size(); ++i)
    for (size_t j = 0; j < ws.size(); ++j) {
      int expect = (i < 2 && j < 2) ? 1 : 0;
      if (gf2::dot(ws[i], ws[j]) != expect) return false;
    }
  return true;
}

bool witness_valid(const BitMatrix& p, const SelfDualCode& c, const SelfDualCode& ct) {
  return gf2::is_orthogonal(p) && transform_code(c, p) == ct;
}

}  // namespace

namespace detail {

// Normalize a sum-j basis so every vector has last entry 1 (n = 5 case).
std::vector<BitVector> normalize_all_last_one(std::vector<BitVector> ys) {
  int last = ys.front().size() - 1;
  std::vector<int> ones, zeros;
  for (size_t i = 0; i < ys.size(); ++i) (ys[i].get(last) ? ones : zeros).push_back((int)i);
  if (zeros.empty()) return ys;
  require(ones.size() == 1, Errc::InvalidArgument, "unexpected parity pattern in sum-j basis");
  for (int i : zeros) ys[static_cast<size_t>(i)] ^= ys[static_cast<size_t>(ones.front())];
  return ys;
}

// Normalize for n >= 7: returns a basis z_1..z_k of the code with
// sum z_i = j, last entry of z_k equal to 1, and the underlined Gram of
// z_1..z_{k-1} exactly J_2 (+) 0.
std::vector<BitVector> normalize_gram(std::vector<BitVector> ys) {
  int len = ys.front().size();
  int last = len - 1;
  int k = static_cast<int>(ys.size());

  // Ensure at least one last-entry-0 vector and at least two last-entry-1.
  std::vector<int> ones, zeros;
  for (size_t i = 0; i < ys.size(); ++i) (ys[i].get(last) ? ones : zeros).push_back((int)i);
  if (zeros.empty() || ones.size() == 1) {
    int i = ones.front();
    int adjusted = 0;
    for (int j = 0; j < k && adjusted < 2; ++j) {
      if (j == i) continue;
      ys[static_cast<size_t>(j)] ^= ys[static_cast<size_t>(i)];
      ++adjusted;
    }
  }

  // Move one last-entry-1 vector to the back; the rest form the Gram block.
  int anchor = -1;
  for (int i = 0; i < k; ++i)
    if (ys[static_cast<size_t>(i)].get(last)) anchor = i;
  require(anchor >= 0, Errc::InvalidArgument, "no last-entry-1 vector after normalization");
  std::swap(ys[static_cast<size_t>(anchor)], ys[static_cast<size_t>(k - 1)]);

  std::vector<BitVector> ws;
  for (int i = 0; i + 1 < k; ++i) ws.push_back(underline(ys[static_cast<size_t>(i)]));

  // Descend the rank-one block size to 2 with the 4-vector substitutions;
  // each pass reorders so the diagonal-1 vectors come first.
  for (int guard = 0; guard <= k; ++guard) {
    std::stable_sort(ws.begin(), ws.end(), [](const BitVector& a, const BitVector& b) {
      return a.self_dot() > b.self_dot();
    });
    int l = 0;
    for (const BitVector& w : ws) l += w.self_dot();
    require(l >= 2 && l % 2 == 0, Errc::InvalidArgument, "unexpected Gram trace");
    if (l == 2) break;
    require(l <= static_cast<int>(ws.size()) - 1, Errc::InvalidArgument, "Gram block too large");
    BitVector s(len - 1);
    for (int i = l - 3; i <= l; ++i) s ^= ws[static_cast<size_t>(i)];
    for (int i = l - 3; i <= l; ++i) ws[static_cast<size_t>(i)] ^= s;
  }
  require(gram_is_j2(ws), Errc::InvalidArgument, "Gram normalization did not reach J_2 (+) 0");

  std::vector<BitVector> zs;
  for (const BitVector& w : ws) zs.push_back(bar(w));
  zs.push_back(ys[static_cast<size_t>(k - 1)]);
  return zs;
}

}  // namespace detail

BitMatrix orthogonal_witness(const SelfDualCode& c, const SelfDualCode& ct) {
  require(c.length() == ct.length(), Errc::DimensionMismatch, "codes have different lengths");
  int n = c.length() - 1;
  check_odd_dim(n);

  if (n == 3) {
    // The 3x3 orthogonal group is tiny; permutations come first.
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                    {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& perm : perms) {
      BitMatrix p(3, 3);
      for (int i = 0; i < 3; ++i) p.set(perm[i], i, true);
      if (witness_valid(p, c, ct)) return p;
    }
    for (Word bits = 0; bits < 512; ++bits) {
      BitMatrix p(3, 3);
      for (int i = 0; i < 3; ++i) p.set_row_word(i, (bits >> (3 * i)) & 7u);
      if (gf2::is_orthogonal(p) && witness_valid(p, c, ct)) return p;
    }
    fail(Errc::WitnessPostCheckFailed, "no orthogonal witness found at n = 3");
  }

  std::vector<BitVector> zs = n == 5 ? detail::normalize_all_last_one(sum_j_basis(c).vectors)
                                     : detail::normalize_gram(sum_j_basis(c).vectors);
  std::vector<BitVector> zts = n == 5 ? detail::normalize_all_last_one(sum_j_basis(ct).vectors)
                                      : detail::normalize_gram(sum_j_basis(ct).vectors);

  gf2::IsometrySpec spec;
  spec.n = n;
  for (const BitVector& z : zs) spec.domain.push_back(underline(z));
  for (const BitVector& z : zts) spec.images.push_back(underline(z));

  BitMatrix p = gf2::extend_isometry(spec);
  require(witness_valid(p, c, ct), Errc::WitnessPostCheckFailed,
          "constructed witness failed the post-check");
  return p;
}

}  // namespace sdcodes
