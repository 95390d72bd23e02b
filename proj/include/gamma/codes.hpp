#ifndef GAMMA_CODES_HPP
#define GAMMA_CODES_HPP

#include <optional>
#include <string>
#include <vector>

#include "gamma/graph.hpp"
#include "gamma/witt.hpp"

// Binary self-dual codes of length n+1 (n odd) and their incarnation as
// matrix families inside the graph: membership by two graph parameters,
// code <-> matrix-family correspondence, the partition into families,
// inverse closure, and constructive orthogonal equivalence.
namespace sdcodes {

using gf2::BitMatrix;
using gf2::BitVector;
using gf2::SymMatrix;
using gf2::Vertex;

// A binary linear code held by its reduced-row-echelon generator matrix;
// code equality is canonical-form equality.
class LinearCode {
 public:
  LinearCode(int length, const std::vector<BitVector>& basis);
  static LinearCode parse(std::string_view text);

  int length() const { return length_; }
  int dim() const { return dim_; }
  const BitMatrix& generator() const { return canonical_; }
  std::vector<BitVector> basis() const;
  std::vector<BitVector> nonzero_codewords() const;
  bool contains(const BitVector& v) const;

  std::string key() const { return canonical_.to_string(); }
  std::string to_string() const { return canonical_.to_string(); }

  friend bool operator==(const LinearCode&, const LinearCode&) = default;

 private:
  int length_;
  int dim_;
  BitMatrix canonical_;
};

LinearCode dual(const LinearCode& c);
bool is_self_orthogonal(const LinearCode& c);
bool is_self_dual(const LinearCode& c);

class SelfDualCode {
 public:
  explicit SelfDualCode(LinearCode c);

  const LinearCode& code() const { return inner_; }
  int length() const { return inner_.length(); }
  int dim() const { return inner_.dim(); }
  std::string key() const { return inner_.key(); }
  std::string to_string() const { return inner_.to_string(); }

  friend bool operator==(const SelfDualCode&, const SelfDualCode&) = default;

 private:
  LinearCode inner_;
};

// Append the self-product bit; the result is always self-orthogonal.
BitVector bar(const BitVector& x);
// Drop the last bit; inverse of bar on self-orthogonal vectors.
BitVector underline(const BitVector& y);

// Every self-dual code of the given even length (<= 10), deduplicated by
// canonical generator and sorted by it.
std::vector<SelfDualCode> enumerate_selfdual_codes(int length);

// Membership in SD_n: d(A, I) = (n+5)/2 and rank(A - I) = (n+1)/2.
bool sd_membership(const Vertex& a);
// The same set detected purely by graph distances (closed-form + ambient).
bool sd_membership_distances(const Vertex& a);

SelfDualCode code_from_matrix(const Vertex& a);

struct CodeBasis {
  std::vector<BitVector> vectors;
  int parity_class;  // 1: odd number of last-entry-1 vectors, 2: even
};

int basis_parity_class(const std::vector<BitVector>& basis);

// A basis whose vectors sum to the all-ones vector.
CodeBasis sum_j_basis(const SelfDualCode& c);

// All unordered bases of the code; capped at dim <= 4.
std::vector<std::vector<BitVector>> all_bases(const LinearCode& c);

struct CodeFamily {
  SelfDualCode code;
  std::vector<Vertex> members;  // sorted by upper-triangle key
};

CodeFamily family_from_code(const SelfDualCode& c);
bool family_inverse_closed(const CodeFamily& f);
bool family_inverse_closed(const SelfDualCode& c);

// (P (+) 1) C for orthogonal P.
SelfDualCode transform_code(const SelfDualCode& c, const BitMatrix& p);

struct PartitionReport {
  int n = 0;
  std::size_t code_count = 0;
  std::vector<std::size_t> family_sizes;
  bool members_valid = false;
  bool families_disjoint = false;
  std::size_t union_size = 0;
  std::optional<std::size_t> sd_count;  // exhaustive |SD_n|, when feasible
  bool union_matches_exhaustive = false;

  bool ok() const {
    return members_valid && families_disjoint && (!sd_count || union_matches_exhaustive);
  }
};

PartitionReport verify_partition(int n, const gammagraph::GraphConfig& cfg = {});

// Orthogonal P with (P (+) 1) C = C~, built from sum-j bases, Gram
// normalization, and isometry extension; post-verified.
BitMatrix orthogonal_witness(const SelfDualCode& c, const SelfDualCode& ct);

namespace detail {

// Witness normalization steps, exposed for direct testing. Both take a
// basis whose vectors sum to the all-ones vector.
std::vector<gf2::BitVector> normalize_all_last_one(std::vector<gf2::BitVector> ys);
std::vector<gf2::BitVector> normalize_gram(std::vector<gf2::BitVector> ys);

}  // namespace detail

}  // namespace sdcodes

#endif
