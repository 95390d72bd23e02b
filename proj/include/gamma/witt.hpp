#ifndef GAMMA_WITT_HPP
#define GAMMA_WITT_HPP

#include <vector>

#include "gamma/bits.hpp"

namespace gf2 {

// A partial isometry of the dot product: domain spans a subspace U, images
// prescribe its image, and all pairwise dot products must agree. Extension to
// a full orthogonal matrix exists iff j_n lands in U exactly when it lands in
// the image span, and is fixed when it does.
struct IsometrySpec {
  int n = 0;
  std::vector<BitVector> domain;
  std::vector<BitVector> images;
};

// Orthogonal P (P'P = I) with P domain[i] = images[i] for all i.
BitMatrix extend_isometry(const IsometrySpec& spec);

bool is_orthogonal(const BitMatrix& p);

}  // namespace gf2

#endif
