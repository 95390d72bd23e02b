#ifndef GAMMA_RANDOM_HPP
#define GAMMA_RANDOM_HPP

#include <random>
#include <vector>

#include "gamma/symmetric.hpp"

// Seeded generators for randomized suites; reproducible given the seed.
namespace gf2 {

using Rng = std::mt19937_64;

BitVector random_vector(Rng& rng, int n);
BitVector random_nonzero_vector(Rng& rng, int n);
BitVector random_even_weight_vector(Rng& rng, int n, int min_weight = 0);
BitMatrix random_matrix(Rng& rng, int rows, int cols);
BitMatrix random_invertible(Rng& rng, int n);
SymMatrix random_symmetric(Rng& rng, int n);
SymMatrix random_alternate(Rng& rng, int n);
Vertex random_vertex(Rng& rng, int n);
BitMatrix random_orthogonal(Rng& rng, int n);
std::vector<BitVector> random_independent(Rng& rng, int n, int r);

}  // namespace gf2

#endif
