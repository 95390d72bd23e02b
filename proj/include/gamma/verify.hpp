#ifndef GAMMA_VERIFY_HPP
#define GAMMA_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gamma/graph.hpp"

// Verification suites behind both `gamma verify` and the acceptance runner:
// closed-form distances against BFS oracles, the algebraic identity batteries
// against direct computation, diameter and extremal-pair constructions,
// and the self-dual-code partition / inverse-closure / witness checks.
namespace verify {

struct SuiteResult {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  double seconds = 0.0;
  std::vector<std::string> messages;  // first few failure descriptions

  bool ok() const { return failures == 0; }
  void fail(const std::string& msg);
  void check(bool cond, const std::string& msg);
};

// distance_closed == distance_bfs; sample_pairs == 0 runs all unordered
// pairs, otherwise that many seeded random ordered pairs. Also checks the
// ambient lower bound and symmetry along the way.
SuiteResult oracle_equivalence(int n, std::uint64_t sample_pairs, std::uint64_t seed,
                               const gammagraph::GraphConfig& cfg = {});

// The algebraic identity batteries, `iters` seeded instances each.
SuiteResult identities(std::uint64_t iters, std::uint64_t seed);

// diameter_closed values for 2..max_n and eccentricity of I_n up to the
// enumeration cap.
SuiteResult diameter(int max_n, const gammagraph::GraphConfig& cfg = {});

// Edge-verified geodesics for seeded random pairs.
SuiteResult geodesics(int n, int pairs, std::uint64_t seed, const gammagraph::GraphConfig& cfg = {});

// Partition + membership-by-distances + inverse closure + (n <= 5) all-pairs
// orthogonal witnesses.
SuiteResult codes(int n, const gammagraph::GraphConfig& cfg = {});

// The explicit extremal pair constructions for every admissible (r, n), n <= max_n.
SuiteResult extremal_pairs(int max_n);

}  // namespace verify

#endif
