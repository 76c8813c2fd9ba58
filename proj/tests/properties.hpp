#pragma once

// Randomized and exhaustive property checks shared by the unit tests and the
// acceptance runner.  Each check returns the number of cases and the failures.

#include <cstddef>
#include <string>
#include <vector>

namespace weylcoh::props {

struct Outcome {
  std::size_t cases = 0;
  std::vector<std::string> failures;

  bool ok() const { return cases > 0 && failures.empty(); }
};

/// U A V = D, U and V unimodular, d_i | d_{i+1}, on `count` random matrices
/// of size up to max_dim with entries in [-bound, bound].
Outcome smith_random(std::size_t count = 1000, std::size_t max_dim = 8, long bound = 50, unsigned seed = 20240611);

/// Bar-complex H^1, H^2 against ker N / im(g - 1) and M^G / N M.
Outcome cyclic_closed_forms();

/// Sha^1 of Z[W/H] restricted to G' vanishes for every pair of subgroups
/// (G', H) of W(C3).
Outcome wc3_permutation_sweep();

/// P(R^vee) is isomorphic to the dual of Q(R) for every type of rank <= max_rank.
Outcome weight_root_duality(std::size_t max_rank = 4);

}  // namespace weylcoh::props
