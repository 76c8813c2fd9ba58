#pragma once

// Helpers shared by the scenario translation units.

#include <functional>
#include <string>
#include <vector>

#include "weylcoh/cohomology.hpp"
#include "weylcoh/rational.hpp"
#include "weylcoh/scenarios.hpp"

namespace weylcoh::detail {

ScenarioReport timed(std::string name, const std::function<void(ScenarioReport&)>& body);

/// sha_omega, retried without certification when the certificate alone
/// would break the memory guard.
ShaResult sha_robust(const GLattice& m, std::size_t degree);
bool witness_is_valid(const GLattice& m, const ShaResult& s);

struct SweepResult {
  std::size_t count = 0;
  std::size_t nonzero = 0;
  std::string first_nonzero;
};
SweepResult sha1_sweep(const GLattice& m, const std::vector<Subgroup>& subs);

std::string flags_string(const ExactnessFlags& f);
bool is_klein(const FiniteMatrixGroup& g);
/// Column i has its 1 in row images[i].
IntMatrix permutation_matrix(const std::vector<std::size_t>& images);
/// Matrix of an ambient map in the lattice basis given by the columns of `basis`.
IntMatrix conjugate_into(const RatMatrix& basis, const IntMatrix& ambient);

}  // namespace weylcoh::detail
