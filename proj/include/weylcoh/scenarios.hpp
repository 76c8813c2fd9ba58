#pragma once

// Executable checks of the lattice-cohomological statements about Weyl group
// lattices, each returning a structured report.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "weylcoh/glattice.hpp"
#include "weylcoh/root_system.hpp"

namespace weylcoh {

enum class Status { pass, fail, inconclusive };
std::string to_string(Status s);

/// Where an expected value comes from: a published statement, a value computed
/// once by this code and frozen, or an immediate consequence of definitions.
enum class Provenance { literature, derived, trivial };
std::string to_string(Provenance p);

struct Claim {
  std::string description;
  std::string expected;
  std::string computed;
  Provenance provenance = Provenance::derived;
  Status status = Status::fail;
};

struct ScenarioReport {
  std::string name;
  Status status = Status::pass;
  std::vector<Claim> claims;
  double runtime_ms = 0;
  /// Set when the scenario stopped on an exception.
  std::string error;
  bool guard_exceeded = false;

  /// Passes iff expected == computed.
  void expect(std::string description, std::string expected, std::string computed, Provenance p);
  /// Passes iff ok; `computed` documents what was seen.
  void check(std::string description, bool ok, std::string expected, std::string computed, Provenance p);
  /// Records a bounded-search outcome (found = pass, inconclusive, not_found = fail).
  void search(std::string description, SearchStatus s, std::string computed, Provenance p);
  /// Recomputes status from the claims.
  void finish();
};

using Params = std::map<std::string, std::string>;

/// 0 -> Z -> (+) Z e_i -> P(A_n) -> 0 over W(A_n) in the weight basis.
LatticeExactSequence build_an_sequence(std::size_t n);
/// 0 -> (+) Z g_i -> (+) (Z a_i + Z b_i) -> P(C_n) -> 0 over W(C_n); the middle
/// basis is a_1..a_n, b_1..b_n with a_i -> h_i, b_i -> -h_i.
LatticeExactSequence build_cn_sequence(std::size_t n);

/// sweep_max: largest n for which the subgroup sweep of Sha^1 is run.
ScenarioReport an_sequence(std::size_t n, std::size_t sweep_max = 3);
ScenarioReport cn_sequence(std::size_t n, std::size_t sweep_max = 3);
ScenarioReport claim72_c3();
ScenarioReport claim72_d4();
/// Throws InvalidInput("excluded type ...") for A_n, C_n (including B_2) and G_2.
ScenarioReport prop71(const DynkinType& t);
ScenarioReport g2_vanishing();

struct SurjectionCensus {
  std::size_t subgroup_classes = 0;   ///< conjugacy classes of subgroups of index <= 2n
  std::size_t wsets = 0;              ///< W-sets of size 2n up to isomorphism
  std::size_t wsets_without_chi = 0;  ///< no chi_i in the rational character support
  std::size_t wsets_missing_chi = 0;  ///< some chi_i missing
  std::size_t candidates = 0;         ///< equivariant maps enumerated
  std::size_t zero_maps = 0;
  std::size_t surjections = 0;
  std::size_t surjections_missing_chi = 0;
  std::size_t kernel_permutation = 0;  ///< kernels certified permutation
  std::size_t isomorphic = 0;          ///< sequences isomorphic to the C_n sequence
  std::size_t hint_failures = 0;
  std::size_t wsets_with_surjection = 0;
};

/// n = 3 only.
SurjectionCensus enumerate_surjections(std::size_t n, int coeff_bound, int kernel_bound = 1);
ScenarioReport lemma83_bruteforce(std::size_t n, int coeff_bound, int kernel_bound = 1);

/// Gamma = (Z/p)^r: diagonal signs for p = 2, cyclic permutation blocks otherwise.
GroupPtr elementary_abelian_group(std::size_t p, std::size_t r);
ScenarioReport appendix_counterexample(std::size_t p, std::size_t r);
ScenarioReport pgl2_section_check();

/// Scenario names accepted by run_scenario.
std::vector<std::string> scenario_names();
/// Runs one named scenario with its parameters (defaults cover the standard
/// suite).  Throws InvalidInput for unknown names or parameters.
std::vector<ScenarioReport> run_scenario(const std::string& name, const Params& params = {});
/// Runs the named scenarios ("all" or empty = every scenario); reports are
/// sorted by name.  Exceptions inside a scenario become failed reports.
std::vector<ScenarioReport> verify_all(const std::vector<std::string>& names = {}, const Params& params = {});

}  // namespace weylcoh
