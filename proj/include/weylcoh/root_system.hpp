#pragma once

// Reduced irreducible root systems in Bourbaki coordinates, their Weyl groups
// and lattices.
//
// Conventions: cartan(i, j) = 2 (a_i, a_j) / (a_j, a_j), so the simple
// reflection s_j sends a_i to a_i - cartan(i, j) a_j.  Q(R) uses the basis of
// simple roots and P(R) the basis of fundamental weights.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "weylcoh/finite_group.hpp"
#include "weylcoh/glattice.hpp"
#include "weylcoh/rational.hpp"

namespace weylcoh {

struct DynkinType {
  char family = 'A';
  std::size_t rank = 1;

  /// Validates the rank; D3 is returned as A3.
  static DynkinType make(char family, std::size_t rank);
  /// Parses "C3", "E8", ...
  static DynkinType parse(const std::string& s);
  std::string to_string() const { return std::string(1, family) + std::to_string(rank); }

  friend bool operator==(const DynkinType&, const DynkinType&) = default;
  friend auto operator<=>(const DynkinType&, const DynkinType&) = default;
};

DynkinType dual_type(const DynkinType& t);

/// Simple roots as columns, Bourbaki's plates.
RatMatrix bourbaki_simple_roots(const DynkinType& t);
IntMatrix cartan_matrix(const DynkinType& t);
IntMatrix cartan_from_simple_roots(const RatMatrix& simple);

struct RootSystemData {
  DynkinType type;
  std::size_t ambient_dim = 0;
  RatMatrix simple_roots;
  /// Positive roots by height, then their negatives.
  std::vector<RatVector> roots;
  /// Coordinates of each root in the simple-root basis.
  std::vector<IntVector> root_coordinates;
  std::size_t positive_count = 0;
  IntMatrix cartan;
  /// Columns: fundamental weights in ambient coordinates.
  RatMatrix fundamental_weights;
  std::vector<RatMatrix> reflections_ambient;
  std::vector<IntMatrix> reflections_weight;
  std::vector<IntMatrix> reflections_root;

  std::size_t rank() const { return cartan.rows(); }
  Integer connection_index() const;
};

/// Builds every field from the given simple roots (checks integrality and
/// unimodularity of the reflections and closure of the root set).
RootSystemData root_system_from_simple_roots(const DynkinType& t, const RatMatrix& simple);
RootSystemData build_root_system(const DynkinType& t);
/// Coroot system 2a/(a, a) in the same ambient space with the same node order.
RootSystemData dual_data(const RootSystemData& rs);

/// The Weyl group on the fundamental-weight basis.
GroupPtr weyl_group(const RootSystemData& rs, std::size_t cap = FiniteMatrixGroup::kDefaultCap);
GroupPtr weyl_group_root_basis(const RootSystemData& rs, std::size_t cap = FiniteMatrixGroup::kDefaultCap);
/// Ambient reflections; requires them to be integral (types A, B, C, D, G).
GroupPtr weyl_group_ambient(const RootSystemData& rs, std::size_t cap = FiniteMatrixGroup::kDefaultCap);

/// Weight-basis matrix of an ambient linear map preserving the span of the
/// roots; throws if the result is not integral.
IntMatrix ambient_to_weight_basis(const RootSystemData& rs, const RatMatrix& ambient);
/// Number of roots of an irreducible system of type t.
std::size_t root_count(const DynkinType& t);

struct WeylLatticePair {
  GLattice Q;
  GLattice P;
  EquivariantMap inclusion;
  Integer connection_index;
};

/// Q(R) and P(R) over the weight-basis Weyl group (or the given group, whose
/// matrices must be weight-basis elements of W).
WeylLatticePair lattice_pair(const RootSystemData& rs, GroupPtr w = nullptr);

/// Type of a connected Cartan matrix and the node map: the i-th node of the
/// standard diagram is node perm[i] of the input.
struct TypeIdentification {
  DynkinType type;
  std::vector<std::size_t> perm;
};
std::optional<TypeIdentification> identify_type(const IntMatrix& cartan);

/// First injective node map (in lexicographic order) f with
/// cartan_big(f i, f j) = cartan_small(i, j) for all i != j.
std::optional<std::vector<std::size_t>> find_cartan_embedding(const IntMatrix& big, const IntMatrix& small);
/// Node indices of t realizing an induced subdiagram of type target, listed in
/// target's node order.
std::optional<std::vector<std::size_t>> find_subdiagram(const DynkinType& t, const DynkinType& target);

struct SubRootSystem {
  /// R' = R meet span(B'), with the nodes in the given order.
  RootSystemData data;
  std::vector<std::size_t> nodes;
  std::vector<std::size_t> complement;
  /// Q(R') -> Q(R) in simple-root bases (l x l').
  IntMatrix inclusion;
  /// Q(R) -> Z^(l - l'), the coefficients of the complementary simple roots.
  IntMatrix projection;
};

/// Throws InvalidInput for out-of-range or repeated indices and for a
/// disconnected induced diagram.
SubRootSystem sub_root_system(const RootSystemData& rs, const std::vector<std::size_t>& nodes);

/// 0 -> Q(R') -> Q(R) -> Z^(l - l') -> 0 as lattices over `h`, a group of
/// simple-root-basis matrices of W(R') (default: W(R') itself).
LatticeExactSequence root_subsystem_sequence(const RootSystemData& rs, const SubRootSystem& sub, GroupPtr h = nullptr);

}  // namespace weylcoh
