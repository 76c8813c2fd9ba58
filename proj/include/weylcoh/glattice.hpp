#pragma once

// Lattices with a finite group action, equivariant maps and exact sequences.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "weylcoh/finite_group.hpp"
#include "weylcoh/int_matrix.hpp"

namespace weylcoh {

/// A free Z-module of finite rank with a Z-linear action of a finite group.
/// The action is stored for every element, indexed like the group.
class GLattice {
 public:
  GLattice() = default;
  /// Throws InvalidInput unless `actions` is a homomorphism.
  GLattice(GroupPtr group, std::vector<IntMatrix> actions);

  /// Extends generator images along the group's spanning tree and checks the
  /// homomorphism property on every (element, generator) pair.
  static GLattice from_generators(GroupPtr group, const std::vector<IntMatrix>& generator_images);
  /// The group acting on Z^dim by its own matrices.
  static GLattice tautological(GroupPtr group);
  static GLattice trivial(GroupPtr group, std::size_t rank);

  const GroupPtr& group() const noexcept { return group_; }
  std::size_t rank() const noexcept { return rank_; }
  const IntMatrix& action(std::size_t element) const { return actions_.at(element); }
  const std::vector<IntMatrix>& actions() const noexcept { return actions_; }
  /// Images of the group's generators, in generator order.
  std::vector<IntMatrix> generator_actions() const;
  /// Sum of all action matrices.
  IntMatrix norm_operator() const;

 private:
  GroupPtr group_;
  std::size_t rank_ = 0;
  std::vector<IntMatrix> actions_;
};

/// Same element list in the same order (pointer equality or equal keys).
bool same_group(const FiniteMatrixGroup& a, const FiniteMatrixGroup& b);
/// Same group and identical action matrices.
bool same_lattice(const GLattice& a, const GLattice& b);

class EquivariantMap {
 public:
  EquivariantMap() = default;
  /// Throws InvalidInput naming the first generator where
  /// matrix * source(g) != target(g) * matrix.
  EquivariantMap(GLattice source, GLattice target, IntMatrix matrix);

  const GLattice& source() const noexcept { return source_; }
  const GLattice& target() const noexcept { return target_; }
  const IntMatrix& matrix() const noexcept { return matrix_; }

  /// The transpose map between dual lattices (target^0 -> source^0).
  EquivariantMap dual() const;
  EquivariantMap compose_after(const EquivariantMap& first) const;

 private:
  GLattice source_;
  GLattice target_;
  IntMatrix matrix_;
};

/// Index of the first generator violating equivariance, if any.
std::optional<std::size_t> equivariance_violation(const GLattice& source, const GLattice& target, const IntMatrix& m);

struct ExactnessFlags {
  bool injective = false;
  bool exact_at_middle = false;
  bool surjective = false;

  bool all() const { return injective && exact_at_middle && surjective; }
  friend bool operator==(const ExactnessFlags&, const ExactnessFlags&) = default;
};

/// 0 -> P2 --inner--> P1 --outer--> M -> 0
struct LatticeExactSequence {
  EquivariantMap inner;
  EquivariantMap outer;
  ExactnessFlags flags;

  const GLattice& left() const { return inner.source(); }
  const GLattice& middle() const { return inner.target(); }
  const GLattice& right() const { return outer.target(); }
  /// The dual sequence 0 -> M^0 -> P1^0 -> P2^0 -> 0 with fresh flags.
  LatticeExactSequence dual() const;
};

/// Computes the exactness flags over Z; the image of `inner` must be primitive
/// and equal to the kernel of `outer` for exactness in the middle.
ExactnessFlags check_exact(const EquivariantMap& inner, const EquivariantMap& outer);
LatticeExactSequence make_sequence(EquivariantMap inner, EquivariantMap outer);

/// Z[G/H], basis indexed by left cosets ordered by their smallest element.
GLattice permutation_lattice(const GroupPtr& g, const Subgroup& h);
/// Contragredient lattice: g acts by the transpose of g^{-1}.
GLattice dual_lattice(const GLattice& m);
GLattice direct_sum(const GLattice& m, const GLattice& n);
/// The action restricted to h; the result is a lattice over h.as_group().
GLattice restrict(const GLattice& m, const Subgroup& h);
/// Basis (columns) of the h-invariant vectors; always saturated.
IntMatrix fixed_sublattice(const GLattice& m, const Subgroup& h);
IntMatrix fixed_sublattice(const GLattice& m);

/// Lattice on a G-stable saturated sublattice spanned by the columns of `basis`.
GLattice sublattice(const GLattice& m, const IntMatrix& basis);
/// Lattice on the quotient by a G-stable saturated sublattice; also returns
/// the projection matrix (rank - k) x rank.
std::pair<GLattice, IntMatrix> quotient_lattice(const GLattice& m, const IntMatrix& basis);

/// The augmentation lattice I_G, the norm cokernel J_G and their sequences.
///  augmentation: 0 -> I_G -> Z[G] -> Z -> 0   (basis e_g - e_1, g != 1)
///  norm:         0 -> Z -> Z[G] -> J_G -> 0   (basis classes of e_g, g != 1)
struct AugmentationNorm {
  GLattice regular;
  GLattice unit;
  GLattice I;
  GLattice J;
  LatticeExactSequence augmentation;
  LatticeExactSequence norm;
};
AugmentationNorm augmentation_and_norm(const GroupPtr& g);

/// Multiplicity of one rational character of an elementary abelian 2-group.
/// `signs[i]` is 1 when the character is -1 on the i-th basis element.
struct CharacterMultiplicity {
  std::vector<int> signs;
  std::size_t multiplicity = 0;

  friend bool operator==(const CharacterMultiplicity&, const CharacterMultiplicity&) = default;
};

/// A minimal generating set of an elementary abelian 2-group (parent indices).
std::vector<std::size_t> elementary_abelian_basis(const Subgroup& a);

/// Simultaneous eigenspace splitting of Q (x) M under a (Z/2)^k subgroup.
/// Characters are given relative to `basis` (default: elementary_abelian_basis).
/// Only nonzero multiplicities are listed, in lexicographic order of signs.
std::vector<CharacterMultiplicity> rational_character_decomposition(const GLattice& m, const Subgroup& a,
                                                                    std::vector<std::size_t> basis = {});

enum class SearchStatus { found, not_found, inconclusive };
std::string to_string(SearchStatus s);

struct PermutationBasisResult {
  SearchStatus status = SearchStatus::inconclusive;
  /// Columns, grouped by orbit; a Z-basis of the lattice searched.
  IntMatrix basis;
  std::vector<std::size_t> orbit_sizes;
  std::string reason;
};

/// Looks for a Z-basis of `m` permuted by the group, built from orbits of
/// vectors with coordinates in [-bound, bound].  not_found is reported only
/// when an invariant rules out a permutation basis.
PermutationBasisResult is_permutation_basis(const GLattice& m, int bound);

/// Same search for the G-stable saturated sublattice spanned by `sub` inside
/// the lattice `ambient`, with coordinates bounded in the ambient basis.
/// The basis returned is in ambient coordinates.
PermutationBasisResult find_permutation_basis_in(const GLattice& ambient, const IntMatrix& sub, int bound);

struct IsoSearchResult {
  SearchStatus status = SearchStatus::inconclusive;
  std::optional<EquivariantMap> map;
  std::string reason;
};

/// Searches for a unimodular equivariant m -> n.  The optional hint is tried
/// first.  not_found is reported only on an invariant mismatch (rational
/// characters, fixed ranks over subgroups, H^1).
IsoSearchResult iso_search(const GLattice& m, const GLattice& n, int bound = 2,
                           const std::optional<IntMatrix>& hint = std::nullopt);

/// Z-basis (as matrices) of Hom_G(m, n).
std::vector<IntMatrix> equivariant_hom_basis(const GLattice& m, const GLattice& n);

}  // namespace weylcoh
