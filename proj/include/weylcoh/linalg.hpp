#pragma once

// Exact integer linear algebra: Smith normal form, kernels, cokernels,
// saturation and finitely generated abelian quotients.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weylcoh/int_matrix.hpp"

namespace weylcoh {

/// U * A * V = D with U, V unimodular and D diagonal with d_i | d_{i+1}.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix U_inv;
  IntMatrix V;
  IntMatrix D;
  std::size_t rank = 0;

  /// The nonzero diagonal entries d_1 | d_2 | ... | d_rank.
  IntVector invariant_factors() const;
};

struct SmithOptions {
  bool track_u = true;
  bool track_v = true;
};

/// Deterministic: the pivot is the entry of smallest absolute value in the
/// active submatrix, ties broken by lowest (row, col).
SmithDecomposition smith_normal_form(const IntMatrix& a, SmithOptions opts = {});

/// Invariant factors only; skips the transform bookkeeping.
IntVector smith_invariant_factors(const IntMatrix& a);

/// Finitely generated abelian group Z^free_rank + Z/t_1 + ... + Z/t_k, t_i | t_{i+1}.
struct AbelianGroupInvariants {
  std::size_t free_rank = 0;
  IntVector torsion;

  static AbelianGroupInvariants from_cyclic_orders(const IntVector& orders, std::size_t free_rank = 0);

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool is_finite() const { return free_rank == 0; }
  /// Last torsion factor, 1 for the trivial group, 0 when the group is infinite.
  Integer exponent() const;
  /// Group order, or 0 when infinite.
  Integer order() const;
  std::string to_string() const;

  friend bool operator==(const AbelianGroupInvariants&, const AbelianGroupInvariants&) = default;
};

/// Invariants of Z^rows / (column span of a).
AbelianGroupInvariants cokernel_invariants(const IntMatrix& a);

/// Columns form a Z-basis of {x : a x = 0}, in column Hermite form.
IntMatrix kernel_basis(const IntMatrix& a);

/// Row Hermite form: nonzero rows only, pivots positive, entries above each
/// pivot reduced to [0, pivot).
IntMatrix hermite_rows(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);
std::size_t rank_mod_p(const IntMatrix& a, std::uint64_t p);
Integer determinant(const IntMatrix& a);
bool is_unimodular(const IntMatrix& a);

/// Integer solution of a x = b, if one exists.
std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b);

/// The column span is a direct summand of Z^rows.
bool is_saturated(const IntMatrix& columns);
/// Basis of (span_Q columns) ∩ Z^rows.
IntMatrix saturation(const IntMatrix& columns);

/// The quotient of an ambient lattice (a column basis inside Z^N) by a
/// sublattice, with a projection onto class coordinates.
///
/// Class coordinates list the torsion summands first (one per invariant
/// factor, reduced modulo it), then the free summands.
class QuotientGroup {
 public:
  QuotientGroup() = default;

  /// quotient of span(ambient_basis) by span(sub_basis); throws if the
  /// sublattice is not contained in the ambient lattice.
  static QuotientGroup of(const IntMatrix& ambient_basis, const IntMatrix& sub_basis);
  /// sat(sub) / sub, where the saturation is taken in Z^rows.
  static QuotientGroup saturation_quotient(const IntMatrix& sub_basis);
  /// sat(sub) / sub, built from an existing Smith decomposition of sub.
  static QuotientGroup saturation_quotient(const SmithDecomposition& snf, std::size_t ambient_dim);

  const AbelianGroupInvariants& invariants() const { return invariants_; }
  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t num_generators() const { return moduli_.size(); }
  /// Modulus per class coordinate (0 for free coordinates).
  const IntVector& moduli() const { return moduli_; }

  bool contains(const IntVector& x) const;
  /// Class coordinates of an ambient-lattice vector.
  IntVector project(const IntVector& x) const;
  bool is_zero_class(const IntVector& x) const;
  /// An ambient vector representing the i-th class generator.
  IntVector lift(std::size_t i) const { return lifts_.column(i); }
  const IntMatrix& lifts() const { return lifts_; }
  /// Reduce class coordinates modulo the moduli.
  IntVector reduce(IntVector coords) const;

 private:
  // y = pre * x, membership rows must vanish and y_i must be divisible by
  // pre_div_i; class coordinates = reduce(post * (y / pre_div)).
  IntMatrix pre_;
  IntVector pre_div_;
  IntMatrix membership_;
  IntMatrix post_;
  bool post_identity_ = false;
  IntVector moduli_;
  IntMatrix lifts_;
  AbelianGroupInvariants invariants_;
  std::size_t ambient_dim_ = 0;
};

inline QuotientGroup quotient_group(const IntMatrix& ambient_basis, const IntMatrix& sub_basis) {
  return QuotientGroup::of(ambient_basis, sub_basis);
}

/// Kernel of the homomorphism  (+ Z/src_moduli_i) -> (+ Z/dst_moduli_j)
/// given on generators by the columns of `map`; the result is expressed as a
/// quotient of a sublattice of Z^k by the relations diag(src_moduli).
/// Modulus 0 marks a free coordinate.
QuotientGroup kernel_of_abelian_map(const IntMatrix& map, const IntVector& src_moduli, const IntVector& dst_moduli);

}  // namespace weylcoh
