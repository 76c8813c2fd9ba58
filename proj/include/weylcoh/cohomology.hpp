#pragma once

// Cohomology of G-lattices in degrees 0, 1, 2 through the normalized bar
// complex, Tate H^0, restriction maps and the kernels Sha^i_omega.
//
// Coordinates: C^k = M^(N^k) with N = |G| - 1 nontrivial elements taken in
// index order; the cochain value at (g_1, ..., g_k) occupies the block
// starting at (tuple index) * rank, tuple index read lexicographically.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weylcoh/glattice.hpp"
#include "weylcoh/linalg.hpp"

namespace weylcoh {

struct CohomologyOptions {
  /// Largest dense matrix (entries) any single computation may allocate.
  std::size_t max_entries = 10'000'000;
  /// Check ker d^k = sat(im d^(k-1)) by a rank count and d o d = 0 on
  /// random cochains; needs d^k itself.
  bool certify = true;
};

class BarComplex {
 public:
  explicit BarComplex(const GLattice& m);

  const GLattice& lattice() const noexcept { return m_; }
  std::size_t nontrivial() const noexcept { return others_.size(); }
  std::size_t cochain_dim(std::size_t k) const;
  /// d^k : C^k -> C^(k+1); throws ResourceGuardError when it would exceed max_entries.
  IntMatrix differential(std::size_t k, std::size_t max_entries) const;
  /// Position of element e among the nontrivial elements (e must not be the identity).
  std::size_t position(std::size_t e) const { return pos_[e]; }
  std::size_t element(std::size_t position) const { return others_[position]; }

 private:
  GLattice m_;
  std::vector<std::size_t> others_;
  std::vector<std::size_t> pos_;
};

/// A cohomology group with class coordinates for cochains.
struct CohomologyGroup {
  std::size_t degree = 0;
  bool tate = false;
  /// Quotient of the cocycles by the coboundaries, in cochain coordinates
  /// (for degree 0: coordinates of M).
  QuotientGroup quotient;
  /// Generators of the coboundaries (columns).
  IntMatrix coboundaries;

  const AbelianGroupInvariants& invariants() const { return quotient.invariants(); }
  std::size_t cochain_dim() const { return quotient.ambient_dim(); }
};

CohomologyGroup h0(const GLattice& m);
/// M^G / N_G M.
CohomologyGroup tate_h0(const GLattice& m);
CohomologyGroup h1(const GLattice& m, const CohomologyOptions& opts = {});
CohomologyGroup h2(const GLattice& m, const CohomologyOptions& opts = {});
/// Dispatches on degree; degree 0 honours `tate`.
CohomologyGroup cohomology(const GLattice& m, std::size_t degree, bool tate = false, const CohomologyOptions& opts = {});

/// Invariants only (torsion of coker d^(k-1)), for k = 1, 2; no transforms tracked.
AbelianGroupInvariants cohomology_invariants(const GLattice& m, std::size_t degree,
                                             std::size_t max_entries = CohomologyOptions{}.max_entries);

struct CohomologyMap {
  CohomologyGroup source;
  CohomologyGroup target;
  /// Column j: target class coordinates of the image of source generator j.
  IntMatrix matrix;
};

/// Literal cochain restriction to h, followed by class projection.  Throws
/// Error if a restricted coboundary is not a coboundary.
CohomologyMap restriction(const GLattice& m, const Subgroup& h, std::size_t degree, bool tate = false,
                          const CohomologyOptions& opts = {});
/// Same, reusing precomputed groups for m and for restrict(m, h).
IntMatrix restriction_matrix(const GLattice& m, const CohomologyGroup& source, const Subgroup& h,
                             const CohomologyGroup& target);

struct ShaResult {
  CohomologyGroup ambient;
  /// Kernel as a subquotient of the ambient class coordinates.
  QuotientGroup kernel;
  std::size_t cyclic_subgroups = 0;
  /// A class of maximal order, when the kernel is nontrivial.
  std::optional<IntVector> witness_class;
  std::optional<IntVector> witness_cocycle;
  Integer witness_order{0};

  const AbelianGroupInvariants& invariants() const { return kernel.invariants(); }
};

/// Kernel of H^i(G, M) -> prod over nontrivial cyclic subgroups C of H^i(C, M).
/// Degree 0 requires `tate`.
ShaResult sha_omega(const GLattice& m, std::size_t degree, bool tate = false, const CohomologyOptions& opts = {});

/// Cyclic closed forms for G = <g> cyclic: H^1 = ker N / im(g - 1), H^2 = M^G / N M.
AbelianGroupInvariants cyclic_h1(const GLattice& m, std::size_t generator);
AbelianGroupInvariants cyclic_h2(const GLattice& m, std::size_t generator);

/// ker[Z/|G| -> prod_g Z/ord(g)] with 1 mapped to 1 in every factor.
AbelianGroupInvariants tate_kernel_formula(const FiniteMatrixGroup& g);

/// Max |d^k d^(k-1) x| over `trials` deterministic random cochains is zero.
bool check_dd_zero(const GLattice& m, std::size_t k, int trials, std::size_t max_entries);

}  // namespace weylcoh
