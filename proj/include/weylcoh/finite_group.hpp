#pragma once

// Finite groups given by integer-matrix generators.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "weylcoh/int_matrix.hpp"

namespace weylcoh {

/// A square unimodular matrix together with its canonical byte key.
class GroupElement {
 public:
  explicit GroupElement(IntMatrix m);

  const IntMatrix& matrix() const noexcept { return matrix_; }
  const std::string& key() const noexcept { return key_; }

  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.key_ == b.key_; }

 private:
  IntMatrix matrix_;
  std::string key_;
};

class FiniteMatrixGroup;
using GroupPtr = std::shared_ptr<const FiniteMatrixGroup>;

/// A closed set of matrices.  Elements are ordered by canonical key, so the
/// ordering is deterministic and a subgroup lists its elements in the same
/// relative order as its parent.
class FiniteMatrixGroup {
 public:
  static constexpr std::size_t kDefaultCap = 1'000'000;

  /// Closure of the generators; throws ResourceGuardError("group too large")
  /// past `cap` elements.
  static GroupPtr generate(const std::vector<IntMatrix>& generators, std::size_t cap = kDefaultCap);
  /// The trivial group of the given matrix dimension.
  static GroupPtr trivial(std::size_t dim);

  std::size_t dimension() const noexcept { return dim_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<GroupElement>& elements() const noexcept { return elements_; }
  const IntMatrix& matrix(std::size_t i) const { return elements_.at(i).matrix(); }
  const std::vector<IntMatrix>& generators() const noexcept { return generators_; }
  /// Element index of each generator.
  const std::vector<std::size_t>& generator_indices() const noexcept { return generator_indices_; }
  std::size_t identity_index() const noexcept { return identity_; }

  std::optional<std::size_t> index_of(const IntMatrix& m) const;
  std::optional<std::size_t> index_of_key(const std::string& key) const;
  bool contains(const IntMatrix& m) const { return index_of(m).has_value(); }

  /// Index of element(g) * generator(k).
  std::size_t times_generator(std::size_t g, std::size_t k) const { return right_gen_[g * generators_.size() + k]; }
  /// A word in the generators evaluating to element i (empty for identity).
  std::vector<std::uint32_t> word(std::size_t i) const;
  /// Spanning tree: element(i) = element(parent(i)) * generator(parent_generator(i)).
  std::size_t parent(std::size_t i) const { return parent_[i]; }
  std::size_t parent_generator(std::size_t i) const { return parent_gen_[i]; }
  /// Element indices in breadth-first order; parents come first.
  const std::vector<std::uint32_t>& bfs_order() const noexcept { return bfs_order_; }

  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const;
  /// Full Cayley table, row-major; built on first use.
  const std::vector<std::uint32_t>& multiplication_table() const;

  bool is_abelian() const;

 private:
  FiniteMatrixGroup() = default;

  std::size_t dim_ = 0;
  std::vector<IntMatrix> generators_;
  std::vector<std::size_t> generator_indices_;
  std::vector<GroupElement> elements_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::uint32_t> right_gen_;
  // breadth-first spanning tree: element = parent * generator(parent_gen)
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> parent_gen_;
  std::vector<std::uint32_t> bfs_order_;
  std::size_t identity_ = 0;

  mutable std::once_flag table_once_;
  mutable std::vector<std::uint32_t> table_;
  mutable std::vector<std::uint32_t> inverse_;
};

/// A subset of a parent group closed under the group law.
class Subgroup {
 public:
  Subgroup(GroupPtr parent, std::vector<std::size_t> elements, std::vector<std::size_t> generators);

  static Subgroup whole(const GroupPtr& g);
  static Subgroup trivial(const GroupPtr& g);
  /// Smallest subgroup containing the given parent elements.
  static Subgroup generated_by(const GroupPtr& g, const std::vector<std::size_t>& gens);

  const GroupPtr& parent() const noexcept { return parent_; }
  /// Sorted parent indices.
  const std::vector<std::size_t>& elements() const noexcept { return elements_; }
  const std::vector<std::size_t>& generators() const noexcept { return generators_; }
  std::size_t order() const noexcept { return elements_.size(); }
  bool contains(std::size_t parent_index) const;
  bool is_closed() const;
  /// The subgroup as a standalone matrix group; element k of the result is
  /// parent element elements()[k].
  GroupPtr as_group() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.elements_ == b.elements_;
  }

 private:
  GroupPtr parent_;
  std::vector<std::size_t> elements_;
  std::vector<std::size_t> generators_;
  struct Cache {
    std::once_flag once;
    GroupPtr group;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Least m >= 1 with g^m = I; throws InvalidInput("element of infinite order")
/// if no such m <= bound.
std::size_t element_order(const IntMatrix& g, std::size_t bound = FiniteMatrixGroup::kDefaultCap);
std::size_t element_order(const FiniteMatrixGroup& g, std::size_t i);

/// All subgroups <g>, deduplicated, trivial subgroup first, then by order.
std::vector<Subgroup> cyclic_subgroups(const GroupPtr& g);

/// Every subgroup exactly once (sorted by order, then elements).  Built by
/// joining cyclic subgroups until no new subgroup appears; throws
/// ResourceGuardError if more than `cap` subgroups are found.
std::vector<Subgroup> all_subgroups(const GroupPtr& g, std::size_t cap = 100'000);

Subgroup conjugate(const Subgroup& h, std::size_t by);
/// Partition of `subgroups` into conjugacy classes (indices into the list);
/// each class lists its members in input order.
std::vector<std::vector<std::size_t>> conjugacy_classes(const std::vector<Subgroup>& subgroups);

struct SubgroupCheck {
  bool comparable = true;  ///< false when the matrix dimensions differ
  bool contained = false;

  explicit operator bool() const { return comparable && contained; }
};

/// Whether every element of h is an element of g.
SubgroupCheck is_subgroup_of(const FiniteMatrixGroup& h, const FiniteMatrixGroup& g);

}  // namespace weylcoh
