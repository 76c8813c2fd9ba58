#include "weylcoh/glattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "weylcoh/errors.hpp"
#include "weylcoh/linalg.hpp"

namespace weylcoh {

GLattice::GLattice(GroupPtr group, std::vector<IntMatrix> actions)
    : group_(std::move(group)), actions_(std::move(actions)) {
  if (!group_) throw InvalidInput("GLattice: null group");
  if (actions_.size() != group_->order()) throw InvalidInput("GLattice: need one action matrix per group element");
  rank_ = actions_.front().rows();
  for (const auto& a : actions_)
    if (a.rows() != rank_ || a.cols() != rank_) throw InvalidInput("GLattice: action matrices must be rank x rank");
  if (!actions_[group_->identity_index()].is_identity()) throw InvalidInput("GLattice: identity does not act trivially");
  const auto& gi = group_->generator_indices();
  for (std::size_t e = 0; e < group_->order(); ++e)
    for (std::size_t k = 0; k < gi.size(); ++k)
      if (actions_[group_->times_generator(e, k)] != actions_[e] * actions_[gi[k]])
        throw InvalidInput("GLattice: action is not a homomorphism (element " + std::to_string(e) + ", generator " +
                           std::to_string(k) + ")");
}

GLattice GLattice::from_generators(GroupPtr group, const std::vector<IntMatrix>& images) {
  if (!group) throw InvalidInput("GLattice: null group");
  if (images.size() != group->generators().size())
    throw InvalidInput("GLattice: expected " + std::to_string(group->generators().size()) + " generator images, got " +
                       std::to_string(images.size()));
  const std::size_t r = images.empty() ? 0 : images.front().rows();
  for (const auto& m : images)
    if (m.rows() != r || m.cols() != r) throw InvalidInput("GLattice: generator images must be square of equal size");
  std::vector<IntMatrix> act(group->order());
  const auto& order = group->bfs_order();
  act[order.front()] = IntMatrix::identity(r);
  for (std::size_t t = 1; t < order.size(); ++t) {
    std::size_t b = order[t];
    act[b] = act[group->parent(b)] * images[group->parent_generator(b)];
  }
  return GLattice(std::move(group), std::move(act));
}

GLattice GLattice::tautological(GroupPtr group) {
  std::vector<IntMatrix> act;
  for (const auto& e : group->elements()) act.push_back(e.matrix());
  return GLattice(std::move(group), std::move(act));
}

GLattice GLattice::trivial(GroupPtr group, std::size_t rank) {
  std::vector<IntMatrix> act(group->order(), IntMatrix::identity(rank));
  return GLattice(std::move(group), std::move(act));
}

std::vector<IntMatrix> GLattice::generator_actions() const {
  std::vector<IntMatrix> out;
  for (std::size_t i : group_->generator_indices()) out.push_back(actions_[i]);
  return out;
}

IntMatrix GLattice::norm_operator() const {
  IntMatrix n(rank_, rank_);
  for (const auto& a : actions_) n = n + a;
  return n;
}

bool same_group(const FiniteMatrixGroup& a, const FiniteMatrixGroup& b) {
  if (&a == &b) return true;
  if (a.order() != b.order() || a.dimension() != b.dimension()) return false;
  for (std::size_t i = 0; i < a.order(); ++i)
    if (a.elements()[i].key() != b.elements()[i].key()) return false;
  return true;
}

bool same_lattice(const GLattice& a, const GLattice& b) {
  return same_group(*a.group(), *b.group()) && a.actions() == b.actions();
}

std::optional<std::size_t> equivariance_violation(const GLattice& source, const GLattice& target, const IntMatrix& m) {
  const auto& gi = source.group()->generator_indices();
  for (std::size_t k = 0; k < gi.size(); ++k)
    if (m * source.action(gi[k]) != target.action(gi[k]) * m) return k;
  return std::nullopt;
}

EquivariantMap::EquivariantMap(GLattice source, GLattice target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (!same_group(*source_.group(), *target_.group())) throw InvalidInput("EquivariantMap: lattices over different groups");
  if (matrix_.rows() != target_.rank() || matrix_.cols() != source_.rank())
    throw InvalidInput("EquivariantMap: matrix is " + std::to_string(matrix_.rows()) + "x" +
                       std::to_string(matrix_.cols()) + ", expected " + std::to_string(target_.rank()) + "x" +
                       std::to_string(source_.rank()));
  if (auto k = equivariance_violation(source_, target_, matrix_))
    throw InvalidInput("map is not equivariant: fails at generator " + std::to_string(*k) + " = " +
                       source_.group()->generators()[*k].to_string());
}

EquivariantMap EquivariantMap::dual() const {
  return EquivariantMap(dual_lattice(target_), dual_lattice(source_), matrix_.transpose());
}

EquivariantMap EquivariantMap::compose_after(const EquivariantMap& first) const {
  if (!same_lattice(first.target(), source_)) throw InvalidInput("compose: target of first map is not source of second");
  return EquivariantMap(first.source(), target_, matrix_ * first.matrix());
}

ExactnessFlags check_exact(const EquivariantMap& inner, const EquivariantMap& outer) {
  if (!same_lattice(inner.target(), outer.source()))
    throw InvalidInput("check_exact: middle lattices of the two maps differ");
  const IntMatrix& a = inner.matrix();
  const IntMatrix& b = outer.matrix();
  ExactnessFlags f;
  const std::size_t ra = rank(a), rb = rank(b);
  f.injective = ra == a.cols();
  f.exact_at_middle = (b * a).is_zero() && ra + rb == inner.target().rank() && is_saturated(a);
  f.surjective = cokernel_invariants(b).is_trivial();
  return f;
}

LatticeExactSequence make_sequence(EquivariantMap inner, EquivariantMap outer) {
  LatticeExactSequence s{std::move(inner), std::move(outer), {}};
  s.flags = check_exact(s.inner, s.outer);
  return s;
}

LatticeExactSequence LatticeExactSequence::dual() const { return make_sequence(outer.dual(), inner.dual()); }

GLattice permutation_lattice(const GroupPtr& g, const Subgroup& h) {
  if (!same_group(*h.parent(), *g)) throw InvalidInput("permutation_lattice: subgroup of a different group");
  const std::size_t n = g->order();
  std::vector<std::size_t> coset(n, SIZE_MAX), reps;
  for (std::size_t x = 0; x < n; ++x) {
    if (coset[x] != SIZE_MAX) continue;
    for (std::size_t y : h.elements()) coset[g->multiply(x, y)] = reps.size();
    reps.push_back(x);
  }
  const std::size_t m = reps.size();
  std::vector<IntMatrix> act;
  act.reserve(n);
  for (std::size_t e = 0; e < n; ++e) {
    IntMatrix p(m, m);
    for (std::size_t c = 0; c < m; ++c) p(coset[g->multiply(e, reps[c])], c) = 1;
    act.push_back(std::move(p));
  }
  return GLattice(g, std::move(act));
}

GLattice dual_lattice(const GLattice& m) {
  const auto& g = m.group();
  std::vector<IntMatrix> act;
  act.reserve(g->order());
  for (std::size_t e = 0; e < g->order(); ++e) act.push_back(m.action(g->inverse(e)).transpose());
  return GLattice(g, std::move(act));
}

GLattice direct_sum(const GLattice& m, const GLattice& n) {
  if (!same_group(*m.group(), *n.group())) throw InvalidInput("direct_sum: lattices over different groups");
  std::vector<IntMatrix> act;
  for (std::size_t e = 0; e < m.group()->order(); ++e) act.push_back(IntMatrix::block_diagonal(m.action(e), n.action(e)));
  return GLattice(m.group(), std::move(act));
}

GLattice restrict(const GLattice& m, const Subgroup& h) {
  if (!same_group(*h.parent(), *m.group())) throw InvalidInput("restrict: not a subgroup of the lattice's group");
  std::vector<IntMatrix> act;
  for (std::size_t e : h.elements()) act.push_back(m.action(e));
  return GLattice(h.as_group(), std::move(act));
}

IntMatrix fixed_sublattice(const GLattice& m, const Subgroup& h) {
  std::vector<std::size_t> gens = h.generators();
  if (gens.empty()) gens = h.elements();
  IntMatrix stacked(0, m.rank());
  const IntMatrix one = IntMatrix::identity(m.rank());
  for (std::size_t e : gens) stacked = IntMatrix::vstack(stacked, m.action(e) - one);
  return kernel_basis(stacked);
}

IntMatrix fixed_sublattice(const GLattice& m) { return fixed_sublattice(m, Subgroup::whole(m.group())); }

namespace {

struct Complement {
  IntMatrix left_inverse;  // k x r with left_inverse * basis = I
  IntMatrix projection;    // (r-k) x r, kernel = span(basis)
  IntMatrix lift;          // r x (r-k), projection * lift = I
};

Complement complement_of(const IntMatrix& basis) {
  const std::size_t r = basis.rows(), k = basis.cols();
  auto snf = smith_normal_form(basis);
  if (snf.rank != k) throw InvalidInput("sublattice basis is not linearly independent");
  for (std::size_t i = 0; i < k; ++i)
    if (!snf.D(i, i).is_one()) throw InvalidInput("sublattice is not saturated");
  std::vector<std::size_t> head(k), tail(r - k);
  std::iota(head.begin(), head.end(), 0);
  std::iota(tail.begin(), tail.end(), k);
  Complement c;
  c.left_inverse = snf.V * snf.U.select_rows(head);
  c.projection = snf.U.select_rows(tail);
  c.lift = snf.U_inv.select_columns(tail);
  return c;
}

}  // namespace

GLattice sublattice(const GLattice& m, const IntMatrix& basis) {
  Complement c = complement_of(basis);
  std::vector<IntMatrix> act;
  for (const auto& a : m.actions()) {
    IntMatrix image = a * basis;
    IntMatrix coords = c.left_inverse * image;
    if (basis * coords != image) throw InvalidInput("sublattice is not stable under the group");
    act.push_back(std::move(coords));
  }
  return GLattice(m.group(), std::move(act));
}

std::pair<GLattice, IntMatrix> quotient_lattice(const GLattice& m, const IntMatrix& basis) {
  Complement c = complement_of(basis);
  std::vector<IntMatrix> act;
  for (const auto& a : m.actions()) {
    if (!(c.projection * a * basis).is_zero()) throw InvalidInput("sublattice is not stable under the group");
    act.push_back(c.projection * a * c.lift);
  }
  return {GLattice(m.group(), std::move(act)), c.projection};
}

AugmentationNorm augmentation_and_norm(const GroupPtr& g) {
  AugmentationNorm r;
  const std::size_t n = g->order(), one = g->identity_index();
  r.regular = permutation_lattice(g, Subgroup::trivial(g));
  r.unit = GLattice::trivial(g, 1);
  std::vector<std::size_t> others;
  for (std::size_t x = 0; x < n; ++x)
    if (x != one) others.push_back(x);

  IntMatrix incl(n, n - 1);
  for (std::size_t j = 0; j < others.size(); ++j) {
    incl(others[j], j) = 1;
    incl(one, j) = -1;
  }
  IntMatrix aug(1, n);
  for (std::size_t x = 0; x < n; ++x) aug(0, x) = 1;
  r.I = sublattice(r.regular, incl);
  r.augmentation = make_sequence(EquivariantMap(r.I, r.regular, incl), EquivariantMap(r.regular, r.unit, aug));

  IntMatrix norm(n, 1);
  for (std::size_t x = 0; x < n; ++x) norm(x, 0) = 1;
  IntMatrix proj(n - 1, n), lift(n, n - 1);
  for (std::size_t j = 0; j < others.size(); ++j) {
    proj(j, others[j]) = 1;
    proj(j, one) = -1;
    lift(others[j], j) = 1;
  }
  std::vector<IntMatrix> jact;
  for (const auto& a : r.regular.actions()) jact.push_back(proj * a * lift);
  r.J = GLattice(g, std::move(jact));
  r.norm = make_sequence(EquivariantMap(r.unit, r.regular, norm), EquivariantMap(r.regular, r.J, proj));
  return r;
}

std::vector<std::size_t> elementary_abelian_basis(const Subgroup& a) {
  const auto& g = a.parent();
  std::set<std::size_t> span{g->identity_index()};
  std::vector<std::size_t> basis;
  std::vector<std::size_t> candidates = a.generators();
  candidates.insert(candidates.end(), a.elements().begin(), a.elements().end());
  for (std::size_t x : candidates) {
    if (span.count(x)) continue;
    basis.push_back(x);
    std::set<std::size_t> next = span;
    for (std::size_t s : span) next.insert(g->multiply(s, x));
    span = std::move(next);
  }
  return basis;
}

std::vector<CharacterMultiplicity> rational_character_decomposition(const GLattice& m, const Subgroup& a,
                                                                    std::vector<std::size_t> basis) {
  const auto& g = m.group();
  if (!same_group(*a.parent(), *g)) throw InvalidInput("character decomposition: subgroup of a different group");
  for (std::size_t x : a.elements()) {
    if (g->multiply(x, x) != g->identity_index()) throw InvalidInput("character decomposition: group is not 2-torsion");
    for (std::size_t y : a.elements())
      if (g->multiply(x, y) != g->multiply(y, x)) throw InvalidInput("character decomposition: group is not abelian");
  }
  if (basis.empty()) basis = elementary_abelian_basis(a);
  const std::size_t k = basis.size();
  if ((std::size_t{1} << k) != a.order()) throw InvalidInput("character decomposition: basis does not generate the group");
  const IntMatrix one = IntMatrix::identity(m.rank());
  std::vector<CharacterMultiplicity> out;
  std::size_t total = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    // 2^k times the projector onto the character
    IntMatrix p = one;
    std::vector<int> signs(k);
    for (std::size_t i = 0; i < k; ++i) {
      signs[i] = static_cast<int>((mask >> (k - 1 - i)) & 1);
      p = p * (signs[i] ? one - m.action(basis[i]) : one + m.action(basis[i]));
    }
    std::size_t mult = rank(p);
    total += mult;
    if (mult) out.push_back({std::move(signs), mult});
  }
  if (total != m.rank()) throw Error("character decomposition: multiplicities do not add up to the rank");
  return out;
}

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found:
      return "found";
    case SearchStatus::not_found:
      return "not_found";
    case SearchStatus::inconclusive:
      return "inconclusive";
  }
  return "?";
}

}  // namespace weylcoh
