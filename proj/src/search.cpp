// Bounded searches on G-lattices: permutation bases and isomorphisms.

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "weylcoh/cohomology.hpp"
#include "weylcoh/errors.hpp"
#include "weylcoh/glattice.hpp"
#include "weylcoh/linalg.hpp"

namespace weylcoh {

namespace {

constexpr std::size_t kCandidateBudget = 3'000'000;
constexpr std::size_t kNodeBudget = 500'000;

std::string vec_key(const IntVector& v) {
  std::string k;
  for (const auto& x : v) x.append_key(k);
  return k;
}

// left inverse of a saturated basis
IntMatrix left_inverse(const IntMatrix& basis) {
  auto snf = smith_normal_form(basis);
  if (snf.rank != basis.cols()) throw InvalidInput("basis is not linearly independent");
  for (std::size_t i = 0; i < snf.rank; ++i)
    if (!snf.D(i, i).is_one()) throw InvalidInput("sublattice is not saturated");
  std::vector<std::size_t> head(basis.cols());
  std::iota(head.begin(), head.end(), 0);
  return snf.V * snf.U.select_rows(head);
}

struct Orbit {
  std::vector<IntVector> ambient;  // vectors in ambient coordinates
  IntMatrix coords;                // columns: coordinates in the sublattice basis
  Integer weight;                  // L1 norm of the representative
};

class BasisSearch {
 public:
  BasisSearch(const std::vector<Orbit>& orbits, std::size_t k) : orbits_(orbits), k_(k) {}

  std::optional<std::vector<std::size_t>> run() {
    chosen_.clear();
    return dfs(0, IntMatrix(k_, 0)) ? std::optional(chosen_) : std::nullopt;
  }
  bool exhausted_budget() const { return nodes_ > kNodeBudget; }

 private:
  bool dfs(std::size_t start, const IntMatrix& cur) {
    if (cur.cols() == k_) return abs(determinant(cur)).is_one();
    for (std::size_t i = start; i < orbits_.size(); ++i) {
      if (++nodes_ > kNodeBudget) return false;
      if (cur.cols() + orbits_[i].coords.cols() > k_) continue;
      IntMatrix next = IntMatrix::hstack(cur, orbits_[i].coords);
      if (rank(next) != next.cols()) continue;
      chosen_.push_back(i);
      if (dfs(i + 1, next)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const std::vector<Orbit>& orbits_;
  std::size_t k_;
  std::size_t nodes_ = 0;
  std::vector<std::size_t> chosen_;
};

}  // namespace

PermutationBasisResult find_permutation_basis_in(const GLattice& ambient, const IntMatrix& sub, int bound) {
  PermutationBasisResult res;
  const std::size_t m = ambient.rank(), k = sub.cols();
  if (sub.rows() != m) throw InvalidInput("find_permutation_basis_in: dimension mismatch");
  if (k == 0) {
    res.status = SearchStatus::found;
    res.basis = IntMatrix(m, 0);
    return res;
  }
  GLattice lat = sublattice(ambient, sub);
  if (fixed_sublattice(lat).cols() == 0) {
    res.status = SearchStatus::not_found;
    res.reason = "no nonzero invariant vector, but a permutation lattice has one per orbit";
    return res;
  }
  try {
    auto h1 = cohomology_invariants(lat, 1);
    if (!h1.is_trivial()) {
      res.status = SearchStatus::not_found;
      res.reason = "H^1 = " + h1.to_string() + " is nonzero, but vanishes for permutation lattices";
      return res;
    }
  } catch (const ResourceGuardError&) {
  }
  if (bound < 1) throw InvalidInput("find_permutation_basis_in: bound must be positive");
  long double total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= 2 * bound + 1;
  if (total > kCandidateBudget) {
    res.reason = "candidate space exceeds the search budget";
    return res;
  }

  IntMatrix linv = left_inverse(sub);
  std::vector<IntMatrix> gens = ambient.generator_actions();

  // all candidate vectors in the sublattice, smallest L1 norm first
  std::vector<IntVector> cands;
  IntVector x(m, Integer(-bound));
  for (;;) {
    if (!is_zero_vector(x) && sub * (linv * x) == x) cands.push_back(x);
    std::size_t i = 0;
    while (i < m && x[i] == Integer(bound)) x[i++] = Integer(-bound);
    if (i == m) break;
    x[i] += Integer(1);
  }
  auto l1 = [](const IntVector& v) {
    Integer s(0);
    for (const auto& e : v) s += abs(e);
    return s;
  };
  std::stable_sort(cands.begin(), cands.end(), [&](const IntVector& a, const IntVector& b) { return l1(a) < l1(b); });

  std::unordered_set<std::string> seen;
  std::vector<Orbit> orbits;
  for (const auto& c : cands) {
    if (seen.count(vec_key(c))) continue;
    Orbit o;
    std::unordered_set<std::string> local{vec_key(c)};
    o.ambient.push_back(c);
    bool too_big = false;
    for (std::size_t t = 0; t < o.ambient.size() && !too_big; ++t)
      for (const auto& g : gens) {
        IntVector y = g * o.ambient[t];
        if (local.insert(vec_key(y)).second) {
          o.ambient.push_back(std::move(y));
          if (o.ambient.size() > k) {
            too_big = true;
            break;
          }
        }
      }
    for (const auto& v : o.ambient) seen.insert(vec_key(v));
    if (too_big) continue;
    std::vector<IntVector> cols;
    for (const auto& v : o.ambient) cols.push_back(linv * v);
    o.coords = IntMatrix::from_columns(cols, k);
    if (rank(o.coords) != o.coords.cols()) continue;
    o.weight = l1(c);
    orbits.push_back(std::move(o));
  }

  BasisSearch search(orbits, k);
  if (auto chosen = search.run()) {
    std::vector<IntVector> cols;
    for (std::size_t i : *chosen) {
      res.orbit_sizes.push_back(orbits[i].ambient.size());
      cols.insert(cols.end(), orbits[i].ambient.begin(), orbits[i].ambient.end());
    }
    res.basis = IntMatrix::from_columns(cols, m);
    res.status = SearchStatus::found;
    return res;
  }
  res.reason = search.exhausted_budget() ? "search budget exhausted" : "no permuted basis within the coefficient bound";
  return res;
}

PermutationBasisResult is_permutation_basis(const GLattice& m, int bound) {
  return find_permutation_basis_in(m, IntMatrix::identity(m.rank()), bound);
}

std::vector<IntMatrix> equivariant_hom_basis(const GLattice& m, const GLattice& n) {
  if (!same_group(*m.group(), *n.group())) throw InvalidInput("Hom: lattices over different groups");
  const std::size_t rm = m.rank(), rn = n.rank();
  const auto gi = m.group()->generator_indices();
  // X is rn x rm, variable (a, b) at a * rm + b
  IntMatrix sys(gi.size() * rn * rm, rn * rm);
  std::size_t row = 0;
  for (std::size_t g : gi) {
    const IntMatrix& am = m.action(g);
    const IntMatrix& an = n.action(g);
    for (std::size_t i = 0; i < rn; ++i)
      for (std::size_t j = 0; j < rm; ++j, ++row) {
        for (std::size_t b = 0; b < rm; ++b) sys(row, i * rm + b) += am(b, j);
        for (std::size_t a = 0; a < rn; ++a) sys(row, a * rm + j) -= an(i, a);
      }
  }
  IntMatrix ker = kernel_basis(sys);
  std::vector<IntMatrix> out;
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    IntMatrix x(rn, rm);
    for (std::size_t a = 0; a < rn; ++a)
      for (std::size_t b = 0; b < rm; ++b) x(a, b) = ker(a * rm + b, c);
    out.push_back(std::move(x));
  }
  return out;
}

namespace {

bool is_elementary_abelian_2(const FiniteMatrixGroup& g) {
  if (!g.is_abelian()) return false;
  for (std::size_t e = 0; e < g.order(); ++e)
    if (g.multiply(e, e) != g.identity_index()) return false;
  return true;
}

// first invariant that differs, or empty
std::string invariant_mismatch(const GLattice& m, const GLattice& n) {
  const auto& g = m.group();
  std::vector<Subgroup> subs = g->order() <= 200 ? all_subgroups(g) : cyclic_subgroups(g);
  for (const auto& h : subs) {
    std::size_t a = fixed_sublattice(m, h).cols(), b = fixed_sublattice(n, h).cols();
    if (a != b)
      return "fixed ranks differ on a subgroup of order " + std::to_string(h.order()) + " (" + std::to_string(a) +
             " vs " + std::to_string(b) + ")";
  }
  if (is_elementary_abelian_2(*g)) {
    Subgroup whole = Subgroup::whole(g);
    auto basis = elementary_abelian_basis(whole);
    if (rational_character_decomposition(m, whole, basis) != rational_character_decomposition(n, whole, basis))
      return "rational character multisets differ";
  }
  try {
    auto a = cohomology_invariants(m, 1), b = cohomology_invariants(n, 1);
    if (a != b) return "H^1 differs (" + a.to_string() + " vs " + b.to_string() + ")";
  } catch (const ResourceGuardError&) {
  }
  return {};
}

}  // namespace

IsoSearchResult iso_search(const GLattice& m, const GLattice& n, int bound, const std::optional<IntMatrix>& hint) {
  if (!same_group(*m.group(), *n.group())) throw InvalidInput("iso_search: lattices over different groups");
  if (m.rank() != n.rank()) throw InvalidInput("iso_search: ranks differ");
  IsoSearchResult res;
  auto accept = [&](const IntMatrix& x) {
    if (x.rows() != n.rank() || x.cols() != m.rank()) return false;
    if (!abs(determinant(x)).is_one() || equivariance_violation(m, n, x)) return false;
    res.status = SearchStatus::found;
    res.map = EquivariantMap(m, n, x);
    return true;
  };
  if (hint && accept(*hint)) {
    res.reason = "hint verified";
    return res;
  }
  if (std::string why = invariant_mismatch(m, n); !why.empty()) {
    res.status = SearchStatus::not_found;
    res.reason = why;
    return res;
  }
  if (m.rank() == 0) {
    accept(IntMatrix(0, 0));
    return res;
  }
  auto basis = equivariant_hom_basis(m, n);
  const std::size_t d = basis.size();
  std::size_t tried = 0;
  for (int bb = 1; bb <= bound; ++bb) {
    std::vector<int> c(d, -bb);
    for (;;) {
      bool edge = std::any_of(c.begin(), c.end(), [&](int v) { return v == bb || v == -bb; });
      if (edge) {
        if (++tried > kCandidateBudget) {
          res.reason = "search budget exhausted";
          return res;
        }
        IntMatrix x(n.rank(), m.rank());
        for (std::size_t i = 0; i < d; ++i)
          if (c[i]) x = x + basis[i].scaled(Integer(c[i]));
        if (accept(x)) {
          res.reason = "found by search";
          return res;
        }
      }
      std::size_t i = 0;
      while (i < d && c[i] == bb) c[i++] = -bb;
      if (i == d) break;
      ++c[i];
    }
  }
  res.reason = "no isomorphism with coefficients within the bound; invariants agree";
  return res;
}

}  // namespace weylcoh
