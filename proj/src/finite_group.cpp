#include "weylcoh/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "weylcoh/errors.hpp"
#include "weylcoh/linalg.hpp"

namespace weylcoh {

GroupElement::GroupElement(IntMatrix m) : matrix_(std::move(m)) {
  if (!matrix_.is_square()) throw InvalidInput("group element must be a square matrix");
  key_ = matrix_.key();
}

GroupPtr FiniteMatrixGroup::trivial(std::size_t dim) { return generate({IntMatrix::identity(dim)}); }

GroupPtr FiniteMatrixGroup::generate(const std::vector<IntMatrix>& generators, std::size_t cap) {
  if (generators.empty()) throw InvalidInput("generate_closure: at least one generator is required");
  const std::size_t dim = generators.front().rows();
  for (const auto& g : generators) {
    if (!g.is_square() || g.rows() != dim) throw InvalidInput("generators must be square of equal dimension");
    if (!is_unimodular(g)) throw InvalidInput("generator is not unimodular: " + g.to_string());
  }
  std::shared_ptr<FiniteMatrixGroup> grp(new FiniteMatrixGroup());
  grp->dim_ = dim;
  grp->generators_ = generators;
  const std::size_t ng = generators.size();

  std::vector<IntMatrix> found;
  std::unordered_map<std::string, std::size_t> index;
  std::vector<std::uint32_t> right, parent, parent_gen;
  found.push_back(IntMatrix::identity(dim));
  index.emplace(found.back().key(), 0);
  parent.push_back(0);
  parent_gen.push_back(0);
  for (std::size_t cur = 0; cur < found.size(); ++cur) {
    right.resize((cur + 1) * ng);
    for (std::size_t k = 0; k < ng; ++k) {
      IntMatrix p = found[cur] * generators[k];
      std::string key = p.key();
      auto it = index.find(key);
      std::size_t idx;
      if (it == index.end()) {
        if (found.size() >= cap)
          throw ResourceGuardError("group too large: closure exceeds " + std::to_string(cap) + " elements");
        idx = found.size();
        index.emplace(std::move(key), idx);
        found.push_back(std::move(p));
        parent.push_back(static_cast<std::uint32_t>(cur));
        parent_gen.push_back(static_cast<std::uint32_t>(k));
      } else {
        idx = it->second;
      }
      right[cur * ng + k] = static_cast<std::uint32_t>(idx);
    }
  }

  // reorder by canonical key
  const std::size_t n = found.size();
  std::vector<std::string> keys(n);
  for (auto& [k, i] : index) keys[i] = k;
  std::vector<std::size_t> by_key(n);
  std::iota(by_key.begin(), by_key.end(), 0);
  std::sort(by_key.begin(), by_key.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::vector<std::uint32_t> new_of(n);
  for (std::size_t i = 0; i < n; ++i) new_of[by_key[i]] = static_cast<std::uint32_t>(i);

  grp->elements_.reserve(n);
  grp->right_gen_.resize(n * ng);
  grp->parent_.resize(n);
  grp->parent_gen_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t old = by_key[i];
    grp->elements_.emplace_back(std::move(found[old]));
    grp->index_.emplace(keys[old], i);
    for (std::size_t k = 0; k < ng; ++k) grp->right_gen_[i * ng + k] = new_of[right[old * ng + k]];
    grp->parent_[i] = new_of[parent[old]];
    grp->parent_gen_[i] = parent_gen[old];
  }
  grp->bfs_order_.resize(n);
  for (std::size_t old = 0; old < n; ++old) grp->bfs_order_[old] = new_of[old];
  grp->identity_ = new_of[0];
  for (const auto& g : generators) grp->generator_indices_.push_back(*grp->index_of(g));
  return grp;
}

std::optional<std::size_t> FiniteMatrixGroup::index_of(const IntMatrix& m) const {
  if (!m.is_square() || m.rows() != dim_) return std::nullopt;
  return index_of_key(m.key());
}

std::optional<std::size_t> FiniteMatrixGroup::index_of_key(const std::string& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::uint32_t> FiniteMatrixGroup::word(std::size_t i) const {
  std::vector<std::uint32_t> w;
  while (i != identity_) {
    w.push_back(parent_gen_[i]);
    i = parent_[i];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

const std::vector<std::uint32_t>& FiniteMatrixGroup::multiplication_table() const {
  std::call_once(table_once_, [this] {
    const std::size_t n = order();
    if (n > 20'000) throw ResourceGuardError("multiplication table too large for group of order " + std::to_string(n));
    const std::size_t ng = generators_.size();
    table_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      std::uint32_t* row = table_.data() + a * n;
      row[identity_] = static_cast<std::uint32_t>(a);
      // parents precede children in breadth-first order
      for (std::size_t t = 1; t < n; ++t) {
        std::size_t b = bfs_order_[t];
        row[b] = right_gen_[row[parent_[b]] * ng + parent_gen_[b]];
      }
    }
    inverse_.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (table_[a * n + b] == identity_) {
          inverse_[a] = static_cast<std::uint32_t>(b);
          break;
        }
  });
  return table_;
}

std::size_t FiniteMatrixGroup::multiply(std::size_t a, std::size_t b) const {
  if (!table_.empty()) return table_[a * order() + b];
  std::size_t r = a;
  for (std::uint32_t k : word(b)) r = times_generator(r, k);
  return r;
}

std::size_t FiniteMatrixGroup::inverse(std::size_t a) const {
  if (!inverse_.empty()) return inverse_[a];
  // a^{-1} = a^{m-1}
  std::size_t prev = identity_, cur = a;
  while (cur != identity_) {
    prev = cur;
    cur = multiply(cur, a);
  }
  return prev;
}

bool FiniteMatrixGroup::is_abelian() const {
  const auto& gi = generator_indices_;
  for (std::size_t x : gi)
    for (std::size_t y : gi)
      if (multiply(x, y) != multiply(y, x)) return false;
  return true;
}

// ---- subgroups --------------------------------------------------------------

Subgroup::Subgroup(GroupPtr parent, std::vector<std::size_t> elements, std::vector<std::size_t> generators)
    : parent_(std::move(parent)), elements_(std::move(elements)), generators_(std::move(generators)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

Subgroup Subgroup::whole(const GroupPtr& g) {
  std::vector<std::size_t> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(g, std::move(all), g->generator_indices());
}

Subgroup Subgroup::trivial(const GroupPtr& g) { return Subgroup(g, {g->identity_index()}, {}); }

Subgroup Subgroup::generated_by(const GroupPtr& g, const std::vector<std::size_t>& gens) {
  std::vector<char> seen(g->order(), 0);
  std::vector<std::size_t> elems{g->identity_index()};
  seen[g->identity_index()] = 1;
  for (std::size_t cur = 0; cur < elems.size(); ++cur)
    for (std::size_t s : gens) {
      std::size_t p = g->multiply(elems[cur], s);
      if (!seen[p]) {
        seen[p] = 1;
        elems.push_back(p);
      }
    }
  std::vector<std::size_t> minimal;
  for (std::size_t s : gens)
    if (s != g->identity_index() && std::find(minimal.begin(), minimal.end(), s) == minimal.end()) minimal.push_back(s);
  return Subgroup(g, std::move(elems), std::move(minimal));
}

bool Subgroup::contains(std::size_t parent_index) const {
  return std::binary_search(elements_.begin(), elements_.end(), parent_index);
}

bool Subgroup::is_closed() const {
  for (std::size_t a : elements_) {
    if (!contains(parent_->inverse(a))) return false;
    for (std::size_t b : elements_)
      if (!contains(parent_->multiply(a, b))) return false;
  }
  return contains(parent_->identity_index());
}

GroupPtr Subgroup::as_group() const {
  std::call_once(cache_->once, [this] {
    std::vector<IntMatrix> gens;
    for (std::size_t s : generators_) gens.push_back(parent_->matrix(s));
    if (gens.empty()) gens.push_back(IntMatrix::identity(parent_->dimension()));
    cache_->group = FiniteMatrixGroup::generate(gens);
    if (cache_->group->order() != elements_.size())
      throw InvalidInput("subgroup generators do not generate the recorded element set");
  });
  return cache_->group;
}

std::size_t element_order(const IntMatrix& g, std::size_t bound) {
  if (!g.is_square()) throw InvalidInput("element_order: matrix not square");
  IntMatrix p = g;
  for (std::size_t m = 1; m <= bound; ++m) {
    if (p.is_identity()) return m;
    p = p * g;
  }
  throw InvalidInput("element of infinite order (no power up to " + std::to_string(bound) + " is the identity)");
}

std::size_t element_order(const FiniteMatrixGroup& g, std::size_t i) {
  std::size_t m = 1, cur = i;
  while (cur != g.identity_index()) {
    cur = g.multiply(cur, i);
    ++m;
    if (m > g.order()) throw InvalidInput("element of infinite order");
  }
  return m;
}

namespace {

void sort_subgroups(std::vector<Subgroup>& v) {
  std::sort(v.begin(), v.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
}

}  // namespace

std::vector<Subgroup> cyclic_subgroups(const GroupPtr& g) {
  std::set<std::vector<std::size_t>> seen;
  std::vector<Subgroup> out;
  for (std::size_t i = 0; i < g->order(); ++i) {
    Subgroup c = Subgroup::generated_by(g, {i});
    if (seen.insert(c.elements()).second) out.push_back(std::move(c));
  }
  sort_subgroups(out);
  return out;
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g, std::size_t cap) {
  g->multiplication_table();
  std::vector<Subgroup> cyclic = cyclic_subgroups(g);
  std::set<std::vector<std::size_t>> seen;
  std::vector<Subgroup> out;
  std::vector<std::size_t> frontier;
  for (auto& c : cyclic) {
    seen.insert(c.elements());
    out.push_back(c);
    frontier.push_back(out.size() - 1);
  }
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t fi : frontier) {
      for (const auto& c : cyclic) {
        if (c.generators().empty()) continue;
        std::size_t gen = c.generators().front();
        if (out[fi].contains(gen)) continue;
        std::vector<std::size_t> gens = out[fi].generators();
        gens.push_back(gen);
        Subgroup j = Subgroup::generated_by(g, gens);
        if (seen.insert(j.elements()).second) {
          if (out.size() >= cap) throw ResourceGuardError("subgroup enumeration exceeds cap " + std::to_string(cap));
          out.push_back(std::move(j));
          next.push_back(out.size() - 1);
        }
      }
    }
    frontier = std::move(next);
  }
  sort_subgroups(out);
  return out;
}

Subgroup conjugate(const Subgroup& h, std::size_t by) {
  const auto& g = h.parent();
  std::size_t inv = g->inverse(by);
  auto conj = [&](std::size_t x) { return g->multiply(g->multiply(by, x), inv); };
  std::vector<std::size_t> elems, gens;
  for (std::size_t x : h.elements()) elems.push_back(conj(x));
  for (std::size_t x : h.generators()) gens.push_back(conj(x));
  return Subgroup(g, std::move(elems), std::move(gens));
}

std::vector<std::vector<std::size_t>> conjugacy_classes(const std::vector<Subgroup>& subgroups) {
  std::map<std::vector<std::size_t>, std::size_t> position;
  for (std::size_t i = 0; i < subgroups.size(); ++i) position.emplace(subgroups[i].elements(), i);
  std::vector<int> cls(subgroups.size(), -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    if (cls[i] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    const auto& g = subgroups[i].parent();
    std::set<std::vector<std::size_t>> orbit;
    for (std::size_t w = 0; w < g->order(); ++w) orbit.insert(conjugate(subgroups[i], w).elements());
    for (const auto& e : orbit) {
      auto it = position.find(e);
      if (it != position.end()) cls[it->second] = id;
    }
    cls[i] = id;
  }
  for (std::size_t i = 0; i < subgroups.size(); ++i) out[static_cast<std::size_t>(cls[i])].push_back(i);
  return out;
}

SubgroupCheck is_subgroup_of(const FiniteMatrixGroup& h, const FiniteMatrixGroup& g) {
  SubgroupCheck r;
  if (h.dimension() != g.dimension()) {
    r.comparable = false;
    return r;
  }
  r.contained = std::all_of(h.elements().begin(), h.elements().end(),
                            [&](const GroupElement& e) { return g.index_of_key(e.key()).has_value(); });
  return r;
}

}  // namespace weylcoh
