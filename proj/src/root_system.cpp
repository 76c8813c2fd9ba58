#include "weylcoh/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <unordered_map>

#include "weylcoh/errors.hpp"
#include "weylcoh/linalg.hpp"

namespace weylcoh {

DynkinType DynkinType::make(char family, std::size_t rank) {
  family = static_cast<char>(std::toupper(static_cast<unsigned char>(family)));
  auto bad = [&] {
    return InvalidInput("invalid Dynkin type " + std::string(1, family) + std::to_string(rank));
  };
  switch (family) {
    case 'A':
      if (rank < 1) throw bad();
      break;
    case 'B':
    case 'C':
      if (rank < 2) throw bad();
      break;
    case 'D':
      if (rank < 3) throw bad();
      if (rank == 3) return {'A', 3};
      break;
    case 'E':
      if (rank < 6 || rank > 8) throw bad();
      break;
    case 'F':
      if (rank != 4) throw bad();
      break;
    case 'G':
      if (rank != 2) throw bad();
      break;
    default:
      throw bad();
  }
  return {family, rank};
}

DynkinType DynkinType::parse(const std::string& s) {
  if (s.size() < 2) throw InvalidInput("invalid Dynkin type '" + s + "'");
  std::size_t rank = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw InvalidInput("invalid Dynkin type '" + s + "'");
    rank = rank * 10 + static_cast<std::size_t>(s[i] - '0');
  }
  return make(s[0], rank);
}

DynkinType dual_type(const DynkinType& t) {
  if (t.family == 'B') return DynkinType::make('C', t.rank);
  if (t.family == 'C') return DynkinType::make('B', t.rank);
  return t;
}

std::size_t root_count(const DynkinType& t) {
  const std::size_t n = t.rank;
  switch (t.family) {
    case 'A':
      return n * n + n;
    case 'B':
    case 'C':
      return 2 * n * n;
    case 'D':
      return 2 * n * n - 2 * n;
    case 'E':
      return n == 6 ? 72 : n == 7 ? 126 : 240;
    case 'F':
      return 48;
    case 'G':
      return 12;
  }
  throw InvalidInput("unknown family");
}

namespace {

RatVector unit(std::size_t dim, std::size_t i, const Rational& c = 1) {
  RatVector v(dim, Rational(0));
  v[i] = c;
  return v;
}

RatVector reflect(const RatVector& x, const RatVector& a) {
  Rational c = 2 * dot(x, a) / dot(a, a);
  return x - c * a;
}

}  // namespace

RatMatrix bourbaki_simple_roots(const DynkinType& t) {
  const std::size_t n = t.rank;
  std::vector<RatVector> cols;
  auto e = [](std::size_t dim, std::size_t i) { return unit(dim, i); };
  switch (t.family) {
    case 'A':
      for (std::size_t i = 0; i < n; ++i) cols.push_back(e(n + 1, i) - e(n + 1, i + 1));
      break;
    case 'B':
    case 'C':
    case 'D':
      for (std::size_t i = 0; i + 1 < n; ++i) cols.push_back(e(n, i) - e(n, i + 1));
      if (t.family == 'B') cols.push_back(e(n, n - 1));
      if (t.family == 'C') cols.push_back(unit(n, n - 1, 2));
      if (t.family == 'D') cols.push_back(e(n, n - 2) + e(n, n - 1));
      break;
    case 'E': {
      RatVector a1(8, Rational(-1, 2));
      a1[0] = Rational(1, 2);
      a1[7] = Rational(1, 2);
      cols.push_back(a1);
      cols.push_back(e(8, 0) + e(8, 1));
      for (std::size_t i = 2; i < n; ++i) cols.push_back(e(8, i - 1) - e(8, i - 2));
      break;
    }
    case 'F': {
      cols.push_back(e(4, 1) - e(4, 2));
      cols.push_back(e(4, 2) - e(4, 3));
      cols.push_back(e(4, 3));
      RatVector a4(4, Rational(-1, 2));
      a4[0] = Rational(1, 2);
      cols.push_back(a4);
      break;
    }
    case 'G': {
      cols.push_back(e(3, 0) - e(3, 1));
      RatVector a2{Rational(-2), Rational(1), Rational(1)};
      cols.push_back(a2);
      break;
    }
    default:
      throw InvalidInput("unknown family");
  }
  return RatMatrix::from_columns(cols);
}

IntMatrix cartan_from_simple_roots(const RatMatrix& simple) {
  const std::size_t l = simple.cols();
  IntMatrix c(l, l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) {
      Rational v = 2 * dot(simple.column(i), simple.column(j)) / dot(simple.column(j), simple.column(j));
      if (v.get_den() != 1) throw InvalidInput("simple roots do not give an integral Cartan matrix");
      c(i, j) = Integer(mpz_class(v.get_num()));
    }
  return c;
}

IntMatrix cartan_matrix(const DynkinType& t) { return cartan_from_simple_roots(bourbaki_simple_roots(t)); }

Integer RootSystemData::connection_index() const { return abs(determinant(cartan)); }

RootSystemData root_system_from_simple_roots(const DynkinType& t, const RatMatrix& simple) {
  RootSystemData rs;
  rs.type = t;
  rs.ambient_dim = simple.rows();
  rs.simple_roots = simple;
  const std::size_t l = simple.cols(), dim = simple.rows();
  if (l != t.rank) throw InvalidInput("number of simple roots does not match the rank");
  rs.cartan = cartan_from_simple_roots(simple);
  for (std::size_t i = 0; i < l; ++i) {
    if (!rs.cartan(i, i).is_zero() && rs.cartan(i, i) != Integer(2)) throw InvalidInput("bad Cartan diagonal");
    for (std::size_t j = 0; j < l; ++j)
      if (i != j && rs.cartan(i, j).sign() > 0) throw InvalidInput("simple roots are not a base (positive Cartan entry)");
  }

  // closure of the simple roots under the simple reflections
  std::vector<RatVector> all;
  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t j = 0; j < l; ++j)
    if (seen.emplace(rat_vector_key(simple.column(j)), all.size()).second) all.push_back(simple.column(j));
  for (std::size_t cur = 0; cur < all.size(); ++cur)
    for (std::size_t j = 0; j < l; ++j) {
      RatVector y = reflect(all[cur], simple.column(j));
      if (seen.emplace(rat_vector_key(y), all.size()).second) all.push_back(std::move(y));
      if (all.size() > 100000) throw InvalidInput("root closure does not terminate");
    }
  if (all.size() != root_count(t))
    throw InvalidInput("root closure has " + std::to_string(all.size()) + " roots, expected " +
                       std::to_string(root_count(t)) + " for " + t.to_string());

  auto coords = simple.solve(RatMatrix::from_columns(all, dim));
  if (!coords) throw InvalidInput("roots are not in the span of the simple roots");
  std::vector<std::pair<IntVector, RatVector>> pos;
  for (std::size_t k = 0; k < all.size(); ++k) {
    IntVector c(l);
    int sgn_min = 1, sgn_max = -1;
    for (std::size_t i = 0; i < l; ++i) {
      const Rational& q = (*coords)(i, k);
      if (q.get_den() != 1) throw InvalidInput("root with non-integral simple-root coordinates");
      c[i] = Integer(mpz_class(q.get_num()));
      sgn_min = std::min(sgn_min, c[i].sign());
      sgn_max = std::max(sgn_max, c[i].sign());
    }
    if (sgn_min < 0 && sgn_max > 0) throw InvalidInput("root with mixed-sign coordinates; not a base");
    if (sgn_max > 0) pos.emplace_back(std::move(c), all[k]);
  }
  std::sort(pos.begin(), pos.end(), [](const auto& a, const auto& b) {
    Integer ha(0), hb(0);
    for (const auto& x : a.first) ha += x;
    for (const auto& x : b.first) hb += x;
    if (ha != hb) return ha < hb;
    return a.first < b.first;
  });
  rs.positive_count = pos.size();
  for (const auto& [c, v] : pos) {
    rs.root_coordinates.push_back(c);
    rs.roots.push_back(v);
  }
  for (const auto& [c, v] : pos) {
    rs.root_coordinates.push_back(scaled(c, Integer(-1)));
    rs.roots.push_back(Rational(-1) * v);
  }

  RatMatrix ct(rs.cartan.transpose());
  rs.fundamental_weights = simple * ct.inverse();
  for (std::size_t j = 0; j < l; ++j) {
    RatVector a = simple.column(j);
    RatMatrix s = RatMatrix::identity(dim);
    Rational nn = dot(a, a);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) s(r, c) -= 2 * a[r] * a[c] / nn;
    rs.reflections_ambient.push_back(s);

    IntMatrix w = IntMatrix::identity(l);
    for (std::size_t k = 0; k < l; ++k) w(k, j) -= rs.cartan(j, k);
    IntMatrix q = IntMatrix::identity(l);
    for (std::size_t i = 0; i < l; ++i) q(j, i) -= rs.cartan(i, j);
    if (!(RatMatrix(w) == *rs.fundamental_weights.solve(s * rs.fundamental_weights)))
      throw Error("weight-basis reflection does not match the ambient reflection");
    if (!(s * simple == simple * RatMatrix(q))) throw Error("root-basis reflection does not match the ambient reflection");
    rs.reflections_weight.push_back(std::move(w));
    rs.reflections_root.push_back(std::move(q));
  }
  return rs;
}

RootSystemData build_root_system(const DynkinType& t) { return root_system_from_simple_roots(t, bourbaki_simple_roots(t)); }

RootSystemData dual_data(const RootSystemData& rs) {
  std::vector<RatVector> co;
  for (std::size_t j = 0; j < rs.rank(); ++j) {
    RatVector a = rs.simple_roots.column(j);
    co.push_back(Rational(2) / dot(a, a) * a);
  }
  return root_system_from_simple_roots(dual_type(rs.type), RatMatrix::from_columns(co));
}

GroupPtr weyl_group(const RootSystemData& rs, std::size_t cap) {
  return FiniteMatrixGroup::generate(rs.reflections_weight, cap);
}

GroupPtr weyl_group_root_basis(const RootSystemData& rs, std::size_t cap) {
  return FiniteMatrixGroup::generate(rs.reflections_root, cap);
}

GroupPtr weyl_group_ambient(const RootSystemData& rs, std::size_t cap) {
  std::vector<IntMatrix> gens;
  for (const auto& s : rs.reflections_ambient) {
    if (!s.is_integral()) throw InvalidInput("ambient reflections of " + rs.type.to_string() + " are not integral");
    gens.push_back(s.to_int());
  }
  return FiniteMatrixGroup::generate(gens, cap);
}

IntMatrix ambient_to_weight_basis(const RootSystemData& rs, const RatMatrix& ambient) {
  auto x = rs.fundamental_weights.solve(ambient * rs.fundamental_weights);
  if (!x) throw InvalidInput("linear map does not preserve the span of the roots");
  if (!x->is_integral()) throw InvalidInput("linear map does not preserve the weight lattice");
  return x->to_int();
}

WeylLatticePair lattice_pair(const RootSystemData& rs, GroupPtr w) {
  if (!w) w = weyl_group(rs);
  WeylLatticePair p;
  p.P = GLattice::tautological(w);
  IntMatrix incl = rs.cartan.transpose();
  RatMatrix incl_q(incl), incl_inv = incl_q.inverse();
  std::vector<IntMatrix> qgens;
  for (const auto& g : w->generators()) {
    RatMatrix q = incl_inv * RatMatrix(g) * incl_q;
    if (!q.is_integral()) throw InvalidInput("group element does not preserve the root lattice");
    qgens.push_back(q.to_int());
  }
  p.Q = GLattice::from_generators(w, qgens);
  p.inclusion = EquivariantMap(p.Q, p.P, incl);
  p.connection_index = rs.connection_index();
  return p;
}

std::optional<std::vector<std::size_t>> find_cartan_embedding(const IntMatrix& big, const IntMatrix& small) {
  const std::size_t n = big.rows(), k = small.rows();
  if (k > n) return std::nullopt;
  std::vector<std::size_t> f;
  std::vector<char> used(n, 0);
  std::function<bool()> dfs = [&]() -> bool {
    std::size_t i = f.size();
    if (i == k) return true;
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = big(c, f[j]) == small(i, j) && big(f[j], c) == small(j, i);
      if (!ok) continue;
      used[c] = 1;
      f.push_back(c);
      if (dfs()) return true;
      f.pop_back();
      used[c] = 0;
    }
    return false;
  };
  if (dfs()) return f;
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> find_subdiagram(const DynkinType& t, const DynkinType& target) {
  return find_cartan_embedding(cartan_matrix(t), cartan_matrix(target));
}

namespace {

bool connected(const IntMatrix& c) {
  const std::size_t n = c.rows();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n; ++j)
      if (!seen[j] && !c(i, j).is_zero()) {
        seen[j] = 1;
        stack.push_back(j);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](char s) { return s; });
}

}  // namespace

std::optional<TypeIdentification> identify_type(const IntMatrix& cartan) {
  const std::size_t n = cartan.rows();
  if (n == 0 || !cartan.is_square() || !connected(cartan)) return std::nullopt;
  for (char f : std::string("ABCDEFG")) {
    DynkinType t;
    try {
      t = DynkinType::make(f, n);
    } catch (const InvalidInput&) {
      continue;
    }
    if (t.family != f) continue;
    if (auto perm = find_cartan_embedding(cartan, cartan_matrix(t))) return TypeIdentification{t, *perm};
  }
  return std::nullopt;
}

SubRootSystem sub_root_system(const RootSystemData& rs, const std::vector<std::size_t>& nodes) {
  const std::size_t l = rs.rank();
  if (nodes.empty()) throw InvalidInput("sub_root_system: empty subset");
  std::vector<char> in(l, 0);
  for (std::size_t i : nodes) {
    if (i >= l) throw InvalidInput("sub_root_system: node index " + std::to_string(i) + " out of range");
    if (in[i]) throw InvalidInput("sub_root_system: repeated node index " + std::to_string(i));
    in[i] = 1;
  }
  SubRootSystem sub;
  sub.nodes = nodes;
  for (std::size_t i = 0; i < l; ++i)
    if (!in[i]) sub.complement.push_back(i);
  IntMatrix c = rs.cartan.select_rows(nodes).select_columns(nodes);
  auto id = identify_type(c);
  if (!id) throw InvalidInput("sub_root_system: induced diagram is not connected");
  std::vector<RatVector> cols;
  for (std::size_t i : nodes) cols.push_back(rs.simple_roots.column(i));
  sub.data = root_system_from_simple_roots(id->type, RatMatrix::from_columns(cols));

  // R' = R meet V': roots of R supported on the chosen nodes
  std::size_t supported = 0;
  for (const auto& rc : rs.root_coordinates) {
    bool ok = true;
    for (std::size_t i : sub.complement) ok = ok && rc[i].is_zero();
    supported += ok;
  }
  if (supported != sub.data.roots.size()) throw Error("sub_root_system: R meet V' differs from the generated system");

  sub.inclusion = IntMatrix(l, nodes.size());
  for (std::size_t j = 0; j < nodes.size(); ++j) sub.inclusion(nodes[j], j) = 1;
  sub.projection = IntMatrix(sub.complement.size(), l);
  for (std::size_t i = 0; i < sub.complement.size(); ++i) sub.projection(i, sub.complement[i]) = 1;
  return sub;
}

LatticeExactSequence root_subsystem_sequence(const RootSystemData& rs, const SubRootSystem& sub, GroupPtr h) {
  if (!h) {
    std::vector<IntMatrix> gens;
    for (std::size_t i : sub.nodes) gens.push_back(rs.reflections_root[i]);
    h = FiniteMatrixGroup::generate(gens);
  }
  if (h->dimension() != rs.rank()) throw InvalidInput("root_subsystem_sequence: group has the wrong dimension");
  GLattice q = GLattice::tautological(h);
  std::vector<IntMatrix> qsub, quot;
  for (const auto& e : h->elements()) {
    const IntMatrix& g = e.matrix();
    if (!g.select_rows(sub.complement).select_columns(sub.nodes).is_zero())
      throw InvalidInput("root_subsystem_sequence: group does not preserve the span of the chosen simple roots");
    qsub.push_back(g.select_rows(sub.nodes).select_columns(sub.nodes));
    quot.push_back(g.select_rows(sub.complement).select_columns(sub.complement));
  }
  GLattice left(h, std::move(qsub)), right(h, std::move(quot));
  return make_sequence(EquivariantMap(left, q, sub.inclusion), EquivariantMap(q, right, sub.projection));
}

}  // namespace weylcoh
