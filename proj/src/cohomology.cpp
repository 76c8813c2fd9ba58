#include "weylcoh/cohomology.hpp"

#include <map>
#include <random>

#include "weylcoh/errors.hpp"

namespace weylcoh {

namespace {

constexpr std::uint64_t kPrimes[] = {2305843009213693951ULL, 4611686018427387847ULL, 1000000007ULL};

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

void guard(std::size_t rows, std::size_t cols, std::size_t max_entries, const std::string& what) {
  long double entries = static_cast<long double>(rows) * static_cast<long double>(cols);
  if (entries > static_cast<long double>(max_entries))
    throw ResourceGuardError(what + " would be " + std::to_string(rows) + " x " + std::to_string(cols) + " (" +
                             std::to_string(static_cast<unsigned long long>(entries)) +
                             " entries), exceeding the memory guard of " + std::to_string(max_entries));
}

IntVector random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-5, 5);
  IntVector v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

// H^k for k >= 1 as sat(im d^(k-1)) / im d^(k-1): H^k is finite, so the
// cocycles are exactly the saturation of the coboundaries.
CohomologyGroup bar_cohomology(const GLattice& m, std::size_t k, const CohomologyOptions& opts) {
  BarComplex bar(m);
  const std::size_t dim = bar.cochain_dim(k);
  IntMatrix prev = bar.differential(k - 1, opts.max_entries);
  guard(dim, dim, opts.max_entries, "transform for C^" + std::to_string(k));
  auto snf = smith_normal_form(prev, {true, false});
  if (opts.certify && dim > 0) {
    IntMatrix next = bar.differential(k, opts.max_entries);
    const std::size_t expected = dim - snf.rank;
    bool ok = false;
    for (std::uint64_t p : kPrimes)
      if (rank_mod_p(next, p) == expected) {
        ok = true;
        break;
      }
    if (!ok) throw Error("cohomology certification failed: rank of d^" + std::to_string(k) + " mismatch");
    std::mt19937_64 rng(0x5eed + k);
    for (int t = 0; t < 3; ++t)
      if (!is_zero_vector(next * (prev * random_vector(rng, prev.cols()))))
        throw Error("cohomology certification failed: d o d != 0");
  }
  CohomologyGroup h;
  h.degree = k;
  h.quotient = QuotientGroup::saturation_quotient(snf, dim);
  h.coboundaries = std::move(prev);
  return h;
}

}  // namespace

BarComplex::BarComplex(const GLattice& m) : m_(m) {
  const auto& g = m_.group();
  g->multiplication_table();
  pos_.assign(g->order(), SIZE_MAX);
  for (std::size_t e = 0; e < g->order(); ++e)
    if (e != g->identity_index()) {
      pos_[e] = others_.size();
      others_.push_back(e);
    }
}

std::size_t BarComplex::cochain_dim(std::size_t k) const { return ipow(others_.size(), k) * m_.rank(); }

IntMatrix BarComplex::differential(std::size_t k, std::size_t max_entries) const {
  const std::size_t n = others_.size(), r = m_.rank();
  const std::size_t rows = cochain_dim(k + 1), cols = cochain_dim(k);
  guard(rows, cols, max_entries, "cochain differential d^" + std::to_string(k));
  IntMatrix d(rows, cols);
  const auto& g = *m_.group();
  auto add_block = [&](std::size_t rt, std::size_t ct, const IntMatrix* a, int sign) {
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        Integer v = a ? (*a)(i, j) : Integer(i == j ? 1 : 0);
        if (v.is_zero()) continue;
        if (sign > 0) d(rt * r + i, ct * r + j) += v;
        else d(rt * r + i, ct * r + j) -= v;
      }
  };
  if (k == 0) {
    for (std::size_t p = 0; p < n; ++p) {
      add_block(p, 0, &m_.action(others_[p]), 1);
      add_block(p, 0, nullptr, -1);
    }
    return d;
  }
  const std::size_t tuples = ipow(n, k + 1);
  std::vector<std::size_t> digit(k + 1);
  for (std::size_t t = 0; t < tuples; ++t) {
    std::size_t x = t;
    for (std::size_t i = k + 1; i-- > 0;) {
      digit[i] = x % n;
      x /= n;
    }
    // g_1 . f(g_2, ..., g_{k+1})
    std::size_t tail = 0;
    for (std::size_t i = 1; i <= k; ++i) tail = tail * n + digit[i];
    add_block(t, tail, &m_.action(others_[digit[0]]), 1);
    // (-1)^i f(..., g_i g_{i+1}, ...)
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t prod = g.multiply(others_[digit[i]], others_[digit[i + 1]]);
      if (prod == g.identity_index()) continue;
      std::size_t c = 0;
      for (std::size_t j = 0; j <= k; ++j) {
        if (j == i + 1) continue;
        c = c * n + (j == i ? pos_[prod] : digit[j]);
      }
      add_block(t, c, nullptr, (i + 1) % 2 ? -1 : 1);
    }
    // (-1)^(k+1) f(g_1, ..., g_k)
    std::size_t head = 0;
    for (std::size_t i = 0; i < k; ++i) head = head * n + digit[i];
    add_block(t, head, nullptr, (k + 1) % 2 ? -1 : 1);
  }
  return d;
}

CohomologyGroup h0(const GLattice& m) {
  CohomologyGroup h;
  h.coboundaries = IntMatrix(m.rank(), 0);
  h.quotient = QuotientGroup::of(fixed_sublattice(m), h.coboundaries);
  return h;
}

CohomologyGroup tate_h0(const GLattice& m) {
  CohomologyGroup h;
  h.tate = true;
  h.coboundaries = m.norm_operator();
  h.quotient = QuotientGroup::of(fixed_sublattice(m), h.coboundaries);
  return h;
}

CohomologyGroup h1(const GLattice& m, const CohomologyOptions& opts) { return bar_cohomology(m, 1, opts); }
CohomologyGroup h2(const GLattice& m, const CohomologyOptions& opts) { return bar_cohomology(m, 2, opts); }

CohomologyGroup cohomology(const GLattice& m, std::size_t degree, bool tate, const CohomologyOptions& opts) {
  switch (degree) {
    case 0:
      return tate ? tate_h0(m) : h0(m);
    case 1:
      return h1(m, opts);
    case 2:
      return h2(m, opts);
    default:
      throw InvalidInput("cohomology: degree must be 0, 1 or 2");
  }
}

AbelianGroupInvariants cohomology_invariants(const GLattice& m, std::size_t degree, std::size_t max_entries) {
  if (degree != 1 && degree != 2) throw InvalidInput("cohomology_invariants: degree must be 1 or 2");
  BarComplex bar(m);
  IntVector torsion;
  for (const auto& d : smith_invariant_factors(bar.differential(degree - 1, max_entries)))
    if (!d.is_one()) torsion.push_back(d);
  return AbelianGroupInvariants::from_cyclic_orders(torsion);
}

IntMatrix restriction_matrix(const GLattice& m, const CohomologyGroup& source, const Subgroup& h,
                             const CohomologyGroup& target) {
  const std::size_t r = m.rank(), k = source.degree;
  if (target.degree != k || target.tate != source.tate) throw InvalidInput("restriction: degree mismatch");
  const auto& lifts = source.quotient.lifts();
  const std::size_t ngen = lifts.cols();
  std::vector<std::size_t> sel;  // target tuple -> source tuple
  if (k > 0) {
    BarComplex gbar(m);
    const std::size_t ng = gbar.nontrivial();
    const auto& g = *m.group();
    std::vector<std::size_t> kothers;
    for (std::size_t e : h.elements())
      if (e != g.identity_index()) kothers.push_back(gbar.position(e));
    const std::size_t nk = kothers.size();
    const std::size_t tuples = ipow(nk, k);
    sel.resize(tuples);
    for (std::size_t t = 0; t < tuples; ++t) {
      std::size_t x = t, gi = 0, scale = 1;
      for (std::size_t i = 0; i < k; ++i) {
        gi += kothers[x % nk] * scale;
        x /= nk;
        scale *= ng;
      }
      sel[t] = gi;
    }
  }
  auto apply = [&](const IntVector& x) -> IntVector {
    if (k == 0) return x;
    IntVector y(sel.size() * r);
    for (std::size_t t = 0; t < sel.size(); ++t)
      for (std::size_t c = 0; c < r; ++c) y[t * r + c] = x[sel[t] * r + c];
    return y;
  };
  if (target.cochain_dim() != (k == 0 ? r : sel.size() * r)) throw InvalidInput("restriction: target has wrong shape");

  for (std::size_t j = 0; j < source.coboundaries.cols(); ++j)
    if (!target.quotient.is_zero_class(apply(source.coboundaries.column(j))))
      throw Error("restriction is not well defined: a coboundary restricts to a nonzero class");

  IntMatrix out(target.quotient.num_generators(), ngen);
  for (std::size_t j = 0; j < ngen; ++j) out.set_column(j, target.quotient.project(apply(lifts.column(j))));
  return out;
}

CohomologyMap restriction(const GLattice& m, const Subgroup& h, std::size_t degree, bool tate,
                          const CohomologyOptions& opts) {
  CohomologyMap map;
  map.source = cohomology(m, degree, tate, opts);
  map.target = cohomology(restrict(m, h), degree, tate, opts);
  map.matrix = restriction_matrix(m, map.source, h, map.target);
  return map;
}

ShaResult sha_omega(const GLattice& m, std::size_t degree, bool tate, const CohomologyOptions& opts) {
  if (degree == 0 && !tate) throw InvalidInput("sha_omega: degree 0 requires the Tate group");
  if (degree > 2) throw InvalidInput("sha_omega: degree must be 0 (Tate), 1 or 2");
  ShaResult res;
  res.ambient = cohomology(m, degree, tate, opts);
  const IntVector& src_mod = res.ambient.quotient.moduli();
  const std::size_t ngen = src_mod.size();

  IntMatrix stacked(0, ngen);
  IntVector dst_mod;
  for (const auto& c : cyclic_subgroups(m.group())) {
    if (c.order() == 1) continue;
    ++res.cyclic_subgroups;
    if (ngen == 0) continue;
    CohomologyGroup tgt = cohomology(restrict(m, c), degree, tate, opts);
    if (tgt.quotient.num_generators() == 0) continue;
    stacked = IntMatrix::vstack(stacked, restriction_matrix(m, res.ambient, c, tgt));
    dst_mod.insert(dst_mod.end(), tgt.quotient.moduli().begin(), tgt.quotient.moduli().end());
  }
  if (stacked.rows() == 0) {
    stacked = IntMatrix(1, ngen);
    dst_mod = {Integer(1)};
  }
  res.kernel = kernel_of_abelian_map(stacked, src_mod, dst_mod);

  const auto& inv = res.kernel.invariants();
  if (!inv.torsion.empty()) {
    std::size_t i = inv.torsion.size() - 1;
    IntVector coeffs = res.kernel.lift(i);
    res.witness_class = res.ambient.quotient.reduce(coeffs);
    res.witness_cocycle = res.ambient.quotient.lifts() * coeffs;
    res.witness_order = inv.torsion.back();
  }
  return res;
}

AbelianGroupInvariants cyclic_h1(const GLattice& m, std::size_t generator) {
  const auto& g = *m.group();
  if (element_order(g, generator) != g.order()) throw InvalidInput("cyclic_h1: element does not generate the group");
  IntMatrix ker = kernel_basis(m.norm_operator());
  IntMatrix img = m.action(generator) - IntMatrix::identity(m.rank());
  return quotient_group(ker, img).invariants();
}

AbelianGroupInvariants cyclic_h2(const GLattice& m, std::size_t generator) {
  const auto& g = *m.group();
  if (element_order(g, generator) != g.order()) throw InvalidInput("cyclic_h2: element does not generate the group");
  return tate_h0(m).invariants();
}

AbelianGroupInvariants tate_kernel_formula(const FiniteMatrixGroup& g) {
  IntVector dst;
  for (std::size_t e = 0; e < g.order(); ++e)
    if (e != g.identity_index()) dst.emplace_back(static_cast<long long>(element_order(g, e)));
  if (dst.empty()) dst.emplace_back(1);
  IntMatrix map(dst.size(), 1);
  for (std::size_t i = 0; i < dst.size(); ++i) map(i, 0) = 1;
  return kernel_of_abelian_map(map, {Integer(static_cast<long long>(g.order()))}, dst).invariants();
}

bool check_dd_zero(const GLattice& m, std::size_t k, int trials, std::size_t max_entries) {
  if (k == 0) return true;
  BarComplex bar(m);
  IntMatrix a = bar.differential(k - 1, max_entries), b = bar.differential(k, max_entries);
  std::mt19937_64 rng(0xdd + k);
  for (int t = 0; t < trials; ++t)
    if (!is_zero_vector(b * (a * random_vector(rng, a.cols())))) return false;
  return true;
}

}  // namespace weylcoh
