#include "weylcoh/scenarios.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

#include "weylcoh/cohomology.hpp"
#include "weylcoh/errors.hpp"
#include "weylcoh/linalg.hpp"
#include "scenario_util.hpp"

namespace weylcoh {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::inconclusive:
      return "inconclusive";
  }
  return "?";
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::literature:
      return "literature";
    case Provenance::derived:
      return "derived";
    case Provenance::trivial:
      return "trivial";
  }
  return "?";
}

void ScenarioReport::expect(std::string description, std::string expected, std::string computed, Provenance p) {
  bool ok = expected == computed;
  claims.push_back({std::move(description), std::move(expected), std::move(computed), p, ok ? Status::pass : Status::fail});
}

void ScenarioReport::check(std::string description, bool ok, std::string expected, std::string computed, Provenance p) {
  claims.push_back({std::move(description), std::move(expected), std::move(computed), p, ok ? Status::pass : Status::fail});
}

void ScenarioReport::search(std::string description, SearchStatus s, std::string computed, Provenance p) {
  Status st = s == SearchStatus::found ? Status::pass : s == SearchStatus::inconclusive ? Status::inconclusive : Status::fail;
  claims.push_back({std::move(description), "found", to_string(s) + (computed.empty() ? "" : ": " + computed), p, st});
}

void ScenarioReport::finish() {
  status = Status::pass;
  if (!error.empty()) {
    status = Status::fail;
    return;
  }
  for (const auto& c : claims) {
    if (c.status == Status::fail) {
      status = Status::fail;
      return;
    }
    if (c.status == Status::inconclusive) status = Status::inconclusive;
  }
}

namespace detail {

ScenarioReport timed(std::string name, const std::function<void(ScenarioReport&)>& body) {
  ScenarioReport r;
  r.name = std::move(name);
  auto t0 = std::chrono::steady_clock::now();
  body(r);
  r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  r.finish();
  return r;
}

ShaResult sha_robust(const GLattice& m, std::size_t degree) {
  try {
    return sha_omega(m, degree);
  } catch (const ResourceGuardError&) {
    CohomologyOptions o;
    o.certify = false;
    return sha_omega(m, degree, false, o);
  }
}

bool witness_is_valid(const GLattice& m, const ShaResult& s) {
  if (!s.witness_cocycle || !s.witness_class) return false;
  const auto& q = s.ambient.quotient;
  if (q.is_zero_class(*s.witness_cocycle)) return false;
  if (!q.is_zero_class(scaled(*s.witness_cocycle, s.witness_order))) return false;
  for (const auto& c : cyclic_subgroups(m.group())) {
    if (c.order() == 1) continue;
    auto tgt = cohomology(restrict(m, c), s.ambient.degree, s.ambient.tate);
    IntMatrix r = restriction_matrix(m, s.ambient, c, tgt);
    if (!is_zero_vector(tgt.quotient.reduce(r * *s.witness_class))) return false;
  }
  return true;
}

SweepResult sha1_sweep(const GLattice& m, const std::vector<Subgroup>& subs) {
  SweepResult res;
  for (const auto& h : subs) {
    ++res.count;
    auto inv = sha_robust(restrict(m, h), 1).invariants();
    if (!inv.is_trivial()) {
      ++res.nonzero;
      if (res.first_nonzero.empty())
        res.first_nonzero = "order " + std::to_string(h.order()) + ": " + inv.to_string();
    }
  }
  return res;
}

std::string flags_string(const ExactnessFlags& f) {
  return std::string("injective=") + (f.injective ? "yes" : "no") + " exact_at_middle=" +
         (f.exact_at_middle ? "yes" : "no") + " surjective=" + (f.surjective ? "yes" : "no");
}

bool is_klein(const FiniteMatrixGroup& g) {
  if (g.order() != 4 || !g.is_abelian()) return false;
  for (std::size_t e = 0; e < 4; ++e)
    if (g.multiply(e, e) != g.identity_index()) return false;
  return true;
}

IntMatrix permutation_matrix(const std::vector<std::size_t>& images) {
  IntMatrix p(images.size(), images.size());
  for (std::size_t i = 0; i < images.size(); ++i) p(images[i], i) = 1;
  return p;
}

IntMatrix conjugate_into(const RatMatrix& basis, const IntMatrix& ambient) {
  auto x = basis.solve(RatMatrix(ambient) * basis);
  if (!x || !x->is_integral()) throw Error("ambient element does not preserve the lattice");
  return x->to_int();
}

}  // namespace detail

using namespace detail;

// ---------------------------------------------------------------------------
// (A_n) and (C_n) permutation resolutions

LatticeExactSequence build_an_sequence(std::size_t n) {
  if (n < 1) throw InvalidInput("build_an_sequence: n must be at least 1");
  auto rs = build_root_system(DynkinType::make('A', n));
  auto w = weyl_group(rs);
  std::vector<IntMatrix> perms;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::size_t> img(n + 1);
    for (std::size_t i = 0; i <= n; ++i) img[i] = i;
    std::swap(img[j], img[j + 1]);
    perms.push_back(permutation_matrix(img));
  }
  GLattice mid = GLattice::from_generators(w, perms);
  GLattice p = GLattice::tautological(w);
  GLattice left = GLattice::trivial(w, 1);
  IntMatrix inner(n + 1, 1), outer(n, n + 1);
  for (std::size_t i = 0; i <= n; ++i) inner(i, 0) = 1;
  // e_i pairs with alpha_j = e_j - e_(j+1)
  for (std::size_t j = 0; j < n; ++j) {
    outer(j, j) = 1;
    outer(j, j + 1) = -1;
  }
  return make_sequence(EquivariantMap(left, mid, inner), EquivariantMap(mid, p, outer));
}

LatticeExactSequence build_cn_sequence(std::size_t n) {
  if (n < 2) throw InvalidInput("build_cn_sequence: n must be at least 2");
  auto rs = build_root_system(DynkinType::make('C', n));
  auto w = weyl_group(rs);
  std::vector<IntMatrix> mid_gens, left_gens;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::size_t> img(2 * n), limg(n);
    for (std::size_t i = 0; i < 2 * n; ++i) img[i] = i;
    for (std::size_t i = 0; i < n; ++i) limg[i] = i;
    if (j + 1 < n) {
      std::swap(img[j], img[j + 1]);
      std::swap(img[n + j], img[n + j + 1]);
      std::swap(limg[j], limg[j + 1]);
    } else {
      std::swap(img[j], img[n + j]);
    }
    mid_gens.push_back(permutation_matrix(img));
    left_gens.push_back(permutation_matrix(limg));
  }
  GLattice mid = GLattice::from_generators(w, mid_gens);
  GLattice left = GLattice::from_generators(w, left_gens);
  GLattice p = GLattice::tautological(w);
  IntMatrix inner(2 * n, n), outer(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    inner(i, i) = 1;
    inner(n + i, i) = 1;
    // h_i = omega_i - omega_(i-1)
    outer(i, i) = 1;
    outer(i, n + i) = -1;
    if (i > 0) {
      outer(i - 1, i) = -1;
      outer(i - 1, n + i) = 1;
    }
  }
  return make_sequence(EquivariantMap(left, mid, inner), EquivariantMap(mid, p, outer));
}

namespace {

void resolution_claims(ScenarioReport& r, const LatticeExactSequence& seq, const GLattice& target_ref,
                       Provenance exact_prov) {
  r.expect("exactness flags", flags_string({true, true, true}), flags_string(seq.flags), exact_prov);
  bool perm = true;
  for (const auto& g : seq.middle().actions()) perm = perm && g.is_permutation();
  for (const auto& g : seq.left().actions()) perm = perm && g.is_permutation();
  r.check("left and middle lattices act by permutation matrices", perm, "yes", perm ? "yes" : "no",
          Provenance::trivial);
  auto kp = find_permutation_basis_in(seq.middle(), seq.inner.matrix(), 1);
  r.search("kernel of the right map has a permuted basis (bound 1)", kp.status, kp.reason, Provenance::derived);
  auto [q, proj] = quotient_lattice(seq.middle(), seq.inner.matrix());
  auto iso = iso_search(q, target_ref, 2);
  r.search("cokernel of the left map is isomorphic to the weight lattice", iso.status, iso.reason, Provenance::derived);
}

}  // namespace

ScenarioReport an_sequence(std::size_t n, std::size_t sweep_max) {
  return timed("an_sequence_n" + std::to_string(n), [&](ScenarioReport& r) {
    auto seq = build_an_sequence(n);
    r.expect("middle rank", std::to_string(n + 1), std::to_string(seq.middle().rank()), Provenance::literature);
    r.expect("left lattice is trivial of rank 1", "1", std::to_string(seq.left().rank()), Provenance::literature);
    resolution_claims(r, seq, GLattice::tautological(seq.right().group()), Provenance::literature);
    if (n <= sweep_max) {
      auto subs = all_subgroups(seq.right().group());
      auto sw = sha1_sweep(seq.right(), subs);
      r.expect("Sha^1 of P(A_" + std::to_string(n) + ") vanishes on all " + std::to_string(sw.count) + " subgroups",
               "0 nonzero", std::to_string(sw.nonzero) + " nonzero" + (sw.first_nonzero.empty() ? "" : " (" + sw.first_nonzero + ")"),
               Provenance::derived);
    }
  });
}

ScenarioReport cn_sequence(std::size_t n, std::size_t sweep_max) {
  return timed("cn_sequence_n" + std::to_string(n), [&](ScenarioReport& r) {
    auto seq = build_cn_sequence(n);
    resolution_claims(r, seq, GLattice::tautological(seq.right().group()), Provenance::literature);
    // the kernel basis {a_i + b_i} is permuted
    bool perm_kernel = true;
    for (const auto& g : seq.left().actions()) perm_kernel = perm_kernel && g.is_permutation();
    r.check("kernel basis a_i + b_i is permuted", perm_kernel, "yes", perm_kernel ? "yes" : "no", Provenance::literature);
    if (n <= sweep_max) {
      auto subs = all_subgroups(seq.right().group());
      auto sw = sha1_sweep(seq.right(), subs);
      r.expect("Sha^1 of P(C_" + std::to_string(n) + ") vanishes on all " + std::to_string(sw.count) + " subgroups",
               "0 nonzero", std::to_string(sw.nonzero) + " nonzero" + (sw.first_nonzero.empty() ? "" : " (" + sw.first_nonzero + ")"),
               Provenance::derived);
    }
  });
}

// ---------------------------------------------------------------------------
// Klein subgroups of W(C3) and W(D4)

namespace {

IntMatrix diag(std::initializer_list<long long> d) {
  IntVector v;
  for (auto x : d) v.emplace_back(x);
  return IntMatrix::diagonal(v);
}

// generators (a, b) in ambient coordinates
std::vector<IntMatrix> klein_generators(char family) {
  if (family == 'C') {
    // a = c1 c3, b = c2 (13)
    return {diag({-1, 1, -1}), diag({1, -1, 1}) * permutation_matrix({2, 1, 0})};
  }
  // a = c3 c4, b = c1 c2 (34)
  return {diag({1, 1, -1, -1}), diag({-1, -1, 1, 1}) * permutation_matrix({0, 1, 3, 2})};
}

std::string matrix_columns(const IntMatrix& m) { return m.transpose().to_string(); }

// J_H coordinates of the classes of e_x, x != 1
IntMatrix j_basis_hint(const GroupPtr& h, const std::vector<std::vector<std::pair<std::size_t, int>>>& images) {
  std::vector<std::size_t> pos(h->order(), 0);
  std::size_t k = 0;
  for (std::size_t e = 0; e < h->order(); ++e)
    if (e != h->identity_index()) pos[e] = k++;
  IntMatrix x(h->order() - 1, images.size());
  for (std::size_t j = 0; j < images.size(); ++j)
    for (auto [e, c] : images[j]) x(pos[e], j) += c;
  return x;
}

}  // namespace

ScenarioReport claim72_c3() {
  return timed("claim72_c3", [](ScenarioReport& r) {
    auto c3 = build_root_system(DynkinType::make('C', 3));
    auto gens = klein_generators('C');
    auto wamb = weyl_group_ambient(c3);
    r.check("a = c1c3 and b = c2(13) lie in W(C3)", wamb->contains(gens[0]) && wamb->contains(gens[1]), "yes",
            "yes", Provenance::literature);

    // alpha_1 = e1 - e2, alpha_2 = e2 - e3, alpha_3 = e2 + e3
    RatMatrix basis(IntMatrix{{1, 0, 0}, {-1, 1, 1}, {0, -1, 1}});
    auto change = c3.simple_roots.solve(basis);
    bool same = change && change->is_integral() && abs(determinant(change->to_int())).is_one();
    r.check("alpha_1, alpha_2, alpha_3 form a Z-basis of Q(C3)", same, "yes", same ? "yes" : "no", Provenance::derived);

    IntMatrix ma = conjugate_into(basis, gens[0]), mb = conjugate_into(basis, gens[1]);
    // columns are images of alpha_1, alpha_2, alpha_3
    IntMatrix ea{{-1, 0, 0}, {-1, 0, 1}, {-1, 1, 0}};
    IntMatrix eb{{0, -1, 1}, {0, -1, 0}, {1, -1, 0}};
    r.expect("a: alpha1 -> -alpha1-alpha2-alpha3, alpha2 -> alpha3, alpha3 -> alpha2 (columns)", matrix_columns(ea),
             matrix_columns(ma), Provenance::literature);
    r.expect("b: alpha1 -> alpha3, alpha2 -> -alpha1-alpha2-alpha3, alpha3 -> alpha1 (columns)", matrix_columns(eb),
             matrix_columns(mb), Provenance::literature);

    auto h = FiniteMatrixGroup::generate({ma, mb});
    r.check("H = <a, b> is (Z/2)^2", is_klein(*h), "yes", "order " + std::to_string(h->order()), Provenance::literature);
    GLattice q = GLattice::tautological(h);
    auto an = augmentation_and_norm(h);
    std::size_t ia = *h->index_of(ma), ib = *h->index_of(mb), iab = *h->index_of(ma * mb);
    IntMatrix hint = j_basis_hint(h, {{{ia, 1}}, {{ib, 1}}, {{iab, 1}}});
    auto iso = iso_search(q, an.J, 2, hint);
    r.search("Q(C3)|H is isomorphic to J_H", iso.status, iso.reason, Provenance::literature);
    r.expect("the isomorphism is alpha1 <-> a, alpha2 <-> b, alpha3 <-> ab", "hint verified", iso.reason,
             Provenance::literature);

    auto si = sha_omega(an.I, 1);
    r.expect("Sha^1(H, I_H)", "Z/2", si.invariants().to_string(), Provenance::literature);
    GLattice q0 = dual_lattice(q);
    auto sq = sha_omega(q0, 1);
    r.check("Sha^1(H, Q(C3)^0) is nonzero", !sq.invariants().is_trivial(), "nonzero", sq.invariants().to_string(),
            Provenance::literature);
    r.expect("Sha^1(H, Q(C3)^0)", "Z/2", sq.invariants().to_string(), Provenance::derived);
  });
}

ScenarioReport claim72_d4() {
  return timed("claim72_d4", [](ScenarioReport& r) {
    auto d4 = build_root_system(DynkinType::make('D', 4));
    auto gens = klein_generators('D');
    auto wamb = weyl_group_ambient(d4);
    r.check("c3c4 and c1c2(34) lie in W(D4)", wamb->contains(gens[0]) && wamb->contains(gens[1]), "yes", "yes",
            Provenance::literature);
    IntMatrix ma = conjugate_into(d4.simple_roots, gens[0]), mb = conjugate_into(d4.simple_roots, gens[1]);
    r.expect("c3c4 fixes alpha1", "(1, 0, 0, 0)", vector_to_string(ma.column(0)), Provenance::literature);
    r.expect("c1c2(34) sends alpha1 to -alpha1", "(-1, 0, 0, 0)", vector_to_string(mb.column(0)), Provenance::literature);

    auto h = FiniteMatrixGroup::generate({ma, mb});
    r.check("H is (Z/2)^2", is_klein(*h), "yes", "order " + std::to_string(h->order()), Provenance::literature);
    GLattice q = GLattice::tautological(h);
    const std::vector<std::size_t> line{0}, rest{1, 2, 3};
    bool blocks = true;
    std::vector<IntMatrix> la, ja;
    for (const auto& g : q.actions()) {
      blocks = blocks && g.select_rows(line).select_columns(rest).is_zero() &&
               g.select_rows(rest).select_columns(line).is_zero();
      la.push_back(g.select_rows(line).select_columns(line));
      ja.push_back(g.select_rows(rest).select_columns(rest));
    }
    r.check("Z alpha1 and J = <alpha2, alpha3, alpha4> are H-stable complements", blocks, "yes", blocks ? "yes" : "no",
            Provenance::literature);
    if (!blocks) return;
    GLattice sign(h, la), j(h, ja);
    r.check("Q(D4)|H = Z alpha1 (+) J", same_lattice(direct_sum(sign, j), q), "yes", "yes", Provenance::trivial);
    std::string sgn = la[*h->index_of(ma)].to_string() + " " + la[*h->index_of(mb)].to_string();
    r.expect("action on Z alpha1 (a, b)", "[[1]] [[-1]]", sgn, Provenance::literature);

    auto an = augmentation_and_norm(h);
    std::size_t ia = *h->index_of(ma), ib = *h->index_of(mb), iab = *h->index_of(ma * mb);
    IntMatrix hint = j_basis_hint(h, {{{ia, -1}}, {{ia, 1}, {ib, 1}}, {{ia, 1}, {iab, 1}}});
    auto iso = iso_search(j, an.J, 2, hint);
    r.search("J is isomorphic to J_H", iso.status, iso.reason, Provenance::literature);

    IntMatrix pa = ambient_to_weight_basis(d4, RatMatrix(gens[0])), pb = ambient_to_weight_basis(d4, RatMatrix(gens[1]));
    auto hp = FiniteMatrixGroup::generate({pa, pb});
    GLattice p = GLattice::tautological(hp);
    auto s = sha_omega(p, 1);
    r.check("Sha^1(H, P(D4)) is nonzero", !s.invariants().is_trivial(), "nonzero", s.invariants().to_string(),
            Provenance::literature);
    r.expect("Sha^1(H, P(D4))", "Z/2", s.invariants().to_string(), Provenance::derived);
    r.expect("witness order", "2", s.witness_order.to_string(), Provenance::literature);
    bool ok = witness_is_valid(p, s);
    r.check("witness restricts to zero on every cyclic subgroup and is nonzero", ok, "yes", ok ? "yes" : "no",
            Provenance::derived);
  });
}

// ---------------------------------------------------------------------------
// nonvanishing for the weight lattices

namespace {

IntMatrix evaluate_word(const std::vector<std::uint32_t>& word, const std::vector<IntMatrix>& gens,
                        const std::vector<std::size_t>& nodes) {
  IntMatrix x = IntMatrix::identity(gens.front().rows());
  for (auto k : word) x = x * gens[nodes[k]];
  return x;
}

IntMatrix inverse_int(const IntMatrix& g) { return RatMatrix(g).inverse().to_int(); }

// Sha^1 claims shared by every route
void sha_claims(ScenarioReport& r, const GroupPtr& ht, const DynkinType& t) {
  r.check("H is (Z/2)^2 inside W(" + t.to_string() + ")", is_klein(*ht), "yes", "order " + std::to_string(ht->order()),
          Provenance::literature);
  GLattice p = GLattice::tautological(ht);
  auto s = sha_omega(p, 1);
  r.check("Sha^1(H, P(" + t.to_string() + ")) is nonzero", !s.invariants().is_trivial(), "nonzero",
          s.invariants().to_string(), Provenance::literature);
  r.expect("Sha^1(H, P(" + t.to_string() + "))", "Z/2", s.invariants().to_string(), Provenance::derived);
  r.expect("witness order", "2", s.witness_order.to_string(), Provenance::literature);
  bool ok = witness_is_valid(p, s);
  r.check("witness verified against every cyclic subgroup", ok, "yes", ok ? "yes" : "no", Provenance::derived);
}

void sequence_claims(ScenarioReport& r, const RootSystemData& rs_r, const SubRootSystem& sub,
                     const std::vector<IntMatrix>& hr_gens, const std::vector<IntMatrix>& ht_gens) {
  auto hr = FiniteMatrixGroup::generate(hr_gens);
  auto seq = root_subsystem_sequence(rs_r, sub, hr);
  const std::size_t l = rs_r.rank(), lp = sub.nodes.size();
  r.expect("0 -> Q(R') -> Q(R) -> Z^(l-l') -> 0 exactness", flags_string({true, true, true}), flags_string(seq.flags),
           Provenance::literature);
  bool trivial = true;
  for (const auto& g : seq.right().actions()) trivial = trivial && g.is_identity();
  r.expect("quotient rank l - l'", std::to_string(l - lp), std::to_string(seq.right().rank()), Provenance::literature);
  r.check("H acts trivially on the quotient", trivial, "yes", trivial ? "yes" : "no", Provenance::literature);
  auto dual = seq.dual();
  r.expect("dual sequence 0 -> Z^(l-l') -> P(R^v) -> P(R'^v) -> 0 exactness", flags_string({true, true, true}),
           flags_string(dual.flags), Provenance::literature);
  bool same = hr_gens.size() == ht_gens.size();
  for (std::size_t k = 0; same && k < hr_gens.size(); ++k) same = ht_gens[k] == inverse_int(hr_gens[k]).transpose();
  r.check("Q(R)^0 and P(R^v) carry identical H-actions", same, "yes", same ? "yes" : "no", Provenance::literature);
  auto s = sha_omega(dual.right(), 1);
  r.expect("Sha^1(H, P(R'^v))", "Z/2", s.invariants().to_string(), Provenance::derived);
}

}  // namespace

ScenarioReport prop71(const DynkinType& t) {
  if (t.family == 'A' || t.family == 'C' || t.family == 'G' || (t.family == 'B' && t.rank < 3))
    throw InvalidInput("excluded type " + t.to_string() + ": the weight lattice of A_n, C_n and G_2 has a permutation resolution");
  return timed("prop71_" + t.to_string(), [&](ScenarioReport& r) {
    auto rs_t = build_root_system(t);
    if (t.family == 'F') {
      auto d4 = build_root_system(DynkinType::make('D', 4));
      auto x = rs_t.fundamental_weights.solve(d4.fundamental_weights);
      bool coincide = x && x->is_integral() && abs(determinant(x->to_int())).is_one();
      r.check("P(F4) and P(D4) coincide in Q^4", coincide, "yes", coincide ? "yes" : "no", Provenance::literature);
      if (!coincide) return;
      auto wf = weyl_group(rs_t);
      auto wd = weyl_group_ambient(d4);
      bool inside = true;
      for (std::size_t e = 0; e < wd->order() && inside; ++e)
        inside = wf->contains(ambient_to_weight_basis(rs_t, RatMatrix(wd->matrix(e))));
      r.check("W(D4) is contained in W(F4)", inside, "yes", std::to_string(wd->order()) + " of " + std::to_string(wf->order()),
              Provenance::literature);
      std::vector<IntMatrix> ht_gens, hd_gens, hr_gens;
      for (const auto& g : klein_generators('D')) {
        ht_gens.push_back(ambient_to_weight_basis(rs_t, RatMatrix(g)));
        hd_gens.push_back(ambient_to_weight_basis(d4, RatMatrix(g)));
        hr_gens.push_back(conjugate_into(d4.simple_roots, g));
      }
      auto ht = FiniteMatrixGroup::generate(ht_gens);
      GLattice pf = GLattice::tautological(ht), pd = GLattice::from_generators(ht, hd_gens);
      bool iso = !equivariance_violation(pd, pf, x->to_int());
      r.check("P(D4)|H -> P(F4)|H by the change of basis is H-equivariant", iso, "yes", iso ? "yes" : "no",
              Provenance::literature);
      r.expect("route", "coincidence with D4", "coincidence with D4", Provenance::literature);
      // the D4 sequences, with B' = B
      sequence_claims(r, d4, sub_root_system(d4, {0, 1, 2, 3}), hr_gens, hd_gens);
      sha_claims(r, ht, t);
      return;
    }
    DynkinType rt = dual_type(t);
    DynkinType target = t.family == 'B' ? DynkinType::make('C', 3) : DynkinType::make('D', 4);
    auto rs_r = build_root_system(rt);
    auto nodes = find_subdiagram(rt, target);
    std::string chosen = "none";
    if (nodes) {
      chosen = "nodes";
      for (std::size_t k = 0; k < nodes->size(); ++k) chosen += (k ? "," : " ") + std::to_string((*nodes)[k] + 1);
    }
    r.check("R = " + rt.to_string() + " contains a subdiagram of type " + target.to_string(), nodes.has_value(), "found",
            chosen, Provenance::literature);
    if (!nodes) return;
    auto sub = sub_root_system(rs_r, *nodes);
    r.expect("R' type", target.to_string(), sub.data.type.to_string(), Provenance::literature);

    auto std_rs = build_root_system(target);
    auto wstd = weyl_group_ambient(std_rs);
    std::vector<IntMatrix> hr_gens, ht_gens;
    for (const auto& g : klein_generators(target.family)) {
      auto idx = wstd->index_of(g);
      if (!idx) throw Error("generator not in the standard Weyl group");
      auto w = wstd->word(*idx);
      hr_gens.push_back(evaluate_word(w, rs_r.reflections_root, *nodes));
      ht_gens.push_back(evaluate_word(w, rs_t.reflections_weight, *nodes));
    }
    sequence_claims(r, rs_r, sub, hr_gens, ht_gens);
    sha_claims(r, FiniteMatrixGroup::generate(ht_gens), t);
  });
}

ScenarioReport g2_vanishing() {
  return timed("g2_vanishing", [](ScenarioReport& r) {
    auto rs = build_root_system(DynkinType::make('G', 2));
    auto w = weyl_group(rs);
    GLattice p = GLattice::tautological(w);
    r.expect("rank of P(G2)", "2", std::to_string(p.rank()), Provenance::literature);
    auto subs = all_subgroups(w);
    r.expect("subgroups of W(G2)", "16", std::to_string(subs.size()), Provenance::derived);
    auto sw = sha1_sweep(p, subs);
    r.expect("Sha^1(H', P(G2)) = 0 for every subgroup", "0 nonzero", std::to_string(sw.nonzero) + " nonzero",
             Provenance::literature);
    r.expect("Sha^1(W(G2), P(G2))", "0", sha_omega(p, 1).invariants().to_string(), Provenance::derived);
  });
}

// ---------------------------------------------------------------------------
// (Z/p)^r

GroupPtr elementary_abelian_group(std::size_t p, std::size_t r) {
  if (p < 2) throw InvalidInput("elementary_abelian_group: p must be prime");
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw InvalidInput("elementary_abelian_group: p must be prime");
  if (r < 1) throw InvalidInput("elementary_abelian_group: r must be positive");
  std::vector<IntMatrix> gens;
  if (p == 2) {
    for (std::size_t i = 0; i < r; ++i) {
      IntMatrix m = IntMatrix::identity(r);
      m(i, i) = -1;
      gens.push_back(m);
    }
  } else {
    for (std::size_t i = 0; i < r; ++i) {
      IntMatrix m = IntMatrix::identity(p * r);
      for (std::size_t c = 0; c < p; ++c) {
        m(i * p + c, i * p + c) = 0;
        m(i * p + (c + 1) % p, i * p + c) = 1;
      }
      gens.push_back(m);
    }
  }
  return FiniteMatrixGroup::generate(gens);
}

ScenarioReport appendix_counterexample(std::size_t p, std::size_t r) {
  auto g = elementary_abelian_group(p, r);
  return timed("appendix_p" + std::to_string(p) + "_r" + std::to_string(r), [&](ScenarioReport& rep) {
    auto an = augmentation_and_norm(g);
    Integer n_gamma(1);
    for (std::size_t i = 0; i + 1 < r; ++i) n_gamma *= Integer(static_cast<long long>(p));
    auto expected = n_gamma.is_one() ? AbelianGroupInvariants{} : AbelianGroupInvariants::from_cyclic_orders({n_gamma});

    auto s1 = sha_omega(an.I, 1);
    rep.expect("Sha^1(Gamma, I_Gamma) by the bar resolution", expected.to_string(), s1.invariants().to_string(),
               Provenance::literature);
    auto formula = tate_kernel_formula(*g);
    rep.expect("ker[Z/n_Gamma -> prod Z/n_g]", expected.to_string(), formula.to_string(), Provenance::literature);
    auto s0 = sha_omega(GLattice::trivial(g, 1), 0, true);
    rep.expect("Tate H^0 route agrees with the direct H^1", s1.invariants().to_string(), s0.invariants().to_string(),
               Provenance::derived);

    auto s2 = sha_omega(an.J, 2);
    Integer e2 = s2.invariants().exponent();
    bool kills = e2.is_one() || e2 == Integer(static_cast<long long>(p));
    rep.check("Sha^2(Gamma, J_Gamma) is killed by p", kills, "exponent divides " + std::to_string(p),
              s2.invariants().to_string(), Provenance::literature);
    if (r >= 2)
      rep.check("Sha^2(Gamma, J_Gamma) is nonzero", !s2.invariants().is_trivial(), "nonzero", s2.invariants().to_string(),
                Provenance::derived);
    if (r >= 3) {
      Integer e1 = s1.invariants().exponent();
      rep.check("exponents differ, so the two invariants cannot match", e1 != e2, "different",
                "exponent " + e1.to_string() + " vs " + e2.to_string(), Provenance::literature);
    }
  });
}

// ---------------------------------------------------------------------------
// registry

namespace {

std::size_t param_size(const Params& ps, const std::string& key, std::size_t def) {
  auto it = ps.find(key);
  if (it == ps.end()) return def;
  try {
    std::size_t used = 0;
    long long v = std::stoll(it->second, &used);
    if (used != it->second.size() || v < 0) throw std::invalid_argument("");
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw InvalidInput("parameter " + key + " must be a non-negative integer, got '" + it->second + "'");
  }
}

void allow(const Params& ps, const std::string& scenario, std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : ps) {
    bool ok = false;
    for (const char* a : keys) ok = ok || k == a;
    if (!ok) throw InvalidInput("scenario " + scenario + " has no parameter '" + k + "'");
  }
}

}  // namespace

std::vector<std::string> scenario_names() {
  return {"an_sequence", "appendix", "claim72_c3", "claim72_d4", "cn_sequence",
          "g2_vanishing", "lemma83", "pgl2_section", "prop71"};
}

std::vector<ScenarioReport> run_scenario(const std::string& name, const Params& ps) {
  std::vector<ScenarioReport> out;
  if (name == "an_sequence") {
    allow(ps, name, {"n", "sweep_max"});
    std::size_t sweep = param_size(ps, "sweep_max", 3);
    if (ps.count("n")) {
      out.push_back(an_sequence(param_size(ps, "n", 1), sweep));
    } else {
      for (std::size_t n = 1; n <= 4; ++n) out.push_back(an_sequence(n, sweep));
    }
  } else if (name == "cn_sequence") {
    allow(ps, name, {"n", "sweep_max"});
    std::size_t sweep = param_size(ps, "sweep_max", 3);
    if (ps.count("n")) {
      out.push_back(cn_sequence(param_size(ps, "n", 2), sweep));
    } else {
      for (std::size_t n = 2; n <= 4; ++n) out.push_back(cn_sequence(n, sweep));
    }
  } else if (name == "claim72_c3") {
    allow(ps, name, {});
    out.push_back(claim72_c3());
  } else if (name == "claim72_d4") {
    allow(ps, name, {});
    out.push_back(claim72_d4());
  } else if (name == "prop71") {
    allow(ps, name, {"type"});
    if (auto it = ps.find("type"); it != ps.end()) {
      out.push_back(prop71(DynkinType::parse(it->second)));
    } else {
      for (const char* t : {"B3", "B4", "D4", "D5", "F4", "E6"}) out.push_back(prop71(DynkinType::parse(t)));
    }
  } else if (name == "g2_vanishing") {
    allow(ps, name, {});
    out.push_back(g2_vanishing());
  } else if (name == "lemma83") {
    allow(ps, name, {"n", "bound", "kernel_bound"});
    out.push_back(lemma83_bruteforce(param_size(ps, "n", 3), static_cast<int>(param_size(ps, "bound", 1)),
                                     static_cast<int>(param_size(ps, "kernel_bound", 1))));
  } else if (name == "appendix") {
    allow(ps, name, {"p", "r"});
    std::size_t p = param_size(ps, "p", 2);
    if (ps.count("r")) {
      out.push_back(appendix_counterexample(p, param_size(ps, "r", 2)));
    } else {
      for (std::size_t r = 2; r <= 3; ++r) out.push_back(appendix_counterexample(p, r));
    }
  } else if (name == "pgl2_section") {
    allow(ps, name, {});
    out.push_back(pgl2_section_check());
  } else {
    throw InvalidInput("unknown scenario '" + name + "'");
  }
  return out;
}

std::vector<ScenarioReport> verify_all(const std::vector<std::string>& names, const Params& ps) {
  std::vector<std::string> todo;
  bool all = names.empty() || std::find(names.begin(), names.end(), "all") != names.end();
  if (all) {
    if (!ps.empty()) throw InvalidInput("parameters need a single named scenario");
    todo = scenario_names();
  } else {
    auto known = scenario_names();
    for (const auto& n : names)
      if (std::find(known.begin(), known.end(), n) == known.end()) throw InvalidInput("unknown scenario '" + n + "'");
    todo = names;
  }
  std::vector<ScenarioReport> out;
  for (const auto& n : todo) {
    try {
      auto rs = run_scenario(n, ps);
      out.insert(out.end(), rs.begin(), rs.end());
    } catch (const ResourceGuardError& e) {
      ScenarioReport r;
      r.name = n;
      r.error = e.what();
      r.guard_exceeded = true;
      r.finish();
      out.push_back(std::move(r));
    } catch (const InvalidInput&) {
      throw;
    } catch (const std::exception& e) {
      ScenarioReport r;
      r.name = n;
      r.error = e.what();
      r.finish();
      out.push_back(std::move(r));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return out;
}

}  // namespace weylcoh
