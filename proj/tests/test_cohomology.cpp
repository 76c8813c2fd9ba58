#include <gtest/gtest.h>

#include "weylcoh/cohomology.hpp"
#include "weylcoh/errors.hpp"

using namespace weylcoh;

namespace {

GroupPtr z2() { return FiniteMatrixGroup::generate({IntMatrix{{-1}}}); }
GroupPtr klein() { return FiniteMatrixGroup::generate({IntMatrix{{-1, 0}, {0, 1}}, IntMatrix{{1, 0}, {0, -1}}}); }
GroupPtr diag2(std::size_t r) {
  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i < r; ++i) {
    IntMatrix m = IntMatrix::identity(r);
    m(i, i) = -1;
    gens.push_back(m);
  }
  return FiniteMatrixGroup::generate(gens);
}
GroupPtr cyclic(std::size_t n) {
  IntMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i) p((i + 1) % n, i) = 1;
  return FiniteMatrixGroup::generate({p});
}
AbelianGroupInvariants z(std::initializer_list<long long> t, std::size_t free = 0) {
  IntVector v;
  for (auto x : t) v.emplace_back(x);
  return AbelianGroupInvariants::from_cyclic_orders(v, free);
}

}  // namespace

TEST(H0, Examples) {
  for (std::size_t n : {2u, 3u, 5u}) {
    auto g = cyclic(n);
    EXPECT_EQ(tate_h0(GLattice::trivial(g, 1)).invariants(), z({static_cast<long long>(n)}));
    EXPECT_TRUE(tate_h0(permutation_lattice(g, Subgroup::trivial(g))).invariants().is_trivial());
  }
  EXPECT_EQ(tate_h0(GLattice::trivial(klein(), 1)).invariants(), z({4}));
  auto t = FiniteMatrixGroup::trivial(3);
  EXPECT_EQ(h0(GLattice::tautological(t)).invariants(), z({}, 3));
  EXPECT_EQ(h0(GLattice::tautological(z2())).invariants(), z({}));
}

TEST(H1, Examples) {
  auto g = z2();
  EXPECT_TRUE(h1(GLattice::trivial(g, 1)).invariants().is_trivial());
  EXPECT_EQ(h1(GLattice::tautological(g)).invariants(), z({2}));
  // H^1(G, I_G) = Z/|G| from the augmentation sequence
  EXPECT_EQ(h1(augmentation_and_norm(klein()).I).invariants(), z({4}));
  EXPECT_EQ(h1(augmentation_and_norm(cyclic(3)).I).invariants(), z({3}));
}

TEST(H2, Examples) {
  EXPECT_TRUE(h2(GLattice::trivial(FiniteMatrixGroup::trivial(1), 2)).invariants().is_trivial());
  auto g = z2();
  EXPECT_EQ(h2(GLattice::trivial(g, 1)).invariants(), z({2}));
  EXPECT_TRUE(h2(permutation_lattice(g, Subgroup::trivial(g))).invariants().is_trivial());
  EXPECT_TRUE(h2(GLattice::tautological(g)).invariants().is_trivial());
  // H^2(G, Z) = Hom(G, Q/Z)
  EXPECT_EQ(h2(GLattice::trivial(klein(), 1)).invariants(), z({2, 2}));
  EXPECT_EQ(h2(GLattice::trivial(cyclic(4), 1)).invariants(), z({4}));
  // H^2(G, J_G) = H^3(G, Z); for the Klein group this is Z/2
  EXPECT_EQ(h2(augmentation_and_norm(klein()).J).invariants(), z({2}));
}

TEST(Cohomology, InvariantsOnlyAgree) {
  auto g = klein();
  auto an = augmentation_and_norm(g);
  for (const GLattice* m : {&an.I, &an.J, &an.regular}) {
    EXPECT_EQ(cohomology_invariants(*m, 1), h1(*m).invariants());
    EXPECT_EQ(cohomology_invariants(*m, 2), h2(*m).invariants());
  }
}

TEST(Cohomology, DifferentialSquaresToZero) {
  auto an = augmentation_and_norm(klein());
  for (std::size_t k = 1; k <= 2; ++k) {
    EXPECT_TRUE(check_dd_zero(an.J, k, 4, 10'000'000));
    EXPECT_TRUE(check_dd_zero(an.regular, k, 4, 10'000'000));
  }
  BarComplex bar(an.J);
  EXPECT_EQ(bar.cochain_dim(2), 27u);
}

TEST(Cohomology, GuardRaises) {
  auto an = augmentation_and_norm(diag2(3));
  CohomologyOptions opts;
  opts.max_entries = 1000;
  try {
    h2(an.J, opts);
    FAIL();
  } catch (const ResourceGuardError& e) {
    EXPECT_NE(std::string(e.what()).find("memory guard"), std::string::npos);
  }
}

TEST(Restriction, TrivialSubgroupAndCoboundaries) {
  auto g = klein();
  auto m = augmentation_and_norm(g).I;
  auto r = restriction(m, Subgroup::trivial(g), 1);
  EXPECT_TRUE(r.target.invariants().is_trivial());
  EXPECT_EQ(r.matrix.rows(), 0u);
  // restricting to the whole group is the identity on classes
  auto whole = restriction(m, Subgroup::whole(g), 1);
  ASSERT_EQ(whole.matrix.cols(), whole.matrix.rows());
  EXPECT_TRUE(whole.matrix.is_identity());
}

TEST(Restriction, AgreesWithCyclicClosedForm) {
  // H^1(<g>, M) through f -> f(g) in ker N / im(g - 1)
  auto g = klein();
  auto an = augmentation_and_norm(g);
  for (const auto& c : cyclic_subgroups(g)) {
    if (c.order() == 1) continue;
    GLattice rm = restrict(an.I, c);
    auto bar = h1(rm);
    std::size_t gen = rm.group()->generator_indices()[0];
    EXPECT_EQ(bar.invariants(), cyclic_h1(rm, gen));
    EXPECT_EQ(h2(rm).invariants(), cyclic_h2(rm, gen));
    // the evaluation map is an isomorphism onto the closed form
    IntMatrix kerN = kernel_basis(rm.norm_operator());
    auto closed = quotient_group(kerN, rm.action(gen) - IntMatrix::identity(rm.rank()));
    BarComplex cx(rm);
    std::size_t p = cx.position(gen);
    for (std::size_t j = 0; j < bar.quotient.num_generators(); ++j) {
      IntVector f = bar.quotient.lift(j), v(rm.rank());
      for (std::size_t i = 0; i < rm.rank(); ++i) v[i] = f[p * rm.rank() + i];
      EXPECT_FALSE(closed.is_zero_class(v));
    }
  }
}

TEST(Sha, AugmentationLattices) {
  EXPECT_EQ(sha_omega(augmentation_and_norm(klein()).I, 1).invariants(), z({2}));
  auto s3 = sha_omega(augmentation_and_norm(diag2(3)).I, 1);
  EXPECT_EQ(s3.invariants(), z({4}));
  ASSERT_TRUE(s3.witness_class.has_value());
  EXPECT_EQ(s3.witness_order, Integer(4));
  // Tate route and the closed formula
  EXPECT_EQ(sha_omega(GLattice::trivial(diag2(3), 1), 0, true).invariants(), z({4}));
  EXPECT_EQ(tate_kernel_formula(*diag2(3)), z({4}));
  EXPECT_EQ(tate_kernel_formula(*diag2(2)), z({2}));
  EXPECT_TRUE(tate_kernel_formula(*cyclic(6)).is_trivial());
  EXPECT_THROW(sha_omega(GLattice::trivial(klein(), 1), 0, false), InvalidInput);
}

TEST(Sha, CyclicGroupsHaveTrivialSha) {
  for (std::size_t n : {2u, 3u, 4u, 6u}) {
    auto an = augmentation_and_norm(cyclic(n));
    EXPECT_TRUE(sha_omega(an.I, 1).invariants().is_trivial());
    EXPECT_TRUE(sha_omega(an.J, 2).invariants().is_trivial());
  }
}

TEST(Sha, PermutationLatticesVanish) {
  auto g = klein();
  for (const auto& h : all_subgroups(g)) {
    auto p = permutation_lattice(g, h);
    EXPECT_TRUE(h1(p).invariants().is_trivial());
    EXPECT_TRUE(sha_omega(p, 1).invariants().is_trivial());
    EXPECT_TRUE(sha_omega(p, 2).invariants().is_trivial());
  }
}

TEST(Sha, WitnessIsVerified) {
  auto an = augmentation_and_norm(klein());
  auto s = sha_omega(an.I, 1);
  ASSERT_TRUE(s.witness_cocycle.has_value());
  const auto& q = s.ambient.quotient;
  EXPECT_FALSE(q.is_zero_class(*s.witness_cocycle));
  EXPECT_TRUE(q.is_zero_class(scaled(*s.witness_cocycle, s.witness_order)));
  for (const auto& c : cyclic_subgroups(an.I.group())) {
    auto tgt = h1(restrict(an.I, c));
    IntMatrix r = restriction_matrix(an.I, s.ambient, c, tgt);
    EXPECT_TRUE(is_zero_vector(tgt.quotient.reduce(r * *s.witness_class)));
  }
}
