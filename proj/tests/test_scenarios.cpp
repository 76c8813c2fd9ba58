#include <gtest/gtest.h>

#include "weylcoh/cohomology.hpp"
#include "weylcoh/errors.hpp"
#include "weylcoh/linalg.hpp"
#include "weylcoh/scenarios.hpp"

using namespace weylcoh;

namespace {

void expect_pass(const ScenarioReport& r) {
  EXPECT_EQ(r.status, Status::pass) << r.name << ": " << r.error;
  EXPECT_FALSE(r.claims.empty()) << r.name;
  for (const auto& c : r.claims)
    EXPECT_EQ(c.status, Status::pass) << r.name << ": " << c.description << " expected " << c.expected << " got "
                                      << c.computed;
}

std::size_t sign_change(const RootSystemData& rs, const GroupPtr& w, std::size_t i) {
  IntMatrix d = IntMatrix::identity(rs.rank());
  d(i, i) = -1;
  return *w->index_of(ambient_to_weight_basis(rs, RatMatrix(d)));
}

}  // namespace

TEST(Sequences, AnShapes) {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto s = build_an_sequence(n);
    EXPECT_TRUE(s.flags.all()) << n;
    EXPECT_EQ(s.middle().rank(), n + 1);
    EXPECT_EQ(s.right().rank(), n);
    EXPECT_EQ(s.left().rank(), 1u);
  }
}

TEST(Sequences, CnShapes) {
  for (std::size_t n = 2; n <= 4; ++n) {
    auto s = build_cn_sequence(n);
    EXPECT_TRUE(s.flags.all()) << n;
    EXPECT_EQ(s.middle().rank(), 2 * n);
    EXPECT_EQ(s.left().rank(), n);
    for (const auto& a : s.middle().actions()) EXPECT_TRUE(a.is_permutation());
  }
}

TEST(Scenarios, Sequences) {
  for (std::size_t n = 1; n <= 4; ++n) expect_pass(an_sequence(n));
  for (std::size_t n = 2; n <= 4; ++n) expect_pass(cn_sequence(n));
}

TEST(Scenarios, Claims) {
  expect_pass(claim72_c3());
  expect_pass(claim72_d4());
}

TEST(Scenarios, Prop71) {
  for (const char* t : {"B3", "B4", "B5", "D4", "D5", "D6", "E6", "E7", "E8", "F4"}) expect_pass(prop71(DynkinType::parse(t)));
}

TEST(Scenarios, Prop71Excluded) {
  for (const char* t : {"A3", "C3", "C4", "G2", "B2"}) {
    try {
      prop71(DynkinType::parse(t));
      ADD_FAILURE() << t;
    } catch (const InvalidInput& e) {
      EXPECT_NE(std::string(e.what()).find("excluded type"), std::string::npos) << e.what();
    }
  }
}

TEST(Scenarios, G2AndPgl2) {
  expect_pass(g2_vanishing());
  expect_pass(pgl2_section_check());
}

TEST(Scenarios, Appendix) {
  auto r2 = appendix_counterexample(2, 2);
  auto r3 = appendix_counterexample(2, 3);
  expect_pass(r2);
  expect_pass(r3);
  EXPECT_THROW(appendix_counterexample(4, 2), InvalidInput);
}

TEST(Scenarios, AppendixValues) {
  auto g = elementary_abelian_group(2, 3);
  auto an = augmentation_and_norm(g);
  EXPECT_EQ(sha_omega(an.I, 1).invariants().to_string(), "Z/4");
  EXPECT_EQ(tate_kernel_formula(*g).to_string(), "Z/4");
  auto s2 = sha_omega(an.J, 2, false, [] {
    CohomologyOptions o;
    o.certify = false;
    return o;
  }());
  EXPECT_EQ(s2.invariants().exponent(), Integer(2));
  EXPECT_FALSE(s2.invariants().is_trivial());
}

TEST(SurjectionSearch, FrozenCounts) {
  auto st = enumerate_surjections(3, 1);
  EXPECT_EQ(st.subgroup_classes, 14u);
  EXPECT_EQ(st.wsets, 40u);
  EXPECT_EQ(st.wsets_without_chi, 38u);
  EXPECT_EQ(st.candidates, 42u);
  EXPECT_EQ(st.zero_maps, 40u);
  EXPECT_EQ(st.surjections, 2u);
  EXPECT_EQ(st.isomorphic, 2u);
  EXPECT_EQ(st.kernel_permutation, 2u);
  EXPECT_EQ(st.hint_failures, 0u);
  EXPECT_EQ(st.surjections_missing_chi, 0u);
  expect_pass(lemma83_bruteforce(3, 1));
}

TEST(SurjectionSearch, LargerBoundFindsNoCounterexample) {
  auto st = enumerate_surjections(3, 2);
  EXPECT_GT(st.candidates, 42u);
  EXPECT_EQ(st.surjections, st.isomorphic);
  EXPECT_EQ(st.surjections, st.kernel_permutation);
  expect_pass(lemma83_bruteforce(3, 2));
}

TEST(SurjectionSearch, Validation) {
  EXPECT_THROW(enumerate_surjections(4, 1), InvalidInput);
  EXPECT_THROW(enumerate_surjections(3, 0), InvalidInput);
}

TEST(Registry, NamesAndErrors) {
  EXPECT_THROW(run_scenario("no_such_scenario"), InvalidInput);
  EXPECT_THROW(run_scenario("claim72_c3", {{"n", "2"}}), InvalidInput);
  EXPECT_THROW(run_scenario("an_sequence", {{"n", "x"}}), InvalidInput);
  EXPECT_THROW(verify_all({"claim72_c3", "nope"}), InvalidInput);
  auto one = verify_all({"pgl2_section"});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].name, "pgl2_section");
  auto two = verify_all({"prop71"}, {{"type", "D4"}});
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0].name, "prop71_D4");
}

TEST(Registry, VerifyAllSortedAndPassing) {
  auto all = verify_all();
  EXPECT_EQ(all.size(), 20u);
  for (std::size_t i = 1; i < all.size(); ++i) EXPECT_LT(all[i - 1].name, all[i].name);
  for (const auto& r : all) expect_pass(r);
}

TEST(Lattices, FixedByKernelOfChi1) {
  auto rs = build_root_system(DynkinType::make('C', 3));
  auto p = lattice_pair(rs).P;
  auto w = p.group();
  Subgroup a1 = Subgroup::generated_by(w, {sign_change(rs, w, 1), sign_change(rs, w, 2)});
  EXPECT_EQ(a1.order(), 4u);
  IntMatrix f = fixed_sublattice(p, a1);
  ASSERT_EQ(f.cols(), 1u);
  // h_1 = epsilon_1 = the first fundamental weight
  IntVector h1{1, 0, 0};
  EXPECT_TRUE(f.column(0) == h1 || f.column(0) == scaled(h1, Integer(-1))) << f;
}

TEST(Lattices, DualRootLatticeOfC3IsWeightLatticeOfB3) {
  auto rs = build_root_system(DynkinType::make('C', 3));
  auto pair = lattice_pair(rs);
  GLattice pb3 = GLattice::from_generators(pair.P.group(), dual_data(rs).reflections_weight);
  EXPECT_EQ(identify_type(dual_data(rs).cartan)->type, DynkinType::make('B', 3));
  auto res = iso_search(dual_lattice(pair.Q), pb3, 2);
  EXPECT_EQ(res.status, SearchStatus::found) << res.reason;
}
