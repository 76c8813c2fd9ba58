#include <gtest/gtest.h>

#include <set>

#include "weylcoh/errors.hpp"
#include "weylcoh/linalg.hpp"
#include "weylcoh/root_system.hpp"

using namespace weylcoh;

namespace {

std::vector<DynkinType> all_types(std::size_t max_rank) {
  std::vector<DynkinType> out;
  for (std::size_t n = 1; n <= max_rank; ++n) out.push_back(DynkinType::make('A', n));
  for (std::size_t n = 2; n <= max_rank; ++n) out.push_back(DynkinType::make('B', n));
  for (std::size_t n = 2; n <= max_rank; ++n) out.push_back(DynkinType::make('C', n));
  for (std::size_t n = 4; n <= max_rank; ++n) out.push_back(DynkinType::make('D', n));
  for (std::size_t n = 6; n <= std::min<std::size_t>(8, max_rank); ++n) out.push_back(DynkinType::make('E', n));
  if (max_rank >= 4) out.push_back(DynkinType::make('F', 4));
  if (max_rank >= 2) out.push_back(DynkinType::make('G', 2));
  return out;
}

RatVector eps(std::initializer_list<int> v) {
  RatVector out;
  for (int x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST(DynkinType, Validation) {
  EXPECT_THROW(DynkinType::make('B', 1), InvalidInput);
  EXPECT_THROW(DynkinType::make('E', 9), InvalidInput);
  EXPECT_THROW(DynkinType::make('F', 3), InvalidInput);
  EXPECT_THROW(DynkinType::make('G', 3), InvalidInput);
  EXPECT_THROW(DynkinType::make('X', 2), InvalidInput);
  EXPECT_THROW(DynkinType::parse("C"), InvalidInput);
  EXPECT_EQ(DynkinType::make('D', 3), DynkinType::make('A', 3));
  EXPECT_EQ(DynkinType::parse("e7"), DynkinType::make('E', 7));
}

TEST(RootSystem, RootCountsAndCartan) {
  for (const auto& t : all_types(8)) {
    SCOPED_TRACE(t.to_string());
    auto rs = build_root_system(t);
    EXPECT_EQ(rs.roots.size(), root_count(t));
    EXPECT_EQ(rs.roots.size(), 2 * rs.positive_count);
    for (std::size_t i = 0; i < t.rank; ++i)
      for (std::size_t j = 0; j < t.rank; ++j) {
        if (i == j)
          EXPECT_EQ(rs.cartan(i, j), Integer(2));
        else
          EXPECT_LE(rs.cartan(i, j).sign(), 0);
      }
    for (const auto& s : rs.reflections_weight) EXPECT_TRUE(abs(determinant(s)).is_one());
    EXPECT_EQ(rs.connection_index(), abs(determinant(rs.cartan)));
  }
}

TEST(RootSystem, A1) {
  auto rs = build_root_system(DynkinType::make('A', 1));
  EXPECT_EQ(rs.roots.size(), 2u);
  EXPECT_EQ(rs.cartan, (IntMatrix{{2}}));
}

TEST(RootSystem, DisplayedSimpleRoots) {
  auto c3 = build_root_system(DynkinType::make('C', 3));
  EXPECT_EQ(c3.roots.size(), 18u);
  EXPECT_EQ(c3.simple_roots.column(0), eps({1, -1, 0}));
  EXPECT_EQ(c3.simple_roots.column(1), eps({0, 1, -1}));
  EXPECT_EQ(c3.simple_roots.column(2), eps({0, 0, 2}));
  auto d4 = build_root_system(DynkinType::make('D', 4));
  EXPECT_EQ(d4.simple_roots.column(2), eps({0, 0, 1, -1}));
  EXPECT_EQ(d4.simple_roots.column(3), eps({0, 0, 1, 1}));
}

TEST(Weyl, Orders) {
  auto order = [](char f, std::size_t n) { return weyl_group(build_root_system(DynkinType::make(f, n)))->order(); };
  EXPECT_EQ(order('A', 2), 6u);
  EXPECT_EQ(order('A', 4), 120u);
  EXPECT_EQ(order('B', 3), 48u);
  EXPECT_EQ(order('C', 3), 48u);
  EXPECT_EQ(order('D', 4), 192u);
  EXPECT_EQ(order('F', 4), 1152u);
  EXPECT_EQ(order('G', 2), 12u);
  EXPECT_EQ(order('E', 6), 51840u);
  auto c3 = build_root_system(DynkinType::make('C', 3));
  EXPECT_EQ(weyl_group_root_basis(c3)->order(), 48u);
  EXPECT_EQ(weyl_group_ambient(c3)->order(), 48u);
  EXPECT_THROW(weyl_group_ambient(build_root_system(DynkinType::make('F', 4))), InvalidInput);
}

TEST(Lattices, ConnectionIndex) {
  std::vector<std::pair<DynkinType, long long>> cases{{DynkinType::make('G', 2), 1},
                                                      {DynkinType::make('A', 2), 3},
                                                      {DynkinType::make('C', 3), 2},
                                                      {DynkinType::make('D', 4), 4},
                                                      {DynkinType::make('E', 6), 3},
                                                      {DynkinType::make('F', 4), 1}};
  for (const auto& [t, idx] : cases) {
    SCOPED_TRACE(t.to_string());
    auto rs = build_root_system(t);
    auto p = lattice_pair(rs);
    EXPECT_EQ(p.connection_index, Integer(idx));
    auto q = quotient_group(IntMatrix::identity(rs.rank()), p.inclusion.matrix());
    EXPECT_EQ(q.invariants().order(), Integer(idx));
    EXPECT_EQ(rank(p.inclusion.matrix()), rs.rank());
  }
  // D4: P/Q = (Z/2)^2
  auto d4 = lattice_pair(build_root_system(DynkinType::make('D', 4)));
  EXPECT_EQ(cokernel_invariants(d4.inclusion.matrix()), AbelianGroupInvariants::from_cyclic_orders({Integer(2), Integer(2)}));
}

TEST(Duality, Types) {
  EXPECT_EQ(dual_type(DynkinType::make('B', 3)), DynkinType::make('C', 3));
  EXPECT_EQ(dual_type(DynkinType::make('C', 5)), DynkinType::make('B', 5));
  EXPECT_EQ(dual_type(DynkinType::make('A', 4)), DynkinType::make('A', 4));
  auto f4 = build_root_system(DynkinType::make('F', 4));
  auto co = dual_data(f4);
  auto id = identify_type(co.cartan);
  ASSERT_TRUE(id.has_value());
  EXPECT_EQ(id->type, DynkinType::make('F', 4));
  auto b3 = dual_data(build_root_system(DynkinType::make('B', 3)));
  EXPECT_EQ(identify_type(b3.cartan)->type, DynkinType::make('C', 3));
  EXPECT_EQ(b3.cartan, cartan_matrix(DynkinType::make('B', 3)).transpose());
}

TEST(Duality, WeightLatticeOfDualIsDualOfRootLattice) {
  for (const auto& t : all_types(4)) {
    SCOPED_TRACE(t.to_string());
    auto rs = build_root_system(t);
    auto co = dual_data(rs);
    auto pair = lattice_pair(rs);
    GLattice q0 = dual_lattice(pair.Q);
    GLattice pco = GLattice::from_generators(pair.P.group(), co.reflections_weight);
    auto res = iso_search(pco, q0, 2);
    EXPECT_EQ(res.status, SearchStatus::found) << res.reason;
  }
}

TEST(Duality, SameWeylGroupInAmbientCoordinates) {
  for (const auto& t : all_types(4)) {
    SCOPED_TRACE(t.to_string());
    auto rs = build_root_system(t);
    auto co = dual_data(rs);
    for (std::size_t j = 0; j < rs.rank(); ++j) EXPECT_EQ(rs.reflections_ambient[j], co.reflections_ambient[j]);
    // compare element sets through the images of the coroots in ambient coordinates
    auto w = weyl_group(rs), wc = weyl_group(co);
    std::set<std::string> ra, rb;
    auto act = [](const RootSystemData& r, const FiniteMatrixGroup& g, bool to_coroots, std::set<std::string>& out) {
      RatMatrix ctr(r.cartan.transpose()), ctinv = ctr.inverse();
      for (std::size_t e = 0; e < g.order(); ++e) {
        RatMatrix img = r.simple_roots * (ctinv * RatMatrix(g.matrix(e)) * ctr);
        std::string k;
        for (std::size_t j = 0; j < img.cols(); ++j) {
          RatVector a = r.simple_roots.column(j);
          Rational c = to_coroots ? Rational(2) / dot(a, a) : Rational(1);
          k += rat_vector_key(c * img.column(j)) + "|";
        }
        out.insert(k);
      }
    };
    act(rs, *w, true, ra);
    act(co, *wc, false, rb);
    EXPECT_EQ(ra.size(), w->order());
    EXPECT_EQ(ra, rb);
  }
}

TEST(Subdiagram, Search) {
  auto c = find_subdiagram(DynkinType::make('C', 5), DynkinType::make('C', 3));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(*c, (std::vector<std::size_t>{2, 3, 4}));
  auto d = find_subdiagram(DynkinType::make('E', 6), DynkinType::make('D', 4));
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(*d, (std::vector<std::size_t>{1, 3, 2, 4}));
  EXPECT_FALSE(find_subdiagram(DynkinType::make('A', 4), DynkinType::make('D', 4)).has_value());
  EXPECT_FALSE(find_subdiagram(DynkinType::make('B', 5), DynkinType::make('C', 3)).has_value());
  EXPECT_TRUE(find_subdiagram(DynkinType::make('E', 8), DynkinType::make('D', 4)).has_value());
  for (char f : {'B', 'C'})
    for (std::size_t n = 4; n <= 8; ++n)
      EXPECT_FALSE(find_subdiagram(DynkinType::make(f, n), DynkinType::make('D', 4)).has_value());
}

TEST(SubRootSystem, Examples) {
  auto c4 = build_root_system(DynkinType::make('C', 4));
  auto sub = sub_root_system(c4, {1, 2, 3});
  EXPECT_EQ(sub.data.type, DynkinType::make('C', 3));
  auto seq = root_subsystem_sequence(c4, sub);
  EXPECT_TRUE(seq.flags.all());
  EXPECT_EQ(seq.right().rank(), 1u);
  for (const auto& g : seq.right().actions()) EXPECT_TRUE(g.is_identity());
  EXPECT_EQ(seq.inner.source().group()->order(), 48u);

  auto whole = sub_root_system(c4, {0, 1, 2, 3});
  EXPECT_EQ(root_subsystem_sequence(c4, whole).right().rank(), 0u);

  auto d4 = build_root_system(DynkinType::make('D', 4));
  auto d3 = sub_root_system(d4, {1, 2, 3});
  EXPECT_EQ(d3.data.type, DynkinType::make('D', 3));
  EXPECT_EQ(d3.data.roots.size(), 12u);

  EXPECT_THROW(sub_root_system(d4, {0, 2}), InvalidInput);
  EXPECT_THROW(sub_root_system(d4, {0, 4}), InvalidInput);
  EXPECT_THROW(sub_root_system(d4, {1, 1}), InvalidInput);
  EXPECT_THROW(sub_root_system(d4, {}), InvalidInput);
}

TEST(Coincidence, F4AndD4WeightLattices) {
  auto f4 = build_root_system(DynkinType::make('F', 4));
  auto d4 = build_root_system(DynkinType::make('D', 4));
  // same Z-span of fundamental weights in Q^4
  auto x = f4.fundamental_weights.solve(d4.fundamental_weights);
  ASSERT_TRUE(x.has_value());
  ASSERT_TRUE(x->is_integral());
  EXPECT_TRUE(abs(determinant(x->to_int())).is_one());
  auto wf = weyl_group(f4);
  auto wd = weyl_group_ambient(d4);
  for (std::size_t e = 0; e < wd->order(); ++e) {
    IntMatrix g = ambient_to_weight_basis(f4, RatMatrix(wd->matrix(e)));
    EXPECT_TRUE(wf->contains(g));
  }
}
