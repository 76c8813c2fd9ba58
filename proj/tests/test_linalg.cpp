#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "weylcoh/errors.hpp"
#include "weylcoh/linalg.hpp"

using namespace weylcoh;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

void expect_valid_snf(const IntMatrix& a, const SmithDecomposition& s) {
  ASSERT_EQ(s.U * a * s.V, s.D);
  EXPECT_TRUE(is_unimodular(s.U));
  EXPECT_TRUE(is_unimodular(s.V));
  EXPECT_TRUE((s.U * s.U_inv).is_identity());
  EXPECT_TRUE(s.D.is_diagonal());
  std::size_t k = std::min(a.rows(), a.cols());
  for (std::size_t i = 0; i < k; ++i) {
    EXPECT_GE(s.D(i, i).sign(), 0);
    if (i + 1 < k) EXPECT_TRUE(Integer::divides(s.D(i, i), s.D(i + 1, i + 1)));
  }
}

// gcd of all k x k minors, by cofactor expansion
Integer minor_det(const IntMatrix& a, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  if (rows.size() == 1) return a(rows[0], cols[0]);
  Integer s(0);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    std::vector<std::size_t> rr(rows.begin() + 1, rows.end()), cc;
    for (std::size_t t = 0; t < cols.size(); ++t)
      if (t != j) cc.push_back(cols[t]);
    Integer term = a(rows[0], cols[j]) * minor_det(a, rr, cc);
    if (j % 2) s -= term;
    else s += term;
  }
  return s;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

Integer determinantal_divisor(const IntMatrix& a, std::size_t k) {
  std::vector<std::vector<std::size_t>> rs, cs;
  std::vector<std::size_t> cur;
  subsets(a.rows(), k, 0, cur, rs);
  subsets(a.cols(), k, 0, cur, cs);
  Integer g(0);
  for (auto& r : rs)
    for (auto& c : cs) g = gcd(g, minor_det(a, r, c));
  return g;
}

}  // namespace

TEST(Smith, IdentityIsFixed) {
  auto s = smith_normal_form(IntMatrix::identity(2));
  EXPECT_EQ(s.D, IntMatrix::identity(2));
}

TEST(Smith, TwoByTwoExample) {
  IntMatrix a{{2, 4}, {6, 8}};
  auto s = smith_normal_form(a);
  expect_valid_snf(a, s);
  EXPECT_EQ(s.D, (IntMatrix{{2, 0}, {0, 4}}));
}

TEST(Smith, CoprimeDiagonalCombines) {
  IntMatrix a{{2, 0}, {0, 3}};
  auto s = smith_normal_form(a);
  expect_valid_snf(a, s);
  EXPECT_EQ(s.D, (IntMatrix{{1, 0}, {0, 6}}));
}

TEST(Smith, ZeroAndRectangular) {
  auto z = smith_normal_form(IntMatrix(3, 2));
  EXPECT_EQ(z.rank, 0u);
  IntMatrix a{{1, 2, 3}, {4, 5, 6}};
  auto s = smith_normal_form(a);
  expect_valid_snf(a, s);
  EXPECT_EQ(s.invariant_factors(), (IntVector{1, 3}));
}

TEST(Smith, DeterministicOutput) {
  std::mt19937_64 rng(7);
  IntMatrix a = random_matrix(rng, 5, 4, -9, 9);
  auto s1 = smith_normal_form(a), s2 = smith_normal_form(a);
  EXPECT_EQ(s1.U, s2.U);
  EXPECT_EQ(s1.V, s2.V);
}

TEST(Smith, LargeEntriesStayExact) {
  Integer big = Integer::from_string("123456789012345678901234567890");
  IntMatrix a(2, 2);
  a(0, 0) = big * Integer(6);
  a(0, 1) = big * Integer(4);
  a(1, 0) = big * Integer(9);
  a(1, 1) = Integer(3);
  auto s = smith_normal_form(a);
  expect_valid_snf(a, s);
  EXPECT_EQ(abs(determinant(a)), s.D(0, 0) * s.D(1, 1));
}

TEST(Smith, RandomReconstructionAndMinors) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntMatrix a = random_matrix(rng, r, c, -12, 12);
    if (trial % 5 == 0) a.row_submul(r - 1, 0, Integer(3));  // rank drop in some cases
    auto s = smith_normal_form(a);
    expect_valid_snf(a, s);
    Integer prod(1);
    for (std::size_t k = 1; k <= std::min(r, c); ++k) {
      prod *= s.D(k - 1, k - 1);
      EXPECT_EQ(prod, determinantal_divisor(a, k)) << a;
    }
    EXPECT_EQ(smith_invariant_factors(a), s.invariant_factors());
  }
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel_basis(IntMatrix::identity(3)).cols(), 0u);
  IntMatrix k = kernel_basis(IntMatrix{{1, 1}});
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_TRUE(k.column(0) == (IntVector{1, -1}) || k.column(0) == (IntVector{-1, 1}));
  IntMatrix a{{2, 4, 6}};
  IntMatrix k3 = kernel_basis(a);
  EXPECT_EQ(k3.cols(), 2u);
  EXPECT_TRUE((a * k3).is_zero());
  EXPECT_EQ(rank(k3), 2u);
  EXPECT_TRUE(is_saturated(k3));
}

TEST(Kernel, RandomAnnihilatedAndComplete) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 6;
    IntMatrix a = random_matrix(rng, r, c, -5, 5);
    IntMatrix k = kernel_basis(a);
    EXPECT_TRUE((a * k).is_zero());
    EXPECT_EQ(k.cols(), c - rank(a));
    EXPECT_EQ(rank(k), k.cols());
    EXPECT_TRUE(is_saturated(k));
  }
}

TEST(Cokernel, Examples) {
  EXPECT_TRUE(cokernel_invariants(IntMatrix::identity(3)).is_trivial());
  auto z = cokernel_invariants(IntMatrix(1, 1));
  EXPECT_EQ(z.free_rank, 1u);
  EXPECT_TRUE(z.torsion.empty());
  auto c = cokernel_invariants(IntMatrix{{2, 0}, {0, 3}});
  EXPECT_EQ(c.free_rank, 0u);
  EXPECT_EQ(c.torsion, (IntVector{6}));
  EXPECT_EQ(c.to_string(), "Z/6");
}

TEST(Cokernel, PermutationInvariance) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    IntMatrix a = random_matrix(rng, 4, 3, -6, 6);
    std::vector<std::size_t> rp{0, 1, 2, 3}, cp{0, 1, 2};
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    EXPECT_EQ(cokernel_invariants(a), cokernel_invariants(a.select_rows(rp).select_columns(cp)));
  }
}

TEST(Quotient, Examples) {
  auto same = quotient_group(IntMatrix::identity(2), IntMatrix::identity(2));
  EXPECT_TRUE(same.invariants().is_trivial());
  auto q = quotient_group(IntMatrix::identity(2), IntMatrix{{2, 0}, {0, 2}});
  EXPECT_EQ(q.invariants().torsion, (IntVector{2, 2}));
  auto z8 = quotient_group(IntMatrix{{1}}, IntMatrix{{8}});
  EXPECT_EQ(z8.invariants().torsion, (IntVector{8}));
  EXPECT_EQ(z8.project({3}), (IntVector{3}));
  EXPECT_TRUE(z8.is_zero_class({16}));
}

TEST(Quotient, NotContainedIsRejected) {
  try {
    quotient_group(IntMatrix{{2}}, IntMatrix{{3}});
    FAIL();
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("sub not contained in ambient"), std::string::npos);
  }
}

TEST(Quotient, ProjectionIsHomomorphism) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 40; ++t) {
    IntMatrix amb = random_matrix(rng, 4, 3, -3, 3);
    if (rank(amb) < 3) continue;
    IntMatrix coeffs = random_matrix(rng, 3, 2, -4, 4);
    IntMatrix sub = amb * coeffs;
    auto q = quotient_group(amb, sub);
    for (std::size_t j = 0; j < sub.cols(); ++j) EXPECT_TRUE(q.is_zero_class(sub.column(j)));
    IntVector x = amb * IntVector{1, 2, -1}, y = amb * IntVector{0, -3, 5};
    EXPECT_EQ(q.reduce(q.project(x) + q.project(y)), q.project(x + y));
    for (std::size_t i = 0; i < q.num_generators(); ++i) {
      IntVector e(q.num_generators(), Integer(0));
      e[i] = 1;
      EXPECT_EQ(q.project(q.lift(i)), q.reduce(e));
    }
  }
}

TEST(Quotient, SaturationQuotient) {
  auto q = QuotientGroup::saturation_quotient(IntMatrix{{2, 0}, {0, 6}, {0, 0}});
  EXPECT_EQ(q.invariants().torsion, (IntVector{2, 6}));
  EXPECT_EQ(q.invariants().free_rank, 0u);
}

TEST(AbelianMap, KernelOfMultiplication) {
  // Z/8 --x2--> Z/8 has kernel Z/2
  auto k = kernel_of_abelian_map(IntMatrix{{2}}, {8}, {8});
  EXPECT_EQ(k.invariants().torsion, (IntVector{2}));
  // Z/4 -> Z/2 + Z/2, 1 -> (1, 0): kernel Z/2
  auto k2 = kernel_of_abelian_map(IntMatrix{{1}, {0}}, {4}, {2, 2});
  EXPECT_EQ(k2.invariants().torsion, (IntVector{2}));
  // Z -> Z/3: kernel Z
  auto k3 = kernel_of_abelian_map(IntMatrix{{1}}, {0}, {3});
  EXPECT_EQ(k3.invariants().free_rank, 1u);
}

TEST(Misc, RankDeterminantSolve) {
  IntMatrix a{{1, 2}, {3, 4}};
  EXPECT_EQ(determinant(a), Integer(-2));
  EXPECT_EQ(rank(a), 2u);
  EXPECT_EQ(rank_mod_p(IntMatrix{{2, 4}, {1, 3}}, 2), 1u);
  auto x = solve_integer(a, {5, 11});
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, (IntVector{1, 2}));
  EXPECT_FALSE(solve_integer(IntMatrix{{2}}, {3}).has_value());
  EXPECT_EQ(saturation(IntMatrix{{2}, {4}}), (IntMatrix{{1}, {2}}));
}
