#include "weylcoh/linalg.hpp"
#include "weylcoh/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace weylcoh {

namespace {

struct Pivot {
  std::size_t row, col;
};

// Smallest nonzero |a(i,j)| over i, j >= t; ties to the lowest (row, col).
std::optional<Pivot> find_pivot(const IntMatrix& a, std::size_t t) {
  std::optional<Pivot> best;
  Integer best_abs;
  for (std::size_t i = t; i < a.rows(); ++i) {
    auto r = a.row(i);
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (r[j].is_zero()) continue;
      Integer v = abs(r[j]);
      if (!best || v < best_abs) {
        best = Pivot{i, j};
        best_abs = std::move(v);
        if (best_abs.is_one()) return best;
      }
    }
  }
  return best;
}

}  // namespace

IntVector SmithDecomposition::invariant_factors() const {
  IntVector d;
  for (std::size_t i = 0; i < rank; ++i) d.push_back(D(i, i));
  return d;
}

SmithDecomposition smith_normal_form(const IntMatrix& input, SmithOptions opts) {
  const std::size_t m = input.rows(), n = input.cols();
  SmithDecomposition out;
  IntMatrix a = input;
  IntMatrix u, u_inv, v;
  if (opts.track_u) {
    u = IntMatrix::identity(m);
    u_inv = IntMatrix::identity(m);
  }
  if (opts.track_v) v = IntMatrix::identity(n);

  auto swap_rows = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    a.swap_rows(x, y);
    if (opts.track_u) {
      u.swap_rows(x, y);
      u_inv.swap_columns(x, y);
    }
  };
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    a.swap_columns(x, y);
    if (opts.track_v) v.swap_columns(x, y);
  };
  // row[dst] -= q row[src]
  auto row_op = [&](std::size_t dst, std::size_t src, const Integer& q) {
    a.row_submul(dst, src, q);
    if (opts.track_u) {
      u.row_submul(dst, src, q);
      // inverse elementary op acts on columns: col[src] += q col[dst]
      u_inv.col_submul(src, dst, -q);
    }
  };
  auto col_op = [&](std::size_t dst, std::size_t src, const Integer& q) {
    a.col_submul(dst, src, q);
    if (opts.track_v) v.col_submul(dst, src, q);
  };
  auto move_pivot = [&](std::size_t t, const Pivot& p) {
    swap_rows(t, p.row);
    swap_cols(t, p.col);
  };

  std::size_t t = 0;
  const std::size_t limit = std::min(m, n);
  while (t < limit) {
    auto p = find_pivot(a, t);
    if (!p) break;
    move_pivot(t, *p);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t).is_zero()) continue;
        Integer q = Integer::round_div(a(i, t), a(t, t));
        row_op(i, t, q);
        if (!a(i, t).is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j).is_zero()) continue;
        Integer q = Integer::round_div(a(t, j), a(t, t));
        col_op(j, t, q);
        if (!a(t, j).is_zero()) clean = false;
      }
      if (!clean) {
        move_pivot(t, *find_pivot(a, t));
        continue;
      }
      // divisibility of the remaining block by the pivot
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < m && !bad_row; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!a(i, j).is_zero() && !Integer::divides(a(t, t), a(i, j))) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      row_op(t, *bad_row, Integer(-1));
    }
    if (a(t, t).sign() < 0) {
      a.negate_row(t);
      if (opts.track_u) {
        u.negate_row(t);
        u_inv.negate_column(t);
      }
    }
    ++t;
  }
  out.rank = t;
  out.D = std::move(a);
  out.U = std::move(u);
  out.U_inv = std::move(u_inv);
  out.V = std::move(v);
  return out;
}

IntVector smith_invariant_factors(const IntMatrix& a) {
  // Row Hermite form first: it preserves the row lattice and shrinks tall
  // matrices to at most cols rows before the two-sided reduction.
  IntMatrix h = hermite_rows(a);
  return smith_normal_form(h, {false, false}).invariant_factors();
}

AbelianGroupInvariants AbelianGroupInvariants::from_cyclic_orders(const IntVector& orders, std::size_t free_rank) {
  AbelianGroupInvariants g;
  g.free_rank = free_rank;
  IntVector nz;
  for (const auto& o : orders) {
    if (o.is_zero())
      ++g.free_rank;
    else if (!abs(o).is_one())
      nz.push_back(abs(o));
  }
  if (nz.empty()) return g;
  IntVector d = smith_normal_form(IntMatrix::diagonal(nz), {false, false}).invariant_factors();
  for (auto& x : d)
    if (!x.is_one()) g.torsion.push_back(x);
  return g;
}

Integer AbelianGroupInvariants::exponent() const {
  if (free_rank > 0) return Integer(0);
  if (torsion.empty()) return Integer(1);
  return torsion.back();
}

Integer AbelianGroupInvariants::order() const {
  if (free_rank > 0) return Integer(0);
  Integer o(1);
  for (const auto& t : torsion) o *= t;
  return o;
}

std::string AbelianGroupInvariants::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : torsion) {
    if (!first) os << " + ";
    os << "Z/" << t;
    first = false;
  }
  if (free_rank > 0) {
    if (!first) os << " + ";
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
  }
  return os.str();
}

AbelianGroupInvariants cokernel_invariants(const IntMatrix& a) {
  IntVector d = smith_invariant_factors(a);
  AbelianGroupInvariants g;
  g.free_rank = a.rows() - d.size();
  for (auto& x : d)
    if (!x.is_one()) g.torsion.push_back(x);
  return g;
}

IntMatrix hermite_rows(const IntMatrix& a) {
  const std::size_t n = a.cols();
  std::vector<IntVector> rows;
  rows.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto r = a.row(i);
    bool nz = std::any_of(r.begin(), r.end(), [](const Integer& x) { return !x.is_zero(); });
    if (nz) rows.emplace_back(r.begin(), r.end());
  }
  auto submul = [](IntVector& dst, const IntVector& src, const Integer& q, std::size_t from) {
    if (q.is_zero()) return;
    for (std::size_t j = from; j < dst.size(); ++j)
      if (!src[j].is_zero()) dst[j].submul(q, src[j]);
  };
  std::size_t r = 0;
  for (std::size_t j = 0; j < n && r < rows.size(); ++j) {
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t i = r; i < rows.size(); ++i)
        if (!rows[i][j].is_zero() && (!best || abs(rows[i][j]) < abs(rows[*best][j]))) best = i;
      if (!best) break;
      std::swap(rows[r], rows[*best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][j].is_zero()) continue;
        submul(rows[i], rows[r], Integer::round_div(rows[i][j], rows[r][j]), j);
        if (!rows[i][j].is_zero()) clean = false;
      }
      // drop rows that became zero
      std::size_t w = r + 1;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        bool nz = std::any_of(rows[i].begin() + static_cast<std::ptrdiff_t>(j), rows[i].end(),
                              [](const Integer& x) { return !x.is_zero(); });
        if (nz) {
          if (w != i) rows[w] = std::move(rows[i]);
          ++w;
        }
      }
      rows.resize(w);
      if (clean) {
        if (rows[r][j].sign() < 0)
          for (auto& x : rows[r]) x = -x;
        for (std::size_t k = 0; k < r; ++k)
          submul(rows[k], rows[r], Integer::fdiv_q(rows[k][j], rows[r][j]), j);
        ++r;
        break;
      }
    }
  }
  rows.resize(r);
  IntMatrix h(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = std::move(rows[i][j]);
  return h;
}

std::size_t rank(const IntMatrix& a) { return hermite_rows(a).rows(); }

std::size_t rank_mod_p(const IntMatrix& a, std::uint64_t p) {
  using u128 = unsigned __int128;
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<std::uint64_t> x(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) x[i * n + j] = a(i, j).mod_u64(p);
  auto mulmod = [p](std::uint64_t u, std::uint64_t w) { return static_cast<std::uint64_t>((u128)u * w % p); };
  auto powmod = [&](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, b);
      b = mulmod(b, b);
      e >>= 1;
    }
    return r;
  };
  std::size_t r = 0;
  for (std::size_t j = 0; j < n && r < m; ++j) {
    std::size_t piv = r;
    while (piv < m && x[piv * n + j] == 0) ++piv;
    if (piv == m) continue;
    if (piv != r)
      for (std::size_t k = 0; k < n; ++k) std::swap(x[piv * n + k], x[r * n + k]);
    std::uint64_t inv = powmod(x[r * n + j], p - 2);
    for (std::size_t i = r + 1; i < m; ++i) {
      std::uint64_t f = x[i * n + j];
      if (f == 0) continue;
      f = mulmod(f, inv);
      for (std::size_t k = j; k < n; ++k) {
        std::uint64_t s = x[r * n + k];
        if (s == 0) continue;
        std::uint64_t t = mulmod(f, s);
        x[i * n + k] = x[i * n + k] >= t ? x[i * n + k] - t : x[i * n + k] + p - t;
      }
    }
    ++r;
  }
  return r;
}

Integer determinant(const IntMatrix& input) {
  if (!input.is_square()) throw InvalidInput("determinant: matrix not square");
  const std::size_t n = input.rows();
  if (n == 0) return Integer(1);
  IntMatrix a = input;
  Integer sign(1), prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t s = k + 1;
      while (s < n && a(s, k).is_zero()) ++s;
      if (s == n) return Integer(0);
      a.swap_rows(k, s);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k);
        v.submul(a(i, k), a(k, j));
        a(i, j) = Integer::divexact(v, prev);
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& a) { return a.is_square() && abs(determinant(a)).is_one(); }

std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows()) throw InvalidInput("solve_integer: size mismatch");
  auto snf = smith_normal_form(a);
  IntVector y = snf.U * b;
  for (std::size_t i = snf.rank; i < y.size(); ++i)
    if (!y[i].is_zero()) return std::nullopt;
  IntVector z(a.cols());
  for (std::size_t i = 0; i < snf.rank; ++i) {
    if (!Integer::divides(snf.D(i, i), y[i])) return std::nullopt;
    z[i] = Integer::divexact(y[i], snf.D(i, i));
  }
  return snf.V * z;
}

bool is_saturated(const IntMatrix& columns) {
  for (const auto& d : smith_invariant_factors(columns))
    if (!d.is_one()) return false;
  return true;
}

IntMatrix saturation(const IntMatrix& columns) {
  auto snf = smith_normal_form(columns, {true, false});
  std::vector<std::size_t> idx(snf.rank);
  std::iota(idx.begin(), idx.end(), 0);
  IntMatrix s = snf.U_inv.select_columns(idx);
  return hermite_rows(s.transpose()).transpose();
}

IntMatrix kernel_basis(const IntMatrix& a) {
  const std::size_t n = a.cols();
  IntMatrix r = hermite_rows(a);
  // Column-reduce the echelon form, tracking the transform.
  IntMatrix v = IntMatrix::identity(n);
  std::size_t c = 0;
  for (std::size_t i = 0; i < r.rows() && c < n; ++i) {
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t j = c; j < n; ++j)
        if (!r(i, j).is_zero() && (!best || abs(r(i, j)) < abs(r(i, *best)))) best = j;
      if (!best) break;
      r.swap_columns(c, *best);
      v.swap_columns(c, *best);
      bool clean = true;
      for (std::size_t j = c + 1; j < n; ++j) {
        if (r(i, j).is_zero()) continue;
        Integer q = Integer::round_div(r(i, j), r(i, c));
        r.col_submul(j, c, q);
        v.col_submul(j, c, q);
        if (!r(i, j).is_zero()) clean = false;
      }
      if (clean) {
        ++c;
        break;
      }
    }
  }
  std::vector<std::size_t> idx;
  for (std::size_t j = c; j < n; ++j) idx.push_back(j);
  IntMatrix k = v.select_columns(idx);
  if (k.cols() == 0) return IntMatrix(n, 0);
  return hermite_rows(k.transpose()).transpose();
}

// ---- QuotientGroup ---------------------------------------------------------

QuotientGroup QuotientGroup::saturation_quotient(const IntMatrix& sub_basis) {
  return saturation_quotient(smith_normal_form(sub_basis, {true, false}), sub_basis.rows());
}

QuotientGroup QuotientGroup::saturation_quotient(const SmithDecomposition& snf, std::size_t ambient_dim) {
  QuotientGroup q;
  q.ambient_dim_ = ambient_dim;
  std::vector<std::size_t> keep, outside;
  for (std::size_t i = 0; i < snf.rank; ++i)
    if (!snf.D(i, i).is_one()) keep.push_back(i);
  for (std::size_t i = snf.rank; i < ambient_dim; ++i) outside.push_back(i);
  q.pre_ = snf.U.select_rows(keep);
  q.pre_div_.assign(keep.size(), Integer(1));
  q.membership_ = snf.U.select_rows(outside);
  q.post_identity_ = true;
  for (std::size_t i : keep) q.moduli_.push_back(snf.D(i, i));
  q.lifts_ = snf.U_inv.select_columns(keep);
  if (keep.empty()) q.lifts_ = IntMatrix(ambient_dim, 0);
  q.invariants_.torsion = q.moduli_;
  return q;
}

QuotientGroup QuotientGroup::of(const IntMatrix& ambient_basis, const IntMatrix& sub_basis) {
  const std::size_t dim = ambient_basis.rows();
  if (sub_basis.rows() != dim && !(sub_basis.cols() == 0))
    throw InvalidInput("quotient_group: dimension mismatch");
  const std::size_t a = ambient_basis.cols();
  auto za = smith_normal_form(ambient_basis);
  if (za.rank != a) throw InvalidInput("quotient_group: ambient basis is not linearly independent");

  QuotientGroup q;
  q.ambient_dim_ = dim;
  std::vector<std::size_t> inside(a), outside;
  std::iota(inside.begin(), inside.end(), 0);
  for (std::size_t i = a; i < dim; ++i) outside.push_back(i);
  IntMatrix pre = za.U.select_rows(inside);
  IntVector pre_div = za.invariant_factors();
  IntMatrix membership = za.U.select_rows(outside);

  // coordinates of the sublattice generators in the ambient basis
  IntMatrix coords(a, sub_basis.cols());
  for (std::size_t j = 0; j < sub_basis.cols(); ++j) {
    IntVector x = sub_basis.column(j);
    if (!is_zero_vector(membership * x)) throw InvalidInput("sub not contained in ambient");
    IntVector y = pre * x;
    for (std::size_t i = 0; i < a; ++i) {
      if (!Integer::divides(pre_div[i], y[i])) throw InvalidInput("sub not contained in ambient");
      y[i] = Integer::divexact(y[i], pre_div[i]);
    }
    coords.set_column(j, za.V * y);
  }
  auto cs = smith_normal_form(coords, {true, false});
  std::vector<std::size_t> torsion_idx, free_idx;
  for (std::size_t i = 0; i < cs.rank; ++i)
    if (!cs.D(i, i).is_one()) torsion_idx.push_back(i);
  for (std::size_t i = cs.rank; i < a; ++i) free_idx.push_back(i);
  std::vector<std::size_t> sel = torsion_idx;
  sel.insert(sel.end(), free_idx.begin(), free_idx.end());

  q.pre_ = std::move(pre);
  q.pre_div_ = std::move(pre_div);
  q.membership_ = std::move(membership);
  q.post_ = (cs.U * za.V).select_rows(sel);
  for (std::size_t i : torsion_idx) q.moduli_.push_back(cs.D(i, i));
  for (std::size_t k = 0; k < free_idx.size(); ++k) q.moduli_.emplace_back(0);
  q.lifts_ = sel.empty() ? IntMatrix(dim, 0) : ambient_basis * cs.U_inv.select_columns(sel);
  for (std::size_t i : torsion_idx) q.invariants_.torsion.push_back(cs.D(i, i));
  q.invariants_.free_rank = free_idx.size();
  return q;
}

bool QuotientGroup::contains(const IntVector& x) const {
  if (x.size() != ambient_dim_) return false;
  if (!is_zero_vector(membership_ * x)) return false;
  IntVector y = pre_ * x;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!Integer::divides(pre_div_[i], y[i])) return false;
  return true;
}

IntVector QuotientGroup::project(const IntVector& x) const {
  if (x.size() != ambient_dim_) throw InvalidInput("project: dimension mismatch");
  if (!is_zero_vector(membership_ * x)) throw InvalidInput("project: vector outside the ambient lattice");
  IntVector y = pre_ * x;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!Integer::divides(pre_div_[i], y[i])) throw InvalidInput("project: vector outside the ambient lattice");
    if (!pre_div_[i].is_one()) y[i] = Integer::divexact(y[i], pre_div_[i]);
  }
  if (!post_identity_) y = post_ * y;
  return reduce(std::move(y));
}

bool QuotientGroup::is_zero_class(const IntVector& x) const { return is_zero_vector(project(x)); }

IntVector QuotientGroup::reduce(IntVector coords) const {
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!moduli_[i].is_zero()) coords[i] = Integer::mod_nonneg(coords[i], moduli_[i]);
  return coords;
}

QuotientGroup kernel_of_abelian_map(const IntMatrix& map, const IntVector& src_moduli, const IntVector& dst_moduli) {
  const std::size_t k = src_moduli.size(), m = dst_moduli.size();
  if (map.rows() != m || map.cols() != k) throw InvalidInput("kernel_of_abelian_map: shape mismatch");
  // {x : map x ∈ diag(dst) Z^m}
  IntMatrix sys(m, k + m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) sys(i, j) = map(i, j);
    sys(i, k + i) = -dst_moduli[i];
  }
  IntMatrix ker = kernel_basis(sys);
  std::vector<std::size_t> xs(k);
  std::iota(xs.begin(), xs.end(), 0);
  IntMatrix span = ker.select_rows(xs);
  IntMatrix basis = hermite_rows(span.transpose()).transpose();
  if (basis.cols() == 0) basis = IntMatrix(k, 0);
  std::vector<IntVector> rel;
  for (std::size_t i = 0; i < k; ++i) {
    if (src_moduli[i].is_zero()) continue;
    IntVector e(k);
    e[i] = src_moduli[i];
    rel.push_back(std::move(e));
  }
  return QuotientGroup::of(basis, IntMatrix::from_columns(rel, k));
}

}  // namespace weylcoh
