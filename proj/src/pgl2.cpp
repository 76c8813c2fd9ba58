// Exact check of the rational section t -> [[1, 1], [1 - 4/t, 1]] of the
// quotient map PGL_2 -> A^1, [g] -> tr(g)^2 / det(g).

#include <array>

#include "weylcoh/rational.hpp"
#include "weylcoh/scenarios.hpp"
#include "scenario_util.hpp"

namespace weylcoh {

namespace {

// polynomial in t, coefficients from the constant term up
struct Poly {
  std::vector<Rational> c;

  Poly() = default;
  Poly(std::initializer_list<Rational> v) : c(v) { trim(); }
  static Poly t() { return Poly{Rational(0), Rational(1)}; }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c.assign(std::max(a.c.size(), b.c.size()), Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + b * Poly{Rational(-1)}; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
  Rational operator()(const Rational& x) const {
    Rational v(0);
    for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
    return v;
  }
  std::string to_string() const {
    if (c.empty()) return "0";
    std::string s;
    for (std::size_t i = c.size(); i-- > 0;) {
      if (c[i] == 0) continue;
      if (!s.empty()) s += " + ";
      s += "(" + rational_to_string(c[i]) + ")";
      if (i > 0) s += i == 1 ? "t" : "t^" + std::to_string(i);
    }
    return s;
  }
};

// num / den with den != 0
struct Frac {
  Poly num, den{Rational(1)};

  friend Frac operator+(const Frac& a, const Frac& b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
  friend Frac operator-(const Frac& a, const Frac& b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
  friend Frac operator*(const Frac& a, const Frac& b) { return {a.num * b.num, a.den * b.den}; }
  friend Frac operator/(const Frac& a, const Frac& b) { return {a.num * b.den, a.den * b.num}; }
  /// Equality of rational functions by cross-multiplication.
  bool equals(const Frac& o) const { return num * o.den == o.num * den; }
  Rational operator()(const Rational& x) const { return num(x) / den(x); }
};

Frac constant(const Rational& q) { return {Poly{q}, Poly{Rational(1)}}; }

using Mat2 = std::array<Frac, 4>;  // row-major

Frac trace(const Mat2& m) { return m[0] + m[3]; }
Frac det(const Mat2& m) { return m[0] * m[3] - m[1] * m[2]; }

std::string rat_matrix_string(const std::array<Rational, 4>& m) {
  return "[[" + rational_to_string(m[0]) + ", " + rational_to_string(m[1]) + "], [" + rational_to_string(m[2]) + ", " +
         rational_to_string(m[3]) + "]]";
}

}  // namespace

ScenarioReport pgl2_section_check() {
  return detail::timed("pgl2_section", [](ScenarioReport& r) {
    const Frac t{Poly::t(), Poly{Rational(1)}};
    const Frac one = constant(1);
    // sigma(t) = [[1, 1], [1 - 4/t, 1]]
    const Mat2 sigma{one, one, one - constant(4) / t, one};
    const Frac pi = trace(sigma) * trace(sigma) / det(sigma);
    r.check("tr(sigma(t))^2 / det(sigma(t)) = t as rational functions", pi.equals(t), "t",
            "(" + pi.num.to_string() + ") / (" + pi.den.to_string() + ")", Provenance::literature);

    for (Rational x : {Rational(4), Rational(1), Rational(-2), Rational(1, 3), Rational(7, 5)}) {
      std::array<Rational, 4> m{Rational(1), Rational(1), Rational(1) - Rational(4) / x, Rational(1)};
      Rational tr = m[0] + m[3], d = m[0] * m[3] - m[1] * m[2];
      Rational q = tr * tr / d;
      r.expect("pi(sigma(" + rational_to_string(x) + ")) with sigma = " + rat_matrix_string(m), rational_to_string(x),
               rational_to_string(q), Provenance::literature);
    }

    // Cayley map [g] -> (2 / tr g) g - I lands on s(t') = [[0, 1], [-t', 0]] with t' = -1 + 4/t
    const Frac c = constant(2) / trace(sigma);
    const Mat2 cay{c * sigma[0] - one, c * sigma[1], c * sigma[2], c * sigma[3] - one};
    const Frac tp = constant(-1) + constant(4) / t;
    const Mat2 s{constant(0), one, constant(0) - tp, constant(0)};
    bool same = true;
    for (std::size_t i = 0; i < 4; ++i) same = same && cay[i].equals(s[i]);
    r.check("Cayley(sigma(t)) = [[0, 1], [-(-1 + 4/t), 0]]", same, "yes", same ? "yes" : "no", Provenance::literature);
    r.check("det of the Cayley image is -1 + 4/t", det(cay).equals(tp), "-1 + 4/t",
            "(" + det(cay).num.to_string() + ") / (" + det(cay).den.to_string() + ")", Provenance::derived);
    // both quotient maps agree: det(Cayley(g)) = 4 / pi(g) - 1
    r.check("det(Cayley(sigma(t))) = 4 / pi(sigma(t)) - 1", det(cay).equals(constant(4) / pi - one), "yes",
            det(cay).equals(constant(4) / pi - one) ? "yes" : "no", Provenance::derived);
    const Mat2 lie{constant(0), one, constant(0) - t, constant(0)};
    r.check("det [[0, 1], [-t, 0]] = t", det(lie).equals(t), "t", det(lie).num.to_string(), Provenance::literature);
  });
}

}  // namespace weylcoh
