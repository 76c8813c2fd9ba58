#pragma once

// Arbitrary-precision integer with an inline 64-bit fast path.
//
// Values that fit in an int64_t are stored inline; anything larger spills
// into a heap-allocated mpz_t.  Every operation checks for overflow and
// promotes, so results are always exact.  A value is stored big only when
// it does not fit in 64 bits (the representation is canonical).

#include <gmp.h>
#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "weylcoh/errors.hpp"

namespace weylcoh {

class Integer {
 public:
  Integer() noexcept = default;

  template <std::signed_integral T>
  Integer(T v) noexcept : small_(static_cast<std::int64_t>(v)) {}  // NOLINT

  template <std::unsigned_integral T>
  Integer(T v) {  // NOLINT
    if (static_cast<std::uint64_t>(v) <=
        static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      small_ = static_cast<std::int64_t>(v);
    } else {
      mpz_class z;
      mpz_set_ui(z.get_mpz_t(), static_cast<unsigned long>(v));
      assign_mpz(z.get_mpz_t());
    }
  }

  explicit Integer(const mpz_class& z) { assign_mpz(z.get_mpz_t()); }

  /// Parses an optionally signed decimal literal.
  static Integer from_string(std::string_view s) {
    mpz_class z;
    std::string buf(s);
    if (buf.empty() || z.set_str(buf, 10) != 0)
      throw InvalidInput("not an integer literal: '" + buf + "'");
    return Integer(z);
  }

  Integer(const Integer& o) : small_(o.small_) {
    if (o.big_) {
      big_ = new __mpz_struct;
      mpz_init_set(big_, o.big_);
    }
  }
  Integer(Integer&& o) noexcept : small_(o.small_), big_(o.big_) {
    o.big_ = nullptr;
    o.small_ = 0;
  }
  Integer& operator=(const Integer& o) {
    if (this == &o) return *this;
    if (o.big_) {
      assign_mpz(o.big_);
    } else {
      release();
      small_ = o.small_;
    }
    return *this;
  }
  Integer& operator=(Integer&& o) noexcept {
    if (this == &o) return *this;
    release();
    small_ = o.small_;
    big_ = o.big_;
    o.big_ = nullptr;
    o.small_ = 0;
    return *this;
  }
  ~Integer() { release(); }

  bool is_small() const noexcept { return big_ == nullptr; }
  bool is_zero() const noexcept { return !big_ && small_ == 0; }
  bool is_one() const noexcept { return !big_ && small_ == 1; }
  int sign() const noexcept {
    if (big_) return mpz_sgn(big_);
    return (small_ > 0) - (small_ < 0);
  }
  bool fits_int64() const noexcept { return !big_; }
  std::int64_t to_int64() const {
    if (big_) throw std::overflow_error("Integer does not fit in int64");
    return small_;
  }

  mpz_class to_mpz() const {
    mpz_class z;
    if (big_)
      mpz_set(z.get_mpz_t(), big_);
    else
      mpz_set_si(z.get_mpz_t(), static_cast<long>(small_));
    return z;
  }

  std::string to_string() const {
    if (!big_) return std::to_string(small_);
    return to_mpz().get_str(10);
  }

  /// Residue in [0, p).
  std::uint64_t mod_u64(std::uint64_t p) const {
    if (!big_) {
      std::int64_t r = small_ % static_cast<std::int64_t>(p);
      if (r < 0) r += static_cast<std::int64_t>(p);
      return static_cast<std::uint64_t>(r);
    }
    return mpz_fdiv_ui(big_, static_cast<unsigned long>(p));
  }

  /// Appends a byte encoding that is injective on values.
  void append_key(std::string& out) const {
    if (!big_) {
      out.push_back('s');
      auto u = static_cast<std::uint64_t>(small_);
      for (int i = 7; i >= 0; --i) out.push_back(static_cast<char>((u >> (8 * i)) & 0xff));
    } else {
      out.push_back('b');
      std::string s = to_string();
      out.append(std::to_string(s.size()));
      out.push_back(':');
      out.append(s);
    }
  }

  // ---- arithmetic -------------------------------------------------------

  Integer operator-() const {
    if (!big_ && small_ != std::numeric_limits<std::int64_t>::min()) return Integer(-small_);
    mpz_class z = -to_mpz();
    return Integer(z);
  }

  Integer& operator+=(const Integer& o) {
    if (!big_ && !o.big_) {
      std::int64_t r;
      if (!__builtin_add_overflow(small_, o.small_, &r)) {
        small_ = r;
        return *this;
      }
    }
    mpz_class z = to_mpz() + o.to_mpz();
    assign_mpz(z.get_mpz_t());
    return *this;
  }
  Integer& operator-=(const Integer& o) {
    if (!big_ && !o.big_) {
      std::int64_t r;
      if (!__builtin_sub_overflow(small_, o.small_, &r)) {
        small_ = r;
        return *this;
      }
    }
    mpz_class z = to_mpz() - o.to_mpz();
    assign_mpz(z.get_mpz_t());
    return *this;
  }
  Integer& operator*=(const Integer& o) {
    if (!big_ && !o.big_) {
      std::int64_t r;
      if (!__builtin_mul_overflow(small_, o.small_, &r)) {
        small_ = r;
        return *this;
      }
    }
    mpz_class z = to_mpz() * o.to_mpz();
    assign_mpz(z.get_mpz_t());
    return *this;
  }

  /// *this += a * b
  void addmul(const Integer& a, const Integer& b) {
    if (!big_ && !a.big_ && !b.big_) {
      std::int64_t p, r;
      if (!__builtin_mul_overflow(a.small_, b.small_, &p) &&
          !__builtin_add_overflow(small_, p, &r)) {
        small_ = r;
        return;
      }
    }
    mpz_class z = to_mpz() + a.to_mpz() * b.to_mpz();
    assign_mpz(z.get_mpz_t());
  }
  /// *this -= a * b
  void submul(const Integer& a, const Integer& b) {
    if (!big_ && !a.big_ && !b.big_) {
      std::int64_t p, r;
      if (!__builtin_mul_overflow(a.small_, b.small_, &p) &&
          !__builtin_sub_overflow(small_, p, &r)) {
        small_ = r;
        return;
      }
    }
    mpz_class z = to_mpz() - a.to_mpz() * b.to_mpz();
    assign_mpz(z.get_mpz_t());
  }

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

  /// Quotient rounded toward zero.
  static Integer tdiv_q(const Integer& a, const Integer& b) {
    check_divisor(b);
    if (!a.big_ && !b.big_ &&
        !(a.small_ == std::numeric_limits<std::int64_t>::min() && b.small_ == -1))
      return Integer(a.small_ / b.small_);
    mpz_class q;
    mpz_tdiv_q(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Integer(q);
  }
  /// Quotient rounded toward negative infinity.
  static Integer fdiv_q(const Integer& a, const Integer& b) {
    check_divisor(b);
    if (!a.big_ && !b.big_ &&
        !(a.small_ == std::numeric_limits<std::int64_t>::min() && b.small_ == -1)) {
      std::int64_t q = a.small_ / b.small_;
      if ((a.small_ % b.small_ != 0) && ((a.small_ < 0) != (b.small_ < 0))) --q;
      return Integer(q);
    }
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Integer(q);
  }
  /// Remainder with 0 <= r < |b|.
  static Integer mod_nonneg(const Integer& a, const Integer& b) {
    check_divisor(b);
    if (!a.big_ && !b.big_ && b.small_ != std::numeric_limits<std::int64_t>::min()) {
      std::int64_t m = b.small_ < 0 ? -b.small_ : b.small_;
      std::int64_t r = a.small_ % m;
      if (r < 0) r += m;
      return Integer(r);
    }
    mpz_class r;
    mpz_class bb = abs(b.to_mpz());
    mpz_fdiv_r(r.get_mpz_t(), a.to_mpz().get_mpz_t(), bb.get_mpz_t());
    return Integer(r);
  }
  /// Quotient q minimizing |a - q b| (so the remainder is at most |b|/2).
  static Integer round_div(const Integer& a, const Integer& b) {
    Integer q = tdiv_q(a, b);
    Integer r = a;
    r.submul(q, b);
    if (r.is_zero()) return q;
    Integer twice_r = abs(r);
    twice_r += abs(r);
    if (twice_r > abs(b)) {
      if ((a.sign() < 0) == (b.sign() < 0))
        q += Integer(1);
      else
        q -= Integer(1);
    }
    return q;
  }
  /// Exact quotient; throws if b does not divide a.
  static Integer divexact(const Integer& a, const Integer& b) {
    Integer q = tdiv_q(a, b);
    Integer r = a;
    r.submul(q, b);
    if (!r.is_zero()) throw InvalidInput("divexact: not divisible");
    return q;
  }
  static bool divides(const Integer& d, const Integer& a) {
    if (d.is_zero()) return a.is_zero();
    return mod_nonneg(a, d).is_zero();
  }

  friend Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

  friend Integer gcd(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_ && a.small_ != std::numeric_limits<std::int64_t>::min() &&
        b.small_ != std::numeric_limits<std::int64_t>::min()) {
      std::int64_t x = a.small_ < 0 ? -a.small_ : a.small_;
      std::int64_t y = b.small_ < 0 ? -b.small_ : b.small_;
      while (y != 0) {
        std::int64_t t = x % y;
        x = y;
        y = t;
      }
      return Integer(x);
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Integer(g);
  }
  friend Integer lcm(const Integer& a, const Integer& b) {
    if (a.is_zero() || b.is_zero()) return Integer(0);
    return abs(divexact(a, gcd(a, b)) * b);
  }

  friend bool operator==(const Integer& a, const Integer& b) noexcept {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    if (a.big_ && b.big_) return mpz_cmp(a.big_, b.big_) == 0;
    return false;  // canonical representation
  }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept {
    if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
    int c;
    if (a.big_ && b.big_)
      c = mpz_cmp(a.big_, b.big_);
    else if (a.big_)
      c = mpz_sgn(a.big_);
    else
      c = -mpz_sgn(b.big_);
    return c <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Integer& a) {
    return os << a.to_string();
  }

 private:
  static void check_divisor(const Integer& b) {
    if (b.is_zero()) throw InvalidInput("division by zero");
  }

  void release() noexcept {
    if (big_) {
      mpz_clear(big_);
      delete big_;
      big_ = nullptr;
    }
  }

  void assign_mpz(mpz_srcptr z) {
    if (mpz_fits_slong_p(z)) {
      release();
      small_ = mpz_get_si(z);
      return;
    }
    if (!big_) {
      big_ = new __mpz_struct;
      mpz_init(big_);
    }
    mpz_set(big_, z);
  }

  std::int64_t small_ = 0;
  mpz_ptr big_ = nullptr;
};

static_assert(sizeof(long) == 8, "the mpz fast path assumes 64-bit long");

}  // namespace weylcoh
