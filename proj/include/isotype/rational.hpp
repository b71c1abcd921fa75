#pragma once

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <string>
#include <string_view>
#include <utility>

#include <gmp.h>

#include "isotype/error.hpp"

namespace isotype {

// Exact rational number. Values that fit stay in a pair of int64 (reduced,
// positive denominator); anything larger is promoted to a heap mpq_t and
// demoted back as soon as it fits again. The whole engine runs on these, so
// the small path is branch-light and allocation-free.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}

  Rational(long long n, long long d) : num_(0), den_(1) {
    if (d == 0)
      throw Error("Rational: zero denominator");
    assign_reduced((i128)n, (i128)d);
  }

  Rational(const Rational &o) : num_(o.num_), den_(o.den_) {
    if (o.is_big())
      num_ = reinterpret_cast<long long>(clone_box(o.box()));
  }
  Rational(Rational &&o) noexcept : num_(o.num_), den_(o.den_) {
    o.num_ = 0;
    o.den_ = 1;
  }
  Rational &operator=(const Rational &o) {
    if (this != &o) {
      Rational tmp(o);
      swap(tmp);
    }
    return *this;
  }
  Rational &operator=(Rational &&o) noexcept {
    swap(o);
    return *this;
  }
  ~Rational() {
    if (is_big())
      free_self_box();
  }

  void swap(Rational &o) noexcept {
    std::swap(num_, o.num_);
    std::swap(den_, o.den_);
  }

  bool is_zero() const { return is_big() ? mpq_sgn(box()) == 0 : num_ == 0; }
  bool is_one() const { return !is_big() && num_ == 1 && den_ == 1; }
  int sign() const {
    if (is_big())
      return mpq_sgn(box());
    return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
  }

  friend Rational operator+(const Rational &a, const Rational &b) {
    if (!a.is_big() && !b.is_big()) {
      i128 n = (i128)a.num_ * b.den_ + (i128)b.num_ * a.den_;
      i128 d = (i128)a.den_ * b.den_;
      Rational r;
      if (r.try_assign_reduced(n, d))
        return r;
    }
    return big_op(a, b, mpq_add);
  }
  friend Rational operator-(const Rational &a, const Rational &b) {
    if (!a.is_big() && !b.is_big()) {
      i128 n = (i128)a.num_ * b.den_ - (i128)b.num_ * a.den_;
      i128 d = (i128)a.den_ * b.den_;
      Rational r;
      if (r.try_assign_reduced(n, d))
        return r;
    }
    return big_op(a, b, mpq_sub);
  }
  friend Rational operator*(const Rational &a, const Rational &b) {
    if (!a.is_big() && !b.is_big()) {
      // cross-reduce so 128-bit intermediates rarely need the slow path
      long long g1 = gcd_ll(a.num_, b.den_);
      long long g2 = gcd_ll(b.num_, a.den_);
      i128 n = (i128)(a.num_ / g1) * (b.num_ / g2);
      i128 d = (i128)(a.den_ / g2) * (b.den_ / g1);
      Rational r;
      if (r.try_assign_reduced(n, d))
        return r;
    }
    return big_op(a, b, mpq_mul);
  }
  friend Rational operator/(const Rational &a, const Rational &b) {
    if (b.is_zero())
      throw Error("Rational: division by zero");
    if (!a.is_big() && !b.is_big()) {
      long long g1 = gcd_ll(a.num_, b.num_);
      long long g2 = gcd_ll(b.den_, a.den_);
      i128 n = (i128)(a.num_ / g1) * (b.den_ / g2);
      i128 d = (i128)(a.den_ / g2) * (b.num_ / g1);
      Rational r;
      if (r.try_assign_reduced(n, d))
        return r;
    }
    return big_op(a, b, mpq_div);
  }

  Rational operator-() const {
    if (!is_big() && num_ != std::numeric_limits<long long>::min()) {
      Rational r;
      r.num_ = -num_;
      r.den_ = den_;
      return r;
    }
    Rational r = to_big_copy();
    mpq_neg(r.box(), r.box());
    r.demote();
    return r;
  }

  Rational &operator+=(const Rational &b) { return *this = *this + b; }
  Rational &operator-=(const Rational &b) { return *this = *this - b; }
  Rational &operator*=(const Rational &b) { return *this = *this * b; }
  Rational &operator/=(const Rational &b) { return *this = *this / b; }

  friend bool operator==(const Rational &a, const Rational &b) {
    if (!a.is_big() && !b.is_big())
      return a.num_ == b.num_ && a.den_ == b.den_; // both canonical
    mpq_t ta, tb;
    a.as_mpq(ta);
    b.as_mpq(tb);
    bool eq = mpq_equal(ta, tb) != 0;
    a.release_mpq(ta);
    b.release_mpq(tb);
    return eq;
  }
  friend bool operator!=(const Rational &a, const Rational &b) {
    return !(a == b);
  }

  // Strict syntax: -?digits(/digits)?  with arbitrary-precision digits.
  static Rational parse(std::string_view text) {
    if (text.empty())
      throw ParseError("empty scalar literal");
    size_t slash = text.find('/');
    std::string_view ns = text.substr(0, slash == text.npos ? text.size() : slash);
    std::string_view ds =
        slash == text.npos ? std::string_view("1") : text.substr(slash + 1);
    if (!digits_ok(ns, true) || !digits_ok(ds, false))
      throw ParseError("malformed scalar literal '" + std::string(text) + "'");
    if (ns.size() <= 18 && ds.size() <= 18) {
      long long n = std::strtoll(std::string(ns).c_str(), nullptr, 10);
      long long d = std::strtoll(std::string(ds).c_str(), nullptr, 10);
      if (d == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
      return Rational(n, d);
    }
    Rational r;
    r.make_big();
    if (mpz_set_str(mpq_numref(r.box()), std::string(ns).c_str(), 10) != 0 ||
        mpz_set_str(mpq_denref(r.box()), std::string(ds).c_str(), 10) != 0)
      throw ParseError("malformed scalar literal '" + std::string(text) + "'");
    if (mpz_sgn(mpq_denref(r.box())) == 0)
      throw ParseError("zero denominator in '" + std::string(text) + "'");
    mpq_canonicalize(r.box());
    r.demote();
    return r;
  }

  std::string str() const {
    if (is_big()) {
      char *s = mpq_get_str(nullptr, 10, box());
      std::string out(s);
      std::free(s);
      return out;
    }
    std::string out = std::to_string(num_);
    if (den_ != 1)
      out += "/" + std::to_string(den_);
    return out;
  }

  // exposed for tests exercising the promotion machinery
  bool is_promoted() const { return is_big(); }

  // numerator/denominator as strings (stable independent of representation)
  std::string num_str() const {
    if (!is_big())
      return std::to_string(num_);
    char *s = mpz_get_str(nullptr, 10, mpq_numref(box()));
    std::string out(s);
    std::free(s);
    return out;
  }

private:
  using i128 = __int128;
  using u128 = unsigned __int128;

  long long num_; // big: holds mpq_t* ; small: numerator
  long long den_; // 0 = big, otherwise positive denominator

  struct BigBox {
    mpq_t q;
  };

  bool is_big() const { return den_ == 0; }
  mpq_ptr box() const {
    return reinterpret_cast<BigBox *>(num_)->q;
  }

  static BigBox *new_box() {
    BigBox *b = new BigBox;
    mpq_init(b->q);
    return b;
  }
  static BigBox *clone_box(mpq_srcptr src) {
    BigBox *b = new_box();
    mpq_set(b->q, src);
    return b;
  }
  void free_self_box() {
    BigBox *b = reinterpret_cast<BigBox *>(num_);
    mpq_clear(b->q);
    delete b;
  }

  void make_big() {
    if (!is_big()) {
      BigBox *b = new_box();
      mpq_set_si(b->q, num_, 1);
      mpz_set_si(mpq_denref(b->q), den_);
      mpq_canonicalize(b->q); // already reduced; normalizes sign conventions
      num_ = reinterpret_cast<long long>(b);
      den_ = 0;
    }
  }

  Rational to_big_copy() const {
    Rational r(*this);
    r.make_big();
    return r;
  }

  // view as mpq without copying when big; temp init when small
  void as_mpq(mpq_t out) const {
    if (is_big()) {
      out[0] = *box(); // shallow view, must not be cleared
    } else {
      mpq_init(out);
      mpq_set_si(out, num_, 1);
      mpz_set_si(mpq_denref(out), den_);
    }
  }
  void release_mpq(mpq_t t) const {
    if (!is_big())
      mpq_clear(t);
  }

  template <class F>
  static Rational big_op(const Rational &a, const Rational &b, F f) {
    Rational r;
    r.make_big();
    mpq_t ta, tb;
    a.as_mpq(ta);
    b.as_mpq(tb);
    f(r.box(), ta, tb);
    a.release_mpq(ta);
    b.release_mpq(tb);
    r.demote();
    return r;
  }

  void demote() {
    if (!is_big())
      return;
    if (mpz_fits_slong_p(mpq_numref(box())) &&
        mpz_fits_slong_p(mpq_denref(box()))) {
      long long n = mpz_get_si(mpq_numref(box()));
      long long d = mpz_get_si(mpq_denref(box()));
      if (n != std::numeric_limits<long long>::min() &&
          d != std::numeric_limits<long long>::min()) {
        free_self_box();
        num_ = n;
        den_ = d;
      }
    }
  }

  static bool digits_ok(std::string_view s, bool allow_sign) {
    size_t i = 0;
    if (allow_sign && i < s.size() && s[i] == '-')
      ++i;
    if (i >= s.size())
      return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9')
        return false;
    return true;
  }

  static u128 uabs(i128 x) { return x < 0 ? (u128)(-(x + 1)) + 1 : (u128)x; }

  static u128 gcd_u128(u128 a, u128 b) {
    while (b != 0) {
      u128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static long long gcd_ll(long long a, long long b) {
    u128 g = gcd_u128(uabs((i128)a), uabs((i128)b));
    return g == 0 ? 1 : (long long)g;
  }

  // reduce n/d (d != 0) and store if it fits in int64; return false otherwise
  bool try_assign_reduced(i128 n, i128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    u128 g = gcd_u128(uabs(n), (u128)d);
    if (g > 1) {
      n /= (i128)g;
      d /= (i128)g;
    }
    constexpr i128 maxll = std::numeric_limits<long long>::max();
    if (n > maxll || n < -maxll || d > maxll)
      return false;
    num_ = (long long)n;
    den_ = (long long)d;
    return true;
  }

  void assign_reduced(i128 n, i128 d) {
    if (!try_assign_reduced(n, d)) {
      // only reachable from the (int64,int64) constructor edge cases
      BigBox *b = new_box();
      set_mpz_from_i128(mpq_numref(b->q), n);
      set_mpz_from_i128(mpq_denref(b->q), d);
      mpq_canonicalize(b->q);
      num_ = reinterpret_cast<long long>(b);
      den_ = 0;
      demote();
    }
  }

  static void set_mpz_from_i128(mpz_ptr z, i128 v) {
    bool neg = v < 0;
    u128 u = uabs(v);
    mpz_set_ui(z, (unsigned long)(u >> 64));
    mpz_mul_2exp(z, z, 64);
    mpz_add_ui(z, z, (unsigned long)(u & ~0ULL));
    if (neg)
      mpz_neg(z, z);
  }
};

inline std::string to_string(const Rational &r) { return r.str(); }

} // namespace isotype
