#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "isotype/error.hpp"

namespace isotype {

// Element of F_p, p >= 5 prime. Each element carries its modulus; mixing
// moduli throws. p == 0 marks an unattached constant produced by generic
// code (literals like 1/2 before any field element is in sight); such
// constants are exact small fractions and attach to the modulus of the first
// attached operand they meet.
class Fp {
public:
  Fp() : v_(encode(0, 1)), p_(0) {}
  Fp(long long x) : v_(0), p_(0) {
    if (x > INT32_MAX || x < INT32_MIN)
      throw Error("Fp: unattached constant out of range");
    v_ = encode((std::int32_t)x, 1);
  }
  Fp(unsigned long long residue, unsigned long long p) : v_(residue % p), p_(p) {}

  static Fp from_signed(long long x, unsigned long long p) {
    long long r = x % (long long)p;
    if (r < 0)
      r += (long long)p;
    return Fp((unsigned long long)r, p);
  }

  bool attached() const { return p_ != 0; }
  unsigned long long modulus() const { return p_; }

  unsigned long long residue() const {
    if (!attached())
      throw Error("Fp: residue of unattached constant");
    return v_;
  }

  bool is_zero() const { return attached() ? v_ == 0 : num() == 0; }
  bool is_one() const {
    return attached() ? v_ == 1 : (num() == 1 && den() == 1);
  }

  friend Fp operator+(Fp a, Fp b) {
    if (!unify(a, b))
      return make_const((long long)a.num() * b.den() + (long long)b.num() * a.den(),
                        (long long)a.den() * b.den());
    unsigned long long s = a.v_ + b.v_;
    if (s >= a.p_)
      s -= a.p_;
    return Fp(s, a.p_);
  }
  friend Fp operator-(Fp a, Fp b) {
    if (!unify(a, b))
      return make_const((long long)a.num() * b.den() - (long long)b.num() * a.den(),
                        (long long)a.den() * b.den());
    unsigned long long s = a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_;
    return Fp(s, a.p_);
  }
  friend Fp operator*(Fp a, Fp b) {
    if (!unify(a, b))
      return make_const((long long)a.num() * b.num(),
                        (long long)a.den() * b.den());
    return Fp(mulmod(a.v_, b.v_, a.p_), a.p_);
  }
  friend Fp operator/(Fp a, Fp b) {
    if (b.is_zero())
      throw Error("Fp: division by zero");
    if (!unify(a, b))
      return make_const((long long)a.num() * b.den(),
                        (long long)a.den() * b.num());
    return a * b.inverse();
  }
  Fp operator-() const {
    if (!attached())
      return make_const(-(long long)num(), (long long)den());
    return Fp(v_ == 0 ? 0 : p_ - v_, p_);
  }

  Fp &operator+=(const Fp &b) { return *this = *this + b; }
  Fp &operator-=(const Fp &b) { return *this = *this - b; }
  Fp &operator*=(const Fp &b) { return *this = *this * b; }
  Fp &operator/=(const Fp &b) { return *this = *this / b; }

  friend bool operator==(Fp a, Fp b) {
    if (!unify(a, b))
      return a.num() == b.num() && a.den() == b.den();
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Fp &a, const Fp &b) { return !(a == b); }

  Fp inverse() const {
    if (!attached()) {
      if (num() == 0)
        throw Error("Fp: inverse of zero");
      return make_const(den(), num());
    }
    if (v_ == 0)
      throw Error("Fp: inverse of zero");
    long long t = 0, newt = 1;
    long long r = (long long)p_, newr = (long long)v_;
    while (newr != 0) {
      long long q = r / newr;
      long long tmp = t - q * newt;
      t = newt;
      newt = tmp;
      tmp = r - q * newr;
      r = newr;
      newr = tmp;
    }
    if (t < 0)
      t += (long long)p_;
    return Fp((unsigned long long)t, p_);
  }

  std::string str() const {
    if (!attached()) {
      std::string s = std::to_string(num());
      if (den() != 1)
        s += "/" + std::to_string(den());
      return s;
    }
    return std::to_string(v_);
  }

  // parse "a" or "a/b" into a residue mod p
  static Fp parse(std::string_view text, unsigned long long p) {
    std::size_t slash = text.find('/');
    Fp n = parse_int(text.substr(0, slash == text.npos ? text.size() : slash), p);
    if (slash == text.npos)
      return n;
    Fp d = parse_int(text.substr(slash + 1), p);
    if (d.is_zero())
      throw ParseError("zero denominator in '" + std::string(text) + "'");
    return n / d;
  }

private:
  // attached: v_ = residue in [0,p). unattached: v_ packs (num:int32, den:uint32)
  unsigned long long v_;
  unsigned long long p_;

  std::int32_t num() const { return (std::int32_t)(v_ >> 32); }
  std::uint32_t den() const { return (std::uint32_t)v_; }

  static unsigned long long encode(std::int32_t n, std::uint32_t d) {
    return ((unsigned long long)(std::uint32_t)n << 32) | d;
  }

  static Fp make_const(long long n, long long d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n > INT32_MAX || n < INT32_MIN || d > INT32_MAX || d == 0)
      throw Error("Fp: unattached constant overflow (attach a modulus first)");
    Fp r;
    r.v_ = encode((std::int32_t)n, (std::uint32_t)d);
    r.p_ = 0;
    return r;
  }

  Fp attach(unsigned long long p) const {
    Fp n = from_signed(num(), p);
    if (den() == 1)
      return n;
    return n * Fp((unsigned long long)den() % p, p).inverse();
  }

  // returns true when both ends up attached (to the same p); false when both
  // are unattached constants
  static bool unify(Fp &a, Fp &b) {
    if (a.p_ == b.p_) {
      if (a.p_ != 0)
        return true;
      return false;
    }
    if (a.p_ == 0) {
      a = a.attach(b.p_);
      return true;
    }
    if (b.p_ == 0) {
      b = b.attach(a.p_);
      return true;
    }
    throw FieldMismatch("Fp: mixing moduli " + std::to_string(a.p_) + " and " +
                        std::to_string(b.p_));
  }

  static unsigned long long mulmod(unsigned long long a, unsigned long long b,
                                   unsigned long long p) {
    return (unsigned long long)(((unsigned __int128)a * b) % p);
  }

  static Fp parse_int(std::string_view s, unsigned long long p) {
    bool neg = false;
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-') {
      neg = true;
      ++i;
    }
    if (i >= s.size())
      throw ParseError("malformed scalar literal '" + std::string(s) + "'");
    unsigned long long acc = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9')
        throw ParseError("malformed scalar literal '" + std::string(s) + "'");
      acc = mulmod(acc, 10, p) + (unsigned long long)(s[i] - '0');
      acc %= p;
    }
    Fp r(acc, p);
    return neg ? -r : r;
  }
};

inline std::string to_string(const Fp &x) { return x.str(); }

} // namespace isotype
