#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include "isotype/error.hpp"
#include "isotype/prime_field.hpp"
#include "isotype/rational.hpp"

namespace isotype {

// Ambient field of a computation: Q or F_p with p >= 5 prime. Characteristic
// 2 and 3 are rejected outright (several catalog constants have denominators
// 2 and 4, and the theory assumes char != 2,3).
struct FieldDesc {
  enum class Kind { Q, Fp } kind = Kind::Q;
  unsigned long long p = 0;

  static FieldDesc rationals() { return FieldDesc{Kind::Q, 0}; }

  static FieldDesc prime(unsigned long long p) {
    if (p == 2 || p == 3)
      throw Error("field characteristic " + std::to_string(p) +
                  " rejected (need p >= 5)");
    if (p < 5 || !is_prime(p))
      throw Error("invalid prime field modulus " + std::to_string(p));
    return FieldDesc{Kind::Fp, p};
  }

  std::string str() const {
    return kind == Kind::Q ? "Q" : "F" + std::to_string(p);
  }

  static bool is_prime(unsigned long long n) {
    if (n < 2)
      return false;
    for (unsigned long long d : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                                 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
      if (n % d == 0)
        return n == d;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    unsigned long long d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
      d >>= 1;
      ++s;
    }
    for (unsigned long long a :
         {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
      unsigned long long x = powmod(a % n, d, n);
      if (x == 0 || x == 1 || x == n - 1)
        continue;
      bool witness = true;
      for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) {
          witness = false;
          break;
        }
      }
      if (witness)
        return false;
    }
    return true;
  }

private:
  static unsigned long long mulmod(unsigned long long a, unsigned long long b,
                                   unsigned long long m) {
    return (unsigned long long)(((unsigned __int128)a * b) % m);
  }
  static unsigned long long powmod(unsigned long long a, unsigned long long e,
                                   unsigned long long m) {
    unsigned long long r = 1;
    while (e) {
      if (e & 1)
        r = mulmod(r, a, m);
      a = mulmod(a, a, m);
      e >>= 1;
    }
    return r;
  }
};

template <class K>
concept Scalar = requires(K a, K b) {
  K{};
  K{1};
  { a + b } -> std::convertible_to<K>;
  { a - b } -> std::convertible_to<K>;
  { a *b } -> std::convertible_to<K>;
  { a / b } -> std::convertible_to<K>;
  { -a } -> std::convertible_to<K>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.str() } -> std::convertible_to<std::string>;
};

// parse_scalar: canonical Scalar from "-?digits(/digits)?" in the given field
template <Scalar K> K parse_scalar(std::string_view text, const FieldDesc &fd);

template <> inline Rational parse_scalar<Rational>(std::string_view text,
                                                   const FieldDesc &fd) {
  if (fd.kind != FieldDesc::Kind::Q)
    throw FieldMismatch("Rational scalar requested for field " + fd.str());
  return Rational::parse(text);
}

template <>
inline Fp parse_scalar<Fp>(std::string_view text, const FieldDesc &fd) {
  if (fd.kind != FieldDesc::Kind::Fp)
    throw FieldMismatch("Fp scalar requested for field " + fd.str());
  return Fp::parse(text, fd.p);
}

} // namespace isotype
