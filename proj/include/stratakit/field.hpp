// Exact coefficient fields: the rationals and prime fields with runtime modulus.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace stratakit {

// User or input data out of contract (bad file, bad flag, non-admissible
// presentation, ...). Mapped to CLI exit code 1.
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A violated internal invariant: a certification step failed. Exit code 2.
class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

#define STRATAKIT_CHECK(cond, msg)                                            \
  do {                                                                        \
    if (!(cond)) throw ::stratakit::InternalError(msg);                       \
  } while (0)

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// characteristic 0 means the rationals, otherwise F_p for prime p.
struct FieldSpec {
  std::uint32_t characteristic = 0;

  bool is_rational() const { return characteristic == 0; }
  std::string label() const {
    return is_rational() ? "Q" : "F" + std::to_string(characteristic);
  }
  bool operator==(const FieldSpec&) const = default;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline FieldSpec make_field(std::uint32_t characteristic) {
  if (characteristic != 0 && !is_prime(characteristic))
    throw InputError("field characteristic must be 0 or a prime, got " +
                     std::to_string(characteristic));
  // Residues are held in long long; keep (p-1)^2 inside the signed range.
  if (characteristic >= (1u << 31))
    throw InputError("field characteristic too large");
  return FieldSpec{characteristic};
}

// Element of F_p carrying its modulus. A default-constructed or
// integer-constructed value is an unbound integer literal (modulus 0); it
// binds to the modulus of the first bound operand it meets, which lets
// Eigen's internal Scalar(0)/Scalar(1) temporaries work unchanged.
struct Fp {
  long long v = 0;
  std::uint32_t p = 0;

  Fp() = default;
  Fp(int n) : v(n) {}
  Fp(long long n) : v(n) {}
  Fp(long long n, std::uint32_t mod) : v(n), p(mod) { reduce(); }

  void reduce() {
    if (p == 0) return;
    v %= static_cast<long long>(p);
    if (v < 0) v += p;
  }
  bool bound() const { return p != 0; }

  friend std::uint32_t join_mod(const Fp& a, const Fp& b) {
    if (a.p != 0 && b.p != 0 && a.p != b.p)
      throw InternalError("mixed moduli in F_p arithmetic");
    return a.p != 0 ? a.p : b.p;
  }

  friend Fp operator+(const Fp& a, const Fp& b) {
    return Fp(a.v + b.v, join_mod(a, b));
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    return Fp(a.v - b.v, join_mod(a, b));
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    return Fp(a.v * b.v, join_mod(a, b));
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
  Fp operator-() const { return Fp(-v, p); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }

  Fp inverse() const {
    if (p == 0) {
      if (v == 1 || v == -1) return *this;
      throw InternalError("inverse of unbound F_p literal");
    }
    if (v == 0) throw InternalError("division by zero in F_p");
    // Extended Euclid on (v, p).
    long long r0 = v, r1 = p, s0 = 1, s1 = 0;
    while (r1 != 0) {
      long long q = r0 / r1;
      long long r2 = r0 - q * r1, s2 = s0 - q * s1;
      r0 = r1; r1 = r2; s0 = s1; s1 = s2;
    }
    STRATAKIT_CHECK(r0 == 1, "F_p modulus not prime");
    return Fp(s0, p);
  }

  friend bool operator==(const Fp& a, const Fp& b) {
    if (a.p != 0 && b.p != 0) return a.p == b.p && a.v == b.v;
    std::uint32_t m = a.p != 0 ? a.p : b.p;
    if (m == 0) return a.v == b.v;
    return Fp(a.v, m).v == Fp(b.v, m).v;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
};

// Scalar construction and rendering, dispatched on the scalar type.
template <class S> struct ScalarOps;

template <> struct ScalarOps<Rat> {
  static Rat from_int(const FieldSpec&, long long n) { return Rat(n); }
  static Rat from_ratio(const FieldSpec&, long long num, long long den) {
    if (den == 0) throw InputError("fraction with zero denominator");
    return Rat(BigInt(num)) / Rat(BigInt(den));
  }
  static std::string str(const Rat& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    return den == 1 ? num.str() : num.str() + "/" + den.str();
  }
  static bool matches(const FieldSpec& fs) { return fs.is_rational(); }
};

template <> struct ScalarOps<Fp> {
  static Fp from_int(const FieldSpec& fs, long long n) {
    return Fp(n, fs.characteristic);
  }
  static Fp from_ratio(const FieldSpec& fs, long long num, long long den) {
    Fp d(den, fs.characteristic);
    if (d.v == 0)
      throw InputError("fraction denominator divisible by the characteristic");
    return Fp(num, fs.characteristic) / d;
  }
  static std::string str(const Fp& x) { return std::to_string(x.v); }
  static bool matches(const FieldSpec& fs) { return !fs.is_rational(); }
};

template <class S> S scalar_from_int(const FieldSpec& fs, long long n) {
  return ScalarOps<S>::from_int(fs, n);
}
template <class S>
S scalar_from_ratio(const FieldSpec& fs, long long num, long long den) {
  return ScalarOps<S>::from_ratio(fs, num, den);
}
template <class S> std::string scalar_str(const S& s) {
  return ScalarOps<S>::str(s);
}

template <class S> bool is_zero(const S& s) { return s == S(0); }
template <class S> bool is_one(const S& s) { return s == S(1); }

inline std::ostream& operator<<(std::ostream& os, const Fp& x) {
  return os << x.v;
}

}  // namespace stratakit

namespace Eigen {
template <> struct NumTraits<stratakit::Fp> {
  using Self = stratakit::Fp;
  using Real = Self;
  using NonInteger = Self;
  using Literal = Self;
  using Nested = Self;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4,
  };
  static int digits10() { return 9; }
  static Self epsilon() { return Self(0); }
  static Self dummy_precision() { return Self(0); }
  static Self highest() { return Self(0); }
  static Self lowest() { return Self(0); }
};
}  // namespace Eigen
