#ifndef ENRIQUES_ARITH_HPP
#define ENRIQUES_ARITH_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "enriques/errors.hpp"

namespace enriques {

// Overflow-checked 64-bit integer.  Every arithmetic operator traps overflow
// and throws OverflowError instead of wrapping.  Twist chains grow
// coefficients quadratically, so silent wrap-around is never acceptable.
class Int {
 public:
  constexpr Int() noexcept : v_(0) {}
  constexpr Int(long long v) noexcept : v_(v) {}  // NOLINT: implicit on purpose
  constexpr Int(int v) noexcept : v_(v) {}        // NOLINT

  constexpr long long get() const noexcept { return v_; }

  friend Int operator+(Int a, Int b) {
    long long r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw OverflowError("Int: + overflow");
    return Int(r);
  }
  friend Int operator-(Int a, Int b) {
    long long r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw OverflowError("Int: - overflow");
    return Int(r);
  }
  friend Int operator*(Int a, Int b) {
    long long r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw OverflowError("Int: * overflow");
    return Int(r);
  }
  friend Int operator/(Int a, Int b) {
    if (b.v_ == 0) throw PreconditionError("Int: division by zero");
    if (a.v_ == INT64_MIN && b.v_ == -1) throw OverflowError("Int: / overflow");
    return Int(a.v_ / b.v_);
  }
  friend Int operator%(Int a, Int b) {
    if (b.v_ == 0) throw PreconditionError("Int: modulo by zero");
    if (a.v_ == INT64_MIN && b.v_ == -1) throw OverflowError("Int: % overflow");
    return Int(a.v_ % b.v_);
  }
  Int operator-() const {
    if (v_ == INT64_MIN) throw OverflowError("Int: negate overflow");
    return Int(-v_);
  }

  Int& operator+=(Int b) { return *this = *this + b; }
  Int& operator-=(Int b) { return *this = *this - b; }
  Int& operator*=(Int b) { return *this = *this * b; }

  friend constexpr bool operator==(Int a, Int b) noexcept { return a.v_ == b.v_; }
  friend constexpr auto operator<=>(Int a, Int b) noexcept { return a.v_ <=> b.v_; }

  friend std::ostream& operator<<(std::ostream& os, Int a) { return os << a.v_; }

 private:
  long long v_;
};

inline Int abs(Int a) { return a < Int(0) ? -a : a; }

// gcd with the usual conventions: gcd(0,0)=0, result >= 0.
inline Int gcd(Int a, Int b) {
  long long x = a.get() < 0 ? -a.get() : a.get();
  long long y = b.get() < 0 ? -b.get() : b.get();
  if (a.get() == INT64_MIN || b.get() == INT64_MIN) throw OverflowError("gcd overflow");
  while (y != 0) {
    long long t = x % y;
    x = y;
    y = t;
  }
  return Int(x);
}
inline Int gcd(Int a, Int b, Int c) { return gcd(gcd(a, b), c); }

// Floor division and the matching non-negative remainder.
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != Int(0)) && ((a.get() < 0) != (b.get() < 0))) q -= Int(1);
  return q;
}
inline Int mod_floor(Int a, Int b) { return a - floor_div(a, b) * b; }

// Residue in {0,1} regardless of sign.
inline int parity(Int a) { return static_cast<int>(((a.get() % 2) + 2) % 2); }

// Extended gcd: returns g = gcd(a,b) >= 0 and x, y with a*x + b*y = g.
struct ExtGcd {
  Int g, x, y;
};
inline ExtGcd ext_gcd(Int a, Int b) {
  // Iterative extended Euclid on the raw values.
  long long old_r = a.get(), r = b.get();
  long long old_s = 1, s = 0;
  long long old_t = 0, t = 1;
  while (r != 0) {
    long long q = old_r / r;
    long long tmp = old_r - q * r; old_r = r; r = tmp;
    tmp = old_s - q * s; old_s = s; s = tmp;
    tmp = old_t - q * t; old_t = t; t = tmp;
  }
  if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
  return {Int(old_r), Int(old_s), Int(old_t)};
}

// Exact rational with normalized sign and lowest terms; only what the
// central-charge computation needs.
class Rat {
 public:
  Rat() : n_(0), d_(1) {}
  Rat(Int n) : n_(n), d_(1) {}  // NOLINT
  Rat(Int n, Int d) : n_(n), d_(d) { normalize(); }

  Int num() const { return n_; }
  Int den() const { return d_; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat(a.n_ * b.d_ + b.n_ * a.d_, a.d_ * b.d_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return Rat(a.n_ * b.d_ - b.n_ * a.d_, a.d_ * b.d_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat(a.n_ * b.n_, a.d_ * b.d_);
  }
  friend bool operator==(const Rat& a, const Rat& b) {
    return a.n_ == b.n_ && a.d_ == b.d_;
  }
  bool positive() const { return n_ > Int(0); }

  std::string str() const {
    std::string s = std::to_string(n_.get());
    if (d_ != Int(1)) s += "/" + std::to_string(d_.get());
    return s;
  }

 private:
  void normalize() {
    if (d_ == Int(0)) throw PreconditionError("Rat: zero denominator");
    if (d_ < Int(0)) { n_ = -n_; d_ = -d_; }
    Int g = gcd(n_, d_);
    if (g > Int(1)) { n_ = n_ / g; d_ = d_ / g; }
  }
  Int n_, d_;
};

}  // namespace enriques

#endif
