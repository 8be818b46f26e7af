#include "enriques/mukai.hpp"

namespace enriques {

MukaiVector operator+(const MukaiVector& v, const MukaiVector& w) {
  return MukaiVector(v.r + w.r, v.c1 + w.c1, v.s + w.s);
}

Int mukai_pairing(const MukaiVector& v, const MukaiVector& w) {
  return ns_pairing(v.c1, w.c1) + (v.r * w.s + w.r * v.s) / Int(2);
}

Int mukai_square(const MukaiVector& v) {
  return ns_square(v.c1) + v.r * v.s;
}

Int content(const MukaiVector& v) {
  if (v.is_zero()) throw PreconditionError("content: zero vector");
  return gcd(gcd(v.r, v.s), ns_content(v.c1));
}

bool is_primitive(const MukaiVector& v) {
  if (v.is_zero()) return false;
  return gcd(gcd(v.r, (v.r - v.s) / Int(2)), ns_content(v.c1)) == Int(1);
}

ContentClassification classify_content(const MukaiVector& v) {
  if (!is_primitive(v)) throw PreconditionError("classify_content: vector not primitive");
  Int ell = content(v);
  ContentClassification out{ell};
  if (ell == Int(1)) return out;
  if (ell == Int(2)) {
    out.halves_even = parity(v.r) == 0 && parity(v.s) == 0 && ns_even(v.c1);
    out.r_plus_s_mod4 = static_cast<int>(mod_floor(v.r + v.s, Int(4)).get());
    if (!out.halves_even || out.r_plus_s_mod4 != 2)
      throw InvariantError("classify_content: content 2 without the forced congruences");
    return out;
  }
  throw InvariantError("classify_content: primitive vector with content > 2");
}

std::pair<Rat, Rat> central_charge(const MukaiVector& v, const Rat& t, const NSClass& ample) {
  if (!t.positive()) throw PreconditionError("central_charge: t must be positive");
  if (ns_square(ample) <= Int(0))
    throw PreconditionError("central_charge: (H^2) must be positive");
  Rat re = t * t * Rat(v.r * ns_square(ample), 2) + Rat(v.s, 2);
  Rat im = t * Rat(ns_pairing(ample, v.c1));
  return {re, im};
}

std::ostream& operator<<(std::ostream& os, const MukaiVector& v) {
  return os << "(" << v.r << "," << v.c1 << "," << v.s << ")";
}

}  // namespace enriques
