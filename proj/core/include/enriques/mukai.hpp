#ifndef ENRIQUES_MUKAI_HPP
#define ENRIQUES_MUKAI_HPP

#include <ostream>
#include <utility>

#include "enriques/ns_lattice.hpp"

namespace enriques {

/*
  A Mukai vector (r, c1, -s/2) is stored as the integer triple (r, c1, s);
  the standing parity assumption r = s (mod 2) makes the chi-slot -s/2 a
  half-integer with the right denominator and is enforced at construction.
*/
struct MukaiVector {
  Int r{};
  NSClass c1{};
  Int s{};

  MukaiVector() = default;
  MukaiVector(Int rank, NSClass det, Int chi2) : r(rank), c1(std::move(det)), s(chi2) {
    if (parity(r) != parity(s))
      throw PreconditionError("MukaiVector: r and s must have the same parity");
  }

  friend bool operator==(const MukaiVector&, const MukaiVector&) = default;
  bool is_zero() const { return r == Int(0) && s == Int(0) && c1.free_is_zero(); }
};

// Componentwise sum (used by linearity checks; torsion adds mod 2).
MukaiVector operator+(const MukaiVector& v, const MukaiVector& w);

// <v,w> = (c1 c1') + (r s' + r' s)/2.
Int mukai_pairing(const MukaiVector& v, const MukaiVector& w);

// <v^2> = (c1^2) + r s.
Int mukai_square(const MukaiVector& v);

// gcd(r, c1, s).  Errors on the zero vector.
Int content(const MukaiVector& v);

// gcd(r, c1, (r-s)/2) = 1, i.e. primitivity in the Mukai lattice.
bool is_primitive(const MukaiVector& v);

// Content classification of a primitive vector: ell is 1 or 2, and ell = 2
// forces 2|r, 2|c1, 2|s and r+s = 2 (mod 4).  A violation of those forced
// conditions would contradict primitivity and raises InvariantError.
struct ContentClassification {
  Int ell;
  bool halves_even = false;   // ell = 2: r, c1, s all even (always true there)
  int r_plus_s_mod4 = -1;     // ell = 2: residue of r+s mod 4 (must be 2)
};
ContentClassification classify_content(const MukaiVector& v);

// Stability-function value <exp(i t H), v> as an exact pair (re, im):
//   re = r t^2 (H^2)/2 + s/2,   im = t (H, c1).
// Requires t > 0 and (H^2) > 0.
std::pair<Rat, Rat> central_charge(const MukaiVector& v, const Rat& t, const NSClass& ample);

std::ostream& operator<<(std::ostream& os, const MukaiVector& v);

}  // namespace enriques

#endif
