#ifndef ENRIQUES_NS_LATTICE_HPP
#define ENRIQUES_NS_LATTICE_HPP

#include <array>
#include <ostream>

#include "enriques/arith.hpp"

namespace enriques {

/*
  The free Neron-Severi lattice of an Enriques surface is U + E8(-1):

    - U is the hyperbolic plane with basis sigma, f:
        (sigma^2) = (f^2) = 0, (sigma, f) = 1.
    - E8(-1) carries the negated E8 Cartan matrix in the Bourbaki
      simple-root basis alpha_1..alpha_8 (diagonal -2, entry +1 exactly on
      Dynkin-adjacent pairs 1-3, 3-4, 4-5, 5-6, 6-7, 7-8, 2-4).

  Coordinates of a class are (d1, d2, e1..e8) = d1*sigma + d2*f + sum e_i*alpha_i.
  The torsion part Z/2 generated by the canonical class is tracked by a
  separate coefficient kappa in {0,1}; it pairs to zero with everything.
*/

// Coefficient vector in the E8(-1) block.
struct E8Vector {
  std::array<Int, 8> c{};

  friend bool operator==(const E8Vector&, const E8Vector&) = default;
  bool is_zero() const {
    for (const auto& x : c)
      if (x != Int(0)) return false;
    return true;
  }
};

E8Vector operator+(const E8Vector& a, const E8Vector& b);
E8Vector operator-(const E8Vector& a, const E8Vector& b);
E8Vector operator*(Int k, const E8Vector& a);
inline E8Vector operator-(const E8Vector& a) { return Int(-1) * a; }

// Bilinear form on the E8(-1) block.
Int e8_pairing(const E8Vector& a, const E8Vector& b);
inline Int e8_square(const E8Vector& a) { return e8_pairing(a, a); }

// gcd of the eight coordinates (0 for the zero vector).
Int e8_content(const E8Vector& a);

// Gram matrix of E8(-1) in the fixed basis.
const std::array<std::array<int, 8>, 8>& e8_gram();

// i-th simple root (1-based), as a coefficient vector.
E8Vector e8_alpha(int i);

// A class in NS(X) = U + E8(-1) + Z/2.
struct NSClass {
  Int d1{};        // coefficient of sigma
  Int d2{};        // coefficient of f
  E8Vector e{};    // E8(-1) part
  int kappa = 0;   // torsion coefficient, always 0 or 1

  friend bool operator==(const NSClass&, const NSClass&) = default;
  bool free_is_zero() const { return d1 == Int(0) && d2 == Int(0) && e.is_zero(); }
};

NSClass operator+(const NSClass& a, const NSClass& b);
NSClass operator-(const NSClass& a, const NSClass& b);
NSClass operator*(Int k, const NSClass& a);
inline NSClass operator-(const NSClass& a) { return Int(-1) * a; }

inline NSClass sigma_class() { return NSClass{Int(1), Int(0), {}, 0}; }
inline NSClass f_class() { return NSClass{Int(0), Int(1), {}, 0}; }
NSClass alpha_class(int i);
inline NSClass e8_embed(const E8Vector& e) { return NSClass{Int(0), Int(0), e, 0}; }

// Intersection pairing on free parts; torsion contributes nothing.
Int ns_pairing(const NSClass& a, const NSClass& b);
inline Int ns_square(const NSClass& a) { return ns_pairing(a, a); }

// gcd of the ten free coordinates.
Int ns_content(const NSClass& a);
inline bool ns_primitive(const NSClass& a) { return ns_content(a) == Int(1); }

// True when every free coordinate is even.
bool ns_even(const NSClass& a);

// Free parts congruent mod 2 (coordinate-wise).
bool ns_congruent_mod2(const NSClass& a, const NSClass& b);

// The full 10x10 Gram matrix in basis (sigma, f, alpha_1..alpha_8).
using Gram10 = std::array<std::array<Int, 10>, 10>;
const Gram10& ns_gram();

// Exact determinant (Bareiss elimination), used by the startup sanity checks.
Int gram_determinant(const Gram10& g, int n);

// One-time structural check: det G = -1, det E8(-1) block = 1, even
// diagonal, symmetry.  Throws InvariantError if the tables are broken.
void lattice_self_check();

std::ostream& operator<<(std::ostream& os, const NSClass& a);
std::ostream& operator<<(std::ostream& os, const E8Vector& a);

}  // namespace enriques

#endif
