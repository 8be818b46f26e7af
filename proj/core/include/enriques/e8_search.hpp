#ifndef ENRIQUES_E8_SEARCH_HPP
#define ENRIQUES_E8_SEARCH_HPP

#include "enriques/ns_lattice.hpp"

namespace enriques {

// All searches enumerate E8 coefficient vectors by increasing sup-norm, and
// within a shell in lexicographic order, so results are identical across
// runs and platforms.  Exceeding the radius is a hard SearchLimitError,
// never a wrong answer.
struct SearchConfig {
  int radius = 6;
};

// Solves (xi, eta) = t for eta.  The functional eta -> (xi, eta) has image
// content(xi) * Z because |det Gram| = 1, so the equation is solved exactly
// by an extended gcd across the eight entries of Gram * xi.
// Throws UnreachableTargetError when content(xi) does not divide t.
E8Vector solve_pairing(const E8Vector& xi, Int t);

// Finds D with content(xi + r*D) = p and s' = s - 2(xi,D) - r(D^2) > floor.
// Precondition: p = gcd(r, content(xi)).  Postconditions are re-verified by
// direct computation before returning.
NSClass content_twist_search(Int r, const E8Vector& xi, Int s, Int p, Int floor,
                             const SearchConfig& cfg = {});

// Finds eta with (eta^2) - 2(xi', eta) = 2 (mod 4).
E8Vector mod4_square_search(const E8Vector& xi_prime, const SearchConfig& cfg = {});

// Finds eta with (xi', eta) = -1 if (eta^2)/2 is even, +1 if odd.
// Precondition: xi' primitive.
E8Vector parity_pairing_search(const E8Vector& xi_prime, const SearchConfig& cfg = {});

// Finds the first eta (shell order) so that twisting (rank, .., slot) by
// eta raises the slot strictly above floor: slot - 2(xi,eta) - rank(eta^2)
// > floor.  -rank*(eta^2) reaches 30*rank already at sup-norm 1, so this
// stays shallow for every floor the reductions use.
E8Vector raise_slot_search(Int rank, const E8Vector& xi, Int slot, Int floor,
                           const SearchConfig& cfg = {});

}  // namespace enriques

#endif
