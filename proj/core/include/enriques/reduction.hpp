#ifndef ENRIQUES_REDUCTION_HPP
#define ENRIQUES_REDUCTION_HPP

#include <utility>

#include "enriques/e8_search.hpp"
#include "enriques/moves.hpp"

namespace enriques {

struct ReduceConfig {
  int step_cap = 64;
  SearchConfig search{};
};

// Terminal shape of a reduction chain, with the replayable certificate.
//   content 1, even rank:  (2, zeta, t) with zeta primitive, (zeta^2)+2t = <v^2>
//   content 2:             (2, 0, t) with 2t = <v^2>
//   odd rank:              (1, 0, <v^2>)
struct CanonicalForm {
  MukaiVector vector{};
  Int ell{};
  MoveTrace trace{};
};

enum class NormalizeVariant { Direct = 1, Reflected = 2 };

// Two-step slot normalization for vectors of shape (r, (r/2)b f + xi, s),
// b in {0,-1,1}, xi in the E8 block.  Direct returns the same shape with
// xi'/l primitive (l = gcd(r, xi, s)), r' = r and s' = s mod 2l, and
// r' > <v^2>; Reflected appends one more twist-and-reflect so the result is
// (s'', -((r/2)b f + xi''), r') with s'' > <v^2>.  The trace replays to the
// returned vector.
std::pair<MukaiVector, MoveTrace> normalize_shape(const MukaiVector& v,
                                                  NormalizeVariant variant,
                                                  const ReduceConfig& cfg = {});

// Rank-2 landing for vectors of shape (r, (r/2)b f + xi, s): dispatches on
// (r mod 4, s mod 4, gcd(r,xi,s), b), builds the isotropic twist class
// sigma - (eta^2/2) f + eta with the case-appropriate eta, and finishes with
// a reflection (plus a final content-clearing twist when the content is 2).
CanonicalForm land_rank2(const MukaiVector& v, const ReduceConfig& cfg = {});

// Full even-rank reduction: normalizes the hyperbolic coordinates of c1,
// strictly drops the rank through twist-reflect rounds while either
// coordinate is away from {0, r/2}, routes the (r/2, r/2) configuration
// through a hyperbolic basis change, and lands the base shapes via
// land_rank2.  The emitted trace is replay-verified before returning.
CanonicalForm reduce_even(const MukaiVector& v, const ReduceConfig& cfg = {});

// Odd-rank reduction to (1, 0, <v^2>), mirroring the even induction.
CanonicalForm reduce_odd(const MukaiVector& v, const ReduceConfig& cfg = {});

}  // namespace enriques

#endif
