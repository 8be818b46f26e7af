#ifndef ENRIQUES_MOVES_HPP
#define ENRIQUES_MOVES_HPP

#include <optional>
#include <vector>

#include "enriques/mukai.hpp"

namespace enriques {

/*
  The three isometries of the Mukai lattice the reductions are built from:

    twist by D:    (r, c1, s) -> (r, c1 + r D, s - 2(c1,D) - r(D^2)),
                   kappa -> kappa + r*kappa(D) mod 2.
    reflection:    (r, c1, s) -> (s, -c1, r), valid for r,s > 0 and
                   (c1^2) < 0; the determinant class L + (r/2)K_X maps to
                   -(L + (s/2)K_X), i.e. kappa -> kappa + (r+s)/2 mod 2.
    basis change:  the lattice isometry g(sigma) = sigma - (eta^2/2) f + eta,
                   g(f) = f, g(x) = x - (x,eta) f on the E8 block, applied
                   to c1 coordinatewise.

  Each preserves the Mukai square, the content and primitivity.
*/

MukaiVector twist(const MukaiVector& v, const NSClass& d);
MukaiVector reflect(const MukaiVector& v);
MukaiVector hyp_change(const MukaiVector& v, const E8Vector& eta);

// The basis-change isometry applied to a single lattice class.
NSClass hyp_change_class(const NSClass& x, const E8Vector& eta);

// A recorded step, with a snapshot of <v^2> and the content taken when the
// move was first applied.  Replays recompute both; a stored snapshot that
// disagrees tells a corrupted trace apart from an engine regression.
struct Move {
  enum class Kind { Twist, Reflect, HypChange };
  Kind kind = Kind::Reflect;
  NSClass twist_class{};  // Twist
  E8Vector eta{};         // HypChange
  std::optional<Int> pre_square;
  std::optional<Int> pre_content;

  static Move make_twist(const NSClass& d, const MukaiVector& at);
  static Move make_reflect(const MukaiVector& at);
  static Move make_hyp_change(const E8Vector& eta, const MukaiVector& at);
};

struct MoveTrace {
  MukaiVector initial{};
  std::vector<Move> steps{};
  MukaiVector final{};
};

// Applies one step, checking its preconditions (throws PreconditionError).
MukaiVector apply_move(const MukaiVector& v, const Move& m);

// Re-applies every step from trace.initial, checking preconditions,
// snapshots, and that square/content/primitivity are preserved step by
// step; throws TraceError (with the step index) on any mismatch, including
// a final vector that differs from trace.final.
MukaiVector replay(const MoveTrace& trace);

// Numerical shadow of the relative transform along an elliptic fibration
// with half-fiber class fiber: a rank-0 vector (0, D, 0) with
// (D^2) = <v^2> and (D, 2*fiber) = r.  D is constructed deterministically
// as c1 + s*fiber; only those two pairing identities are contractual.
MukaiVector elliptic_shadow(const MukaiVector& v, const NSClass& fiber);

}  // namespace enriques

#endif
