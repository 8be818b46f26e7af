#ifndef ENRIQUES_EXISTENCE_HPP
#define ENRIQUES_EXISTENCE_HPP

#include <optional>
#include <string>

#include "enriques/mukai.hpp"
#include "enriques/surface.hpp"

namespace enriques {

/*
  Non-emptiness of the moduli of stable sheaves with a primitive Mukai
  vector, decided purely from lattice data.  Unnodal surface, rank > 0:

    (i)   ell = 1 and <v^2> >= -1
    (ii)  ell = 2 and <v^2> >= 2
    (iii) ell = 2, <v^2> = 0, c1 even and kappa = r/2 (mod 2)

  Rank 0 first requires effectivity ((c1^2) >= 0 and (c1,H) > 0); in case
  (iii) the determinant must then be divisible by 2 outright (kappa = 0,
  which is the same congruence since r/2 = 0).

  Nodal surfaces add the exceptional case

    (iv)  <v^2> = -2 and c1 = D + (r/2)K_X (mod 2) for a listed nodal
          cycle D,

  decided against the user-supplied cycle list; an empty list makes the
  <v^2> = -2 question undecidable rather than negative.
*/

enum class ExistCase {
  U1, U2, U3, URank0Ineffective, UEmpty,
  N1, N2, N3, N4, N4Fail, NEmpty,
  NotPrimitive, ParityViolation,
};

const char* case_name(ExistCase c);
std::optional<ExistCase> case_from_name(const std::string& name);

// True exactly for the nonempty cases.
bool case_nonempty(ExistCase c);

struct ExistenceCertificate {
  Int ell = 0;
  Int square = 0;
  bool kappa_sensitive = false;            // decision depended on kappa
  std::optional<bool> kappa_congruent{};   // cases (iii)/(iv)
  std::optional<bool> c1_even{};           // cases (iii)
  std::optional<int> matched_cycle{};      // index into ctx.nodal_cycles
  std::optional<bool> effective{};         // rank 0
};

struct ExistenceVerdict {
  bool nonempty = false;
  ExistCase matched_case = ExistCase::NotPrimitive;
  ExistenceCertificate certificate{};
};

// Decision for an unnodal surface.  Requires ctx.nodal == false and r >= 0.
ExistenceVerdict exists_unnodal(const MukaiVector& v, const SurfaceContext& ctx);

// Decision for a nodal surface.  Requires ctx.nodal == true, r >= 0, and
// for r = 0 additionally (c1, H) > 0.
ExistenceVerdict exists_nodal(const MukaiVector& v, const SurfaceContext& ctx);

// For even r > 0 with <v^2> = -2: the rank-2 vector with the same free
// determinant, kappa' = kappa - (r/2 - 1) mod 2 and s' = r s / 2, whose
// nodal verdict agrees with v's.
MukaiVector exceptional_shadow(const MukaiVector& v);

// Determinant-free form of case (iv): eta matches some listed nodal cycle
// mod 2 on free parts.  Requires (eta^2) + r s = -2 and a nodal context.
bool exceptional_eta_test(const NSClass& eta, Int r, Int s, const SurfaceContext& ctx);

}  // namespace enriques

#endif
