#include "enriques/existence.hpp"

namespace enriques {

const char* case_name(ExistCase c) {
  switch (c) {
    case ExistCase::U1: return "U1";
    case ExistCase::U2: return "U2";
    case ExistCase::U3: return "U3";
    case ExistCase::URank0Ineffective: return "U_rank0_ineffective";
    case ExistCase::UEmpty: return "U_empty";
    case ExistCase::N1: return "N1";
    case ExistCase::N2: return "N2";
    case ExistCase::N3: return "N3";
    case ExistCase::N4: return "N4";
    case ExistCase::N4Fail: return "N4_fail";
    case ExistCase::NEmpty: return "N_empty";
    case ExistCase::NotPrimitive: return "NotPrimitive";
    case ExistCase::ParityViolation: return "ParityViolation";
  }
  return "?";
}

std::optional<ExistCase> case_from_name(const std::string& name) {
  for (ExistCase c : {ExistCase::U1, ExistCase::U2, ExistCase::U3,
                      ExistCase::URank0Ineffective, ExistCase::UEmpty, ExistCase::N1,
                      ExistCase::N2, ExistCase::N3, ExistCase::N4, ExistCase::N4Fail,
                      ExistCase::NEmpty, ExistCase::NotPrimitive,
                      ExistCase::ParityViolation})
    if (name == case_name(c)) return c;
  return std::nullopt;
}

bool case_nonempty(ExistCase c) {
  switch (c) {
    case ExistCase::U1:
    case ExistCase::U2:
    case ExistCase::U3:
    case ExistCase::N1:
    case ExistCase::N2:
    case ExistCase::N3:
    case ExistCase::N4:
      return true;
    default:
      return false;
  }
}

namespace {

// kappa congruent to r/2 + kappa_shift mod 2.
bool kappa_matches(const MukaiVector& v, Int shift) {
  return parity(Int(v.c1.kappa) - v.r / Int(2) - shift) == 0;
}

ExistenceVerdict verdict(bool nonempty, ExistCase c, ExistenceCertificate cert) {
  return ExistenceVerdict{nonempty, c, cert};
}

// The three shared cases; nodal toggles the case labels.
ExistenceVerdict main_cases(const MukaiVector& v, bool nodal) {
  Int ell = content(v);
  Int sq = mukai_square(v);
  ExistenceCertificate cert;
  cert.ell = ell;
  cert.square = sq;
  const ExistCase c1 = nodal ? ExistCase::N1 : ExistCase::U1;
  const ExistCase c2 = nodal ? ExistCase::N2 : ExistCase::U2;
  const ExistCase c3 = nodal ? ExistCase::N3 : ExistCase::U3;
  const ExistCase empty = nodal ? ExistCase::NEmpty : ExistCase::UEmpty;
  if (ell == Int(1))
    return verdict(sq >= Int(-1), sq >= Int(-1) ? c1 : empty, cert);
  // ell = 2
  if (sq >= Int(2)) return verdict(true, c2, cert);
  if (sq == Int(0)) {
    cert.kappa_sensitive = true;
    cert.c1_even = ns_even(v.c1);
    cert.kappa_congruent = kappa_matches(v, Int(0));
    bool ok = *cert.c1_even && *cert.kappa_congruent;
    return verdict(ok, ok ? c3 : empty, cert);
  }
  return verdict(false, empty, cert);
}

}  // namespace

ExistenceVerdict exists_unnodal(const MukaiVector& v, const SurfaceContext& ctx) {
  if (ctx.nodal)
    throw PreconditionError("exists_unnodal: context is nodal");
  if (v.r < Int(0)) throw PreconditionError("exists_unnodal: rank must be >= 0");
  if (!is_primitive(v)) return verdict(false, ExistCase::NotPrimitive, {});
  if (v.r == Int(0)) {
    ExistenceCertificate cert;
    cert.ell = content(v);
    cert.square = mukai_square(v);
    bool eff = ns_square(v.c1) >= Int(0) && ns_pairing(v.c1, ctx.ample) > Int(0);
    cert.effective = eff;
    if (!eff) return verdict(false, ExistCase::URank0Ineffective, cert);
    ExistenceVerdict out = main_cases(v, false);
    out.certificate.effective = eff;
    return out;
  }
  return main_cases(v, false);
}

ExistenceVerdict exists_nodal(const MukaiVector& v, const SurfaceContext& ctx) {
  if (!ctx.nodal)
    throw PreconditionError("exists_nodal: context is not nodal");
  if (v.r < Int(0)) throw PreconditionError("exists_nodal: rank must be >= 0");
  if (v.r == Int(0) && ns_pairing(v.c1, ctx.ample) <= Int(0))
    throw PreconditionError("exists_nodal: rank 0 requires (c1, H) > 0");
  if (!is_primitive(v)) return verdict(false, ExistCase::NotPrimitive, {});
  ExistenceVerdict out = main_cases(v, true);
  if (out.nonempty) return out;
  Int sq = out.certificate.square;
  if (sq != Int(-2)) return out;
  // Exceptional case: c1 = D + (r/2) K_X mod 2 against the supplied cycles.
  ExistenceCertificate cert = out.certificate;
  cert.kappa_sensitive = true;
  if (ctx.nodal_cycles.empty()) {
    // Not decidable from the given data; distinct from a definitive empty.
    return verdict(false, ExistCase::N4Fail, cert);
  }
  for (size_t i = 0; i < ctx.nodal_cycles.size(); ++i) {
    const NSClass& d = ctx.nodal_cycles[i];
    if (!ns_congruent_mod2(v.c1, d)) continue;
    bool kap = kappa_matches(v, Int(d.kappa));
    if (!kap) {
      cert.kappa_congruent = false;
      continue;
    }
    cert.kappa_congruent = true;
    cert.matched_cycle = static_cast<int>(i);
    return verdict(true, ExistCase::N4, cert);
  }
  return verdict(false, ExistCase::NEmpty, cert);
}

MukaiVector exceptional_shadow(const MukaiVector& v) {
  if (v.r <= Int(0) || parity(v.r) != 0)
    throw PreconditionError("exceptional_shadow: rank must be even and positive");
  if (mukai_square(v) != Int(-2))
    throw PreconditionError("exceptional_shadow: <v^2> must be -2");
  NSClass c1 = v.c1;
  c1.kappa = parity(Int(v.c1.kappa) - (v.r / Int(2) - Int(1)));
  MukaiVector out(Int(2), c1, v.r * v.s / Int(2));
  if (mukai_square(out) != Int(-2))
    throw InvariantError("exceptional_shadow: square not preserved");
  return out;
}

bool exceptional_eta_test(const NSClass& eta, Int r, Int s, const SurfaceContext& ctx) {
  if (!ctx.nodal)
    throw PreconditionError("exceptional_eta_test: context is not nodal");
  if (ns_square(eta) + r * s != Int(-2))
    throw PreconditionError("exceptional_eta_test: (eta^2) + rs must be -2");
  for (const NSClass& d : ctx.nodal_cycles)
    if (ns_congruent_mod2(eta, d)) return true;
  return false;
}

}  // namespace enriques
