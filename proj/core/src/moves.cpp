#include "enriques/moves.hpp"

#include <string>

namespace enriques {

MukaiVector twist(const MukaiVector& v, const NSClass& d) {
  // kappa picks up r*kappa(D) mod 2 through the scalar multiply.
  NSClass c1 = v.c1 + v.r * d;
  Int s = v.s - Int(2) * ns_pairing(v.c1, d) - v.r * ns_square(d);
  return MukaiVector(v.r, c1, s);
}

MukaiVector reflect(const MukaiVector& v) {
  if (v.r <= Int(0))
    throw PreconditionError("reflect: rank must be positive");
  if (v.s <= Int(0))
    throw PreconditionError("reflect: s must be positive");
  if (ns_square(v.c1) >= Int(0))
    throw PreconditionError("reflect: (c1^2) must be negative");
  NSClass c1 = -v.c1;
  c1.kappa = (v.c1.kappa + parity((v.r + v.s) / Int(2))) & 1;
  return MukaiVector(v.s, c1, v.r);
}

NSClass hyp_change_class(const NSClass& x, const E8Vector& eta) {
  NSClass out;
  out.d1 = x.d1;
  out.d2 = x.d2 - x.d1 * (e8_square(eta) / Int(2)) - e8_pairing(x.e, eta);
  out.e = x.e + x.d1 * eta;
  out.kappa = x.kappa;
  return out;
}

namespace {

// The induced 10x10 matrix must satisfy M^T G M = G; checked on every call.
void check_hyp_isometry(const E8Vector& eta) {
  std::array<NSClass, 10> basis;
  basis[0] = sigma_class();
  basis[1] = f_class();
  for (int i = 0; i < 8; ++i) basis[2 + i] = alpha_class(i + 1);
  std::array<NSClass, 10> image;
  for (int i = 0; i < 10; ++i) image[i] = hyp_change_class(basis[i], eta);
  const Gram10& g = ns_gram();
  for (int i = 0; i < 10; ++i)
    for (int j = i; j < 10; ++j)
      if (ns_pairing(image[i], image[j]) != g[i][j])
        throw InvariantError("hyp_change: induced map is not an isometry");
}

}  // namespace

MukaiVector hyp_change(const MukaiVector& v, const E8Vector& eta) {
  check_hyp_isometry(eta);
  return MukaiVector(v.r, hyp_change_class(v.c1, eta), v.s);
}

Move Move::make_twist(const NSClass& d, const MukaiVector& at) {
  Move m;
  m.kind = Kind::Twist;
  m.twist_class = d;
  m.pre_square = mukai_square(at);
  m.pre_content = at.is_zero() ? Int(0) : content(at);
  return m;
}

Move Move::make_reflect(const MukaiVector& at) {
  Move m;
  m.kind = Kind::Reflect;
  m.pre_square = mukai_square(at);
  m.pre_content = at.is_zero() ? Int(0) : content(at);
  return m;
}

Move Move::make_hyp_change(const E8Vector& eta, const MukaiVector& at) {
  Move m;
  m.kind = Kind::HypChange;
  m.eta = eta;
  m.pre_square = mukai_square(at);
  m.pre_content = at.is_zero() ? Int(0) : content(at);
  return m;
}

MukaiVector apply_move(const MukaiVector& v, const Move& m) {
  switch (m.kind) {
    case Move::Kind::Twist:
      return twist(v, m.twist_class);
    case Move::Kind::Reflect:
      return reflect(v);
    case Move::Kind::HypChange:
      return hyp_change(v, m.eta);
  }
  throw InvariantError("apply_move: unknown move kind");
}

MukaiVector replay(const MoveTrace& trace) {
  MukaiVector v = trace.initial;
  for (size_t i = 0; i < trace.steps.size(); ++i) {
    const Move& m = trace.steps[i];
    const int idx = static_cast<int>(i);
    Int sq = mukai_square(v);
    Int ell = v.is_zero() ? Int(0) : content(v);
    bool prim = is_primitive(v);
    if (m.pre_square && *m.pre_square != sq)
      throw TraceError(idx, "recorded square snapshot does not match");
    if (m.pre_content && *m.pre_content != ell)
      throw TraceError(idx, "recorded content snapshot does not match");
    MukaiVector next;
    try {
      next = apply_move(v, m);
    } catch (const PreconditionError& e) {
      throw TraceError(idx, std::string("precondition failed: ") + e.what());
    }
    if (mukai_square(next) != sq)
      throw TraceError(idx, "move changed the Mukai square");
    Int ell_next = next.is_zero() ? Int(0) : content(next);
    if (ell_next != ell) throw TraceError(idx, "move changed the content");
    if (is_primitive(next) != prim)
      throw TraceError(idx, "move changed primitivity");
    v = next;
  }
  if (!(v == trace.final))
    throw TraceError(-1, "final vector does not match the recorded one");
  return v;
}

MukaiVector elliptic_shadow(const MukaiVector& v, const NSClass& fiber) {
  if (ns_square(fiber) != Int(0))
    throw PreconditionError("elliptic_shadow: fiber class must be isotropic");
  if (fiber.free_is_zero() || !ns_primitive(fiber))
    throw PreconditionError("elliptic_shadow: fiber class must be primitive");
  if (v.r <= Int(0))
    throw PreconditionError("elliptic_shadow: rank must be positive");
  if (Int(2) * ns_pairing(v.c1, fiber) != v.r)
    throw PreconditionError("elliptic_shadow: (c1, fiber) must equal r/2");
  NSClass d = v.c1 + v.s * fiber;
  d.kappa = 0;
  MukaiVector out(Int(0), d, Int(0));
  if (ns_square(d) != mukai_square(v) ||
      Int(2) * ns_pairing(d, fiber) != v.r)
    throw InvariantError("elliptic_shadow: postcondition failed");
  return out;
}

}  // namespace enriques
