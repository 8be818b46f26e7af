#include "enriques/reduction.hpp"

#include <string>

namespace enriques {

namespace {

Int max_int(Int a, Int b) { return a > b ? a : b; }
Int ceil_div_pos(Int a, Int b) { return (a + b - Int(1)) / b; }

// Which isotropic generator carries the (r/2)b coefficient.
enum class Orientation { FCarrier, SigmaCarrier };

// The isotropic twist class built from eta: sigma - (eta^2/2) f + eta, or
// its mirror with the sigma/f roles exchanged.
NSClass isotropic_twist_class(Orientation o, const E8Vector& eta) {
  NSClass d;
  Int half_sq = e8_square(eta) / Int(2);
  if (o == Orientation::FCarrier) {
    d.d1 = 1;
    d.d2 = -half_sq;
  } else {
    d.d2 = 1;
    d.d1 = -half_sq;
  }
  d.e = eta;
  return d;
}

struct Reducer {
  ReduceConfig cfg;
  MukaiVector v;
  std::vector<Move> steps;
  Int sq;    // <v^2>, conserved
  Int ell;   // content, conserved

  Reducer(const MukaiVector& start, const ReduceConfig& c)
      : cfg(c), v(start), sq(mukai_square(start)), ell(content(start)) {}

  void bump() {
    if (static_cast<int>(steps.size()) >= cfg.step_cap)
      throw StepCapError("reduction: step cap " + std::to_string(cfg.step_cap) +
                         " exceeded");
  }
  void do_twist(const NSClass& d) {
    if (d.free_is_zero() && d.kappa == 0) return;
    bump();
    steps.push_back(Move::make_twist(d, v));
    v = twist(v, d);
  }
  void do_reflect() {
    bump();
    steps.push_back(Move::make_reflect(v));
    v = reflect(v);
  }
  void do_hyp(const E8Vector& eta) {
    if (eta.is_zero()) return;
    bump();
    steps.push_back(Move::make_hyp_change(eta, v));
    v = hyp_change(v, eta);
  }

  Int slot_floor() const { return max_int(sq, Int(0)); }

  // E8 twist raising the slot strictly past the floor.
  void boost_slot() {
    E8Vector eta = raise_slot_search(v.r, v.c1.e, v.s, slot_floor(), cfg.search);
    do_twist(e8_embed(eta));
  }

  // Brings the sigma (which == 0) or f (which == 1) coefficient of c1 into
  // (-r/2, r/2], twisting by multiples of sigma resp. f.
  void normalize_coeff(int which) {
    Int r = v.r;
    Int d = which == 0 ? v.c1.d1 : v.c1.d2;
    Int m = mod_floor(d, r);
    if (Int(2) * m > r) m -= r;
    if (m == d) return;
    Int k = (m - d) / r;
    do_twist(k * (which == 0 ? sigma_class() : f_class()));
  }

  // One round of the rank induction: raise the slot, reflect, twist by a
  // multiple of the complementary isotropic generator so the new slot
  // lands in (0, 2|d|], reflect back.  Strictly decreases the rank.
  void rank_drop_round(int which) {
    Int d = which == 0 ? v.c1.d1 : v.c1.d2;
    Int r_before = v.r;
    boost_slot();
    do_reflect();
    Int r0 = v.s;  // former rank, now in the slot
    Int ad = abs(d);
    Int q = ceil_div_pos(r0, Int(2) * ad) - Int(1);
    Int k = d > Int(0) ? -q : q;
    // Twisting by k*f changes the slot by 2k*(c1, f); with the reflected
    // c1 this is r0 + 2kd.  The sigma-coefficient case mirrors.
    do_twist(k * (which == 0 ? f_class() : sigma_class()));
    do_reflect();
    if (!(v.r < r_before) || parity(v.r) != parity(r_before) || v.r <= Int(0))
      throw InvariantError("reduction: rank did not drop");
  }

  // Slot-and-content normalization chain for shape (r, (r/2)b f + xi, s)
  // (or the sigma-carried mirror).  Direct: two twist+reflect rounds ending
  // in the same shape with content(xi') = l and rank > <v^2>.  Reflected:
  // one more round, ending in the negated shape.
  void normalize_impl(NormalizeVariant variant) {
    Int l = gcd(gcd(v.r, v.s), e8_content(v.c1.e));
    bool already = e8_content(v.c1.e) == l && v.r > sq;
    if (!already) {
      for (int round = 0; round < 2; ++round) {
        Int p = gcd(v.r, e8_content(v.c1.e));
        Int target = round == 0 ? p : l;
        do_twist(content_twist_search(v.r, v.c1.e, v.s, target, slot_floor(), cfg.search));
        do_reflect();
      }
      if (e8_content(v.c1.e) != l || !(v.r > sq))
        throw InvariantError("normalize: postcondition failed");
    }
    if (variant == NormalizeVariant::Reflected) {
      do_twist(content_twist_search(v.r, v.c1.e, v.s, l, slot_floor(), cfg.search));
      do_reflect();
      if (e8_content(v.c1.e) != l || !(v.s > sq))
        throw InvariantError("normalize: reflected postcondition failed");
    }
  }

  bool canonical_even() const {
    if (v.r != Int(2)) return false;
    if (ell == Int(2)) return v.c1.free_is_zero();
    return ns_content(v.c1) == Int(1);
  }

  // Rank-2 landing for shape (r, (r/2)b f + xi, s) / mirrored.  After the
  // normalization, one twist by m*D with D = sigma - (eta^2/2) f + eta and
  // (c1, D) = l' brings the slot to exactly 2, and the reflection lands at
  // rank 2.  l' is 1 whenever the pairing equation allows it; only the
  // content-2 shape with an even carrier coefficient needs l' = 2, and
  // there the slot is 2 mod 4 so the multiplicity m stays integral.
  void land_impl(Orientation o) {
    for (int pass = 0; pass < 4; ++pass) {
      if (canonical_even()) return;
      Int carrier = o == Orientation::FCarrier ? v.c1.d2 : v.c1.d1;
      Int l = gcd(gcd(v.r, v.s), e8_content(v.c1.e));
      int r4 = static_cast<int>(mod_floor(v.r, Int(4)).get());
      int s4 = static_cast<int>(mod_floor(v.s, Int(4)).get());
      if (r4 == 2 && carrier == Int(0) && l == Int(2)) {
        // Route through the reflected normalization; the result has rank
        // 0 mod 4 and slot 2 mod 4, handled by the next pass.
        normalize_impl(NormalizeVariant::Reflected);
        continue;
      }
      if (r4 == 0 && s4 == 0 && l != Int(1))
        throw InvariantError("land_rank2: content 2 with r = s = 0 mod 4 is not primitive");
      normalize_impl(NormalizeVariant::Direct);
      Int l_eff = (l == Int(1) || parity(carrier) == 1) ? Int(1) : Int(2);
      if (mod_floor(v.s - Int(2), Int(2) * l_eff) != Int(0))
        throw InvariantError("land_rank2: slot congruence failed");
      E8Vector eta = solve_pairing(v.c1.e, l_eff - carrier);
      NSClass d = isotropic_twist_class(o, eta);
      Int m = (v.s - Int(2)) / (Int(2) * l_eff);
      do_twist(m * d);
      if (v.s != Int(2))
        throw InvariantError("land_rank2: slot did not land at 2");
      do_reflect();
      break;
    }
    if (ell == Int(2) && !v.c1.free_is_zero()) {
      // content(c1) is exactly 2 here; one twist clears it.
      NSClass w;
      w.d1 = v.c1.d1 / Int(2);
      w.d2 = v.c1.d2 / Int(2);
      for (int i = 0; i < 8; ++i) w.e.c[i] = v.c1.e.c[i] / Int(2);
      do_twist(-w);
    }
    if (!canonical_even())
      throw InvariantError("land_rank2: landing is not canonical");
  }

  // Hyperbolic basis change for the (r/2, r/2) configuration: normalize the
  // E8 content k' along its primitive direction, pick eta by the parity /
  // mod-4 rule, and apply the inverse basis change.  The f-coefficient of
  // the image is k', r/2 - k' or 0 mod r, so the next round either reaches
  // a base shape or a rank-dropping one.
  void half_half_round() {
    Int r = v.r;
    Int half = r / Int(2);
    E8Vector xi = v.c1.e;
    E8Vector xp{};
    Int kp = 0;
    if (!xi.is_zero()) {
      Int kc = e8_content(xi);
      for (int i = 0; i < 8; ++i) xp.c[i] = xi.c[i] / kc;
      Int m = mod_floor(kc, r);
      if (Int(2) * m > r) m -= r;
      if (m != kc) do_twist(((m - kc) / r) * e8_embed(xp));
      if (m < Int(0)) {
        xp = -xp;
        m = -m;
      }
      kp = m;
    }
    E8Vector eta;
    if (kp == Int(0))
      eta = e8_alpha(1);
    else if (kp == half)
      eta = mod4_square_search(xp, cfg.search);
    else
      eta = parity_pairing_search(xp, cfg.search);
    do_hyp(-eta);
  }

  void run_even() {
    for (int guard = 0; guard < 4 * cfg.step_cap; ++guard) {
      Int r = v.r;
      if (r == Int(2) && canonical_even()) return;
      normalize_coeff(0);
      Int d1 = v.c1.d1;
      if (d1 != Int(0) && Int(2) * d1 != r) {
        rank_drop_round(0);
        continue;
      }
      normalize_coeff(1);
      Int d2 = v.c1.d2;
      if (d2 != Int(0) && Int(2) * d2 != r) {
        rank_drop_round(1);
        continue;
      }
      if (Int(2) * d1 == r && Int(2) * d2 == r) {
        half_half_round();
        continue;
      }
      if (Int(2) * d1 == r) {
        land_impl(Orientation::SigmaCarrier);
      } else {
        land_impl(Orientation::FCarrier);
      }
      return;
    }
    throw InvariantError("reduce_even: no progress within the step budget");
  }

  void run_odd() {
    for (int guard = 0; guard < 4 * cfg.step_cap; ++guard) {
      Int r = v.r;
      if (r == Int(1)) {
        // Twisting by -c1 (torsion part included) clears the determinant.
        NSClass d = -v.c1;
        do_twist(d);
        if (!(v.c1.free_is_zero() && v.s == sq))
          throw InvariantError("reduce_odd: rank-1 landing failed");
        return;
      }
      normalize_coeff(0);
      if (v.c1.d1 != Int(0)) {
        rank_drop_round(0);
        continue;
      }
      normalize_coeff(1);
      if (v.c1.d2 != Int(0)) {
        rank_drop_round(1);
        continue;
      }
      // Pure E8 determinant: normalize to a primitive xi', land the slot
      // at 1 with one isotropic twist, reflect to rank 1.
      normalize_impl(NormalizeVariant::Direct);
      E8Vector eta = solve_pairing(v.c1.e, Int(1));
      NSClass d = isotropic_twist_class(Orientation::FCarrier, eta);
      Int k = (v.s - Int(1)) / Int(2);
      do_twist(k * d);
      if (v.s != Int(1)) throw InvariantError("reduce_odd: slot did not land at 1");
      do_reflect();
      // rank is 1 now; the loop closes it out.
    }
    throw InvariantError("reduce_odd: no progress within the step budget");
  }

  MoveTrace trace(const MukaiVector& initial) const {
    return MoveTrace{initial, steps, v};
  }
};

void require_shape_f_carried(const MukaiVector& v) {
  if (v.c1.d1 != Int(0))
    throw PreconditionError("shape: c1 has a sigma-component");
  Int r = v.r;
  Int d2 = v.c1.d2;
  if (!(d2 == Int(0) || Int(2) * d2 == r || Int(-2) * d2 == r))
    throw PreconditionError("shape: f-coefficient of c1 must be (r/2)b with b in {0,-1,1}");
}

void verify_conserved(const CanonicalForm& c, Int sq0, Int ell0) {
  if (mukai_square(c.vector) != sq0)
    throw InvariantError("reduction: Mukai square not conserved");
  if (content(c.vector) != ell0)
    throw InvariantError("reduction: content not conserved");
  if (!is_primitive(c.vector))
    throw InvariantError("reduction: primitivity not conserved");
}

}  // namespace

std::pair<MukaiVector, MoveTrace> normalize_shape(const MukaiVector& v,
                                                  NormalizeVariant variant,
                                                  const ReduceConfig& cfg) {
  if (!is_primitive(v)) throw PreconditionError("normalize_shape: vector not primitive");
  if (parity(v.r) != 0 || v.r <= Int(0))
    throw PreconditionError("normalize_shape: rank must be even and positive");
  require_shape_f_carried(v);
  Reducer red(v, cfg);
  Int l = gcd(gcd(v.r, v.s), e8_content(v.c1.e));
  red.normalize_impl(variant);
  // Congruence checks mod 2l for both slots.
  Int two_l = Int(2) * l;
  if (variant == NormalizeVariant::Direct) {
    if (mod_floor(red.v.r - v.r, two_l) != Int(0) || mod_floor(red.v.s - v.s, two_l) != Int(0))
      throw InvariantError("normalize_shape: congruence mod 2l failed");
  } else {
    if (mod_floor(red.v.r - v.s, two_l) != Int(0) || mod_floor(red.v.s - v.r, two_l) != Int(0))
      throw InvariantError("normalize_shape: congruence mod 2l failed");
  }
  MoveTrace t = red.trace(v);
  replay(t);
  return {red.v, t};
}

CanonicalForm land_rank2(const MukaiVector& v, const ReduceConfig& cfg) {
  if (!is_primitive(v)) throw PreconditionError("land_rank2: vector not primitive");
  if (parity(v.r) != 0 || v.r <= Int(0))
    throw PreconditionError("land_rank2: rank must be even and positive");
  require_shape_f_carried(v);
  Reducer red(v, cfg);
  red.land_impl(Orientation::FCarrier);
  CanonicalForm out{red.v, red.ell, red.trace(v)};
  verify_conserved(out, red.sq, red.ell);
  replay(out.trace);
  return out;
}

CanonicalForm reduce_even(const MukaiVector& v, const ReduceConfig& cfg) {
  if (!is_primitive(v)) throw PreconditionError("reduce_even: vector not primitive");
  if (parity(v.r) != 0 || v.r <= Int(0))
    throw PreconditionError("reduce_even: rank must be even and positive");
  Reducer red(v, cfg);
  red.run_even();
  CanonicalForm out{red.v, red.ell, red.trace(v)};
  verify_conserved(out, red.sq, red.ell);
  if (out.vector.r != Int(2))
    throw InvariantError("reduce_even: did not land at rank 2");
  if (red.ell == Int(2)) {
    if (!out.vector.c1.free_is_zero() || Int(2) * out.vector.s != red.sq)
      throw InvariantError("reduce_even: content-2 canonical shape failed");
  } else if (ns_content(out.vector.c1) != Int(1)) {
    throw InvariantError("reduce_even: content-1 canonical c1 not primitive");
  }
  replay(out.trace);
  return out;
}

CanonicalForm reduce_odd(const MukaiVector& v, const ReduceConfig& cfg) {
  if (!is_primitive(v)) throw PreconditionError("reduce_odd: vector not primitive");
  if (parity(v.r) != 1 || v.r <= Int(0))
    throw PreconditionError("reduce_odd: rank must be odd and positive");
  Reducer red(v, cfg);
  red.run_odd();
  CanonicalForm out{red.v, red.ell, red.trace(v)};
  verify_conserved(out, red.sq, red.ell);
  if (out.vector.r != Int(1) || !out.vector.c1.free_is_zero() || out.vector.s != red.sq)
    throw InvariantError("reduce_odd: did not land at (1, 0, <v^2>)");
  replay(out.trace);
  return out;
}

}  // namespace enriques
