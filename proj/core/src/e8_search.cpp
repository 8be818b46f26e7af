#include "enriques/e8_search.hpp"

#include <string>

namespace enriques {

namespace {

// Shell-by-shell enumeration: sup-norm 0, 1, ..., radius; within one shell
// lexicographic ascending with the first coordinate most significant.
template <typename Visit>
bool enumerate_shells(int radius, Visit&& visit) {
  for (int m = 0; m <= radius; ++m) {
    if (m == 0) {
      E8Vector zero{};
      if (visit(zero)) return true;
      continue;
    }
    std::array<long long, 8> c;
    c.fill(-m);
    while (true) {
      bool on_shell = false;
      for (long long x : c)
        if (x == m || x == -m) { on_shell = true; break; }
      if (on_shell) {
        E8Vector v;
        for (int i = 0; i < 8; ++i) v.c[i] = Int(c[i]);
        if (visit(v)) return true;
      }
      int i = 7;
      while (i >= 0 && c[i] == m) { c[i] = -m; --i; }
      if (i < 0) break;
      ++c[i];
    }
  }
  return false;
}

}  // namespace

E8Vector solve_pairing(const E8Vector& xi, Int t) {
  if (xi.is_zero()) throw PreconditionError("solve_pairing: xi must be nonzero");
  // w = Gram * xi; (xi, eta) = sum w_i eta_i.
  const auto& g = e8_gram();
  std::array<Int, 8> w{};
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (g[i][j] != 0) w[i] += Int(g[i][j]) * xi.c[j];

  Int acc = 0;
  std::array<Int, 8> coeff{};
  for (int i = 0; i < 8; ++i) {
    ExtGcd e = ext_gcd(acc, w[i]);
    for (int j = 0; j < i; ++j) coeff[j] = coeff[j] * e.x;
    coeff[i] = e.y;
    acc = e.g;
  }
  if (acc == Int(0) || t % acc != Int(0))
    throw UnreachableTargetError("solve_pairing: target " + std::to_string(t.get()) +
                                 " is not a multiple of content " + std::to_string(acc.get()));
  Int scale = t / acc;
  E8Vector eta;
  for (int i = 0; i < 8; ++i) eta.c[i] = scale * coeff[i];
  if (e8_pairing(xi, eta) != t)
    throw InvariantError("solve_pairing: solution failed verification");
  return eta;
}

NSClass content_twist_search(Int r, const E8Vector& xi, Int s, Int p, Int floor,
                             const SearchConfig& cfg) {
  if (p != gcd(r, e8_content(xi)))
    throw PreconditionError("content_twist_search: p must equal gcd(r, content(xi))");
  E8Vector found;
  bool ok = enumerate_shells(cfg.radius, [&](const E8Vector& d) {
    E8Vector xi1 = xi + r * d;
    if (e8_content(xi1) != p) return false;
    Int s_next = s - Int(2) * e8_pairing(xi, d) - r * e8_square(d);
    if (s_next <= floor) return false;
    found = d;
    return true;
  });
  if (!ok)
    throw SearchLimitError("content_twist_search: no solution within radius " +
                           std::to_string(cfg.radius));
  // Re-verify the postcondition independently of the scan above.
  if (e8_content(xi + r * found) != p ||
      s - Int(2) * e8_pairing(xi, found) - r * e8_square(found) <= floor)
    throw InvariantError("content_twist_search: postcondition failed");
  return e8_embed(found);
}

E8Vector mod4_square_search(const E8Vector& xi_prime, const SearchConfig& cfg) {
  if (xi_prime.is_zero())
    throw PreconditionError("mod4_square_search: xi' must be nonzero");
  E8Vector found;
  bool ok = enumerate_shells(cfg.radius, [&](const E8Vector& eta) {
    Int val = e8_square(eta) - Int(2) * e8_pairing(xi_prime, eta);
    if (mod_floor(val, Int(4)) != Int(2)) return false;
    found = eta;
    return true;
  });
  if (!ok)
    throw SearchLimitError("mod4_square_search: no solution within radius " +
                           std::to_string(cfg.radius));
  return found;
}

E8Vector parity_pairing_search(const E8Vector& xi_prime, const SearchConfig& cfg) {
  if (e8_content(xi_prime) != Int(1))
    throw PreconditionError("parity_pairing_search: xi' must be primitive");
  E8Vector found;
  bool ok = enumerate_shells(cfg.radius, [&](const E8Vector& eta) {
    Int q = e8_pairing(xi_prime, eta);
    int half_sq_parity = parity(e8_square(eta) / Int(2));
    bool good = (half_sq_parity == 0 && q == Int(-1)) || (half_sq_parity == 1 && q == Int(1));
    if (!good) return false;
    found = eta;
    return true;
  });
  if (!ok)
    throw SearchLimitError("parity_pairing_search: no solution within radius " +
                           std::to_string(cfg.radius));
  return found;
}

E8Vector raise_slot_search(Int rank, const E8Vector& xi, Int slot, Int floor,
                           const SearchConfig& cfg) {
  if (rank <= Int(0)) throw PreconditionError("raise_slot_search: rank must be positive");
  E8Vector found;
  bool ok = enumerate_shells(cfg.radius, [&](const E8Vector& eta) {
    Int raised = slot - Int(2) * e8_pairing(xi, eta) - rank * e8_square(eta);
    if (raised <= floor) return false;
    found = eta;
    return true;
  });
  if (!ok)
    throw SearchLimitError("raise_slot_search: no solution within radius " +
                           std::to_string(cfg.radius));
  return found;
}

}  // namespace enriques
