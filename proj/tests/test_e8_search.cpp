#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <set>

#include "doctest.h"
#include "enriques/e8_search.hpp"

using namespace enriques;

namespace {

std::mt19937_64 rng(4242);
Int rnd(int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  return Int(d(rng));
}
E8Vector random_e8(int bound) {
  E8Vector e;
  for (int i = 0; i < 8; ++i) e.c[i] = rnd(-bound, bound);
  return e;
}

// Brute-force enumeration of a sup-norm ball, first match in shell order.
template <typename Pred>
bool brute_first(int radius, Pred&& pred, E8Vector* out) {
  for (int m = 0; m <= radius; ++m) {
    std::array<long long, 8> c;
    c.fill(-m);
    while (true) {
      bool on_shell = m == 0;
      for (long long x : c)
        if (x == m || x == -m) on_shell = true;
      if (on_shell) {
        E8Vector v;
        for (int i = 0; i < 8; ++i) v.c[i] = Int(c[i]);
        if (pred(v)) {
          *out = v;
          return true;
        }
      }
      int i = 7;
      while (i >= 0 && c[i] == m) c[i] = -m, --i;
      if (i < 0) break;
      ++c[i];
    }
  }
  return false;
}

}  // namespace

TEST_CASE("solve_pairing basics") {
  E8Vector a1 = e8_alpha(1);
  E8Vector eta = solve_pairing(a1, Int(1));
  CHECK(e8_pairing(a1, eta) == Int(1));

  CHECK(solve_pairing(a1, Int(0)).is_zero());

  CHECK_THROWS_AS(solve_pairing(Int(2) * a1, Int(1)), UnreachableTargetError);
  CHECK_THROWS_AS(solve_pairing(E8Vector{}, Int(1)), PreconditionError);
}

TEST_CASE("solve_pairing randomized correctness") {
  int solved = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    E8Vector xi = random_e8(5);
    if (xi.is_zero()) continue;
    Int c = e8_content(xi);
    Int t = c * rnd(-20, 20);
    E8Vector eta = solve_pairing(xi, t);
    CHECK(e8_pairing(xi, eta) == t);
    ++solved;
    if (c > Int(1)) {
      CHECK_THROWS_AS(solve_pairing(xi, t + Int(1)), UnreachableTargetError);
    }
  }
  CHECK(solved > 900);
}

TEST_CASE("pairing range law on a small ball") {
  // Over a radius-2 ball, {(xi, eta)} is exactly content(xi)*Z cut to the
  // achievable span.
  E8Vector xi = Int(2) * e8_alpha(1) + Int(2) * e8_alpha(4);
  Int c = e8_content(xi);
  REQUIRE(c == Int(2));
  std::set<long long> seen;
  E8Vector probe;
  brute_first(2, [&](const E8Vector& eta) {
    seen.insert(e8_pairing(xi, eta).get());
    return false;
  }, &probe);
  long long lo = *seen.begin(), hi = *seen.rbegin();
  for (long long t = lo; t <= hi; t += c.get()) CHECK(seen.count(t) == 1);
  for (long long t : seen) CHECK(t % c.get() == 0);
}

TEST_CASE("content_twist_search examples") {
  SearchConfig cfg;
  // Already content-correct and above the floor: D = 0.
  NSClass d0 = content_twist_search(Int(2), Int(2) * e8_alpha(1), Int(0), Int(2), Int(-8), cfg);
  CHECK(d0.free_is_zero());

  // Contract check: content exactly p, slot strictly above the floor.
  E8Vector xi{};
  NSClass d1 = content_twist_search(Int(2), xi, Int(2), Int(2), Int(4), cfg);
  Int s_next = Int(2) - Int(2) * e8_pairing(xi, d1.e) - Int(2) * e8_square(d1.e);
  CHECK(e8_content(xi + Int(2) * d1.e) == Int(2));
  CHECK(s_next > Int(4));

  NSClass d2 = content_twist_search(Int(4), e8_alpha(1), Int(0), Int(1), Int(0), cfg);
  CHECK(e8_content(e8_alpha(1) + Int(4) * d2.e) == Int(1));
  CHECK(Int(0) - Int(2) * e8_pairing(e8_alpha(1), d2.e) - Int(4) * e8_square(d2.e) > Int(0));

  CHECK_THROWS_AS(
      content_twist_search(Int(2), Int(2) * e8_alpha(1), Int(0), Int(1), Int(0), cfg),
      PreconditionError);  // p != gcd(r, content)
}

TEST_CASE("content_twist_search bound errors are explicit") {
  SearchConfig tiny{0};
  // With radius 0 only D = 0 is tried; an unreachable floor must error.
  CHECK_THROWS_AS(
      content_twist_search(Int(2), Int(2) * e8_alpha(1), Int(0), Int(2), Int(1000), tiny),
      SearchLimitError);
}

TEST_CASE("mod4_square_search") {
  E8Vector a1 = e8_alpha(1);
  E8Vector eta = mod4_square_search(a1);
  CHECK(mod_floor(e8_square(eta) - Int(2) * e8_pairing(a1, eta), Int(4)) == Int(2));
  CHECK_FALSE(eta.is_zero());  // eta = 0 gives 0, never 2 mod 4

  // alpha_2 is a valid witness; the search agrees with brute force on the
  // first solution in shell order.
  CHECK(mod_floor(e8_square(e8_alpha(2)) - Int(2) * e8_pairing(a1, e8_alpha(2)), Int(4)) ==
        Int(2));
  E8Vector brute;
  REQUIRE(brute_first(6, [&](const E8Vector& x) {
    return mod_floor(e8_square(x) - Int(2) * e8_pairing(a1, x), Int(4)) == Int(2);
  }, &brute));
  CHECK(brute == eta);

  CHECK_THROWS_AS(mod4_square_search(E8Vector{}), PreconditionError);
  SearchConfig tiny{0};
  CHECK_THROWS_AS(mod4_square_search(a1, tiny), SearchLimitError);
}

TEST_CASE("parity_pairing_search") {
  for (int i : {1, 3, 5}) {
    E8Vector xi = e8_alpha(i);
    E8Vector eta = parity_pairing_search(xi);
    Int q = e8_pairing(xi, eta);
    int half = parity(e8_square(eta) / Int(2));
    if (half == 0)
      CHECK(q == Int(-1));
    else
      CHECK(q == Int(1));
  }
  CHECK_THROWS_AS(parity_pairing_search(Int(2) * e8_alpha(1)), PreconditionError);
  SearchConfig tiny{0};
  CHECK_THROWS_AS(parity_pairing_search(e8_alpha(1), tiny), SearchLimitError);
}

TEST_CASE("raise_slot_search clears the floor") {
  for (int trial = 0; trial < 100; ++trial) {
    E8Vector xi = random_e8(3);
    Int rank = Int(2) * rnd(1, 4);
    Int slot = rnd(-8, 8) * Int(2);
    Int floor = rnd(-4, 60);
    E8Vector eta = raise_slot_search(rank, xi, slot, floor);
    Int raised = slot - Int(2) * e8_pairing(xi, eta) - rank * e8_square(eta);
    CHECK(raised > floor);
  }
  // Already above the floor: the zero vector comes back.
  CHECK(raise_slot_search(Int(2), E8Vector{}, Int(10), Int(3)).is_zero());
}

TEST_CASE("searches are deterministic") {
  E8Vector xi = random_e8(3);
  if (xi.is_zero()) xi = e8_alpha(2);
  CHECK(solve_pairing(xi, e8_content(xi) * Int(3)) ==
        solve_pairing(xi, e8_content(xi) * Int(3)));
  CHECK(mod4_square_search(xi) == mod4_square_search(xi));
  NSClass a = content_twist_search(Int(2), xi, Int(0), gcd(Int(2), e8_content(xi)), Int(-100));
  NSClass b = content_twist_search(Int(2), xi, Int(0), gcd(Int(2), e8_content(xi)), Int(-100));
  CHECK(a == b);
}
