// Acceptance suite.  Runs every criterion at its stated tolerance and prints
// one [PASS]/[FAIL] line per criterion; exits nonzero if any fail.
//
// The reduction and odd-rank sweeps (criteria 3, 4) and the verdict sweeps
// (criteria 6-9) enumerate the coefficient box [-1,1]^10 (the documented
// fallback bound; the [-2,2] box exceeds the single-threaded time budget).
// Everything checked is exact; there are no tolerances to tune.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "enriques/existence.hpp"
#include "enriques/json_io.hpp"
#include "enriques/oracle.hpp"
#include "enriques/reduction.hpp"

using namespace enriques;

namespace {

int g_failed = 0;

void report(int id, const std::string& label, bool pass, const std::string& detail,
            double seconds) {
  std::printf("[%s] criterion %2d: %s (%s, %.1fs)\n", pass ? "PASS" : "FAIL", id,
              label.c_str(), detail.c_str(), seconds);
  std::fflush(stdout);
  if (!pass) ++g_failed;
}

void run(int id, const std::string& label, const std::function<bool(std::string&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool pass = false;
  try {
    pass = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(id, label, pass, detail, dt);
}

// Enumerate all NSClass free parts with coordinates in [-bound, bound],
// lexicographic; callback returns false to abort.
template <typename F>
void for_each_class(int bound, F&& fn) {
  std::array<long long, 10> c{};
  c.fill(-bound);
  while (true) {
    NSClass cl;
    cl.d1 = Int(c[0]);
    cl.d2 = Int(c[1]);
    for (int i = 0; i < 8; ++i) cl.e.c[i] = Int(c[2 + i]);
    if (!fn(cl)) return;
    int i = 9;
    while (i >= 0 && c[i] == bound) c[i] = -bound, --i;
    if (i < 0) return;
    ++c[i];
  }
}

struct Rng {
  std::mt19937_64 g;
  explicit Rng(uint64_t seed) : g(seed) {}
  long long pick(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(g);
  }
  NSClass cls(int bound) {
    NSClass c;
    c.d1 = Int(pick(-bound, bound));
    c.d2 = Int(pick(-bound, bound));
    for (int i = 0; i < 8; ++i) c.e.c[i] = Int(pick(-bound, bound));
    c.kappa = static_cast<int>(pick(0, 1));
    return c;
  }
  MukaiVector vec(long long rank_bound, long long s_bound, int coeff_bound) {
    Int r = Int(pick(0, rank_bound));
    Int s = Int(pick(-s_bound, s_bound));
    if (parity(r) != parity(s)) s += Int(1);
    return MukaiVector(r, cls(coeff_bound), s);
  }
};

bool criterion1(std::string& detail) {
  const Gram10& g = ns_gram();
  bool diag_even = true;
  for (int i = 0; i < 10; ++i)
    if (parity(g[i][i]) != 0) diag_even = false;
  Gram10 e8{};
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) e8[i][j] = g[2 + i][2 + j];
  Int d10 = gram_determinant(g, 10);
  Int d8 = gram_determinant(e8, 8);
  std::ostringstream ss;
  ss << "det G = " << d10 << ", det E8(-1) = " << d8 << ", diagonals even: "
     << (diag_even ? "yes" : "no");
  detail = ss.str();
  return d10 == Int(-1) && d8 == Int(1) && diag_even;
}

bool criterion2(std::string& detail) {
  // Random pairs drawn from the r <= 6, |s| <= 6, [-1,1]^10, both-kappa box;
  // 200 random moves applied to each pair, pairing compared exactly.  A
  // move that would overflow the checked 64-bit range restarts the walk at
  // the original pair (detected, counted, never silent).
  Rng rng(60601);
  long long pairs = 5000, moves_checked = 0, reflect_checked = 0, restarts = 0;
  for (long long p = 0; p < pairs; ++p) {
    MukaiVector v0 = rng.vec(6, 6, 1);
    MukaiVector w0 = rng.vec(6, 6, 1);
    Int expected = mukai_pairing(v0, w0);
    MukaiVector v = v0, w = w0;
    for (int m = 0; m < 200; ++m) {
      try {
        switch (rng.pick(0, 2)) {
          case 0: {
            NSClass d = rng.cls(1);
            v = twist(v, d);
            w = twist(w, d);
            break;
          }
          case 1: {
            E8Vector eta;
            for (int i = 0; i < 8; ++i) eta.c[i] = Int(rng.pick(-1, 1));
            v = hyp_change(v, eta);
            w = hyp_change(w, eta);
            break;
          }
          default: {
            auto ok = [](const MukaiVector& x) {
              return x.r > Int(0) && x.s > Int(0) && ns_square(x.c1) < Int(0);
            };
            if (ok(v) && ok(w)) {
              v = reflect(v);
              w = reflect(w);
              ++reflect_checked;
            }
            break;
          }
        }
        ++moves_checked;
        if (mukai_pairing(v, w) != expected) {
          detail = "pairing drifted";
          return false;
        }
      } catch (const OverflowError&) {
        v = v0;
        w = w0;
        ++restarts;
      }
    }
  }
  std::ostringstream ss;
  ss << pairs << " pairs x 200 moves (" << moves_checked << " checks, " << reflect_checked
     << " reflections, " << restarts << " overflow restarts), pairing exact";
  detail = ss.str();
  return true;
}

struct EvenSweep {
  long long total = 0, reduced = 0, replay_failures = 0;
  long long canonical_mismatch = 0, verdict_mismatch = 0;
  bool ok = true;
  std::string first_bad;
};

// Shared even-rank sweep: reduction shape (criterion 3), implicit trace
// verification counts (criterion 5), and verdict-vs-canonical agreement for
// both kappa values (criterion 7).  Even-rank moves never read kappa, so the
// kappa = 1 canonical form is the kappa = 0 one with the trace's parity
// shift applied; reducing once per free datum covers both.
EvenSweep even_sweep(const SurfaceContext& ctx) {
  EvenSweep out;
  ReduceConfig cfg;  // step cap 64, radius 6
  for (long long r = 2; r <= 8; r += 2) {
    for (long long s = -8; s <= 8; s += 2) {
      for_each_class(1, [&](NSClass cl) {
        MukaiVector v(Int(r), cl, Int(s));
        if (!is_primitive(v)) return true;
        ++out.total;
        CanonicalForm c;
        try {
          c = reduce_even(v, cfg);  // replay-verified internally
          ++out.reduced;
        } catch (const Error& e) {
          ++out.replay_failures;
          if (out.first_bad.empty()) {
            std::ostringstream ss;
            ss << v << ": " << e.what();
            out.first_bad = ss.str();
          }
          out.ok = false;
          return true;
        }
        Int sq = mukai_square(v);
        bool shape_ok = c.vector.r == Int(2) && mukai_square(c.vector) == sq &&
                        content(c.vector) == content(v) &&
                        static_cast<int>(c.trace.steps.size()) <= cfg.step_cap;
        if (c.ell == Int(2))
          shape_ok = shape_ok && c.vector.c1.free_is_zero() && Int(2) * c.vector.s == sq;
        else
          shape_ok = shape_ok && ns_content(c.vector.c1) == Int(1) &&
                     ns_square(c.vector.c1) + Int(2) * c.vector.s == sq;
        if (!shape_ok) {
          ++out.canonical_mismatch;
          if (out.first_bad.empty()) {
            std::ostringstream ss;
            ss << v << ": canonical shape";
            out.first_bad = ss.str();
          }
          out.ok = false;
        }
        // Verdict agreement for both kappa values of the input.
        for (int kappa = 0; kappa <= 1; ++kappa) {
          MukaiVector vk = v;
          vk.c1.kappa = kappa;
          MukaiVector ck = c.vector;
          ck.c1.kappa = (c.vector.c1.kappa + (kappa - v.c1.kappa)) & 1;
          if (exists_unnodal(vk, ctx).nonempty != exists_unnodal(ck, ctx).nonempty) {
            ++out.verdict_mismatch;
            out.ok = false;
            if (out.first_bad.empty()) {
              std::ostringstream ss;
              ss << vk << ": verdict vs canonical";
              out.first_bad = ss.str();
            }
          }
        }
        return true;
      });
    }
  }
  return out;
}

const EvenSweep& shared_even_sweep() {
  static const EvenSweep sweep = even_sweep(SurfaceContext{});
  return sweep;
}

bool criterion3(std::string& detail) {
  const EvenSweep& s = shared_even_sweep();
  std::ostringstream ss;
  ss << s.reduced << "/" << s.total
     << " primitive even vectors (2<=r<=8, |s|<=8, coeffs [-1,1]) reduced with cap 64, "
        "radius 6; shape mismatches "
     << s.canonical_mismatch;
  if (!s.first_bad.empty()) ss << "; first: " << s.first_bad;
  detail = ss.str();
  return s.reduced == s.total && s.canonical_mismatch == 0;
}

bool criterion4(std::string& detail) {
  long long total = 0, good = 0;
  std::string first_bad;
  ReduceConfig cfg;
  for (long long r = 1; r <= 8; r += 2) {
    for (long long s = -7; s <= 7; s += 2) {
      for_each_class(1, [&](NSClass cl) {
        MukaiVector v(Int(r), cl, Int(s));
        if (!is_primitive(v)) return true;
        ++total;
        try {
          CanonicalForm c = reduce_odd(v, cfg);
          if (c.vector.r == Int(1) && c.vector.c1.free_is_zero() &&
              c.vector.s == mukai_square(v))
            ++good;
          else if (first_bad.empty()) {
            std::ostringstream ss;
            ss << v << ": wrong canonical";
            first_bad = ss.str();
          }
        } catch (const Error& e) {
          if (first_bad.empty()) {
            std::ostringstream ss;
            ss << v << ": " << e.what();
            first_bad = ss.str();
          }
        }
        return true;
      });
    }
  }
  std::ostringstream ss;
  ss << good << "/" << total << " primitive odd vectors landed at (1, 0, <v^2>)";
  if (!first_bad.empty()) ss << "; first: " << first_bad;
  detail = ss.str();
  return good == total && total > 0;
}

bool criterion5(std::string& detail) {
  // Every reduction above already replays its trace internally (a failure
  // throws).  Here: an independent replay of fresh traces, then mutations.
  const EvenSweep& s = shared_even_sweep();
  if (s.replay_failures != 0) {
    detail = "replay failures during the sweep";
    return false;
  }
  Rng rng(505);
  long long replayed = 0;
  CanonicalForm sample;
  for (int i = 0; i < 200; ++i) {
    MukaiVector v = rng.vec(8, 8, 1);
    if (!is_primitive(v) || v.r <= Int(0)) continue;
    CanonicalForm c = parity(v.r) == 0 ? reduce_even(v) : reduce_odd(v);
    if (replay(c.trace) != c.vector) {
      detail = "independent replay mismatch";
      return false;
    }
    ++replayed;
    if (!c.trace.steps.empty()) sample = c;
  }
  if (sample.trace.steps.empty()) {
    detail = "no nonempty trace sampled";
    return false;
  }
  // Mutations must be rejected.
  int rejected = 0;
  {
    MoveTrace bad = sample.trace;
    bad.final.s += Int(2);
    try {
      replay(bad);
    } catch (const TraceError&) {
      ++rejected;
    }
  }
  {
    MoveTrace bad = sample.trace;
    bad.steps.pop_back();
    try {
      replay(bad);
    } catch (const TraceError&) {
      ++rejected;
    }
  }
  {
    MoveTrace bad = sample.trace;
    for (Move& m : bad.steps)
      if (m.kind == Move::Kind::Twist) {
        m.twist_class.d2 += Int(1);
        break;
      }
    try {
      if (!(replay(bad) == sample.vector)) ++rejected;
    } catch (const TraceError&) {
      ++rejected;
    }
  }
  std::ostringstream ss;
  ss << (s.reduced + replayed) << " traces replayed (" << s.reduced
     << " during the sweep), 3/3 mutations rejected";
  detail = ss.str();
  return rejected == 3;
}

bool criterion6(std::string& detail) {
  SurfaceContext ctx;
  MukaiVector v200(Int(2), NSClass{}, Int(0));
  ExistenceVerdict k0 = exists_unnodal(v200, ctx);
  MukaiVector v200k1 = v200;
  v200k1.c1.kappa = 1;
  ExistenceVerdict k1 = exists_unnodal(v200k1, ctx);
  if (k0.nonempty || !k1.nonempty) {
    detail = "M(2,0,0) fixed point failed";
    return false;
  }
  // Rank 2 with primitive c1: nonempty iff (c1^2) + 2s >= -1.
  long long checked = 0, bad = 0;
  for (long long s = -8; s <= 8; s += 2) {
    for_each_class(1, [&](NSClass cl) {
      if (ns_content(cl) != Int(1)) return true;
      MukaiVector v(Int(2), cl, Int(s));
      ++checked;
      bool expect = ns_square(cl) + Int(2) * Int(s) >= Int(-1);
      if (exists_unnodal(v, ctx).nonempty != expect) ++bad;
      return true;
    });
  }
  std::ostringstream ss;
  ss << "M(2,0,0): kappa 0 empty / kappa 1 nonempty; rank-2 primitive-c1 threshold over "
     << checked << " vectors, " << bad << " mismatches";
  detail = ss.str();
  return bad == 0;
}

bool criterion7(std::string& detail) {
  const EvenSweep& s = shared_even_sweep();
  if (s.verdict_mismatch != 0) {
    std::ostringstream ss;
    ss << s.verdict_mismatch << " canonical-verdict mismatches; first: " << s.first_bad;
    detail = ss.str();
    return false;
  }
  // Orbit constancy: deterministic subsample of the box, 50 random
  // applicable move sequences each.
  SurfaceContext ctx;
  Rng rng(7007);
  long long sampled = 0, orbit_checks = 0, bad = 0;
  long long index = 0;
  for (long long r = 2; r <= 8; r += 2) {
    for (long long sv = -8; sv <= 8; sv += 2) {
      for_each_class(1, [&](NSClass cl) {
        ++index;
        if (index % 149 != 0) return true;
        for (int kappa = 0; kappa <= 1; ++kappa) {
          NSClass ck = cl;
          ck.kappa = kappa;
          MukaiVector v(Int(r), ck, Int(sv));
          if (!is_primitive(v)) continue;
          ++sampled;
          bool base = exists_unnodal(v, ctx).nonempty;
          for (int seq = 0; seq < 50; ++seq) {
            MukaiVector w = v;
            int len = static_cast<int>(rng.pick(1, 3));
            for (int hop = 0; hop < len; ++hop) {
              if (rng.pick(0, 3) == 0 && w.r > Int(0) && w.s > Int(0) &&
                  ns_square(w.c1) < Int(0)) {
                w = reflect(w);
              } else {
                w = twist(w, rng.cls(1));
              }
            }
            ++orbit_checks;
            if (exists_unnodal(w, ctx).nonempty != base) ++bad;
          }
        }
        return true;
      });
    }
  }
  std::ostringstream ss;
  ss << "canonical agreement exhaustive over the box (both kappa); orbit constancy on "
     << sampled << " sampled vectors x 50 sequences (" << orbit_checks << " checks), "
     << bad << " mismatches";
  detail = ss.str();
  return bad == 0;
}

bool criterion8(std::string& detail) {
  SurfaceContext unnodal_ctx;
  SurfaceContext nodal_ctx = make_surface_context(
      true, sigma_class() + f_class(), {alpha_class(1), sigma_class() - f_class()});
  long long agree_checked = 0, agree_bad = 0, shadow_checked = 0, shadow_bad = 0;
  for (long long r = 0; r <= 8; ++r) {
    for (long long s = -8; s <= 8; ++s) {
      if (((r - s) % 2 + 2) % 2 != 0) continue;
      for_each_class(1, [&](NSClass cl) {
        for (int kappa = 0; kappa <= 1; ++kappa) {
          NSClass ck = cl;
          ck.kappa = kappa;
          MukaiVector v(Int(r), ck, Int(s));
          if (!is_primitive(v)) continue;
          Int sq = mukai_square(v);
          if (r == 0 && ns_pairing(ck, nodal_ctx.ample) <= Int(0)) continue;
          if (sq >= Int(-1)) {
            ++agree_checked;
            if (exists_nodal(v, nodal_ctx).nonempty != exists_unnodal(v, unnodal_ctx).nonempty)
              ++agree_bad;
          } else if (sq == Int(-2) && r > 0 && r % 2 == 0) {
            ++shadow_checked;
            MukaiVector sh = exceptional_shadow(v);
            if (exists_nodal(v, nodal_ctx).nonempty != exists_nodal(sh, nodal_ctx).nonempty)
              ++shadow_bad;
          }
        }
        return true;
      });
    }
  }
  std::ostringstream ss;
  ss << "nodal = unnodal on " << agree_checked << " vectors with <v^2> >= -1 ("
     << agree_bad << " bad); shadow identity on " << shadow_checked
     << " exceptional vectors (" << shadow_bad << " bad)";
  detail = ss.str();
  return agree_bad == 0 && shadow_bad == 0 && shadow_checked > 0;
}

bool criterion9(std::string& detail) {
  long long primitive = 0, bad = 0;
  for (long long r = 0; r <= 8; ++r) {
    for (long long s = -8; s <= 8; ++s) {
      if (((r - s) % 2 + 2) % 2 != 0) continue;
      for_each_class(1, [&](NSClass cl) {
        MukaiVector v(Int(r), cl, Int(s));
        if (!is_primitive(v)) return true;
        ++primitive;
        try {
          ContentClassification c = classify_content(v);
          if (c.ell != Int(1) && c.ell != Int(2)) ++bad;
          if (c.ell == Int(2) && mod_floor(v.r + v.s, Int(4)) != Int(2)) ++bad;
        } catch (const Error&) {
          ++bad;
        }
        return true;
      });
    }
  }
  std::ostringstream ss;
  ss << primitive << " primitive vectors classified, " << bad << " violations";
  detail = ss.str();
  return bad == 0 && primitive > 0;
}

bool criterion10(std::string& detail) {
  Rng rng(1010);
  long long solved = 0, errored = 0;
  for (int i = 0; i < 1000; ++i) {
    E8Vector xi;
    for (int k = 0; k < 8; ++k) xi.c[k] = Int(rng.pick(-5, 5));
    if (xi.is_zero()) xi.c[0] = Int(1);
    Int c = e8_content(xi);
    Int t = c * Int(rng.pick(-25, 25));
    E8Vector eta = solve_pairing(xi, t);
    if (e8_pairing(xi, eta) != t) {
      detail = "solve_pairing returned a wrong solution";
      return false;
    }
    ++solved;
    if (c > Int(1)) {
      Int off = t + Int(rng.pick(1, static_cast<long long>(c.get()) - 1));
      try {
        solve_pairing(xi, off);
        detail = "unreachable target accepted";
        return false;
      } catch (const UnreachableTargetError&) {
        ++errored;
      }
    }
  }
  std::ostringstream ss;
  ss << solved << " instances solved exactly, " << errored
     << " unreachable targets rejected";
  detail = ss.str();
  return solved == 1000;
}

}  // namespace

int main() {
  run(1, "lattice sanity", criterion1);
  run(2, "isometry suite", criterion2);
  run(3, "even-rank reduction suite", criterion3);
  run(4, "odd-rank reduction suite", criterion4);
  run(5, "trace replay and mutation rejection", criterion5);
  run(6, "existence fixed points", criterion6);
  run(7, "verdict invariance along orbits", criterion7);
  run(8, "nodal consistency and exceptional shadow", criterion8);
  run(9, "content classification law", criterion9);
  run(10, "pairing equation solver", criterion10);
  if (g_failed == 0) {
    std::printf("acceptance: all 10 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", g_failed);
  return 1;
}
