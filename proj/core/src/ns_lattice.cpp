#include "enriques/ns_lattice.hpp"

#include <vector>

namespace enriques {

namespace {

// Bourbaki Dynkin adjacency for E8: 1-3, 3-4, 4-5, 5-6, 6-7, 7-8, 2-4.
constexpr std::array<std::array<int, 2>, 7> kAdjacent = {{
    {0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3},
}};

std::array<std::array<int, 8>, 8> build_e8_gram() {
  std::array<std::array<int, 8>, 8> g{};
  for (int i = 0; i < 8; ++i) g[i][i] = -2;
  for (const auto& [i, j] : kAdjacent) {
    g[i][j] = 1;
    g[j][i] = 1;
  }
  return g;
}

}  // namespace

const std::array<std::array<int, 8>, 8>& e8_gram() {
  static const auto g = build_e8_gram();
  return g;
}

E8Vector operator+(const E8Vector& a, const E8Vector& b) {
  E8Vector r;
  for (int i = 0; i < 8; ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}

E8Vector operator-(const E8Vector& a, const E8Vector& b) {
  E8Vector r;
  for (int i = 0; i < 8; ++i) r.c[i] = a.c[i] - b.c[i];
  return r;
}

E8Vector operator*(Int k, const E8Vector& a) {
  E8Vector r;
  for (int i = 0; i < 8; ++i) r.c[i] = k * a.c[i];
  return r;
}

Int e8_pairing(const E8Vector& a, const E8Vector& b) {
  const auto& g = e8_gram();
  Int acc = 0;
  for (int i = 0; i < 8; ++i) {
    if (a.c[i] == Int(0)) continue;
    Int row = 0;
    for (int j = 0; j < 8; ++j) {
      if (g[i][j] != 0) row += Int(g[i][j]) * b.c[j];
    }
    acc += a.c[i] * row;
  }
  return acc;
}

Int e8_content(const E8Vector& a) {
  Int g = 0;
  for (const auto& x : a.c) g = gcd(g, x);
  return g;
}

E8Vector e8_alpha(int i) {
  if (i < 1 || i > 8) throw PreconditionError("e8_alpha: index out of range");
  E8Vector r;
  r.c[i - 1] = 1;
  return r;
}

NSClass alpha_class(int i) { return e8_embed(e8_alpha(i)); }

NSClass operator+(const NSClass& a, const NSClass& b) {
  return NSClass{a.d1 + b.d1, a.d2 + b.d2, a.e + b.e, (a.kappa + b.kappa) & 1};
}

NSClass operator-(const NSClass& a, const NSClass& b) {
  return NSClass{a.d1 - b.d1, a.d2 - b.d2, a.e - b.e, (a.kappa + b.kappa) & 1};
}

NSClass operator*(Int k, const NSClass& a) {
  return NSClass{k * a.d1, k * a.d2, k * a.e, parity(k) & a.kappa};
}

Int ns_pairing(const NSClass& a, const NSClass& b) {
  return a.d1 * b.d2 + a.d2 * b.d1 + e8_pairing(a.e, b.e);
}

Int ns_content(const NSClass& a) {
  return gcd(gcd(a.d1, a.d2), e8_content(a.e));
}

bool ns_even(const NSClass& a) {
  if (parity(a.d1) || parity(a.d2)) return false;
  for (const auto& x : a.e.c)
    if (parity(x)) return false;
  return true;
}

bool ns_congruent_mod2(const NSClass& a, const NSClass& b) {
  return ns_even(a - b);
}

const Gram10& ns_gram() {
  static const Gram10 g = [] {
    Gram10 m{};
    m[0][1] = 1;
    m[1][0] = 1;
    const auto& e8 = e8_gram();
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) m[2 + i][2 + j] = Int(e8[i][j]);
    return m;
  }();
  return g;
}

// Bareiss fraction-free elimination; exact over Int.
Int gram_determinant(const Gram10& g, int n) {
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = g[i][j];
  Int prev = 1;
  Int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == Int(0)) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != Int(0)) { pivot = i; break; }
      if (pivot < 0) return 0;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

void lattice_self_check() {
  const Gram10& g = ns_gram();
  for (int i = 0; i < 10; ++i) {
    if (parity(g[i][i]) != 0)
      throw InvariantError("lattice_self_check: odd diagonal entry");
    for (int j = 0; j < 10; ++j)
      if (g[i][j] != g[j][i])
        throw InvariantError("lattice_self_check: Gram matrix not symmetric");
  }
  if (gram_determinant(g, 10) != Int(-1))
    throw InvariantError("lattice_self_check: det G != -1");
  Gram10 e8{};
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) e8[i][j] = g[2 + i][2 + j];
  if (gram_determinant(e8, 8) != Int(1))
    throw InvariantError("lattice_self_check: det E8(-1) != 1");
}

std::ostream& operator<<(std::ostream& os, const E8Vector& a) {
  os << "(";
  for (int i = 0; i < 8; ++i) os << (i ? "," : "") << a.c[i];
  return os << ")";
}

std::ostream& operator<<(std::ostream& os, const NSClass& a) {
  os << "[" << a.d1 << "," << a.d2 << ";";
  for (int i = 0; i < 8; ++i) os << (i ? "," : "") << a.e.c[i];
  os << ";k" << a.kappa << "]";
  return os;
}

}  // namespace enriques
