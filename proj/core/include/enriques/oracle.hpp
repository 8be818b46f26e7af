#ifndef ENRIQUES_ORACLE_HPP
#define ENRIQUES_ORACLE_HPP

#include <string>
#include <vector>

#include "enriques/reduction.hpp"

namespace enriques {
namespace oracle {

/*
  Brute-force cross-check of the engine.  Everything here recomputes the
  basic quantities from its own literal Gram table with textbook formulas;
  none of the lattice_core code paths are reused.  The perturb_gram switch
  flips one entry of the oracle's table so tests can confirm the checker
  actually detects disagreement.
*/

Int naive_square(const MukaiVector& v, bool perturb_gram = false);
Int naive_pairing(const MukaiVector& v, const MukaiVector& w, bool perturb_gram = false);
Int naive_content(const MukaiVector& v);
bool naive_primitive(const MukaiVector& v);

struct OracleOptions {
  Int r_max = 4;
  Int s_max = 4;
  int coeff_bound = 1;
  bool perturb_gram = false;
  ReduceConfig reduce{};
};

struct OracleReport {
  long long vectors = 0;
  long long primitive = 0;
  long long even_reduced = 0;
  long long odd_reduced = 0;
  long long violations = 0;
  std::vector<std::string> messages;  // first few violations, for diagnostics
};

// Enumerates the box, compares naive and engine values, reduces every
// primitive vector of positive rank and asserts conservation, canonical
// shape and trace replay.  Any disagreement is counted (and the first few
// described); the caller decides the exit status.
OracleReport oracle_check(const OracleOptions& opts);

}  // namespace oracle
}  // namespace enriques

#endif
