#ifndef ENRIQUES_CENSUS_HPP
#define ENRIQUES_CENSUS_HPP

#include <functional>
#include <optional>
#include <ostream>

#include "enriques/existence.hpp"
#include "enriques/reduction.hpp"

namespace enriques {

// One row of the exhaustive enumeration.
struct CensusRow {
  MukaiVector vector{};
  Int ell = 0;  // 0 for the zero vector
  Int square = 0;
  bool primitive = false;
  ExistenceVerdict verdict{};
  std::optional<CanonicalForm> canonical{};  // primitive rows of positive rank
};

struct CensusOptions {
  Int r_max = 2;
  Int s_max = 2;
  int coeff_bound = 0;
  SurfaceContext ctx{};
  int jobs = 1;
  bool with_canonical = true;
  ReduceConfig reduce{};
};

// Enumerates every parity-valid vector with 0 <= r <= r_max, |s| <= s_max,
// c1 coordinates in [-coeff_bound, coeff_bound] and both kappa values, in
// lexicographic order (r, s, d1, d2, e1..e8, kappa), invoking the sink for
// each row.  Output is deterministic; with jobs > 1 the range is
// partitioned by rank and merged back in order, so it is byte-identical
// to a single-threaded run.
void run_census(const CensusOptions& opts, const std::function<void(const CensusRow&)>& sink);

// Line-delimited JSON rows (or an aggregated summary) to a stream.
void write_census(const CensusOptions& opts, bool summary, std::ostream& os);

}  // namespace enriques

#endif
