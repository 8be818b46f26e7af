#include "enriques/census.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>
#include <tuple>
#include <vector>

#include "enriques/json_io.hpp"

namespace enriques {

namespace {

CensusRow make_row(const MukaiVector& v, const CensusOptions& opts) {
  CensusRow row;
  row.vector = v;
  row.square = mukai_square(v);
  row.ell = v.is_zero() ? Int(0) : content(v);
  row.primitive = is_primitive(v);
  bool rank0_nodal_undefined =
      opts.ctx.nodal && v.r == Int(0) && ns_pairing(v.c1, opts.ctx.ample) <= Int(0);
  if (rank0_nodal_undefined) {
    // The nodal rank-0 predicate needs (c1, H) > 0; report the row as
    // undecidable rather than erroring out of the stream.
    row.verdict = ExistenceVerdict{false, ExistCase::N4Fail, {}};
  } else {
    row.verdict = opts.ctx.nodal ? exists_nodal(v, opts.ctx) : exists_unnodal(v, opts.ctx);
  }
  if (opts.with_canonical && row.primitive && v.r > Int(0)) {
    row.canonical = parity(v.r) == 0 ? reduce_even(v, opts.reduce) : reduce_odd(v, opts.reduce);
  }
  return row;
}

void census_rank(Int r, const CensusOptions& opts,
                 const std::function<void(const CensusRow&)>& sink) {
  const long long B = opts.coeff_bound;
  for (long long s = -opts.s_max.get(); s <= opts.s_max.get(); ++s) {
    if (((r.get() - s) % 2 + 2) % 2 != 0) continue;
    std::array<long long, 10> c{};
    c.fill(-B);
    bool more = true;
    while (more) {
      for (int kappa = 0; kappa <= 1; ++kappa) {
        NSClass cl;
        cl.d1 = Int(c[0]);
        cl.d2 = Int(c[1]);
        for (int i = 0; i < 8; ++i) cl.e.c[i] = Int(c[2 + i]);
        cl.kappa = kappa;
        sink(make_row(MukaiVector(r, cl, Int(s)), opts));
      }
      int i = 9;
      while (i >= 0 && c[i] == B) c[i] = -B, --i;
      if (i < 0)
        more = false;
      else
        ++c[i];
    }
  }
}

}  // namespace

void run_census(const CensusOptions& opts, const std::function<void(const CensusRow&)>& sink) {
  if (opts.r_max < Int(0) || opts.s_max < Int(0) || opts.coeff_bound < 0)
    throw PreconditionError("census: bounds must be nonnegative");
  std::vector<Int> ranks;
  for (long long r = 0; r <= opts.r_max.get(); ++r) ranks.push_back(Int(r));

  int jobs = opts.jobs;
  if (jobs <= 1 || ranks.size() <= 1) {
    for (Int r : ranks) census_rank(r, opts, sink);
    return;
  }

  // Workers share nothing: each rank's rows are buffered independently and
  // replayed to the sink in rank order, so the output matches jobs = 1.
  std::vector<std::vector<CensusRow>> buffers(ranks.size());
  std::vector<std::exception_ptr> failures(ranks.size());
  std::vector<std::thread> pool;
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      size_t idx = next.fetch_add(1);
      if (idx >= ranks.size()) return;
      try {
        census_rank(ranks[idx], opts,
                    [&buffers, idx](const CensusRow& row) { buffers[idx].push_back(row); });
      } catch (...) {
        failures[idx] = std::current_exception();
        return;
      }
    }
  };
  int n = std::min<int>(jobs, static_cast<int>(ranks.size()));
  pool.reserve(n);
  for (int i = 0; i < n; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (size_t i = 0; i < ranks.size(); ++i) {
    if (failures[i]) std::rethrow_exception(failures[i]);
    for (const CensusRow& row : buffers[i]) sink(row);
  }
}

void write_census(const CensusOptions& opts, bool summary, std::ostream& os) {
  if (!summary) {
    run_census(opts, [&os](const CensusRow& row) { os << census_row_to_json(row) << "\n"; });
    return;
  }
  // Aggregate counts keyed by (ell, sign of the square, verdict case).
  std::map<std::tuple<long long, int, std::string>, long long> counts;
  long long total = 0;
  run_census(opts, [&](const CensusRow& row) {
    ++total;
    int sign = row.square > Int(0) ? 1 : (row.square < Int(0) ? -1 : 0);
    ++counts[{row.ell.get(), sign, case_name(row.verdict.matched_case)}];
  });
  os << "{\"total\":" << total << ",\"groups\":[";
  bool first = true;
  for (const auto& [key, count] : counts) {
    if (!first) os << ",";
    first = false;
    os << "{\"ell\":" << std::get<0>(key) << ",\"square_sign\":" << std::get<1>(key)
       << ",\"case\":\"" << std::get<2>(key) << "\",\"count\":" << count << "}";
  }
  os << "]}\n";
}

}  // namespace enriques
