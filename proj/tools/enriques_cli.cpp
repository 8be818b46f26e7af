// Command-line front end: analyze, reduce, exists, census, verify, oracle.
//
// Exit codes: 0 success/decided, 1 input error, 2 search or step bound
// exceeded, 3 undecidable with the given data, 4 internal invariant
// violation (including failed trace verification and integer overflow).

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "enriques/json_io.hpp"
#include "enriques/oracle.hpp"

using namespace enriques;

namespace {

std::string slurp(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// INPUT is inline text, @file, - or empty for stdin.
std::string read_input(const std::string& arg) {
  if (arg.empty() || arg == "-") return slurp(std::cin);
  if (arg.front() == '@') {
    std::ifstream f(arg.substr(1));
    if (!f) throw ParseError("cannot open input file " + arg.substr(1));
    return slurp(f);
  }
  return arg;
}

NSClass parse_ample(const std::string& text) {
  std::vector<long long> vals;
  std::istringstream in(text);
  std::string tok;
  try {
    while (std::getline(in, tok, ',')) vals.push_back(std::stoll(tok));
  } catch (const std::exception&) {
    throw ParseError("--ample: bad integer '" + tok + "'");
  }
  if (vals.size() != 10)
    throw ParseError("--ample expects 10 comma-separated integers");
  NSClass c;
  c.d1 = Int(vals[0]);
  c.d2 = Int(vals[1]);
  for (int i = 0; i < 8; ++i) c.e.c[i] = Int(vals[2 + i]);
  return c;
}

struct CommonOpts {
  std::string input;
  bool nodal = false;
  std::string ample = "1,1,0,0,0,0,0,0,0,0";
  std::string cycles_file;
  int kappa = -1;  // -1: keep the input vector's kappa
  int search_radius = 6;
  int step_cap = 64;
};

SurfaceContext build_context(const CommonOpts& o) {
  std::vector<NSClass> cycles;
  if (!o.cycles_file.empty()) {
    std::ifstream f(o.cycles_file);
    if (!f) throw ParseError("cannot open nodal-cycle file " + o.cycles_file);
    cycles = nodal_cycles_from_text(slurp(f));
  }
  return make_surface_context(o.nodal, parse_ample(o.ample), std::move(cycles));
}

MukaiVector read_vector(const CommonOpts& o) {
  MukaiVector v = vector_from_text(read_input(o.input));
  if (o.kappa >= 0) v.c1.kappa = o.kappa & 1;
  return v;
}

ReduceConfig reduce_config(const CommonOpts& o) {
  ReduceConfig cfg;
  cfg.step_cap = o.step_cap;
  cfg.search.radius = o.search_radius;
  return cfg;
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_input, bool with_context) {
  if (with_input)
    cmd->add_option("input", o.input, "vector/trace JSON, @file, or - for stdin");
  if (with_context) {
    cmd->add_flag("--nodal", o.nodal, "nodal surface");
    cmd->add_option("--ample", o.ample, "ample class, 10 comma-separated integers");
    cmd->add_option("--nodal-cycles", o.cycles_file, "JSON file with nodal cycles");
  }
  cmd->add_option("--kappa", o.kappa, "override the torsion coefficient (0 or 1)")
      ->check(CLI::Range(0, 1));
  cmd->add_option("--search-radius", o.search_radius, "E8 search radius (default 6)");
  cmd->add_option("--step-cap", o.step_cap, "reduction step cap (default 64)");
}

int dispatch(const std::string& command, const CommonOpts& o, long long census_r,
             long long census_s, int census_b, int jobs, bool summary,
             const oracle::OracleOptions& oracle_opts) {
  if (command == "analyze") {
    std::cout << analyze_to_json(read_vector(o)) << "\n";
    return 0;
  }
  if (command == "reduce") {
    MukaiVector v = read_vector(o);
    if (v.r <= Int(0))
      throw PreconditionError("reduce: rank must be positive");
    CanonicalForm c = parity(v.r) == 0 ? reduce_even(v, reduce_config(o))
                                       : reduce_odd(v, reduce_config(o));
    std::cout << "{\"input\":" << vector_to_json(v)
              << ",\"canonical\":" << vector_to_json(c.vector)
              << ",\"ell\":" << c.ell.get() << ",\"trace\":" << trace_to_json(c.trace)
              << "}\n";
    return 0;
  }
  if (command == "exists") {
    MukaiVector v;
    std::string raw;
    try {
      raw = read_input(o.input);
      v = vector_from_text(raw);
      if (o.kappa >= 0) v.c1.kappa = o.kappa & 1;
    } catch (const ParseError& e) {
      if (std::string(e.what()).find("parity") == std::string::npos) throw;
      ExistenceVerdict bad{false, ExistCase::ParityViolation, {}};
      std::cout << verdict_to_json(bad) << "\n";
      return 1;
    }
    SurfaceContext ctx = build_context(o);
    ExistenceVerdict verdict = ctx.nodal ? exists_nodal(v, ctx) : exists_unnodal(v, ctx);
    std::string out = verdict_to_json(verdict);
    // A kappa-sensitive decision on a vector given without kappa gets an
    // explicit note that the default kappa = 0 was used.
    if (verdict.certificate.kappa_sensitive && o.kappa < 0 && !vector_text_has_kappa(raw)) {
      out.pop_back();  // strip the closing brace
      out += R"(,"note":"kappa defaulted to 0; this case depends on it"})";
    }
    std::cout << out << "\n";
    return verdict.matched_case == ExistCase::N4Fail ? 3 : 0;
  }
  if (command == "verify") {
    MoveTrace t = trace_from_text(read_input(o.input));
    MukaiVector final_v = replay(t);
    std::cout << "{\"ok\":true,\"steps\":" << t.steps.size()
              << ",\"final\":" << vector_to_json(final_v) << "}\n";
    return 0;
  }
  if (command == "census") {
    CensusOptions opts;
    opts.r_max = Int(census_r);
    opts.s_max = Int(census_s);
    opts.coeff_bound = census_b;
    opts.ctx = build_context(o);
    opts.jobs = jobs;
    opts.reduce = reduce_config(o);
    write_census(opts, summary, std::cout);
    return 0;
  }
  if (command == "oracle") {
    oracle::OracleOptions opts = oracle_opts;
    opts.reduce = reduce_config(o);
    oracle::OracleReport rep = oracle::oracle_check(opts);
    std::cout << "{\"vectors\":" << rep.vectors << ",\"primitive\":" << rep.primitive
              << ",\"even_reduced\":" << rep.even_reduced
              << ",\"odd_reduced\":" << rep.odd_reduced
              << ",\"violations\":" << rep.violations << ",\"messages\":[";
    for (size_t i = 0; i < rep.messages.size(); ++i)
      std::cout << (i ? "," : "") << "\"" << rep.messages[i] << "\"";
    std::cout << "]}\n";
    return rep.violations == 0 ? 0 : 4;
  }
  throw ParseError("unknown command " + command);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Mukai-vector arithmetic on the Enriques lattice U + E8(-1) + Z/2"};
  app.require_subcommand(1);

  CommonOpts common;
  long long census_r = 2, census_s = 2;
  int census_b = 0;
  int jobs = 1;
  bool summary = false;
  long long oracle_r = 4, oracle_s = 4;
  int oracle_b = 1;
  bool perturb = false;

  CLI::App* analyze = app.add_subcommand("analyze", "invariants of one Mukai vector");
  add_common(analyze, common, true, false);

  CLI::App* reduce = app.add_subcommand("reduce", "reduce to the rank-2/rank-1 canonical form");
  add_common(reduce, common, true, false);

  CLI::App* exists = app.add_subcommand("exists", "decide non-emptiness of the moduli space");
  add_common(exists, common, true, true);

  CLI::App* verify = app.add_subcommand("verify", "replay and check a move trace");
  add_common(verify, common, true, false);

  CLI::App* census = app.add_subcommand("census", "enumerate a box of vectors as JSON lines");
  census->add_option("r_max", census_r, "maximum rank")->required();
  census->add_option("s_max", census_s, "maximum |s|")->required();
  census->add_option("coeff_bound", census_b, "bound on the c1 coordinates")->required();
  add_common(census, common, false, true);
  census->add_option("--jobs", jobs, "worker threads (output is order-merged)");
  census->add_flag("--summary", summary, "aggregate counts instead of rows");

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force cross-check of the engine");
  add_common(oracle_cmd, common, false, false);
  oracle_cmd->add_option("--r-max", oracle_r, "maximum rank (default 4)");
  oracle_cmd->add_option("--s-max", oracle_s, "maximum |s| (default 4)");
  oracle_cmd->add_option("--coeff-bound", oracle_b, "bound on the c1 coordinates (default 1)");
  oracle_cmd->add_flag("--perturb-gram", perturb,
                       "test mode: sabotage the oracle's Gram table");

  CLI11_PARSE(app, argc, argv);

  lattice_self_check();

  oracle::OracleOptions oracle_opts;
  oracle_opts.r_max = Int(oracle_r);
  oracle_opts.s_max = Int(oracle_s);
  oracle_opts.coeff_bound = oracle_b;
  oracle_opts.perturb_gram = perturb;

  try {
    return dispatch(app.get_subcommands().front()->get_name(), common, census_r, census_s,
                    census_b, jobs, summary, oracle_opts);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const PreconditionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const LimitError& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return 2;
  } catch (const UnreachableTargetError& e) {
    std::cerr << "unreachable target: " << e.what() << "\n";
    return 2;
  } catch (const TraceError& e) {
    std::cerr << "trace verification failed: " << e.what() << "\n";
    return 4;
  } catch (const OverflowError& e) {
    std::cerr << "integer overflow: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 4;
  }
}
