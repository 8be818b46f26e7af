#ifndef ENRIQUES_JSON_IO_HPP
#define ENRIQUES_JSON_IO_HPP

#include <string>
#include <string_view>

#include "enriques/census.hpp"

namespace enriques {

/*
  Canonical textual encodings.  A Mukai vector is

    {"r":int,"c1":[10 ints],"s":int,"kappa":0|1}

  with "a" (the chi-slot, integer or half-integer, s = -2a) accepted in
  place of "s", and the compact bracket form

    [r; d1,d2,e1..e8; s; kappa]

  accepted on input.  A move trace is

    {"initial":<vector>,
     "steps":[{"kind":"twist","D":[10 ints],"kappaD":0|1}
              |{"kind":"reflect"}
              |{"kind":"hyp_change","eta":[8 ints]}],
     "final":<vector>}

  All parse failures throw ParseError.
*/

std::string vector_to_json(const MukaiVector& v);
MukaiVector vector_from_text(std::string_view text);

// True when the encoded vector carries an explicit kappa (JSON field or the
// four-part bracket form).  Lets callers flag kappa-sensitive verdicts that
// were evaluated at the default kappa = 0.
bool vector_text_has_kappa(std::string_view text);

std::string trace_to_json(const MoveTrace& t);
MoveTrace trace_from_text(std::string_view text);

std::string verdict_to_json(const ExistenceVerdict& v);
std::string canonical_to_json(const CanonicalForm& c, bool with_trace);
std::string census_row_to_json(const CensusRow& row);

// {"r":…,"s":…,"square":…,"content":…,"primitive":…,…} for the analyze command.
std::string analyze_to_json(const MukaiVector& v);

// Nodal-cycle list: a JSON array whose entries are either [10 ints] or
// {"c1":[10 ints],"kappa":0|1}.
std::vector<NSClass> nodal_cycles_from_text(std::string_view text);

}  // namespace enriques

#endif
