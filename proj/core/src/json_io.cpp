#include "enriques/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "json.hpp"

namespace enriques {

using ordered_json = nlohmann::ordered_json;

namespace {

Int int_field(const nlohmann::json& j, const char* what) {
  if (!j.is_number_integer())
    throw ParseError(std::string(what) + ": expected an integer");
  return Int(j.get<long long>());
}

NSClass class_from_array(const nlohmann::json& arr, int kappa, const char* what) {
  if (!arr.is_array() || arr.size() != 10)
    throw ParseError(std::string(what) + ": expected an array of 10 integers");
  NSClass c;
  c.d1 = int_field(arr[0], what);
  c.d2 = int_field(arr[1], what);
  for (int i = 0; i < 8; ++i) c.e.c[i] = int_field(arr[2 + i], what);
  if (kappa != 0 && kappa != 1)
    throw ParseError(std::string(what) + ": kappa must be 0 or 1");
  c.kappa = kappa;
  return c;
}

ordered_json class_to_array(const NSClass& c) {
  ordered_json a = ordered_json::array();
  a.push_back(c.d1.get());
  a.push_back(c.d2.get());
  for (int i = 0; i < 8; ++i) a.push_back(c.e.c[i].get());
  return a;
}

ordered_json vector_to_ojson(const MukaiVector& v) {
  ordered_json j;
  j["r"] = v.r.get();
  j["c1"] = class_to_array(v.c1);
  j["s"] = v.s.get();
  j["kappa"] = v.c1.kappa;
  return j;
}

std::vector<Int> parse_int_list(std::string_view text, const char* what) {
  std::vector<Int> out;
  std::string token;
  std::istringstream in{std::string(text)};
  while (std::getline(in, token, ',')) {
    try {
      size_t pos = 0;
      long long val = std::stoll(token, &pos);
      while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) ++pos;
      if (pos != token.size()) throw std::invalid_argument(token);
      out.push_back(Int(val));
    } catch (const std::exception&) {
      throw ParseError(std::string(what) + ": bad integer '" + token + "'");
    }
  }
  return out;
}

MukaiVector vector_from_bracket(std::string_view text) {
  // [r; d1,d2,e1..e8; s; kappa]
  size_t open = text.find('[');
  size_t close = text.rfind(']');
  if (open == std::string_view::npos || close == std::string_view::npos || close <= open)
    throw ParseError("bracket vector: missing [ ]");
  std::string body{text.substr(open + 1, close - open - 1)};
  std::vector<std::string> parts;
  std::istringstream in(body);
  std::string part;
  while (std::getline(in, part, ';')) parts.push_back(part);
  if (parts.size() != 3 && parts.size() != 4)
    throw ParseError("bracket vector: expected [r; c1; s] or [r; c1; s; kappa]");
  auto r = parse_int_list(parts[0], "bracket r");
  auto c = parse_int_list(parts[1], "bracket c1");
  auto s = parse_int_list(parts[2], "bracket s");
  if (r.size() != 1 || c.size() != 10 || s.size() != 1)
    throw ParseError("bracket vector: wrong arity");
  int kappa = 0;
  if (parts.size() == 4) {
    auto k = parse_int_list(parts[3], "bracket kappa");
    if (k.size() != 1 || (k[0] != Int(0) && k[0] != Int(1)))
      throw ParseError("bracket vector: kappa must be 0 or 1");
    kappa = static_cast<int>(k[0].get());
  }
  NSClass cl;
  cl.d1 = c[0];
  cl.d2 = c[1];
  for (int i = 0; i < 8; ++i) cl.e.c[i] = c[2 + i];
  cl.kappa = kappa;
  try {
    return MukaiVector(r[0], cl, s[0]);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

MukaiVector vector_from_json_value(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("vector: expected a JSON object");
  if (!j.contains("r")) throw ParseError("vector: missing field r");
  if (!j.contains("c1")) throw ParseError("vector: missing field c1");
  Int r = int_field(j.at("r"), "vector r");
  int kappa = 0;
  if (j.contains("kappa")) {
    Int k = int_field(j.at("kappa"), "vector kappa");
    if (k != Int(0) && k != Int(1)) throw ParseError("vector: kappa must be 0 or 1");
    kappa = static_cast<int>(k.get());
  }
  NSClass c1 = class_from_array(j.at("c1"), kappa, "vector c1");
  Int s = 0;
  if (j.contains("s")) {
    s = int_field(j.at("s"), "vector s");
  } else if (j.contains("a")) {
    // chi-slot; s = -2a, denominator 1 or 2.
    const auto& a = j.at("a");
    if (a.is_number_integer()) {
      s = Int(-2) * Int(a.get<long long>());
    } else if (a.is_number_float()) {
      double twice = 2.0 * a.get<double>();
      double rounded = std::nearbyint(twice);
      if (twice != rounded)
        throw ParseError("vector: a must have denominator 1 or 2");
      s = Int(-static_cast<long long>(rounded));
    } else {
      throw ParseError("vector: field a must be a number");
    }
  } else {
    throw ParseError("vector: missing field s (or a)");
  }
  try {
    return MukaiVector(r, c1, s);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

nlohmann::json parse_json(std::string_view text, const char* what) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError(std::string(what) + ": malformed JSON");
  return j;
}

}  // namespace

std::string vector_to_json(const MukaiVector& v) { return vector_to_ojson(v).dump(); }

MukaiVector vector_from_text(std::string_view text) {
  size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '[' && text.find(';') != std::string_view::npos)
    return vector_from_bracket(text);
  return vector_from_json_value(parse_json(text, "vector"));
}

bool vector_text_has_kappa(std::string_view text) {
  size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '[' && text.find(';') != std::string_view::npos)
    return std::count(text.begin(), text.end(), ';') == 3;
  nlohmann::json j = parse_json(text, "vector");
  return j.is_object() && j.contains("kappa");
}

std::string trace_to_json(const MoveTrace& t) {
  ordered_json j;
  j["initial"] = vector_to_ojson(t.initial);
  ordered_json steps = ordered_json::array();
  for (const Move& m : t.steps) {
    ordered_json step;
    switch (m.kind) {
      case Move::Kind::Twist: {
        step["kind"] = "twist";
        step["D"] = class_to_array(m.twist_class);
        step["kappaD"] = m.twist_class.kappa;
        break;
      }
      case Move::Kind::Reflect:
        step["kind"] = "reflect";
        break;
      case Move::Kind::HypChange: {
        step["kind"] = "hyp_change";
        ordered_json eta = ordered_json::array();
        for (int i = 0; i < 8; ++i) eta.push_back(m.eta.c[i].get());
        step["eta"] = eta;
        break;
      }
    }
    steps.push_back(step);
  }
  j["steps"] = steps;
  j["final"] = vector_to_ojson(t.final);
  return j.dump();
}

MoveTrace trace_from_text(std::string_view text) {
  nlohmann::json j = parse_json(text, "trace");
  if (!j.is_object() || !j.contains("initial") || !j.contains("steps") || !j.contains("final"))
    throw ParseError("trace: expected fields initial, steps, final");
  MoveTrace t;
  t.initial = vector_from_json_value(j.at("initial"));
  t.final = vector_from_json_value(j.at("final"));
  if (!j.at("steps").is_array()) throw ParseError("trace: steps must be an array");
  for (const auto& step : j.at("steps")) {
    if (!step.is_object() || !step.contains("kind"))
      throw ParseError("trace: each step needs a kind");
    std::string kind = step.at("kind").get<std::string>();
    Move m;
    if (kind == "twist") {
      int kappa = 0;
      if (step.contains("kappaD")) {
        Int k = int_field(step.at("kappaD"), "trace kappaD");
        if (k != Int(0) && k != Int(1)) throw ParseError("trace: kappaD must be 0 or 1");
        kappa = static_cast<int>(k.get());
      }
      if (!step.contains("D")) throw ParseError("trace: twist needs D");
      m.kind = Move::Kind::Twist;
      m.twist_class = class_from_array(step.at("D"), kappa, "trace D");
    } else if (kind == "reflect") {
      m.kind = Move::Kind::Reflect;
    } else if (kind == "hyp_change") {
      if (!step.contains("eta") || !step.at("eta").is_array() || step.at("eta").size() != 8)
        throw ParseError("trace: hyp_change needs eta with 8 integers");
      m.kind = Move::Kind::HypChange;
      for (int i = 0; i < 8; ++i) m.eta.c[i] = int_field(step.at("eta")[i], "trace eta");
    } else {
      throw ParseError("trace: unknown step kind '" + kind + "'");
    }
    t.steps.push_back(m);
  }
  return t;
}

namespace {

ordered_json verdict_to_ojson(const ExistenceVerdict& v) {
  ordered_json j;
  j["nonempty"] = v.nonempty;
  j["case"] = case_name(v.matched_case);
  ordered_json cert;
  cert["ell"] = v.certificate.ell.get();
  cert["square"] = v.certificate.square.get();
  if (v.certificate.kappa_sensitive) cert["kappa_sensitive"] = true;
  if (v.certificate.c1_even) cert["c1_even"] = *v.certificate.c1_even;
  if (v.certificate.kappa_congruent) cert["kappa_congruent"] = *v.certificate.kappa_congruent;
  if (v.certificate.matched_cycle) cert["nodal_cycle"] = *v.certificate.matched_cycle;
  if (v.certificate.effective) cert["effective"] = *v.certificate.effective;
  j["certificate"] = cert;
  return j;
}

}  // namespace

std::string verdict_to_json(const ExistenceVerdict& v) { return verdict_to_ojson(v).dump(); }

std::string canonical_to_json(const CanonicalForm& c, bool with_trace) {
  ordered_json j;
  j["vector"] = vector_to_ojson(c.vector);
  j["ell"] = c.ell.get();
  if (with_trace)
    j["trace"] = ordered_json::parse(trace_to_json(c.trace));
  else
    j["trace_steps"] = c.trace.steps.size();
  return j.dump();
}

std::string census_row_to_json(const CensusRow& row) {
  ordered_json j;
  j["vector"] = vector_to_ojson(row.vector);
  j["ell"] = row.ell.get();
  j["square"] = row.square.get();
  j["primitive"] = row.primitive;
  j["verdict"] = verdict_to_ojson(row.verdict);
  if (row.canonical)
    j["canonical"] = ordered_json::parse(canonical_to_json(*row.canonical, false));
  else
    j["canonical"] = nullptr;
  return j.dump();
}

std::string analyze_to_json(const MukaiVector& v) {
  ordered_json j;
  j["r"] = v.r.get();
  j["s"] = v.s.get();
  j["kappa"] = v.c1.kappa;
  j["square"] = mukai_square(v).get();
  bool prim = is_primitive(v);
  j["primitive"] = prim;
  j["content"] = v.is_zero() ? 0 : content(v).get();
  j["c1_even"] = ns_even(v.c1);
  ordered_json parity_class = ordered_json::array();
  parity_class.push_back(parity(v.c1.d1));
  parity_class.push_back(parity(v.c1.d2));
  for (int i = 0; i < 8; ++i) parity_class.push_back(parity(v.c1.e.c[i]));
  j["c1_mod2"] = parity_class;
  if (prim) {
    ContentClassification cls = classify_content(v);
    ordered_json k;
    k["ell"] = cls.ell.get();
    if (cls.ell == Int(2)) k["r_plus_s_mod4"] = cls.r_plus_s_mod4;
    j["classification"] = k;
  }
  return j.dump();
}

std::vector<NSClass> nodal_cycles_from_text(std::string_view text) {
  nlohmann::json j = parse_json(text, "nodal cycles");
  if (!j.is_array()) throw ParseError("nodal cycles: expected a JSON array");
  std::vector<NSClass> out;
  for (const auto& entry : j) {
    if (entry.is_array()) {
      out.push_back(class_from_array(entry, 0, "nodal cycle"));
    } else if (entry.is_object() && entry.contains("c1")) {
      int kappa = 0;
      if (entry.contains("kappa")) {
        Int k = int_field(entry.at("kappa"), "nodal cycle kappa");
        if (k != Int(0) && k != Int(1))
          throw ParseError("nodal cycle: kappa must be 0 or 1");
        kappa = static_cast<int>(k.get());
      }
      out.push_back(class_from_array(entry.at("c1"), kappa, "nodal cycle"));
    } else {
      throw ParseError("nodal cycle: expected [10 ints] or {\"c1\":[...],\"kappa\":0|1}");
    }
  }
  return out;
}

}  // namespace enriques
