#pragma once

// Canonical JSON for every value the command line emits. nlohmann::json keeps
// object keys sorted, so equal values serialize to identical bytes.

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mctl/hecke.hpp"
#include "mctl/soergel_gate.hpp"

namespace mctl::json_io {

using nlohmann::json;

namespace detail {

template <class T>
T get(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing JSON field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad JSON field '") + key + "': " + e.what());
  }
}

inline json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace detail

inline json colors(const std::vector<Color>& c) { return json(c); }
inline json colors(const ColorSequence& x) { return json(x.colors()); }
inline json colors(const CoxeterWord& w) { return json(w.letters()); }

inline ColorSequence sequence_from(const json& j) {
  if (!j.is_array()) throw ParseError("color sequence must be a JSON array");
  return ColorSequence(j.get<std::vector<Color>>());
}

inline CoxeterWord word_from(const json& j) {
  if (!j.is_array()) throw ParseError("word must be a JSON array");
  return CoxeterWord::reduced(j.get<std::vector<Color>>());
}

// ---- rings and Cartan matrices

inline json ring(const RingSpec& r) {
  switch (r.kind()) {
    case RingKind::Rational: return {{"type", "q"}};
    case RingKind::PrimeField: return {{"type", "fp"}, {"p", r.p()}};
    case RingKind::RationalFunctionDelta: return {{"type", "qdelta"}};
    case RingKind::Integers: return {{"type", "z"}};
  }
  throw std::logic_error("unknown ring kind");
}

inline RingSpec ring_from(const json& j) {
  const auto type = detail::get<std::string>(j, "type");
  if (type == "fp") return RingSpec::prime_field(detail::get<std::uint64_t>(j, "p"));
  return RingSpec::parse(type);
}

inline json cartan(const CartanMatrix& A) {
  json entries = json::object();
  for (const auto& [key, value] : A.off_diagonal()) entries[key.first + "," + key.second] = value.to_string();
  return {{"alphabet", A.alphabet()}, {"cartan", entries}, {"ring", ring(A.ring())}};
}

/// Entries keyed "s,t"; a missing entry is an error.
inline CartanMatrix cartan_from(const json& j) {
  const RingSpec r = ring_from(detail::get<json>(j, "ring"));
  const auto alphabet = detail::get<std::vector<Color>>(j, "alphabet");
  const json entries = detail::get<json>(j, "cartan");
  if (!entries.is_object()) throw ParseError("'cartan' must be an object");
  CartanMatrix::Entries e;
  for (const auto& [key, value] : entries.items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos) throw ParseError("Cartan key '" + key + "' is not of the form s,t");
    std::string text = value.is_string() ? value.get<std::string>() : value.dump();
    e.emplace(std::make_pair(key.substr(0, comma), key.substr(comma + 1)), r.parse_element(text));
  }
  return CartanMatrix(r, alphabet, std::move(e));
}

// ---- diagrams and morphisms

inline json matching(const CrossinglessMatching& d) {
  return {{"m", d.bottom()}, {"k", d.top()}, {"pairs", d.pairs()}};
}

inline CrossinglessMatching matching_from(const json& j) {
  return CrossinglessMatching::from_pairs(detail::get<int>(j, "m"), detail::get<int>(j, "k"),
                                          detail::get<std::vector<std::pair<std::string, std::string>>>(j, "pairs"));
}

inline json morphism(const TLMorphism& f) {
  json terms = json::array();
  for (const auto& [d, c] : f.terms()) terms.push_back({{"matching", matching(d)}, {"coeff", c.to_string()}});
  return {{"source", colors(f.source())}, {"target", colors(f.target())}, {"terms", terms}};
}

inline TLMorphism morphism_from(const json& j, const std::shared_ptr<const CartanMatrix>& A) {
  TLMorphism f(sequence_from(detail::get<json>(j, "source")), sequence_from(detail::get<json>(j, "target")), A);
  for (const auto& t : detail::get<json>(j, "terms"))
    f.add_term(matching_from(detail::get<json>(t, "matching")), A->ring().parse_element(detail::get<std::string>(t, "coeff")));
  return f;
}

// ---- obstructions and JW results

inline json obstruction(const Obstruction& o) {
  json j{{"kind", o.source},
         {"k", detail::optional_int(o.k)},
         {"m", detail::optional_int(o.m)},
         {"pair", o.pair ? json{o.pair->first, o.pair->second} : json(nullptr)},
         {"value", o.value ? json(o.value->to_string()) : json(nullptr)},
         {"detail", o.detail}};
  j["run"] = o.run ? json{o.run->first, o.run->second} : json(nullptr);
  return j;
}

inline Obstruction obstruction_from(const json& j, const RingSpec& r) {
  Obstruction o;
  o.source = detail::get<std::string>(j, "kind");
  o.detail = j.value("detail", "");
  if (j.contains("k") && !j["k"].is_null()) o.k = j["k"].get<int>();
  if (j.contains("m") && !j["m"].is_null()) o.m = j["m"].get<int>();
  if (j.contains("pair") && !j["pair"].is_null()) o.pair = j["pair"].get<std::pair<Color, Color>>();
  if (j.contains("value") && !j["value"].is_null()) o.value = r.parse_element(j["value"].get<std::string>());
  if (j.contains("run") && !j["run"].is_null()) o.run = j["run"].get<std::pair<int, int>>();
  return o;
}

/// TLMorphism fields (empty terms when JW does not exist) plus exists and obstruction.
inline json jw(const JWResult& r) {
  json j = r.morphism ? morphism(*r.morphism)
                      : json{{"source", colors(r.word)}, {"target", colors(r.word)}, {"terms", json::array()}};
  j["exists"] = r.exists;
  j["obstruction"] = r.obstruction ? obstruction(*r.obstruction) : json(nullptr);
  return j;
}

inline JWResult jw_from(const json& j, const std::shared_ptr<const CartanMatrix>& A) {
  JWResult r{sequence_from(detail::get<json>(j, "source")), detail::get<bool>(j, "exists"), std::nullopt, std::nullopt};
  if (r.exists) r.morphism = morphism_from(j, A);
  if (j.contains("obstruction") && !j["obstruction"].is_null()) r.obstruction = obstruction_from(j["obstruction"], A->ring());
  return r;
}

// ---- Hecke algebra

inline json poly(const LaurentPoly& p) {
  json j = json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c;
  return j;
}

inline LaurentPoly poly_from(const json& j) {
  if (!j.is_object()) throw ParseError("Laurent polynomial must be an object");
  LaurentPoly p;
  for (const auto& [e, c] : j.items()) {
    std::size_t used = 0;
    int exponent = 0;
    try {
      exponent = std::stoi(e, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != e.size() || e.empty()) throw ParseError("bad exponent '" + e + "'");
    p += LaurentPoly::monomial(exponent, c.get<std::int64_t>());
  }
  return p;
}

inline json hecke_terms(const std::map<CoxeterWord, LaurentPoly>& terms) {
  json arr = json::array();
  for (const auto& [w, c] : terms) arr.push_back({{"word", colors(w)}, {"poly", poly(c)}});
  return {{"terms", arr}};
}

inline json hecke(const HeckeElement& h) { return hecke_terms(h.terms()); }

inline std::map<CoxeterWord, LaurentPoly> hecke_terms_from(const json& j) {
  std::map<CoxeterWord, LaurentPoly> out;
  for (const auto& t : detail::get<json>(j, "terms")) {
    LaurentPoly p = poly_from(detail::get<json>(t, "poly"));
    if (!p.is_zero()) out[word_from(detail::get<json>(t, "word"))] += p;
  }
  return out;
}

inline HeckeElement hecke_from(const json& j) {
  HeckeElement h;
  for (const auto& [w, c] : hecke_terms_from(j)) h.add(w, c);
  return h;
}

// ---- soergel_gate reports

inline json witness(const Obstruction& o) { return obstruction(o); }

inline json verdict(const Verdict& v) {
  json w = json::array();
  for (const auto& o : v.witnesses) w.push_back(witness(o));
  return {{"word", colors(v.word)}, {"holds", v.holds}, {"witnesses", w}};
}

inline Verdict verdict_from(const json& j, const RingSpec& r) {
  Verdict v{word_from(detail::get<json>(j, "word")), detail::get<bool>(j, "holds"), {}, true};
  for (const auto& o : detail::get<json>(j, "witnesses")) v.witnesses.push_back(obstruction_from(o, r));
  if (v.holds != v.witnesses.empty()) throw ParseError("verdict holds must match an empty witness list");
  return v;
}

inline json primes(const CoxeterWord& w, std::uint64_t max_prime, const std::set<std::uint64_t>& p) {
  return {{"word", colors(w)}, {"max_prime", max_prime}, {"primes", p}};
}

inline json dyer_check(const DyerCheck& d) {
  json summands = json::array();
  for (const auto& w : d.tl_summands) summands.push_back(colors(w));
  return {{"x", colors(d.x)},
          {"s", d.s},
          {"degenerate", d.degenerate},
          {"tl_summands", d.degenerate ? json(nullptr) : summands},
          {"hecke", hecke_terms(d.hecke)},
          {"agree", d.agree},
          {"obstruction", d.obstruction ? obstruction(*d.obstruction) : json(nullptr)}};
}

inline json decomposition(const WordDecomposition& d) {
  json parts = json::array();
  for (const auto& [w, m] : d.multiplicities) parts.push_back({{"word", colors(w)}, {"multiplicity", m}});
  return {{"word", colors(d.word)},
          {"summands", parts},
          {"obstruction", d.obstruction ? obstruction(*d.obstruction) : json(nullptr)}};
}

inline WordDecomposition decomposition_from(const json& j, const RingSpec& r) {
  WordDecomposition d{word_from(detail::get<json>(j, "word")), {}, std::nullopt};
  for (const auto& p : detail::get<json>(j, "summands"))
    d.multiplicities.emplace(word_from(detail::get<json>(p, "word")), detail::get<int>(p, "multiplicity"));
  if (j.contains("obstruction") && !j["obstruction"].is_null()) d.obstruction = obstruction_from(j["obstruction"], r);
  return d;
}

}  // namespace mctl::json_io
