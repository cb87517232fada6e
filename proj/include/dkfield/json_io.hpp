#pragma once

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "dkfield/fields.hpp"

namespace dkf {

using json = nlohmann::json;

/// Multiplet serialization order: Phi, Phi_0..Phi_3, Phi~, Phi~_0..Phi~_3,
/// Phi_01, Phi_02, Phi_03, Phi_23, Phi_31, Phi_12 — a flat array of 16
/// [re, im] pairs.
inline json to_json(const TensorMultiplet& t) {
  json arr = json::array();
  for (std::size_t i = 0; i < TensorMultiplet::kComponents; ++i)
    arr.push_back({t.component(i).real(), t.component(i).imag()});
  return arr;
}

inline TensorMultiplet multiplet_from_json(const json& arr) {
  if (!arr.is_array() || arr.size() != TensorMultiplet::kComponents)
    throw std::invalid_argument("polarization must be an array of 16 [re, im] pairs");
  TensorMultiplet t;
  for (std::size_t i = 0; i < TensorMultiplet::kComponents; ++i) {
    const auto& p = arr[i];
    if (!p.is_array() || p.size() != 2)
      throw std::invalid_argument("polarization entries must be [re, im] pairs");
    t.component(i) = cplx(p[0].get<double>(), p[1].get<double>());
  }
  return t;
}

/// Field spec: either a bare list of terms or {"terms": [...]}, each term
/// {"k": [4 reals], "polarization": [16 [re,im] pairs]}. An optional
/// {"currents": {"terms": [...]}} block uses the same term format with the
/// electric current in the vector slots and the magnetic current in the
/// pseudovector slots.
inline MultipletField field_from_json(const json& spec) {
  const json& terms = spec.is_array() ? spec : spec.at("terms");
  if (!terms.is_array()) throw std::invalid_argument("field spec: \"terms\" must be an array");
  MultipletField f;
  for (const auto& term : terms) {
    PlaneWaveTerm t;
    const auto& k = term.at("k");
    if (!k.is_array() || k.size() != 4)
      throw std::invalid_argument("field spec: \"k\" must have 4 components");
    for (std::size_t a = 0; a < 4; ++a) t.k[a] = k[a].get<double>();
    t.amplitude = multiplet_from_json(term.at("polarization"));
    f.terms.push_back(t);
  }
  return f;
}

inline json to_json(const MultipletField& f) {
  json terms = json::array();
  for (const auto& t : f.terms)
    terms.push_back({{"k", {t.k[0], t.k[1], t.k[2], t.k[3]}},
                     {"polarization", to_json(t.amplitude)}});
  return {{"terms", terms}};
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  return json::parse(in);  // parse errors carry line/column diagnostics
}

}  // namespace dkf
