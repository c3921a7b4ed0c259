#pragma once

// File formats.
//
//   word        {"kind": "id"|"D"|"S", "power": k, "from": "b"|"c", "to": "b"|"c"}
//   element     [word, ...]
//   complex     {"generators": [{"id", "vertex", "q", "h"}, ...],
//                "differential": [{"from": id, "to": id, "label": [word, ...]}, ...]}
//               (label words may omit from/to; they are taken from the generators)
//   multicurve  {"components": [{"kind", "slope": "p/q", "length", "q_anchor"}, ...]}

#include <json.hpp>
#include <stdexcept>
#include <string>

#include "khcurves/complex.hpp"
#include "khcurves/curve.hpp"
#include "khcurves/detection.hpp"
#include "khcurves/pairing.hpp"

namespace khc {

class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using json = nlohmann::json;

json to_json(const Word& w);
Word word_from_json(const json& j);
json to_json(const Element& e);
Element element_from_json(const json& j, Vertex from, Vertex to);

json to_json(const Complex& x);
Complex complex_from_json(const json& j);

json to_json(const CurveComponent& c);
json to_json(const Multicurve& c);
Multicurve multicurve_from_json(const json& j);

json to_json(const ValidationReport& r);
json to_json(const BigradedDims& d);
json to_json(const Complex& x, const Complex& y, const MorChain& c);
json to_json(const Complex& x, const Complex& y, const TorsionReport& r);
json to_json(const SplitVerdict& v);
json to_json(const EcscReport& r);
json to_json(const AgcccReport& r);
json to_json(const ComponentMatch& m, const Complex& x);

// Parses text as JSON, converting parse failures to FormatError.
json parse_json(const std::string& text);

// Poincare polynomial with ascending q, e.g. "q^-1 h^-1 + 2 q^1 h^0".
std::string poincare_polynomial(const BigradedDims& d);

// Table with columns q, h, delta, rank.
std::string poincare_table(const BigradedDims& d);

std::string render_text(const Complex& x);
std::string render_text(const EcscReport& r);
std::string render_text(const AgcccReport& r);

}  // namespace khc
