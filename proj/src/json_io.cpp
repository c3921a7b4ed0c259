#include "khcurves/json_io.hpp"

#include <iomanip>
#include <sstream>

namespace khc {

namespace {

std::string vertex_name(Vertex v) { return std::string(1, vertex_char(v)); }

Vertex parse_vertex(const json& j) {
  const std::string s = j.get<std::string>();
  if (s == "b" || s == "B") return Vertex::B;
  if (s == "c" || s == "C") return Vertex::C;
  throw FormatError("unknown vertex '" + s + "'");
}

WordKind parse_kind(const std::string& s) {
  if (s == "id") return WordKind::Id;
  if (s == "D") return WordKind::D;
  if (s == "S") return WordKind::S;
  throw FormatError("unknown word kind '" + s + "'");
}

std::string kind_name(WordKind k) {
  switch (k) {
    case WordKind::Id: return "id";
    case WordKind::D: return "D";
    case WordKind::S: return "S";
  }
  return "?";
}

// Runs f, turning json library and algebra errors into FormatError.
template <typename F>
auto guarded(const std::string& what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const FormatError&) {
    throw;
  } catch (const json::exception& e) {
    throw FormatError("malformed " + what + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError("invalid " + what + ": " + e.what());
  }
}

Word word_with_defaults(const json& j, std::optional<Vertex> from, std::optional<Vertex> to) {
  const WordKind kind = parse_kind(j.at("kind").get<std::string>());
  const int power = kind == WordKind::Id ? j.value("power", 0) : j.at("power").get<int>();
  Vertex f = j.contains("from") ? parse_vertex(j.at("from")) : from.value_or(Vertex::B);
  if (!j.contains("from") && !from) throw FormatError("word is missing 'from'");
  if (j.contains("to")) return Word::make(f, parse_vertex(j.at("to")), kind, power);
  if (to) return Word::make(f, *to, kind, power);
  if (kind == WordKind::S) return Word::s_power(f, power);
  return Word::make(f, f, kind, power);
}

}  // namespace

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

json to_json(const Word& w) {
  return {{"kind", kind_name(w.kind())}, {"power", w.power()}, {"from", vertex_name(w.from())},
          {"to", vertex_name(w.to())}};
}

Word word_from_json(const json& j) {
  return guarded("word", [&] { return word_with_defaults(j, std::nullopt, std::nullopt); });
}

json to_json(const Element& e) {
  json arr = json::array();
  for (const Word& w : e.words()) arr.push_back(to_json(w));
  return arr;
}

Element element_from_json(const json& j, Vertex from, Vertex to) {
  return guarded("algebra element", [&] {
    if (!j.is_array()) throw FormatError("an algebra element is a JSON array of words");
    Element e(from, to);
    for (const auto& w : j) e.add(word_with_defaults(w, from, to));
    return e;
  });
}

json to_json(const Complex& x) {
  json gens = json::array();
  for (const auto& g : x.generators())
    gens.push_back({{"id", g.id}, {"vertex", vertex_name(g.vertex)}, {"q", g.q}, {"h", g.h}});
  json diff = json::array();
  for (const auto& [key, label] : x.entries()) {
    json words = json::array();
    for (const Word& w : label.words()) words.push_back({{"kind", kind_name(w.kind())}, {"power", w.power()}});
    diff.push_back({{"from", x.generator(key.first).id}, {"to", x.generator(key.second).id}, {"label", words}});
  }
  return {{"generators", gens}, {"differential", diff}};
}

Complex complex_from_json(const json& j) {
  return guarded("complex", [&] {
    Complex x;
    for (const auto& g : j.at("generators"))
      x.add_generator({g.at("id").get<std::string>(), parse_vertex(g.at("vertex")), g.at("q").get<int>(),
                       g.value("h", 0)});
    if (j.contains("differential")) {
      for (const auto& e : j.at("differential")) {
        const auto from = x.find(e.at("from").get<std::string>());
        const auto to = x.find(e.at("to").get<std::string>());
        if (!from || !to) throw FormatError("differential entry refers to an unknown generator");
        x.add_entry(*from, *to,
                    element_from_json(e.at("label"), x.generator(*from).vertex, x.generator(*to).vertex));
      }
    }
    return x;
  });
}

json to_json(const CurveComponent& c) {
  return {{"kind", curve_kind_name(c.kind)}, {"slope", c.slope.to_string()}, {"length", c.length},
          {"q_anchor", c.q_anchor}};
}

json to_json(const Multicurve& c) {
  json arr = json::array();
  for (const auto& comp : c.components) arr.push_back(to_json(comp));
  return {{"components", arr}};
}

Multicurve multicurve_from_json(const json& j) {
  return guarded("multicurve", [&] {
    Multicurve c;
    for (const auto& comp : j.at("components")) {
      CurveComponent g;
      g.kind = parse_curve_kind(comp.at("kind").get<std::string>());
      const json& s = comp.at("slope");
      g.slope = s.is_string() ? Slope::parse(s.get<std::string>()) : Slope::make(s.get<std::int64_t>(), 1);
      g.length = comp.value("length", 1);
      g.q_anchor = comp.value("q_anchor", 0);
      g.local_system_dim = comp.value("local_system_dim", 1);
      g.validate();
      c.components.push_back(g);
    }
    return c;
  });
}

json to_json(const ValidationReport& r) {
  return {{"valid", r.ok()},
          {"ids_unique", r.ids_unique},
          {"endpoints_match", r.endpoints_match},
          {"homogeneous", r.homogeneous},
          {"d_squared_zero", r.d_squared_zero},
          {"reduced", r.reduced},
          {"problems", r.problems}};
}

json to_json(const BigradedDims& d) {
  json table = json::array();
  json ranks = json::object();
  for (const auto& [deg, r] : d.ranks) {
    table.push_back({{"q", deg.first}, {"h", deg.second}, {"delta", deg.first / 2.0 - deg.second}, {"rank", r}});
    ranks[std::to_string(deg.first) + "," + std::to_string(deg.second)] = r;
  }
  return {{"total", d.total()}, {"ranks", ranks}, {"table", table}, {"polynomial", poincare_polynomial(d)}};
}

json to_json(const Complex& x, const Complex& y, const MorChain& c) {
  json arr = json::array();
  for (const auto& t : c)
    arr.push_back({{"from", x.generator(t.src).id}, {"to", y.generator(t.tgt).id}, {"word", to_json(t.word)}});
  return arr;
}

json to_json(const Complex& x, const Complex& y, const TorsionReport& r) {
  json j = {{"total_dim", r.total_dim},
            {"action_rank", r.action_rank},
            {"free", r.free()},
            {"action_squares_to_zero", r.action_squares_to_zero}};
  if (r.witness) {
    j["witness"] = {{"class", to_json(x, y, r.witness->cls)},
                    {"nullhomotopy", to_json(x, y, r.witness->nullhomotopy)},
                    {"q", r.witness->bidegree.q},
                    {"h", r.witness->bidegree.h},
                    {"has_identity_term", r.witness->has_identity_term}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

json to_json(const SplitVerdict& v) {
  return {{"split", v.split}, {"c_generators", v.c_generators}, {"components", v.components}};
}

namespace {

json to_json(const SlopePairVerdict& v) {
  return {{"pair", v.pair},
          {"n", v.n},
          {"rational_dims", {{"plus", v.rational_dims.plus}, {"minus", v.rational_dims.minus}}},
          {"total_dims", {{"plus", v.total_dims.plus}, {"minus", v.total_dims.minus}}},
          {"q_shifts", v.q_shifts},
          {"distinguished_by", v.distinguished_by}};
}

}  // namespace

json to_json(const EcscReport& r) {
  json j = {{"applicable", r.applicable}, {"reason", r.reason}};
  if (!r.applicable) return j;
  j["rational_slope"] = r.rational_slope;
  j["special_count"] = r.special_count;
  j["case1"] = to_json(*r.case1);
  json c2 = json::array();
  for (const auto& v : r.case2) c2.push_back(to_json(v));
  j["case2"] = c2;
  j["all_distinguished"] = r.all_distinguished();
  return j;
}

json to_json(const AgcccReport& r) {
  json j = {{"branch", agccc_branch_name(r.branch)}, {"reason", r.reason}};
  json warnings = json::array();
  for (const auto& w : r.connectivity_warnings) warnings.push_back(w.description);
  j["connectivity_warnings"] = warnings;
  if (r.branch == AgcccBranch::AllZeroWithSpecial) {
    json shifts = json::object();
    for (const auto& [n, s] : r.special_q_shift) shifts[std::to_string(n)] = s;
    j["special_q_shift"] = shifts;
  }
  if (r.branch == AgcccBranch::NonzeroSlope) {
    j["M"] = r.M.to_string();
    j["N"] = r.N;
    json dims = json::object();
    for (const auto& [n, d] : r.dims) dims[std::to_string(n)] = d;
    j["dims"] = dims;
    j["monotone"] = r.monotone;
    j["separated_by_dimension"] = r.separated_by_dimension;
  }
  if (r.branch == AgcccBranch::NonzeroSlope || r.branch == AgcccBranch::AllZeroWithSpecial) {
    if (r.q_lower_bound)
      j["q_lower_bound"] = *r.q_lower_bound;
    else
      j["q_lower_bound"] = "unavailable";
  }
  return j;
}

json to_json(const ComponentMatch& m, const Complex& x) {
  json ids = json::array();
  for (std::size_t i : m.generators) ids.push_back(x.generator(i).id);
  json aliases = json::array();
  for (const auto& f : m.aliases) aliases.push_back(family_name(f));
  json j = {{"generators", ids}, {"aliases", aliases}, {"q_shift", m.q_shift}, {"h_shift", m.h_shift}};
  j["family"] = m.family ? json(family_name(*m.family)) : json("unknown");
  return j;
}

std::string poincare_polynomial(const BigradedDims& d) {
  if (d.ranks.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [deg, r] : d.ranks) {
    if (!first) os << " + ";
    first = false;
    if (r != 1) os << r << ' ';
    os << "q^" << deg.first << " h^" << deg.second;
  }
  return os.str();
}

std::string poincare_table(const BigradedDims& d) {
  std::ostringstream os;
  os << std::setw(6) << "q" << std::setw(6) << "h" << std::setw(8) << "delta" << std::setw(6) << "rank" << '\n';
  for (const auto& [deg, r] : d.ranks) {
    std::ostringstream delta;
    delta << deg.first / 2.0 - deg.second;
    os << std::setw(6) << deg.first << std::setw(6) << deg.second << std::setw(8) << delta.str() << std::setw(6)
       << r << '\n';
  }
  os << "total " << d.total() << '\n';
  return os.str();
}

std::string render_text(const Complex& x) {
  std::ostringstream os;
  os << x.size() << " generators\n";
  for (const auto& g : x.generators())
    os << "  " << g.id << "  " << vertex_char(g.vertex) << "  q=" << g.q << " h=" << g.h << '\n';
  os << x.entries().size() << " differential entries\n";
  for (const auto& [key, label] : x.entries())
    os << "  " << x.generator(key.first).id << " -> " << x.generator(key.second).id << "  " << label.to_string()
       << '\n';
  return os.str();
}

std::string render_text(const EcscReport& r) {
  std::ostringstream os;
  if (!r.applicable) {
    os << "not applicable: " << r.reason << '\n';
    return os.str();
  }
  os << "rational component r_1(" << r.rational_slope << "), " << r.special_count
     << " special component(s) of slope inf\n";
  auto line = [&](const std::string& label, const SlopePairVerdict& v) {
    os << label << " " << v.pair << ": dims " << v.total_dims.plus << " vs " << v.total_dims.minus
       << " (rational part " << v.rational_dims.plus << " vs " << v.rational_dims.minus << "), distinguished by "
       << v.distinguished_by;
    if (!v.q_shifts.empty()) {
      os << ", q-shifts";
      for (int s : v.q_shifts) os << ' ' << (s > 0 ? "+" : "") << s;
    }
    os << '\n';
  };
  line("Case 1", *r.case1);
  for (const auto& v : r.case2) line("Case 2", v);
  os << (r.all_distinguished() ? "all slope pairs distinguished\n" : "some slope pairs not distinguished\n");
  return os.str();
}

std::string render_text(const AgcccReport& r) {
  std::ostringstream os;
  os << "branch: " << agccc_branch_name(r.branch) << '\n';
  if (!r.reason.empty()) os << r.reason << '\n';
  for (const auto& w : r.connectivity_warnings) os << "warning: " << w.description << '\n';
  if (r.branch == AgcccBranch::AllZeroWithSpecial) {
    os << "special summands shift by q^(4n); all K_n pairwise distinct\n";
    for (const auto& [n, s] : r.special_q_shift) os << "  n=" << n << "  shift " << s << '\n';
  }
  if (r.branch == AgcccBranch::NonzeroSlope) {
    os << "M = " << r.M.to_string() << ", N = " << r.N << '\n';
    for (const auto& [n, d] : r.dims) os << "  n=" << n << "  dim " << d << '\n';
    os << "monotone beyond M: " << (r.monotone ? "yes" : "no") << '\n';
    os << "tails separated by dimension: " << (r.separated_by_dimension ? "yes" : "no (quantum gradings needed)")
       << '\n';
  }
  if (r.branch == AgcccBranch::NonzeroSlope || r.branch == AgcccBranch::AllZeroWithSpecial)
    os << "q lower bound: " << (r.q_lower_bound ? std::to_string(*r.q_lower_bound) : "unavailable") << '\n';
  return os.str();
}

}  // namespace khc
