#include "khcurves/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "khcurves/detection.hpp"
#include "khcurves/examples.hpp"
#include "khcurves/json_io.hpp"
#include "khcurves/pairing.hpp"

namespace khc::cli {

namespace {

// Thrown for bad input that CLI11 can't see (e.g. an unreadable file name).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json load_json(const std::string& spec, ExampleKind want) {
  if (spec.rfind("example:", 0) == 0) {
    const std::string name = spec.substr(8);
    const Example* ex = nullptr;
    try {
      ex = &find_example(name);
    } catch (const std::out_of_range&) {
      throw FormatError("unknown example '" + name + "'");
    }
    if (ex->kind != want)
      throw FormatError("example '" + name + "' is a " +
                        (ex->kind == ExampleKind::Complex ? "complex" : "multicurve"));
    return parse_json(std::string(ex->json));
  }
  const auto first = spec.find_first_not_of(" \t\n");
  if (first != std::string::npos && (spec[first] == '{' || spec[first] == '[')) return parse_json(spec);
  std::ifstream in(spec);
  if (!in) throw UsageError("cannot read '" + spec + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

Complex load_complex(const std::string& spec) { return complex_from_json(load_json(spec, ExampleKind::Complex)); }

Multicurve load_curve(const std::string& spec) {
  return multicurve_from_json(load_json(spec, ExampleKind::Multicurve));
}

std::string error_type(const std::exception& e) {
  if (dynamic_cast<const FormatError*>(&e)) return "FormatError";
  if (dynamic_cast<const NonStabilizing*>(&e)) return "NonStabilizing";
  if (dynamic_cast<const UnsupportedPairing*>(&e)) return "UnsupportedPairing";
  if (dynamic_cast<const UnsupportedFamily*>(&e)) return "UnsupportedFamily";
  if (dynamic_cast<const CurveError*>(&e)) return "CurveError";
  if (dynamic_cast<const ComplexError*>(&e)) return "ComplexError";
  if (dynamic_cast<const AlgebraError*>(&e)) return "AlgebraError";
  if (dynamic_cast<const PairingError*>(&e)) return "PairingError";
  return "Error";
}

struct Options {
  std::string format = "text";
  std::string out_file;
  int nmax = 8;
  std::optional<int> cap;
  std::optional<int> mu;
  std::string complex, left, right, curve, arc, connectivity = "no", name;
  bool torsion = false;
};

// Each command returns its output as JSON and text; the caller picks one.
struct Output {
  json data;
  std::string text;
};

Output cmd_validate(const Options& o) {
  const json j = load_json(o.complex, ExampleKind::Complex);
  const Complex x = complex_from_json(j);
  const ValidationReport r = validate_complex(x);
  std::string text = r.ok() ? "valid\n" : "invalid\n";
  for (const auto& p : r.problems) text += "  " + p + "\n";
  return {to_json(r), text};
}

Output cmd_reduce(const Options& o) {
  const Complex x = gauss_reduce(load_complex(o.complex));
  return {to_json(x), render_text(x)};
}

Output cmd_cone(const Options& o) {
  const Complex x = load_complex(o.complex);
  require_valid(x);
  const Complex c = cone_h(x);
  return {to_json(c), render_text(c)};
}

Output cmd_pair(const Options& o) {
  const Complex x = load_complex(o.left);
  const Complex y = load_complex(o.right);
  const MorHomologyResult r = mor_homology_detailed(x, y, o.cap);
  json j = to_json(r.dims);
  j["cap"] = r.cap_low;
  std::ostringstream os;
  os << "total dimension " << r.dims.total() << '\n'
     << "poincare " << poincare_polynomial(r.dims) << '\n'
     << poincare_table(r.dims);
  if (o.torsion) {
    const TorsionReport t = torsion_witness(x, y);
    j["torsion"] = to_json(x, y, t);
    os << "basepoint action rank " << t.action_rank << " of " << t.total_dim << '\n';
    os << (t.witness ? "torsion witness found\n" : "action is free\n");
  }
  return {j, os.str()};
}

Output cmd_geom(const Options& o) {
  const CurveComponent arc = CurveComponent::arc(Slope::parse(o.arc));
  const Multicurve c = load_curve(o.curve);
  json per = json::array();
  std::int64_t total = 0;
  std::ostringstream os;
  for (const auto& g : c.components) {
    const std::int64_t d = geometric_dim(arc, g);
    total += d;
    per.push_back({{"component", g.to_string()}, {"dim", d}});
    os << g.to_string() << ": " << d << '\n';
  }
  os << "total " << total << '\n';
  return {{{"arc", arc.slope.to_string()}, {"components", per}, {"total", total}}, os.str()};
}

Output cmd_classify(const Options& o) {
  const Complex x = gauss_reduce(load_complex(o.complex));
  json arr = json::array();
  std::ostringstream os;
  for (const auto& m : classify_reduced_complex(x)) {
    arr.push_back(to_json(m, x));
    os << (m.family ? family_name(*m.family) : std::string("unknown")) << " shift (" << m.q_shift << ","
       << m.h_shift << ") on";
    for (std::size_t i : m.generators) os << ' ' << x.generator(i).id;
    os << '\n';
  }
  return {{{"components", arr}}, os.str()};
}

Output cmd_detect(const std::string& what, const Options& o) {
  if (what == "split") {
    const SplitVerdict v = detect_split(load_complex(o.complex));
    std::string text = v.split ? "split" : "not split";
    if (v.split && !v.components.empty()) {
      text += ":";
      for (const auto& c : v.components) text += " " + c;
    }
    return {to_json(v), text + "\n"};
  }
  const Multicurve c = load_curve(o.curve);
  if (what == "rational") {
    const bool r = detect_rational(c);
    return {{{"rational", r}}, r ? "rational\n" : "not rational\n"};
  }
  const auto viol = connectivity_check(parse_connectivity(o.connectivity), c);
  json arr = json::array();
  std::string text = viol.empty() ? "consistent\n" : "";
  for (const auto& v : viol) {
    arr.push_back({{"component", v.component}, {"description", v.description}});
    text += "violation: " + v.description + "\n";
  }
  return {{{"consistent", viol.empty()}, {"violations", arr}}, text};
}

Output cmd_ecsc(const Options& o) {
  const EcscReport r = ecsc_scan(load_curve(o.curve), o.nmax);
  return {to_json(r), render_text(r)};
}

Output cmd_agccc(const Options& o) {
  const AgcccReport r = agccc_report(load_curve(o.curve), o.nmax, o.mu);
  return {to_json(r), render_text(r)};
}

Output cmd_closure(const Options& o) {
  const std::string v = closure_verdict_name(split_closure_analysis(load_curve(o.curve)));
  return {{{"verdict", v}}, v + "\n"};
}

Output cmd_examples(const Options& o) {
  if (!o.name.empty()) {
    const json j = load_json("example:" + o.name, find_example(o.name).kind);
    return {j, j.dump(2) + "\n"};
  }
  json arr = json::array();
  std::ostringstream os;
  for (const auto& e : examples()) {
    const char* kind = e.kind == ExampleKind::Complex ? "complex" : "multicurve";
    arr.push_back({{"name", e.name}, {"kind", kind}, {"description", e.description}});
    os << e.name << "  [" << kind << "]  " << e.description << '\n';
  }
  return {arr, os.str()};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Immersed curve and Bar-Natan complex toolkit", "khcurves"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", o.out_file, "write output to FILE");
  app.fallthrough();

  auto* validate = app.add_subcommand("validate", "check a complex");
  validate->add_option("--complex", o.complex)->required();
  auto* reduce = app.add_subcommand("reduce", "cancel identity differentials");
  reduce->add_option("--complex", o.complex)->required();
  auto* cone = app.add_subcommand("cone", "mapping cone of H");
  cone->add_option("--complex", o.complex)->required();
  auto* pair = app.add_subcommand("pair", "homology of the morphism space");
  pair->add_option("--left", o.left)->required();
  pair->add_option("--right", o.right)->required();
  pair->add_option("--cap", o.cap, "override the word-weight cap");
  pair->add_flag("--torsion", o.torsion, "also look for a basepoint torsion witness");
  auto* geom = app.add_subcommand("geom", "intersection count of an arc with a multicurve");
  geom->add_option("--arc", o.arc, "arc slope, e.g. 1/3 or inf")->required();
  geom->add_option("--curve", o.curve)->required();
  auto* classify = app.add_subcommand("classify", "recognize curve families in a complex");
  classify->add_option("--complex", o.complex)->required();

  auto* detect = app.add_subcommand("detect", "split, rational or connectivity detection");
  detect->require_subcommand(1);
  auto* d_split = detect->add_subcommand("split");
  d_split->add_option("--complex", o.complex)->required();
  auto* d_rational = detect->add_subcommand("rational");
  d_rational->add_option("--curve", o.curve)->required();
  auto* d_conn = detect->add_subcommand("connectivity");
  d_conn->add_option("--curve", o.curve)->required();
  d_conn->add_option("--connectivity", o.connectivity, "no or other");

  auto* ecsc = app.add_subcommand("ecsc", "cosmetic surgery scan");
  ecsc->add_option("--curve", o.curve)->required();
  ecsc->add_option("--nmax", o.nmax)->check(CLI::PositiveNumber);
  auto* agccc = app.add_subcommand("agccc", "cosmetic crossing report");
  agccc->add_option("--curve", o.curve)->required();
  agccc->add_option("--nmax", o.nmax)->check(CLI::PositiveNumber);
  agccc->add_option("--mu", o.mu, "minimal quantum grading of the complex");
  auto* closure = app.add_subcommand("closure", "split closure test");
  closure->add_option("--curve", o.curve)->required();
  auto* ex = app.add_subcommand("examples", "list or print built-in examples");
  ex->add_option("--name", o.name);

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  Output result;
  try {
    if (validate->parsed()) result = cmd_validate(o);
    else if (reduce->parsed()) result = cmd_reduce(o);
    else if (cone->parsed()) result = cmd_cone(o);
    else if (pair->parsed()) result = cmd_pair(o);
    else if (geom->parsed()) result = cmd_geom(o);
    else if (classify->parsed()) result = cmd_classify(o);
    else if (d_split->parsed()) result = cmd_detect("split", o);
    else if (d_rational->parsed()) result = cmd_detect("rational", o);
    else if (d_conn->parsed()) result = cmd_detect("connectivity", o);
    else if (ecsc->parsed()) result = cmd_ecsc(o);
    else if (agccc->parsed()) result = cmd_agccc(o);
    else if (closure->parsed()) result = cmd_closure(o);
    else if (ex->parsed()) result = cmd_examples(o);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    if (o.format == "json")
      out << json{{"error", {{"type", error_type(e)}, {"message", e.what()}}}}.dump(2) << '\n';
    err << "error: " << e.what() << '\n';
    return 1;
  }

  const std::string text = o.format == "json" ? result.data.dump(2) + "\n" : result.text;
  if (o.out_file.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out_file);
    if (!f) {
      err << "error: cannot write '" << o.out_file << "'\n";
      return 1;
    }
    f << text;
  }
  return 0;
}

}  // namespace khc::cli
