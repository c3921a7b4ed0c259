#include "khcurves/detection.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "khcurves/pairing.hpp"

namespace khc {

SplitVerdict detect_split(const Complex& x) {
  require_valid(x);
  const Complex reduced = gauss_reduce(x);
  SplitVerdict v;
  for (const auto& g : reduced.generators())
    if (g.vertex == Vertex::C) v.c_generators.push_back(g.id);
  v.split = v.c_generators.empty();
  if (v.split) {
    for (const auto& m : classify_reduced_complex(reduced))
      v.components.push_back(m.family ? family_name(*m.family) : "unknown");
  }
  return v;
}

bool detect_rational(const Multicurve& c) {
  return c.components.size() == 1 && c.components.front().kind == CurveKind::Rational &&
         c.components.front().length == 1;
}

std::string connectivity_name(Connectivity c) { return c == Connectivity::NoCrossing ? "no" : "other"; }

Connectivity parse_connectivity(const std::string& s) {
  if (s == "no" || s == "N0" || s == "no-crossing") return Connectivity::NoCrossing;
  if (s == "other") return Connectivity::Other;
  throw CurveError("unknown connectivity '" + s + "'");
}

std::vector<ConnectivityViolation> connectivity_check(Connectivity conn, const Multicurve& c) {
  std::vector<ConnectivityViolation> out;
  if (conn != Connectivity::NoCrossing) return out;
  for (std::size_t i = 0; i < c.components.size(); ++i) {
    const auto& comp = c.components[i];
    if (comp.kind == CurveKind::Rational && comp.length % 2 == 1 && comp.slope.p() % 2 != 0)
      out.push_back({i, "odd-length rational component " + comp.to_string() + " has odd numerator"});
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

bool has_outgoing(const Complex& x, std::size_t i) {
  return std::any_of(x.entries().begin(), x.entries().end(), [&](const auto& e) { return e.first.first == i; });
}

bool has_incoming(const Complex& x, std::size_t i) {
  return std::any_of(x.entries().begin(), x.entries().end(), [&](const auto& e) { return e.first.second == i; });
}

// The B generator at the end of an arc complex: terminal (no outgoing entry)
// when `terminal`, initial otherwise.
const Generator& b_end(const Complex& x, bool terminal) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x.generator(i).vertex != Vertex::B) continue;
    if (terminal ? !has_outgoing(x, i) : !has_incoming(x, i)) return x.generator(i);
  }
  throw std::logic_error("arc complex has no B end");
}

const Generator& c_end(const Complex& x) {
  for (const auto& g : x.generators())
    if (g.vertex == Vertex::C) return g;
  throw std::logic_error("arc complex has no C generator");
}

// Sources of D-labelled entries, ordered by homological grading.
std::vector<const Generator*> d_edge_sources(const Complex& x, bool left_to_right) {
  std::vector<const Generator*> out;
  for (const auto& [key, label] : x.entries())
    if (label.words().size() == 1 && label.words().front().kind() == WordKind::D)
      out.push_back(&x.generator(key.first));
  std::sort(out.begin(), out.end(), [&](const Generator* a, const Generator* b) {
    return left_to_right ? a->h < b->h : a->h > b->h;
  });
  return out;
}

SlopePairVerdict compare_arcs(const CompiledCurve& plus, const CompiledCurve& minus, const Multicurve& c,
                              std::size_t rho_index) {
  SlopePairVerdict v;
  const auto& rho = c.components[rho_index];
  v.rational_dims = {geometric_dim(plus.component(), rho), geometric_dim(minus.component(), rho)};
  v.total_dims = v.rational_dims;
  for (std::size_t i = 0; i < c.components.size(); ++i) {
    if (i == rho_index) continue;
    v.total_dims.plus += geometric_dim(plus.component(), c.components[i]);
    v.total_dims.minus += geometric_dim(minus.component(), c.components[i]);
  }
  v.distinguished_by = v.rational_dims.plus != v.rational_dims.minus ? "dimension" : "quantum grading";
  return v;
}

}  // namespace

bool EcscReport::all_distinguished() const {
  if (!applicable || !case1) return false;
  auto ok = [](const SlopePairVerdict& v) {
    return v.distinguished_by == "dimension" || !v.q_shifts.empty();
  };
  return ok(*case1) && std::all_of(case2.begin(), case2.end(), ok);
}

EcscReport ecsc_scan(const Multicurve& c, int n_max) {
  c.validate();
  if (n_max < 1) throw CurveError("n_max must be positive");
  EcscReport rep;

  std::vector<std::size_t> rationals;
  for (std::size_t i = 0; i < c.components.size(); ++i) {
    const auto k = c.components[i].kind;
    if (k == CurveKind::Arc || k == CurveKind::FigureEight) {
      rep.reason = "not a Kh-type multicurve: " + c.components[i].to_string();
      return rep;
    }
    if (k == CurveKind::Rational) rationals.push_back(i);
    else ++rep.special_count;
  }
  if (rationals.size() != 1) {
    rep.reason = "expected exactly one rational component, found " + std::to_string(rationals.size());
    return rep;
  }
  const std::size_t rho_index = rationals.front();
  const auto& rho = c.components[rho_index];

  const CurveComponent vertical = CurveComponent::arc(Slope::infinity());
  std::int64_t vertical_count = 0;
  try {
    for (const auto& comp : c.components) vertical_count += geometric_dim(vertical, comp);
  } catch (const UnsupportedPairing& e) {
    rep.reason = e.what();
    return rep;
  }
  if (vertical_count != 1 || rho.length != 1) {
    rep.reason = "the multicurve must meet the vertical arc exactly once (specials of slope inf plus one "
                 "r_1 of integer slope); it meets it " + std::to_string(vertical_count) + " times";
    return rep;
  }
  rep.rational_slope = rho.slope.p();
  if (auto viol = connectivity_check(Connectivity::NoCrossing, c); !viol.empty()) {
    rep.reason = viol.front().description;
    return rep;
  }
  if (rep.special_count == 0) {
    rep.reason = "the tangle is rational, so the scan is not applicable";
    return rep;
  }
  rep.applicable = true;

  {
    const CompiledCurve plus = compile({Family::TwoTwistPlus, 0});
    const CompiledCurve minus = compile({Family::TwoTwistMinus, 0});
    SlopePairVerdict v = compare_arcs(plus, minus, c, rho_index);
    v.pair = "+2/-2";
    if (v.distinguished_by != "dimension")
      v.q_shifts.push_back(b_end(plus.complex, true).q - b_end(minus.complex, false).q);
    rep.case1 = v;
  }

  for (int n = 1; n <= n_max; ++n) {
    const CompiledCurve plus = compile({Family::OneOverNPlus, n});
    const CompiledCurve minus = compile({Family::OneOverNMinus, n});
    SlopePairVerdict v = compare_arcs(plus, minus, c, rho_index);
    v.pair = "1/" + std::to_string(n) + ",-1/" + std::to_string(n);
    v.n = n;
    if (v.distinguished_by != "dimension") {
      // D-segments of the two arcs run parallel in mirrored order.
      const auto ps = d_edge_sources(plus.complex, true);
      const auto ms = d_edge_sources(minus.complex, false);
      for (std::size_t j = 0; j < std::min(ps.size(), ms.size()); ++j) v.q_shifts.push_back(ps[j]->q - ms[j]->q);
      if (n % 2 == 1) v.q_shifts.push_back(b_end(plus.complex, true).q - b_end(minus.complex, false).q);
    }
    rep.case2.push_back(std::move(v));
  }
  return rep;
}

// ---------------------------------------------------------------------------

std::string agccc_branch_name(AgcccBranch b) {
  switch (b) {
    case AgcccBranch::HorizontallySplit: return "HorizontallySplit";
    case AgcccBranch::AllZeroWithSpecial: return "AllZeroWithSpecial";
    case AgcccBranch::NonzeroSlope: return "NonzeroSlope";
    case AgcccBranch::Inapplicable: return "Inapplicable";
  }
  return "?";
}

std::string Fraction::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

AgcccReport agccc_report(const Multicurve& c, int n_max, std::optional<int> mu) {
  c.validate();
  if (n_max < 1) throw CurveError("n_max must be positive");
  AgcccReport rep;
  if (c.components.empty()) {
    rep.reason = "empty multicurve";
    return rep;
  }
  for (const auto& comp : c.components) {
    if (comp.kind == CurveKind::Arc || comp.kind == CurveKind::FigureEight) {
      rep.reason = "not a Kh-type multicurve: " + comp.to_string();
      return rep;
    }
  }
  rep.connectivity_warnings = connectivity_check(Connectivity::NoCrossing, c);

  const bool all_zero = std::all_of(c.components.begin(), c.components.end(),
                                    [](const CurveComponent& g) { return g.slope.p() == 0; });
  if (all_zero) {
    const bool any_special = std::any_of(c.components.begin(), c.components.end(),
                                         [](const CurveComponent& g) { return g.kind == CurveKind::Special; });
    if (!any_special) {
      rep.branch = AgcccBranch::HorizontallySplit;
      rep.reason = "only rational components of slope 0: the tangle is horizontally split";
      return rep;
    }
    rep.branch = AgcccBranch::AllZeroWithSpecial;
    for (int n = -n_max; n <= n_max; ++n)
      rep.special_q_shift[n] = -c_end(compile({Family::HalfTwistArc, n}).complex).q;
    rep.monotone = true;
    if (mu) rep.q_lower_bound = *mu - 1;
    return rep;
  }

  rep.branch = AgcccBranch::NonzeroSlope;
  bool first = true;
  for (const auto& g : c.components) {
    if (g.slope.p() == 0) continue;
    Fraction f{g.slope.q(), 2 * std::abs(g.slope.p())};
    const std::int64_t d = std::gcd(f.num, f.den);
    f = {f.num / d, f.den / d};
    if (first || f.num * rep.M.den > rep.M.num * f.den) rep.M = f;
    first = false;
  }
  // smallest integer exceeding M
  rep.N = rep.M.num / rep.M.den + 1;

  for (int n = -n_max; n <= n_max; ++n) {
    const CurveComponent arc = CurveComponent::arc(Slope::make(1, 2 * n));
    try {
      std::int64_t d = 0;
      for (const auto& g : c.components) d += geometric_dim(arc, g);
      rep.dims[n] = d;
    } catch (const UnsupportedPairing&) {
      // same slope as a long rational component; no count available
    }
  }

  auto beyond = [&](int n) { return static_cast<std::int64_t>(std::abs(n)) * rep.M.den > rep.M.num; };
  rep.monotone = true;
  for (const auto& [n, d] : rep.dims) {
    if (!beyond(n)) continue;
    auto next = rep.dims.find(n > 0 ? n + 1 : n - 1);
    if (next != rep.dims.end() && next->second <= d) rep.monotone = false;
  }
  std::set<std::int64_t> upper, lower;
  for (const auto& [n, d] : rep.dims) {
    if (n >= rep.N) upper.insert(d);
    if (n <= -rep.N) lower.insert(d);
  }
  rep.separated_by_dimension =
      std::none_of(upper.begin(), upper.end(), [&](std::int64_t d) { return lower.count(d) != 0; });
  if (mu) rep.q_lower_bound = *mu - 1;
  return rep;
}

// ---------------------------------------------------------------------------

std::string closure_verdict_name(ClosureVerdict v) {
  switch (v) {
    case ClosureVerdict::NecessaryViolated: return "NecessaryViolated";
    case ClosureVerdict::SufficientHolds: return "SufficientHolds";
    case ClosureVerdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

ClosureVerdict split_closure_analysis(const Multicurve& c) {
  for (const auto& g : c.components)
    if (g.slope.p() != 0) return ClosureVerdict::NecessaryViolated;
  for (const auto& g : c.components)
    if (g.kind == CurveKind::Rational && g.length > 1) return ClosureVerdict::Inconclusive;
  return ClosureVerdict::SufficientHolds;
}

}  // namespace khc
