#include "khcurves/curve.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace khc {

Slope Slope::make(std::int64_t p, std::int64_t q) {
  if (p == 0 && q == 0) throw CurveError("0/0 is not a slope");
  if (q == 0) return Slope(1, 0);
  std::int64_t g = std::gcd(p, q);
  p /= g;
  q /= g;
  if (q < 0) {
    p = -p;
    q = -q;
  }
  return Slope(p, q);
}

Slope Slope::parse(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "oo") return infinity();
  try {
    std::size_t pos = 0;
    std::int64_t p = std::stoll(text, &pos);
    if (pos == text.size()) return make(p, 1);
    if (text[pos] != '/') throw CurveError("");
    std::size_t rest = 0;
    std::int64_t q = std::stoll(text.substr(pos + 1), &rest);
    if (pos + 1 + rest != text.size()) throw CurveError("");
    return make(p, q);
  } catch (const std::logic_error&) {
    throw CurveError("cannot parse slope '" + text + "'");
  }
}

std::string Slope::to_string() const { return std::to_string(p_) + "/" + std::to_string(q_); }

std::int64_t delta(const Slope& s, const Slope& r) {
  std::int64_t d = s.q() * r.p() - s.p() * r.q();
  return d < 0 ? -d : d;
}

std::string curve_kind_name(CurveKind k) {
  switch (k) {
    case CurveKind::Arc: return "arc";
    case CurveKind::Rational: return "rational";
    case CurveKind::Special: return "special";
    case CurveKind::FigureEight: return "figure-eight";
  }
  return "?";
}

CurveKind parse_curve_kind(const std::string& name) {
  if (name == "arc") return CurveKind::Arc;
  if (name == "rational") return CurveKind::Rational;
  if (name == "special") return CurveKind::Special;
  if (name == "figure-eight") return CurveKind::FigureEight;
  throw CurveError("unknown curve kind '" + name + "'");
}

void CurveComponent::validate() const {
  if (length < 1) throw CurveError("component length must be positive");
  if (local_system_dim != 1) throw CurveError("only trivial one-dimensional local systems are supported");
  if (kind == CurveKind::Special && length % 2 != 0)
    throw CurveError("special components have even length");
  if (kind == CurveKind::Arc && length != 1) throw CurveError("arcs have length 1");
}

std::string CurveComponent::to_string() const {
  std::string prefix;
  switch (kind) {
    case CurveKind::Arc: prefix = "a"; break;
    case CurveKind::Rational: prefix = "r" + std::to_string(length); break;
    case CurveKind::Special: prefix = "s" + std::to_string(length); break;
    case CurveKind::FigureEight: prefix = "e" + std::to_string(length); break;
  }
  return prefix + "(" + slope.to_string() + ")";
}

void Multicurve::validate() const {
  for (const auto& c : components) c.validate();
}

Slope mcg_apply(const SL2Z& m, const Slope& s) {
  if (m.det() != 1) throw CurveError("mapping class matrix must have determinant 1");
  return Slope::make(m.c * s.q() + m.d * s.p(), m.a * s.q() + m.b * s.p());
}

Multicurve mcg_apply(const SL2Z& m, const Multicurve& c) {
  if (m.det() != 1) throw CurveError("mapping class matrix must have determinant 1");
  Multicurve out = c;
  for (auto& comp : out.components) comp.slope = mcg_apply(m, comp.slope);
  return out;
}

// ---------------------------------------------------------------------------
// Family library

namespace {

struct ChainStep {
  Vertex vertex;
  int q;
};

// Builds a zig-zag x1 -> x2 -> ... with every arrow pointing right. The
// rightmost generator sits in h = 0.
Complex chain(const std::vector<ChainStep>& steps, const std::vector<Element>& labels) {
  Complex x;
  const int n = static_cast<int>(steps.size());
  for (int i = 0; i < n; ++i)
    x.add_generator({"x" + std::to_string(i + 1), steps[i].vertex, steps[i].q, i - (n - 1)});
  for (int i = 0; i + 1 < n; ++i) x.add_entry(i, i + 1, labels[i]);
  return x;
}

Element d1(Vertex v) { return Word::d_power(v, 1); }
Element s1(Vertex v) { return Word::s_power(v, 1); }
Element s2(Vertex v) { return Word::s_power(v, 2); }

// B generators from q_start upward in steps of 2, with the given number of
// arrows alternating D, S^2, D, ... (first_d) or ..., S^2, D (last_d).
void b_ladder(std::vector<ChainStep>& steps, std::vector<Element>& labels, int q_start, int arrows,
              bool start_with_d) {
  steps.push_back({Vertex::B, q_start});
  for (int i = 0; i < arrows; ++i) {
    bool is_d = start_with_d ? i % 2 == 0 : (arrows - 1 - i) % 2 == 0;
    labels.push_back(is_d ? d1(Vertex::B) : s2(Vertex::B));
    steps.push_back({Vertex::B, q_start + 2 * (i + 1)});
  }
}

// C^{-2n} -S-> B^{1-2n} -D-> B^{3-2n} -S^2-> ... -> B^{-1}
Complex one_over_n_plus(int n) {
  std::vector<ChainStep> steps{{Vertex::C, -2 * n}};
  std::vector<Element> labels{s1(Vertex::C)};
  b_ladder(steps, labels, 1 - 2 * n, n - 1, true);
  return chain(steps, labels);
}

// B^{1} -> ... -S^2-> B^{2n-3} -D-> B^{2n-1} -S-> C^{2n}
Complex one_over_n_minus(int n) {
  std::vector<ChainStep> steps;
  std::vector<Element> labels;
  b_ladder(steps, labels, 1, n - 1, false);
  labels.push_back(s1(Vertex::B));
  steps.push_back({Vertex::C, 2 * n});
  return chain(steps, labels);
}

void require_param(bool ok, const FamilySpec& f) {
  if (!ok)
    throw UnsupportedFamily("parameter " + std::to_string(f.param) + " is not valid for this family");
}

}  // namespace

std::string family_name(const FamilySpec& f) {
  switch (f.family) {
    case Family::HorizontalArc: return "a0";
    case Family::VerticalArc: return "a-inf";
    case Family::FigureEight: return "e" + std::to_string(f.param);
    case Family::RationalZero: return "r1-0";
    case Family::RationalInf: return "r1-inf";
    case Family::TwoTwistPlus: return "alpha-plus";
    case Family::TwoTwistMinus: return "alpha-minus";
    case Family::OneOverNPlus: return "alpha-plus-n" + std::to_string(f.param);
    case Family::OneOverNMinus: return "alpha-minus-n" + std::to_string(f.param);
    case Family::HalfTwistArc: return "alpha-half-n" + std::to_string(f.param);
    case Family::TrefoilArc: return "bn-q13";
  }
  return "?";
}

FamilySpec parse_family_name(const std::string& name) {
  auto number_after = [&](const std::string& prefix) -> std::optional<int> {
    if (name.rfind(prefix, 0) != 0 || name.size() == prefix.size()) return std::nullopt;
    try {
      std::size_t pos = 0;
      int v = std::stoi(name.substr(prefix.size()), &pos);
      if (pos != name.size() - prefix.size()) return std::nullopt;
      return v;
    } catch (const std::logic_error&) {
      return std::nullopt;
    }
  };
  if (name == "a0") return {Family::HorizontalArc, 0};
  if (name == "a-inf") return {Family::VerticalArc, 0};
  if (name == "r1-0") return {Family::RationalZero, 0};
  if (name == "r1-inf") return {Family::RationalInf, 0};
  if (name == "alpha-plus") return {Family::TwoTwistPlus, 0};
  if (name == "alpha-minus") return {Family::TwoTwistMinus, 0};
  if (name == "bn-q13") return {Family::TrefoilArc, 0};
  if (auto k = number_after("e")) return {Family::FigureEight, *k};
  if (auto n = number_after("alpha-plus-n")) return {Family::OneOverNPlus, *n};
  if (auto n = number_after("alpha-minus-n")) return {Family::OneOverNMinus, *n};
  if (auto n = number_after("alpha-half-n")) return {Family::HalfTwistArc, *n};
  throw UnsupportedFamily("unknown family '" + name +
                          "' (special curves and r_n for n >= 2 only exist as metadata; use the "
                          "geometric engine)");
}

CompiledCurve compile(const FamilySpec& f) {
  const Vertex B = Vertex::B, C = Vertex::C;
  CompiledCurve out;
  out.tag = f;
  switch (f.family) {
    case Family::HorizontalArc:
      out.complex = chain({{B, 0}}, {});
      out.slope = Slope::make(0, 1);
      break;
    case Family::VerticalArc:
      out.complex = chain({{C, 0}}, {});
      out.slope = Slope::infinity();
      break;
    case Family::FigureEight:
      require_param(f.param >= 1, f);
      out.complex = chain({{B, 0}, {B, 2 * f.param}}, {central_h(B, f.param)});
      out.slope = Slope::make(0, 1);
      out.kind = CurveKind::FigureEight;
      out.length = f.param;
      break;
    case Family::RationalZero:
      out.complex = chain({{B, -1}, {B, 1}}, {central_h(B)});
      out.slope = Slope::make(0, 1);
      out.kind = CurveKind::Rational;
      break;
    case Family::RationalInf:
      out.complex = chain({{C, -1}, {C, 1}}, {central_h(C)});
      out.slope = Slope::infinity();
      out.kind = CurveKind::Rational;
      break;
    case Family::TwoTwistPlus:
      out.complex = chain({{C, -5}, {C, -3}, {B, -2}}, {d1(C), s1(C)});
      out.slope = Slope::make(2, 1);
      break;
    case Family::TwoTwistMinus:
      out.complex = chain({{B, -4}, {C, -3}, {C, -1}}, {s1(B), d1(C)});
      out.slope = Slope::make(-2, 1);
      break;
    case Family::OneOverNPlus:
      require_param(f.param >= 1, f);
      out.complex = one_over_n_plus(f.param);
      out.slope = Slope::make(1, f.param);
      break;
    case Family::OneOverNMinus:
      require_param(f.param >= 1, f);
      out.complex = one_over_n_minus(f.param);
      out.slope = Slope::make(-1, f.param);
      break;
    case Family::HalfTwistArc: {
      const int n = f.param;
      std::vector<ChainStep> steps;
      std::vector<Element> labels;
      if (n > 0) {
        steps.push_back({C, -4 * n});
        labels.push_back(s1(C));
        b_ladder(steps, labels, 1 - 4 * n, 2 * n - 1, true);
      } else if (n == 0) {
        steps.push_back({C, 0});
      } else {
        b_ladder(steps, labels, 1, -2 * n - 1, true);
        labels.push_back(s1(B));
        steps.push_back({C, -4 * n});
      }
      out.complex = chain(steps, labels);
      out.slope = Slope::make(1, 2 * n);
      break;
    }
    case Family::TrefoilArc:
      out.complex = chain({{C, -6}, {B, -5}, {B, -3}, {B, -1}}, {s1(C), d1(B), s2(B)});
      out.slope = Slope::make(1, 3);
      break;
  }
  return out;
}

std::optional<FamilySpec> arc_family_for_slope(const Slope& s) {
  if (s.is_infinity()) return FamilySpec{Family::VerticalArc, 0};
  if (s.p() == 0) return FamilySpec{Family::HorizontalArc, 0};
  if (s.q() == 1 && s.p() == 2) return FamilySpec{Family::TwoTwistPlus, 0};
  if (s.q() == 1 && s.p() == -2) return FamilySpec{Family::TwoTwistMinus, 0};
  if (s.p() == 1) return FamilySpec{Family::OneOverNPlus, static_cast<int>(s.q())};
  if (s.p() == -1) return FamilySpec{Family::OneOverNMinus, static_cast<int>(s.q())};
  return std::nullopt;
}

Complex rational_from_arc(const Slope& s) {
  auto f = arc_family_for_slope(s);
  if (!f) throw UnsupportedFamily("no arc complex of slope " + s.to_string());
  return cone_h(compile(*f).complex);
}

// ---------------------------------------------------------------------------
// Matching

bool equal_up_to_ids(const Complex& x, const Complex& y) {
  if (x.size() != y.size() || x.entries() != y.entries()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto& a = x.generator(i);
    const auto& b = y.generator(i);
    if (a.vertex != b.vertex || a.q != b.q || a.h != b.h) return false;
  }
  return true;
}

std::optional<Grading> match_up_to_shift(const Complex& pattern, const Complex& x) {
  const std::size_t n = pattern.size();
  if (n != x.size() || pattern.entries().size() != x.entries().size()) return std::nullopt;
  if (n == 0) return Grading{0, 0};

  std::vector<std::optional<std::size_t>> map(n);
  std::vector<bool> used(n, false);
  Grading shift;

  auto consistent = [&](std::size_t i) {
    // every pattern entry between i and an already-mapped generator must
    // appear in x with the same label, and vice versa
    for (std::size_t j = 0; j < n; ++j) {
      if (!map[j]) continue;
      for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
        const Element* pe = pattern.entry(a, b);
        const Element* xe = x.entry(*map[a], *map[b]);
        if ((pe == nullptr) != (xe == nullptr)) return false;
        if (pe && !(*pe == *xe)) return false;
      }
    }
    return true;
  };

  std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
    if (i == n) return true;
    const auto& pg = pattern.generator(i);
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c]) continue;
      const auto& xg = x.generator(c);
      if (xg.vertex != pg.vertex) continue;
      if (i == 0) {
        shift = {xg.q - pg.q, xg.h - pg.h};
      } else if (xg.q - pg.q != shift.q || xg.h - pg.h != shift.h) {
        continue;
      }
      map[i] = c;
      used[c] = true;
      if (consistent(i) && extend(i + 1)) return true;
      map[i].reset();
      used[c] = false;
    }
    return false;
  };

  if (!extend(0)) return std::nullopt;
  return shift;
}

namespace {

std::vector<FamilySpec> candidates_for(const Complex& comp) {
  const int n = static_cast<int>(comp.size());
  std::vector<FamilySpec> out;
  if (n == 1) {
    out.push_back({Family::HorizontalArc, 0});
    out.push_back({Family::VerticalArc, 0});
    out.push_back({Family::HalfTwistArc, 0});
    return out;
  }
  if (n == 2) {
    out.push_back({Family::RationalZero, 0});
    int span = comp.q_span();
    if (span >= 2 && span % 2 == 0) out.push_back({Family::FigureEight, span / 2});
    out.push_back({Family::RationalInf, 0});
  }
  if (n == 3) {
    out.push_back({Family::TwoTwistPlus, 0});
    out.push_back({Family::TwoTwistMinus, 0});
  }
  if (n % 2 == 1) {
    out.push_back({Family::HalfTwistArc, (n - 1) / 2});
    out.push_back({Family::HalfTwistArc, -(n - 1) / 2});
  }
  out.push_back({Family::OneOverNPlus, n - 1});
  out.push_back({Family::OneOverNMinus, n - 1});
  if (n == 4) out.push_back({Family::TrefoilArc, 0});
  return out;
}

}  // namespace

std::vector<ComponentMatch> classify_reduced_complex(const Complex& x) {
  std::vector<ComponentMatch> result;
  for (auto& gens : connected_components(x)) {
    ComponentMatch m;
    m.generators = gens;
    const Complex comp = restrict_to(x, gens);
    std::optional<std::size_t> zero_shift;
    std::vector<Grading> shifts;
    for (const FamilySpec& f : candidates_for(comp)) {
      auto s = match_up_to_shift(compile(f).complex, comp);
      if (!s) continue;
      if (!zero_shift && s->q == 0 && s->h == 0) zero_shift = m.aliases.size();
      m.aliases.push_back(f);
      shifts.push_back(*s);
    }
    if (!m.aliases.empty()) {
      std::size_t pick = zero_shift.value_or(0);
      std::rotate(m.aliases.begin(), m.aliases.begin() + pick, m.aliases.begin() + pick + 1);
      std::rotate(shifts.begin(), shifts.begin() + pick, shifts.begin() + pick + 1);
      m.family = m.aliases.front();
      m.q_shift = shifts.front().q;
      m.h_shift = shifts.front().h;
    }
    result.push_back(std::move(m));
  }
  return result;
}

}  // namespace khc
