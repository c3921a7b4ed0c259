#pragma once

// Slopes, multicurve metadata and the library of explicitly known complexes.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "khcurves/complex.hpp"

namespace khc {

class CurveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a family or parameter has no algebraic complex here.
class UnsupportedFamily : public CurveError {
 public:
  using CurveError::CurveError;
};

// p/q in lowest terms with q >= 0; infinity is 1/0.
class Slope {
 public:
  Slope() : p_(0), q_(1) {}
  static Slope make(std::int64_t p, std::int64_t q);
  static Slope infinity() { return make(1, 0); }
  // "p/q", "p" or "inf".
  static Slope parse(const std::string& text);

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  bool is_infinity() const { return q_ == 0; }
  std::string to_string() const;

  friend bool operator==(const Slope&, const Slope&) = default;

 private:
  Slope(std::int64_t p, std::int64_t q) : p_(p), q_(q) {}
  std::int64_t p_;
  std::int64_t q_;
};

inline Slope normalize_slope(std::int64_t p, std::int64_t q) { return Slope::make(p, q); }

// |q p' - p q'|
std::int64_t delta(const Slope& s, const Slope& r);

enum class CurveKind { Arc, Rational, Special, FigureEight };

std::string curve_kind_name(CurveKind k);
CurveKind parse_curve_kind(const std::string& name);

// Metadata for one component. FigureEight is the generalized figure-eight
// e_k(0) = [B --H^k--> B] of length k; only Rational and Special components
// occur in Kh-type multicurves.
struct CurveComponent {
  CurveKind kind = CurveKind::Rational;
  Slope slope;
  int length = 1;
  int q_anchor = 0;
  int local_system_dim = 1;

  static CurveComponent arc(Slope s) { return {CurveKind::Arc, s, 1, 0, 1}; }
  static CurveComponent rational(Slope s, int length = 1) { return {CurveKind::Rational, s, length, 0, 1}; }
  static CurveComponent special(Slope s, int length) { return {CurveKind::Special, s, length, 0, 1}; }
  static CurveComponent figure_eight(int k) { return {CurveKind::FigureEight, Slope(), k, 0, 1}; }

  // Throws CurveError on a violated invariant.
  void validate() const;
  std::string to_string() const;

  friend bool operator==(const CurveComponent&, const CurveComponent&) = default;
};

struct Multicurve {
  std::vector<CurveComponent> components;

  void validate() const;
  friend bool operator==(const Multicurve&, const Multicurve&) = default;
};

// Integer matrix [[a, b], [c, d]] with ad - bc = 1.
struct SL2Z {
  std::int64_t a = 1, b = 0, c = 0, d = 1;
  std::int64_t det() const { return a * d - b * c; }
};

Slope mcg_apply(const SL2Z& m, const Slope& s);
// Slopes move; kind, length and q_anchor are kept.
Multicurve mcg_apply(const SL2Z& m, const Multicurve& c);

// Named families with explicitly known complexes.
enum class Family {
  HorizontalArc,   // a_0 = [B]
  VerticalArc,     // a_inf = [C]
  FigureEight,     // e_k(0), param k >= 1
  RationalZero,    // r_1(0), unknot normalized
  RationalInf,     // r_1(inf)
  TwoTwistPlus,    // slope +2 arc of the mirrored +2 twist tangle
  TwoTwistMinus,   // slope -2
  OneOverNPlus,    // slope +1/n arc, param n >= 1
  OneOverNMinus,   // slope -1/n arc, param n >= 1
  HalfTwistArc,    // slope 1/2n arc, param n (any integer)
  TrefoilArc,      // BN of the 1/3 rational tangle
};

struct FamilySpec {
  Family family = Family::HorizontalArc;
  int param = 0;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

// Stable names: a0, a-inf, e<k>, r1-0, r1-inf, alpha-plus, alpha-minus,
// alpha-plus-n<n>, alpha-minus-n<n>, alpha-half-n<n>, bn-q13.
std::string family_name(const FamilySpec& f);
FamilySpec parse_family_name(const std::string& name);

struct CompiledCurve {
  FamilySpec tag;
  Complex complex;
  Slope slope;
  CurveKind kind = CurveKind::Arc;
  int length = 1;

  CurveComponent component() const { return {kind, slope, length, 0, 1}; }
};

CompiledCurve compile(const FamilySpec& f);

// The compiled arc of the given slope, if one is available.
std::optional<FamilySpec> arc_family_for_slope(const Slope& s);

// r_1(s) as the H-cone of the arc of slope s.
Complex rational_from_arc(const Slope& s);

struct ComponentMatch {
  std::vector<std::size_t> generators;  // indices into the classified complex
  std::optional<FamilySpec> family;     // nullopt: unknown
  std::vector<FamilySpec> aliases;      // every matching family, family first
  int q_shift = 0;
  int h_shift = 0;
};

// Splits a reduced complex into connected components and matches each one
// against the compiled families up to an overall bigrading shift.
std::vector<ComponentMatch> classify_reduced_complex(const Complex& x);

// Isomorphism up to renaming of generators and an overall (dq, dh) shift
// applied to `pattern`. Returns the shift when one exists.
std::optional<Grading> match_up_to_shift(const Complex& pattern, const Complex& x);

// Same generators (ignoring ids), in order, with the same differential.
bool equal_up_to_ids(const Complex& x, const Complex& y);

}  // namespace khc
