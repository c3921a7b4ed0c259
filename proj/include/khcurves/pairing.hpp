#pragma once

// Lagrangian Floer homology of curves, computed as the homology of the
// morphism space Mor(X, Y) between their complexes, plus the intersection
// count predicted by slopes and the basepoint action.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "khcurves/complex.hpp"
#include "khcurves/curve.hpp"

namespace khc {

class PairingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mor homology did not stabilize, which happens for homotopic curves.
class NonStabilizing : public PairingError {
 public:
  using PairingError::PairingError;
};

class UnsupportedPairing : public PairingError {
 public:
  using PairingError::PairingError;
};

// A basis morphism src --word--> tgt, src in X and tgt in Y.
struct MorTerm {
  std::size_t src;
  std::size_t tgt;
  Word word;

  auto operator<=>(const MorTerm&) const = default;
};

// F2 combination of basis morphisms, sorted and duplicate free.
using MorChain = std::vector<MorTerm>;

MorChain& add_term(MorChain& chain, const MorTerm& t);
MorChain operator+(const MorChain& a, const MorChain& b);

Grading mor_grading(const Complex& x, const Complex& y, const MorTerm& t);

// d(f) = d_Y o f + f o d_X (no signs over F2), computed exactly.
MorChain mor_differential(const Complex& x, const Complex& y, const MorChain& f);

struct MorGenerator {
  MorTerm term;
  int q;
  int h;
};

// The morphism space truncated to words of weight -q(word) <= cap.
// Longer words span a subcomplex, so the truncation is a quotient complex.
struct MorComplex {
  int cap = 0;
  bool truncated = false;  // some differential left the cap
  std::vector<MorGenerator> generators;
  std::vector<std::vector<std::size_t>> boundary;  // d(generator i)
  std::map<MorTerm, std::size_t> index;
};

MorComplex build_mor_complex(const Complex& x, const Complex& y, int cap);

// Checks d^2 = 0 on every generator of a built Mor complex.
bool mor_d_squared_zero(const MorComplex& m);

struct BigradedDims {
  std::map<std::pair<int, int>, int> ranks;  // (q, h) -> rank, ranks > 0

  int total() const;
  friend bool operator==(const BigradedDims&, const BigradedDims&) = default;
};

struct MorHomologyResult {
  BigradedDims dims;
  BigradedDims dims_high;  // ranks at cap N0 + 4 over its own exact range
  int cap_low = 0;   // N0
  int cap_high = 0;  // N0 + 4
  int q_top = 0;     // largest possible morphism q grading
  int q_floor = 0;   // q_top - N0 + 1; all homology lies at q >= q_floor
};

// Stabilized bigraded homology of Mor(X, Y). Throws NonStabilizing when
// homology appears below the window, i.e. for homotopic inputs.
// `cap` overrides N0 when given.
MorHomologyResult mor_homology_detailed(const Complex& x, const Complex& y,
                                        std::optional<int> cap = std::nullopt);
BigradedDims mor_homology(const Complex& x, const Complex& y, std::optional<int> cap = std::nullopt);

// Intersection count of an arc with a curve component, from slopes alone.
std::int64_t geometric_dim(const CurveComponent& arc, const CurveComponent& g);

// Multiplies every word of f by D.
MorChain basepoint_action(const MorChain& f);

struct TorsionWitness {
  MorChain cls;
  MorChain nullhomotopy;  // d(nullhomotopy) = basepoint_action(cls)
  Grading bidegree;
  bool has_identity_term = false;
};

struct TorsionReport {
  std::optional<TorsionWitness> witness;
  int action_rank = 0;
  int total_dim = 0;
  bool action_squares_to_zero = true;
  // rank = dim / 2, i.e. homology is free over F[x]/(x^2)
  bool free() const { return 2 * action_rank == total_dim; }
};

// Looks for a homology class killed by the basepoint action but not in its
// image. The returned witness is certified: the nullhomotopy is checked
// exactly and the class is checked against the image of the action.
TorsionReport torsion_witness(const Complex& x, const Complex& y);

}  // namespace khc
