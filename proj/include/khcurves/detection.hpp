#pragma once

// Split, rational and connectivity detection, the cosmetic surgery scan for
// the slope pairs {+2, -2} and {1/n, -1/n}, the cosmetic crossing report for
// the family T(1/2n), and the split closure test.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "khcurves/complex.hpp"
#include "khcurves/curve.hpp"

namespace khc {

struct SplitVerdict {
  bool split = false;
  std::vector<std::string> c_generators;  // ids of C generators after reduction
  std::vector<std::string> components;    // recognized family names when split
};

SplitVerdict detect_split(const Complex& x);

bool detect_rational(const Multicurve& c);

// Which pairs of tangle ends are connected. NoCrossing is the connectivity in
// which the two lower ends are joined (the 0-closure is a 2-component link).
enum class Connectivity { NoCrossing, Other };

std::string connectivity_name(Connectivity c);
Connectivity parse_connectivity(const std::string& s);

struct ConnectivityViolation {
  std::size_t component;
  std::string description;
};

std::vector<ConnectivityViolation> connectivity_check(Connectivity conn, const Multicurve& c);

// --- cosmetic surgery scan ------------------------------------------------

struct DimPair {
  std::int64_t plus = 0;
  std::int64_t minus = 0;
};

struct SlopePairVerdict {
  std::string pair;          // "+2/-2" or "1/n,-1/n"
  std::int64_t n = 0;        // 0 for case 1
  DimPair rational_dims;     // HF(alpha_+-, rho)
  DimPair total_dims;        // including the special components
  std::vector<int> q_shifts; // q(x_-) - q(x_+) on the special components
  std::string distinguished_by;  // "dimension" or "quantum grading"
};

struct EcscReport {
  bool applicable = false;
  std::string reason;
  std::int64_t rational_slope = 0;  // s
  int special_count = 0;            // m
  std::optional<SlopePairVerdict> case1;
  std::vector<SlopePairVerdict> case2;  // n = 1 .. n_max

  bool all_distinguished() const;
};

EcscReport ecsc_scan(const Multicurve& c, int n_max = 8);

// --- asymptotic cosmetic crossing report -----------------------------------

enum class AgcccBranch { HorizontallySplit, AllZeroWithSpecial, NonzeroSlope, Inapplicable };

std::string agccc_branch_name(AgcccBranch b);

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

struct AgcccReport {
  AgcccBranch branch = AgcccBranch::Inapplicable;
  std::string reason;
  Fraction M;
  std::int64_t N = 0;
  std::map<int, std::int64_t> dims;       // n -> dim Kh(K_n), NonzeroSlope branch
  std::map<int, int> special_q_shift;     // n -> 4n, AllZeroWithSpecial branch
  bool monotone = false;                  // strict monotonicity beyond +-M holds on the table
  bool separated_by_dimension = false;    // the two tails never share a dimension
  std::optional<int> q_lower_bound;       // mu - 1 when mu is supplied
  std::vector<ConnectivityViolation> connectivity_warnings;
};

// `mu` is the minimal quantum grading of a generator of the Kh-type complex,
// when such a complex is known.
AgcccReport agccc_report(const Multicurve& c, int n_max = 8, std::optional<int> mu = std::nullopt);

// --- split closure --------------------------------------------------------

enum class ClosureVerdict { NecessaryViolated, SufficientHolds, Inconclusive };

std::string closure_verdict_name(ClosureVerdict v);

ClosureVerdict split_closure_analysis(const Multicurve& c);

}  // namespace khc
