#pragma once

// Random complexes for property tests: direct sums of compiled pieces with
// random shifts, padded with contractible Id pairs and scrambled by
// grading-preserving changes of basis.

#include <random>
#include <string>
#include <vector>

#include "khcurves/complex.hpp"
#include "khcurves/curve.hpp"

namespace khc::testing {

inline Complex compiled(const std::string& name) { return compile(parse_family_name(name)).complex; }

inline int uniform(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

template <typename T>
const T& pick(std::mt19937& rng, const std::vector<T>& v) {
  return v[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(v.size()) - 1))];
}

// [v^{q,h} --Id--> v^{q,h+1}], contractible.
inline Complex id_pair(Vertex v, int q, int h) {
  Complex x;
  x.add_generator({"u", v, q, h});
  x.add_generator({"w", v, q, h + 1});
  x.add_entry(0, 1, Element::identity(v));
  return x;
}

// Conjugates d by I + E, where E is the single entry j -> i labelled a.
// Since E^2 = 0 this is an isomorphism of complexes.
inline Complex conjugate(const Complex& x, std::size_t j, std::size_t i, const Element& a) {
  Complex out;
  for (const auto& g : x.generators()) out.add_generator(g);
  for (const auto& [key, label] : x.entries()) out.add_entry(key.first, key.second, label);
  for (const auto& [key, label] : x.entries()) {
    if (key.first == i) out.add_entry(j, key.second, a * label);
    if (key.second == j) out.add_entry(key.first, i, label * a);
  }
  if (const Element* back = x.entry(i, j)) out.add_entry(j, i, a * *back * a);
  return out;
}

// One random grading-preserving basis change, or x itself when no pair of
// generators admits one.
inline Complex random_basis_change(std::mt19937& rng, const Complex& x) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < x.size(); ++j)
    for (std::size_t i = 0; i < x.size(); ++i)
      if (i != j && x.generator(i).h == x.generator(j).h && x.generator(i).q >= x.generator(j).q) pairs.push_back({j, i});
  if (pairs.empty()) return x;
  const auto [j, i] = pick(rng, pairs);
  const Vertex vj = x.generator(j).vertex;
  const Vertex vi = x.generator(i).vertex;
  const int w = x.generator(i).q - x.generator(j).q;  // weight of the label
  std::vector<Element> choices;
  if (vj == vi) {
    if (w == 0) choices.push_back(Element::identity(vj));
    if (w > 0 && w % 2 == 0) {
      choices.push_back(Element(Word::d_power(vj, w / 2)));
      choices.push_back(Element(Word::s_power(vj, w)));
      choices.push_back(Word::d_power(vj, w / 2) + Element(Word::s_power(vj, w)));
    }
  } else if (w % 2 == 1) {
    choices.push_back(Element(Word::s_power(vj, w)));
  }
  if (choices.empty()) return x;
  return conjugate(x, j, i, pick(rng, choices));
}

inline Complex shifted(std::mt19937& rng, const Complex& x) {
  return shift_complex(x, uniform(rng, -6, 6), uniform(rng, -3, 3));
}

// Pieces whose reduced form has no C generator.
inline const std::vector<std::string>& split_pieces() {
  static const std::vector<std::string> v = {"a0", "e1", "e2", "e3", "r1-0"};
  return v;
}

// Pieces containing a C generator that no reduction removes.
inline const std::vector<std::string>& nonsplit_pieces() {
  static const std::vector<std::string> v = {"a-inf",          "r1-inf",         "alpha-plus",    "alpha-minus",
                                             "alpha-plus-n1",  "alpha-minus-n2", "alpha-plus-n3", "alpha-half-n-2",
                                             "alpha-half-n1",  "bn-q13"};
  return v;
}

// A valid complex that is split exactly when `split` is true, in general
// not reduced.
inline Complex random_fixture(std::mt19937& rng, bool split) {
  Complex x = shifted(rng, compiled(pick(rng, split ? split_pieces() : nonsplit_pieces())));
  const int extra = uniform(rng, 0, 2);
  for (int k = 0; k < extra; ++k) x = direct_sum(x, shifted(rng, compiled(pick(rng, split_pieces()))));
  if (!split && uniform(rng, 0, 1)) x = direct_sum(x, shifted(rng, compiled(pick(rng, nonsplit_pieces()))));
  const int pairs = uniform(rng, 0, 2);
  for (int k = 0; k < pairs; ++k) {
    // a contractible C pair keeps a split complex split
    const Vertex v = uniform(rng, 0, 1) ? Vertex::C : Vertex::B;
    const Generator& g = x.generator(static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(x.size()) - 1)));
    x = direct_sum(x, id_pair(v, g.q + uniform(rng, -2, 2), g.h + uniform(rng, -1, 0)));
  }
  const int changes = uniform(rng, 0, 6);
  for (int k = 0; k < changes; ++k) x = random_basis_change(rng, x);
  return x;
}

// Compact pieces (closed curves), so that pairing against a_0 or a_inf is
// finite. Arcs would share an end with one of them.
inline const std::vector<Complex>& compact_pieces() {
  static const std::vector<Complex> v = {
      compiled("e1"),
      compiled("e2"),
      compiled("r1-0"),
      compiled("r1-inf"),
      cone_h(compiled("alpha-plus")),
      cone_h(compiled("alpha-minus")),
      cone_h(compiled("alpha-plus-n1")),
      cone_h(compiled("alpha-minus-n2")),
      cone_h(compiled("bn-q13")),
  };
  return v;
}

inline Complex random_pairing_fixture(std::mt19937& rng) {
  Complex x = shifted(rng, pick(rng, compact_pieces()));
  if (uniform(rng, 0, 1)) x = direct_sum(x, shifted(rng, pick(rng, compact_pieces())));
  const int pairs = uniform(rng, 1, 2);
  for (int k = 0; k < pairs; ++k) {
    const Vertex v = uniform(rng, 0, 1) ? Vertex::C : Vertex::B;
    const Generator& g = x.generator(static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(x.size()) - 1)));
    x = direct_sum(x, id_pair(v, g.q + uniform(rng, -2, 2), g.h + uniform(rng, -1, 0)));
  }
  const int changes = uniform(rng, 2, 8);
  for (int k = 0; k < changes; ++k) x = random_basis_change(rng, x);
  return x;
}

}  // namespace khc::testing
