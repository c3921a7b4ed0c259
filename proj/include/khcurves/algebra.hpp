#pragma once

// The two-object quiver algebra B over F2.
//
// Objects are the crossingless tangles, written B (drawn as a filled dot) and
// C (an open dot). Arrows are the loops D at each object and the arrows S
// between them, subject to D.S = 0 = S.D. The canonical F2 basis of the
// morphisms from v to w is therefore
//
//     v == w :  Id, D^k (k >= 1), S^m (m >= 2 even)
//     v != w :  S^m (m odd)
//
// Composition is written left to right: a * b means "a, then b".

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace khc {

enum class Vertex : std::uint8_t { B, C };

enum class WordKind : std::uint8_t { Id, D, S };

char vertex_char(Vertex v);
Vertex other(Vertex v);

class AlgebraError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when two morphisms are composed whose endpoints do not match.
class CompositionMismatch : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

struct Grading {
  int q = 0;
  int h = 0;
  auto operator<=>(const Grading&) const = default;
};

class Word {
 public:
  static Word identity(Vertex v);
  static Word d_power(Vertex v, int k);
  // The endpoint `to` is forced by the parity of m.
  static Word s_power(Vertex from, int m);
  // Checked constructor for deserialized data.
  static Word make(Vertex from, Vertex to, WordKind kind, int power);

  Vertex from() const { return from_; }
  Vertex to() const { return to_; }
  WordKind kind() const { return kind_; }
  // 0 for Id.
  int power() const { return power_; }

  Grading grading() const;
  bool is_identity() const { return kind_ == WordKind::Id; }

  std::string to_string() const;

  auto operator<=>(const Word&) const = default;

 private:
  Word(Vertex from, Vertex to, WordKind kind, int power)
      : from_(from), to_(to), kind_(kind), power_(power) {}

  Vertex from_;
  Vertex to_;
  WordKind kind_;
  int power_;
};

inline Grading grading_of(const Word& w) { return w.grading(); }

// An F2 linear combination of words sharing one pair of endpoints. The word
// list is kept sorted and duplicate free, so equality is structural.
class Element {
 public:
  Element(Vertex from, Vertex to) : from_(from), to_(to) {}
  Element(const Word& w);  // NOLINT(google-explicit-constructor)

  static Element zero(Vertex from, Vertex to) { return Element(from, to); }
  static Element identity(Vertex v) { return Element(Word::identity(v)); }

  Vertex from() const { return from_; }
  Vertex to() const { return to_; }
  const std::vector<Word>& words() const { return words_; }

  bool is_zero() const { return words_.empty(); }
  bool contains_identity() const;
  bool is_identity() const;

  // Adds one word over F2 (toggles its presence).
  Element& add(const Word& w);
  Element& operator+=(const Element& other);

  std::string to_string() const;

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend bool operator==(const Element&, const Element&) = default;

 private:
  Vertex from_;
  Vertex to_;
  std::vector<Word> words_;
};

// Product of two basis words, "a then b".
Element word_compose(const Word& a, const Word& b);

// Bilinear extension of word_compose.
Element element_mul(const Element& a, const Element& b);
inline Element operator*(const Element& a, const Element& b) { return element_mul(a, b); }

// H^k = (D + S^2)^k at vertex v, computed as {D^k, S^2k}.
Element central_h(Vertex v, int k = 1);

// Whether H.a == a.H, with H taken at the source and target of a.
bool central_commutes(const Element& a);

}  // namespace khc
