#include "khcurves/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace khc {

char vertex_char(Vertex v) { return v == Vertex::B ? 'b' : 'c'; }

Vertex other(Vertex v) { return v == Vertex::B ? Vertex::C : Vertex::B; }

Word Word::identity(Vertex v) { return Word(v, v, WordKind::Id, 0); }

Word Word::d_power(Vertex v, int k) {
  if (k < 1) throw AlgebraError("D power must be positive, got " + std::to_string(k));
  return Word(v, v, WordKind::D, k);
}

Word Word::s_power(Vertex from, int m) {
  if (m < 1) throw AlgebraError("S power must be positive, got " + std::to_string(m));
  return Word(from, m % 2 == 0 ? from : other(from), WordKind::S, m);
}

Word Word::make(Vertex from, Vertex to, WordKind kind, int power) {
  switch (kind) {
    case WordKind::Id:
      if (from != to) throw AlgebraError("identity word needs equal endpoints");
      return identity(from);
    case WordKind::D:
      if (from != to) throw AlgebraError("D word needs equal endpoints");
      return d_power(from, power);
    case WordKind::S: {
      Word w = s_power(from, power);
      if (w.to() != to)
        throw AlgebraError("S^" + std::to_string(power) + " cannot go from " +
                           vertex_char(from) + " to " + vertex_char(to));
      return w;
    }
  }
  throw AlgebraError("unknown word kind");
}

Grading Word::grading() const {
  switch (kind_) {
    case WordKind::Id: return {0, 0};
    case WordKind::D: return {-2 * power_, 0};
    case WordKind::S: return {-power_, 0};
  }
  return {};
}

std::string Word::to_string() const {
  std::ostringstream os;
  switch (kind_) {
    case WordKind::Id: os << "id"; break;
    case WordKind::D: os << 'D'; break;
    case WordKind::S: os << 'S'; break;
  }
  if (kind_ != WordKind::Id && power_ != 1) os << '^' << power_;
  os << '[' << vertex_char(from_) << vertex_char(to_) << ']';
  return os.str();
}

Element::Element(const Word& w) : from_(w.from()), to_(w.to()), words_{w} {}

bool Element::contains_identity() const {
  return std::any_of(words_.begin(), words_.end(), [](const Word& w) { return w.is_identity(); });
}

bool Element::is_identity() const { return words_.size() == 1 && words_.front().is_identity(); }

Element& Element::add(const Word& w) {
  if (w.from() != from_ || w.to() != to_)
    throw CompositionMismatch("word " + w.to_string() + " does not match element endpoints " +
                              vertex_char(from_) + vertex_char(to_));
  auto it = std::lower_bound(words_.begin(), words_.end(), w);
  if (it != words_.end() && *it == w)
    words_.erase(it);
  else
    words_.insert(it, w);
  return *this;
}

Element& Element::operator+=(const Element& other) {
  if (other.from_ != from_ || other.to_ != to_)
    throw CompositionMismatch("cannot add elements with different endpoints");
  for (const Word& w : other.words_) add(w);
  return *this;
}

std::string Element::to_string() const {
  if (words_.empty()) return "0";
  std::string out;
  for (const Word& w : words_) {
    if (!out.empty()) out += " + ";
    out += w.to_string();
  }
  return out;
}

Element word_compose(const Word& a, const Word& b) {
  if (a.to() != b.from())
    throw CompositionMismatch("cannot compose " + a.to_string() + " then " + b.to_string());
  if (a.is_identity()) return Element(b);
  if (b.is_identity()) return Element(a);
  if (a.kind() != b.kind()) return Element::zero(a.from(), b.to());
  if (a.kind() == WordKind::D) return Element(Word::d_power(a.from(), a.power() + b.power()));
  return Element(Word::s_power(a.from(), a.power() + b.power()));
}

Element element_mul(const Element& a, const Element& b) {
  if (a.to() != b.from())
    throw CompositionMismatch(std::string("cannot multiply elements ") + vertex_char(a.from()) +
                              vertex_char(a.to()) + " and " + vertex_char(b.from()) +
                              vertex_char(b.to()));
  Element out(a.from(), b.to());
  for (const Word& x : a.words())
    for (const Word& y : b.words()) out += word_compose(x, y);
  return out;
}

Element central_h(Vertex v, int k) {
  if (k < 0) throw AlgebraError("negative power of H");
  Element h1(v, v);
  h1.add(Word::d_power(v, 1)).add(Word::s_power(v, 2));
  Element out = Element::identity(v);
  for (int i = 0; i < k; ++i) out = out * h1;
  return out;
}

bool central_commutes(const Element& a) {
  return central_h(a.from()) * a == a * central_h(a.to());
}

}  // namespace khc
