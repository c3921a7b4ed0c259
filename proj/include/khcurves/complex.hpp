#pragma once

// Finite bigraded chain complexes over the algebra B.
//
// A differential entry x --a--> y must satisfy
//     q(a) + q(y) - q(x) = 0   and   h(a) + h(y) - h(x) = 1.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "khcurves/algebra.hpp"

namespace khc {

class ComplexError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Generator {
  std::string id;
  Vertex vertex = Vertex::B;
  int q = 0;
  int h = 0;

  // delta grading, q = 2(h + delta). May be a half integer.
  double delta() const { return q / 2.0 - h; }

  friend bool operator==(const Generator&, const Generator&) = default;
};

struct DiffEntry {
  std::size_t from;
  std::size_t to;
  Element label;
};

class Complex {
 public:
  Complex() = default;

  // Appends a generator and returns its index. Ids are not checked here so
  // that malformed input can still be loaded and reported by validate().
  std::size_t add_generator(Generator g);

  // Adds `label` (over F2) to the entry from -> to. A zero sum removes it.
  void add_entry(std::size_t from, std::size_t to, const Element& label);
  void add_entry(const std::string& from, const std::string& to, const Element& label);

  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }
  const std::vector<Generator>& generators() const { return gens_; }
  const Generator& generator(std::size_t i) const { return gens_.at(i); }
  std::optional<std::size_t> find(const std::string& id) const;

  // Entries in (from, to) index order.
  const std::map<std::pair<std::size_t, std::size_t>, Element>& entries() const { return diff_; }
  const Element* entry(std::size_t from, std::size_t to) const;

  int min_q() const;
  int max_q() const;
  int q_span() const { return empty() ? 0 : max_q() - min_q(); }

  friend bool operator==(const Complex&, const Complex&) = default;

 private:
  std::vector<Generator> gens_;
  std::map<std::pair<std::size_t, std::size_t>, Element> diff_;
};

struct ValidationReport {
  bool ids_unique = true;
  bool endpoints_match = true;
  bool homogeneous = true;
  bool d_squared_zero = true;
  bool reduced = true;
  std::vector<std::string> problems;

  // Reducedness is informational and does not affect validity.
  bool ok() const { return ids_unique && endpoints_match && homogeneous && d_squared_zero; }
};

ValidationReport validate_complex(const Complex& x);

// Throws ComplexError listing the problems when x is not valid.
void require_valid(const Complex& x, const std::string& what = "complex");

Complex shift_complex(const Complex& x, int dq, int dh);

// Mapping cone [q^-1 h^-1 X --H--> q^1 h^0 X].
Complex cone_h(const Complex& x);

// Cancels identity-labelled entries until none remain.
Complex gauss_reduce(const Complex& x);

// Colliding ids of y get a "'" suffix until unique.
Complex direct_sum(const Complex& x, const Complex& y);

// Connected components of the (undirected) differential graph, each as a
// sorted list of generator indices. Components are ordered by first index.
std::vector<std::vector<std::size_t>> connected_components(const Complex& x);

// Subcomplex spanned by the given generators, in the given order.
Complex restrict_to(const Complex& x, const std::vector<std::size_t>& indices);

}  // namespace khc
