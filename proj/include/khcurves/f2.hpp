#pragma once

// Dense linear algebra over F2 on bit-packed vectors.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace khc::f2 {

class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool get(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i) { w_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void flip(std::size_t i) { w_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  BitVec& operator^=(const BitVec& o);
  bool any() const;
  std::optional<std::size_t> lowest() const;
  std::vector<std::size_t> ones() const;

  friend bool operator==(const BitVec&, const BitVec&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

// A subspace built by inserting vectors one at a time. Each stored basis
// vector remembers which inserted vectors it is the sum of, so membership
// tests also produce an explicit combination.
class Span {
 public:
  explicit Span(std::size_t dim) : dim_(dim) {}

  // Returns true when v was independent of the span so far. Inserted vectors
  // are numbered 0, 1, ... in call order, independent or not.
  bool insert(const BitVec& v);

  // Residual of v after reduction, and the inserted vectors used.
  struct Reduction {
    BitVec residual;
    std::vector<std::size_t> combination;
  };
  Reduction reduce(const BitVec& v) const;
  bool contains(const BitVec& v) const { return !reduce(v).residual.any(); }

  std::size_t rank() const { return rows_.size(); }
  std::size_t inserted() const { return inserted_; }

 private:
  struct Row {
    BitVec vec;
    BitVec combo;
    std::size_t pivot;
  };
  std::size_t dim_;
  std::size_t inserted_ = 0;
  std::vector<Row> rows_;
};

// Rank of the column set.
std::size_t rank(const std::vector<BitVec>& columns, std::size_t dim);

// Basis of {c : sum_i c_i columns[i] = 0}, as vectors of length columns.size().
std::vector<BitVec> kernel(const std::vector<BitVec>& columns, std::size_t dim);

}  // namespace khc::f2
