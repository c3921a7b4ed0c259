#include "khcurves/f2.hpp"

#include <bit>
#include <stdexcept>

namespace khc::f2 {

BitVec& BitVec::operator^=(const BitVec& o) {
  if (o.n_ != n_) throw std::invalid_argument("F2 vector length mismatch");
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
  return *this;
}

bool BitVec::any() const {
  for (auto w : w_)
    if (w != 0) return true;
  return false;
}

std::optional<std::size_t> BitVec::lowest() const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(w_[i]));
  return std::nullopt;
}

std::vector<std::size_t> BitVec::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    std::uint64_t w = w_[i];
    while (w != 0) {
      out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

Span::Reduction Span::reduce(const BitVec& v) const {
  Reduction r{v, {}};
  BitVec combo(inserted_);
  for (const Row& row : rows_) {
    if (r.residual.get(row.pivot)) {
      r.residual ^= row.vec;
      combo ^= row.combo;
    }
  }
  r.combination = combo.ones();
  return r;
}

bool Span::insert(const BitVec& v) {
  if (v.size() != dim_) throw std::invalid_argument("F2 vector length mismatch");
  const std::size_t index = inserted_++;
  for (Row& row : rows_) {
    // combination vectors grow with each insertion
    BitVec grown(inserted_);
    for (std::size_t i : row.combo.ones()) grown.set(i);
    row.combo = std::move(grown);
  }
  BitVec residual = v;
  BitVec combo(inserted_);
  combo.set(index);
  for (const Row& row : rows_) {
    if (residual.get(row.pivot)) {
      residual ^= row.vec;
      combo ^= row.combo;
    }
  }
  auto pivot = residual.lowest();
  if (!pivot) return false;
  // keep rows fully reduced so reduce() can run in a single pass
  for (Row& row : rows_) {
    if (row.vec.get(*pivot)) {
      row.vec ^= residual;
      row.combo ^= combo;
    }
  }
  rows_.push_back({std::move(residual), std::move(combo), *pivot});
  return true;
}

std::size_t rank(const std::vector<BitVec>& columns, std::size_t dim) {
  Span s(dim);
  for (const auto& c : columns) s.insert(c);
  return s.rank();
}

std::vector<BitVec> kernel(const std::vector<BitVec>& columns, std::size_t dim) {
  Span s(dim);
  std::vector<BitVec> out;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    auto red = s.reduce(columns[i]);
    if (!red.residual.any()) {
      BitVec k(columns.size());
      k.set(i);
      for (std::size_t j : red.combination) k.flip(j);
      out.push_back(std::move(k));
    }
    s.insert(columns[i]);
  }
  return out;
}

}  // namespace khc::f2
