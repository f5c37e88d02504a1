#include "usm/f2.hpp"

#include <algorithm>
#include <bit>

#include "usm/error.hpp"

namespace usm {

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw UsageError("bit string may only contain 0 and 1");
    }
  }
  return v;
}

BitVector& BitVector::operator^=(const BitVector& o) {
  if (o.size_ != size_) throw InvariantError("bit vector size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

bool BitVector::any() const {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BitVector::popcount() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t BitVector::lowest() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
  }
  return size_;
}

bool BitVector::dot(const BitVector& o) const {
  if (o.size_ != size_) throw InvariantError("bit vector size mismatch");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & o.words_[i];
  return std::popcount(acc) & 1;
}

std::vector<std::size_t> BitVector::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (std::uint64_t w = words_[i]; w; w &= w - 1) {
      out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
    }
  }
  return out;
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

RowBasis::RowBasis(std::size_t columns) : columns_(columns), pivot_row_(columns, -1) {}

BitVector RowBasis::reduce(BitVector v) const {
  if (v.size() != columns_) throw InvariantError("vector does not match basis width");
  // rows are fully reduced, so xoring a row never creates a 1 at another pivot
  for (std::size_t c : v.ones()) {
    if (pivot_row_[c] >= 0) v ^= rows_[static_cast<std::size_t>(pivot_row_[c])];
  }
  return v;
}

bool RowBasis::add(BitVector v) {
  v = reduce(std::move(v));
  std::size_t p = v.lowest();
  if (p == columns_) return false;
  for (auto& r : rows_) {
    if (r.get(p)) r ^= v;
  }
  pivot_row_[p] = static_cast<std::ptrdiff_t>(rows_.size());
  rows_.push_back(std::move(v));
  return true;
}

bool RowBasis::add_sparse(std::span<const std::size_t> ones) {
  BitVector v(columns_);
  for (std::size_t c : ones) v.flip(c);
  return add(std::move(v));
}

std::vector<std::size_t> RowBasis::pivots() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < columns_; ++c) {
    if (pivot_row_[c] >= 0) out.push_back(c);
  }
  return out;
}

std::vector<BitVector> RowBasis::rows() const {
  std::vector<BitVector> out;
  for (std::size_t c : pivots()) out.push_back(rows_[static_cast<std::size_t>(pivot_row_[c])]);
  return out;
}

const BitVector& RowBasis::row_with_pivot(std::size_t pivot) const {
  if (pivot >= columns_ || pivot_row_[pivot] < 0) throw InvariantError("no row with that pivot");
  return rows_[static_cast<std::size_t>(pivot_row_[pivot])];
}

std::size_t RowBasis::memory_bytes() const {
  return rows_.size() * ((columns_ + 63) / 64) * 8 + pivot_row_.size() * sizeof(std::ptrdiff_t);
}

std::vector<BitVector> kernel_basis(const RowBasis& rows) {
  const std::size_t n = rows.columns();
  auto pivots = rows.pivots();
  std::vector<BitVector> out;
  for (std::size_t f = 0; f < n; ++f) {
    if (rows.is_pivot(f)) continue;
    BitVector x(n);
    x.set(f);
    for (std::size_t p : pivots) {
      if (rows.row_with_pivot(p).get(f)) x.set(p);
    }
    out.push_back(std::move(x));
  }
  return out;
}

RowBasis span_of(std::size_t columns, const std::vector<BitVector>& vectors) {
  RowBasis b(columns);
  for (const auto& v : vectors) b.add(v);
  return b;
}

RowBasis annihilator(const RowBasis& b) { return span_of(b.columns(), kernel_basis(b)); }

RowBasis intersect(const RowBasis& u, const RowBasis& v) {
  if (u.columns() != v.columns()) throw InvariantError("subspaces live in different spaces");
  RowBasis sum = annihilator(u);
  for (const auto& r : annihilator(v).rows()) sum.add(r);
  return annihilator(sum);
}

}  // namespace usm
