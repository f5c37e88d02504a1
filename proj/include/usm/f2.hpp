#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace usm {

/// Dense vector over F2.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static BitVector from_string(std::string_view bits);

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i, bool v = true) {
    if (v) {
      words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    } else {
      words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVector& operator^=(const BitVector& o);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  bool operator==(const BitVector& o) const = default;

  bool any() const;
  bool none() const { return !any(); }
  std::size_t popcount() const;
  /// Index of the lowest set bit, or size() if none.
  std::size_t lowest() const;
  /// Parity of the bitwise AND.
  bool dot(const BitVector& o) const;
  std::vector<std::size_t> ones() const;

  /// "0110..." with bit 0 first.
  std::string to_string() const;

  std::span<const std::uint64_t> words() const { return words_; }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// A subspace of F2^n kept in reduced row echelon form: every row has a
/// distinct pivot (its lowest set bit) and no other row has a 1 there.
class RowBasis {
 public:
  explicit RowBasis(std::size_t columns = 0);

  std::size_t columns() const { return columns_; }
  std::size_t rank() const { return rows_.size(); }

  /// Adds a vector to the span; returns false if it was already contained.
  bool add(BitVector v);
  /// Adds the vector with ones exactly at the given columns (repeats cancel).
  bool add_sparse(std::span<const std::size_t> ones);

  /// Reduces v against the basis. The result is zero iff v is in the span.
  BitVector reduce(BitVector v) const;
  bool contains(const BitVector& v) const { return reduce(v).none(); }

  /// Rows in order of increasing pivot.
  std::vector<BitVector> rows() const;
  std::vector<std::size_t> pivots() const;
  /// Row with the given pivot; the pivot must exist.
  const BitVector& row_with_pivot(std::size_t pivot) const;
  bool is_pivot(std::size_t column) const { return pivot_row_[column] >= 0; }

  std::size_t memory_bytes() const;

 private:
  std::size_t columns_;
  std::vector<BitVector> rows_;
  std::vector<std::ptrdiff_t> pivot_row_;  // column -> index into rows_, or -1
};

/// Basis of the null space {x : r.x = 0 for every row r}.
std::vector<BitVector> kernel_basis(const RowBasis& rows);
/// Orthogonal complement with respect to the standard dot product.
RowBasis annihilator(const RowBasis& b);
RowBasis span_of(std::size_t columns, const std::vector<BitVector>& vectors);
RowBasis intersect(const RowBasis& u, const RowBasis& v);

}  // namespace usm
