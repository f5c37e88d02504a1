#include <random>

#include "doctest.h"
#include "usm/error.hpp"
#include "usm/f2.hpp"

using namespace usm;

namespace {

BitVector unit(std::size_t n, std::size_t i) {
  BitVector v(n);
  v.set(i);
  return v;
}

BitVector random_vector(std::size_t n, std::mt19937_64& rng) {
  BitVector v(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rng() & 1) v.set(i);
  }
  return v;
}

BitVector from_mask(std::size_t n, std::uint32_t mask) {
  BitVector v(n);
  for (std::size_t i = 0; i < n; ++i) {
    if ((mask >> i) & 1) v.set(i);
  }
  return v;
}

}  // namespace

TEST_CASE("bit vector basics") {
  BitVector v(130);
  v.set(0);
  v.set(64);
  v.set(129);
  CHECK(v.popcount() == 3);
  CHECK(v.lowest() == 0);
  CHECK(v.ones() == std::vector<std::size_t>{0, 64, 129});
  CHECK((v ^ v).none());
  CHECK(BitVector::from_string(v.to_string()) == v);
  CHECK(v.dot(v) == true);
  CHECK_THROWS_AS(v ^= BitVector(3), InvariantError);
  CHECK_THROWS_AS(BitVector::from_string("012"), UsageError);
}

TEST_CASE("row basis absorption and rank") {
  RowBasis b(4);
  CHECK(b.add(unit(4, 1)));
  CHECK_FALSE(b.add(unit(4, 1)));
  CHECK(b.add(unit(4, 2)));
  CHECK_FALSE(b.add(unit(4, 1) ^ unit(4, 2)));
  CHECK(b.rank() == 2);
  CHECK(b.pivots() == std::vector<std::size_t>{1, 2});
  CHECK_THROWS_AS(b.add(BitVector(5)), InvariantError);
}

TEST_CASE("echelon form is independent of insertion order") {
  std::mt19937_64 rng(7);
  std::vector<BitVector> vs;
  for (int i = 0; i < 12; ++i) vs.push_back(random_vector(40, rng));
  RowBasis a = span_of(40, vs);
  std::reverse(vs.begin(), vs.end());
  RowBasis b = span_of(40, vs);
  CHECK(a.rows() == b.rows());
}

TEST_CASE("kernel basis") {
  CHECK(kernel_basis(RowBasis(5)).size() == 5);
  RowBasis id(4);
  for (std::size_t i = 0; i < 4; ++i) id.add(unit(4, i));
  CHECK(kernel_basis(id).empty());

  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    // 20 x 30 matrix of rank at most 12
    std::vector<BitVector> gens;
    for (int i = 0; i < 12; ++i) gens.push_back(random_vector(30, rng));
    std::vector<BitVector> rows;
    for (int i = 0; i < 20; ++i) {
      BitVector r(30);
      for (const auto& g : gens) {
        if (rng() & 1) r ^= g;
      }
      rows.push_back(r);
    }
    RowBasis m = span_of(30, rows);
    auto ker = kernel_basis(m);
    CHECK(ker.size() + m.rank() == 30);
    for (const auto& x : ker)
      for (const auto& r : rows) CHECK_FALSE(r.dot(x));
  }
}

TEST_CASE("intersection against an exhaustive scan of F2^10") {
  CHECK(intersect(span_of(4, {unit(4, 1), unit(4, 2)}), span_of(4, {unit(4, 2), unit(4, 3)})).rows() ==
        std::vector<BitVector>{unit(4, 2)});
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<RowBasis> spaces;
    for (int s = 0; s < 3; ++s) {
      std::vector<BitVector> vs;
      std::size_t count = 4 + rng() % 5;
      for (std::size_t i = 0; i < count; ++i) vs.push_back(random_vector(10, rng));
      spaces.push_back(span_of(10, vs));
    }
    RowBasis cap = intersect(intersect(spaces[0], spaces[1]), spaces[2]);
    std::size_t members = 0;
    for (std::uint32_t m = 0; m < 1024; ++m) {
      BitVector v = from_mask(10, m);
      bool in_all = spaces[0].contains(v) && spaces[1].contains(v) && spaces[2].contains(v);
      if (in_all) ++members;
      CHECK(cap.contains(v) == in_all);
    }
    CHECK(members == (std::size_t{1} << cap.rank()));
    CHECK(intersect(spaces[0], spaces[0]).rank() == spaces[0].rank());
  }
}
