#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "usm/group.hpp"

namespace usm {

/// Result of enumerating the cosets of the trivial subgroup: a complete,
/// standardized right Cayley graph on `size` cosets (coset 0 is the identity).
struct CosetTable {
  std::size_t size = 0;
  std::size_t generator_count = 0;
  std::vector<std::uint32_t> graph;  // graph[c * generator_count + i] = c . gen_i
  std::size_t max_live = 0;          // peak number of simultaneously live cosets
  std::size_t defined = 0;           // total cosets ever defined
};

/// Hasselgrove-Leech-Trotter enumeration with relators scanned in their
/// given order. Dead cosets are compacted away whenever the table fills up;
/// ResourceError is thrown when `coset_limit` live cosets do not suffice.
CosetTable enumerate_cosets(const Presentation& p, std::size_t coset_limit);

}  // namespace usm
