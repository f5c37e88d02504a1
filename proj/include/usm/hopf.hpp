#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "usm/group.hpp"

namespace usm {

/// F0 = F/[F,R]R^2 for a presentation <X | R> of G, together with F0 -> G.
struct SquareCover {
  Presentation base_presentation;
  Presentation cover_presentation;  // <X | r^2, [x, r]>
  GroupPtr base;
  GroupPtr cover;
  GroupHom projection;
  std::vector<Elem> kernel_r0;  // R0 = ker(projection), as elements of cover
};

/// Enumerates F0 and checks that R0 is central of exponent 2 and |R0| <= 2^|R|.
SquareCover square_cover(const Presentation& p, std::size_t coset_limit = std::size_t{1} << 20);

struct HopfMultiplier {
  std::size_t dim = 0;
  std::size_t cover_order = 0;
  std::size_t r0_order = 0;
  std::vector<Word> generators;  // words in X whose images form a basis of S(F0) n R0
  /// Dimension of the span of lifted [x,y] ([x,y]=1), {x,y} ({x,y}=1) and z^2 (z^2=1, z!=1),
  /// so that dim B0(G;Z2) = dim - surface_dim without any cocycle.
  std::size_t surface_dim = 0;
};

/// M(G;Z2) as S(F0) n R0.
HopfMultiplier hopf_multiplier(const SquareCover& cover);
HopfMultiplier hopf_multiplier(const Presentation& p, std::size_t coset_limit = std::size_t{1} << 20);

}  // namespace usm
