#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "usm/f2.hpp"
#include "usm/group.hpp"

namespace usm {

/// Normalized F2-valued 2-cochain. Bit (g-1)(n-1)+(h-1) holds omega(g,h) for
/// g,h != 1; values with an identity argument are zero by construction.
struct Cochain2 {
  GroupPtr group;
  BitVector values;

  static Cochain2 zero(GroupPtr g);
  static std::size_t index(std::size_t order, Elem g, Elem h) {
    return static_cast<std::size_t>(g - 1) * (order - 1) + (h - 1);
  }

  bool operator()(Elem g, Elem h) const {
    return g != kIdentity && h != kIdentity && values.get(index(group->order(), g, h));
  }
  void set(Elem g, Elem h, bool v);
  Cochain2& operator^=(const Cochain2& o);
};

struct CohomologyLimits {
  std::size_t max_order = 256;
};

/// Cocycles, coboundaries and echelon-reduced H2 representatives.
struct CocycleBasis {
  GroupPtr group;
  RowBasis z2;
  RowBasis b2;
  std::vector<Cochain2> h2_reps;
  std::vector<std::size_t> rep_pivots;  // pivot column of each representative

  std::size_t dim() const { return h2_reps.size(); }

  /// Coordinates of the class of a cocycle over h2_reps. Throws
  /// InvariantError if omega is not a cocycle.
  BitVector coordinates(const Cochain2& omega) const;
  bool is_coboundary(const Cochain2& omega) const;
  /// Sum of the representatives selected by `coeffs`.
  Cochain2 combination(const BitVector& coeffs) const;
};

/// omega(g,h) + omega(gh,k) + omega(g,hk) + omega(h,k) = 0 on every triple
/// (exhaustive up to order 64, `samples` random triples above).
bool is_cocycle(const Cochain2& omega, std::size_t samples = 1000, std::uint64_t seed = 0);

/// d(phi)(g,h) = phi(g) + phi(h) + phi(gh); phi has one bit per non-identity element.
Cochain2 coboundary(GroupPtr g, const BitVector& phi);

/// Streams the bar-complex cocycle conditions up to order 64; above that
/// solves for the values omega(g,s) on a generating set and expands.
RowBasis cocycle_space(GroupPtr g, const CohomologyLimits& limits = {});
RowBasis coboundary_space(GroupPtr g, const CohomologyLimits& limits = {});
CocycleBasis h2(GroupPtr g, const CohomologyLimits& limits = {});

/// Pullback along an injective homomorphism A -> G.
Cochain2 restrict(const Cochain2& omega, const GroupHom& incl);

/// Row i holds the coordinates in `sub` of the restriction of representative i of `ambient`.
std::vector<BitVector> restriction_matrix(const CocycleBasis& ambient, const CocycleBasis& sub,
                                          const GroupHom& incl);

/// A 2-cycle of the normalized bar complex, as a mod-2 set of simplices [g|h].
struct SurfaceCycle {
  GroupPtr group;
  std::vector<std::pair<Elem, Elem>> simplices;
};

/// Boundary word of a polygon whose edges are glued in pairs: `word` runs
/// over edge variables (token i+1 or -(i+1)) and `values[i]` is the
/// monodromy carried by edge i.
struct SurfaceRelator {
  Word word;
  std::vector<Elem> values;

  std::vector<Elem> letters(const FiniteGroup& g) const;
};

SurfaceRelator torus_relator(Elem x, Elem y);          // x y x^-1 y^-1
SurfaceRelator klein_relator(Elem x, Elem y);          // x y x^-1 y
SurfaceRelator projective_relator(Elem z);             // z z

/// Fan chain sum [p_i | g_(i+1)] of the relator letters plus one correction
/// [v | v^-1] for every inverse occurrence of an edge with value v. Throws
/// UsageError if the letters do not multiply to 1 or the boundary is nonzero.
SurfaceCycle surface_cycle(GroupPtr g, const SurfaceRelator& relator);
bool has_zero_boundary(const SurfaceCycle& c);
bool eval(const Cochain2& omega, const SurfaceCycle& c);

namespace detail {
RowBasis cocycles_by_full_system(const FiniteGroup& g);
RowBasis cocycles_by_generators(const FiniteGroup& g);
}  // namespace detail

}  // namespace usm
