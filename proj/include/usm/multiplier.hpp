#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "usm/cohomology.hpp"
#include "usm/f2.hpp"
#include "usm/extension.hpp"
#include "usm/uword.hpp"

namespace usm {

/// M(G;Z2) and B0(G;Z2) over F2. B0 is represented dually: its annihilator
/// inside H2 is the set of classes that vanish on every torus, Klein bottle and
/// projective plane cycle.
struct MultiplierReport {
  std::string group;
  std::size_t dim_h2 = 0;
  std::size_t dim_b0 = 0;            // by functionals
  std::size_t functional_rank = 0;
  std::optional<std::size_t> dim_b0_restrictions;  // set by multiplier_report
  std::optional<bool> routes_agree;
  std::vector<BitVector> annihilator_basis;  // H2 coordinates
};

nlohmann::json to_json(const MultiplierReport& r);

/// M(G;Z2) = H2(G;F2).
CocycleBasis schur_unoriented(GroupPtr g, const CohomologyLimits& limits = {});

/// Row j is eval(h2_reps[j], c): the functional of the cycle on H2 coordinates.
BitVector functional_row(const CocycleBasis& basis, const SurfaceCycle& c);

/// Span of the torus (commuting pairs), Klein (x y x^-1 y = 1) and projective
/// plane (z^2 = 1, z != 1) functionals.
RowBasis surface_functionals(const CocycleBasis& basis);

/// Span of the functionals dual to restriction to every <z> with z an involution
/// and every <x,y> for commuting or Klein pairs. Its annihilator is the
/// intersection of the restriction kernels.
RowBasis restriction_functionals(const CocycleBasis& basis);

MultiplierReport bogomolov_by_functionals(const std::string& name, const CocycleBasis& basis);
std::size_t bogomolov_by_restrictions(const CocycleBasis& basis);

/// Both routes; routes_agree compares the two functional spans, not just dimensions.
MultiplierReport multiplier_report(const std::string& name, const CocycleBasis& basis);

struct B0Class {
  bool trivial = true;
  BitVector coordinates;  // pairing with each annihilator basis class
};

/// Pairs a word of K' with the annihilator classes through extensions.
B0Class class_in_b0(const UWord& w, const CocycleBasis& basis, const MultiplierReport& report);
B0Class class_in_b0(const UWord& w, const SquareCentralExtension& probe, const MultiplierReport& report);
/// Pairs a surface cycle with the annihilator classes through eval.
B0Class class_in_b0(const SurfaceCycle& c, const CocycleBasis& basis, const MultiplierReport& report);

}  // namespace usm
