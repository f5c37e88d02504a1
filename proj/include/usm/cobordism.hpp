#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "usm/cohomology.hpp"
#include "usm/multiplier.hpp"
#include "usm/uword.hpp"

namespace usm {

enum class CobordismKind { Cylinder, Pants, Disc, Moebius };

struct ElementaryCobordism {
  CobordismKind kind = CobordismKind::Cylinder;
  Elem conjugator = kIdentity;  // cylinders only

  static ElementaryCobordism cylinder(Elem y) { return {CobordismKind::Cylinder, y}; }
  static ElementaryCobordism pants() { return {CobordismKind::Pants, kIdentity}; }
  static ElementaryCobordism disc() { return {CobordismKind::Disc, kIdentity}; }
  static ElementaryCobordism moebius() { return {CobordismKind::Moebius, kIdentity}; }

  /// Number of incoming monodromies: 2 for pants, 1 otherwise.
  std::size_t arity() const { return kind == CobordismKind::Pants ? 2 : 1; }
};

/// Outgoing monodromy. Cylinder(y): x -> y x y^-1; Pants: (x,y) -> xy;
/// Disc caps x = 1 and returns 1; Moebius with core x has boundary x^2.
/// Throws UsageError on an arity mismatch or when a disc caps x != 1.
Elem compose(const FiniteGroup& g, const ElementaryCobordism& c, std::span<const Elem> inputs);

/// {x,y} = x y x^-1 y
Elem klein_monodromy(const FiniteGroup& g, Elem x, Elem y);
/// prod [x_i, y_i]
Elem handle_monodromy(const FiniteGroup& g, std::span<const std::pair<Elem, Elem>> pairs);
/// Boundary of two Moebius bands with cores xy and y^-1 x^-1 y joined by a pair of pants.
Elem klein_from_moebius(const FiniteGroup& g, Elem x, Elem y);

/// A free G-action on a closed surface, given by the monodromy of a polygon
/// presentation of the quotient: genus g handles (x_i, y_i), or k crosscaps z_i.
struct SurfaceAction {
  GroupPtr group;
  bool orientable = true;
  std::vector<std::pair<Elem, Elem>> pairs;
  std::vector<Elem> crosscaps;

  /// "orientable g=2 pairs=(x1,y1);(x2,y2)" or "nonorientable k=3 z=(z1;z2;z3)".
  /// Throws UsageError on bad syntax or when the closed-surface condition fails.
  static SurfaceAction parse(GroupPtr g, std::string_view text);
  std::string format() const;

  /// prod [x_i,y_i] resp. prod z_i^2.
  Elem relator_value() const;
  void validate() const;

  long long chi_quotient() const;  // 2 - 2g or 2 - k
  long long chi_total() const;     // |G| chi_quotient

  UWord to_word() const;  // prod O[x_i,y_i] resp. prod S[z_i]
  SurfaceRelator to_relator() const;
  SurfaceCycle cycle() const;
};

enum class Verdict { Extendable, Obstructed, TrivialRP2Component };
std::string to_string(Verdict v);

struct ExtendabilityResult {
  Verdict verdict = Verdict::Extendable;
  int chi_mod2 = 0;
  BitVector b0_coordinates;
};

nlohmann::json to_json(const ExtendabilityResult& r);

/// Odd chi(S) is the unoriented bordism obstruction; otherwise the surface class
/// is paired with the annihilator of the surface functionals.
ExtendabilityResult is_extendable(const SurfaceAction& s, const CocycleBasis& basis, const MultiplierReport& report);

}  // namespace usm
