#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "usm/cohomology.hpp"
#include "usm/extension.hpp"
#include "usm/uword.hpp"

namespace usm {

enum class RelationFamily { Miller, Generating, Derived, Conjectured };
std::string to_string(RelationFamily f);

using RelationPair = std::pair<UWord, UWord>;

/// One relation scheme lhs ~ rhs in free variables. `elements` group elements
/// and, when `with_exponents`, two integers bounded by the order of the first element.
struct RelationSpec {
  std::string name;  // the relation itself, e.g. "<xy,z> ~ <y,z>^x <x,z>"
  RelationFamily family;
  int elements;
  bool with_exponents;
  std::function<RelationPair(const FiniteGroup&, std::span<const Elem>, std::span<const long long>)> build;
};

/// Oriented commutator relations, the seven defining unoriented relations,
/// their consequences, and the open relation (family Conjectured).
const std::vector<RelationSpec>& relation_specs();

struct VerificationOptions {
  std::size_t exhaustive_limit = 16;  // full product ranges up to this group order
  std::size_t samples = 10000;        // instances per relation above it
  std::uint64_t seed = 0;
};

/// Streams the instances of one relation (exhaustive or seeded sample).
void for_each_instance(const FiniteGroup& g, const RelationSpec& spec, const VerificationOptions& options,
                       const std::function<void(const RelationPair&)>& visit);

/// Canonical images must agree (InvariantError otherwise). True iff both sides
/// have the same image in the extension, i.e. lhs rhs^-1 pairs to zero with every cocycle of e.
/// Every instance of one family in the range chosen by `options`.
std::vector<RelationPair> relation_instances(const FiniteGroup& g, RelationFamily family,
                                             const VerificationOptions& options = {});
inline std::vector<RelationPair> miller_relations(const FiniteGroup& g, const VerificationOptions& o = {}) {
  return relation_instances(g, RelationFamily::Miller, o);
}
inline std::vector<RelationPair> generating_relations(const FiniteGroup& g, const VerificationOptions& o = {}) {
  return relation_instances(g, RelationFamily::Generating, o);
}
inline std::vector<RelationPair> derived_relations(const FiniteGroup& g, const VerificationOptions& o = {}) {
  return relation_instances(g, RelationFamily::Derived, o);
}

bool verify_relation_pair(const UWord& lhs, const UWord& rhs, const SquareCentralExtension& e);
bool verify_relation_pair(const UWord& lhs, const UWord& rhs, const CocycleBasis& basis);

struct RelationStats {
  std::string name;
  RelationFamily family;
  std::size_t instances = 0;
  std::size_t canonical_failures = 0;
  std::size_t extension_failures = 0;
  bool passed() const { return canonical_failures == 0 && extension_failures == 0; }
};

struct VerificationReport {
  std::string group;
  std::size_t order = 0;
  std::size_t dim_h2 = 0;
  bool exhaustive = false;
  std::uint64_t seed = 0;
  std::vector<RelationStats> relations;

  /// Every non-conjectured relation passed.
  bool all_pass() const;
  std::size_t instances() const;
};

VerificationReport verify_relations(const std::string& group_name, const CocycleBasis& basis,
                                    const VerificationOptions& options = {});

struct MClass {
  bool trivial = true;
  BitVector coordinates;  // over the H2 representatives
};

/// Class of w in M(G;Z2) via the pairing with every H2 representative.
/// Throws UsageError when w is not in the kernel of the canonical map.
MClass is_trivial_in_M(const UWord& w, const CocycleBasis& basis);
/// Same, reusing universal_probe(basis).
MClass is_trivial_in_M(const UWord& w, const SquareCentralExtension& probe);

/// Extension by all H2 representatives at once.
SquareCentralExtension universal_probe(const CocycleBasis& basis);

}  // namespace usm
