#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace usm {

/// Index of a group element. The identity is always index 0.
using Elem = std::uint32_t;
inline constexpr Elem kIdentity = 0;

/// A word in the free group on n generators. Generator i is the token i+1,
/// its inverse is -(i+1).
using Word = std::vector<int>;

/// Groups larger than this keep only their Cayley graph and multiply by
/// tracing generator words.
inline constexpr std::size_t kDenseTableLimit = 4096;

/// Finite group presentation <generators | relators>.
struct Presentation {
  std::vector<std::string> generator_names;
  std::vector<Word> relators;

  std::size_t generator_count() const { return generator_names.size(); }

  /// Throws UsageError if a token is zero or out of range.
  void validate() const;

  /// Renders a word as whitespace-separated tokens, e.g. "a c a^-1 c^-3".
  std::string format_word(const Word& w) const;

  /// Parses a whitespace-separated word such as "a c a^-1 c^-3".
  Word parse_word(std::string_view text) const;
};

/// Parses the text format:
///   gens: a b c
///   rel: a c a^-1 c^-3
/// with `#` comments.
Presentation parse_presentation(std::string_view text);

/// Serializes back into the same text format.
std::string format_presentation(const Presentation& p);

using Permutation = std::vector<std::uint32_t>;  // 0-based images

/// Parses disjoint-cycle notation with 1-based points, e.g. "(1 2)(3 4)".
/// The result has length max(degree, largest point).
Permutation parse_cycles(std::string_view text, std::size_t degree = 0);
std::string format_cycles(const Permutation& p);

/// Parses one generator per line in cycle notation; `#` starts a comment.
std::vector<Permutation> parse_permutation_file(std::string_view text);

/// A finite group with a total multiplication on element indices 0..order-1.
///
/// Groups come in two flavours. Groups generated from a generating set carry
/// their right Cayley graph and a breadth-first spanning tree, so every
/// element has a canonical word in the generators; up to kDenseTableLimit
/// elements they also carry a dense multiplication table. Groups built
/// directly from a table (extensions, quotients) carry only the table.
class FiniteGroup {
 public:
  /// Builds a group from a right Cayley graph. `graph[v * k + i]` is the
  /// vertex reached from v by right multiplication with generator i, and
  /// `start` is the identity vertex. Elements are renumbered canonically:
  /// identity first, then breadth-first discovery order, generators tried
  /// in order.
  static FiniteGroup from_cayley_graph(std::span<const std::uint32_t> graph,
                                       std::size_t vertex_count,
                                       std::vector<std::string> generator_names,
                                       std::uint32_t start = 0);

  /// Builds a group from a dense multiplication table whose identity is 0.
  /// Group axioms are verified; a violation throws InvariantError.
  static FiniteGroup from_table(std::size_t order, std::vector<Elem> table,
                                std::vector<std::string> labels);

  std::size_t order() const { return order_; }
  bool has_dense_table() const { return !table_.empty(); }
  bool has_generators() const { return !generator_names_.empty(); }

  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const { return inverse_[a]; }
  Elem pow(Elem a, long long k) const;
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
  Elem commutator(Elem x, Elem y) const;          // x y x^-1 y^-1
  Elem unoriented_commutator(Elem x, Elem y) const;  // x y x^-1 y
  std::size_t element_order(Elem a) const;

  const std::vector<std::string>& generator_names() const { return generator_names_; }
  std::span<const Elem> generators() const { return generators_; }
  Elem right_mul_generator(Elem e, std::size_t k) const { return graph_[e * generator_names_.size() + k]; }

  /// Canonical spanning-tree word of an element (positive generators only).
  Word word(Elem e) const;
  Elem evaluate(const Word& w) const;

  const std::string& label(Elem e) const { return labels_[e]; }
  void set_labels(std::vector<std::string> labels);

  /// Extra names accepted by parse_element, e.g. "c" for ab in a dihedral group.
  void add_alias(std::string name, Elem e) { aliases_[std::move(name)] = e; }
  const std::map<std::string, Elem>& aliases() const { return aliases_; }

  /// Attaches the permutation of every element so cycle notation can be parsed.
  void set_permutations(std::vector<Permutation> perms);
  const std::vector<Permutation>& permutations() const { return perms_; }

  /// Parses an element: "1"/"e", an element label, a product of generator or
  /// alias names with optional ^k suffixes ("ab", "c^3", "a^-1c"), or cycle
  /// notation for permutation groups. Throws UsageError.
  Elem parse_element(std::string_view text) const;

  /// Exhaustive associativity/identity/inverse check up to order 64, random
  /// triples above. Throws InvariantError on failure.
  void verify_axioms(std::size_t random_triples = 10000, std::uint64_t seed = 0) const;

 private:
  std::size_t order_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<std::string> generator_names_;
  std::vector<Elem> generators_;
  std::vector<Elem> graph_;         // right Cayley graph
  std::vector<Elem> tree_parent_;   // BFS spanning tree
  std::vector<std::uint32_t> tree_gen_;
  std::vector<std::string> labels_;
  std::map<std::string, Elem> aliases_;
  std::vector<Permutation> perms_;
  std::map<Permutation, Elem> perm_index_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A homomorphism between two finite groups, stored as a lookup table.
struct GroupHom {
  GroupPtr source;
  GroupPtr target;
  std::vector<Elem> map;

  Elem operator()(Elem e) const { return map[e]; }
  bool is_injective() const;
  /// Exhaustive check of map(ab) = map(a)map(b). Throws InvariantError.
  void verify() const;
};

/// The homomorphism determined by images of the source generators. Throws
/// InvariantError when the images do not define a homomorphism.
GroupHom hom_from_generator_images(GroupPtr source, GroupPtr target, std::span<const Elem> images);

struct Subgroup {
  GroupPtr group;
  GroupHom inclusion;  // group -> ambient
};

struct GroupLimits {
  std::size_t max_order = std::size_t{1} << 20;
};

/// Closure of a set of permutations acting on the same finite set.
GroupPtr from_permutations(const std::vector<Permutation>& generators,
                           const GroupLimits& limits = {});

/// Coset enumeration over the trivial subgroup. Throws ResourceError when the
/// coset table outgrows `coset_limit`; infiniteness is never claimed.
GroupPtr from_presentation(const Presentation& p, std::size_t coset_limit = std::size_t{1} << 20);

/// A presentation read off the Cayley graph: one relator per non-tree edge.
Presentation derive_presentation(const FiniteGroup& g);

std::vector<Elem> involutions(const FiniteGroup& g);
std::vector<std::pair<Elem, Elem>> commuting_pairs(const FiniteGroup& g);
/// Pairs with x y x^-1 y = 1.
std::vector<std::pair<Elem, Elem>> klein_pairs(const FiniteGroup& g);

/// Subgroup generated by `elems`. The subgroup keeps the ambient labels.
Subgroup subgroup_generated(GroupPtr g, std::span<const Elem> elems);
/// Subgroup generated by all squares.
Subgroup squares_subgroup(GroupPtr g);
Subgroup kernel(const GroupHom& h);
/// Boolean membership mask of the subgroup generated by `elems` (no new group built).
std::vector<bool> closure_mask(const FiniteGroup& g, std::span<const Elem> elems);

/// Dimension of G/[G,G]G^2 over F2.
std::size_t abelianization_mod2(const FiniteGroup& g);

/// Named groups with one or more presentations.
struct CatalogEntry {
  std::string name;
  GroupPtr group;
  std::vector<Presentation> presentations;
};

/// Accepted names: cyclic:n, dihedral:n (order 2n), symmetric:n, quaternion:8,
/// klein4, abelian:n1xn2x..., smallgroup:64:182. Throws UsageError otherwise.
CatalogEntry catalog(std::string_view name, const GroupLimits& limits = {});
std::vector<std::string> catalog_names();

}  // namespace usm
