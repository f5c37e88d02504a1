#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "usm/cohomology.hpp"
#include "usm/group.hpp"

namespace usm {

/// E = F2^d x G with (a,g)(b,h) = (a + b + Omega(g,h), gh), where bit j of
/// Omega is the j-th defining cocycle. A = F2^d x {1} is central of exponent 2.
class SquareCentralExtension {
 public:
  struct Element {
    std::uint64_t a = 0;
    Elem g = kIdentity;
    bool operator==(const Element&) const = default;
  };

  /// Throws InvariantError when a cochain is not a cocycle.
  static SquareCentralExtension from_cocycle(const Cochain2& omega);
  static SquareCentralExtension from_cocycles(GroupPtr base, std::span<const Cochain2> cocycles);

  const GroupPtr& base() const { return base_; }
  std::size_t fiber_dim() const { return cocycles_.size(); }
  const std::vector<Cochain2>& cocycles() const { return cocycles_; }
  std::size_t order() const { return base_->order() << fiber_dim(); }

  std::uint64_t omega(Elem g, Elem h) const { return omega_[static_cast<std::size_t>(g) * base_->order() + h]; }
  Element mul(Element x, Element y) const { return {x.a ^ y.a ^ omega(x.g, y.g), base_->mul(x.g, y.g)}; }
  Element inv(Element x) const {
    Elem gi = base_->inv(x.g);
    return {x.a ^ omega(x.g, gi), gi};
  }
  Element lift(Elem g) const { return {0, g}; }
  Element commutator(Element x, Element y) const { return mul(mul(x, y), mul(inv(x), inv(y))); }
  Element unoriented_commutator(Element x, Element y) const { return mul(mul(x, y), mul(inv(x), y)); }

  /// Element index a * |G| + g in total().
  std::size_t index(Element x) const { return static_cast<std::size_t>(x.a) * base_->order() + x.g; }
  Element element(std::size_t index) const { return {index / base_->order(), static_cast<Elem>(index % base_->order())}; }

  /// E as a table group (ResourceError beyond the dense-table limit).
  GroupPtr total() const;
  GroupHom projection() const;
  /// Indices of A inside total().
  std::vector<Elem> fiber() const;

  /// True iff E -> G has a homomorphic section, i.e. every defining cocycle is a coboundary.
  bool is_split() const;

 private:
  GroupPtr base_;
  std::vector<Cochain2> cocycles_;
  std::vector<std::uint64_t> omega_;
  mutable GroupPtr total_;
};

/// Quotient of E by a central subgroup, with the minimal element of each coset as representative.
struct CentralQuotient {
  GroupPtr quotient;
  GroupHom projection;
  std::vector<Elem> transversal;
};
CentralQuotient central_quotient(GroupPtr e, std::span<const Elem> m);

/// For M central of exponent 2 in E and phi: M -> F2^k (phi[i] is the image of m[i]),
/// the extension of E/M by F2^k obtained from (F2^k x E)/{(phi(m), m^-1)}. Its
/// cocycle is phi(t(q1) t(q2) t(q1 q2)^-1) for the minimal transversal t.
SquareCentralExtension transgression(GroupPtr e, std::span<const Elem> m, std::span<const std::uint64_t> phi,
                                     std::size_t k);

}  // namespace usm
