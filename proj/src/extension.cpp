#include "usm/extension.hpp"

#include <algorithm>

#include "usm/error.hpp"

namespace usm {

SquareCentralExtension SquareCentralExtension::from_cocycle(const Cochain2& omega) {
  return from_cocycles(omega.group, std::span<const Cochain2>(&omega, 1));
}

SquareCentralExtension SquareCentralExtension::from_cocycles(GroupPtr base, std::span<const Cochain2> cocycles) {
  if (cocycles.size() > 64) throw ResourceError("at most 64 fiber coordinates are supported");
  SquareCentralExtension e;
  const std::size_t n = base->order();
  e.base_ = std::move(base);
  e.omega_.assign(n * n, 0);
  for (std::size_t j = 0; j < cocycles.size(); ++j) {
    const Cochain2& c = cocycles[j];
    if (c.group->order() != n) throw InvariantError("cocycle lives over a different group");
    if (!is_cocycle(c)) throw InvariantError("extension data is not a cocycle");
    for (Elem g = 1; g < n; ++g)
      for (Elem h = 1; h < n; ++h)
        if (c(g, h)) e.omega_[g * n + h] |= std::uint64_t{1} << j;
    e.cocycles_.push_back(c);
  }
  return e;
}

GroupPtr SquareCentralExtension::total() const {
  if (total_) return total_;
  const std::size_t size = order();
  if (fiber_dim() >= 32 || size > kDenseTableLimit) throw ResourceError("extension too large for a table group");
  std::vector<Elem> table(size * size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) table[i * size + j] = static_cast<Elem>(index(mul(element(i), element(j))));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < size; ++i) {
    Element x = element(i);
    std::string bits;
    for (std::size_t j = 0; j < fiber_dim(); ++j) bits += ((x.a >> j) & 1U) ? '1' : '0';
    labels.push_back("(" + bits + "," + base_->label(x.g) + ")");
  }
  labels[0] = "1";
  total_ = std::make_shared<const FiniteGroup>(FiniteGroup::from_table(size, std::move(table), std::move(labels)));
  return total_;
}

GroupHom SquareCentralExtension::projection() const {
  GroupPtr e = total();
  GroupHom h{e, base_, {}};
  for (std::size_t i = 0; i < order(); ++i) h.map.push_back(element(i).g);
  return h;
}

std::vector<Elem> SquareCentralExtension::fiber() const {
  std::vector<Elem> out;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << fiber_dim()); ++a) out.push_back(static_cast<Elem>(index({a, kIdentity})));
  return out;
}

bool SquareCentralExtension::is_split() const {
  RowBasis b2 = coboundary_space(base_, CohomologyLimits{base_->order()});
  return std::all_of(cocycles_.begin(), cocycles_.end(), [&](const Cochain2& c) { return b2.contains(c.values); });
}

CentralQuotient central_quotient(GroupPtr e, std::span<const Elem> m) {
  const FiniteGroup& E = *e;
  const std::size_t n = E.order();
  std::vector<bool> in_m(n, false);
  for (Elem x : m) in_m[x] = true;
  if (!in_m[kIdentity]) throw InvariantError("subgroup must contain the identity");
  for (Elem x : m) {
    for (Elem y : m)
      if (!in_m[E.mul(x, y)]) throw InvariantError("M is not a subgroup");
    for (Elem g = 0; g < n; ++g)
      if (E.mul(g, x) != E.mul(x, g)) throw InvariantError("M is not central");
  }
  constexpr auto kNone = static_cast<Elem>(-1);
  std::vector<Elem> coset(n, kNone);
  std::vector<Elem> reps;
  for (Elem g = 0; g < n; ++g) {
    if (coset[g] != kNone) continue;
    auto q = static_cast<Elem>(reps.size());
    reps.push_back(g);
    for (Elem x : m) coset[E.mul(g, x)] = q;
  }
  const std::size_t k = reps.size();
  std::vector<Elem> table(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) table[i * k + j] = coset[E.mul(reps[i], reps[j])];
  std::vector<std::string> labels;
  for (Elem r : reps) labels.push_back(E.label(r));
  auto q = std::make_shared<const FiniteGroup>(FiniteGroup::from_table(k, std::move(table), std::move(labels)));
  return CentralQuotient{q, GroupHom{e, q, std::move(coset)}, std::move(reps)};
}

SquareCentralExtension transgression(GroupPtr e, std::span<const Elem> m, std::span<const std::uint64_t> phi,
                                     std::size_t k) {
  const FiniteGroup& E = *e;
  if (phi.size() != m.size()) throw UsageError("phi needs one image per element of M");
  if (k > 64) throw ResourceError("at most 64 fiber coordinates are supported");
  std::vector<std::int64_t> where(E.order(), -1);
  for (std::size_t i = 0; i < m.size(); ++i) where[m[i]] = static_cast<std::int64_t>(i);
  auto image = [&](Elem x) {
    if (where[x] < 0) throw InvariantError("element outside M");
    return phi[static_cast<std::size_t>(where[x])];
  };
  for (Elem x : m) {
    if (E.mul(x, x) != kIdentity) throw InvariantError("M does not have exponent 2");
  }
  for (Elem x : m)
    for (Elem y : m)
      if (image(E.mul(x, y)) != (image(x) ^ image(y))) throw InvariantError("phi is not a homomorphism");

  CentralQuotient cq = central_quotient(e, m);
  const std::size_t nq = cq.quotient->order();
  std::vector<Cochain2> cocycles(k, Cochain2::zero(cq.quotient));
  for (Elem a = 1; a < nq; ++a) {
    for (Elem b = 1; b < nq; ++b) {
      Elem ab = cq.quotient->mul(a, b);
      Elem defect = E.mul(E.mul(cq.transversal[a], cq.transversal[b]), E.inv(cq.transversal[ab]));
      std::uint64_t v = image(defect);
      for (std::size_t j = 0; j < k; ++j)
        if ((v >> j) & 1U) cocycles[j].set(a, b, true);
    }
  }
  return SquareCentralExtension::from_cocycles(cq.quotient, cocycles);
}

}  // namespace usm
