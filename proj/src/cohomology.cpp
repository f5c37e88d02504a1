#include "usm/cohomology.hpp"

#include <algorithm>
#include <random>

#include "usm/error.hpp"

namespace usm {
namespace {

// Up to this order the full bar-complex cocycle system is streamed.
constexpr std::size_t kFullSystemLimit = 64;

void check_size(const FiniteGroup& g, const CohomologyLimits& limits) {
  if (g.order() > limits.max_order) {
    throw ResourceError("group order " + std::to_string(g.order()) + " exceeds the cohomology cap of " +
                        std::to_string(limits.max_order));
  }
}

std::size_t width(const FiniteGroup& g) { return (g.order() - 1) * (g.order() - 1); }

}  // namespace

namespace detail {

RowBasis cocycles_by_full_system(const FiniteGroup& G) {
  const std::size_t n = G.order();
  RowBasis constraints(width(G));
  std::vector<std::size_t> ones;
  for (Elem g = 1; g < n; ++g) {
    for (Elem h = 1; h < n; ++h) {
      Elem gh = G.mul(g, h);
      for (Elem k = 1; k < n; ++k) {
        Elem hk = G.mul(h, k);
        ones.clear();
        ones.push_back(Cochain2::index(n, g, h));
        ones.push_back(Cochain2::index(n, h, k));
        if (gh != kIdentity) ones.push_back(Cochain2::index(n, gh, k));
        if (hk != kIdentity) ones.push_back(Cochain2::index(n, g, hk));
        constraints.add_sparse(ones);
      }
    }
  }
  return span_of(width(G), kernel_basis(constraints));
}

// A normalized cocycle is determined by f_s(g) = omega(g,s) for s in a
// generating set, through omega(g,hs) = omega(g,h) + omega(gh,s) + omega(h,s).
// The unknowns are f_s(g); consistency along non-tree Cayley edges cuts out Z2.
RowBasis cocycles_by_generators(const FiniteGroup& G) {
  const std::size_t n = G.order();
  std::vector<Elem> gens;
  {
    std::vector<bool> span = closure_mask(G, gens);
    auto consider = [&](Elem e) {
      if (!span[e]) {
        gens.push_back(e);
        span = closure_mask(G, gens);
      }
    };
    for (Elem e : G.generators()) consider(e);
    for (Elem e = 1; e < n; ++e) consider(e);
  }
  const std::size_t k = gens.size();
  const std::size_t unknowns = n * k;
  auto var = [&](Elem x, std::size_t s) { return static_cast<std::size_t>(x) * k + s; };

  // BFS tree: parent[h] * gens[via[h]] = h
  std::vector<Elem> order{kIdentity};
  std::vector<Elem> parent(n, kIdentity);
  std::vector<std::size_t> via(n, 0);
  std::vector<bool> seen(n, false);
  seen[kIdentity] = true;
  std::vector<std::pair<Elem, std::size_t>> non_tree;
  for (std::size_t i = 0; i < order.size(); ++i) {
    Elem h = order[i];
    for (std::size_t s = 0; s < k; ++s) {
      Elem hs = G.mul(h, gens[s]);
      if (!seen[hs]) {
        seen[hs] = true;
        parent[hs] = h;
        via[hs] = s;
        order.push_back(hs);
      } else {
        non_tree.emplace_back(h, s);
      }
    }
  }

  RowBasis constraints(unknowns);
  for (std::size_t s = 0; s < k; ++s) {
    std::size_t idx = var(kIdentity, s);
    constraints.add_sparse(std::span<const std::size_t>(&idx, 1));
  }
  std::vector<BitVector> form(n, BitVector(unknowns));
  for (Elem g = 0; g < n; ++g) {
    form[kIdentity] = BitVector(unknowns);
    for (std::size_t i = 1; i < n; ++i) {
      Elem h = order[i];
      Elem p = parent[h];
      form[h] = form[p];
      form[h].flip(var(G.mul(g, p), via[h]));
      form[h].flip(var(p, via[h]));
    }
    for (auto [h, s] : non_tree) {
      BitVector c = form[G.mul(h, gens[s])] ^ form[h];
      c.flip(var(G.mul(g, h), s));
      c.flip(var(h, s));
      constraints.add(std::move(c));
    }
  }

  RowBasis z2(width(G));
  for (const BitVector& f : kernel_basis(constraints)) {
    std::vector<bool> value(n);
    BitVector omega(width(G));
    for (Elem g = 1; g < n; ++g) {
      value[kIdentity] = false;
      for (std::size_t i = 1; i < n; ++i) {
        Elem h = order[i];
        Elem p = parent[h];
        value[h] = value[p] ^ f.get(var(G.mul(g, p), via[h])) ^ f.get(var(p, via[h]));
        if (value[h]) omega.set(Cochain2::index(n, g, h));
      }
    }
    z2.add(std::move(omega));
  }
  return z2;
}

}  // namespace detail

Cochain2 Cochain2::zero(GroupPtr g) {
  std::size_t w = width(*g);
  return Cochain2{std::move(g), BitVector(w)};
}

void Cochain2::set(Elem g, Elem h, bool v) {
  if (g == kIdentity || h == kIdentity) {
    if (v) throw InvariantError("normalized cochains vanish on the identity");
    return;
  }
  values.set(index(group->order(), g, h), v);
}

Cochain2& Cochain2::operator^=(const Cochain2& o) {
  if (o.group != group) throw InvariantError("cochains over different groups");
  values ^= o.values;
  return *this;
}

bool is_cocycle(const Cochain2& omega, std::size_t samples, std::uint64_t seed) {
  const FiniteGroup& G = *omega.group;
  const std::size_t n = G.order();
  auto ok = [&](Elem g, Elem h, Elem k) {
    return !(omega(g, h) ^ omega(G.mul(g, h), k) ^ omega(g, G.mul(h, k)) ^ omega(h, k));
  };
  if (n <= kFullSystemLimit) {
    for (Elem g = 1; g < n; ++g)
      for (Elem h = 1; h < n; ++h)
        for (Elem k = 1; k < n; ++k)
          if (!ok(g, h, k)) return false;
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
  for (std::size_t t = 0; t < samples; ++t) {
    if (!ok(pick(rng), pick(rng), pick(rng))) return false;
  }
  return true;
}

Cochain2 coboundary(GroupPtr g, const BitVector& phi) {
  const std::size_t n = g->order();
  if (phi.size() != n - 1) throw UsageError("1-cochain has the wrong length");
  auto value = [&](Elem x) { return x != kIdentity && phi.get(x - 1); };
  Cochain2 out = Cochain2::zero(g);
  for (Elem a = 1; a < n; ++a)
    for (Elem b = 1; b < n; ++b)
      if (value(a) ^ value(b) ^ value(g->mul(a, b))) out.values.set(Cochain2::index(n, a, b));
  return out;
}

RowBasis cocycle_space(GroupPtr g, const CohomologyLimits& limits) {
  check_size(*g, limits);
  if (g->order() == 1) return RowBasis(0);
  return g->order() <= kFullSystemLimit ? detail::cocycles_by_full_system(*g) : detail::cocycles_by_generators(*g);
}

RowBasis coboundary_space(GroupPtr g, const CohomologyLimits& limits) {
  check_size(*g, limits);
  const std::size_t n = g->order();
  RowBasis b2(width(*g));
  for (Elem x = 1; x < n; ++x) {
    BitVector delta(n - 1);
    delta.set(x - 1);
    b2.add(coboundary(g, delta).values);
  }
  return b2;
}

CocycleBasis h2(GroupPtr g, const CohomologyLimits& limits) {
  CocycleBasis out{g, cocycle_space(g, limits), coboundary_space(g, limits), {}, {}};
  for (const auto& b : out.b2.rows()) {
    if (!out.z2.contains(b)) throw InvariantError("coboundary is not a cocycle");
  }
  RowBasis reps(width(*g));
  for (const auto& z : out.z2.rows()) reps.add(out.b2.reduce(z));
  out.rep_pivots = reps.pivots();
  for (auto& r : reps.rows()) out.h2_reps.push_back(Cochain2{g, std::move(r)});
  for (const auto& r : out.h2_reps) {
    if (!is_cocycle(r)) throw InvariantError("H2 representative fails the cocycle condition");
  }
  if (out.dim() != out.z2.rank() - out.b2.rank()) throw InvariantError("H2 dimension mismatch");
  return out;
}

BitVector CocycleBasis::coordinates(const Cochain2& omega) const {
  if (omega.group->order() != group->order()) throw InvariantError("cochain over a different group");
  if (!z2.contains(omega.values)) throw InvariantError("cochain is not a cocycle");
  BitVector r = b2.reduce(omega.values);
  BitVector coords(dim());
  BitVector check(r.size());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (r.get(rep_pivots[i])) {
      coords.set(i);
      check ^= h2_reps[i].values;
    }
  }
  if (check != r) throw InvariantError("cocycle is not spanned by the H2 representatives");
  return coords;
}

bool CocycleBasis::is_coboundary(const Cochain2& omega) const { return b2.contains(omega.values); }

Cochain2 CocycleBasis::combination(const BitVector& coeffs) const {
  if (coeffs.size() != dim()) throw UsageError("coefficient vector has the wrong length");
  Cochain2 out = Cochain2::zero(group);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (coeffs.get(i)) out ^= h2_reps[i];
  }
  return out;
}

Cochain2 restrict(const Cochain2& omega, const GroupHom& incl) {
  if (incl.target->order() != omega.group->order()) throw UsageError("restriction target does not match");
  if (!incl.is_injective()) throw UsageError("restriction needs an injective homomorphism");
  Cochain2 out = Cochain2::zero(incl.source);
  const std::size_t m = incl.source->order();
  for (Elem a = 1; a < m; ++a)
    for (Elem b = 1; b < m; ++b)
      if (omega(incl(a), incl(b))) out.values.set(Cochain2::index(m, a, b));
  return out;
}

std::vector<BitVector> restriction_matrix(const CocycleBasis& ambient, const CocycleBasis& sub,
                                          const GroupHom& incl) {
  std::vector<BitVector> rows;
  for (const auto& rep : ambient.h2_reps) rows.push_back(sub.coordinates(restrict(rep, incl)));
  return rows;
}

std::vector<Elem> SurfaceRelator::letters(const FiniteGroup& g) const {
  std::vector<Elem> out;
  for (int t : word) {
    auto i = static_cast<std::size_t>(std::abs(t) - 1);
    if (t == 0 || i >= values.size()) throw UsageError("surface word refers to an undefined edge");
    out.push_back(t > 0 ? values[i] : g.inv(values[i]));
  }
  return out;
}

SurfaceRelator torus_relator(Elem x, Elem y) { return {{1, 2, -1, -2}, {x, y}}; }
SurfaceRelator klein_relator(Elem x, Elem y) { return {{1, 2, -1, 2}, {x, y}}; }
SurfaceRelator projective_relator(Elem z) { return {{1, 1}, {z}}; }

SurfaceCycle surface_cycle(GroupPtr g, const SurfaceRelator& relator) {
  const FiniteGroup& G = *g;
  for (Elem v : relator.values) {
    if (v >= G.order()) throw UsageError("surface monodromy is not a group element");
  }
  std::vector<std::pair<Elem, Elem>> simplices;
  Elem p = kIdentity;
  for (Elem x : relator.letters(G)) {
    if (p != kIdentity && x != kIdentity) simplices.emplace_back(p, x);
    p = G.mul(p, x);
  }
  if (p != kIdentity) throw UsageError("relator letters do not multiply to the identity");
  for (int t : relator.word) {
    Elem v = relator.values[static_cast<std::size_t>(std::abs(t) - 1)];
    if (t < 0 && v != kIdentity) simplices.emplace_back(v, G.inv(v));
  }
  // reduce mod 2
  std::sort(simplices.begin(), simplices.end());
  std::vector<std::pair<Elem, Elem>> reduced;
  for (std::size_t i = 0; i < simplices.size();) {
    std::size_t j = i;
    while (j < simplices.size() && simplices[j] == simplices[i]) ++j;
    if ((j - i) % 2 == 1) reduced.push_back(simplices[i]);
    i = j;
  }
  SurfaceCycle c{std::move(g), std::move(reduced)};
  if (!has_zero_boundary(c)) throw UsageError("surface word does not glue to a closed surface");
  return c;
}

bool has_zero_boundary(const SurfaceCycle& c) {
  std::vector<bool> odd(c.group->order(), false);
  for (auto [g, h] : c.simplices) {
    odd[g] = !odd[g];
    odd[h] = !odd[h];
    Elem gh = c.group->mul(g, h);
    odd[gh] = !odd[gh];
  }
  return std::none_of(odd.begin() + 1, odd.end(), [](bool b) { return b; });
}

bool eval(const Cochain2& omega, const SurfaceCycle& c) {
  if (omega.group->order() != c.group->order()) throw UsageError("cochain and cycle live over different groups");
  bool acc = false;
  for (auto [g, h] : c.simplices) acc ^= omega(g, h);
  return acc;
}

}  // namespace usm
