#include "usm/hopf.hpp"

#include "usm/error.hpp"

namespace usm {

namespace {

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& t : out) t = -t;
  return out;
}

Word concat(std::initializer_list<const Word*> parts) {
  Word out;
  for (const Word* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

}  // namespace

SquareCover square_cover(const Presentation& p, std::size_t coset_limit) {
  p.validate();
  SquareCover sc;
  sc.base_presentation = p;
  sc.cover_presentation.generator_names = p.generator_names;
  for (const Word& r : p.relators) {
    sc.cover_presentation.relators.push_back(concat({&r, &r}));
    Word ri = inverse(r);
    for (std::size_t k = 0; k < p.generator_count(); ++k) {
      Word x{static_cast<int>(k + 1)};
      Word xi{-static_cast<int>(k + 1)};
      sc.cover_presentation.relators.push_back(concat({&x, &r, &xi, &ri}));
    }
  }
  sc.base = from_presentation(p, coset_limit);
  sc.cover = from_presentation(sc.cover_presentation, coset_limit);
  sc.projection = hom_from_generator_images(sc.cover, sc.base, sc.base->generators());

  const FiniteGroup& f = *sc.cover;
  for (Elem e = 0; e < f.order(); ++e)
    if (sc.projection(e) == kIdentity) sc.kernel_r0.push_back(e);
  if (f.order() != sc.base->order() * sc.kernel_r0.size()) throw InvariantError("|F0| != |G| |R0|");
  if (p.relators.size() < 63 && sc.kernel_r0.size() > (std::size_t{1} << p.relators.size()))
    throw InvariantError("R0 is larger than 2^(number of relators)");
  for (Elem r : sc.kernel_r0) {
    if (f.mul(r, r) != kIdentity) throw InvariantError("R0 does not have exponent 2");
    for (Elem g : f.generators())
      if (f.mul(g, r) != f.mul(r, g)) throw InvariantError("R0 is not central in F0");
  }
  return sc;
}

HopfMultiplier hopf_multiplier(const SquareCover& sc) {
  const FiniteGroup& f = *sc.cover;
  std::vector<Elem> squares;
  for (Elem e = 0; e < f.order(); ++e) squares.push_back(f.mul(e, e));
  std::vector<bool> in_s = closure_mask(f, squares);

  HopfMultiplier out;
  out.cover_order = f.order();
  out.r0_order = sc.kernel_r0.size();
  // greedy basis of the elementary abelian group S(F0) n R0
  std::vector<Elem> basis;
  std::vector<bool> span(f.order(), false);
  span[kIdentity] = true;
  std::vector<Elem> members{kIdentity};
  for (Elem r : sc.kernel_r0) {
    if (!in_s[r] || span[r]) continue;
    basis.push_back(r);
    std::size_t m = members.size();
    for (std::size_t i = 0; i < m; ++i) {
      Elem x = f.mul(members[i], r);
      span[x] = true;
      members.push_back(x);
    }
  }
  out.dim = basis.size();
  for (Elem b : basis) out.generators.push_back(f.word(b));

  const FiniteGroup& g = *sc.base;
  constexpr auto kNone = static_cast<Elem>(-1);
  std::vector<Elem> lift(g.order(), kNone);
  for (Elem e = 0; e < f.order(); ++e)
    if (lift[sc.projection(e)] == kNone) lift[sc.projection(e)] = e;
  std::vector<Elem> surfaces;
  for (Elem x = 0; x < g.order(); ++x) {
    if (x != kIdentity && g.mul(x, x) == kIdentity) surfaces.push_back(f.mul(lift[x], lift[x]));
    for (Elem y = 0; y < g.order(); ++y) {
      if (g.commutator(x, y) == kIdentity) surfaces.push_back(f.commutator(lift[x], lift[y]));
      if (g.unoriented_commutator(x, y) == kIdentity) surfaces.push_back(f.unoriented_commutator(lift[x], lift[y]));
    }
  }
  std::vector<bool> mask = closure_mask(f, surfaces);
  std::size_t size = 0;
  for (bool b : mask) size += b ? 1 : 0;
  while ((std::size_t{1} << out.surface_dim) < size) ++out.surface_dim;
  return out;
}

HopfMultiplier hopf_multiplier(const Presentation& p, std::size_t coset_limit) {
  return hopf_multiplier(square_cover(p, coset_limit));
}

}  // namespace usm
