#include "usm/relations.hpp"

#include <random>

#include "usm/error.hpp"

namespace usm {

std::string to_string(RelationFamily f) {
  switch (f) {
    case RelationFamily::Miller:
      return "oriented";
    case RelationFamily::Generating:
      return "generating";
    case RelationFamily::Derived:
      return "derived";
    case RelationFamily::Conjectured:
      return "conjectured";
  }
  return "?";
}

namespace {

using Args = std::span<const Elem>;
using Ints = std::span<const long long>;

UWord O(Elem x, Elem y) { return UWord::o(x, y); }
UWord U(Elem x, Elem y) { return UWord::u(x, y); }
UWord S(Elem z) { return UWord::s(z); }
const UWord kOne;

Elem power(const FiniteGroup& g, Elem x, long long k) {
  long long o = static_cast<long long>(g.element_order(x));
  long long r = ((k % o) + o) % o;
  return g.pow(x, static_cast<std::uint64_t>(r));
}

std::vector<RelationSpec> build_specs() {
  using F = RelationFamily;
  std::vector<RelationSpec> v;
  auto add = [&](std::string name, F family, int elements, auto fn) {
    v.push_back(RelationSpec{std::move(name), family, elements, false,
                             [fn](const FiniteGroup& G, Args a, Ints) { return fn(G, a); }});
  };

  // oriented commutator relations
  add("<x,x> ~ 1", F::Miller, 1, [](const FiniteGroup&, Args a) { return RelationPair{O(a[0], a[0]), kOne}; });
  add("<x,y> ~ <y,x>^-1", F::Miller, 2,
      [](const FiniteGroup&, Args a) { return RelationPair{O(a[0], a[1]), O(a[1], a[0]).inverse()}; });
  add("<xy,z> ~ <y,z>^x <x,z>", F::Miller, 3, [](const FiniteGroup& G, Args a) {
    return RelationPair{O(G.mul(a[0], a[1]), a[2]), O(a[1], a[2]).conj(G, a[0]) * O(a[0], a[2])};
  });
  add("<y,z>^x ~ <x,[y,z]> <y,z>", F::Miller, 3, [](const FiniteGroup& G, Args a) {
    return RelationPair{O(a[1], a[2]).conj(G, a[0]), O(a[0], G.commutator(a[1], a[2])) * O(a[1], a[2])};
  });
  add("<x,yz> ~ <x,y> <x,z>^y", F::Miller, 3, [](const FiniteGroup& G, Args a) {
    return RelationPair{O(a[0], G.mul(a[1], a[2])), O(a[0], a[1]) * O(a[0], a[2]).conj(G, a[1])};
  });
  add("<x,y>^<a,b> ~ <x,y>^[a,b]", F::Miller, 4, [](const FiniteGroup& G, Args a) {
    return RelationPair{conjugate(O(a[2], a[3]), O(a[0], a[1])), O(a[0], a[1]).conj(G, G.commutator(a[2], a[3]))};
  });
  add("[<x,y>,<a,b>] ~ <[x,y],[a,b]>", F::Miller, 4, [](const FiniteGroup& G, Args a) {
    return RelationPair{commutator(O(a[0], a[1]), O(a[2], a[3])),
                        O(G.commutator(a[0], a[1]), G.commutator(a[2], a[3]))};
  });
  add("<b,b'><a0,b0> ~ <[b,b'],a0> <a0,[b,b']b0> <b,b'>", F::Miller, 4, [](const FiniteGroup& G, Args a) {
    Elem c = G.commutator(a[0], a[1]);
    return RelationPair{O(a[0], a[1]) * O(a[2], a[3]), O(c, a[2]) * O(a[2], G.mul(c, a[3])) * O(a[0], a[1])};
  });
  add("<b,b'><b0,a0> ~ <[b,b']b0,a0> <a0,[b,b']> <b,b'>", F::Miller, 4, [](const FiniteGroup& G, Args a) {
    Elem c = G.commutator(a[0], a[1]);
    return RelationPair{O(a[0], a[1]) * O(a[3], a[2]), O(G.mul(c, a[3]), a[2]) * O(a[2], c) * O(a[0], a[1])};
  });
  add("<b,b'><a,a'> ~ <[b,b'],[a,a']> <a,a'> <b,b'>", F::Miller, 4, [](const FiniteGroup& G, Args a) {
    return RelationPair{O(a[0], a[1]) * O(a[2], a[3]),
                        O(G.commutator(a[0], a[1]), G.commutator(a[2], a[3])) * O(a[2], a[3]) * O(a[0], a[1])};
  });
  v.push_back(RelationSpec{"<x^n,x^s> ~ 1", F::Miller, 1, true, [](const FiniteGroup& G, Args a, Ints k) {
                             return RelationPair{O(power(G, a[0], k[0]), power(G, a[0], k[1])), kOne};
                           }});

  // defining relations of the unoriented presentation
  v.push_back(RelationSpec{"(x^i)(x^j) ~ (x^(i+j))", F::Generating, 1, true, [](const FiniteGroup& G, Args a, Ints k) {
                             return RelationPair{S(power(G, a[0], k[0])) * S(power(G, a[0], k[1])),
                                                 S(power(G, a[0], k[0] + k[1]))};
                           }});
  add("(x,xy) ~ (x)(y)", F::Generating, 2, [](const FiniteGroup& G, Args a) {
    return RelationPair{U(a[0], G.mul(a[0], a[1])), S(a[0]) * S(a[1])};
  });
  add("<x,y> ~ (x)(x^-1 y)(y^-1)", F::Generating, 2, [](const FiniteGroup& G, Args a) {
    return RelationPair{O(a[0], a[1]), S(a[0]) * S(G.mul(G.inv(a[0]), a[1])) * S(G.inv(a[1]))};
  });
  add("<xy,z> ~ (y,z)^x (x,z^-1)", F::Generating, 3, [](const FiniteGroup& G, Args a) {
    return RelationPair{O(G.mul(a[0], a[1]), a[2]), U(a[1], a[2]).conj(G, a[0]) * U(a[0], G.inv(a[2]))};
  });
  add("<y,z>^x ~ <x,[y,z]> <y,z>", F::Generating, 3, [](const FiniteGroup& G, Args a) {
    return RelationPair{O(a[1], a[2]).conj(G, a[0]), O(a[0], G.commutator(a[1], a[2])) * O(a[1], a[2])};
  });
  add("(y,z)^x ~ <x,{y,z}> (y,z)", F::Generating, 3, [](const FiniteGroup& G, Args a) {
    return RelationPair{U(a[1], a[2]).conj(G, a[0]), O(a[0], G.unoriented_commutator(a[1], a[2])) * U(a[1], a[2])};
  });
  add("(y^x,z^x)^-1 ~ (x,{y,z}^-1)(y,z)", F::Generating, 3, [](const FiniteGroup& G, Args a) {
    return RelationPair{U(a[1], a[2]).conj(G, a[0]).inverse(),
                        U(a[0], G.inv(G.unoriented_commutator(a[1], a[2]))) * U(a[1], a[2])};
  });

  // consequences
  add("(1) ~ 1", F::Derived, 0, [](const FiniteGroup&, Args) { return RelationPair{S(kIdentity), kOne}; });
  add("(x^-1) ~ (x)^-1", F::Derived, 1,
      [](const FiniteGroup& G, Args a) { return RelationPair{S(G.inv(a[0])), S(a[0]).inverse()}; });
  add("(x,1) ~ 1", F::Derived, 1, [](const FiniteGroup&, Args a) { return RelationPair{U(a[0], kIdentity), kOne}; });
  add("<x,x> ~ 1", F::Derived, 1, [](const FiniteGroup&, Args a) { return RelationPair{O(a[0], a[0]), kOne}; });
  add("(x,x) ~ (x)", F::Derived, 1, [](const FiniteGroup&, Args a) { return RelationPair{U(a[0], a[0]), S(a[0])}; });
  add("(x) ~ (1,x)", F::Derived, 1, [](const FiniteGroup&, Args a) { return RelationPair{S(a[0]), U(kIdentity, a[0])}; });
  add("<x,y> ~ <y,x>^-1", F::Derived, 2,
      [](const FiniteGroup&, Args a) { return RelationPair{O(a[0], a[1]), O(a[1], a[0]).inverse()}; });
  add("(x,y)^-1 ~ (x^-1,y^-1)^x", F::Derived, 2, [](const FiniteGroup& G, Args a) {
    return RelationPair{U(a[0], a[1]).inverse(), U(G.inv(a[0]), G.inv(a[1])).conj(G, a[0])};
  });
  add("(xy,z) ~ (y,z)^x <x,z^-1>", F::Derived, 3, [](const FiniteGroup& G, Args a) {
    return RelationPair{U(G.mul(a[0], a[1]), a[2]), U(a[1], a[2]).conj(G, a[0]) * O(a[0], G.inv(a[2]))};
  });
  add("(xy,z) ~ <y,z>^x (x,z)", F::Derived, 3, [](const FiniteGroup& G, Args a) {
    return RelationPair{U(G.mul(a[0], a[1]), a[2]), O(a[1], a[2]).conj(G, a[0]) * U(a[0], a[2])};
  });
  add("<xy,z> ~ <y,z>^x <x,z>", F::Derived, 3, [](const FiniteGroup& G, Args a) {
    return RelationPair{O(G.mul(a[0], a[1]), a[2]), O(a[1], a[2]).conj(G, a[0]) * O(a[0], a[2])};
  });
  add("(z1 z2) ~ <z1^-1,z1 z2>^z1 (z1)(z2)", F::Derived, 2, [](const FiniteGroup& G, Args a) {
    Elem p = G.mul(a[0], a[1]);
    return RelationPair{S(p), O(G.inv(a[0]), p).conj(G, a[0]) * S(a[0]) * S(a[1])};
  });
  add("(z1)(z2) ~ <z1,z1 z2>(z1 z2)", F::Derived, 2, [](const FiniteGroup& G, Args a) {
    Elem p = G.mul(a[0], a[1]);
    return RelationPair{S(a[0]) * S(a[1]), O(a[0], p) * S(p)};
  });
  add("(z1 z2) ~ <z1 z2,z1>(z1)(z2)", F::Derived, 2, [](const FiniteGroup& G, Args a) {
    Elem p = G.mul(a[0], a[1]);
    return RelationPair{S(p), O(p, a[0]) * S(a[0]) * S(a[1])};
  });
  add("(z1)(z2) ~ <z1 z2,z1^-1>^z1 (z1 z2)", F::Derived, 2, [](const FiniteGroup& G, Args a) {
    Elem p = G.mul(a[0], a[1]);
    return RelationPair{S(a[0]) * S(a[1]), O(p, G.inv(a[0])).conj(G, a[0]) * S(p)};
  });
  add("(y,z) ~ <y,z>(z)", F::Derived, 2,
      [](const FiniteGroup&, Args a) { return RelationPair{U(a[0], a[1]), O(a[0], a[1]) * S(a[1])}; });
  add("(y,z) ~ (z)^y <y,z^-1>", F::Derived, 2, [](const FiniteGroup& G, Args a) {
    return RelationPair{U(a[0], a[1]), S(a[1]).conj(G, a[0]) * O(a[0], G.inv(a[1]))};
  });
  add("(xy,x) ~ (y,x)^x", F::Derived, 2, [](const FiniteGroup& G, Args a) {
    return RelationPair{U(G.mul(a[0], a[1]), a[0]), U(a[1], a[0]).conj(G, a[0])};
  });
  add("(a)(b) ~ (b^-1)^a (ab^2)", F::Derived, 2, [](const FiniteGroup& G, Args a) {
    return RelationPair{S(a[0]) * S(a[1]), S(G.inv(a[1])).conj(G, a[0]) * S(G.mul(a[0], G.mul(a[1], a[1])))};
  });
  add("(z)(x,y) ~ (x^-1,y^-1)^(zx) (z{x,y})", F::Derived, 3, [](const FiniteGroup& G, Args a) {
    Elem z = a[0], x = a[1], y = a[2];
    return RelationPair{S(z) * U(x, y),
                        U(G.inv(x), G.inv(y)).conj(G, G.mul(z, x)) * S(G.mul(z, G.unoriented_commutator(x, y)))};
  });

  add("(z)<x,y> ~ <y,x>^z (z[x,y])", F::Conjectured, 3, [](const FiniteGroup& G, Args a) {
    Elem z = a[0], x = a[1], y = a[2];
    return RelationPair{S(z) * O(x, y), O(y, x).conj(G, z) * S(G.mul(z, G.commutator(x, y)))};
  });
  return v;
}

}  // namespace

const std::vector<RelationSpec>& relation_specs() {
  static const std::vector<RelationSpec> specs = build_specs();
  return specs;
}

void for_each_instance(const FiniteGroup& g, const RelationSpec& spec, const VerificationOptions& options,
                       const std::function<void(const RelationPair&)>& visit) {
  const std::size_t n = g.order();
  const auto arity = static_cast<std::size_t>(spec.elements);
  std::vector<Elem> args(arity, kIdentity);
  std::vector<long long> ints(spec.with_exponents ? 2 : 0, 0);

  if (n <= options.exhaustive_limit) {
    auto run_ints = [&] {
      if (!spec.with_exponents) {
        visit(spec.build(g, args, ints));
        return;
      }
      auto o = static_cast<long long>(g.element_order(args[0]));
      for (long long i = -o; i <= o; ++i)
        for (long long j = -o; j <= o; ++j) {
          ints[0] = i;
          ints[1] = j;
          visit(spec.build(g, args, ints));
        }
    };
    // odometer over G^arity
    while (true) {
      run_ints();
      std::size_t pos = 0;
      while (pos < arity && ++args[pos] == n) args[pos++] = kIdentity;
      if (pos == arity) break;
    }
    return;
  }

  std::mt19937_64 rng(options.seed ^ std::hash<std::string>{}(spec.name));
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
  for (std::size_t s = 0; s < options.samples; ++s) {
    for (auto& x : args) x = pick(rng);
    if (spec.with_exponents) {
      auto o = static_cast<long long>(arity ? g.element_order(args[0]) : 1);
      std::uniform_int_distribution<long long> e(-o, o);
      ints[0] = e(rng);
      ints[1] = e(rng);
    }
    visit(spec.build(g, args, ints));
  }
}

std::vector<RelationPair> relation_instances(const FiniteGroup& g, RelationFamily family,
                                             const VerificationOptions& options) {
  std::vector<RelationPair> out;
  for (const RelationSpec& spec : relation_specs())
    if (spec.family == family) for_each_instance(g, spec, options, [&](const RelationPair& p) { out.push_back(p); });
  return out;
}

bool verify_relation_pair(const UWord& lhs, const UWord& rhs, const SquareCentralExtension& e) {
  const FiniteGroup& g = *e.base();
  if (canonical_image(lhs, g) != canonical_image(rhs, g))
    throw InvariantError("canonical images differ: " + lhs.format(g) + " vs " + rhs.format(g));
  return word_image(lhs, e) == word_image(rhs, e);
}

bool verify_relation_pair(const UWord& lhs, const UWord& rhs, const CocycleBasis& basis) {
  return verify_relation_pair(lhs, rhs, universal_probe(basis));
}

SquareCentralExtension universal_probe(const CocycleBasis& basis) {
  return SquareCentralExtension::from_cocycles(basis.group, basis.h2_reps);
}

bool VerificationReport::all_pass() const {
  for (const auto& r : relations)
    if (r.family != RelationFamily::Conjectured && !r.passed()) return false;
  return true;
}

std::size_t VerificationReport::instances() const {
  std::size_t total = 0;
  for (const auto& r : relations) total += r.instances;
  return total;
}

VerificationReport verify_relations(const std::string& group_name, const CocycleBasis& basis,
                                    const VerificationOptions& options) {
  const FiniteGroup& g = *basis.group;
  SquareCentralExtension probe = universal_probe(basis);
  VerificationReport report;
  report.group = group_name;
  report.order = g.order();
  report.dim_h2 = basis.dim();
  report.exhaustive = g.order() <= options.exhaustive_limit;
  report.seed = options.seed;
  for (const RelationSpec& spec : relation_specs()) {
    RelationStats stats{spec.name, spec.family};
    for_each_instance(g, spec, options, [&](const RelationPair& p) {
      ++stats.instances;
      if (canonical_image(p.first, g) != canonical_image(p.second, g)) {
        ++stats.canonical_failures;
        return;
      }
      if (!(word_image(p.first, probe) == word_image(p.second, probe))) ++stats.extension_failures;
    });
    report.relations.push_back(std::move(stats));
  }
  return report;
}

MClass is_trivial_in_M(const UWord& w, const CocycleBasis& basis) { return is_trivial_in_M(w, universal_probe(basis)); }

MClass is_trivial_in_M(const UWord& w, const SquareCentralExtension& probe) {
  const FiniteGroup& g = *probe.base();
  if (canonical_image(w, g) != kIdentity) throw UsageError("word is not in the kernel of the canonical map");
  auto image = word_image(w, probe);
  MClass out;
  out.coordinates = BitVector(probe.fiber_dim());
  for (std::size_t j = 0; j < probe.fiber_dim(); ++j)
    if ((image.a >> j) & 1U) out.coordinates.set(j, true);
  out.trivial = out.coordinates.none();
  return out;
}

}  // namespace usm
