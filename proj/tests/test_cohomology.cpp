#include <random>
#include <set>

#include "doctest.h"
#include "usm/cohomology.hpp"
#include "usm/error.hpp"

using namespace usm;

namespace {

GroupPtr group(const std::string& name) { return catalog(name).group; }

// Brute force over every normalized cochain; feasible while (n-1)^2 <= 16.
std::pair<std::size_t, std::size_t> brute_force_z2_b2(GroupPtr g) {
  const std::size_t n = g->order();
  const std::size_t w = (n - 1) * (n - 1);
  std::size_t cocycles = 0;
  for (std::uint32_t m = 0; m < (1U << w); ++m) {
    Cochain2 c = Cochain2::zero(g);
    for (std::size_t i = 0; i < w; ++i)
      if ((m >> i) & 1) c.values.set(i);
    if (is_cocycle(c)) ++cocycles;
  }
  std::set<std::string> coboundaries;
  for (std::uint32_t m = 0; m < (1U << (n - 1)); ++m) {
    BitVector phi(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i)
      if ((m >> i) & 1) phi.set(i);
    coboundaries.insert(coboundary(g, phi).values.to_string());
  }
  auto log2 = [](std::size_t x) {
    std::size_t d = 0;
    while ((std::size_t{1} << d) < x) ++d;
    return d;
  };
  return {log2(cocycles), log2(coboundaries.size())};
}

BitVector random_phi(std::size_t n, std::mt19937_64& rng) {
  BitVector phi(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (rng() & 1) phi.set(i);
  return phi;
}

}  // namespace

TEST_CASE("small spaces") {
  CHECK(cocycle_space(group("cyclic:1")).rank() == 0);
  CHECK(coboundary_space(group("cyclic:1")).rank() == 0);
  CHECK(cocycle_space(group("cyclic:2")).rank() == 1);
  CHECK(coboundary_space(group("cyclic:2")).rank() == 0);
  // B2 = C1 / Hom(G,F2) has dimension 3 - 2
  auto v4 = h2(group("klein4"));
  CHECK(v4.b2.rank() == 1);
  CHECK(v4.z2.rank() == 4);
  CHECK(v4.dim() == 3);
}

TEST_CASE("cocycle ranks match a brute-force enumeration of all cochains") {
  for (const char* name : {"cyclic:2", "cyclic:3", "klein4", "cyclic:4", "cyclic:5"}) {
    CAPTURE(name);
    auto g = group(name);
    auto [z, b] = brute_force_z2_b2(g);
    auto basis = h2(g);
    CHECK(basis.z2.rank() == z);
    CHECK(basis.b2.rank() == b);
  }
}

TEST_CASE("both cocycle solvers give the same echelon basis") {
  for (const char* name : {"cyclic:6", "klein4", "dihedral:4", "quaternion:8", "symmetric:3", "symmetric:4",
                           "abelian:2x2x2", "dihedral:6"}) {
    CAPTURE(name);
    auto g = group(name);
    CHECK(detail::cocycles_by_full_system(*g).rows() == detail::cocycles_by_generators(*g).rows());
  }
}

TEST_CASE("H2 dimensions") {
  for (int n = 2; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(h2(group("cyclic:" + std::to_string(n))).dim() == (n % 2 == 0 ? 1U : 0U));
  }
  CHECK(h2(group("dihedral:3")).dim() == 1);
  CHECK(h2(group("dihedral:5")).dim() == 1);
  CHECK(h2(group("dihedral:4")).dim() == 3);
  CHECK(h2(group("dihedral:6")).dim() == 3);
  CHECK(h2(group("symmetric:3")).dim() == 1);
  CHECK(h2(group("symmetric:4")).dim() == 2);
  CHECK(h2(group("quaternion:8")).dim() == 2);
  CHECK(h2(group("abelian:2x2x2")).dim() == 6);
}

TEST_CASE("symmetric group of degree 5 through the generator solver") {
  auto basis = h2(group("symmetric:5"));
  CHECK(basis.dim() == 2);
  for (const auto& r : basis.h2_reps) CHECK(is_cocycle(r, 1000, 5));
}

TEST_CASE("the order-64 system streams within the memory budget") {
  auto g = group("smallgroup:64:182");
  auto basis = h2(g);
  CHECK(basis.dim() == 4);
  CHECK(basis.z2.memory_bytes() <= 8U << 20);
}

TEST_CASE("size cap") {
  CHECK_THROWS_AS(h2(group("cyclic:40"), CohomologyLimits{32}), ResourceError);
}

TEST_CASE("coordinates and coboundaries") {
  std::mt19937_64 rng(11);
  for (const char* name : {"dihedral:4", "quaternion:8", "cyclic:6"}) {
    auto g = group(name);
    auto basis = h2(g);
    for (std::size_t i = 0; i < basis.dim(); ++i) {
      BitVector e(basis.dim());
      e.set(i);
      Cochain2 omega = basis.h2_reps[i];
      omega ^= coboundary(g, random_phi(g->order(), rng));
      CHECK(basis.coordinates(omega) == e);
      CHECK_FALSE(basis.is_coboundary(omega));
    }
    Cochain2 d = coboundary(g, random_phi(g->order(), rng));
    CHECK(basis.is_coboundary(d));
    CHECK(basis.coordinates(d).none());
    Cochain2 bad = Cochain2::zero(g);
    bad.set(1, 1, true);
    if (!is_cocycle(bad)) CHECK_THROWS_AS(basis.coordinates(bad), InvariantError);
  }
}

TEST_CASE("restriction") {
  auto z4 = group("cyclic:4");
  auto basis = h2(z4);
  Elem x = z4->generators()[0];
  auto sub = subgroup_generated(z4, std::vector<Elem>{z4->mul(x, x)});
  auto sub_basis = h2(sub.group);
  auto m = restriction_matrix(basis, sub_basis, sub.inclusion);
  // the class of Z8 -> Z4 pulls back to the nonsplit Z4 -> Z2
  REQUIRE(m.size() == 1);
  CHECK(m[0].get(0));

  auto trivial = subgroup_generated(z4, std::vector<Elem>{});
  CHECK(restrict(basis.h2_reps[0], trivial.inclusion).values.size() == 0);

  // functoriality D8 > V4 > Z2
  auto d8 = group("dihedral:4");
  auto v = subgroup_generated(d8, std::vector<Elem>{d8->parse_element("a"), d8->parse_element("c^2")});
  auto z = subgroup_generated(v.group, std::vector<Elem>{v.group->generators()[0]});
  GroupHom composite{z.group, d8, {}};
  for (Elem e = 0; e < z.group->order(); ++e) composite.map.push_back(v.inclusion(z.inclusion(e)));
  for (const auto& rep : h2(d8).h2_reps) {
    CHECK(restrict(restrict(rep, v.inclusion), z.inclusion).values == restrict(rep, composite).values);
  }
}

TEST_CASE("surface cycles") {
  auto g = group("klein4");
  auto basis = h2(g);
  Elem a = g->generators()[0];
  Elem b = g->generators()[1];

  auto rp2 = surface_cycle(g, projective_relator(a));
  CHECK(rp2.simplices == std::vector<std::pair<Elem, Elem>>{{a, a}});

  // torus cycle is homologous to [x|y] + [y|x]
  for (Elem x = 0; x < 4; ++x) {
    for (Elem y = 0; y < 4; ++y) {
      auto c = surface_cycle(g, torus_relator(x, y));
      CHECK(has_zero_boundary(c));
      for (const auto& z : basis.z2.rows()) {
        Cochain2 omega{g, z};
        CHECK(eval(omega, c) == (omega(x, y) ^ omega(y, x)));
      }
    }
  }
  // a torus with one trivial edge bounds
  for (const auto& r : basis.h2_reps) CHECK_FALSE(eval(r, surface_cycle(g, torus_relator(a, kIdentity))));
  // the torus functional on (a,b) is nonzero on exactly one basis direction of the mixed class
  auto torus = surface_cycle(g, torus_relator(a, b));
  std::size_t nonzero = 0;
  for (const auto& r : basis.h2_reps) nonzero += eval(r, torus);
  CHECK(nonzero >= 1);

  auto s3 = group("symmetric:3");
  Elem t = s3->parse_element("(1 2)");
  Elem r = s3->parse_element("(1 2 3)");
  CHECK(has_zero_boundary(surface_cycle(s3, klein_relator(t, r))));

  CHECK_THROWS_AS(surface_cycle(g, SurfaceRelator{{1, 2}, {a, b}}), UsageError);
  CHECK_THROWS_AS(surface_cycle(s3, klein_relator(r, t)), UsageError);
  CHECK_THROWS_AS(surface_cycle(s3, SurfaceRelator{{1, 3}, {t}}), UsageError);
}

TEST_CASE("RP2 cycle detects the generator of H2(Z2)") {
  auto g = group("cyclic:2");
  auto basis = h2(g);
  Elem z = g->generators()[0];
  CHECK(eval(basis.h2_reps[0], surface_cycle(g, projective_relator(z))));
}

TEST_CASE("eval is well defined on classes and cycles") {
  std::mt19937_64 rng(5);
  for (const char* name : {"dihedral:4", "symmetric:3", "quaternion:8", "abelian:2x4"}) {
    auto g = group(name);
    auto basis = h2(g);
    for (Elem x = 0; x < g->order(); ++x) {
      for (Elem y = 0; y < g->order(); ++y) {
        std::vector<SurfaceRelator> relators;
        if (g->commutator(x, y) == kIdentity) relators.push_back(torus_relator(x, y));
        if (g->unoriented_commutator(x, y) == kIdentity) relators.push_back(klein_relator(x, y));
        for (auto& rel : relators) {
          auto c = surface_cycle(g, rel);
          CHECK(has_zero_boundary(c));
          // appending a cancelling pair v v^-1 on a fresh edge does not change the class
          SurfaceRelator longer = rel;
          int v = static_cast<int>(longer.values.size()) + 1;
          longer.values.push_back(x);
          longer.word.push_back(v);
          longer.word.push_back(-v);
          auto c2 = surface_cycle(g, longer);
          for (const auto& rep : basis.h2_reps) {
            CHECK(eval(coboundary(g, random_phi(g->order(), rng)), c) == false);
            Cochain2 shifted = rep;
            shifted ^= coboundary(g, random_phi(g->order(), rng));
            CHECK(eval(shifted, c) == eval(rep, c));
            CHECK(eval(rep, c2) == eval(rep, c));
          }
        }
      }
    }
  }
}
