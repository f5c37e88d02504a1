// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero only
// when a criterion fails that is not listed as a known failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "usm/cobordism.hpp"
#include "usm/hopf.hpp"
#include "usm/multiplier.hpp"
#include "usm/relations.hpp"

using namespace usm;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail << "failed: ";
    else detail << "; ";
    detail << what;
    pass = false;
  }
};

GroupPtr group(const std::string& name) { return catalog(name).group; }

// Abelian groups of order n as products of prime-power cyclic factors.
std::vector<std::string> abelian_types(std::size_t n) {
  std::vector<std::vector<std::vector<std::size_t>>> per_prime;  // per prime: list of factor lists
  std::size_t m = n;
  for (std::size_t p = 2; m > 1; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e == 0) continue;
    std::vector<std::vector<std::size_t>> options;
    std::function<void(int, int, std::vector<std::size_t>&)> parts = [&](int left, int max, std::vector<std::size_t>& cur) {
      if (left == 0) {
        options.push_back(cur);
        return;
      }
      for (int k = std::min(left, max); k >= 1; --k) {
        std::size_t q = 1;
        for (int i = 0; i < k; ++i) q *= p;
        cur.push_back(q);
        parts(left - k, k, cur);
        cur.pop_back();
      }
    };
    std::vector<std::size_t> cur;
    parts(e, e, cur);
    per_prime.push_back(options);
  }
  std::vector<std::string> out;
  std::function<void(std::size_t, std::string)> combine = [&](std::size_t i, std::string acc) {
    if (i == per_prime.size()) {
      out.push_back(acc.empty() ? "cyclic:1" : "abelian:" + acc);
      return;
    }
    for (const auto& f : per_prime[i]) {
      std::string s = acc;
      for (std::size_t q : f) s += (s.empty() ? "" : "x") + std::to_string(q);
      combine(i + 1, s);
    }
  };
  combine(0, "");
  return out;
}

std::vector<std::string> abelian_up_to(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t k = 1; k <= n; ++k)
    for (auto& s : abelian_types(k)) out.push_back(s);
  return out;
}

// Catalog groups of order <= 16.
std::vector<std::string> small_catalog() {
  std::vector<std::string> out;
  for (int n = 1; n <= 16; ++n) out.push_back("cyclic:" + std::to_string(n));
  for (int n = 1; n <= 8; ++n) out.push_back("dihedral:" + std::to_string(n));
  for (int n = 1; n <= 3; ++n) out.push_back("symmetric:" + std::to_string(n));
  out.push_back("quaternion:8");
  out.push_back("klein4");
  for (const auto& s : abelian_up_to(16))
    if (s.rfind("abelian:", 0) == 0 && s.find('x') != std::string::npos) out.push_back(s);
  return out;
}

std::size_t rank_of(const std::vector<BitVector>& v, std::size_t cols) { return span_of(cols, v).rank(); }

Outcome cyclic_multipliers() {
  Outcome o;
  for (int n = 2; n <= 16; ++n) {
    auto g = group("cyclic:" + std::to_string(n));
    auto b = h2(g);
    std::size_t want = n % 2 == 0 ? 1 : 0;
    o.check(b.dim() == want, "dim M(Z" + std::to_string(n) + ")=" + std::to_string(b.dim()));
    if (n % 2 == 0) {
      UWord w = UWord::parse(*g, "S[x^" + std::to_string(n / 2) + "]");
      o.check(!is_trivial_in_M(w, b).trivial, "S[x^n/2] trivial for n=" + std::to_string(n));
    }
  }
  if (o.pass) o.detail << "n=2..16";
  return o;
}

Outcome dihedral_h2() {
  Outcome o;
  for (int n = 2; n <= 8; ++n) {
    auto g = group("dihedral:" + std::to_string(n));
    auto b = h2(g);
    auto probe = universal_probe(b);
    std::vector<std::string> words = {"S[a]"};
    if (n % 2 == 0) words = {"S[c^" + std::to_string(n / 2) + "]", "S[a]", "S[ac]"};
    std::size_t want = n % 2 == 0 ? 3 : 1;
    std::string tag = "D" + std::to_string(2 * n);
    o.check(b.dim() == want, "dim H2(" + tag + ")=" + std::to_string(b.dim()));
    std::vector<BitVector> coords;
    for (const auto& text : words) {
      MClass c = is_trivial_in_M(UWord::parse(*g, text), probe);
      o.check(!c.trivial, text + " trivial in " + tag);
      coords.push_back(c.coordinates);
    }
    o.check(rank_of(coords, b.dim()) == want, "generator words of " + tag + " do not span");
  }
  if (o.pass) o.detail << "n=2..8, generator words form a basis";
  return o;
}

Outcome symmetric_h2() {
  Outcome o;
  const std::size_t want[] = {0, 1, 1, 2, 2};
  std::ostringstream dims;
  for (int n = 1; n <= 5; ++n) {
    std::size_t d = h2(group("symmetric:" + std::to_string(n))).dim();
    dims << (n > 1 ? "," : "") << d;
    o.check(d == want[n - 1], "S" + std::to_string(n) + " dim " + std::to_string(d));
  }
  if (o.pass) o.detail << "dims " << dims.str();
  return o;
}

Outcome triviality() {
  Outcome o;
  std::vector<std::string> names = abelian_up_to(32);
  std::size_t abelian = names.size();
  for (int n = 1; n <= 16; ++n) names.push_back("dihedral:" + std::to_string(n));
  for (int n = 1; n <= 5; ++n) names.push_back("symmetric:" + std::to_string(n));
  for (const auto& name : names) {
    auto r = multiplier_report(name, h2(group(name)));
    o.check(r.dim_b0 == 0, name + " dim B0=" + std::to_string(r.dim_b0));
    o.check(r.routes_agree.value_or(false), name + " routes disagree");
  }
  if (o.pass) o.detail << abelian << " abelian types, 16 dihedral, 5 symmetric";
  return o;
}

// Known failure: B0 comes out zero here because Klein bottle classes span M.
// Passing parts are reported too.
Outcome example_64() {
  Outcome o;
  auto e = catalog("smallgroup:64:182");
  auto b = h2(e.group);
  auto r = multiplier_report(e.name, b);
  UWord w = UWord::parse(*e.group, "O[a,c] O[ab,c]");
  MClass m = is_trivial_in_M(w, b);
  B0Class c = class_in_b0(w, b, r);
  o.check(b.dim() == 4, "dim H2=" + std::to_string(b.dim()));
  o.check(r.dim_b0 >= 1, "dim B0=" + std::to_string(r.dim_b0) + " (expected >=1)");
  o.check(!c.trivial, "O[a,c]O[ab,c] trivial in B0");
  std::ostringstream extra;
  extra << " | dim H2=" << b.dim() << " (ok), O[a,c]O[ab,c] nonzero in M=" << (m.trivial ? "no" : "yes")
        << ", restrictions route dim B0=" << r.dim_b0_restrictions.value_or(99);
  for (const auto& p : e.presentations) {
    HopfMultiplier h = hopf_multiplier(p);
    extra << ", cover route dim B0=" << h.dim - h.surface_dim;
  }
  extra << "; Klein bottle classes span M";
  o.detail << extra.str();
  return o;
}

std::vector<std::string> route_groups() {
  std::vector<std::string> out;
  for (int n = 1; n <= 16; ++n) out.push_back("cyclic:" + std::to_string(n));
  for (int n = 1; n <= 16; ++n) out.push_back("dihedral:" + std::to_string(n));
  for (int n = 1; n <= 5; ++n) out.push_back("symmetric:" + std::to_string(n));
  out.push_back("quaternion:8");
  out.push_back("klein4");
  for (const char* a : {"abelian:2x2", "abelian:2x4", "abelian:2x2x2", "abelian:4x4", "abelian:2x2x4",
                        "abelian:2x2x2x2", "abelian:2x8", "abelian:3x3", "abelian:2x6", "abelian:2x2x2x2x2"})
    out.push_back(a);
  out.push_back("smallgroup:64:182");
  return out;
}

Outcome route_agreement() {
  Outcome o;
  std::size_t presentations = 0, groups = 0;
  for (const auto& name : route_groups()) {
    auto e = catalog(name);
    auto b = h2(e.group);
    auto r = multiplier_report(name, b);
    ++groups;
    o.check(r.routes_agree.value_or(false), name + ": functionals vs restrictions");
    for (const auto& p : e.presentations) {
      if (e.group->order() > 64) continue;
      // the cover of Z2^5 has 2^20 or more elements
      HopfMultiplier h = hopf_multiplier(p, std::size_t{1} << 23);
      ++presentations;
      o.check(h.dim == b.dim(), name + ": Hopf " + std::to_string(h.dim) + " vs H2 " + std::to_string(b.dim()));
      o.check(h.dim - h.surface_dim == r.dim_b0, name + ": cover B0 vs functional B0");
    }
  }
  if (o.pass) o.detail << groups << " groups, " << presentations << " presentations";
  return o;
}

Outcome relation_calculus() {
  Outcome o;
  std::size_t instances = 0;
  std::vector<std::string> names = small_catalog();
  std::vector<std::string> large = {"symmetric:4", "dihedral:12", "dihedral:16", "abelian:2x2x2x2x2",
                                    "smallgroup:64:182"};
  names.insert(names.end(), large.begin(), large.end());
  VerificationOptions opt;
  opt.samples = 10000;
  opt.seed = 2024;
  for (const auto& name : names) {
    auto rep = verify_relations(name, h2(group(name)), opt);
    instances += rep.instances();
    for (const auto& r : rep.relations) {
      if (r.family == RelationFamily::Conjectured) continue;
      o.check(r.passed(), name + ": " + r.name);
    }
  }
  if (o.pass)
    o.detail << names.size() << " groups, " << instances << " instances, seed " << opt.seed << " above order 16";
  return o;
}

Outcome well_definedness() {
  Outcome o;
  std::size_t cycles = 0;
  for (const char* name : {"cyclic:2", "cyclic:4", "klein4", "symmetric:3", "dihedral:4", "quaternion:8",
                           "abelian:2x2x2", "dihedral:6", "symmetric:4", "abelian:4x4", "smallgroup:64:182"}) {
    auto g = group(name);
    auto b = h2(g);
    const std::size_t n = g->order();
    std::vector<SurfaceCycle> cs;
    for (auto [x, y] : commuting_pairs(*g)) cs.push_back(surface_cycle(g, torus_relator(x, y)));
    for (auto [x, y] : klein_pairs(*g)) cs.push_back(surface_cycle(g, klein_relator(x, y)));
    for (Elem z : involutions(*g)) cs.push_back(surface_cycle(g, projective_relator(z)));
    cycles += cs.size();
    for (const auto& c : cs) o.check(has_zero_boundary(c), std::string(name) + ": cycle with boundary");
    // coboundaries of the indicator 1-cochains span B2
    for (std::size_t k = 0; k + 1 < n && o.pass; ++k) {
      BitVector phi(n - 1);
      phi.set(k);
      Cochain2 d = coboundary(g, phi);
      for (const auto& c : cs)
        if (eval(d, c)) {
          o.check(false, std::string(name) + ": functional nonzero on a coboundary");
          break;
        }
    }
    std::vector<std::vector<bool>> base(b.dim());
    for (std::size_t j = 0; j < b.dim(); ++j)
      for (const auto& c : cs) base[j].push_back(eval(b.h2_reps[j], c));
    std::mt19937_64 rng(17);
    for (int t = 0; t < 1000 && o.pass; ++t) {
      BitVector phi(n - 1);
      for (std::size_t k = 0; k + 1 < n; ++k)
        if (rng() & 1U) phi.set(k);
      Cochain2 d = coboundary(g, phi);
      for (std::size_t j = 0; j < b.dim(); ++j) {
        Cochain2 w = b.h2_reps[j];
        w ^= d;
        for (std::size_t i = 0; i < cs.size(); ++i)
          if (eval(w, cs[i]) != base[j][i]) o.check(false, std::string(name) + ": eval changed under w+d(phi)");
      }
    }
  }
  if (o.pass) o.detail << "11 groups, " << cycles << " cycles, 1000 random coboundaries each";
  return o;
}

SurfaceAction action(GroupPtr g, std::vector<std::pair<Elem, Elem>> pairs, std::vector<Elem> z) {
  SurfaceAction s{g, z.empty(), std::move(pairs), std::move(z)};
  s.validate();
  return s;
}

Outcome extendability() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& name : small_catalog()) {
    auto g = group(name);
    auto b = h2(g);
    auto r = multiplier_report(name, b);
    auto expect = [&](const SurfaceAction& s, Verdict v, const std::string& what) {
      ++checked;
      o.check(is_extendable(s, b, r).verdict == v, name + ": " + what + " " + s.format());
    };
    for (auto [x, y] : commuting_pairs(*g)) expect(action(g, {{x, y}}, {}), Verdict::Extendable, "torus");
    for (auto [x, y] : klein_pairs(*g))
      expect(action(g, {}, {g->mul(x, y), g->conj(g->inv(y), g->inv(x))}), Verdict::Extendable, "Klein");
    for (Elem z : involutions(*g)) expect(action(g, {}, {z}), Verdict::Extendable, "RP2");
    if (g->order() % 2 == 1) expect(action(g, {}, {kIdentity}), Verdict::TrivialRP2Component, "trivial RP2");
    for (Elem x = 0; x < g->order(); ++x)
      for (Elem y = 0; y < g->order(); ++y)
        o.check(klein_from_moebius(*g, x, y) == klein_monodromy(*g, x, y), name + ": two Moebius bands");
  }
  std::mt19937_64 rng(23);
  for (const auto& name : abelian_up_to(32)) {
    auto g = group(name);
    auto b = h2(g);
    auto r = multiplier_report(name, b);
    const std::size_t n = g->order();
    auto expect = [&](const SurfaceAction& s) {
      ++checked;
      Verdict want = (n * static_cast<std::size_t>(std::llabs(s.chi_quotient()))) % 2 == 1 ? Verdict::TrivialRP2Component
                                                                                          : Verdict::Extendable;
      o.check(is_extendable(s, b, r).verdict == want, name + ": " + s.format());
    };
    // genus one and one or two crosscaps exhaustively, higher genus sampled
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        expect(action(g, {{x, y}}, {}));
        if (g->mul(g->mul(x, x), g->mul(y, y)) == kIdentity) expect(action(g, {}, {x, y}));
      }
    for (Elem z = 0; z < n; ++z)
      if (g->mul(z, z) == kIdentity) expect(action(g, {}, {z}));
    for (int t = 0; t < 100; ++t) {
      std::vector<std::pair<Elem, Elem>> pairs;
      for (int i = 0; i < 2 + t % 2; ++i) pairs.emplace_back(rng() % n, rng() % n);
      expect(action(g, pairs, {}));
      std::vector<Elem> z;
      Elem acc = kIdentity;
      for (int i = 0; i < 2 + t % 3; ++i) {
        z.push_back(static_cast<Elem>(rng() % n));
        acc = g->mul(acc, g->mul(z.back(), z.back()));
      }
      // close up with one more crosscap when acc is a square
      for (Elem c = 0; c < n; ++c)
        if (g->mul(g->mul(c, c), acc) == kIdentity) {
          z.push_back(c);
          expect(action(g, {}, z));
          break;
        }
    }
  }
  if (o.pass) o.detail << checked << " surfaces";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
    bool known_failure;
  };
  std::vector<Criterion> criteria = {
      {1, "cyclic multipliers", cyclic_multipliers, false},
      {2, "dihedral H2", dihedral_h2, false},
      {3, "symmetric H2", symmetric_h2, false},
      {4, "B0 trivial for abelian, dihedral, symmetric", triviality, false},
      {5, "order 64 example", example_64, true},
      {6, "route agreement", route_agreement, false},
      {7, "relation calculus", relation_calculus, false},
      {8, "cohomological well-definedness", well_definedness, false},
      {9, "extendability verdicts", extendability, false},
  };
  int unexpected = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d: %s  %s  (%s) [%.1fs]%s\n", c.id, o.pass ? "PASS" : "FAIL", c.title,
                o.detail.str().c_str(), secs, !o.pass && c.known_failure ? " [known]" : "");
    std::fflush(stdout);
    if (!o.pass && !c.known_failure) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
