#include "usm/cobordism.hpp"

#include <array>
#include <cctype>

#include "usm/error.hpp"
#include "usm/relations.hpp"

namespace usm {

Elem compose(const FiniteGroup& g, const ElementaryCobordism& c, std::span<const Elem> inputs) {
  if (inputs.size() != c.arity()) throw UsageError("wrong number of boundary monodromies");
  switch (c.kind) {
    case CobordismKind::Cylinder:
      return g.conj(c.conjugator, inputs[0]);
    case CobordismKind::Pants:
      return g.mul(inputs[0], inputs[1]);
    case CobordismKind::Disc:
      if (inputs[0] != kIdentity) throw UsageError("a disc only caps the trivial monodromy");
      return kIdentity;
    case CobordismKind::Moebius:
      return g.mul(inputs[0], inputs[0]);
  }
  return kIdentity;
}

Elem klein_monodromy(const FiniteGroup& g, Elem x, Elem y) { return g.unoriented_commutator(x, y); }

Elem handle_monodromy(const FiniteGroup& g, std::span<const std::pair<Elem, Elem>> pairs) {
  Elem acc = kIdentity;
  for (auto [x, y] : pairs) acc = g.mul(acc, g.commutator(x, y));
  return acc;
}

Elem klein_from_moebius(const FiniteGroup& g, Elem x, Elem y) {
  Elem z1 = g.mul(x, y);
  Elem z2 = g.conj(g.inv(y), g.inv(x));
  std::array<Elem, 1> a{z1}, b{z2};
  std::array<Elem, 2> legs{compose(g, ElementaryCobordism::moebius(), a), compose(g, ElementaryCobordism::moebius(), b)};
  return compose(g, ElementaryCobordism::pants(), legs);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits on `sep` outside parentheses.
std::vector<std::string_view> split_top(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth < 0) throw UsageError("unbalanced parentheses in surface");
    if (s[i] == sep && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw UsageError("unbalanced parentheses in surface");
  out.push_back(trim(s.substr(start)));
  return out;
}

std::string_view unwrap(std::string_view s) {
  s = trim(s);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw UsageError("expected a parenthesized list");
  return s.substr(1, s.size() - 2);
}

long long parse_count(std::string_view token, std::string_view key) {
  if (token.substr(0, key.size()) != key) throw UsageError("expected " + std::string(key));
  std::string digits(token.substr(key.size()));
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw UsageError("bad count " + std::string(token));
  return std::stoll(digits);
}

}  // namespace

SurfaceAction SurfaceAction::parse(GroupPtr g, std::string_view text) {
  SurfaceAction s;
  s.group = g;
  text = trim(text);
  std::size_t sp = text.find_first_of(" \t");
  std::string_view shape = text.substr(0, sp);
  std::string_view rest = sp == std::string_view::npos ? std::string_view{} : trim(text.substr(sp));
  std::size_t sp2 = rest.find_first_of(" \t");
  std::string_view count = rest.substr(0, sp2);
  std::string_view data = sp2 == std::string_view::npos ? std::string_view{} : trim(rest.substr(sp2));

  if (shape == "orientable") {
    long long genus = parse_count(count, "g=");
    if (genus > 0) {
      if (data.substr(0, 6) != "pairs=") throw UsageError("expected pairs=");
      for (std::string_view item : split_top(data.substr(6), ';')) {
        auto xy = split_top(unwrap(item), ',');
        if (xy.size() != 2) throw UsageError("a handle needs two elements");
        s.pairs.emplace_back(g->parse_element(xy[0]), g->parse_element(xy[1]));
      }
    } else if (!data.empty() && trim(data) != "pairs=") {
      throw UsageError("a sphere carries no handles");
    }
    if (static_cast<long long>(s.pairs.size()) != genus) throw UsageError("genus does not match the number of pairs");
  } else if (shape == "nonorientable") {
    s.orientable = false;
    long long k = parse_count(count, "k=");
    if (k < 1) throw UsageError("a nonorientable surface needs k >= 1");
    if (data.substr(0, 2) != "z=") throw UsageError("expected z=");
    for (std::string_view item : split_top(unwrap(data.substr(2)), ';')) s.crosscaps.push_back(g->parse_element(item));
    if (static_cast<long long>(s.crosscaps.size()) != k) throw UsageError("k does not match the number of crosscaps");
  } else {
    throw UsageError("surface must start with 'orientable' or 'nonorientable'");
  }
  s.validate();
  return s;
}

std::string SurfaceAction::format() const {
  const FiniteGroup& g = *group;
  std::string out;
  if (orientable) {
    out = "orientable g=" + std::to_string(pairs.size());
    if (!pairs.empty()) out += " pairs=";
    for (std::size_t i = 0; i < pairs.size(); ++i)
      out += (i ? ";(" : "(") + g.label(pairs[i].first) + "," + g.label(pairs[i].second) + ")";
  } else {
    out = "nonorientable k=" + std::to_string(crosscaps.size()) + " z=(";
    for (std::size_t i = 0; i < crosscaps.size(); ++i) out += (i ? ";" : "") + g.label(crosscaps[i]);
    out += ")";
  }
  return out;
}

Elem SurfaceAction::relator_value() const {
  const FiniteGroup& g = *group;
  if (orientable) return handle_monodromy(g, pairs);
  Elem acc = kIdentity;
  for (Elem z : crosscaps) acc = g.mul(acc, g.mul(z, z));
  return acc;
}

void SurfaceAction::validate() const {
  if (!orientable && crosscaps.empty()) throw UsageError("a nonorientable surface needs k >= 1");
  if (relator_value() != kIdentity) throw UsageError("monodromy does not close up: the surface relator is not 1");
}

long long SurfaceAction::chi_quotient() const {
  return orientable ? 2 - 2 * static_cast<long long>(pairs.size()) : 2 - static_cast<long long>(crosscaps.size());
}

long long SurfaceAction::chi_total() const { return static_cast<long long>(group->order()) * chi_quotient(); }

UWord SurfaceAction::to_word() const {
  UWord w;
  if (orientable) {
    for (auto [x, y] : pairs) w *= UWord::o(x, y);
  } else {
    for (Elem z : crosscaps) w *= UWord::s(z);
  }
  return w;
}

SurfaceRelator SurfaceAction::to_relator() const {
  SurfaceRelator r;
  if (orientable) {
    for (auto [x, y] : pairs) {
      int a = static_cast<int>(r.values.size()) + 1;
      r.values.push_back(x);
      r.values.push_back(y);
      r.word.insert(r.word.end(), {a, a + 1, -a, -(a + 1)});
    }
  } else {
    for (Elem z : crosscaps) {
      int a = static_cast<int>(r.values.size()) + 1;
      r.values.push_back(z);
      r.word.insert(r.word.end(), {a, a});
    }
  }
  return r;
}

SurfaceCycle SurfaceAction::cycle() const { return surface_cycle(group, to_relator()); }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Extendable:
      return "Extendable";
    case Verdict::Obstructed:
      return "Obstructed";
    case Verdict::TrivialRP2Component:
      return "TrivialRP2Component";
  }
  return "?";
}

nlohmann::json to_json(const ExtendabilityResult& r) {
  return {{"verdict", to_string(r.verdict)}, {"chi_mod2", r.chi_mod2}, {"b0_coordinates", r.b0_coordinates.to_string()}};
}

ExtendabilityResult is_extendable(const SurfaceAction& s, const CocycleBasis& basis, const MultiplierReport& report) {
  s.validate();
  ExtendabilityResult out;
  out.chi_mod2 = static_cast<int>(((s.chi_total() % 2) + 2) % 2);
  out.b0_coordinates = BitVector(report.annihilator_basis.size());
  if (out.chi_mod2 == 1) {
    out.verdict = Verdict::TrivialRP2Component;
    return out;
  }
  B0Class c = class_in_b0(s.cycle(), basis, report);
  out.b0_coordinates = c.coordinates;
  out.verdict = c.trivial ? Verdict::Extendable : Verdict::Obstructed;
  return out;
}

}  // namespace usm
