#include "usm/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <random>
#include <sstream>

#include "usm/error.hpp"
#include "usm/todd_coxeter.hpp"

namespace usm {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

long long parse_int(std::string_view s, std::string_view context) {
  long long v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw UsageError("bad integer '" + std::string(s) + "' in " + std::string(context));
  }
  return v;
}

std::string strip_comment(std::string_view line) {
  auto pos = line.find('#');
  return std::string(trim(pos == std::string_view::npos ? line : line.substr(0, pos)));
}

std::string power_label(const std::string& name, long long k) {
  return k == 1 ? name : name + "^" + std::to_string(k);
}

// Compresses a word into runs, e.g. a a b -> "a^2b".
std::string word_label(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    int t = w[i];
    long long run = static_cast<long long>(j - i);
    out += power_label(names[static_cast<std::size_t>(std::abs(t) - 1)], t > 0 ? run : -run);
    i = j;
  }
  return out;
}

// Breadth-first closure of `gens` under right multiplication. Elements come
// out in canonical order (identity first) with the right Cayley graph.
template <class T, class Mul>
std::pair<std::vector<T>, std::vector<std::uint32_t>> closure(const T& identity, const std::vector<T>& gens,
                                                              Mul mul, std::size_t limit) {
  std::map<T, std::uint32_t> index;
  std::vector<T> elements{identity};
  index.emplace(identity, 0);
  const std::size_t k = gens.size();
  std::vector<std::uint32_t> graph;
  for (std::size_t v = 0; v < elements.size(); ++v) {
    for (std::size_t i = 0; i < k; ++i) {
      T w = mul(elements[v], gens[i]);
      auto it = index.find(w);
      if (it == index.end()) {
        if (elements.size() >= limit) {
          throw ResourceError("group closure exceeded the limit of " + std::to_string(limit) + " elements");
        }
        it = index.emplace(w, static_cast<std::uint32_t>(elements.size())).first;
        elements.push_back(std::move(w));
      }
      graph.push_back(it->second);
    }
  }
  return {std::move(elements), std::move(graph)};
}

}  // namespace

// ---------------------------------------------------------------------------
// Presentations and permutations

void Presentation::validate() const {
  const int n = static_cast<int>(generator_count());
  for (const Word& r : relators) {
    for (int t : r) {
      if (t == 0 || t > n || t < -n) throw UsageError("relator token out of range");
    }
  }
}

std::string Presentation::format_word(const Word& w) const {
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    int t = w[i];
    long long run = static_cast<long long>(j - i);
    if (!out.empty()) out += ' ';
    out += power_label(generator_names[static_cast<std::size_t>(std::abs(t) - 1)], t > 0 ? run : -run);
    i = j;
  }
  return out;
}

Word Presentation::parse_word(std::string_view text) const {
  Word w;
  for (std::string_view tok : split_ws(text)) {
    std::string_view name = tok;
    long long k = 1;
    if (auto caret = tok.find('^'); caret != std::string_view::npos) {
      name = tok.substr(0, caret);
      k = parse_int(tok.substr(caret + 1), tok);
    }
    auto it = std::find(generator_names.begin(), generator_names.end(), name);
    if (it == generator_names.end()) throw UsageError("unknown generator '" + std::string(name) + "'");
    int g = static_cast<int>(it - generator_names.begin()) + 1;
    for (long long i = 0; i < std::llabs(k); ++i) w.push_back(k > 0 ? g : -g);
  }
  return w;
}

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  bool have_gens = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    std::string line = strip_comment(raw);
    if (line.empty()) continue;
    std::string_view sv = line;
    if (sv.starts_with("gens:")) {
      if (have_gens) throw UsageError("duplicate 'gens:' line");
      for (auto tok : split_ws(sv.substr(5))) p.generator_names.emplace_back(tok);
      have_gens = true;
    } else if (sv.starts_with("rel:")) {
      if (!have_gens) throw UsageError("'rel:' before 'gens:'");
      p.relators.push_back(p.parse_word(sv.substr(4)));
    } else {
      throw UsageError("unrecognized presentation line: " + line);
    }
  }
  if (!have_gens) throw UsageError("presentation has no 'gens:' line");
  p.validate();
  return p;
}

std::string format_presentation(const Presentation& p) {
  std::string out = "gens:";
  for (const auto& g : p.generator_names) out += " " + g;
  out += '\n';
  for (const Word& r : p.relators) out += "rel: " + p.format_word(r) + '\n';
  return out;
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t max_point = degree;
  std::size_t i = 0;
  text = trim(text);
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') throw UsageError("expected '(' in cycle notation: " + std::string(text));
    auto close = text.find(')', i);
    if (close == std::string_view::npos) throw UsageError("unclosed cycle: " + std::string(text));
    std::vector<std::uint32_t> cycle;
    std::string body(text.substr(i + 1, close - i - 1));
    std::replace(body.begin(), body.end(), ',', ' ');
    for (auto tok : split_ws(body)) {
      long long v = parse_int(tok, "cycle");
      if (v < 1) throw UsageError("cycle points are 1-based");
      cycle.push_back(static_cast<std::uint32_t>(v - 1));
      max_point = std::max(max_point, static_cast<std::size_t>(v));
    }
    cycles.push_back(std::move(cycle));
    i = close + 1;
  }
  Permutation p(max_point);
  for (std::uint32_t j = 0; j < max_point; ++j) p[j] = j;
  std::vector<bool> moved(max_point, false);
  for (const auto& c : cycles) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (moved[c[j]]) throw UsageError("cycles are not disjoint: " + std::string(text));
      moved[c[j]] = true;
      p[c[j]] = c[(j + 1) % c.size()];
    }
  }
  return p;
}

std::string format_cycles(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::uint32_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += '(';
    std::uint32_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::vector<Permutation> parse_permutation_file(std::string_view text) {
  std::vector<Permutation> gens;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    std::string line = strip_comment(raw);
    if (line.empty()) continue;
    gens.push_back(parse_cycles(line));
  }
  return gens;
}

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup FiniteGroup::from_cayley_graph(std::span<const std::uint32_t> graph, std::size_t vertex_count,
                                           std::vector<std::string> generator_names, std::uint32_t start) {
  const std::size_t k = generator_names.size();
  if (vertex_count == 0 || graph.size() != vertex_count * k || start >= vertex_count) {
    throw InvariantError("malformed Cayley graph");
  }
  // every generator column must be a permutation of the vertices
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<bool> hit(vertex_count, false);
    for (std::size_t v = 0; v < vertex_count; ++v) {
      std::uint32_t w = graph[v * k + i];
      if (w >= vertex_count || hit[w]) throw InvariantError("Cayley graph column is not a permutation");
      hit[w] = true;
    }
  }
  constexpr auto kNone = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> relabel(vertex_count, kNone);
  std::vector<std::uint32_t> order{start};
  relabel[start] = 0;
  FiniteGroup g;
  g.tree_parent_.push_back(0);
  g.tree_gen_.push_back(0);
  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    std::uint32_t v = order[idx];
    for (std::size_t i = 0; i < k; ++i) {
      std::uint32_t w = graph[v * k + i];
      if (relabel[w] == kNone) {
        relabel[w] = static_cast<std::uint32_t>(order.size());
        order.push_back(w);
        g.tree_parent_.push_back(static_cast<Elem>(idx));
        g.tree_gen_.push_back(static_cast<std::uint32_t>(i));
      }
    }
  }
  if (order.size() != vertex_count) throw InvariantError("Cayley graph is not connected");
  const std::size_t n = vertex_count;
  g.order_ = n;
  g.generator_names_ = std::move(generator_names);
  g.graph_.resize(n * k);
  for (std::size_t idx = 0; idx < n; ++idx) {
    for (std::size_t i = 0; i < k; ++i) g.graph_[idx * k + i] = relabel[graph[order[idx] * k + i]];
  }
  for (std::size_t i = 0; i < k; ++i) g.generators_.push_back(g.graph_[i]);

  // inverse generator action, then inverses of all elements along tree words
  std::vector<Elem> inv_graph(n * k);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < k; ++i) inv_graph[g.graph_[v * k + i] * k + i] = static_cast<Elem>(v);
  }
  g.inverse_.assign(n, 0);
  for (Elem e = 1; e < n; ++e) {
    // e = parent * gen  =>  e^-1 = gen^-1 * parent^-1
    Elem gen_inv = inv_graph[0 * k + g.tree_gen_[e]];
    // right-multiply gen^-1 by the word of parent^-1, i.e. trace parent^-1's word
    Elem acc = gen_inv;
    Word w = g.word(g.inverse_[g.tree_parent_[e]]);
    for (int t : w) acc = g.graph_[acc * k + static_cast<std::size_t>(t - 1)];
    g.inverse_[e] = acc;
  }

  if (n <= kDenseTableLimit) {
    g.table_.resize(n * n);
    for (Elem a = 0; a < n; ++a) g.table_[a * n] = a;
    for (Elem b = 1; b < n; ++b) {
      Elem p = g.tree_parent_[b];
      std::size_t gi = g.tree_gen_[b];
      for (Elem a = 0; a < n; ++a) g.table_[a * n + b] = g.graph_[g.table_[a * n + p] * k + gi];
    }
  }

  g.labels_.resize(n);
  for (Elem e = 0; e < n; ++e) g.labels_[e] = word_label(g.word(e), g.generator_names_);
  return g;
}

FiniteGroup FiniteGroup::from_table(std::size_t order, std::vector<Elem> table, std::vector<std::string> labels) {
  if (order == 0 || table.size() != order * order) throw InvariantError("malformed multiplication table");
  if (order > kDenseTableLimit) throw ResourceError("table groups are limited to the dense regime");
  FiniteGroup g;
  g.order_ = order;
  g.table_ = std::move(table);
  g.inverse_.assign(order, 0);
  for (Elem a = 0; a < order; ++a) {
    if (g.table_[a] != a || g.table_[a * order] != a) throw InvariantError("0 is not the identity");
    bool found = false;
    for (Elem b = 0; b < order; ++b) {
      if (g.table_[a * order + b] == 0) {
        g.inverse_[a] = b;
        found = true;
        break;
      }
    }
    if (!found) throw InvariantError("element without inverse");
  }
  if (labels.empty()) {
    for (Elem a = 0; a < order; ++a) labels.push_back(a == 0 ? "1" : "g" + std::to_string(a));
  }
  g.set_labels(std::move(labels));
  g.verify_axioms();
  return g;
}

Elem FiniteGroup::mul(Elem a, Elem b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order_ + b];
  const std::size_t k = generator_names_.size();
  for (int t : word(b)) a = graph_[a * k + static_cast<std::size_t>(t - 1)];
  return a;
}

Elem FiniteGroup::pow(Elem a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Elem result = kIdentity;
  while (k > 0) {
    if (k & 1) result = mul(result, a);
    a = mul(a, a);
    k >>= 1;
  }
  return result;
}

Elem FiniteGroup::commutator(Elem x, Elem y) const { return mul(mul(x, y), mul(inv(x), inv(y))); }

Elem FiniteGroup::unoriented_commutator(Elem x, Elem y) const { return mul(mul(x, y), mul(inv(x), y)); }

std::size_t FiniteGroup::element_order(Elem a) const {
  std::size_t k = 1;
  for (Elem p = a; p != kIdentity; p = mul(p, a)) ++k;
  return k;
}

Word FiniteGroup::word(Elem e) const {
  if (!has_generators() && e != kIdentity) throw UsageError("group has no generating set");
  Word w;
  while (e != kIdentity) {
    w.push_back(static_cast<int>(tree_gen_[e]) + 1);
    e = tree_parent_[e];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

Elem FiniteGroup::evaluate(const Word& w) const {
  Elem acc = kIdentity;
  const auto k = static_cast<int>(generator_names_.size());
  for (int t : w) {
    if (t == 0 || t > k || t < -k) throw UsageError("word token out of range");
    Elem g = generators_[static_cast<std::size_t>(std::abs(t) - 1)];
    acc = mul(acc, t > 0 ? g : inv(g));
  }
  return acc;
}

void FiniteGroup::set_labels(std::vector<std::string> labels) {
  if (labels.size() != order_) throw UsageError("label count does not match group order");
  labels_ = std::move(labels);
}

void FiniteGroup::set_permutations(std::vector<Permutation> perms) {
  if (perms.size() != order_) throw UsageError("permutation count does not match group order");
  perms_ = std::move(perms);
  perm_index_.clear();
  for (Elem e = 0; e < order_; ++e) perm_index_.emplace(perms_[e], e);
}

Elem FiniteGroup::parse_element(std::string_view text) const {
  std::string_view s = trim(text);
  if (s.empty() || s == "1" || s == "e") return kIdentity;
  for (Elem e = 0; e < order_; ++e) {
    if (labels_[e] == s) return e;
  }
  if (s.front() == '(' && !perms_.empty()) {
    Permutation p = parse_cycles(s, perms_.front().size());
    if (p.size() != perms_.front().size()) throw UsageError("permutation moves points outside the group's domain");
    auto it = perm_index_.find(p);
    if (it == perm_index_.end()) throw UsageError("permutation " + std::string(s) + " is not in the group");
    return it->second;
  }
  // greedy longest match over generator and alias names
  std::vector<std::pair<std::string, Elem>> names;
  for (std::size_t i = 0; i < generator_names_.size(); ++i) names.emplace_back(generator_names_[i], generators_[i]);
  for (const auto& [name, e] : aliases_) names.emplace_back(name, e);
  Elem acc = kIdentity;
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == '*') {
      ++i;
      continue;
    }
    std::size_t best_len = 0;
    Elem best = kIdentity;
    for (const auto& [name, e] : names) {
      if (name.size() > best_len && s.substr(i).starts_with(name)) {
        best_len = name.size();
        best = e;
      }
    }
    if (best_len == 0) throw UsageError("cannot parse group element '" + std::string(s) + "'");
    i += best_len;
    long long k = 1;
    if (i < s.size() && s[i] == '^') {
      std::size_t j = i + 1;
      if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      k = parse_int(s.substr(i + 1, j - i - 1), s);
      i = j;
    }
    acc = mul(acc, pow(best, k));
  }
  return acc;
}

void FiniteGroup::verify_axioms(std::size_t random_triples, std::uint64_t seed) const {
  const std::size_t n = order_;
  for (Elem a = 0; a < n; ++a) {
    if (mul(kIdentity, a) != a || mul(a, kIdentity) != a) throw InvariantError("identity axiom fails");
    if (mul(a, inv(a)) != kIdentity || mul(inv(a), a) != kIdentity) throw InvariantError("inverse axiom fails");
  }
  auto check = [&](Elem a, Elem b, Elem c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw InvariantError("associativity fails");
  };
  if (n <= 64) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c) check(a, b, c);
    return;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
  for (std::size_t t = 0; t < random_triples; ++t) check(pick(rng), pick(rng), pick(rng));
}

// ---------------------------------------------------------------------------
// Homomorphisms

bool GroupHom::is_injective() const {
  std::vector<bool> hit(target->order(), false);
  for (Elem e : map) {
    if (hit[e]) return false;
    hit[e] = true;
  }
  return true;
}

void GroupHom::verify() const {
  const std::size_t n = source->order();
  if (map.size() != n) throw InvariantError("homomorphism table has the wrong size");
  if (map[kIdentity] != kIdentity) throw InvariantError("homomorphism does not fix the identity");
  auto check = [&](Elem a, Elem b) {
    if (map[source->mul(a, b)] != target->mul(map[a], map[b])) throw InvariantError("map is not a homomorphism");
  };
  if (n <= kDenseTableLimit) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) check(a, b);
    return;
  }
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
  for (int t = 0; t < 100000; ++t) check(pick(rng), pick(rng));
}

GroupHom hom_from_generator_images(GroupPtr source, GroupPtr target, std::span<const Elem> images) {
  const std::size_t k = source->generator_names().size();
  if (images.size() != k) throw UsageError("need one image per generator");
  const std::size_t n = source->order();
  GroupHom h{source, target, std::vector<Elem>(n, kIdentity)};
  // canonical numbering puts every tree parent before its child
  for (Elem e = 1; e < n; ++e) {
    Word w = source->word(e);
    Elem parent = source->evaluate(Word(w.begin(), w.end() - 1));
    h.map[e] = target->mul(h.map[parent], images[static_cast<std::size_t>(w.back() - 1)]);
  }
  for (Elem v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < k; ++i) {
      if (h.map[source->right_mul_generator(v, i)] != target->mul(h.map[v], images[i])) {
        throw InvariantError("generator images do not define a homomorphism");
      }
    }
  }
  return h;
}

// ---------------------------------------------------------------------------
// Construction

GroupPtr from_permutations(const std::vector<Permutation>& generators, const GroupLimits& limits) {
  std::size_t degree = 0;
  for (const auto& p : generators) degree = std::max(degree, p.size());
  std::vector<Permutation> gens;
  for (const auto& p : generators) {
    Permutation q(degree);
    for (std::uint32_t i = 0; i < degree; ++i) q[i] = i < p.size() ? p[i] : i;
    gens.push_back(std::move(q));
  }
  Permutation id(degree);
  for (std::uint32_t i = 0; i < degree; ++i) id[i] = i;
  // x * y applies x first, then y
  auto mul = [](const Permutation& x, const Permutation& y) {
    Permutation r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = y[x[i]];
    return r;
  };
  auto [elements, graph] = closure(id, gens, mul, limits.max_order);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < gens.size(); ++i) names.push_back("g" + std::to_string(i + 1));
  auto g = FiniteGroup::from_cayley_graph(graph, elements.size(), std::move(names));
  g.set_permutations(std::move(elements));
  return std::make_shared<const FiniteGroup>(std::move(g));
}

GroupPtr from_presentation(const Presentation& p, std::size_t coset_limit) {
  CosetTable t = enumerate_cosets(p, coset_limit);
  return std::make_shared<const FiniteGroup>(
      FiniteGroup::from_cayley_graph(t.graph, t.size, p.generator_names));
}

Presentation derive_presentation(const FiniteGroup& g) {
  if (!g.has_generators()) throw UsageError("group has no generating set");
  Presentation p;
  p.generator_names = g.generator_names();
  const std::size_t k = p.generator_count();
  for (Elem v = 0; v < g.order(); ++v) {
    for (std::size_t i = 0; i < k; ++i) {
      Elem w = g.right_mul_generator(v, i);
      Word wv = g.word(v);
      Word ww = g.word(w);
      // tree edges give trivial relators
      if (ww.size() == wv.size() + 1 && std::equal(wv.begin(), wv.end(), ww.begin()) &&
          ww.back() == static_cast<int>(i) + 1) {
        continue;
      }
      Word r = wv;
      r.push_back(static_cast<int>(i) + 1);
      for (auto it = ww.rbegin(); it != ww.rend(); ++it) r.push_back(-*it);
      p.relators.push_back(std::move(r));
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// Elements and subgroups

std::vector<Elem> involutions(const FiniteGroup& g) {
  std::vector<Elem> out;
  for (Elem e = 1; e < g.order(); ++e) {
    if (g.mul(e, e) == kIdentity) out.push_back(e);
  }
  return out;
}

std::vector<std::pair<Elem, Elem>> commuting_pairs(const FiniteGroup& g) {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y)
      if (g.mul(x, y) == g.mul(y, x)) out.emplace_back(x, y);
  return out;
}

std::vector<std::pair<Elem, Elem>> klein_pairs(const FiniteGroup& g) {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y)
      if (g.unoriented_commutator(x, y) == kIdentity) out.emplace_back(x, y);
  return out;
}

std::vector<bool> closure_mask(const FiniteGroup& g, std::span<const Elem> elems) {
  // incremental: elements already in the span are skipped, old members only
  // need the new generator, new members need all of them
  std::vector<bool> in(g.order(), false);
  std::vector<Elem> members{kIdentity};
  std::vector<Elem> gens;
  in[kIdentity] = true;
  for (Elem s : elems) {
    if (in[s]) continue;
    gens.push_back(s);
    const std::size_t old = members.size();
    for (std::size_t i = 0; i < old; ++i) {
      Elem w = g.mul(members[i], s);
      if (!in[w]) {
        in[w] = true;
        members.push_back(w);
      }
    }
    for (std::size_t i = old; i < members.size(); ++i)
      for (Elem t : gens) {
        Elem w = g.mul(members[i], t);
        if (!in[w]) {
          in[w] = true;
          members.push_back(w);
        }
      }
  }
  return in;
}

Subgroup subgroup_generated(GroupPtr g, std::span<const Elem> elems) {
  // drop generators already in the span of the earlier ones
  std::vector<Elem> gens;
  std::vector<bool> span = closure_mask(*g, gens);
  for (Elem e : elems) {
    if (!span[e]) {
      gens.push_back(e);
      span = closure_mask(*g, gens);
    }
  }
  auto mul = [&](Elem a, Elem b) { return g->mul(a, b); };
  auto [elements, graph] = closure<Elem>(kIdentity, gens, mul, g->order() + 1);
  std::vector<std::string> names;
  for (Elem e : gens) names.push_back(g->label(e));
  auto sub = FiniteGroup::from_cayley_graph(graph, elements.size(), std::move(names));
  std::vector<std::string> labels;
  for (Elem e : elements) labels.push_back(g->label(e));
  sub.set_labels(std::move(labels));
  auto ptr = std::make_shared<const FiniteGroup>(std::move(sub));
  return Subgroup{ptr, GroupHom{ptr, g, std::move(elements)}};
}

Subgroup squares_subgroup(GroupPtr g) {
  std::vector<Elem> squares;
  for (Elem x = 0; x < g->order(); ++x) squares.push_back(g->mul(x, x));
  return subgroup_generated(std::move(g), squares);
}

Subgroup kernel(const GroupHom& h) {
  std::vector<Elem> ker;
  for (Elem e = 0; e < h.source->order(); ++e) {
    if (h.map[e] == kIdentity) ker.push_back(e);
  }
  return subgroup_generated(h.source, ker);
}

std::size_t abelianization_mod2(const FiniteGroup& g) {
  // S(G) contains [G,G] since [x,y] = x^2 (x^-1 y)^2 y^-2
  std::vector<Elem> squares;
  for (Elem x = 0; x < g.order(); ++x) squares.push_back(g.mul(x, x));
  auto mask = closure_mask(g, squares);
  auto s = static_cast<std::size_t>(std::count(mask.begin(), mask.end(), true));
  std::size_t q = g.order() / s;
  std::size_t d = 0;
  while ((std::size_t{1} << d) < q) ++d;
  if ((std::size_t{1} << d) != q || q * s != g.order()) throw InvariantError("G/S(G) is not a 2-group");
  return d;
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

int gen(int i) { return i + 1; }
int inv_gen(int i) { return -(i + 1); }

Word power(int token, long long k) {
  Word w;
  for (long long i = 0; i < std::llabs(k); ++i) w.push_back(k > 0 ? token : -token);
  return w;
}

Word concat(std::initializer_list<Word> parts) {
  Word out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Word commutator_word(int a, int b) { return {a, b, -a, -b}; }

// Appends a generator equal to the first one: same group, different presentation.
Presentation with_redundant_generator(Presentation p) {
  if (p.generator_count() == 0) return p;
  p.generator_names.push_back("t");
  int t = static_cast<int>(p.generator_count());
  p.relators.push_back({t, inv_gen(0)});
  return p;
}

std::vector<long long> parse_factors(std::string_view spec) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i <= spec.size()) {
    auto j = spec.find('x', i);
    if (j == std::string_view::npos) j = spec.size();
    out.push_back(parse_int(spec.substr(i, j - i), "abelian factors"));
    i = j + 1;
  }
  return out;
}

std::string generator_letter(std::size_t i) {
  return i < 26 ? std::string(1, static_cast<char>('a' + i)) : "g" + std::to_string(i + 1);
}

CatalogEntry from_presentations(std::string name, std::vector<Presentation> ps, std::size_t limit) {
  auto g = from_presentation(ps.front(), limit);
  return CatalogEntry{std::move(name), std::move(g), std::move(ps)};
}

}  // namespace

CatalogEntry catalog(std::string_view name, const GroupLimits& limits) {
  const std::string full(trim(name));
  auto colon = full.find(':');
  const std::string kind = full.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : full.substr(colon + 1);
  const std::size_t limit = limits.max_order;
  auto positive = [&](std::string_view s) {
    long long v = parse_int(s, full);
    if (v < 1) throw UsageError("catalog parameter must be positive: " + full);
    return v;
  };

  if (kind == "cyclic") {
    long long n = positive(arg);
    Presentation p{{"x"}, {power(gen(0), n)}};
    return from_presentations(full, {p, with_redundant_generator(p)}, limit);
  }
  if (kind == "dihedral") {
    long long n = positive(arg);
    Word ab_n;
    for (long long i = 0; i < n; ++i) ab_n.insert(ab_n.end(), {gen(0), gen(1)});
    Presentation p{{"a", "b"}, {power(gen(0), 2), power(gen(1), 2), ab_n}};
    // rotation form: c = ab, a c a^-1 = c^-1
    Presentation q{{"a", "c"}, {power(gen(0), 2), power(gen(1), n), {gen(0), gen(1), inv_gen(0), gen(1)}}};
    auto entry = from_presentations(full, {p, q}, limit);
    auto g = std::make_shared<FiniteGroup>(*entry.group);
    g->add_alias("c", g->mul(g->generators()[0], g->generators()[1]));
    entry.group = g;
    return entry;
  }
  if (kind == "symmetric") {
    long long n = positive(arg);
    std::vector<Permutation> gens;
    for (long long i = 0; i + 1 < n; ++i) {
      Permutation s(static_cast<std::size_t>(n));
      for (std::uint32_t j = 0; j < n; ++j) s[j] = j;
      std::swap(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(i + 1)]);
      gens.push_back(std::move(s));
    }
    GroupLimits lim = limits;
    auto base = from_permutations(gens, lim);
    // rename generators s1..s_{n-1}
    Presentation coxeter;
    for (long long i = 0; i + 1 < n; ++i) coxeter.generator_names.push_back("s" + std::to_string(i + 1));
    const int m = static_cast<int>(coxeter.generator_count());
    for (int i = 0; i < m; ++i) {
      coxeter.relators.push_back(power(gen(i), 2));
    }
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        Word r;
        for (int t = 0; t < (j == i + 1 ? 3 : 2); ++t) r.insert(r.end(), {gen(i), gen(j)});
        coxeter.relators.push_back(std::move(r));
      }
    }
    std::vector<Presentation> ps{coxeter};
    if (n >= 2) {
      // s = (1 2), t = (1 2 ... n)
      Presentation moore{{"s", "t"}, {power(gen(0), 2), power(gen(1), n)}};
      Word st;
      for (long long i = 0; i < n - 1; ++i) st.insert(st.end(), {gen(0), gen(1)});
      moore.relators.push_back(st);
      for (long long j = 2; j <= n / 2; ++j) {
        Word r = concat({{gen(0)}, power(gen(1), -j), {gen(0)}, power(gen(1), j)});
        moore.relators.push_back(concat({r, r}));
      }
      ps.push_back(std::move(moore));
    }
    auto g = std::make_shared<FiniteGroup>(FiniteGroup::from_cayley_graph(
        [&] {
          std::vector<std::uint32_t> graph;
          for (Elem v = 0; v < base->order(); ++v)
            for (std::size_t i = 0; i < base->generator_names().size(); ++i)
              graph.push_back(base->right_mul_generator(v, i));
          return graph;
        }(),
        base->order(), coxeter.generator_names));
    g->set_permutations(base->permutations());
    return CatalogEntry{full, g, std::move(ps)};
  }
  if (kind == "quaternion") {
    if (positive(arg) != 8) throw UsageError("only quaternion:8 is available");
    // a^2 = b^2, a b a^-1 = b^-1
    Presentation p{{"a", "b"}, {{gen(0), gen(0), inv_gen(1), inv_gen(1)}, {gen(0), gen(1), inv_gen(0), gen(1)}}};
    Presentation q{{"a", "b"},
                   {power(gen(0), 4), {gen(0), gen(0), inv_gen(1), inv_gen(1)}, {gen(1), gen(0), inv_gen(1), gen(0)}}};
    return from_presentations(full, {p, q}, limit);
  }
  if (kind == "klein4") {
    Presentation p{{"a", "b"}, {power(gen(0), 2), power(gen(1), 2), {gen(0), gen(1), gen(0), gen(1)}}};
    Presentation q{{"a", "b"}, {power(gen(0), 2), power(gen(1), 2), commutator_word(gen(0), gen(1))}};
    return from_presentations(full, {p, q}, limit);
  }
  if (kind == "abelian") {
    auto factors = parse_factors(arg);
    Presentation p;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (factors[i] < 1) throw UsageError("abelian factors must be positive: " + full);
      p.generator_names.push_back(generator_letter(i));
    }
    for (std::size_t i = 0; i < factors.size(); ++i) p.relators.push_back(power(gen(static_cast<int>(i)), factors[i]));
    for (std::size_t i = 0; i < factors.size(); ++i)
      for (std::size_t j = i + 1; j < factors.size(); ++j)
        p.relators.push_back(commutator_word(gen(static_cast<int>(i)), gen(static_cast<int>(j))));
    return from_presentations(full, {p, with_redundant_generator(p)}, limit);
  }
  if (kind == "smallgroup") {
    if (arg != "64:182") throw UsageError("only smallgroup:64:182 is available");
    // Z8 x| Q8: a^2 = b^2, a b a^-1 = b^-1, c^8, a c a^-1 = c^3, b c b^-1 = c^5
    const int a = gen(0), b = gen(1), c = gen(2);
    Presentation p{{"a", "b", "c"},
                   {{a, a, -b, -b},
                    {a, b, -a, b},
                    power(c, 8),
                    concat({{a, c, -a}, power(c, -3)}),
                    concat({{b, c, -b}, power(c, -5)})}};
    Presentation q{{"a", "b", "c"},
                   {power(a, 4),
                    {a, a, -b, -b},
                    {b, a, -b, a},
                    power(c, 8),
                    concat({{a, c, -a}, power(c, -3)}),
                    concat({{b, c, -b}, power(c, -5)})}};
    return from_presentations(full, {p, q}, limit);
  }
  throw UsageError("unknown catalog group '" + full + "'");
}

std::vector<std::string> catalog_names() {
  return {"cyclic:n", "dihedral:n", "symmetric:n", "quaternion:8", "klein4", "abelian:n1xn2x...", "smallgroup:64:182"};
}

}  // namespace usm
