#include "usm/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "usm/cobordism.hpp"
#include "usm/error.hpp"
#include "usm/hopf.hpp"
#include "usm/multiplier.hpp"
#include "usm/relations.hpp"

namespace usm {

namespace {

using nlohmann::json;

const std::vector<std::string> kCommands = {"group",      "schur",      "bogomolov",        "hopf",
                                            "word-class", "extendable", "verify-relations", "catalog"};

struct Options {
  std::string command;
  std::string group;
  std::string presentation_file;
  std::string perms_file;
  std::string surface;
  std::string word;
  std::string format = "text";
  std::uint64_t seed = 0;
  std::size_t samples = 10000;
  std::size_t coset_limit = std::size_t{1} << 20;
  std::size_t max_order = 256;
};

struct Source {
  std::string name;
  GroupPtr group;
  std::vector<Presentation> presentations;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Source load(const Options& o) {
  int sources = !o.group.empty() + !o.presentation_file.empty() + !o.perms_file.empty();
  if (sources != 1) throw UsageError("give exactly one of --group, --presentation, --perms");
  if (!o.group.empty()) {
    CatalogEntry e = catalog(o.group);
    return {e.name, e.group, e.presentations};
  }
  if (!o.presentation_file.empty()) {
    Presentation p = parse_presentation(read_file(o.presentation_file));
    return {o.presentation_file, from_presentation(p, o.coset_limit), {p}};
  }
  auto perms = parse_permutation_file(read_file(o.perms_file));
  return {o.perms_file, from_permutations(perms), {}};
}

CohomologyLimits cohomology_limits(const Options& o) { return CohomologyLimits{o.max_order}; }

json bits(const BitVector& v) { return v.to_string(); }

// "gens: a b; rel: a^2; ..." on one line
std::string one_line(const Presentation& p) {
  std::string s = format_presentation(p);
  while (!s.empty() && s.back() == '\n') s.pop_back();
  std::string r;
  for (char c : s) r += c == '\n' ? std::string("; ") : std::string(1, c);
  return r;
}

void render_text(const json& j, std::ostream& out, const std::string& indent = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json& v = it.value();
    if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << indent << it.key() << ":\n";
      for (const auto& item : v) {
        out << indent << "  -\n";
        render_text(item, out, indent + "    ");
      }
    } else if (v.is_object()) {
      out << indent << it.key() << ":\n";
      render_text(v, out, indent + "  ");
    } else if (v.is_array() && std::any_of(v.begin(), v.end(), [](const json& x) {
                 return x.is_string() && x.get<std::string>().find(' ') != std::string::npos;
               })) {
      out << indent << it.key() << ":\n";
      for (const auto& item : v) out << indent << "  - " << item.get<std::string>() << '\n';
    } else if (v.is_array()) {
      out << indent << it.key() << ":";
      for (const auto& item : v) out << ' ' << (item.is_string() ? item.get<std::string>() : item.dump());
      out << '\n';
    } else {
      out << indent << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
  }
}

void emit(const json& j, const Options& o, std::ostream& out) {
  if (o.format == "json") {
    out << j.dump(2) << '\n';
  } else {
    render_text(j, out);
  }
}

json hopf_json(const Presentation& p, const Options& o) {
  SquareCover sc = square_cover(p, o.coset_limit);
  HopfMultiplier h = hopf_multiplier(sc);
  json words = json::array();
  for (const Word& w : h.generators) words.push_back(p.format_word(w));
  return {{"presentation", one_line(p)},
          {"cover_order", h.cover_order},
          {"r0_order", h.r0_order},
          {"dim", h.dim},
          {"surface_dim", h.surface_dim},
          {"generators", words}};
}

int cmd_catalog(std::ostream& out, const Options& o) {
  json names = catalog_names();
  emit({{"groups", names}}, o, out);
  return kExitOk;
}

int cmd_group(const Source& s, const Options& o, std::ostream& out) {
  const FiniteGroup& g = *s.group;
  json gens = json::array();
  for (Elem x : g.generators()) gens.push_back(g.label(x));
  json pres = json::array();
  for (const auto& p : s.presentations) pres.push_back(one_line(p));
  emit({{"group", s.name},
        {"order", g.order()},
        {"generators", gens},
        {"abelianization_mod2", abelianization_mod2(g)},
        {"involutions", involutions(g).size()},
        {"commuting_pairs", commuting_pairs(g).size()},
        {"klein_pairs", klein_pairs(g).size()},
        {"presentations", pres}},
       o, out);
  return kExitOk;
}

int cmd_schur(const Source& s, const Options& o, std::ostream& out) {
  CocycleBasis b = schur_unoriented(s.group, cohomology_limits(o));
  json hopf = json::array();
  bool agree = true;
  for (const auto& p : s.presentations) {
    json h = hopf_json(p, o);
    agree = agree && h["dim"] == b.dim();
    hopf.push_back(h["dim"]);
  }
  emit({{"group", s.name}, {"order", s.group->order()}, {"dim_h2", b.dim()}, {"hopf_dims", hopf}, {"routes_agree", agree}},
       o, out);
  return agree ? kExitOk : kExitInvariant;
}

int cmd_bogomolov(const Source& s, const Options& o, std::ostream& out) {
  CocycleBasis b = h2(s.group, cohomology_limits(o));
  MultiplierReport r = multiplier_report(s.name, b);
  json j = to_json(r);
  bool agree = r.routes_agree.value_or(false);
  json cover = json::array();
  for (const auto& p : s.presentations) {
    HopfMultiplier h = hopf_multiplier(p, o.coset_limit);
    std::size_t d = h.dim - h.surface_dim;
    cover.push_back(d);
    agree = agree && h.dim == r.dim_h2 && d == r.dim_b0;
  }
  j["dim_b0_cover"] = cover;
  j["routes_agree"] = agree;
  emit(j, o, out);
  return agree ? kExitOk : kExitInvariant;
}

int cmd_hopf(const Source& s, const Options& o, std::ostream& out) {
  if (s.presentations.empty()) throw UsageError("hopf needs a presentation (catalog group or --presentation)");
  json covers = json::array();
  for (const auto& p : s.presentations) covers.push_back(hopf_json(p, o));
  emit({{"group", s.name}, {"covers", covers}}, o, out);
  return kExitOk;
}

int cmd_word_class(const Source& s, const Options& o, std::ostream& out) {
  if (o.word.empty()) throw UsageError("word-class needs --word");
  CocycleBasis b = h2(s.group, cohomology_limits(o));
  UWord w = UWord::parse(*s.group, o.word);
  SquareCentralExtension probe = universal_probe(b);
  MClass m = is_trivial_in_M(w, probe);
  MultiplierReport r = bogomolov_by_functionals(s.name, b);
  B0Class c = class_in_b0(w, probe, r);
  emit({{"group", s.name},
        {"word", w.format(*s.group)},
        {"m_coordinates", bits(m.coordinates)},
        {"trivial_in_m", m.trivial},
        {"b0_coordinates", bits(c.coordinates)},
        {"trivial_in_b0", c.trivial}},
       o, out);
  return kExitOk;
}

int cmd_extendable(const Source& s, const Options& o, std::ostream& out) {
  if (o.surface.empty()) throw UsageError("extendable needs --surface");
  SurfaceAction a = SurfaceAction::parse(s.group, o.surface);
  CocycleBasis b = h2(s.group, cohomology_limits(o));
  MultiplierReport r = bogomolov_by_functionals(s.name, b);
  json j = to_json(is_extendable(a, b, r));
  j["group"] = s.name;
  j["surface"] = a.format();
  j["chi_total"] = a.chi_total();
  emit(j, o, out);
  return kExitOk;
}

int cmd_verify(const Source& s, const Options& o, std::ostream& out) {
  CocycleBasis b = h2(s.group, cohomology_limits(o));
  VerificationOptions vo;
  vo.samples = o.samples;
  vo.seed = o.seed;
  VerificationReport rep = verify_relations(s.name, b, vo);
  json rels = json::array();
  for (const auto& r : rep.relations)
    rels.push_back({{"relation", r.name},
                    {"family", to_string(r.family)},
                    {"instances", r.instances},
                    {"canonical_failures", r.canonical_failures},
                    {"extension_failures", r.extension_failures},
                    {"passed", r.passed()}});
  emit({{"group", rep.group},
        {"order", rep.order},
        {"dim_h2", rep.dim_h2},
        {"exhaustive", rep.exhaustive},
        {"seed", rep.seed},
        {"samples", rep.exhaustive ? 0 : o.samples},
        {"instances", rep.instances()},
        {"all_pass", rep.all_pass()},
        {"relations", rels}},
       o, out);
  return rep.all_pass() ? kExitOk : kExitInvariant;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Unoriented Schur and Bogomolov multipliers of finite groups", "usm"};
  app.add_option("command", o.command, "Command")->required()->check(CLI::IsMember(kCommands));
  app.add_option("--group", o.group, "Catalog group, e.g. dihedral:4 or smallgroup:64:182");
  app.add_option("--presentation", o.presentation_file, "Presentation file");
  app.add_option("--perms", o.perms_file, "Permutation generators file");
  app.add_option("--surface", o.surface, "Surface, e.g. \"orientable g=1 pairs=(a,b)\"");
  app.add_option("--word", o.word, "Word such as \"O[a,c] O[ab,c]\"");
  app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", o.seed, "Seed for sampled relation checks");
  app.add_option("--samples", o.samples, "Sampled instances per relation above order 16");
  app.add_option("--coset-limit", o.coset_limit, "Coset table limit for enumeration");
  app.add_option("--max-order", o.max_order, "Largest group order for cohomology");

  std::vector<std::string> storage{"usm"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usm: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (o.command == "catalog") return cmd_catalog(out, o);
    Source s = load(o);
    if (o.command == "group") return cmd_group(s, o, out);
    if (o.command == "schur") return cmd_schur(s, o, out);
    if (o.command == "bogomolov") return cmd_bogomolov(s, o, out);
    if (o.command == "hopf") return cmd_hopf(s, o, out);
    if (o.command == "word-class") return cmd_word_class(s, o, out);
    if (o.command == "extendable") return cmd_extendable(s, o, out);
    return cmd_verify(s, o, out);
  } catch (const UsageError& e) {
    err << "usm: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << "usm: resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const InvariantError& e) {
    err << "usm: invariant violated: " << e.what() << '\n';
    return kExitInvariant;
  }
}

}  // namespace usm
