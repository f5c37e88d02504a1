#include "usm/multiplier.hpp"

#include <set>

#include "usm/error.hpp"
#include "usm/relations.hpp"

namespace usm {

nlohmann::json to_json(const MultiplierReport& r) {
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& v : r.annihilator_basis) basis.push_back(v.to_string());
  return {{"group", r.group},
          {"dim_h2", r.dim_h2},
          {"dim_b0", r.dim_b0},
          {"functional_rank", r.functional_rank},
          {"dim_b0_restrictions", r.dim_b0_restrictions ? nlohmann::json(*r.dim_b0_restrictions) : nlohmann::json()},
          {"routes_agree", r.routes_agree ? nlohmann::json(*r.routes_agree) : nlohmann::json()},
          {"annihilator_basis", basis}};
}

CocycleBasis schur_unoriented(GroupPtr g, const CohomologyLimits& limits) { return h2(std::move(g), limits); }

BitVector functional_row(const CocycleBasis& basis, const SurfaceCycle& c) {
  BitVector row(basis.dim());
  for (std::size_t j = 0; j < basis.dim(); ++j)
    if (eval(basis.h2_reps[j], c)) row.set(j);
  return row;
}

RowBasis surface_functionals(const CocycleBasis& basis) {
  const GroupPtr& g = basis.group;
  RowBasis rows(basis.dim());
  if (basis.dim() == 0) return rows;
  auto add = [&](const SurfaceRelator& r) { rows.add(functional_row(basis, surface_cycle(g, r))); };
  for (auto [x, y] : commuting_pairs(*g)) add(torus_relator(x, y));
  for (auto [x, y] : klein_pairs(*g)) add(klein_relator(x, y));
  for (Elem z : involutions(*g)) add(projective_relator(z));
  return rows;
}

RowBasis restriction_functionals(const CocycleBasis& basis) {
  const GroupPtr& g = basis.group;
  RowBasis rows(basis.dim());
  if (basis.dim() == 0) return rows;
  std::set<std::vector<bool>> seen;
  auto visit = [&](std::vector<Elem> gens) {
    std::vector<bool> mask = closure_mask(*g, gens);
    if (!seen.insert(mask).second) return;
    Subgroup sub = subgroup_generated(g, gens);
    CocycleBasis sb = h2(sub.group, CohomologyLimits{sub.group->order()});
    if (sb.dim() == 0) return;
    std::vector<BitVector> m = restriction_matrix(basis, sb, sub.inclusion);
    for (std::size_t k = 0; k < sb.dim(); ++k) {
      BitVector f(basis.dim());
      for (std::size_t i = 0; i < basis.dim(); ++i)
        if (m[i].get(k)) f.set(i);
      rows.add(f);
    }
  };
  for (Elem z : involutions(*g)) visit({z});
  for (auto [x, y] : commuting_pairs(*g)) visit({x, y});
  for (auto [x, y] : klein_pairs(*g)) visit({x, y});
  return rows;
}

MultiplierReport bogomolov_by_functionals(const std::string& name, const CocycleBasis& basis) {
  RowBasis f = surface_functionals(basis);
  MultiplierReport r;
  r.group = name;
  r.dim_h2 = basis.dim();
  r.functional_rank = f.rank();
  r.dim_b0 = r.dim_h2 - r.functional_rank;
  r.annihilator_basis = annihilator(f).rows();
  for (const auto& c : r.annihilator_basis)
    for (const auto& row : f.rows())
      if (row.dot(c)) throw InvariantError("annihilator class pairs nontrivially with a surface");
  return r;
}

std::size_t bogomolov_by_restrictions(const CocycleBasis& basis) {
  return basis.dim() - restriction_functionals(basis).rank();
}

MultiplierReport multiplier_report(const std::string& name, const CocycleBasis& basis) {
  MultiplierReport r = bogomolov_by_functionals(name, basis);
  RowBasis f = surface_functionals(basis);
  RowBasis res = restriction_functionals(basis);
  r.dim_b0_restrictions = basis.dim() - res.rank();
  bool same = f.rank() == res.rank();
  for (const auto& row : f.rows()) same = same && res.contains(row);
  r.routes_agree = same;
  return r;
}

namespace {

B0Class pair_with_annihilator(const BitVector& m, const MultiplierReport& report) {
  B0Class out;
  out.coordinates = BitVector(report.annihilator_basis.size());
  for (std::size_t i = 0; i < report.annihilator_basis.size(); ++i)
    if (report.annihilator_basis[i].dot(m)) out.coordinates.set(i);
  out.trivial = out.coordinates.none();
  return out;
}

}  // namespace

B0Class class_in_b0(const UWord& w, const CocycleBasis& basis, const MultiplierReport& report) {
  return pair_with_annihilator(is_trivial_in_M(w, basis).coordinates, report);
}

B0Class class_in_b0(const UWord& w, const SquareCentralExtension& probe, const MultiplierReport& report) {
  return pair_with_annihilator(is_trivial_in_M(w, probe).coordinates, report);
}

B0Class class_in_b0(const SurfaceCycle& c, const CocycleBasis& basis, const MultiplierReport& report) {
  if (!has_zero_boundary(c)) throw UsageError("surface chain is not a cycle");
  return pair_with_annihilator(functional_row(basis, c), report);
}

}  // namespace usm
