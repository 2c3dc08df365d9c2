#include "plength/estimate.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "plength/families.hpp"
#include "plength/rewrite.hpp"

namespace plength {

StableEstimate stable_upper_bound(const Presentation& p, int max_index,
                                  const SimplifyBudget& budget) {
  p.validate();
  if (max_index < 1) throw std::invalid_argument("max_index must be at least 1");

  Triangulation tri = triangulate_full(p);
  const Presentation& pt = tri.presentation;

  StableEstimate out;
  out.base_cost = tcost(p);
  out.triangulated_cost = tcost(pt);

  std::vector<CosetTable> tables = low_index_subgroups(p, max_index);

  for (const CosetTable& base : tables) {
    EstimateRecord rec;
    rec.index = base.index();
    rec.table = base;
    try {
      CosetTable full = extend_table(base, tri.aux_definitions, pt.generator_count());
      Presentation sub = rewrite_presentation(pt, full);
      rec.raw_cost = tcost(sub);
      SimplifyResult sr = simplify_detailed(sub, budget);
      rec.simplified_cost = tcost(sr.presentation);
      rec.budget_exceeded = sr.budget_exceeded;
      if (rec.index == 1) {
        // The identity cover rewrites to the triangulated presentation; a
        // direct simplification of the raw input can only do better.
        SimplifyResult direct = simplify_detailed(p, budget);
        if (tcost(direct.presentation) < rec.simplified_cost) {
          rec.simplified_cost = tcost(direct.presentation);
          rec.budget_exceeded = direct.budget_exceeded;
        }
      }
      rec.ratio = Rational(rec.simplified_cost, rec.index);
    } catch (const CapacityError&) {
      rec.capacity_skipped = true;
      out.any_capacity_skipped = true;
    }
    out.all.push_back(std::move(rec));
  }

  bool found = false;
  for (const EstimateRecord& rec : out.all) {
    if (rec.capacity_skipped) continue;
    if (!found || rec.ratio < out.best.ratio) {
      out.best = rec;
      found = true;
    }
  }
  if (!found) throw CapacityError("every subgroup computation hit a capacity limit");
  return out;
}

MultiplicativityReport multiplicativity_check(const Presentation& p, const CosetTable& t,
                                              int max_index2, const SimplifyBudget& budget) {
  p.validate();
  t.validate(p);
  if (max_index2 < 1) throw std::invalid_argument("max_index2 must be at least 1");

  MultiplicativityReport rep;
  rep.index = t.index();

  StableEstimate base = stable_upper_bound(p, rep.index * max_index2, budget);
  rep.base_bound = base.best.ratio;

  Triangulation tri = triangulate_full(p);
  CosetTable full = extend_table(t, tri.aux_definitions, tri.presentation.generator_count());
  Presentation sub = simplify(rewrite_presentation(tri.presentation, full), budget);

  StableEstimate subgroup = stable_upper_bound(sub, max_index2, budget);
  rep.subgroup_bound = subgroup.best.ratio;

  rep.holds = rep.subgroup_bound <= Rational(rep.index) * rep.base_bound;
  return rep;
}

Rational free_product_combine(const EstimateRecord& e1, const EstimateRecord& e2) {
  if (e1.capacity_skipped || e2.capacity_skipped)
    throw std::invalid_argument("cannot combine a skipped record");
  return e1.ratio + e2.ratio;
}

namespace {

long long range_value(const std::map<std::string, ParamRange>& grid, const std::string& key,
                      bool& present) {
  auto it = grid.find(key);
  present = it != grid.end();
  return present ? it->second.lo : 0;
}

void check_params(const std::map<std::string, ParamRange>& grid,
                  const std::vector<std::string>& expected) {
  for (const auto& [name, range] : grid) {
    if (std::find(expected.begin(), expected.end(), name) == expected.end())
      throw std::invalid_argument("unknown sweep parameter: " + name);
    if (range.lo > range.hi) throw std::invalid_argument("empty range for parameter: " + name);
  }
  for (const std::string& name : expected)
    if (grid.find(name) == grid.end())
      throw std::invalid_argument("missing sweep parameter: " + name);
}

}  // namespace

FamilySweep family_sweep(const std::string& family,
                         const std::map<std::string, ParamRange>& grid) {
  FamilySweep out;
  out.family = family;

  if (family == "surface") {
    check_params(grid, {"g", "d"});
    out.param_names = {"g", "d"};
    const ParamRange g = grid.at("g"), d = grid.at("d");
    if (g.lo < 2) throw std::invalid_argument("surface sweep needs g >= 2");
    for (long long gv = g.lo; gv <= g.hi; ++gv)
      for (long long dv = d.lo; dv <= d.hi; ++dv) {
        if (dv < 1) throw std::invalid_argument("covering degree must be positive");
        FamilySweepRow row;
        row.params = {{"g", gv}, {"d", dv}};
        row.degree = dv;
        row.cost = tcost(surface(dv * (gv - 1) + 1).presentation);
        row.ratio = Rational(row.cost, row.degree);
        row.adjusted_ratio = row.ratio;
        out.rows.push_back(std::move(row));
      }
  } else if (family == "seifert") {
    check_params(grid, {"g", "e", "d"});
    out.param_names = {"g", "e", "d"};
    const ParamRange g = grid.at("g"), e = grid.at("e"), d = grid.at("d");
    if (g.lo < 1) throw std::invalid_argument("seifert sweep needs g >= 1");
    for (long long gv = g.lo; gv <= g.hi; ++gv)
      for (long long ev = e.lo; ev <= e.hi; ++ev)
        for (long long dv = d.lo; dv <= d.hi; ++dv) {
          if (dv < 1) throw std::invalid_argument("covering degree must be positive");
          FamilySweepRow row;
          row.params = {{"g", gv}, {"e", ev}, {"d", dv}};
          row.degree = dv * dv;
          row.cost = tcost(seifert(dv * (gv - 1) + 1, ev).presentation);
          row.ratio = Rational(row.cost, row.degree);
          row.adjusted_ratio = row.ratio;
          out.rows.push_back(std::move(row));
        }
  } else {
    const TorusCoverTemplate& tmpl = template_by_name(family);
    check_params(grid, {"m", "n"});
    out.param_names = {"m", "n"};
    out.commensurability = tmpl.commensurability;
    const ParamRange m = grid.at("m"), n = grid.at("n");
    for (long long mv = m.lo; mv <= m.hi; ++mv)
      for (long long nv = n.lo; nv <= n.hi; ++nv) {
        FamilyPoint pt = instantiate_torus_cover(tmpl, static_cast<int>(mv), static_cast<int>(nv));
        FamilySweepRow row;
        row.params = {{"m", mv}, {"n", nv}};
        row.degree = mv * nv;
        row.cost = tcost(pt.presentation);
        row.ratio = Rational(row.cost, row.degree);
        row.adjusted_ratio = row.ratio / Rational(tmpl.commensurability);
        out.rows.push_back(std::move(row));
      }
  }

  if (out.rows.empty()) throw std::invalid_argument("sweep produced no rows");
  out.argmin = 0;
  out.min_ratio = out.rows[0].ratio;
  for (size_t i = 1; i < out.rows.size(); ++i)
    if (out.rows[i].ratio < out.min_ratio) {
      out.min_ratio = out.rows[i].ratio;
      out.argmin = i;
    }
  return out;
}

std::string sweep_to_csv(const FamilySweep& s) {
  std::ostringstream os;
  os << "family";
  for (const std::string& name : s.param_names) os << ',' << name;
  os << ",index_or_degree,tcost,ratio,ratio_decimal,"
        "commensurability_adjusted_ratio,adjusted_decimal\n";
  for (const FamilySweepRow& row : s.rows) {
    os << s.family;
    for (const auto& [name, value] : row.params) os << ',' << value;
    os << ',' << row.degree << ',' << row.cost << ',' << fraction_string(row.ratio) << ','
       << decimal_string(row.ratio) << ',' << fraction_string(row.adjusted_ratio) << ','
       << decimal_string(row.adjusted_ratio) << '\n';
  }
  return os.str();
}

}  // namespace plength
