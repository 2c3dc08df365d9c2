#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "plength/coset_table.hpp"
#include "plength/presentation.hpp"
#include "plength/rational.hpp"
#include "plength/simplify.hpp"

namespace plength {

// One subgroup's contribution to the upper-bound search.
struct EstimateRecord {
  CosetTable table;
  int index = 1;
  TriangleCost raw_cost = 0;         // cost of the rewritten presentation
  TriangleCost simplified_cost = 0;  // after budgeted simplification
  Rational ratio;                    // simplified_cost / index
  bool capacity_skipped = false;     // work abandoned; excluded from best
  bool budget_exceeded = false;      // simplification stopped early
};

struct StableEstimate {
  EstimateRecord best;
  std::vector<EstimateRecord> all;        // index ascending, canonical table order
  TriangleCost base_cost = 0;             // tcost of the input presentation
  TriangleCost triangulated_cost = 0;     // tcost after triangulation (equal)
  bool any_capacity_skipped = false;
};

// Upper-bound search over all conjugacy classes of subgroups of index at
// most max_index: triangulate, rewrite along each coset table, simplify,
// and minimize simplified-cost/index.  Every record obeys
// raw_cost <= index * triangulated_cost; the index-1 record also folds in a
// direct simplification of the input, so best.ratio never exceeds the
// simplified input cost.  All numbers are upper bounds for the group
// invariant, never exact values.
StableEstimate stable_upper_bound(const Presentation& p, int max_index,
                                  const SimplifyBudget& budget = {});

struct MultiplicativityReport {
  int index = 1;
  Rational base_bound;      // best ratio for the ambient presentation, searched to index*max_index2
  Rational subgroup_bound;  // best ratio for the subgroup presentation, searched to max_index2
  bool holds = false;       // subgroup_bound <= index * base_bound
};

// Compares the scaling of the two upper bounds along the subgroup encoded
// by t (index-d subgroups of the subgroup are index-d*[G:H] subgroups of the
// whole group, so the inequality is expected but not forced for bounds).
MultiplicativityReport multiplicativity_check(const Presentation& p, const CosetTable& t,
                                              int max_index2, const SimplifyBudget& budget = {});

// e1.ratio + e2.ratio: an upper bound for the free product of the two
// groups the records estimate.
Rational free_product_combine(const EstimateRecord& e1, const EstimateRecord& e2);

struct FamilySweepRow {
  std::vector<std::pair<std::string, long long>> params;
  long long degree = 1;  // covering degree the ratio divides by
  TriangleCost cost = 0;
  Rational ratio;           // cost / degree
  Rational adjusted_ratio;  // ratio / commensurability factor
};

struct FamilySweep {
  std::string family;
  std::vector<std::string> param_names;
  long long commensurability = 1;
  std::vector<FamilySweepRow> rows;
  size_t argmin = 0;  // first row attaining min_ratio
  Rational min_ratio;
};

struct ParamRange {
  long long lo = 1;
  long long hi = 1;
};

// Families: "surface" (params g, d), "seifert" (g, e, d), and the grid
// templates "figure8", "whitehead", "magic", "d2" (params m, n).  Ranges
// are inclusive; rows are emitted in ascending lexicographic parameter
// order.  Costs come from the actually generated presentations.
FamilySweep family_sweep(const std::string& family,
                         const std::map<std::string, ParamRange>& grid);

// CSV with header: family, params..., index_or_degree, tcost, ratio,
// ratio_decimal, commensurability_adjusted_ratio, adjusted_decimal.
// Fractions in lowest terms; decimals to 6 significant digits; \n endings.
std::string sweep_to_csv(const FamilySweep& s);

}  // namespace plength
