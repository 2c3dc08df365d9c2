#pragma once

#include <string>
#include <utility>
#include <vector>

#include "plength/presentation.hpp"
#include "plength/rational.hpp"

namespace plength {

// One member of a parametric presentation family, with its exact predicted
// cost when the family has a closed-form count.
struct FamilyPoint {
  std::string family;
  std::vector<std::pair<std::string, long long>> params;
  Presentation presentation;
  bool has_predicted_cost = false;
  TriangleCost predicted_cost = 0;
};

// Grid template for the torus-interval covers: per-cell symbols tied
// together by s- and t-conjugation along the grid boundary.
//
// A cell letter (family f, di, dj, sign) instantiated at cell (i, j) means
// the generator f_{i+di, j+dj}.  Core relators are repeated for every cell
// (i, j) in 1..m x 1..n.  A horizontal shift for family f adds relators
// f_{m+1,j} = s f_{1,j} s^-1 for j = 1..n (plus j = n+1 when it runs
// through the corner).  A vertical shift adds f_{r, n+col_delta} =
// t f_{r, col_delta} t^-1 for r = row_lo..m (or m+1 with the corner).
// The commutation relator s t s^-1 t^-1 closes the template.
struct TorusCoverTemplate {
  struct CellLetter {
    char family;
    int di;
    int dj;
    bool positive;
  };
  struct HorizontalShift {
    char family;
    bool through_corner;
  };
  struct VerticalShift {
    char family;
    int row_lo;           // 1 or 2
    bool through_corner;  // include row m+1
    int col_delta;        // 0 or 1
  };

  std::string name;
  std::string symbol_order;  // cell symbol families, in display order
  std::vector<std::vector<CellLetter>> core_relators;
  std::vector<HorizontalShift> horizontal_shifts;
  std::vector<VerticalShift> vertical_shifts;
  long long core_cost = 0;         // per-cell cost contributed by core relators
  long long commensurability = 1;  // covering factor between this cell manifold
                                   // and the underlying manifold it reports on
  // tcost(instantiation at (m,n)) = core_cost*m*n + cost_m*m + cost_n*n + cost_const
  long long cost_m = 0;
  long long cost_n = 0;
  long long cost_const = 0;
};

// Closed orientable surface group of genus g: one relator, the product of
// g commutators; cost 4g - 2.
FamilyPoint surface(long long g);

// (4(d(g-1)+1) - 2)/d: the cost-per-degree of the genus d(g-1)+1 cover.
Rational surface_cover_ratio(long long g, long long d);

// Ideal-triangulation triangle count 4g - 4 + 2b of the b-punctured genus-g
// surface (a relative count; no presentation is built).
long long punctured_surface_relative(long long g, long long b);

// Circle bundle of Euler number e over the genus-g surface:
// <x_1,y_1,..,x_g,y_g,z | [x_1,y_1]..[x_g,y_g] z^e, [x_i,z], [y_i,z]>;
// cost 8g + |e| - 2.
FamilyPoint seifert(long long g, long long e);

// (8(d(g-1)+1) + |e| - 2)/d^2: cost-per-degree along the d^2-sheeted covers.
Rational seifert_cover_ratio(long long g, long long e, long long d);

// The four built-in grid templates: figure8 (core cost 6, factor 6),
// whitehead (4, factor 2), magic (3), d2 (7).
const std::vector<TorusCoverTemplate>& builtin_templates();

// Template lookup by name; throws std::invalid_argument when unknown.
const TorusCoverTemplate& template_by_name(const std::string& name);

// The (m,n) grid member of a template family.  Generators are the cell
// symbols appearing in the instantiated relators (named f<i>c<j>) plus s
// and t; relators are the core copies, the shift conjugations, and st=ts.
FamilyPoint instantiate_torus_cover(const TorusCoverTemplate& tmpl, long long m, long long n);

// Disjoint union of generators and relators; clashing generator names in
// the second factor are renamed.  Cost is additive.
Presentation free_product(const Presentation& p1, const Presentation& p2);

}  // namespace plength
