// The presentation corpus shared by the property suites: a mix of surface,
// Seifert, torus-cover, finite, free, and abelian groups small enough to
// enumerate subgroups of but varied enough to exercise every code path.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "plength/families.hpp"
#include "plength/parse.hpp"
#include "plength/presentation.hpp"

namespace fixtures {

struct Fixture {
  std::string name;
  plength::Presentation presentation;
  bool two_torsion_free;  // the group (not just its abelianization)
};

inline std::vector<Fixture> corpus() {
  using plength::parse_presentation;
  std::vector<Fixture> all;
  all.push_back({"surface2", plength::surface(2).presentation, true});
  all.push_back({"seifert_1_3", plength::seifert(1, 3).presentation, true});
  all.push_back({"figure8_base",
                 plength::instantiate_torus_cover(plength::template_by_name("figure8"), 1, 1)
                     .presentation,
                 true});
  all.push_back({"z6", parse_presentation("< x | x^6 >"), false});
  all.push_back({"s3", parse_presentation("< a, b | a^2, b^2, (a b)^3 >"), false});
  all.push_back({"free1", parse_presentation("< x | >"), true});
  all.push_back({"free2", parse_presentation("< a, b | >"), true});
  all.push_back({"z2", parse_presentation("< x, y | x y x^-1 y^-1 >"), true});
  all.push_back({"z5", parse_presentation("< x | x^5 >"), true});
  all.push_back({"klein_bottle", parse_presentation("< a, b | a b a b^-1 >"), true});
  all.push_back({"trefoil", parse_presentation("< a, b | a^2 b^-3 >"), true});
  return all;
}

}  // namespace fixtures
