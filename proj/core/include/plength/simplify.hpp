#pragma once

#include "plength/presentation.hpp"

namespace plength {

// Caps for the simplification loop.  max_passes bounds the number of
// full move sweeps; max_total_length aborts if the sum of relator lengths
// ever exceeds it (a guard, since no accepted move increases that sum).
struct SimplifyBudget {
  int max_passes = 200;
  long long max_total_length = 1000000;
};

struct SimplifyResult {
  Presentation presentation;
  bool budget_exceeded = false;
  int passes = 0;
};

// Shrinks a presentation with group-preserving moves only:
//   1. free/cyclic reduction of every relator,
//   2. deletion of empty relators and of duplicates up to cyclic rotation
//      and inversion,
//   3. elimination of a generator through a relator containing it exactly
//      once, choosing the candidate that minimizes the projected change in
//      total relator length and applying it only when that change is <= 0
//      (ties: lowest generator ordinal, then lowest relator index),
//   4. replacement of a cyclic subword of one relator by the shorter
//      complementary part of another relator when that strictly shortens it.
// Passes repeat until one changes nothing or the budget runs out.  The
// result is the best presentation seen at any point, compared first by
// triangle cost, then total relator length, then generator count — so the
// cost of the output never exceeds the cost of the input.
SimplifyResult simplify_detailed(const Presentation& p, const SimplifyBudget& budget = {});

// Same, returning just the presentation.
Presentation simplify(const Presentation& p, const SimplifyBudget& budget = {});

}  // namespace plength
