#pragma once

#include <utility>
#include <vector>

#include "plength/coset_table.hpp"
#include "plength/presentation.hpp"

namespace plength {

// Coset representatives plus the spanning tree they trace.
// representative_word[c] leads from coset 0 to coset c; tree_edges hold
// (coset, positive letter) pairs, one per non-root coset.
struct SchreierTransversal {
  std::vector<Word> representative_word;
  std::vector<std::pair<int, Letter>> tree_edges;
};

// Breadth-first transversal using positively oriented edges only, exploring
// generators in ordinal order.  Positive edges alone reach every coset:
// each generator acts as a permutation, so following its cycle forward
// substitutes for any inverse step.  Representatives are therefore positive
// words; coset 0 gets the empty word.
SchreierTransversal schreier_transversal(const CosetTable& t);

// Rewrites p into a presentation of the subgroup encoded by t.  Generators
// are the non-tree (coset, generator) pairs, enumerated generator-major and
// named <generator>c<coset ordinal>; tree pairs are dropped as identities.
// Relators are the rewrites of each input relator at each coset (input
// order, then coset order), freely and cyclically reduced; relators that
// reduce to nothing are kept, so generator/relator counts always satisfy
// 1 - gens + relators = index * (1 - gens_in + relators_in).
Presentation rewrite_presentation(const Presentation& p, const CosetTable& t);

}  // namespace plength
