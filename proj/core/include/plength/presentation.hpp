// Finite presentations and the triangle-cost function: the cost of a
// presentation is sum over relators of max(0, length - 2), the number of
// triangles in a triangular (all relator lengths <= 3) refinement of its
// presentation complex.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plength/word.hpp"

namespace plength {

struct Presentation {
  std::vector<std::string> generator_names;  // distinct identifiers
  std::vector<Word> relators;

  int generator_count() const { return static_cast<int>(generator_names.size()); }

  // Throws std::invalid_argument on out-of-range letters, duplicate or
  // ill-formed generator names.
  void validate() const;

  bool operator==(const Presentation&) const = default;
};

using TriangleCost = long long;

// max(0, |cyclic_reduce(w)| - 2): triangles needed for one relator.
TriangleCost word_cost(const Word& w);

// Sum of word costs over all relators.  Relators are cyclically reduced
// before measuring (a cyclically reduced conjugate presents the same group
// with a presentation complex that is never larger).
TriangleCost tcost(const Presentation& p);

// True when every relator has length 2 or 3 (bigons and triangles only).
bool is_triangular(const Presentation& p);

// Fan-splits every relator of length k >= 4 into k-2 relators of length 3
// by introducing one auxiliary generator per diagonal.  Relators are
// cyclically reduced first; cost is preserved exactly and the group is
// unchanged (each auxiliary generator is defined by its first relator).
Presentation triangulate(const Presentation& p);

// triangulate plus the definition of each auxiliary generator as a word in
// generators of lower ordinal; definitions are listed in increasing ordinal
// order.  Coset tables over the input extend along these definitions.
struct Triangulation {
  Presentation presentation;
  std::vector<std::pair<int, Word>> aux_definitions;  // (ordinal, defining word)
};
Triangulation triangulate_full(const Presentation& p);

// A name of the form stem||digits not present in `taken`, with the smallest
// positive suffix; `counter` carries the next suffix to try across calls.
std::string unique_generator_name(const std::vector<std::string>& taken, const std::string& stem,
                                  int& counter);

}  // namespace plength
