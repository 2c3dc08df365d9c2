// Coset tables and their enumeration: Todd-Coxeter (HLT relator scanning
// with a lookahead collapse pass) and low-index subgroup search by
// backtracking over standardized tables with first-in-orbit canonicity.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "plength/presentation.hpp"

namespace plength {

// Subgroup generators as words in the ambient group's generators.
struct SubgroupSpec {
  std::vector<Word> generator_words;
};

// Enumeration did not close within the allowed number of cosets.  This is
// indistinguishable from genuine infinite index, which is undecidable.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The right action of group generators on the cosets {0..index-1} of a
// subgroup; coset 0 is the subgroup itself.  Stored row-major with two
// columns per generator g: column 2g is the action of g, column 2g+1 the
// action of g^-1.  Serialized ordinals are 1-based.
class CosetTable {
 public:
  CosetTable() = default;
  CosetTable(int index, int generator_count);

  int index() const { return index_; }
  int generator_count() const { return ngens_; }

  int act(int coset, Letter l) const { return action_[slot(coset, l)]; }
  void set(int coset, Letter l, int target);  // also sets the inverse entry

  // Follows w from `start`; every step must be defined.
  int trace(int start, const Word& w) const;

  // Full invariant suite: total action, generator-wise permutations,
  // transitivity, every relator of p closes at every coset, and (if given)
  // every subgroup generator word closes at coset 0.  Throws on violation.
  void validate(const Presentation& p, const SubgroupSpec* sub = nullptr) const;

  // Renumbers cosets by first occurrence in a row-major scan from coset 0
  // (breadth-first numbering).  Conjugate subgroups with the same table up
  // to renumbering map to the same standardized table set.
  CosetTable standardized() const;

  const std::vector<int>& flat() const { return action_; }

  bool operator==(const CosetTable&) const = default;
  bool operator<(const CosetTable& other) const;  // (index, flat) lexicographic

  // {"index": d, "action": [row-major 1-based ordinals]}
  std::string to_json_string() const;
  static CosetTable from_json_string(const std::string& text);

  static int column(Letter l) { return 2 * gen_of(l) + (l > 0 ? 0 : 1); }

 private:
  size_t slot(int coset, Letter l) const {
    return static_cast<size_t>(coset) * (2 * ngens_) + static_cast<size_t>(column(l));
  }

  int index_ = 0;
  int ngens_ = 0;
  std::vector<int> action_;
};

// Enumerates the cosets of the subgroup generated by s.generator_words.
// Returns the complete, collapsed, standardized table; throws CapacityError
// if more than max_cosets simultaneous cosets would be needed.
CosetTable todd_coxeter(const Presentation& p, const SubgroupSpec& s, int max_cosets);

// One canonical (lexicographically least standardized) table per conjugacy
// class of subgroups of index <= max_index, sorted by (index, table).
std::vector<CosetTable> low_index_subgroups(const Presentation& p, int max_index);

// Extends a table over the first k generators to one over
// total_generator_count generators, where each added generator is defined
// (in increasing ordinal order) by a word over earlier generators.
CosetTable extend_table(const CosetTable& t,
                        const std::vector<std::pair<int, Word>>& aux_definitions,
                        int total_generator_count);

}  // namespace plength
