#pragma once

#include <vector>

#include "plength/presentation.hpp"
#include "plength/rational.hpp"

namespace plength {

struct IntegerMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<BigInt> entries;  // row-major

  BigInt& at(int i, int j) { return entries[static_cast<size_t>(i) * cols + j]; }
  const BigInt& at(int i, int j) const { return entries[static_cast<size_t>(i) * cols + j]; }
};

IntegerMatrix make_matrix(int rows, int cols);

struct SmithForm {
  std::vector<BigInt> diagonal;  // d_1 | d_2 | ..., nonnegative, zeros last
  int rank = 0;                  // number of nonzero diagonal entries
  int betti = 0;                 // columns - rank (free rank of the cokernel)
  BigInt torsion_order = 1;      // product of the entries > 1
};

// Exponent-sum matrix of the presentation: one row per relator, one column
// per generator.
IntegerMatrix abelianize(const Presentation& p);

// Diagonalization by unimodular row/column operations, selecting the
// smallest-magnitude entry as pivot at each step to control growth.
SmithForm smith_normal_form(IntegerMatrix m);

// Smallest k >= 0 with 3^k >= |torsion of the abelianization|.
long long torsion_lower_bound(const Presentation& p);

// The length-vs-torsion inequality 3^tcost(p) >= torsion order, checked in
// exact integers.  Meaningful as a theorem only for groups without
// 2-torsion; callers curate their fixtures.
bool torsion_bound_holds(const Presentation& p);

}  // namespace plength
