#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "plength/rational.hpp"

namespace plength {

// Square basis of a rank-r lattice in Q^r, stored column-wise.
struct LatticeBasis {
  int rank = 0;
  std::vector<std::vector<Rational>> columns;

  // Throws std::invalid_argument unless there are `rank` columns of `rank`
  // exact entries spanning the full space (nonzero determinant).
  void validate() const;
};

// The 1-norm measured against the rescaled coordinate frame x_i / a_i,
// i.e. |v| = sum a_i |v_i|.
struct WeightedOneNorm {
  std::vector<Rational> weights;
};

using Point2 = std::array<Rational, 2>;

// Triangles drawn in one unit cell, understood Z^2-periodically.
struct CellLayout {
  std::vector<std::array<Point2, 3>> triangles;

  void validate() const;  // rejects degenerate triangles
};

struct BasisCertificate {
  Rational product_of_norms;
  Rational covolume;
  Rational epsilon_witness;   // covolume / product_of_norms
  Rational epsilon_required;  // the constant the witness is checked against
};

struct CertificateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// |determinant| of the column matrix, exact.
Rational covolume(const LatticeBasis& b);

// Exact-arithmetic LLL reduction: the result spans the same lattice, is
// size-reduced, and satisfies the Lovasz condition with parameter delta in
// (1/4, 1).  Covolume is preserved.
LatticeBasis lll_reduce(const LatticeBasis& b, const Rational& delta = Rational(3, 4));

// sum_i a_i |v_i| for the given weights.
Rational weighted_one_norm(const std::vector<Rational>& v, const WeightedOneNorm& norm);

// The guaranteed constant for reduced_basis_certificate: any delta-reduced
// basis v_1..v_r satisfies covolume >= epsilon * prod |v_i| in the weighted
// 1-norm.  Derivation: the Lovasz condition gives |b_i|_2^2 <= c_i |b*_i|_2^2
// with c_i = 1 + (alpha + ... + alpha^{i-1})/4 and alpha = 4/(4 delta - 1),
// the Gram-Schmidt volumes multiply to the covolume, and Cauchy-Schwarz
// bounds the weighted 1-norm by sqrt(sum a_i^2) times the 2-norm; so
// epsilon = 1 / sqrt((sum a_i^2)^r * prod c_i), rounded down to a rational
// via an integer-square-root upper bound.  Unit weights at delta = 3/4 give
// epsilon_2 = 1/3 and epsilon_3 = 4/41.
Rational default_epsilon(int rank, const WeightedOneNorm& norm,
                         const Rational& delta = Rational(3, 4));

// Checks covolume >= epsilon * prod-of-norms for an already reduced basis;
// throws CertificateError when the inequality fails (the basis was not
// reduced for this delta).  The epsilon-free overload uses default_epsilon.
BasisCertificate reduced_basis_certificate(const LatticeBasis& b, const WeightedOneNorm& norm,
                                           const Rational& delta, const Rational& epsilon);
BasisCertificate reduced_basis_certificate(const LatticeBasis& b, const WeightedOneNorm& norm,
                                           const Rational& delta = Rational(3, 4));

// t_g + (sum norms) / (epsilon_r * prod norms), exact; requires >= 2 norms.
Rational relative_to_absolute_bound(long long t_g, const std::vector<Rational>& norms,
                                    const Rational& epsilon_r);

struct DomainContraction {
  long long total_triangles = 0;
  long long interior_contracted = 0;
  long long boundary_remaining = 0;
};

// Counts the Z^2-translates of the layout triangles in the torus quotient
// by the integer sublattice `sub` (one translate per residue class per
// triangle, so total = |det| * triangles-per-cell) and how many of them
// have some lift whose closed triangle sits inside the open fundamental
// parallelogram {s u + t v : 0 < s,t < 1}.
DomainContraction fundamental_domain_contraction(const CellLayout& layout,
                                                 const LatticeBasis& sub);

struct ContractionSweepRow {
  int k = 0;
  long long total = 0;
  long long interior = 0;
  long long boundary = 0;
  Rational boundary_ratio;  // boundary / total
};

// fundamental_domain_contraction over the dilates k*sub, k = 1..k_max.
std::vector<ContractionSweepRow> contraction_sweep(const CellLayout& layout,
                                                   const LatticeBasis& sub, int k_max);

// CSV with header k,total,interior,boundary,boundary_ratio; the ratio is
// rendered as a 6-significant-digit decimal; \n line endings.
std::string contraction_sweep_csv(const std::vector<ContractionSweepRow>& rows);

// Built-in layouts by name.  "fig8proof" is the three-triangle cell used
// for the figure-eight cusp torus: the unit square split along its diagonal
// plus the (0,0),(1,0),(2,1) triangle.
CellLayout named_layout(const std::string& name);

}  // namespace plength
