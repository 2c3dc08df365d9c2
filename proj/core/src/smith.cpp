#include "plength/smith.hpp"

#include <algorithm>

namespace plength {

IntegerMatrix make_matrix(int rows, int cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("matrix dimensions must be nonnegative");
  IntegerMatrix m;
  m.rows = rows;
  m.cols = cols;
  m.entries.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), BigInt(0));
  return m;
}

IntegerMatrix abelianize(const Presentation& p) {
  p.validate();
  IntegerMatrix m = make_matrix(static_cast<int>(p.relators.size()), p.generator_count());
  for (int i = 0; i < m.rows; ++i)
    for (Letter l : p.relators[static_cast<size_t>(i)]) m.at(i, gen_of(l)) += sign_of(l);
  return m;
}

namespace {

BigInt abs_i(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

}  // namespace

SmithForm smith_normal_form(IntegerMatrix m) {
  int bound = std::min(m.rows, m.cols);
  int t = 0;
  while (t < bound) {
    // Pivot: smallest-magnitude nonzero entry of the trailing block.
    int pi = -1, pj = -1;
    for (int i = t; i < m.rows; ++i)
      for (int j = t; j < m.cols; ++j) {
        if (m.at(i, j) == 0) continue;
        if (pi < 0 || abs_i(m.at(i, j)) < abs_i(m.at(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // trailing block is zero
    if (pi != t)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(t, j), m.at(pi, j));
    if (pj != t)
      for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, t), m.at(i, pj));

    // Clear the pivot column and row.  A nonzero remainder anywhere is a
    // strictly smaller candidate, so re-run pivot selection; that bounds
    // the whole elimination because the minimal magnitude only shrinks.
    bool reselect = false;
    for (;;) {
      bool clean = true;
      for (int i = t + 1; i < m.rows; ++i) {
        if (m.at(i, t) == 0) continue;
        BigInt q = m.at(i, t) / m.at(t, t);
        if (q != 0)
          for (int j = t; j < m.cols; ++j) m.at(i, j) -= q * m.at(t, j);
        if (m.at(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < m.cols; ++j) {
        if (m.at(t, j) == 0) continue;
        BigInt q = m.at(t, j) / m.at(t, t);
        if (q != 0)
          for (int i = t; i < m.rows; ++i) m.at(i, j) -= q * m.at(i, t);
        if (m.at(t, j) != 0) clean = false;
      }
      if (!clean) {
        reselect = true;
        break;
      }
      // Divisibility fixup: fold a row holding a non-multiple into row t,
      // then re-clean with the same pivot — the fold plants a guaranteed
      // remainder, forcing a strictly smaller pivot next round.
      bool divisible = true;
      for (int i = t + 1; i < m.rows && divisible; ++i)
        for (int j = t + 1; j < m.cols && divisible; ++j)
          if (m.at(i, j) % m.at(t, t) != 0) {
            for (int k = t; k < m.cols; ++k) m.at(t, k) += m.at(i, k);
            divisible = false;
          }
      if (divisible) break;
    }
    if (reselect) continue;

    if (m.at(t, t) < 0)
      for (int j = t; j < m.cols; ++j) m.at(t, j) = -m.at(t, j);
    ++t;
  }

  SmithForm out;
  out.diagonal.reserve(static_cast<size_t>(bound));
  for (int i = 0; i < bound; ++i) out.diagonal.push_back(i < t ? m.at(i, i) : BigInt(0));
  out.rank = t;
  out.betti = m.cols - t;
  for (const BigInt& d : out.diagonal)
    if (d > 1) out.torsion_order *= d;
  return out;
}

long long torsion_lower_bound(const Presentation& p) {
  BigInt torsion = smith_normal_form(abelianize(p)).torsion_order;
  long long k = 0;
  BigInt pow = 1;
  while (pow < torsion) {
    pow *= 3;
    ++k;
  }
  return k;
}

bool torsion_bound_holds(const Presentation& p) {
  return tcost(p) >= torsion_lower_bound(p);
}

}  // namespace plength
