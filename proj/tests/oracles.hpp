// Independent reference implementations used to cross-check the library.
// Everything here is deliberately written with different algorithms than the
// code under test: permutation closure instead of coset enumeration, Hermite
// forms instead of backtracking search, determinantal divisors instead of
// elementary operations, Lagrange reduction instead of LLL, and direct
// translate enumeration instead of closed-form shift tests.
#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "plength/lattice.hpp"
#include "plength/rational.hpp"
#include "plength/smith.hpp"

namespace oracle {

using plength::BigInt;
using plength::Rational;

// --- permutation groups ----------------------------------------------------

using Perm = std::vector<int>;  // images of 0..n-1

inline Perm perm_compose(const Perm& a, const Perm& b) {  // apply a, then b
  Perm c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = b[static_cast<size_t>(a[i])];
  return c;
}

// Order of the group generated by the given permutations (BFS closure).
inline long long perm_group_order(const std::vector<Perm>& gens) {
  if (gens.empty()) return 1;
  size_t n = gens[0].size();
  Perm id(n);
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> seen{id};
  std::vector<Perm> queue{id};
  for (size_t i = 0; i < queue.size(); ++i)
    for (const Perm& g : gens) {
      Perm next = perm_compose(queue[i], g);
      if (seen.insert(next).second) queue.push_back(next);
    }
  return static_cast<long long>(seen.size());
}

// All elements of the generated group.
inline std::vector<Perm> perm_group_elements(const std::vector<Perm>& gens) {
  size_t n = gens.empty() ? 1 : gens[0].size();
  Perm id(n);
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> seen{id};
  std::vector<Perm> queue{id};
  for (size_t i = 0; i < queue.size(); ++i)
    for (const Perm& g : gens) {
      Perm next = perm_compose(queue[i], g);
      if (seen.insert(next).second) queue.push_back(next);
    }
  return queue;
}

// Conjugacy classes of subgroups of a small permutation group, counted per
// index.  Enumerates all subsets closed under composition (the group must be
// tiny), then groups them under conjugation.
inline std::map<long long, long long> subgroup_classes_by_index(const std::vector<Perm>& gens) {
  std::vector<Perm> elems = perm_group_elements(gens);
  size_t n = elems.size();
  if (n > 12) throw std::invalid_argument("group too large for subset enumeration");
  std::map<Perm, size_t> pos;
  for (size_t i = 0; i < n; ++i) pos[elems[i]] = i;

  std::vector<std::set<size_t>> subgroups;
  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    std::set<size_t> s;
    for (size_t i = 0; i < n; ++i)
      if (mask & (size_t{1} << i)) s.insert(i);
    if (s.empty()) continue;
    bool closed = true;
    for (size_t a : s) {
      for (size_t b : s) {
        Perm c = perm_compose(elems[a], elems[b]);
        if (!s.count(pos[c])) {
          closed = false;
          break;
        }
      }
      if (!closed) break;
    }
    if (closed) subgroups.push_back(std::move(s));
  }

  // Group under conjugation.
  std::set<std::set<size_t>> seen;
  std::map<long long, long long> classes;
  for (const auto& s : subgroups) {
    if (seen.count(s)) continue;
    for (const Perm& g : elems) {
      Perm ginv(g.size());
      for (size_t i = 0; i < g.size(); ++i) ginv[static_cast<size_t>(g[i])] = static_cast<int>(i);
      std::set<size_t> conj;
      for (size_t a : s) conj.insert(pos[perm_compose(perm_compose(ginv, elems[a]), g)]);
      seen.insert(conj);
    }
    classes[static_cast<long long>(n / s.size())] += 1;
  }
  return classes;
}

// Conjugacy classes of index-d subgroups of the rank-2 free group: pairs of
// permutations in S_d generating a transitive group, counted up to
// simultaneous conjugation.  Enumerates S_d x S_d directly (d tiny).
inline long long free2_subgroup_classes(int d) {
  std::vector<Perm> sym;
  Perm id(static_cast<size_t>(d));
  std::iota(id.begin(), id.end(), 0);
  Perm p = id;
  do {
    sym.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  auto transitive = [&](const Perm& a, const Perm& b) {
    std::vector<int> comp(static_cast<size_t>(d), -1);
    std::vector<int> stack{0};
    comp[0] = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const Perm* g : {&a, &b}) {
        int w = (*g)[static_cast<size_t>(v)];
        if (comp[static_cast<size_t>(w)] < 0) {
          comp[static_cast<size_t>(w)] = 0;
          stack.push_back(w);
        }
      }
    }
    for (int v : comp)
      if (v < 0) return false;
    return true;
  };

  std::set<std::pair<Perm, Perm>> seen;
  long long classes = 0;
  for (const Perm& a : sym)
    for (const Perm& b : sym) {
      if (!transitive(a, b) || seen.count({a, b})) continue;
      ++classes;
      for (const Perm& g : sym) {
        Perm ginv(g.size());
        for (size_t i = 0; i < g.size(); ++i)
          ginv[static_cast<size_t>(g[i])] = static_cast<int>(i);
        seen.insert({perm_compose(perm_compose(ginv, a), g),
                     perm_compose(perm_compose(ginv, b), g)});
      }
    }
  return classes;
}

// --- sublattices of Z^2 ----------------------------------------------------

// Number of index-d sublattices of Z^2 for each d = 1..d_max, by enumerating
// Hermite normal forms [[a, b], [0, c]] with a*c = d, 0 <= b < a.
inline std::map<int, long long> hnf_sublattice_counts(int d_max) {
  std::map<int, long long> counts;
  for (int d = 1; d <= d_max; ++d) {
    long long total = 0;
    for (int a = 1; a <= d; ++a)
      if (d % a == 0) total += a;  // b ranges over 0..a-1
    counts[d] = total;
  }
  return counts;
}

// --- Smith normal form via determinantal divisors ---------------------------

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

inline BigInt minor_det(const plength::IntegerMatrix& m, const std::vector<int>& rows,
                        const std::vector<int>& cols) {
  size_t k = rows.size();
  if (k == 1) return m.at(rows[0], cols[0]);
  BigInt det = 0;
  int sign = 1;
  for (size_t i = 0; i < k; ++i) {
    std::vector<int> sub_rows;
    for (size_t r = 1; r < k; ++r) sub_rows.push_back(rows[r]);
    std::vector<int> sub_cols;
    for (size_t c = 0; c < k; ++c)
      if (c != i) sub_cols.push_back(cols[c]);
    det += sign * m.at(rows[0], cols[i]) * minor_det(m, sub_rows, sub_cols);
    sign = -sign;
  }
  return det;
}

inline void combinations(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(static_cast<size_t>(k));
  std::iota(cur.begin(), cur.end(), 0);
  for (;;) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++cur[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
  }
}

// Invariant factors via d_k = gcd of all k-by-k minors; diag_k = d_k/d_{k-1}.
// Returns the nonzero invariant factors only (positive, each dividing the
// next); the matrix's rank is the returned vector's size.
inline std::vector<BigInt> invariant_factors_via_minors(const plength::IntegerMatrix& m) {
  std::vector<BigInt> factors;
  BigInt prev = 1;
  int maxk = std::min(m.rows, m.cols);
  for (int k = 1; k <= maxk; ++k) {
    std::vector<std::vector<int>> row_sets, col_sets;
    combinations(m.rows, k, row_sets);
    combinations(m.cols, k, col_sets);
    BigInt g = 0;
    for (const auto& rs : row_sets)
      for (const auto& cs : col_sets) g = big_gcd(g, minor_det(m, rs, cs));
    if (g == 0) break;
    if (g < 0) g = -g;
    factors.push_back(g / prev);
    prev = g;
  }
  return factors;
}

// --- shortest vectors in rank 2 ---------------------------------------------

struct Vec2 {
  BigInt x, y;
};

inline BigInt norm2(const Vec2& v) { return v.x * v.x + v.y * v.y; }
inline BigInt dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

// Squared length of the shortest nonzero vector, by Lagrange (Gauss)
// reduction: after convergence the shorter basis vector attains the minimum.
inline BigInt lagrange_min_norm2(Vec2 u, Vec2 v) {
  if (norm2(u) == 0 || norm2(v) == 0) throw std::invalid_argument("degenerate basis");
  for (;;) {
    if (norm2(u) > norm2(v)) std::swap(u, v);
    // t = nearest integer to <u,v>/<u,u>
    Rational mu(dot(u, v), norm2(u));
    BigInt t = plength::rational_floor(mu + Rational(1, 2));
    if (t == 0) return norm2(u);
    v.x -= t * u.x;
    v.y -= t * u.y;
  }
}

// --- triangle-in-parallelogram enumeration ----------------------------------

// Independent recount of fundamental_domain_contraction: enumerates residue
// representatives c in [0, |det|)^2 (deduplicated by the fractional part of
// A^{-1} c) and, per triangle and residue, searches all integer translates k
// with every vertex of A^{-1}(tri + c) + k strictly inside (0,1)^2.
struct ContractionCount {
  long long total = 0;
  long long interior = 0;
};

inline ContractionCount contraction_by_enumeration(const plength::CellLayout& layout,
                                                   const plength::LatticeBasis& sub) {
  using plength::Point2;
  const Rational a = sub.columns[0][0], c = sub.columns[0][1];
  const Rational b = sub.columns[1][0], d = sub.columns[1][1];
  const Rational det = a * d - b * c;
  if (det == 0) throw std::invalid_argument("degenerate sublattice");
  // Cramer inverse rows: A^{-1} (x, y) = ((d x - b y)/det, (a y - c x)/det).
  auto frame = [&](const Rational& x, const Rational& y) {
    return std::array<Rational, 2>{(d * x - b * y) / det, (a * y - c * x) / det};
  };
  auto frac = [](const Rational& q) { return q - Rational(plength::rational_floor(q)); };

  BigInt det_abs = boost::multiprecision::abs(boost::multiprecision::numerator(det)) /
                   boost::multiprecision::denominator(det);
  long long n = det_abs.convert_to<long long>();

  std::set<std::array<Rational, 2>> classes;
  std::vector<std::array<Rational, 2>> reps;  // one integer point per class
  for (long long cx = 0; cx < n; ++cx)
    for (long long cy = 0; cy < n; ++cy) {
      auto st = frame(Rational(cx), Rational(cy));
      std::array<Rational, 2> key{frac(st[0]), frac(st[1])};
      if (classes.insert(key).second) reps.push_back({Rational(cx), Rational(cy)});
    }
  if (static_cast<long long>(reps.size()) != n)
    throw std::logic_error("residue enumeration mismatch");

  ContractionCount out;
  out.total = n * static_cast<long long>(layout.triangles.size());
  for (const auto& tri : layout.triangles)
    for (const auto& rep : reps) {
      std::array<std::array<Rational, 2>, 3> y;
      for (int v = 0; v < 3; ++v)
        y[static_cast<size_t>(v)] =
            frame(tri[static_cast<size_t>(v)][0] + rep[0], tri[static_cast<size_t>(v)][1] + rep[1]);
      bool found = false;
      // Candidate shifts per axis: k must satisfy 0 < y_v + k < 1 for all v,
      // so k lies in (-1 - max y, 1 - min y); enumerate that integer range.
      Rational lo0 = y[0][0], hi0 = y[0][0], lo1 = y[0][1], hi1 = y[0][1];
      for (int v = 1; v < 3; ++v) {
        lo0 = std::min(lo0, y[static_cast<size_t>(v)][0]);
        hi0 = std::max(hi0, y[static_cast<size_t>(v)][0]);
        lo1 = std::min(lo1, y[static_cast<size_t>(v)][1]);
        hi1 = std::max(hi1, y[static_cast<size_t>(v)][1]);
      }
      for (BigInt k0 = plength::rational_floor(-hi0) - 1;
           k0 <= plength::rational_floor(-lo0) + 1 && !found; ++k0)
        for (BigInt k1 = plength::rational_floor(-hi1) - 1;
             k1 <= plength::rational_floor(-lo1) + 1 && !found; ++k1) {
          bool ok = true;
          for (int v = 0; v < 3 && ok; ++v) {
            Rational s = y[static_cast<size_t>(v)][0] + Rational(k0);
            Rational t = y[static_cast<size_t>(v)][1] + Rational(k1);
            ok = s > 0 && s < 1 && t > 0 && t < 1;
          }
          if (ok) found = true;
        }
      if (found) ++out.interior;
    }
  return out;
}

}  // namespace oracle
