#include "plength/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace plength {

namespace {

Rational abs_r(const Rational& x) { return x < 0 ? Rational(-x) : x; }

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Determinant by fraction Gaussian elimination with partial (first nonzero)
// pivoting; exact.
Rational determinant(std::vector<std::vector<Rational>> m) {
  size_t n = m.size();
  Rational det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      Rational f = m[row][col] / m[col][col];
      for (size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
    }
  }
  return det;
}

// Rows of the column matrix (the determinant helper wants row vectors; for
// |det| the transpose is immaterial, but keep orientation honest).
std::vector<std::vector<Rational>> row_matrix(const LatticeBasis& b) {
  size_t n = static_cast<size_t>(b.rank);
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m[i][j] = b.columns[j][i];
  return m;
}

struct GramSchmidt {
  std::vector<std::vector<Rational>> star;  // orthogonal vectors
  std::vector<std::vector<Rational>> mu;    // lower-triangular coefficients
  std::vector<Rational> norm2;              // |star_i|^2
};

GramSchmidt gram_schmidt(const std::vector<std::vector<Rational>>& b) {
  size_t n = b.size();
  GramSchmidt gs;
  gs.star.assign(n, {});
  gs.mu.assign(n, std::vector<Rational>(n, Rational(0)));
  gs.norm2.assign(n, Rational(0));
  for (size_t i = 0; i < n; ++i) {
    gs.star[i] = b[i];
    for (size_t j = 0; j < i; ++j) {
      gs.mu[i][j] = dot(b[i], gs.star[j]) / gs.norm2[j];
      for (size_t k = 0; k < gs.star[i].size(); ++k)
        gs.star[i][k] -= gs.mu[i][j] * gs.star[j][k];
    }
    gs.norm2[i] = dot(gs.star[i], gs.star[i]);
    if (gs.norm2[i] == 0) throw std::invalid_argument("basis vectors are dependent");
  }
  return gs;
}

BigInt round_nearest(const Rational& x) { return rational_floor(x + Rational(1, 2)); }

}  // namespace

void LatticeBasis::validate() const {
  if (rank < 1) throw std::invalid_argument("lattice rank must be positive");
  if (static_cast<int>(columns.size()) != rank)
    throw std::invalid_argument("column count must equal rank");
  for (const auto& c : columns)
    if (static_cast<int>(c.size()) != rank)
      throw std::invalid_argument("column dimension must equal rank");
  if (covolume(*this) == 0) throw std::invalid_argument("basis is degenerate");
}

void CellLayout::validate() const {
  for (const auto& t : triangles) {
    Rational cross = (t[1][0] - t[0][0]) * (t[2][1] - t[0][1]) -
                     (t[1][1] - t[0][1]) * (t[2][0] - t[0][0]);
    if (cross == 0) throw std::invalid_argument("layout triangle is degenerate");
  }
}

Rational covolume(const LatticeBasis& b) {
  if (b.rank < 1 || static_cast<int>(b.columns.size()) != b.rank)
    throw std::invalid_argument("malformed basis");
  return abs_r(determinant(row_matrix(b)));
}

LatticeBasis lll_reduce(const LatticeBasis& b, const Rational& delta) {
  b.validate();
  if (!(delta > Rational(1, 4) && delta < 1))
    throw std::invalid_argument("delta must lie in (1/4, 1)");
  std::vector<std::vector<Rational>> v = b.columns;
  size_t n = v.size();
  if (n == 1) return b;
  GramSchmidt gs = gram_schmidt(v);
  size_t k = 1;
  while (k < n) {
    for (size_t j = k; j-- > 0;) {
      BigInt q = round_nearest(gs.mu[k][j]);
      if (q != 0) {
        Rational qr(q);
        for (size_t idx = 0; idx < v[k].size(); ++idx) v[k][idx] -= qr * v[j][idx];
        gs = gram_schmidt(v);
      }
    }
    if (gs.norm2[k] >= (delta - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.norm2[k - 1]) {
      ++k;
    } else {
      std::swap(v[k], v[k - 1]);
      gs = gram_schmidt(v);
      k = std::max<size_t>(k - 1, 1);
    }
  }
  LatticeBasis out;
  out.rank = b.rank;
  out.columns = std::move(v);
  return out;
}

Rational weighted_one_norm(const std::vector<Rational>& v, const WeightedOneNorm& norm) {
  if (v.size() != norm.weights.size())
    throw std::invalid_argument("weight count must match vector dimension");
  Rational s = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    if (!(norm.weights[i] > 0)) throw std::invalid_argument("weights must be positive");
    s += norm.weights[i] * abs_r(v[i]);
  }
  return s;
}

Rational default_epsilon(int rank, const WeightedOneNorm& norm, const Rational& delta) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  if (static_cast<int>(norm.weights.size()) != rank)
    throw std::invalid_argument("weight count must match rank");
  if (!(delta > Rational(1, 4) && delta < 1))
    throw std::invalid_argument("delta must lie in (1/4, 1)");
  Rational alpha = Rational(4) / (Rational(4) * delta - 1);
  Rational weight_sq = 0;
  for (const Rational& a : norm.weights) {
    if (!(a > 0)) throw std::invalid_argument("weights must be positive");
    weight_sq += a * a;
  }
  Rational product = rational_pow(weight_sq, rank);
  Rational alpha_pow = 1;
  Rational geo = 0;  // alpha + ... + alpha^{i-1}
  for (int i = 1; i <= rank; ++i) {
    Rational c_i = 1 + geo / 4;
    product *= c_i;
    alpha_pow *= alpha;
    geo += alpha_pow;
  }
  return Rational(1) / sqrt_upper_bound(product);
}

BasisCertificate reduced_basis_certificate(const LatticeBasis& b, const WeightedOneNorm& norm,
                                           const Rational& delta, const Rational& epsilon) {
  b.validate();
  BasisCertificate cert;
  cert.epsilon_required = epsilon;
  cert.covolume = covolume(b);
  cert.product_of_norms = 1;
  for (const auto& col : b.columns) cert.product_of_norms *= weighted_one_norm(col, norm);
  cert.epsilon_witness = cert.covolume / cert.product_of_norms;
  (void)delta;
  if (cert.epsilon_witness < cert.epsilon_required)
    throw CertificateError("reduced-basis certificate failed: witness " +
                           fraction_string(cert.epsilon_witness) + " < required " +
                           fraction_string(cert.epsilon_required));
  return cert;
}

BasisCertificate reduced_basis_certificate(const LatticeBasis& b, const WeightedOneNorm& norm,
                                           const Rational& delta) {
  return reduced_basis_certificate(b, norm, delta, default_epsilon(b.rank, norm, delta));
}

Rational relative_to_absolute_bound(long long t_g, const std::vector<Rational>& norms,
                                    const Rational& epsilon_r) {
  if (t_g < 0) throw std::invalid_argument("cost term must be nonnegative");
  if (norms.size() < 2)
    throw std::invalid_argument("bound requires at least two norms (rank >= 2)");
  if (!(epsilon_r > 0)) throw std::invalid_argument("epsilon must be positive");
  Rational sum = 0, prod = 1;
  for (const Rational& x : norms) {
    if (!(x > 0)) throw std::invalid_argument("norms must be positive");
    sum += x;
    prod *= x;
  }
  return Rational(t_g) + sum / (epsilon_r * prod);
}

namespace {

// True when some Z^2-translate of the triangle with A-frame coordinates
// Y_1..Y_3 lands in the open unit square; per-axis the least integer shift
// above -min must leave room below 1 - max.
bool fits_in_open_cell(const std::array<std::array<Rational, 2>, 3>& y) {
  for (int axis = 0; axis < 2; ++axis) {
    Rational lo = y[0][static_cast<size_t>(axis)];
    Rational hi = lo;
    for (int v = 1; v < 3; ++v) {
      const Rational& c = y[static_cast<size_t>(v)][static_cast<size_t>(axis)];
      if (c < lo) lo = c;
      if (c > hi) hi = c;
    }
    Rational shift(rational_floor(-lo) + 1);
    if (!(shift + hi < 1)) return false;
  }
  return true;
}

}  // namespace

DomainContraction fundamental_domain_contraction(const CellLayout& layout,
                                                 const LatticeBasis& sub) {
  layout.validate();
  sub.validate();
  if (sub.rank != 2) throw std::invalid_argument("domain contraction is rank-2 only");
  for (const auto& col : sub.columns)
    for (const Rational& x : col)
      if (boost::multiprecision::denominator(x) != 1)
        throw std::invalid_argument("sublattice basis must have integer entries");

  const Rational u0 = sub.columns[0][0], u1 = sub.columns[0][1];
  const Rational v0 = sub.columns[1][0], v1 = sub.columns[1][1];
  Rational det = u0 * v1 - u1 * v0;
  BigInt d_abs = boost::multiprecision::numerator(abs_r(det));
  // A^{-1} rows, so frame(p) = (s, t) with p = s*u + t*v.
  auto frame = [&](const Rational& x, const Rational& y) {
    return std::array<Rational, 2>{(v1 * x - v0 * y) / det, (u0 * y - u1 * x) / det};
  };

  // Residue representatives: integer points of the half-open parallelogram.
  std::vector<std::array<BigInt, 2>> residues;
  {
    std::array<Rational, 4> xs{Rational(0), u0, v0, u0 + v0};
    std::array<Rational, 4> ys{Rational(0), u1, v1, u1 + v1};
    BigInt xlo = rational_floor(*std::min_element(xs.begin(), xs.end()));
    BigInt xhi = rational_ceil(*std::max_element(xs.begin(), xs.end()));
    BigInt ylo = rational_floor(*std::min_element(ys.begin(), ys.end()));
    BigInt yhi = rational_ceil(*std::max_element(ys.begin(), ys.end()));
    for (BigInt cx = xlo; cx <= xhi; ++cx)
      for (BigInt cy = ylo; cy <= yhi; ++cy) {
        auto st = frame(Rational(cx), Rational(cy));
        if (st[0] >= 0 && st[0] < 1 && st[1] >= 0 && st[1] < 1)
          residues.push_back({cx, cy});
      }
  }
  if (BigInt(residues.size()) != d_abs)
    throw std::logic_error("residue class enumeration does not match the determinant");

  DomainContraction out;
  out.total_triangles =
      d_abs.convert_to<long long>() * static_cast<long long>(layout.triangles.size());
  for (const auto& tri : layout.triangles)
    for (const auto& c : residues) {
      std::array<std::array<Rational, 2>, 3> y;
      for (int v = 0; v < 3; ++v)
        y[static_cast<size_t>(v)] = frame(tri[static_cast<size_t>(v)][0] + Rational(c[0]),
                                          tri[static_cast<size_t>(v)][1] + Rational(c[1]));
      if (fits_in_open_cell(y)) ++out.interior_contracted;
    }
  out.boundary_remaining = out.total_triangles - out.interior_contracted;
  return out;
}

std::vector<ContractionSweepRow> contraction_sweep(const CellLayout& layout,
                                                   const LatticeBasis& sub, int k_max) {
  if (k_max < 1) throw std::invalid_argument("sweep bound must be positive");
  std::vector<ContractionSweepRow> rows;
  for (int k = 1; k <= k_max; ++k) {
    LatticeBasis scaled = sub;
    for (auto& col : scaled.columns)
      for (Rational& x : col) x *= k;
    DomainContraction dc = fundamental_domain_contraction(layout, scaled);
    ContractionSweepRow row;
    row.k = k;
    row.total = dc.total_triangles;
    row.interior = dc.interior_contracted;
    row.boundary = dc.boundary_remaining;
    row.boundary_ratio = Rational(dc.boundary_remaining) / Rational(dc.total_triangles);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string contraction_sweep_csv(const std::vector<ContractionSweepRow>& rows) {
  std::ostringstream os;
  os << "k,total,interior,boundary,boundary_ratio\n";
  for (const ContractionSweepRow& row : rows)
    os << row.k << ',' << row.total << ',' << row.interior << ',' << row.boundary << ','
       << decimal_string(row.boundary_ratio) << '\n';
  return os.str();
}

CellLayout named_layout(const std::string& name) {
  if (name == "fig8proof") {
    auto pt = [](long long x, long long y) { return Point2{Rational(x), Rational(y)}; };
    CellLayout layout;
    layout.triangles.push_back({pt(0, 0), pt(1, 0), pt(1, 1)});
    layout.triangles.push_back({pt(0, 0), pt(1, 1), pt(0, 1)});
    layout.triangles.push_back({pt(0, 0), pt(1, 0), pt(2, 1)});
    layout.validate();
    return layout;
  }
  throw std::invalid_argument("unknown layout: " + name);
}

}  // namespace plength
