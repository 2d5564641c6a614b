#include "core/bundle.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "core/error.hpp"
#include "core/poly.hpp"
#include "core/qmatrix.hpp"

namespace veron {

namespace {

// Kernel dimension of the section constraint system for h0(t, n), given a
// bound w on the absolute exponents of t and of its inverse. Unknowns are
// the coefficients b_{j,m} of sinf_j (degree at most n + w); the negative
// z-exponents of z^n T(z) sinf(1/z) must vanish, and b_{j,m} contributes
// coeff_{e-n+m}(T_ij) at exponent e.
int h0_probe(const LMatrix& t, int n, int w) {
  int r = t.rows();
  int bmax = n + w;
  if (bmax < 0) return 0;
  int cols = r * (bmax + 1);
  std::vector<std::vector<Rat>> rows;
  for (int i = 0; i < r; ++i)
    for (int e = -2 * w; e < 0; ++e) {  // product exponents reach down to n - w - bmax = -2w
      std::vector<Rat> row(static_cast<size_t>(cols));
      bool nonzero = false;
      for (int j = 0; j < r; ++j) {
        const LPoly& p = t.at(i, j);
        if (p.is_zero()) continue;
        for (int m = 0; m <= bmax; ++m) {
          Rat c = p.coeff(e - n + m);
          if (!c.is_zero()) {
            row[size_t(j) * (bmax + 1) + m] = c;
            nonzero = true;
          }
        }
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  if (rows.empty()) return cols;
  QMatrix sys(int(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < cols; ++j) sys.at(int(i), j) = rows[i][size_t(j)];
  return cols - rank(sys);
}

// Walk a section count h over [lo, hi] and return the positions where its
// slope increases, with multiplicity. For a sum of r line bundles the count
// is piecewise linear and convex, h(lo) = 0, each slope lies in [0, r] and
// the walk ends at slope r; nullopt as soon as the observed values break
// that shape.
template <class H>
std::optional<std::vector<int>> jump_positions(H&& h, int lo, int hi, int r) {
  if (h(lo) != 0) return std::nullopt;
  int prev_h = 0, prev_diff = 0;
  std::vector<int> pos;
  for (int x = lo + 1; x <= hi; ++x) {
    int hx = h(x);
    int diff = hx - prev_h;
    if (diff < prev_diff || diff > r) return std::nullopt;
    pos.insert(pos.end(), size_t(diff - prev_diff), x);
    prev_h = hx;
    prev_diff = diff;
    if (diff == r) return pos;
  }
  return std::nullopt;
}

Rat binom(int n, int k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rat(b);
}

QPoly lpoly_to_qpoly(const LPoly& p) {
  std::vector<Rat> c;
  for (const auto& [e, a] : p.terms()) {
    require(e >= 0, Err::Internal, "negative exponent in polynomial conversion");
    if (int(c.size()) <= e) c.resize(size_t(e) + 1);
    c[size_t(e)] = a;
  }
  return QPoly::from_coeffs(std::move(c));
}

// The 2x2 minors of an (n+1) x 2 chart matrix must have no common root,
// i.e. the two columns stay independent in every fiber of the chart.
void check_coprime_minors(const LMatrix& m) {
  QPoly g;
  for (int i1 = 0; i1 < m.rows(); ++i1)
    for (int i2 = i1 + 1; i2 < m.rows(); ++i2) {
      LPoly minor = m.at(i1, 0) * m.at(i2, 1) - m.at(i1, 1) * m.at(i2, 0);
      g = poly_gcd(g, lpoly_to_qpoly(minor));
      if (g.deg() == 0) return;
    }
  raise(Err::Internal, "chart matrix minors share a root");
}

// h0 of the cokernel dual twisted by t: polynomial rows phi of degree at
// most t - n, n + 1 entries, with phi * iinf = 0. Equations are the
// coefficients of the two entries of the product.
int conormal_h0(const LMatrix& iinf, int n, int t) {
  int dmax = t - n;
  if (dmax < 0) return 0;
  int cols = (n + 1) * (dmax + 1);
  int degmax = dmax + n - 1;  // iinf entries have degree at most n - 1
  QMatrix sys(2 * (degmax + 1), cols);
  for (int col = 0; col < 2; ++col)
    for (int k = 0; k <= n; ++k) {
      const LPoly& p = iinf.at(k, col);
      if (p.is_zero()) continue;
      for (int e = 0; e <= degmax; ++e)
        for (int m = 0; m <= dmax; ++m)
          sys.at(col * (degmax + 1) + e, k * (dmax + 1) + m) = p.coeff(e - m);
    }
  return cols - rank(sys);
}

}  // namespace

int h0_twisted(const LMatrix& t, int n) {
  validate_transition(t);
  int w = std::max(t.max_abs_exp(), transition_inverse(t).max_abs_exp());
  return h0_probe(t, n, w);
}

std::vector<int> splitting_type(const LMatrix& t) {
  TransitionDet dt = validate_transition(t);
  int r = t.rows();
  int w0 = std::max(t.max_abs_exp(), transition_inverse(t).max_abs_exp());
  for (int w : {w0, 2 * w0 + 2}) {
    auto pos = jump_positions([&](int n) { return h0_probe(t, n, w); }, -w - 1, w + 1, r);
    if (!pos) continue;
    // O(a) starts contributing sections at the twist n = -a, so positions
    // ascending means exponents weakly decreasing.
    std::vector<int> exps;
    long sum = 0;
    for (int n : *pos) {
      exps.push_back(-n);
      sum += -n;
    }
    if (sum != dt.exp) continue;  // total degree must match the determinant
    return exps;
  }
  raise(Err::InconsistentWindow, "section count profile failed its shape checks");
}

BirkhoffFactorization birkhoff_factorize(const LMatrix& t) {
  TransitionDet dt = validate_transition(t);
  int r = t.rows();
  int s = 0;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (!t.at(i, j).is_zero()) s = std::max(s, -t.at(i, j).min_exp());
  // T = z^-s P with P polynomial. Column-reduce P^T so that row i of the
  // reduced transpose carries a single twist exponent; transposing back
  // puts the z-polynomial gauge factor on the left, which is the side the
  // chart-0 frame change acts on.
  LMatrix p = t.shifted(s).transpose();
  LMatrix v = LMatrix::identity(r);

  auto col_degree = [&](int j) {
    int d = -1;
    for (int i = 0; i < r; ++i)
      if (!p.at(i, j).is_zero()) d = std::max(d, p.at(i, j).max_exp());
    require(d >= 0, Err::Internal, "zero column during reduction");
    return d;
  };

  // Column reduction: each pass strictly decreases the total column degree,
  // which is bounded below by deg det P, so at most `guard` passes run.
  std::vector<int> d(static_cast<size_t>(r));
  long guard = 0;
  for (int j = 0; j < r; ++j) guard += col_degree(j);
  for (long round = 0;; ++round) {
    QMatrix lead(r, r);
    for (int j = 0; j < r; ++j) {
      d[size_t(j)] = col_degree(j);
      for (int i = 0; i < r; ++i) lead.at(i, j) = p.at(i, j).coeff(d[size_t(j)]);
    }
    QMatrix ker = kernel_basis(lead);
    if (ker.cols() == 0) break;
    require(round < guard, Err::Internal, "column reduction failed to terminate");
    QMatrix lam = ker.col(0);
    int jstar = -1;
    for (int j = 0; j < r; ++j)
      if (!lam.at(j, 0).is_zero() && (jstar < 0 || d[size_t(j)] > d[size_t(jstar)])) jstar = j;
    // col_jstar := sum_i lam_i z^(d_jstar - d_i) col_i kills the leading
    // coefficient of the highest column involved in the relation.
    LMatrix op = LMatrix::identity(r);
    for (int i = 0; i < r; ++i)
      if (!lam.at(i, 0).is_zero())
        op.at(i, jstar) = LPoly::monomial(lam.at(i, 0), d[size_t(jstar)] - d[size_t(i)]);
    p = p * op;
    v = v * op;
  }

  // Now p = (z^s T)^T V has column degrees d_j with linearly independent
  // leading coefficients, so  T = (V^T)^{-1} diag(z^(d_i - s)) M  where
  // M_ij = p_ji z^(-d_i) is polynomial in 1/z.
  BirkhoffFactorization out;
  // Ordering: weakly decreasing twist exponents, stable on ties.
  std::vector<int> idx(static_cast<size_t>(r));
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return d[size_t(a)] > d[size_t(b)]; });
  out.minus = LMatrix(r, r);
  out.diag.reserve(size_t(r));
  LMatrix vinv = transition_inverse(v);  // unimodular, so this stays polynomial
  out.plus = LMatrix(r, r);
  for (int k = 0; k < r; ++k) {
    int j = idx[size_t(k)];
    out.diag.push_back(d[size_t(j)] - s);
    for (int i = 0; i < r; ++i) {
      out.plus.at(i, k) = vinv.at(j, i);
      out.minus.at(k, i) = p.at(i, j).shifted(-d[size_t(j)]);
    }
  }

  require(out.plus.is_poly_in_z(), Err::Internal, "left factor not polynomial in z");
  require(out.minus.is_poly_in_u(), Err::Internal, "right factor not polynomial in 1/z");
  LPoly dp = out.plus.det(), dm = out.minus.det();
  require(!dp.is_zero() && dp.is_monomial() && dp.min_exp() == 0, Err::Internal,
          "left factor determinant not a nonzero constant");
  require(!dm.is_zero() && dm.is_monomial() && dm.min_exp() == 0, Err::Internal,
          "right factor determinant not a nonzero constant");
  long degsum = std::accumulate(out.diag.begin(), out.diag.end(), 0L);
  require(degsum == dt.exp, Err::Internal, "diagonal degrees do not sum to det exponent");
  require(out.plus * LMatrix::diag_monomials(out.diag) * out.minus == t, Err::Internal,
          "factor product does not reproduce the transition matrix");
  return out;
}

LMatrix bundle_direct_sum(const LMatrix& a, const LMatrix& b) {
  LMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return m;
}

LMatrix bundle_tensor(const LMatrix& a, const LMatrix& b) {
  LMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (int ia = 0; ia < a.rows(); ++ia)
    for (int ja = 0; ja < a.cols(); ++ja) {
      if (a.at(ia, ja).is_zero()) continue;
      for (int ib = 0; ib < b.rows(); ++ib)
        for (int jb = 0; jb < b.cols(); ++jb)
          m.at(ia * b.rows() + ib, ja * b.cols() + jb) = a.at(ia, ja) * b.at(ib, jb);
    }
  return m;
}

LMatrix bundle_dual(const LMatrix& t) { return transition_inverse(t).transpose(); }

LMatrix equivariant_model(const std::vector<int>& exps) {
  return LMatrix::diag_monomials(exps);
}

VeroneseInclusion veronese_inclusion(int n) {
  require(n >= 2, Err::BadDegree, "rational normal curve needs degree at least 2");
  VeroneseInclusion vi;
  vi.n = n;
  vi.i0 = LMatrix(n + 1, 2);
  vi.iinf = LMatrix(n + 1, 2);
  for (int k = 0; k <= n - 1; ++k) {
    // row i of the chart matrix holds the x^(n-i) y^i coordinate
    vi.i0.at(k, 0) = LPoly::monomial(binom(n - 1, k), k);      // (x + z y)^(n-1) x
    vi.i0.at(k + 1, 1) = LPoly::monomial(binom(n - 1, k), k);  // (x + z y)^(n-1) y
    vi.iinf.at(n - 1 - k, 0) = LPoly::monomial(binom(n - 1, k), k);  // (y + w x)^(n-1) x
    vi.iinf.at(n - k, 1) = LPoly::monomial(binom(n - 1, k), k);      // (y + w x)^(n-1) y
  }
  require(vi.iinf.inverted_var().shifted(n) == vi.i0.shifted(1), Err::Internal,
          "chart matrices fail to glue");
  check_coprime_minors(vi.i0);
  check_coprime_minors(vi.iinf);
  return vi;
}

std::vector<int> cokernel_splitting(int n) {
  VeroneseInclusion vi = veronese_inclusion(n);
  int r = n - 1;
  // middle bundle degree n(n+1), subbundle degree 2
  long deg = long(n) * (n + 1) - 2;
  int cap = int(deg) + 2;
  auto pos = jump_positions([&](int t) { return conormal_h0(vi.iinf, n, t); }, -1, cap, r);
  if (!pos) raise(Err::InconsistentWindow, "conormal section profile failed its shape checks");
  // a degree-b summand starts contributing dual sections at the twist t = b
  std::vector<int> exps(pos->rbegin(), pos->rend());
  long sum = std::accumulate(exps.begin(), exps.end(), 0L);
  require(sum == deg, Err::InconsistentWindow, "conormal profile total degree mismatch");
  return exps;
}

}  // namespace veron
