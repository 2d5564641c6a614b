#include "core/sl2.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "core/poly.hpp"

namespace veron {

Sl2Triple irrep_matrices(int n) {
  require(n >= 0, Err::BadArgument, "irrep label must be nonnegative");
  int d = n + 1;
  Sl2Triple t{QMatrix(d, d), QMatrix(d, d), QMatrix(d, d)};
  for (int j = 1; j <= d; ++j) t.h.at(j - 1, j - 1) = Rat(n - 2 * (j - 1));
  for (int j = 1; j < d; ++j) {
    t.a.at(j - 1, j) = 1;                            // A e_(j+1) = e_j
    t.b.at(j, j - 1) = Rat(long(j) * (n + 1 - j));   // B e_j = j(n+1-j) e_(j+1)
  }
  return t;
}

Sl2Triple jacobson_morozov(const QMatrix& a) {
  require(a.is_square() && a.rows() > 0, Err::BadArgument, "square matrix expected");
  require(!a.is_zero(), Err::ZeroMatrix, "cannot complete the zero matrix to an sl(2)-triple");
  auto chains = jordan_basis(a);  // raises NotNilpotent if needed

  int n = a.rows();
  // Basis adapted to the chains, each chain reversed so that A acts like
  // the shift e_(j+1) -> e_j of the irrep convention.
  QMatrix p(n, n);
  QMatrix bblk(n, n), hblk(n, n);
  int pos = 0;
  for (const auto& chain : chains) {
    int l = int(chain.size());
    Sl2Triple blk = irrep_matrices(l - 1);
    for (int i = 0; i < l; ++i) {
      p.set_col(pos + i, chain[size_t(l - 1 - i)]);
      for (int j = 0; j < l; ++j) {
        bblk.at(pos + i, pos + j) = blk.b.at(i, j);
        hblk.at(pos + i, pos + j) = blk.h.at(i, j);
      }
    }
    pos += l;
  }

  auto pinv_cols = solve(p, QMatrix::identity(n));
  require(pinv_cols.has_value(), Err::Internal, "jordan basis matrix not invertible");
  const QMatrix& pinv = *pinv_cols;

  Sl2Triple t{a, p * bblk * pinv, p * hblk * pinv};
  require(bracket(t.a, t.b) == t.h && bracket(t.h, t.a) == Rat(2) * t.a &&
              bracket(t.h, t.b) == Rat(-2) * t.b,
          Err::Internal, "completed triple fails the bracket identities");
  return t;
}

Sl2FlagData sl2_flags_and_projection(const QMatrix& a, const QMatrix& b) {
  NilpotentProfile pa = nilpotent_profile(a);
  require(!a.is_zero() && !b.is_zero(), Err::ZeroMatrix, "zero matrix cannot generate an sl(2)");
  require(a.rows() == b.rows() && b.is_square(), Err::AmbientMismatch,
          "A and B act on different spaces");
  NilpotentProfile pb = nilpotent_profile(b);
  require(pa.degree == pb.degree, Err::DegreeMismatch,
          "A and B have different nilpotency degrees");
  int k = pa.degree - 1;

  // Find the scale s with [[A, sB], A] = 2A; one linear condition per entry.
  QMatrix m = bracket(bracket(a, b), a);
  std::optional<Rat> s;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Rat &mij = m.at(i, j), &aij = a.at(i, j);
      if (mij.is_zero() && aij.is_zero()) continue;
      if (mij.is_zero() || aij.is_zero())
        raise(Err::NotSl2, "no rescaling of B satisfies [H, A] = 2A");
      Rat cand = Rat(2) * aij / mij;
      if (s && *s != cand) raise(Err::NotSl2, "no rescaling of B satisfies [H, A] = 2A");
      s = cand;
    }
  if (!s || s->is_zero()) raise(Err::NotSl2, "no nonzero rescaling of B satisfies [H, A] = 2A");

  QMatrix b2 = *s * b;
  QMatrix h = bracket(a, b2);
  require(bracket(h, a) == Rat(2) * a, Err::Internal, "rescaling lost [H, A] = 2A");
  if (bracket(h, b2) != Rat(-2) * b2)
    raise(Err::NotSl2, "[H, B] = -2B fails for every rescaling of B");

  // A != 0 is nilpotent, so the degree is >= 2 and k >= 1.
  std::vector<Subspace> kerf, imf;  // imf is decreasing as built: im B >= im B^2 >= ...
  QMatrix ap = QMatrix::identity(a.rows()), bp = ap;
  for (int j = 1; j <= k; ++j) {
    ap = ap * a;
    bp = bp * b;
    kerf.push_back(Subspace::span_of_columns(kernel_basis(ap)));
    imf.push_back(Subspace::span_of_columns(bp));
  }
  Sl2FlagData out{Flag(FlagDir::Ascending, kerf),  Flag(FlagDir::Descending, imf),
                  QMatrix(),                       Rat(),
                  h,                               *s};
  out.flags_complementary = check_complementary_flags(out.asc, out.desc);
  if (!out.flags_complementary)
    raise(Err::NotSl2, "ker(A^j) and im(B^j) are not complementary");

  // Projection onto im(B^k) along ker(A^k): a multiple of B^k A^k; the
  // factor comes from (B^k A^k)^2 = lambda B^k A^k.
  QMatrix bkak = bp * ap;
  QMatrix sq = bkak * bkak;
  std::optional<Rat> lambda;
  for (int i = 0; i < sq.rows(); ++i)
    for (int j = 0; j < sq.cols(); ++j) {
      const Rat &qij = sq.at(i, j), &pij = bkak.at(i, j);
      if (qij.is_zero() && pij.is_zero()) continue;
      if (qij.is_zero() || pij.is_zero())
        raise(Err::NotSl2, "(B^k A^k)^2 is not proportional to B^k A^k");
      Rat cand = qij / pij;
      if (lambda && *lambda != cand)
        raise(Err::NotSl2, "(B^k A^k)^2 is not proportional to B^k A^k");
      lambda = cand;
    }
  if (!lambda || lambda->is_zero()) raise(Err::NotSl2, "B^k A^k is nilpotent, not a projection");
  out.c = lambda->inv();
  out.p = out.c * bkak;

  require(out.p * out.p == out.p, Err::Internal, "projection is not idempotent");
  require(Subspace::span_of_columns(out.p) == imf.back(), Err::Internal,
          "projection image is not im(B^k)");
  require(Subspace::span_of_columns(kernel_basis(out.p)) == kerf.back(), Err::Internal,
          "projection kernel is not ker(A^k)");

  // H-invariance of every flag space.
  out.h_invariant = true;
  for (const auto* flag : {&out.asc, &out.desc})
    for (const auto& sp : flag->spaces()) {
      Subspace img = Subspace::span_of_columns(h * sp.basis());
      if (!sp.contains(img)) out.h_invariant = false;
    }
  require(out.h_invariant, Err::Internal, "flag spaces are not H-invariant");
  return out;
}

std::vector<std::pair<long long, int>> weight_multiset(const QMatrix& h) {
  require(h.is_square() && h.rows() > 0, Err::BadArgument, "square matrix expected");
  RootList rl = rational_roots(charpoly(h));
  if (rl.remainder.deg() > 0)
    raise(Err::NonIntegerSpectrum,
          "characteristic polynomial has a non-rational factor: " + rl.remainder.str());
  std::vector<std::pair<long long, int>> weights;
  QMatrix prod = QMatrix::identity(h.rows());
  for (const auto& [root, mult] : rl.roots) {
    if (!root.is_integer())
      raise(Err::NonIntegerSpectrum, "non-integer eigenvalue " + root.str());
    require(root.num().fits_slong_p(), Err::SpectrumSearchOverflow, "eigenvalue out of range");
    weights.emplace_back(root.num().get_si(), mult);
    QMatrix shifted = h;
    for (int i = 0; i < h.rows(); ++i) shifted.at(i, i) -= root;
    prod = prod * shifted;
  }
  // Diagonalizable iff the minimal polynomial is squarefree.
  if (!prod.is_zero())
    raise(Err::NotDiagonalizable, "prod(H - wI) over the integer spectrum is nonzero");
  return weights;  // already sorted descending by rational_roots
}

namespace {

// Peel irreducibles off a weight multiset greedily from the top.
std::vector<int> peel_weights(std::map<long long, int> w) {
  std::vector<int> labels;
  while (!w.empty()) {
    long long top = w.rbegin()->first;
    require(top >= 0 && top == -(w.begin()->first), Err::Internal,
            "weight multiset is not symmetric");
    labels.push_back(int(top));
    for (long long x = top; x >= -top; x -= 2) {
      auto it = w.find(x);
      require(it != w.end() && it->second > 0, Err::Internal,
              "weight multiset is not a sum of irreducibles");
      if (--it->second == 0) w.erase(it);
    }
  }
  return labels;
}

}  // namespace

std::vector<int> clebsch_gordan(int m, int n) {
  require(m >= 0 && n >= 0, Err::BadArgument, "irrep labels must be nonnegative");
  std::map<long long, int> tensor;
  for (int i = -m; i <= m; i += 2)
    for (int j = -n; j <= n; j += 2) tensor[i + j] += 1;
  std::vector<int> labels = peel_weights(std::move(tensor));
  // Cross-check against the closed form m+n, m+n-2, ..., |m-n|.
  std::vector<int> expect;
  for (int l = m + n; l >= std::abs(m - n); l -= 2) expect.push_back(l);
  require(labels == expect, Err::Internal, "weight peeling disagrees with the closed form");
  return labels;
}

std::optional<std::pair<int, int>> identify_twisted_irrep(
    const std::vector<std::pair<long long, int>>& weights) {
  if (weights.empty()) return std::nullopt;
  std::vector<long long> w;
  for (const auto& [x, mult] : weights) {
    if (mult != 1) return std::nullopt;
    w.push_back(x);
  }
  std::sort(w.rbegin(), w.rend());
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] - w[i + 1] != 2) return std::nullopt;
  long long hi = w.front(), lo = w.back();
  if ((hi + lo) % 2 != 0) return std::nullopt;  // cannot happen for step-2 chains
  long long m2 = (hi + lo) / 2, n2 = (hi - lo) / 2;
  if (m2 < INT32_MIN || m2 > INT32_MAX || n2 > INT32_MAX) return std::nullopt;
  return std::make_pair(int(m2), int(n2));
}

VeroneseWeights veronese_weights(int n) {
  require(n >= 2, Err::BadDegree, "Veronese normal bundle needs degree n >= 2");
  // weights(U_n x chi_n) = {2n, 2n-2, ..., 0}; subtract weights(U_1 x chi_1)
  // = {2, 0} as multisets.
  std::map<long long, int> big, small;
  for (int j = 0; j <= n; ++j) big[long(n) + (n - 2 * j)] += 1;
  for (int j = 0; j <= 1; ++j) small[1 + (1 - 2 * j)] += 1;
  for (const auto& [x, mult] : small) {
    auto it = big.find(x);
    require(it != big.end() && it->second >= mult, Err::Internal,
            "sub-bundle weights are not a sub-multiset of the total weights");
    it->second -= mult;
    if (it->second == 0) big.erase(it);
  }
  VeroneseWeights out;
  for (auto it = big.rbegin(); it != big.rend(); ++it) out.quotient.emplace_back(it->first, it->second);
  auto id = identify_twisted_irrep(out.quotient);
  require(id.has_value(), Err::Internal, "quotient weights do not form a twisted irreducible");
  require(id->first == n + 2 && id->second == n - 2, Err::Internal,
          "quotient is not U_(n-2) twisted by n+2");
  out.identification = *id;
  return out;
}

}  // namespace veron
