#include "core/nilpotent.hpp"

#include <algorithm>

namespace veron {

namespace {

// Powers A^1..A^m until the first zero power; raises if none up to A^dim.
std::vector<QMatrix> powers_until_zero(const QMatrix& a) {
  require(a.is_square(), Err::BadArgument, "nilpotent analysis needs a square matrix");
  require(a.rows() > 0, Err::BadArgument, "empty matrix");
  std::vector<QMatrix> pw;
  QMatrix acc = a;
  for (int m = 1; m <= a.rows(); ++m) {
    pw.push_back(acc);
    if (acc.is_zero()) return pw;
    acc = acc * a;
  }
  raise(Err::NotNilpotent, "matrix is not nilpotent (A^dim != 0)");
}

}  // namespace

NilpotentProfile nilpotent_profile(const QMatrix& a) {
  std::vector<QMatrix> pw = powers_until_zero(a);
  NilpotentProfile out;
  out.degree = int(pw.size());
  int n = a.rows();
  for (int j = 0; j < out.degree; ++j) {
    int rk = rank(pw[size_t(j)]);
    out.ker_dims.push_back(n - rk);
    if (j + 1 < out.degree) out.im_dims.push_back(rk);
  }
  // Jordan partition: the difference sequence dim ker A^j - dim ker A^(j-1)
  // counts blocks of size >= j; the partition is its conjugate.
  std::vector<int> diffs;
  for (int j = 0; j < out.degree; ++j)
    diffs.push_back(out.ker_dims[size_t(j)] - (j ? out.ker_dims[size_t(j) - 1] : 0));
  for (int size = out.degree; size >= 1; --size) {
    int count = diffs[size_t(size) - 1] - (size < out.degree ? diffs[size_t(size)] : 0);
    for (int c = 0; c < count; ++c) out.partition.push_back(size);
  }
  std::sort(out.partition.rbegin(), out.partition.rend());
  return out;
}

std::vector<std::vector<QMatrix>> jordan_basis(const QMatrix& a) {
  std::vector<QMatrix> pw = powers_until_zero(a);
  int degree = int(pw.size());
  int n = a.rows();

  std::vector<Subspace> ker;  // ker[j] = ker A^j, j = 0..degree
  ker.push_back(Subspace::zero(n));
  for (int j = 1; j <= degree; ++j) ker.push_back(Subspace::span_of_columns(kernel_basis(pw[size_t(j) - 1])));

  struct ChainTop {
    QMatrix v;
    int height;  // chain length
  };
  std::vector<ChainTop> tops;

  for (int s = degree; s >= 1; --s) {
    // Span to extend: ker A^(s-1) plus the height-s vectors inherited from
    // longer chains (each top v of height h > s contributes A^(h-s) v).
    QMatrix span_mat = ker[size_t(s) - 1].basis();
    for (const auto& t : tops) span_mat = QMatrix::hstack(span_mat, pw[size_t(t.height - s) - 1] * t.v);
    int have = rank(span_mat);
    int want = ker[size_t(s)].dim();

    // Candidates in deterministic order: standard basis vectors first,
    // then the canonical basis of ker A^s.
    std::vector<QMatrix> candidates;
    for (int i = 0; i < n; ++i) {
      QMatrix e(n, 1);
      e.at(i, 0) = 1;
      candidates.push_back(e);
    }
    for (int j = 0; j < ker[size_t(s)].dim(); ++j) candidates.push_back(ker[size_t(s)].basis().col(j));

    for (const auto& cand : candidates) {
      if (have == want) break;
      if (!ker[size_t(s)].contains_vector(cand)) continue;
      QMatrix trial = QMatrix::hstack(span_mat, cand);
      if (rank(trial) == have + 1) {
        span_mat = trial;
        ++have;
        tops.push_back({cand, s});
      }
    }
    require(have == want, Err::Internal, "jordan basis: complement extension failed");
  }

  std::stable_sort(tops.begin(), tops.end(),
                   [](const ChainTop& x, const ChainTop& y) { return x.height > y.height; });
  std::vector<std::vector<QMatrix>> chains;
  for (const auto& t : tops) {
    std::vector<QMatrix> chain{t.v};
    for (int i = 1; i < t.height; ++i) chain.push_back(pw[size_t(i) - 1] * t.v);
    chains.push_back(std::move(chain));
  }
  return chains;
}

OrbitCurve orbit_curve(const QMatrix& a, const QMatrix& u) {
  std::vector<QMatrix> pw = powers_until_zero(a);
  require(u.rows() == a.rows() && u.cols() == 1, Err::AmbientMismatch,
          "orbit vector has wrong shape");
  require(!u.is_zero(), Err::ZeroVector, "orbit of the zero vector");

  OrbitCurve out;
  out.coeffs.push_back(u);
  Rat fact(1);
  QMatrix v = u;
  for (int i = 1;; ++i) {
    v = a * v;
    if (v.is_zero()) break;
    fact *= Rat(i);
    out.coeffs.push_back(fact.inv() * v);
  }
  out.degree = int(out.coeffs.size()) - 1;

  // The curve coefficients u, Au, ..., A^j u are linearly independent.
  QMatrix stacked(a.rows(), int(out.coeffs.size()));
  for (size_t j = 0; j < out.coeffs.size(); ++j) stacked.set_col(int(j), out.coeffs[j]);
  require(rank(stacked) == int(out.coeffs.size()), Err::Internal,
          "orbit curve coefficients unexpectedly dependent");
  return out;
}

bool check_complementary_flags(const Flag& asc, const Flag& desc) {
  require(asc.direction() == FlagDir::Ascending && desc.direction() == FlagDir::Descending,
          Err::BadArgument, "check_complementary_flags wants (ascending, descending)");
  require(asc.length() == desc.length(), Err::LengthMismatch, "flag lengths differ");
  require(asc.ambient() == desc.ambient(), Err::AmbientMismatch, "flag ambients differ");
  for (int j = 0; j < asc.length(); ++j)
    if (!direct_sum_check(asc.space(j), desc.space(j))) return false;
  return true;
}

std::vector<Subspace> flag_refinement(const Flag& asc, const Flag& desc) {
  require(check_complementary_flags(asc, desc), Err::NotComplementary,
          "flags are not complementary");
  std::vector<Subspace> out;
  for (int j = 1; j < asc.length(); ++j) {
    Subspace d = intersect(asc.space(j), desc.space(j - 1));
    require(is_direct_sum_of(asc.space(j), asc.space(j - 1), d), Err::Internal,
            "flag refinement: U_(j-1) (+) (U_j n V_(j-1)) != U_j");
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace veron
