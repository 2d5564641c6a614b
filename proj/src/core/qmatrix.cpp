#include "core/qmatrix.hpp"

namespace veron {

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::of(std::initializer_list<std::initializer_list<Rat>> rows) {
  int r = int(rows.size());
  int c = r ? int(rows.begin()->size()) : 0;
  QMatrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    require(int(row.size()) == c, Err::BadArgument, "ragged matrix literal");
    int j = 0;
    for (const auto& x : row) m.at(i, j++) = x;
    ++i;
  }
  return m;
}

bool QMatrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

Rat QMatrix::trace() const {
  require(is_square(), Err::BadArgument, "trace of non-square matrix");
  Rat t;
  for (int i = 0; i < r_; ++i) t += at(i, i);
  return t;
}

QMatrix QMatrix::transpose() const {
  QMatrix m(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
  return m;
}

QMatrix QMatrix::pow(int k) const {
  require(is_square(), Err::BadArgument, "power of non-square matrix");
  require(k >= 0, Err::BadArgument, "negative matrix power");
  QMatrix acc = identity(r_);
  for (int i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

QMatrix QMatrix::col(int j) const {
  QMatrix v(r_, 1);
  for (int i = 0; i < r_; ++i) v.at(i, 0) = at(i, j);
  return v;
}

void QMatrix::set_col(int j, const QMatrix& v) {
  require(v.rows() == r_ && v.cols() == 1, Err::BadArgument, "set_col shape");
  for (int i = 0; i < r_; ++i) at(i, j) = v.at(i, 0);
}

QMatrix QMatrix::hstack(const QMatrix& a, const QMatrix& b) {
  require(a.rows() == b.rows(), Err::BadArgument, "hstack row mismatch");
  QMatrix m(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
  }
  return m;
}

QMatrix QMatrix::vstack(const QMatrix& a, const QMatrix& b) {
  require(a.cols() == b.cols(), Err::BadArgument, "vstack column mismatch");
  QMatrix m(a.rows() + b.rows(), a.cols());
  for (int j = 0; j < a.cols(); ++j) {
    for (int i = 0; i < a.rows(); ++i) m.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i) m.at(a.rows() + i, j) = b.at(i, j);
  }
  return m;
}

QMatrix QMatrix::operator-() const {
  QMatrix m = *this;
  for (auto& x : m.e_) x = -x;
  return m;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  require(r_ == o.r_ && c_ == o.c_, Err::BadArgument, "matrix sum shape mismatch");
  for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
  require(r_ == o.r_ && c_ == o.c_, Err::BadArgument, "matrix difference shape mismatch");
  for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  require(a.c_ == b.r_, Err::BadArgument, "matrix product shape mismatch");
  QMatrix m(a.r_, b.c_);
  for (int i = 0; i < a.r_; ++i)
    for (int k = 0; k < a.c_; ++k) {
      const Rat& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.c_; ++j) {
        const Rat& bkj = b.at(k, j);
        if (!bkj.is_zero()) m.at(i, j) += aik * bkj;
      }
    }
  return m;
}

QMatrix operator*(const Rat& s, QMatrix m) {
  for (auto& x : m.e_) x *= s;
  return m;
}

QMatrix bracket(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

Rref rref_canonical(const QMatrix& m) {
  Rref out;
  out.m = m;
  QMatrix& a = out.m;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    // The rref is unique, so the pivot row choice only affects cost;
    // prefer the entry with the smallest bit size.
    int piv = -1;
    size_t best = 0;
    for (int i = row; i < a.rows(); ++i) {
      if (a.at(i, col).is_zero()) continue;
      size_t h = a.at(i, col).height();
      if (piv < 0 || h < best) piv = i, best = h;
    }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(row, j));
    Rat inv = a.at(row, col).inv();
    for (int j = col; j < a.cols(); ++j) a.at(row, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == row || a.at(i, col).is_zero()) continue;
      Rat f = a.at(i, col);
      for (int j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  return out;
}

QMatrix kernel_basis(const QMatrix& m) {
  Rref r = rref_canonical(m);
  std::vector<int> free_cols;
  {
    size_t p = 0;
    for (int j = 0; j < m.cols(); ++j) {
      if (p < r.pivots.size() && r.pivots[p] == j)
        ++p;
      else
        free_cols.push_back(j);
    }
  }
  QMatrix k(m.cols(), int(free_cols.size()));
  for (size_t idx = 0; idx < free_cols.size(); ++idx) {
    int f = free_cols[idx];
    k.at(f, int(idx)) = 1;
    for (int p = 0; p < r.rank; ++p) k.at(r.pivots[p], int(idx)) = -r.m.at(p, f);
  }
  return k;
}

int rank(const QMatrix& m) { return rref_canonical(m).rank; }

std::optional<QMatrix> solve(const QMatrix& a, const QMatrix& b) {
  require(a.rows() == b.rows(), Err::BadArgument, "solve shape mismatch");
  Rref r = rref_canonical(QMatrix::hstack(a, b));
  // Inconsistent iff some pivot falls in the right-hand block.
  for (int p : r.pivots)
    if (p >= a.cols()) return std::nullopt;
  QMatrix x(a.cols(), b.cols());
  for (int p = 0; p < r.rank; ++p)
    for (int j = 0; j < b.cols(); ++j) x.at(r.pivots[p], j) = r.m.at(p, a.cols() + j);
  return x;
}

}  // namespace veron
