#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "core/rat.hpp"

namespace veron {

// Dense rational matrix, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : r_(rows), c_(cols), e_(size_t(rows) * cols) {
    require(rows >= 0 && cols >= 0, Err::BadArgument, "negative matrix size");
  }
  static QMatrix identity(int n);
  // Row-major literal, e.g. QMatrix::of({{0,1},{0,0}}).
  static QMatrix of(std::initializer_list<std::initializer_list<Rat>> rows);

  int rows() const { return r_; }
  int cols() const { return c_; }
  bool is_square() const { return r_ == c_; }

  Rat& at(int i, int j) { return e_[size_t(i) * c_ + j]; }
  const Rat& at(int i, int j) const { return e_[size_t(i) * c_ + j]; }

  bool is_zero() const;
  Rat trace() const;
  QMatrix transpose() const;
  QMatrix pow(int k) const;  // k >= 0, square

  QMatrix col(int j) const;  // as rows x 1
  void set_col(int j, const QMatrix& v);
  static QMatrix hstack(const QMatrix& a, const QMatrix& b);
  static QMatrix vstack(const QMatrix& a, const QMatrix& b);

  QMatrix operator-() const;
  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);
  friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
  friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const Rat& s, QMatrix m);
  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.e_ == b.e_;
  }
  friend bool operator!=(const QMatrix& a, const QMatrix& b) { return !(a == b); }

 private:
  int r_ = 0, c_ = 0;
  std::vector<Rat> e_;
};

// Commutator [a, b] = ab - ba.
QMatrix bracket(const QMatrix& a, const QMatrix& b);

struct Rref {
  QMatrix m;                // reduced row-echelon form, pivots normalized to 1
  std::vector<int> pivots;  // pivot column of each pivot row, strictly increasing
  int rank = 0;
};

// Unique reduced row-echelon form of m (canonical for its row space).
Rref rref_canonical(const QMatrix& m);

// Columns form the standard rref basis of ker(m): one vector per free
// column, with unit coordinate at its free variable. cols = dim ker.
QMatrix kernel_basis(const QMatrix& m);

int rank(const QMatrix& m);

// One solution x of a x = b, or nullopt when inconsistent (b may carry
// several right-hand sides as columns; all must be consistent).
std::optional<QMatrix> solve(const QMatrix& a, const QMatrix& b);

}  // namespace veron
