#pragma once

#include <map>
#include <string>
#include <vector>

#include "core/rat.hpp"

namespace veron {

// Laurent polynomial over Rat: exponent -> coefficient, zero coefficients
// never stored.
class LPoly {
 public:
  LPoly() = default;
  static LPoly constant(const Rat& c) { return monomial(c, 0); }
  static LPoly monomial(const Rat& c, int e);

  bool is_zero() const { return c_.empty(); }
  bool is_monomial() const { return c_.size() == 1; }
  // Exponent range; only valid when nonzero.
  int min_exp() const;
  int max_exp() const;
  Rat coeff(int e) const;
  void add_term(int e, const Rat& c);
  const std::map<int, Rat>& terms() const { return c_; }

  bool is_poly_in_z() const { return is_zero() || min_exp() >= 0; }
  bool is_poly_in_u() const { return is_zero() || max_exp() <= 0; }  // u = z^-1

  LPoly shifted(int k) const;   // multiply by z^k
  LPoly inverted_var() const;   // z -> z^-1
  // Split at exponent threshold: terms with e >= cut (and the rest).
  LPoly part_at_least(int cut) const;

  friend LPoly operator+(const LPoly& a, const LPoly& b);
  friend LPoly operator-(const LPoly& a, const LPoly& b);
  friend LPoly operator*(const LPoly& a, const LPoly& b);
  friend LPoly operator*(const Rat& s, const LPoly& p);
  LPoly operator-() const;
  friend bool operator==(const LPoly& a, const LPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const LPoly& a, const LPoly& b) { return !(a == b); }

  std::string str(const std::string& var = "z") const;

 private:
  std::map<int, Rat> c_;
};

// Matrix with Laurent polynomial entries (rectangular allowed; transition
// matrices are the square case).
class LMatrix {
 public:
  LMatrix() = default;
  LMatrix(int rows, int cols) : r_(rows), c_(cols), e_(size_t(rows) * cols) {}
  static LMatrix identity(int n);
  static LMatrix diag_monomials(const std::vector<int>& exps);

  int rows() const { return r_; }
  int cols() const { return c_; }
  bool is_square() const { return r_ == c_; }
  LPoly& at(int i, int j) { return e_[size_t(i) * c_ + j]; }
  const LPoly& at(int i, int j) const { return e_[size_t(i) * c_ + j]; }

  LMatrix transpose() const;
  LMatrix shifted(int k) const;      // multiply every entry by z^k
  LMatrix inverted_var() const;      // z -> z^-1 entrywise
  bool is_poly_in_z() const;
  bool is_poly_in_u() const;
  int max_abs_exp() const;           // 0 for the zero matrix

  LPoly det() const;                 // exact, minor expansion over column subsets

  friend LMatrix operator*(const LMatrix& a, const LMatrix& b);
  friend LMatrix operator+(const LMatrix& a, const LMatrix& b);
  friend LMatrix operator-(const LMatrix& a, const LMatrix& b);
  friend bool operator==(const LMatrix& a, const LMatrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.e_ == b.e_;
  }
  friend bool operator!=(const LMatrix& a, const LMatrix& b) { return !(a == b); }

 private:
  int r_ = 0, c_ = 0;
  std::vector<LPoly> e_;
};

struct TransitionDet {
  Rat coeff;  // nonzero
  int exp;    // det = coeff * z^exp
};

// A transition matrix must be invertible on the overlap: square, det a
// nonzero monomial. Raises Err::NotInvertibleOnOverlap otherwise.
TransitionDet validate_transition(const LMatrix& t);

// Exact inverse of a valid transition matrix: adj(t) / (coeff * z^exp).
LMatrix transition_inverse(const LMatrix& t);

}  // namespace veron
