#include "core/laurent.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace veron {

LPoly LPoly::monomial(const Rat& c, int e) {
  LPoly p;
  if (!c.is_zero()) p.c_[e] = c;
  return p;
}

int LPoly::min_exp() const {
  require(!is_zero(), Err::Internal, "exponent range of zero Laurent polynomial");
  return c_.begin()->first;
}

int LPoly::max_exp() const {
  require(!is_zero(), Err::Internal, "exponent range of zero Laurent polynomial");
  return c_.rbegin()->first;
}

Rat LPoly::coeff(int e) const {
  auto it = c_.find(e);
  return it == c_.end() ? Rat(0) : it->second;
}

void LPoly::add_term(int e, const Rat& c) {
  if (c.is_zero()) return;
  Rat& slot = c_[e];
  slot += c;
  if (slot.is_zero()) c_.erase(e);
}

LPoly LPoly::shifted(int k) const {
  LPoly p;
  for (const auto& [e, c] : c_) p.c_[e + k] = c;
  return p;
}

LPoly LPoly::inverted_var() const {
  LPoly p;
  for (const auto& [e, c] : c_) p.c_[-e] = c;
  return p;
}

LPoly LPoly::part_at_least(int cut) const {
  LPoly p;
  for (auto it = c_.lower_bound(cut); it != c_.end(); ++it) p.c_[it->first] = it->second;
  return p;
}

LPoly operator+(const LPoly& a, const LPoly& b) {
  LPoly p = a;
  for (const auto& [e, c] : b.c_) p.add_term(e, c);
  return p;
}

LPoly operator-(const LPoly& a, const LPoly& b) {
  LPoly p = a;
  for (const auto& [e, c] : b.c_) p.add_term(e, -c);
  return p;
}

LPoly operator*(const LPoly& a, const LPoly& b) {
  LPoly p;
  for (const auto& [ea, ca] : a.c_)
    for (const auto& [eb, cb] : b.c_) p.add_term(ea + eb, ca * cb);
  return p;
}

LPoly operator*(const Rat& s, const LPoly& p) {
  LPoly q;
  if (s.is_zero()) return q;
  for (const auto& [e, c] : p.c_) q.c_[e] = s * c;
  return q;
}

LPoly LPoly::operator-() const { return Rat(-1) * *this; }

std::string LPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : c_) {
    Rat a = c;
    if (out.empty()) {
      if (a.sign() < 0) out += "-", a = -a;
    } else {
      out += a.sign() < 0 ? " - " : " + ";
      if (a.sign() < 0) a = -a;
    }
    bool unit = a == Rat(1);
    if (e == 0) {
      out += a.str();
    } else {
      if (!unit) out += a.str() + "*";
      out += var;
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

LMatrix LMatrix::identity(int n) {
  LMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = LPoly::constant(1);
  return m;
}

LMatrix LMatrix::diag_monomials(const std::vector<int>& exps) {
  LMatrix m(int(exps.size()), int(exps.size()));
  for (size_t i = 0; i < exps.size(); ++i) m.at(int(i), int(i)) = LPoly::monomial(1, exps[i]);
  return m;
}

LMatrix LMatrix::transpose() const {
  LMatrix m(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
  return m;
}

LMatrix LMatrix::shifted(int k) const {
  LMatrix m = *this;
  for (auto& p : m.e_) p = p.shifted(k);
  return m;
}

LMatrix LMatrix::inverted_var() const {
  LMatrix m = *this;
  for (auto& p : m.e_) p = p.inverted_var();
  return m;
}

bool LMatrix::is_poly_in_z() const {
  return std::all_of(e_.begin(), e_.end(), [](const LPoly& p) { return p.is_poly_in_z(); });
}

bool LMatrix::is_poly_in_u() const {
  return std::all_of(e_.begin(), e_.end(), [](const LPoly& p) { return p.is_poly_in_u(); });
}

int LMatrix::max_abs_exp() const {
  int w = 0;
  for (const auto& p : e_)
    if (!p.is_zero()) w = std::max({w, std::abs(p.min_exp()), std::abs(p.max_exp())});
  return w;
}

LPoly LMatrix::det() const {
  require(is_square(), Err::BadArgument, "determinant of non-square matrix");
  int n = r_;
  if (n == 0) return LPoly::constant(1);
  // dp[mask] = det of the top-popcount(mask) rows restricted to columns in
  // mask; Laplace expansion along the last of those rows.
  std::vector<LPoly> dp(size_t(1) << n);
  dp[0] = LPoly::constant(1);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    int k = __builtin_popcount(mask);
    LPoly acc;
    // Entry sign is (-1)^((k-1) + jpos) with jpos the column's position
    // among the mask columns.
    int sign = (k - 1) % 2 ? -1 : 1;
    for (int j = 0; j < n; ++j) {
      if (!(mask & (1u << j))) continue;
      const LPoly& entry = at(k - 1, j);
      if (!entry.is_zero()) {
        LPoly term = entry * dp[mask & ~(1u << j)];
        acc = sign > 0 ? acc + term : acc - term;
      }
      sign = -sign;
    }
    dp[mask] = acc;
  }
  return dp[(1u << n) - 1];
}

LMatrix operator*(const LMatrix& a, const LMatrix& b) {
  require(a.c_ == b.r_, Err::BadArgument, "Laurent matrix product shape mismatch");
  LMatrix m(a.r_, b.c_);
  for (int i = 0; i < a.r_; ++i)
    for (int k = 0; k < a.c_; ++k) {
      const LPoly& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.c_; ++j) {
        if (b.at(k, j).is_zero()) continue;
        m.at(i, j) = m.at(i, j) + aik * b.at(k, j);
      }
    }
  return m;
}

LMatrix operator+(const LMatrix& a, const LMatrix& b) {
  require(a.r_ == b.r_ && a.c_ == b.c_, Err::BadArgument, "Laurent matrix sum shape mismatch");
  LMatrix m = a;
  for (size_t i = 0; i < m.e_.size(); ++i) m.e_[i] = m.e_[i] + b.e_[i];
  return m;
}

LMatrix operator-(const LMatrix& a, const LMatrix& b) {
  require(a.r_ == b.r_ && a.c_ == b.c_, Err::BadArgument,
          "Laurent matrix difference shape mismatch");
  LMatrix m = a;
  for (size_t i = 0; i < m.e_.size(); ++i) m.e_[i] = m.e_[i] - b.e_[i];
  return m;
}

TransitionDet validate_transition(const LMatrix& t) {
  require(t.is_square() && t.rows() > 0, Err::NotInvertibleOnOverlap,
          "transition matrix must be square and nonempty");
  LPoly d = t.det();
  if (d.is_zero() || !d.is_monomial())
    raise(Err::NotInvertibleOnOverlap,
          "transition determinant is not a nonzero monomial: det = " + d.str());
  return TransitionDet{d.coeff(d.min_exp()), d.min_exp()};
}

LMatrix transition_inverse(const LMatrix& t) {
  TransitionDet d = validate_transition(t);
  int n = t.rows();
  LMatrix inv(n, n);
  Rat cinv = d.coeff.inv();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // Cofactor expansion: delete row i / column j of t.
      LMatrix minor(n - 1, n - 1);
      for (int a = 0, ai = 0; a < n; ++a) {
        if (a == i) continue;
        for (int b = 0, bj = 0; b < n; ++b) {
          if (b == j) continue;
          minor.at(ai, bj) = t.at(a, b);
          ++bj;
        }
        ++ai;
      }
      LPoly cof = minor.det();
      if ((i + j) % 2) cof = -cof;
      inv.at(j, i) = (cinv * cof).shifted(-d.exp);
    }
  return inv;
}

}  // namespace veron
