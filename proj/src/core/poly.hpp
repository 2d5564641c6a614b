#pragma once

#include <string>
#include <utility>
#include <vector>

#include "core/qmatrix.hpp"

namespace veron {

// Dense univariate polynomial over Rat; c[i] is the t^i coefficient.
// Invariant: no trailing zero coefficients (zero polynomial <=> empty c).
struct QPoly {
  std::vector<Rat> c;

  static QPoly from_coeffs(std::vector<Rat> coeffs);
  bool operator==(const QPoly&) const = default;
  bool is_zero() const { return c.empty(); }
  int deg() const { return int(c.size()) - 1; }  // -1 for the zero polynomial
  Rat lead() const { return c.back(); }
  Rat eval(const Rat& x) const;

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);

  // Exact division by a monic linear factor (t - r); remainder must vanish.
  QPoly deflate(const Rat& r) const;

  std::string str(const std::string& var = "t") const;
};

// Euclidean division a = q b + r with deg r < deg b (b nonzero).
QPoly poly_divmod(const QPoly& a, const QPoly& b, QPoly* rem);

// Monic gcd.
QPoly poly_gcd(QPoly a, QPoly b);

// Characteristic polynomial det(tI - a) by the Faddeev-LeVerrier recurrence.
QPoly charpoly(const QMatrix& a);

struct RootList {
  std::vector<std::pair<Rat, int>> roots;  // (root, multiplicity), descending
  QPoly remainder;                         // rational-root-free cofactor, monic-scaled off
};

// All rational roots with multiplicities, exactly. Candidate divisors come
// from budgeted trial-division factorization of the cleared leading/constant
// coefficients; if completeness of the candidate set cannot be certified the
// search raises Err::SpectrumSearchOverflow instead of guessing.
RootList rational_roots(const QPoly& p);

}  // namespace veron
