#pragma once

// Deterministic generators shared by the unit tests and the acceptance
// binary. Everything is seeded by the caller; no global state.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "core/error.hpp"
#include "core/laurent.hpp"
#include "core/qmatrix.hpp"

namespace testutil {

using veron::LMatrix;
using veron::LPoly;
using veron::QMatrix;
using veron::Rat;

template <typename F>
bool raises(veron::Err code, F&& f) {
  try {
    std::forward<F>(f)();
  } catch (const veron::VError& e) {
    return e.code() == code;
  } catch (...) {
    return false;
  }
  return false;
}

inline long rnd_in(std::mt19937_64& g, long lo, long hi) {
  return lo + long(g() % std::uint64_t(hi - lo + 1));
}

inline QMatrix rnd_matrix(std::mt19937_64& g, int rows, int cols, long lo = -4, long hi = 4) {
  QMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = Rat(rnd_in(g, lo, hi));
  return m;
}

// Integer matrix with integer inverse, as a product of elementary shears.
struct Unimod {
  QMatrix fwd, inv;
};

inline Unimod rnd_unimod(std::mt19937_64& g, int n, int shears = 12) {
  Unimod u{QMatrix::identity(n), QMatrix::identity(n)};
  for (int t = 0; t < shears; ++t) {
    int i = int(g() % std::uint64_t(n)), j = int(g() % std::uint64_t(n));
    long c = rnd_in(g, -2, 2);
    if (i == j || c == 0) continue;
    QMatrix e = QMatrix::identity(n), einv = QMatrix::identity(n);
    e.at(i, j) = Rat(c);
    einv.at(i, j) = Rat(-c);
    u.fwd = u.fwd * e;
    u.inv = einv * u.inv;
  }
  return u;
}

// Random partition of `total` with parts bounded by `maxpart`.
inline std::vector<int> rnd_partition(std::mt19937_64& g, int total, int maxpart) {
  std::vector<int> parts;
  int left = total;
  while (left > 0) {
    int p = int(rnd_in(g, 1, std::min(long(maxpart), long(left))));
    parts.push_back(p);
    left -= p;
  }
  return parts;
}

inline QMatrix jordan_blocks(const std::vector<int>& parts) {
  int n = 0;
  for (int p : parts) n += p;
  QMatrix a(n, n);
  int base = 0;
  for (int p : parts) {
    for (int i = 0; i + 1 < p; ++i) a.at(base + i, base + i + 1) = 1;
    base += p;
  }
  return a;
}

// Nilpotent with the given Jordan partition, conjugated to hide the blocks.
inline QMatrix nilpotent_with_partition(std::mt19937_64& g, const std::vector<int>& parts) {
  QMatrix a = jordan_blocks(parts);
  Unimod s = rnd_unimod(g, a.rows());
  return s.fwd * a * s.inv;
}

// Unimodular polynomial matrix (determinant a nonzero constant) built from
// elementary shears; sign = +1 gives entries polynomial in z, -1 in 1/z.
inline LMatrix rnd_unimodular(std::mt19937_64& g, int r, int sign, int shears = 4,
                              int maxdeg = 2) {
  LMatrix m = LMatrix::identity(r);
  for (int t = 0; t < shears; ++t) {
    int i = int(g() % std::uint64_t(r)), j = int(g() % std::uint64_t(r));
    if (i == j) continue;
    LPoly p;
    int deg = int(g() % std::uint64_t(maxdeg + 1));
    for (int d = 0; d <= deg; ++d) {
      long c = rnd_in(g, -2, 2);
      if (c != 0) p.add_term(sign * d, Rat(c));
    }
    if (p.is_zero()) continue;
    LMatrix e = LMatrix::identity(r);
    e.at(i, j) = p;
    m = m * e;
  }
  return m;
}

// Transition matrix gauge-equivalent to diag(z^exps): z-polynomial
// unimodular factor on the left, 1/z-polynomial on the right, which is the
// order the two chart frame changes act in.
inline LMatrix rnd_split_transition(std::mt19937_64& g, const std::vector<int>& exps) {
  int r = int(exps.size());
  return rnd_unimodular(g, r, +1) * LMatrix::diag_monomials(exps) *
         rnd_unimodular(g, r, -1);
}

}  // namespace testutil
