#pragma once

#include <vector>

#include "core/laurent.hpp"

namespace veron {

// Rank-r bundles on the projective line, presented by a transition matrix
// T(z) between the two affine charts: a global section is a pair of
// polynomial vectors (s0(z), sinf(w)) glued by s0(z) = T(z) sinf(1/z).
// Twisting by degree n multiplies the glue by z^n.

// h0 of the twist: dim of pairs with s0(z) = z^n T(z) sinf(1/z). Any such
// sinf has degree at most n + W, where W bounds the exponents of T and of
// its inverse (write sinf(w) = w^n Tinv(1/w) s0(1/w) and read off degrees),
// so the count is the kernel dimension of a finite rational linear system.
int h0_twisted(const LMatrix& t, int n);

// Degrees a_1 >= ... >= a_r with T equivalent to diag(z^a_i), recovered from
// the jump profile of n -> h0(t, n): the profile of a sum of line bundles
// determines the summands. The profile is checked for shape (starts at 0,
// increments nondecreasing and at most r, final slope r, total degree equal
// to the determinant exponent); on failure the scan window is doubled once,
// then Err::InconsistentWindow is raised.
std::vector<int> splitting_type(const LMatrix& t);

struct BirkhoffFactorization {
  LMatrix minus;          // polynomial in 1/z, constant nonzero determinant
  std::vector<int> diag;  // weakly decreasing twist exponents
  LMatrix plus;           // polynomial in z, constant nonzero determinant
};

// T = plus * diag(z^a_i) * minus, exact, with the z-polynomial factor on
// the left. That order matters: a frame change on the chart at 0 acts by a
// z-polynomial unimodular matrix on the left and one on the chart at
// infinity by a 1/z-polynomial unimodular matrix on the right, so in this
// order (and only in this order) the diagonal is forced to agree with
// splitting_type(t). Implementation clears denominators (T = z^-s P with P
// polynomial) and column-reduces P^T over Q[z]: while the leading column
// coefficients are dependent, a kernel relation rewrites the column of
// highest degree and strictly drops the total column degree. All three
// factor conditions and the product identity are verified before returning.
BirkhoffFactorization birkhoff_factorize(const LMatrix& t);

LMatrix bundle_direct_sum(const LMatrix& a, const LMatrix& b);
LMatrix bundle_tensor(const LMatrix& a, const LMatrix& b);
LMatrix bundle_dual(const LMatrix& t);

// diag(z^e_i): the split bundle carrying the torus action with those weights.
LMatrix equivariant_model(const std::vector<int>& exps);

// The degree-n rational normal curve in both charts. Columns of i0 are the
// coefficient vectors of (x + z y)^(n-1) x and (x + z y)^(n-1) y in the
// basis x^n, x^(n-1) y, ..., y^n; iinf is the same at the other chart,
// using (y + w x)^(n-1). Both describe the multiplication map from the
// two-dimensional space of linear forms into the degree-n forms along the
// curve. Verified on construction: the charts glue (z^n iinf(1/z) equals
// z i0(z)) and the 2x2 minors of each chart matrix are coprime, so the
// cokernel is a bundle of rank n - 1 and degree (n + 2)(n - 1).
struct VeroneseInclusion {
  int n = 0;
  LMatrix i0;
  LMatrix iinf;
};

VeroneseInclusion veronese_inclusion(int n);  // n >= 2, else Err::BadDegree

// Splitting type of that cokernel, i.e. of the normal bundle of the curve,
// computed through the dual: h0 of the dual twisted by t counts polynomial
// rows phi of degree t - n with phi * iinf = 0. The jump profile of t is
// decoded exactly as in splitting_type.
std::vector<int> cokernel_splitting(int n);

}  // namespace veron
