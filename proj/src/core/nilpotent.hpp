#pragma once

#include <vector>

#include "core/subspace.hpp"

namespace veron {

struct NilpotentProfile {
  int degree = 0;             // minimal m >= 1 with A^m = 0
  std::vector<int> ker_dims;  // dim ker A^j for j = 1..degree
  std::vector<int> im_dims;   // dim im A^j for j = 1..degree-1
  std::vector<int> partition; // Jordan block sizes, weakly decreasing
};

// Raises Err::NotNilpotent when A^dim != 0 (and Err::BadArgument when A is
// not square).
NilpotentProfile nilpotent_profile(const QMatrix& a);

// One chain per Jordan block: (v, Av, ..., A^(l-1) v) with A^l v = 0, as
// column vectors. Chains are produced top-down from the kernel filtration:
// at each height the chosen chain tops extend ker(A^(s-1)) + A(higher tops)
// inside ker(A^s), preferring standard basis vectors in index order, then
// the canonical kernel basis. Ordered by decreasing length.
std::vector<std::vector<QMatrix>> jordan_basis(const QMatrix& a);

struct OrbitCurve {
  int degree = 0;               // largest j with A^j u != 0
  std::vector<QMatrix> coeffs;  // A^i u / i! for i = 0..degree
};

// Coefficients of the polynomial curve t -> exp(tA) u; the orbit map has
// degree j iff u lies in ker(A^(j+1)) \ ker(A^j). Raises Err::ZeroVector
// for u = 0 and Err::NotNilpotent for non-nilpotent A.
OrbitCurve orbit_curve(const QMatrix& a, const QMatrix& u);

// True iff U_j (+) V_j = E for every j (asc paired with desc index by
// index). Lengths must agree (Err::LengthMismatch), ambients must agree
// (Err::AmbientMismatch).
bool check_complementary_flags(const Flag& asc, const Flag& desc);

// D_j = U_j n V_(j-1) for j = 2..k, each verified to satisfy
// U_j = U_(j-1) (+) D_j. Raises Err::NotComplementary when the flags are
// not complementary.
std::vector<Subspace> flag_refinement(const Flag& asc, const Flag& desc);

}  // namespace veron
