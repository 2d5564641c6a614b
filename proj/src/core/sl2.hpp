#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "core/nilpotent.hpp"

namespace veron {

// Triple (A, B, H) with H = [A, B], [H, A] = 2A, [H, B] = -2B; A raises,
// B lowers.
struct Sl2Triple {
  QMatrix a, b, h;
};

// The irreducible representation on U_n (dim n+1), weight-ordered basis
// with H = diag(n, n-2, ..., -n); A e_(j+1) = e_j and B e_j = j(n+1-j)
// e_(j+1) in 1-based indexing.
Sl2Triple irrep_matrices(int n);

// Completes a nonzero nilpotent A to an sl(2)-triple via a Jordan basis
// (Err::ZeroMatrix for A = 0, Err::NotNilpotent otherwise). The returned
// triple has exactly the given A.
Sl2Triple jacobson_morozov(const QMatrix& a);

struct Sl2FlagData {
  Flag asc;       // ker A^j, j = 1..k, ascending
  Flag desc;      // im B^j, j = 1..k, descending
  QMatrix p;      // projection onto im(B^k) along ker(A^k)
  Rat c;          // p = c * B^k A^k
  QMatrix h;      // [A, B'] for the rescaled B' = scale * B
  Rat scale;      // the rescaling applied to B
  bool flags_complementary = false;
  bool h_invariant = false;  // H maps every flag space into itself
};

// For A, B nilpotent of equal degree k+1 generating an sl(2) up to scale:
// the two flags, their complementarity, and the canonical projection.
// B is rescaled internally so that with H = [A, B'] the identities
// [H, A] = 2A and [H, B'] = -2B' hold exactly (Err::NotSl2 when no
// rescaling works). Degrees must agree (Err::DegreeMismatch).
Sl2FlagData sl2_flags_and_projection(const QMatrix& a, const QMatrix& b);

// Weights of a diagonalizable H with integer spectrum, as (weight,
// multiplicity) sorted by descending weight. Err::NonIntegerSpectrum when
// the characteristic polynomial has a non-integer root,
// Err::NotDiagonalizable when prod(H - wI) over the distinct integer
// eigenvalues w is nonzero.
std::vector<std::pair<long long, int>> weight_multiset(const QMatrix& h);

// U_m tensor U_n = U_(m+n) + U_(m+n-2) + ... + U_|m-n|, returned as the
// list of n-labels; computed and verified by peeling the tensor-product
// weight multiset.
std::vector<int> clebsch_gordan(int m, int n);

// If w is the weight multiset of U_n tensor O(m)-twist (an arithmetic
// progression of step 2, all multiplicities 1), return (m, n); otherwise
// nullopt.
std::optional<std::pair<int, int>> identify_twisted_irrep(
    const std::vector<std::pair<long long, int>>& weights);

struct VeroneseWeights {
  std::vector<std::pair<long long, int>> quotient;  // weights of the normal bundle
  std::pair<int, int> identification;               // (m, n): U_n twisted by m
};

// Weight route to the Veronese normal bundle: quotient multiset
// weights(U_n x chi_n) - weights(U_1 x chi_1) = {2n, 2n-2, ..., 4},
// identified as U_(n-2) twisted by n+2. Requires n >= 2 (Err::BadDegree).
VeroneseWeights veronese_weights(int n);

}  // namespace veron
