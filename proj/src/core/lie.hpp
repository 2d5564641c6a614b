#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/poly.hpp"
#include "core/subspace.hpp"

namespace veron {

// Basis of a matrix Lie algebra inside gl(ambient_dim) with its structure
// constants: [g_i, g_j] = sum_k structure[i][j][k] g_k.
struct LieBasis {
  int ambient_dim = 0;
  std::vector<QMatrix> gens;  // linearly independent
  std::vector<std::vector<std::vector<Rat>>> structure;
  bool input_was_closed = true;

  int dim() const { return int(gens.size()); }
};

// Close a list of matrices under brackets (iterated to stabilization) and
// compute structure constants. The input list may be dependent; the basis
// is the independent subset in first-seen order, then appended brackets.
LieBasis lie_closure(const std::vector<QMatrix>& mats);

struct StructureReport {
  bool is_abelian = false;
  LieBasis derived;           // span of all brackets, closed by construction
  int center_dim = 0;
  QMatrix killing;            // Gram matrix of the Killing form in the adjoint rep
  bool killing_nondegenerate = false;
};

StructureReport structure_report(const LieBasis& l);

enum class CommutantCert {
  IrreducibleOverC,          // commutant dim 1 (scalars only)
  ReducibleRationalWitness,  // a non-scalar commutant element with a rational eigenvalue
  InconclusiveOverQ,         // commutant dim > 1 but no rational witness found
};

struct CommutantReport {
  int dim = 0;
  std::vector<QMatrix> basis;
  CommutantCert cert = CommutantCert::IrreducibleOverC;
  // For a rational witness: a proper nonzero invariant subspace over Q.
  std::optional<Subspace> invariant_subspace;
};

// Solve X g_i = g_i X for all generators; dimension 1 certifies
// irreducibility over C (the dimension of a rational solution space does
// not change under field extension).
CommutantReport commutant_dimension(const LieBasis& l);

// dim { Y in span(L) : [X, Y] = 0 }; X must lie in span(L)
// (Err::NotInAlgebra).
int centralizer_dimension(const LieBasis& l, const QMatrix& x);

// Deterministic seeded search for a nonzero nilpotent element: derived-
// algebra basis elements first, then `budget` random integer combinations
// of the derived basis with coefficients in [-3, 3].
std::optional<QMatrix> find_nilpotent(const LieBasis& l, uint64_t seed, int budget = 200);

struct FieldZeros {
  std::vector<std::pair<Rat, Subspace>> zeros;  // (eigenvalue, eigenspace), descending
};

// Zero set of the vector field induced by A on projective space: the
// eigenspaces of A. Requires a rational spectrum (Err::IrrationalSpectrum
// with the offending factor in the message).
FieldZeros linear_field_zeros(const QMatrix& a);

}  // namespace veron
