#include "core/lie.hpp"

#include <random>

namespace veron {

namespace {

QMatrix flatten(const QMatrix& m) {
  QMatrix v(m.rows() * m.cols(), 1);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.at(i * m.cols() + j, 0) = m.at(i, j);
  return v;
}

QMatrix flats_of(const std::vector<QMatrix>& mats, int d) {
  QMatrix g(d * d, int(mats.size()));
  for (size_t j = 0; j < mats.size(); ++j) g.set_col(int(j), flatten(mats[j]));
  return g;
}

bool is_nilpotent_matrix(const QMatrix& a) {
  QMatrix acc = a;
  for (int m = 1; m <= a.rows(); ++m) {
    if (acc.is_zero()) return true;
    acc = acc * a;
  }
  return false;
}

}  // namespace

LieBasis lie_closure(const std::vector<QMatrix>& mats) {
  require(!mats.empty(), Err::BadArgument, "empty generator list");
  int d = mats[0].rows();
  for (const auto& m : mats)
    require(m.is_square() && m.rows() == d, Err::AmbientMismatch,
            "generators must be square matrices of one size");

  LieBasis out;
  out.ambient_dim = d;
  auto in_span = [&](const QMatrix& x) {
    if (out.gens.empty()) return x.is_zero();
    return solve(flats_of(out.gens, d), flatten(x)).has_value();
  };
  for (const auto& m : mats)
    if (!in_span(m)) out.gens.push_back(m);

  // Bracket pairs until stable; new elements enlarge the pair queue.
  for (size_t i = 0; i < out.gens.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      QMatrix br = bracket(out.gens[i], out.gens[j]);
      if (!in_span(br)) {
        out.gens.push_back(br);
        out.input_was_closed = false;
        require(int(out.gens.size()) <= d * d, Err::Internal, "closure exceeded gl(d)");
      }
    }

  int m = out.dim();
  QMatrix g = flats_of(out.gens, d);
  out.structure.assign(size_t(m), std::vector<std::vector<Rat>>(size_t(m), std::vector<Rat>(size_t(m))));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < i; ++j) {
      auto coords = solve(g, flatten(bracket(out.gens[size_t(i)], out.gens[size_t(j)])));
      require(coords.has_value(), Err::Internal, "closure is not bracket-closed");
      for (int k = 0; k < m; ++k) {
        out.structure[size_t(i)][size_t(j)][size_t(k)] = coords->at(k, 0);
        out.structure[size_t(j)][size_t(i)][size_t(k)] = -coords->at(k, 0);
      }
    }
  return out;
}

StructureReport structure_report(const LieBasis& l) {
  StructureReport out;
  int m = l.dim();

  out.is_abelian = true;
  for (int i = 0; i < m && out.is_abelian; ++i)
    for (int j = 0; j < m && out.is_abelian; ++j)
      for (int k = 0; k < m; ++k)
        if (!l.structure[size_t(i)][size_t(j)][size_t(k)].is_zero()) {
          out.is_abelian = false;
          break;
        }

  // Derived algebra: the span of all brackets (an ideal, hence closed).
  std::vector<QMatrix> brackets;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < i; ++j) {
      QMatrix br = bracket(l.gens[size_t(i)], l.gens[size_t(j)]);
      if (!br.is_zero()) brackets.push_back(br);
    }
  if (brackets.empty()) {
    out.derived.ambient_dim = l.ambient_dim;
  } else {
    out.derived = lie_closure(brackets);
    require(out.derived.input_was_closed, Err::Internal, "derived span not bracket-closed");
  }

  // Center: sum_j x_j [g_j, g_i] = 0 for all i, via structure constants.
  if (m > 0) {
    QMatrix sys(m * m, m);
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < m; ++k)
        for (int j = 0; j < m; ++j) sys.at(i * m + k, j) = l.structure[size_t(j)][size_t(i)][size_t(k)];
    out.center_dim = kernel_basis(sys).cols();
  }

  // Killing form in the adjoint representation built from the structure
  // constants: (ad g_i)_(k,j) = c_ij^k.
  std::vector<QMatrix> ad(size_t(m), QMatrix(m, m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) ad[size_t(i)].at(k, j) = l.structure[size_t(i)][size_t(j)][size_t(k)];
  out.killing = QMatrix(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= i; ++j) {
      Rat t = (ad[size_t(i)] * ad[size_t(j)]).trace();
      out.killing.at(i, j) = t;
      out.killing.at(j, i) = t;
    }
  out.killing_nondegenerate = (rank(out.killing) == m);
  return out;
}

CommutantReport commutant_dimension(const LieBasis& l) {
  int d = l.ambient_dim;
  require(d > 0 && l.dim() > 0, Err::BadArgument, "empty Lie basis");
  // (X g - g X)_(i,j) = 0: coefficient of X_(p,q) is [p=i] g_(q,j) - g_(i,p) [q=j].
  QMatrix sys(l.dim() * d * d, d * d);
  for (int gidx = 0; gidx < l.dim(); ++gidx) {
    const QMatrix& g = l.gens[size_t(gidx)];
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        int row = (gidx * d + i) * d + j;
        for (int q = 0; q < d; ++q) sys.at(row, i * d + q) += g.at(q, j);
        for (int p = 0; p < d; ++p) sys.at(row, p * d + j) -= g.at(i, p);
      }
  }
  QMatrix k = kernel_basis(sys);

  CommutantReport out;
  out.dim = k.cols();
  for (int c = 0; c < k.cols(); ++c) {
    QMatrix x(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) x.at(i, j) = k.at(i * d + j, c);
    out.basis.push_back(std::move(x));
  }

  if (out.dim == 1) {
    out.cert = CommutantCert::IrreducibleOverC;
    return out;
  }
  out.cert = CommutantCert::InconclusiveOverQ;
  for (const auto& x : out.basis) {
    // Shift to traceless to discard the scalar direction.
    QMatrix x0 = x;
    Rat shift = x.trace() / Rat(d);
    for (int i = 0; i < d; ++i) x0.at(i, i) -= shift;
    if (x0.is_zero()) continue;
    RootList rl;
    try {
      rl = rational_roots(charpoly(x0));
    } catch (const VError& e) {
      if (e.code() == Err::SpectrumSearchOverflow) continue;  // stay inconclusive
      throw;
    }
    for (const auto& [root, mult] : rl.roots) {
      QMatrix shifted = x0;
      for (int i = 0; i < d; ++i) shifted.at(i, i) -= root;
      Subspace eig = Subspace::span_of_columns(kernel_basis(shifted));
      if (eig.dim() == 0 || eig.dim() == d) continue;
      // Eigenspaces of a commuting operator are invariant under the algebra.
      bool invariant = true;
      for (const auto& g : l.gens)
        if (!eig.contains(Subspace::span_of_columns(g * eig.basis()))) invariant = false;
      require(invariant, Err::Internal, "commutant eigenspace not invariant");
      out.cert = CommutantCert::ReducibleRationalWitness;
      out.invariant_subspace = eig;
      return out;
    }
  }
  return out;
}

int centralizer_dimension(const LieBasis& l, const QMatrix& x) {
  int d = l.ambient_dim;
  require(x.is_square() && x.rows() == d, Err::AmbientMismatch, "element size mismatch");
  require(solve(flats_of(l.gens, d), flatten(x)).has_value(), Err::NotInAlgebra,
          "element does not lie in the span of the basis");
  QMatrix sys(d * d, l.dim());
  for (int j = 0; j < l.dim(); ++j) sys.set_col(j, flatten(bracket(x, l.gens[size_t(j)])));
  return kernel_basis(sys).cols();
}

std::optional<QMatrix> find_nilpotent(const LieBasis& l, uint64_t seed, int budget) {
  StructureReport rep = structure_report(l);
  const std::vector<QMatrix>& der = rep.derived.gens;
  for (const auto& g : der)
    if (is_nilpotent_matrix(g)) return g;
  if (der.empty()) return std::nullopt;

  // Seeded draws; raw engine output keeps the stream identical across
  // standard libraries.
  std::mt19937_64 rng(seed);
  for (int t = 0; t < budget; ++t) {
    QMatrix cand(l.ambient_dim, l.ambient_dim);
    bool nonzero = false;
    for (const auto& g : der) {
      long c = long(rng() % 7) - 3;
      if (c == 0) continue;
      cand += Rat(c) * g;
      nonzero = true;
    }
    if (!nonzero || cand.is_zero()) continue;
    if (is_nilpotent_matrix(cand)) return cand;
  }
  return std::nullopt;
}

FieldZeros linear_field_zeros(const QMatrix& a) {
  require(a.is_square() && a.rows() > 0, Err::BadArgument, "square matrix expected");
  RootList rl = rational_roots(charpoly(a));
  if (rl.remainder.deg() > 0)
    raise(Err::IrrationalSpectrum,
          "characteristic polynomial has a non-rational factor: " + rl.remainder.str());
  FieldZeros out;
  for (const auto& [root, mult] : rl.roots) {
    QMatrix shifted = a;
    for (int i = 0; i < a.rows(); ++i) shifted.at(i, i) -= root;
    out.zeros.emplace_back(root, Subspace::span_of_columns(kernel_basis(shifted)));
  }
  return out;
}

}  // namespace veron
