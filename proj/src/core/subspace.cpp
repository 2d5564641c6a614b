#include "core/subspace.hpp"

namespace veron {

Subspace Subspace::span_of_columns(const QMatrix& m) {
  Subspace s;
  s.ambient_ = m.rows();
  Rref r = rref_canonical(m.transpose());
  QMatrix b(m.rows(), r.rank);
  for (int i = 0; i < r.rank; ++i)
    for (int j = 0; j < m.rows(); ++j) b.at(j, i) = r.m.at(i, j);
  s.basis_ = b;
  return s;
}

Subspace Subspace::zero(int ambient) { return span_of_columns(QMatrix(ambient, 0)); }

Subspace Subspace::full(int ambient) { return span_of_columns(QMatrix::identity(ambient)); }

bool Subspace::contains_vector(const QMatrix& v) const {
  require(v.rows() == ambient_ && v.cols() == 1, Err::AmbientMismatch,
          "vector/subspace ambient mismatch");
  return solve(basis_, v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
  require(other.ambient_ == ambient_, Err::AmbientMismatch, "subspace ambient mismatch");
  if (other.dim() > dim()) return false;
  return solve(basis_, other.basis_).has_value();
}

Subspace sum(const Subspace& u, const Subspace& v) {
  require(u.ambient() == v.ambient(), Err::AmbientMismatch, "subspace ambient mismatch");
  return Subspace::span_of_columns(QMatrix::hstack(u.basis(), v.basis()));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  require(u.ambient() == v.ambient(), Err::AmbientMismatch, "subspace ambient mismatch");
  // Kernel of [U | -V]: pairs (a, b) with U a = V b; the intersection is
  // the image of the a-block under U.
  QMatrix stacked = QMatrix::hstack(u.basis(), -v.basis());
  QMatrix k = kernel_basis(stacked);
  QMatrix a_part(u.dim(), k.cols());
  for (int i = 0; i < u.dim(); ++i)
    for (int j = 0; j < k.cols(); ++j) a_part.at(i, j) = k.at(i, j);
  return Subspace::span_of_columns(u.basis() * a_part);
}

bool direct_sum_check(const Subspace& u, const Subspace& v) {
  require(u.ambient() == v.ambient(), Err::AmbientMismatch, "subspace ambient mismatch");
  if (u.dim() + v.dim() != u.ambient()) return false;
  return sum(u, v).dim() == u.ambient();
}

bool is_direct_sum_of(const Subspace& w, const Subspace& u, const Subspace& v) {
  require(w.ambient() == u.ambient() && w.ambient() == v.ambient(), Err::AmbientMismatch,
          "subspace ambient mismatch");
  return u.dim() + v.dim() == w.dim() && sum(u, v) == w;
}

Flag::Flag(FlagDir dir, std::vector<Subspace> spaces) : dir_(dir), spaces_(std::move(spaces)) {
  require(!spaces_.empty(), Err::BadArgument, "empty flag");
  ambient_ = spaces_[0].ambient();
  for (const auto& s : spaces_)
    require(s.ambient() == ambient_, Err::AmbientMismatch, "flag spaces in different ambients");
  for (size_t j = 0; j + 1 < spaces_.size(); ++j) {
    const Subspace& lo = dir_ == FlagDir::Ascending ? spaces_[j] : spaces_[j + 1];
    const Subspace& hi = dir_ == FlagDir::Ascending ? spaces_[j + 1] : spaces_[j];
    require(lo.dim() < hi.dim() && hi.contains(lo), Err::BadArgument,
            "flag spaces not strictly monotone");
  }
}

}  // namespace veron
