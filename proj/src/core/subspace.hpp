#pragma once

#include <vector>

#include "core/qmatrix.hpp"

namespace veron {

// Subspace of Q^d stored in reduced column-echelon canonical form: the
// basis columns are the transposed rref rows of any spanning set, so two
// subspaces are equal iff their stored bases are identical matrices.
class Subspace {
 public:
  Subspace() = default;
  static Subspace span_of_columns(const QMatrix& m);
  static Subspace zero(int ambient);
  static Subspace full(int ambient);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.cols(); }
  const QMatrix& basis() const { return basis_; }  // ambient x dim

  bool contains_vector(const QMatrix& v) const;  // v: ambient x 1
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  int ambient_ = 0;
  QMatrix basis_;  // canonical
};

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);

// U + V = E with dim U + dim V = dim E, i.e. U (+) V is the whole space.
bool direct_sum_check(const Subspace& u, const Subspace& v);
// U (+) V = W for a given subspace W.
bool is_direct_sum_of(const Subspace& w, const Subspace& u, const Subspace& v);

enum class FlagDir { Ascending, Descending };

// Strictly monotone chain of subspaces of one ambient space.
class Flag {
 public:
  Flag(FlagDir dir, std::vector<Subspace> spaces);  // validates on construction

  FlagDir direction() const { return dir_; }
  int length() const { return int(spaces_.size()); }
  int ambient() const { return ambient_; }
  const Subspace& space(int j) const { return spaces_[size_t(j)]; }  // 0-based
  const std::vector<Subspace>& spaces() const { return spaces_; }

 private:
  FlagDir dir_ = FlagDir::Ascending;
  int ambient_ = 0;
  std::vector<Subspace> spaces_;
};

}  // namespace veron
