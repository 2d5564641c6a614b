#include <doctest.h>

#include "core/lie.hpp"
#include "core/sl2.hpp"
#include "test_util.hpp"

using veron::CommutantCert;
using veron::Err;
using veron::LieBasis;
using veron::QMatrix;
using veron::Rat;

namespace {

LieBasis sl2_in(int n) {
  veron::Sl2Triple t = veron::irrep_matrices(n);
  return veron::lie_closure({t.a, t.b});
}

// recompute every bracket from the reported structure constants
bool structure_ok(const LieBasis& l) {
  for (int i = 0; i < l.dim(); ++i)
    for (int j = 0; j < l.dim(); ++j) {
      QMatrix want(l.ambient_dim, l.ambient_dim);
      for (int k = 0; k < l.dim(); ++k)
        want += l.structure[size_t(i)][size_t(j)][size_t(k)] * l.gens[size_t(k)];
      if (bracket(l.gens[size_t(i)], l.gens[size_t(j)]) != want) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("closure completes a generating pair") {
  LieBasis l = sl2_in(1);
  CHECK(l.dim() == 3);
  CHECK(!l.input_was_closed);
  CHECK(l.ambient_dim == 2);
  CHECK(structure_ok(l));

  veron::Sl2Triple t = veron::irrep_matrices(1);
  LieBasis full = veron::lie_closure({t.a, t.b, t.h});
  CHECK(full.dim() == 3);
  CHECK(full.input_was_closed);

  // dependent input spans are deduplicated
  LieBasis dup = veron::lie_closure({t.a, Rat(2) * t.a, t.b});
  CHECK(dup.dim() == 3);
}

TEST_CASE("structure report for the irreducible sl2") {
  LieBasis l = sl2_in(1);  // basis order: a, b, [a,b]
  veron::StructureReport r = veron::structure_report(l);
  CHECK(!r.is_abelian);
  CHECK(r.derived.dim() == 3);
  CHECK(r.center_dim == 0);
  CHECK(r.killing == QMatrix::of({{0, 4, 0}, {4, 0, 0}, {0, 0, 8}}));
  CHECK(r.killing_nondegenerate);
}

TEST_CASE("structure report for an abelian diagonal algebra") {
  LieBasis l = veron::lie_closure({QMatrix::of({{1, 0}, {0, 2}}), QMatrix::identity(2)});
  veron::StructureReport r = veron::structure_report(l);
  CHECK(r.is_abelian);
  CHECK(r.derived.dim() == 0);
  CHECK(r.center_dim == 2);
  CHECK(r.killing.is_zero());
  CHECK(!r.killing_nondegenerate);
  CHECK(!veron::find_nilpotent(l, 1).has_value());
}

TEST_CASE("structure report for a borel") {
  QMatrix a = QMatrix::of({{0, 1}, {0, 0}});
  QMatrix h = QMatrix::of({{1, 0}, {0, -1}});
  LieBasis l = veron::lie_closure({a, h});
  CHECK(l.dim() == 2);
  CHECK(l.input_was_closed);
  veron::StructureReport r = veron::structure_report(l);
  CHECK(!r.is_abelian);
  CHECK(r.derived.dim() == 1);
  CHECK(r.center_dim == 0);
  CHECK(r.killing == QMatrix::of({{0, 0}, {0, 4}}));
  CHECK(!r.killing_nondegenerate);

  auto nil = veron::find_nilpotent(l, 1);
  REQUIRE(nil.has_value());
  CHECK(!nil->is_zero());
  CHECK(nil->pow(2).is_zero());
}

TEST_CASE("commutant of an irreducible is scalar") {
  for (int n = 1; n <= 4; ++n) {
    veron::CommutantReport c = veron::commutant_dimension(sl2_in(n));
    CHECK(c.dim == 1);
    CHECK(c.cert == CommutantCert::IrreducibleOverC);
    CHECK(!c.invariant_subspace.has_value());
  }
}

TEST_CASE("commutant finds a rational witness for a split reducible") {
  veron::Sl2Triple t = veron::irrep_matrices(1);
  auto twice = [](const QMatrix& m) {
    QMatrix out(4, 4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        out.at(i, j) = m.at(i, j);
        out.at(i + 2, j + 2) = m.at(i, j);
      }
    return out;
  };
  LieBasis l = veron::lie_closure({twice(t.a), twice(t.b)});
  veron::CommutantReport c = veron::commutant_dimension(l);
  CHECK(c.dim == 4);  // two copies of the same irreducible
  CHECK(c.cert == CommutantCert::ReducibleRationalWitness);
  REQUIRE(c.invariant_subspace.has_value());
  int d = c.invariant_subspace->dim();
  CHECK(d > 0);
  CHECK(d < 4);
  for (const QMatrix& gen : l.gens) {
    QMatrix image = gen * c.invariant_subspace->basis();
    for (int j = 0; j < image.cols(); ++j)
      CHECK(c.invariant_subspace->contains_vector(image.col(j)));
  }
}

TEST_CASE("commutant is honest when the witness needs an extension field") {
  // plane rotation: commutant is Q[J], irreducible over Q but not over C
  LieBasis l = veron::lie_closure({QMatrix::of({{0, -1}, {1, 0}})});
  veron::CommutantReport c = veron::commutant_dimension(l);
  CHECK(c.dim == 2);
  CHECK(c.cert == CommutantCert::InconclusiveOverQ);
  CHECK(!c.invariant_subspace.has_value());
}

TEST_CASE("centralizer dimensions inside sl2") {
  LieBasis l = sl2_in(1);
  veron::Sl2Triple t = veron::irrep_matrices(1);
  CHECK(veron::centralizer_dimension(l, t.h) == 1);
  CHECK(veron::centralizer_dimension(l, t.a) == 1);
  CHECK(veron::centralizer_dimension(l, QMatrix(2, 2)) == 3);
  CHECK(testutil::raises(Err::NotInAlgebra,
                         [&] { veron::centralizer_dimension(l, QMatrix::identity(2)); }));
}

TEST_CASE("nilpotent search is deterministic per seed") {
  LieBasis l = sl2_in(2);
  auto n1 = veron::find_nilpotent(l, 42);
  auto n2 = veron::find_nilpotent(l, 42);
  REQUIRE(n1.has_value());
  REQUIRE(n2.has_value());
  CHECK(*n1 == *n2);
  CHECK(n1->pow(l.ambient_dim).is_zero());
}

TEST_CASE("vector field zeros on projective space") {
  veron::FieldZeros z = veron::linear_field_zeros(QMatrix::of({{2, 0}, {0, -3}}));
  REQUIRE(z.zeros.size() == 2);
  CHECK(z.zeros[0].first == Rat(2));
  CHECK(z.zeros[1].first == Rat(-3));
  CHECK(z.zeros[0].second.dim() == 1);
  CHECK(z.zeros[1].second.dim() == 1);

  // isolated zero count bounded by eigenvalue multiplicity
  veron::FieldZeros j = veron::linear_field_zeros(testutil::jordan_blocks({2}));
  REQUIRE(j.zeros.size() == 1);
  CHECK(j.zeros[0].first == Rat(0));
  CHECK(j.zeros[0].second.dim() == 1);

  CHECK(testutil::raises(Err::IrrationalSpectrum, [] {
    veron::linear_field_zeros(QMatrix::of({{0, 2}, {1, 0}}));
  }));
}
