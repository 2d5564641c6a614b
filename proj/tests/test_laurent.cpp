#include <doctest.h>

#include "core/laurent.hpp"
#include "core/poly.hpp"
#include "test_util.hpp"

using veron::Err;
using veron::LMatrix;
using veron::LPoly;
using veron::QMatrix;
using veron::Rat;

namespace {

LPoly lp(std::initializer_list<std::pair<int, long>> terms) {
  LPoly p;
  for (auto& [e, c] : terms) p.add_term(e, Rat(c));
  return p;
}

LMatrix rnd_lmatrix(std::mt19937_64& g, int n) {
  LMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = int(testutil::rnd_in(g, 0, 2)); k-- > 0;)
        m.at(i, j).add_term(int(testutil::rnd_in(g, -3, 3)),
                            Rat(testutil::rnd_in(g, -3, 3)));
  return m;
}

// determinant oracle for constant matrices through the characteristic
// polynomial: det(M) = (-1)^n charpoly(M)(0)
Rat det_oracle(const QMatrix& m) {
  Rat c0 = veron::charpoly(m).eval(Rat(0));
  return m.rows() % 2 ? -c0 : c0;
}

}  // namespace

TEST_CASE("laurent polynomial basics") {
  LPoly p = lp({{-1, 2}, {3, 1}});
  CHECK(p.min_exp() == -1);
  CHECK(p.max_exp() == 3);
  CHECK(p.coeff(-1) == Rat(2));
  CHECK(p.coeff(0) == Rat(0));
  CHECK(!p.is_poly_in_z());
  CHECK(p.shifted(1).is_poly_in_z());
  CHECK(p.inverted_var() == lp({{1, 2}, {-3, 1}}));
  CHECK(p.part_at_least(0) == lp({{3, 1}}));
  CHECK(p - p == LPoly{});
  CHECK(lp({{0, 1}, {1, 1}}) * lp({{0, 1}, {1, -1}}) == lp({{0, 1}, {2, -1}}));
  CHECK(p.str() == "2*z^-1 + z^3");

  // cancellation drops terms entirely
  LPoly q = lp({{2, 5}});
  q.add_term(2, Rat(-5));
  CHECK(q.is_zero());
}

TEST_CASE("determinant on permutation-like matrices keeps signs straight") {
  LMatrix swap(2, 2);
  swap.at(0, 1) = LPoly::constant(Rat(1));
  swap.at(1, 0) = LPoly::constant(Rat(1));
  CHECK(swap.det() == lp({{0, -1}}));

  LMatrix cyc(3, 3);  // e1 -> e2 -> e3 -> e1, an even permutation
  cyc.at(1, 0) = LPoly::constant(Rat(1));
  cyc.at(2, 1) = LPoly::constant(Rat(1));
  cyc.at(0, 2) = LPoly::constant(Rat(1));
  CHECK(cyc.det() == lp({{0, 1}}));

  LMatrix anti(3, 3);  // non-contiguous column masks in the expansion
  anti.at(0, 1) = lp({{1, 1}});
  anti.at(1, 0) = lp({{-1, 1}});
  anti.at(2, 2) = lp({{0, 3}});
  CHECK(anti.det() == lp({{0, -3}}));
}

TEST_CASE("determinant agrees with the constant-matrix oracle") {
  std::mt19937_64 g(97);
  for (int t = 0; t < 40; ++t) {
    int n = int(testutil::rnd_in(g, 1, 4));
    QMatrix m = testutil::rnd_matrix(g, n, n);
    LMatrix lm(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) lm.at(i, j) = LPoly::constant(m.at(i, j));
    CHECK(lm.det() == LPoly::constant(det_oracle(m)));
  }
}

TEST_CASE("determinant is multiplicative") {
  std::mt19937_64 g(101);
  for (int t = 0; t < 30; ++t) {
    int n = int(testutil::rnd_in(g, 1, 3));
    LMatrix a = rnd_lmatrix(g, n), b = rnd_lmatrix(g, n);
    CHECK((a * b).det() == a.det() * b.det());
  }
}

TEST_CASE("diag monomials, transpose, shifted, inverted") {
  LMatrix d = LMatrix::diag_monomials({2, -1});
  CHECK(d.at(0, 0) == lp({{2, 1}}));
  CHECK(d.at(1, 1) == lp({{-1, 1}}));
  CHECK(d.det() == lp({{1, 1}}));
  CHECK(d.shifted(1).at(1, 1) == lp({{0, 1}}));
  CHECK(d.inverted_var().at(0, 0) == lp({{-2, 1}}));
  LMatrix m(1, 2);
  m.at(0, 1) = lp({{1, 1}});
  CHECK(m.transpose().at(1, 0) == lp({{1, 1}}));
  CHECK(m.max_abs_exp() == 1);
  CHECK(!m.is_poly_in_u());
  CHECK(m.is_poly_in_z());
}

TEST_CASE("transition validation") {
  veron::TransitionDet td = veron::validate_transition(LMatrix::diag_monomials({1, -1}));
  CHECK(td.coeff == Rat(1));
  CHECK(td.exp == 0);

  LMatrix t1(2, 2);  // [[z, 1], [0, z^-1]]
  t1.at(0, 0) = lp({{1, 1}});
  t1.at(0, 1) = lp({{0, 1}});
  t1.at(1, 1) = lp({{-1, 1}});
  td = veron::validate_transition(t1);
  CHECK(td.coeff == Rat(1));
  CHECK(td.exp == 0);

  LMatrix bad = LMatrix::identity(2);
  bad.at(1, 1) = lp({{1, 1}, {0, -1}});  // det = z - 1, two monomials
  CHECK(testutil::raises(Err::NotInvertibleOnOverlap,
                         [&] { veron::validate_transition(bad); }));
  CHECK(testutil::raises(Err::NotInvertibleOnOverlap,
                         [] { veron::validate_transition(LMatrix(2, 2)); }));
  CHECK(testutil::raises(Err::NotInvertibleOnOverlap,
                         [] { veron::validate_transition(LMatrix(2, 3)); }));
}

TEST_CASE("transition inverse is exact") {
  std::mt19937_64 g(103);
  for (int t = 0; t < 25; ++t) {
    int n = int(testutil::rnd_in(g, 1, 4));
    std::vector<int> exps;
    for (int i = 0; i < n; ++i) exps.push_back(int(testutil::rnd_in(g, -3, 3)));
    LMatrix m = testutil::rnd_split_transition(g, exps);
    LMatrix inv = veron::transition_inverse(m);
    CHECK(m * inv == LMatrix::identity(n));
    CHECK(inv * m == LMatrix::identity(n));
  }
}
