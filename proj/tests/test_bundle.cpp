#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "core/bundle.hpp"
#include "test_util.hpp"

using veron::BirkhoffFactorization;
using veron::Err;
using veron::LMatrix;
using veron::LPoly;
using veron::Rat;

namespace {

LMatrix upper(int e00, long c01, int e01, int e11) {
  // [[z^e00, c01 z^e01], [0, z^e11]]
  LMatrix t(2, 2);
  t.at(0, 0) = LPoly::monomial(Rat(1), e00);
  if (c01 != 0) t.at(0, 1) = LPoly::monomial(Rat(c01), e01);
  t.at(1, 1) = LPoly::monomial(Rat(1), e11);
  return t;
}

long line_sum_h0(const std::vector<int>& exps, int n) {
  long h = 0;
  for (int a : exps) h += std::max(0, a + n + 1);
  return h;
}

std::vector<int> sorted_desc(std::vector<int> v) {
  std::sort(v.rbegin(), v.rend());
  return v;
}

}  // namespace

TEST_CASE("section counts for split bundles match the line-bundle formula") {
  CHECK(veron::h0_twisted(LMatrix::diag_monomials({2, -1}), 0) == 3);
  LMatrix line(1, 1);
  line.at(0, 0) = LPoly::constant(Rat(1));
  CHECK(veron::h0_twisted(line, 3) == 4);

  std::mt19937_64 g(107);
  for (int t = 0; t < 20; ++t) {
    int r = int(testutil::rnd_in(g, 1, 4));
    std::vector<int> exps;
    for (int i = 0; i < r; ++i) exps.push_back(int(testutil::rnd_in(g, -4, 4)));
    LMatrix d = LMatrix::diag_monomials(exps);
    for (int n = -6; n <= 6; ++n) CHECK(veron::h0_twisted(d, n) == line_sum_h0(exps, n));
  }
}

TEST_CASE("section count of the nonsplit-looking cocycles") {
  CHECK(veron::h0_twisted(upper(1, 1, 0, -1), -1) == 1);
  CHECK(veron::h0_twisted(upper(1, 1, 0, -1), 0) == 2);
  CHECK(veron::h0_twisted(upper(-1, 1, 0, 1), -1) == 0);
  CHECK(veron::h0_twisted(upper(-1, 1, 0, 1), 0) == 2);
}

TEST_CASE("h0 is twist-equivariant and gauge-invariant") {
  std::mt19937_64 g(109);
  for (int t = 0; t < 12; ++t) {
    int r = int(testutil::rnd_in(g, 1, 3));
    std::vector<int> exps;
    for (int i = 0; i < r; ++i) exps.push_back(int(testutil::rnd_in(g, -3, 3)));
    LMatrix m = testutil::rnd_split_transition(g, exps);
    for (int n = -3; n <= 3; ++n) {
      CHECK(veron::h0_twisted(m.shifted(1), n) == veron::h0_twisted(m, n + 1));
      CHECK(veron::h0_twisted(m, n) == line_sum_h0(exps, n));
    }
  }
}

TEST_CASE("splitting type on hand cases") {
  CHECK(veron::splitting_type(LMatrix::diag_monomials({-1, 3, 0})) ==
        std::vector<int>{3, 0, -1});
  // [[z, 1], [0, z^-1]]: the off-diagonal twist really is O(1) + O(-1)
  CHECK(veron::splitting_type(upper(1, 1, 0, -1)) == std::vector<int>{1, -1});
  // [[z^-1, 1], [0, z]]: this one is trivial
  CHECK(veron::splitting_type(upper(-1, 1, 0, 1)) == std::vector<int>{0, 0});
  // [[z, z^2], [1, z + z^-1]]: determinant 1, trivial as well
  LMatrix t(2, 2);
  t.at(0, 0) = LPoly::monomial(Rat(1), 1);
  t.at(0, 1) = LPoly::monomial(Rat(1), 2);
  t.at(1, 0) = LPoly::constant(Rat(1));
  t.at(1, 1) = LPoly::monomial(Rat(1), 1) + LPoly::monomial(Rat(1), -1);
  CHECK(veron::splitting_type(t) == std::vector<int>{0, 0});
}

TEST_CASE("splitting type of gauged direct sums of line bundles") {
  std::mt19937_64 g(113);
  for (int t = 0; t < 30; ++t) {
    int r = int(testutil::rnd_in(g, 1, 4));
    std::vector<int> exps;
    for (int i = 0; i < r; ++i) exps.push_back(int(testutil::rnd_in(g, -4, 4)));
    LMatrix m = testutil::rnd_split_transition(g, exps);
    CHECK(veron::splitting_type(m) == sorted_desc(exps));
  }
}

TEST_CASE("twist, dual, direct sum and tensor behave on splitting types") {
  std::mt19937_64 g(127);
  for (int t = 0; t < 10; ++t) {
    std::vector<int> ea, eb;
    for (int i = 0, n = int(testutil::rnd_in(g, 1, 3)); i < n; ++i)
      ea.push_back(int(testutil::rnd_in(g, -3, 3)));
    for (int i = 0, n = int(testutil::rnd_in(g, 1, 2)); i < n; ++i)
      eb.push_back(int(testutil::rnd_in(g, -3, 3)));
    LMatrix a = testutil::rnd_split_transition(g, ea);
    LMatrix b = testutil::rnd_split_transition(g, eb);

    // twist: adds m to every exponent
    std::vector<int> shifted = sorted_desc(ea);
    for (int& x : shifted) x += 2;
    CHECK(veron::splitting_type(a.shifted(2)) == shifted);

    // dual: negates and reverses
    std::vector<int> negated = sorted_desc(ea);
    for (int& x : negated) x = -x;
    std::reverse(negated.begin(), negated.end());
    CHECK(veron::splitting_type(veron::bundle_dual(a)) == negated);
    CHECK(veron::splitting_type(veron::bundle_dual(veron::bundle_dual(a))) ==
          sorted_desc(ea));

    // direct sum: merged multiset
    std::vector<int> merged = ea;
    merged.insert(merged.end(), eb.begin(), eb.end());
    CHECK(veron::splitting_type(veron::bundle_direct_sum(a, b)) == sorted_desc(merged));

    // tensor: all pairwise sums
    std::vector<int> pairs;
    for (int x : ea)
      for (int y : eb) pairs.push_back(x + y);
    CHECK(veron::splitting_type(veron::bundle_tensor(a, b)) == sorted_desc(pairs));
  }
}

TEST_CASE("equivariant model is the diagonal cocycle") {
  CHECK(veron::equivariant_model({3, 1}) == LMatrix::diag_monomials({3, 1}));
  CHECK(veron::splitting_type(veron::equivariant_model({5, 5})) ==
        std::vector<int>{5, 5});
}

TEST_CASE("factorization postconditions on the hand cases") {
  LMatrix t1 = upper(1, 1, 0, -1);
  BirkhoffFactorization f = veron::birkhoff_factorize(t1);
  CHECK(f.diag == std::vector<int>{1, -1});
  CHECK(f.plus * LMatrix::diag_monomials(f.diag) * f.minus == t1);
  CHECK(f.plus.is_poly_in_z());
  CHECK(f.minus.is_poly_in_u());

  LMatrix t0 = upper(-1, 1, 0, 1);
  f = veron::birkhoff_factorize(t0);
  CHECK(f.diag == std::vector<int>{0, 0});
  CHECK(f.plus * LMatrix::diag_monomials(f.diag) * f.minus == t0);

  f = veron::birkhoff_factorize(LMatrix::diag_monomials({2, 0, -1}));
  CHECK(f.diag == std::vector<int>{2, 0, -1});
}

TEST_CASE("factorization round-trips random transitions") {
  std::mt19937_64 g(131);
  for (int t = 0; t < 25; ++t) {
    int r = int(testutil::rnd_in(g, 1, 4));
    std::vector<int> exps;
    for (int i = 0; i < r; ++i) exps.push_back(int(testutil::rnd_in(g, -4, 4)));
    LMatrix m = testutil::rnd_split_transition(g, exps);
    BirkhoffFactorization f = veron::birkhoff_factorize(m);
    CHECK(f.diag == sorted_desc(exps));
    CHECK(f.diag == veron::splitting_type(m));
    CHECK(f.plus * LMatrix::diag_monomials(f.diag) * f.minus == m);
    CHECK(f.plus.is_poly_in_z());
    CHECK(f.minus.is_poly_in_u());
    LPoly dp = f.plus.det(), dm = f.minus.det();
    CHECK((dp.is_monomial() && dp.min_exp() == 0));
    CHECK((dm.is_monomial() && dm.min_exp() == 0));
  }
}

TEST_CASE("degenerate transitions are rejected up front") {
  CHECK(testutil::raises(Err::NotInvertibleOnOverlap,
                         [] { veron::splitting_type(LMatrix(2, 2)); }));
  LMatrix bad = LMatrix::identity(2);
  bad.at(0, 0) = LPoly::monomial(Rat(1), 1) + LPoly::constant(Rat(1));
  CHECK(testutil::raises(Err::NotInvertibleOnOverlap,
                         [&] { veron::birkhoff_factorize(bad); }));
}
