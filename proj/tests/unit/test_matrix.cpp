#include <doctest.h>

#include <bit>

#include "tnineq/families.hpp"
#include "tnineq/matrix.hpp"

using namespace tnineq;

namespace {

Matrix mat(int n, std::vector<int> entries) {
  std::vector<Scalar> e;
  for (int x : entries) e.emplace_back(x);
  return Matrix(n, std::move(e));
}

}  // namespace

TEST_CASE("compose forced arithmetic") {
  const BidiagFactorization f2(
      2, {BidiagFactor::lower(1, 1),
          BidiagFactor::diagonal({Scalar(1), Scalar(1)}),
          BidiagFactor::upper(1, 1)});
  CHECK(compose(f2) == mat(2, {1, 1, 1, 2}));

  const BidiagFactorization id3(
      3, {BidiagFactor::diagonal({Scalar(1), Scalar(1), Scalar(1)})});
  CHECK(compose(id3) == Matrix::identity(3));

  const BidiagFactorization f3(
      3, {BidiagFactor::lower(2, 1), BidiagFactor::lower(1, 1),
          BidiagFactor::diagonal({Scalar(1), Scalar(1), Scalar(1)})});
  CHECK(compose(f3) == mat(3, {1, 0, 0, 1, 1, 0, 1, 1, 1}));
}

TEST_CASE("factorization invariants") {
  CHECK_THROWS_AS(BidiagFactorization(
                      3, {BidiagFactor::diagonal({Scalar(1), Scalar(0), Scalar(1)})}),
                  std::invalid_argument);
  CHECK_THROWS_AS(BidiagFactorization(3, {BidiagFactor::lower(1, 1)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      BidiagFactorization(3,
                          {BidiagFactor::upper(1, 1),
                           BidiagFactor::diagonal({Scalar(1), Scalar(1), Scalar(1)})}),
      std::invalid_argument);
  CHECK_THROWS_AS(BidiagFactorization(
                      3, {BidiagFactor::lower(1, -1),
                          BidiagFactor::diagonal({Scalar(1), Scalar(1), Scalar(1)})}),
                  std::invalid_argument);
}

TEST_CASE("minor basics") {
  const Matrix a = mat(2, {1, 1, 1, 2});
  CHECK(minor(a, IndexSet::full(2), IndexSet::full(2)) == 1);
  CHECK(minor(a, IndexSet({}, 2), IndexSet({}, 2)) == 1);
  const Matrix b = mat(3, {1, 0, 0, 1, 1, 0, 1, 1, 1});
  CHECK(minor(b, IndexSet({2, 3}, 3), IndexSet({1, 2}, 3)) == 0);
  CHECK_THROWS_AS(minor(b, IndexSet({1}, 3), IndexSet({1, 2}, 3)),
                  std::invalid_argument);
}

TEST_CASE("elimination agrees with cofactor expansion") {
  for (int n = 1; n <= 4; ++n) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const Matrix a = sample_integer_matrix(n, seed * 7 + 1, 6);
      for (std::uint64_t rm = 0; rm < (std::uint64_t{1} << n); ++rm)
        for (std::uint64_t cm = 0; cm < (std::uint64_t{1} << n); ++cm) {
          if (std::popcount(rm) != std::popcount(cm)) continue;
          const IndexSet I = IndexSet::from_mask(rm, n);
          const IndexSet J = IndexSet::from_mask(cm, n);
          CHECK(minor(a, I, J) == minor_cofactor(a, I, J));
        }
    }
  }
}

TEST_CASE("adjugate and the entrywise star matrix") {
  const Matrix a = mat(2, {1, 1, 1, 2});
  CHECK(adjugate(a) == mat(2, {2, -1, -1, 1}));
  CHECK(a_star(a) == mat(2, {1, -1, -1, 1}));

  CHECK(adjugate(Matrix::identity(3)) == Matrix::identity(3));
  CHECK(a_star(Matrix::identity(3)) == Matrix(3));

  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Matrix m = compose(sample_factorization(4, seed, 3));
    const Matrix adj = adjugate(m);
    const Scalar det = determinant(m);
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j) {
        Scalar dot(0);
        for (int k = 1; k <= 4; ++k) dot += m(i, k) * adj(k, j);
        CHECK(dot == (i == j ? det : Scalar(0)));
      }
    const Matrix star = a_star(m);
    for (int i = 1; i <= 4; ++i) {
      Scalar row_sum(0);
      for (int j = 1; j <= 4; ++j) row_sum += star(i, j);
      CHECK(row_sum == 0);
    }
  }
}

TEST_CASE("first-row expansion identity, exact, on arbitrary matrices") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const int n = 2 + static_cast<int>(seed % 4);
    const Matrix a = sample_integer_matrix(n, seed, 7);
    const Scalar det = determinant(a);
    const IndexSet all = IndexSet::full(n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        Scalar sum(0);
        int sign = (j % 2 == 0) ? -1 : 1;  // (-1)^{j+1}
        for (int k = 1; k <= n; ++k) {
          sum += Scalar(sign) * a(i, k) * minor(a, all.erased(j), all.erased(k));
          sign = -sign;
        }
        CHECK(sum == (i == j ? det : Scalar(0)));
      }
  }
}

TEST_CASE("sampling is deterministic and TN") {
  const BidiagFactorization f1 = sample_factorization(4, 42, 3);
  const BidiagFactorization f2 = sample_factorization(4, 42, 3);
  CHECK(compose(f1) == compose(f2));

  for (std::uint64_t seed = 0; seed < 200; ++seed)
    CHECK(is_tn_bruteforce(compose(sample_factorization(4, seed, 3))));
  for (std::uint64_t seed = 0; seed < 25; ++seed)
    CHECK(is_tn_bruteforce(compose(sample_factorization(5, seed, 3))));
}

TEST_CASE("all-zero weights with unit diagonal compose to the identity") {
  std::vector<BidiagFactor> factors;
  for (int k = 1; k <= 3; ++k) factors.push_back(BidiagFactor::lower(k, 0));
  factors.push_back(
      BidiagFactor::diagonal({Scalar(1), Scalar(1), Scalar(1), Scalar(1)}));
  for (int k = 1; k <= 3; ++k) factors.push_back(BidiagFactor::upper(k, 0));
  CHECK(compose(BidiagFactorization(4, std::move(factors))) ==
        Matrix::identity(4));
}

TEST_CASE("positive-weight samples are totally positive at small sizes") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Matrix a =
        compose(sample_factorization(4, seed, 3, /*positive_weights=*/true));
    for (std::uint64_t rm = 1; rm < 16; ++rm)
      for (std::uint64_t cm = 1; cm < 16; ++cm) {
        if (std::popcount(rm) != std::popcount(cm)) continue;
        CHECK(minor(a, IndexSet::from_mask(rm, 4), IndexSet::from_mask(cm, 4)) >
              0);
      }
  }
}

TEST_CASE("brute-force TN check") {
  CHECK(is_tn_bruteforce(mat(2, {1, 1, 1, 2})));
  CHECK_FALSE(is_tn_bruteforce(mat(2, {0, 1, 1, 0})));
  CHECK_THROWS_AS(is_tn_bruteforce(Matrix::identity(9)), std::domain_error);
}

TEST_CASE("evaluation") {
  const Matrix a = mat(2, {1, 1, 1, 2});
  CHECK(evaluate(gantmacher_krein(2, 1), a) == 1);
  CHECK(evaluate(DetExpr(2, {}, Relation::Unasserted), a) == 0);
  CHECK_THROWS_AS(evaluate(gantmacher_krein(3, 1), a), std::invalid_argument);
}
