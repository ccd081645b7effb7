#include <doctest.h>

#include "tnineq/families.hpp"
#include "tnineq/harness.hpp"
#include "tnineq/matrix.hpp"

using namespace tnineq;

namespace {

Matrix mat(int n, std::vector<int> entries) {
  std::vector<Scalar> e;
  for (int x : entries) e.emplace_back(x);
  return Matrix(n, std::move(e));
}

KarlinParams karlin3() {
  KarlinParams p;
  p.n = 3;
  p.T = IndexSet({2}, 3);
  p.S = IndexSet({1, 3}, 3);
  p.p = 2;
  return p;
}

}  // namespace

TEST_CASE("first-row fluctuating sums") {
  const Matrix a = mat(2, {1, 1, 1, 2});
  CHECK(evaluate(gantmacher_krein(2, 1), a) == 1);

  // The full-length sum telescopes to an identity, on arbitrary matrices.
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 2 + static_cast<int>(seed % 3);
    const Matrix m = sample_integer_matrix(n, seed, 6);
    CHECK(evaluate(gantmacher_krein(n, n), m) == 0);
  }

  CHECK_THROWS_AS(gantmacher_krein(3, 4), std::invalid_argument);
}

TEST_CASE("row-1 star form coincides with the classical one, term for term") {
  for (int n : {2, 3, 4, 5})
    for (int l = 1; l <= n; ++l)
      CHECK(laplace_refined_diag(n, 1, l).same_expression(gantmacher_krein(n, l)));
}

TEST_CASE("star-form partial sums against the direct star matrix") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Matrix a = compose(sample_factorization(3, seed, 3));
    const Matrix star = a_star(a);
    const Scalar v = evaluate(laplace_refined_diag(3, 2, 1), a);
    CHECK(v == -star(2, 1));
    CHECK(v >= 0);
  }
}

TEST_CASE("mixed partial sums vanish at full length") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 3 + static_cast<int>(seed % 2);
    const Matrix m = sample_integer_matrix(n, seed + 5, 6);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        CHECK(evaluate(laplace_refined_offdiag(n, i, j, n), m) == 0);
      }
  }
  CHECK_THROWS_AS(laplace_refined_offdiag(3, 2, 2, 1), std::invalid_argument);
}

TEST_CASE("alternating two-minor sums specialize the mixed partial sums") {
  const int n = 4;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      KarlinParams p;
      p.n = n;
      p.T = IndexSet({}, n);
      p.S = IndexSet({i}, n);
      p.p = j;
      for (int l = 1; l <= n; ++l)
        CHECK(karlin_partial(p, l).same_expression(
            laplace_refined_offdiag(n, i, j, l)));
    }
}

TEST_CASE("the full alternating sum vanishes on every real matrix") {
  const KarlinParams p = karlin3();
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Matrix m = sample_integer_matrix(3, seed, 8);
    CHECK(evaluate(karlin_identity(p), m) == 0);
  }
  CHECK(karlin_identity(p).relation() == Relation::EqZero);
}

TEST_CASE("partial alternating sums are nonnegative on TN samples") {
  const KarlinParams p = karlin3();
  const DetExpr e = karlin_partial(p, 1);
  for (std::uint64_t seed = 0; seed < 100; ++seed)
    CHECK(evaluate(e, compose(sample_factorization(3, seed, 3))) >= 0);
}

TEST_CASE("parameter validation for the alternating sums") {
  KarlinParams p = karlin3();
  p.S = IndexSet({1, 2}, 3);  // contains p
  CHECK_THROWS_AS(karlin_identity(p), std::invalid_argument);
  p = karlin3();
  p.S = IndexSet({1}, 3);  // wrong size
  CHECK_THROWS_AS(karlin_identity(p), std::invalid_argument);
}

TEST_CASE("window sums at n = 2, by hand") {
  GenLaplaceParams p;
  p.n = 2;
  p.P1 = IndexSet({1}, 2);
  p.P2 = IndexSet({}, 2);
  p.Q1 = IndexSet({}, 2);
  p.Q2 = IndexSet({2}, 2);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Matrix m = sample_integer_matrix(2, seed, 9);
    CHECK(evaluate(gen_laplace_fluct(p, 0), m) == m(1, 2) * m(2, 1));
    CHECK(evaluate(gen_laplace_fluct(p, 1), m) == determinant(m));
  }
}

TEST_CASE("full window sum telescopes to the determinant") {
  for (int n : {3, 4}) {
    GenLaplaceParams p;
    p.n = n;
    p.P1 = IndexSet::interval(1, n - 1, n);
    p.P2 = IndexSet({}, n);
    p.Q1 = IndexSet({}, n);
    p.Q2 = IndexSet({n}, n);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Matrix m = sample_integer_matrix(n, seed + 3, 6);
      CHECK(evaluate(gen_laplace_fluct(p, n - 1), m) == determinant(m));
    }
  }
}

TEST_CASE("window-sum hypothesis violations raise the dedicated error") {
  GenLaplaceParams p;
  p.n = 4;
  p.P1 = IndexSet({2}, 4);
  p.P2 = IndexSet({3}, 4);
  p.Q1 = IndexSet({1}, 4);  // not contained in P1
  p.Q2 = IndexSet({4}, 4);
  CHECK_THROWS_AS(gen_laplace_fluct(p, 0), HypothesisError);
}

TEST_CASE("partition-sum comparison at n = 2") {
  BJParams p;
  p.n = 2;
  p.lambda = {1, 1};
  p.mu = {2, 0};
  const DetExpr e = barrett_johnson(p);

  const DetExpr expected(
      2,
      {Term{Scalar(2),
            {Minor(IndexSet({1}, 2), IndexSet({1}, 2)),
             Minor(IndexSet({2}, 2), IndexSet({2}, 2))}},
       Term{Scalar(-2),
            {Minor(IndexSet::full(2), IndexSet::full(2)),
             Minor(IndexSet({}, 2), IndexSet({}, 2))}}},
      Relation::GeqZero);
  CHECK(e.same_expression(expected));

  const Matrix a = mat(2, {1, 1, 1, 2});
  CHECK(evaluate(e, a) == 2);  // 2*(1*2) - 2*det = 2
}

TEST_CASE("equal shapes give the zero expression") {
  BJParams p;
  p.n = 3;
  p.lambda = {2, 1};
  p.mu = {2, 1};
  CHECK(barrett_johnson(p).is_zero());
}

TEST_CASE("pair-avoiding restriction can empty one side") {
  BJParams p;
  p.n = 3;
  p.lambda = {1, 1, 1};
  p.mu = {3, 0, 0};
  const DetExpr e = barrett_johnson_shifted(p, 1, 2);
  CHECK_FALSE(e.is_zero());
  for (const Term& t : e.terms()) CHECK(t.coeff > 0);
}

TEST_CASE("shape validation") {
  BJParams p;
  p.n = 3;
  p.lambda = {2, 1};
  p.mu = {1, 2};  // not nonincreasing
  CHECK_THROWS_AS(barrett_johnson(p), std::invalid_argument);
  p.mu = {1, 1, 1};  // length mismatch
  CHECK_THROWS_AS(barrett_johnson(p), std::invalid_argument);
  p.lambda = {3, 0};
  p.mu = {2, 1};  // lambda's prefixes exceed mu's
  CHECK_THROWS_AS(barrett_johnson(p), HypothesisError);
}

TEST_CASE("the mixed partial sums derive from the row-1 form by operations") {
  const int n = 4;
  const int l = 2;
  const auto [after, report] =
      apply_op(laplace_refined_diag(n, 1, l), OpSpec{Axis::Row, 1, 2});
  // The determinant term dies; each summand's first minor becomes ({2}|{k}).
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      const std::vector<OpSpec> ops =
          nested_pair_ops(n, IndexSet({2}, n), IndexSet::full(n).erased(1),
                          IndexSet({i}, n), IndexSet::full(n).erased(j));
      CHECK(apply_sequence(after, ops)
                .same_expression(laplace_refined_offdiag(n, i, j, l)));
    }
}
