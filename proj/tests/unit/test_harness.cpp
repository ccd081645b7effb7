#include <doctest.h>

#include "tnineq/families.hpp"
#include "tnineq/harness.hpp"
#include "tnineq/json_io.hpp"

using namespace tnineq;

namespace {

SmallestMultQuery example_one() {
  const int n = 6;
  return SmallestMultQuery{n,
                           IndexSet({1, 2, 3, 6}, n), IndexSet({3, 4}, n),
                           IndexSet({1, 2, 4, 5}, n), IndexSet({2, 5}, n),
                           IndexSet({1, 3, 6}, n),    IndexSet({2, 3, 4}, n),
                           IndexSet({1, 2, 5}, n),    IndexSet({2, 4, 5}, n)};
}

}  // namespace

TEST_CASE("verification is deterministic in the seed") {
  const DetExpr e = gantmacher_krein(4, 2);
  VerifyConfig cfg;
  cfg.n = 4;
  cfg.samples = 50;
  cfg.weight_bound = 3;
  cfg.seed = 123;
  const VerifyReport a = verify(e, cfg);
  const VerifyReport b = verify(e, cfg);
  CHECK(report_to_json(a) == report_to_json(b));
  CHECK(a.checked == 50);
  CHECK(a.ok());
}

TEST_CASE("fluctuating sums verify clean across lengths") {
  for (int l = 1; l <= 4; ++l) {
    VerifyConfig cfg;
    cfg.n = 4;
    cfg.samples = 100;
    cfg.weight_bound = 3;
    cfg.seed = l;
    CHECK(verify(gantmacher_krein(4, l), cfg).ok());
  }
}

TEST_CASE("an identity verifies to exactly zero everywhere") {
  KarlinParams p;
  p.n = 4;
  p.T = IndexSet({3}, 4);
  p.S = IndexSet({1, 2}, 4);
  p.p = 4;
  VerifyConfig cfg;
  cfg.n = 4;
  cfg.samples = 120;
  cfg.weight_bound = 3;
  cfg.seed = 77;
  const VerifyReport r = verify(karlin_identity(p), cfg);
  CHECK(r.ok());
  CHECK(*r.min_value_seen == 0);
  CHECK(*r.max_value_seen == 0);
}

TEST_CASE("a failing inequality yields a reproducible counterexample") {
  const DetExpr e = canonical_expr(example_one());
  const auto violation = find_counterexample(e, 2000, 5);
  REQUIRE(violation.has_value());
  CHECK(violation->value < 0);
  // The reproducer re-verifies standalone and is genuinely TN.
  CHECK(evaluate(e, compose(violation->factorization)) == violation->value);
  CHECK(is_tn_bruteforce(compose(violation->factorization)));
}

TEST_CASE("operation sweeps over valid inequalities stay clean") {
  const DetExpr e = gantmacher_krein(5, 3);
  SweepConfig sweep;
  sweep.sequences = 20;
  sweep.max_length = 6;
  sweep.seed = 2;
  VerifyConfig cfg;
  cfg.n = 5;
  cfg.samples = 40;
  cfg.weight_bound = 3;
  cfg.seed = 11;
  const VerifyReport r = soundness_sweep(e, sweep, cfg);
  CHECK(r.ok());
  CHECK(r.checked == 20 * 40);
}

TEST_CASE("identity sequences reproduce the plain verification") {
  const DetExpr e = gantmacher_krein(4, 2);
  VerifyConfig cfg;
  cfg.n = 4;
  cfg.samples = 60;
  cfg.weight_bound = 3;
  cfg.seed = 5;
  const DetExpr same = apply_sequence(e, std::vector<OpSpec>{});
  CHECK(report_to_json(verify(same, cfg)) == report_to_json(verify(e, cfg)));
}

TEST_CASE("subset-pair sequences derive valid inequalities") {
  // From the complementary window sum with P = [1,2], Q = [3,5] at n = 5,
  // derive the nested instance X = {2,4} inside Y = {2,4,5}.
  GenLaplaceParams gp;
  gp.n = 5;
  gp.P1 = IndexSet::interval(1, 2, 5);
  gp.P2 = IndexSet({}, 5);
  gp.Q1 = IndexSet({}, 5);
  gp.Q2 = IndexSet::interval(3, 5, 5);
  for (int l = 0; l <= 2; ++l) {
    const DetExpr base = gen_laplace_fluct(gp, l);
    const std::vector<OpSpec> ops =
        nested_pair_ops(5, gp.P(), gp.Q(), IndexSet({2, 4}, 5), IndexSet({2, 4, 5}, 5));
    const DetExpr derived = apply_sequence(base, ops);
    VerifyConfig cfg;
    cfg.n = 5;
    cfg.samples = 80;
    cfg.weight_bound = 3;
    cfg.seed = 31 + static_cast<std::uint64_t>(l);
    CHECK(verify(derived, cfg).ok());
  }
}

TEST_CASE("subset-pair sequences land on the requested sets") {
  const int n = 6;
  const IndexSet P({2, 5}, n), Q({1, 4, 6}, n);
  const IndexSet X({3, 6}, n), Y({2, 3, 6}, n);
  DetExpr e(n,
            {Term{Scalar(1), {Minor(P, IndexSet::interval(1, 2, n)),
                              Minor(Q, IndexSet::interval(1, 3, n))}}},
            Relation::Unasserted);
  const DetExpr moved = apply_sequence(e, nested_pair_ops(n, P, Q, X, Y));
  REQUIRE(moved.terms().size() == 1);
  CHECK(moved.terms()[0].minors[0].rows == X);
  CHECK(moved.terms()[0].minors[1].rows == Y);
}

TEST_CASE("triple-route minor agreement") {
  std::vector<BidiagFactor> id_factors{
      BidiagFactor::diagonal({Scalar(1), Scalar(1), Scalar(1)})};
  CHECK(oracle_compare(BidiagFactorization(3, std::move(id_factors))));
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    CHECK(oracle_compare(sample_factorization(4, seed, 3)));
  CHECK_THROWS_AS(oracle_compare(sample_factorization(6, 1, 2)),
                  std::domain_error);
}

TEST_CASE("query enumeration counts") {
  CHECK(enumerate_smallest_queries(2).size() == 256);
  const auto q3 = enumerate_smallest_queries(3);
  CHECK(q3.size() == 26244);
  for (int i = 0; i < 50; ++i) q3[static_cast<std::size_t>(i) * 500].validate();
}
