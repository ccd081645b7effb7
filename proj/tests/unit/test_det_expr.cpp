#include <doctest.h>

#include <bit>
#include <random>

#include "tnineq/det_expr.hpp"

using namespace tnineq;

namespace {

Term term(Scalar c, std::vector<std::pair<std::vector<int>, std::vector<int>>> ms,
          int n) {
  Term t;
  t.coeff = std::move(c);
  for (auto& [r, cset] : ms) t.minors.push_back(Minor(IndexSet(r, n), IndexSet(cset, n)));
  return t;
}

// P-side minus I-side of the running 6x6 example, asserted >= 0.
DetExpr example_ge() {
  const int n = 6;
  return DetExpr(
      n,
      {term(Scalar(1), {{{1, 2, 3, 6}, {1, 2, 4, 5}}, {{3, 4}, {2, 5}}}, n),
       term(Scalar(-1), {{{1, 3, 6}, {1, 2, 5}}, {{2, 3, 4}, {2, 4, 5}}}, n)},
      Relation::GeqZero);
}

}  // namespace

TEST_CASE("row operation keeps only maximally shifted terms") {
  const auto [result, report] = apply_op(example_ge(), OpSpec{Axis::Row, 1, 2});
  CHECK(report.shift_counts == std::vector<int>{0, 1});
  CHECK(report.max_count == 1);
  CHECK(report.survivors == std::vector<std::size_t>{1});
  const DetExpr expected(
      6, {term(Scalar(-1), {{{2, 3, 6}, {1, 2, 5}}, {{2, 3, 4}, {2, 4, 5}}}, 6)},
      Relation::GeqZero);
  CHECK(result.same_expression(expected));
  CHECK(result.relation() == Relation::GeqZero);
}

TEST_CASE("identity operation returns the expression unchanged") {
  const DetExpr e = example_ge();
  const auto [result, report] = apply_op(e, OpSpec{Axis::Row, 3, 3});
  CHECK(result.same_expression(e));
  CHECK(report.survivors.size() == 2);
}

TEST_CASE("single-term operation shifts in place") {
  const DetExpr e(2, {term(Scalar(1), {{{1}, {1}}}, 2)}, Relation::GeqZero);
  const auto [result, report] = apply_op(e, OpSpec{Axis::Row, 1, 2});
  CHECK(result.same_expression(
      DetExpr(2, {term(Scalar(1), {{{2}, {1}}}, 2)}, Relation::GeqZero)));
  CHECK(report.max_count == 1);
}

TEST_CASE("column operations act on column sets") {
  const DetExpr e(3, {term(Scalar(1), {{{1, 2}, {1, 3}}}, 3)}, Relation::GeqZero);
  const auto [result, report] = apply_op(e, OpSpec{Axis::Col, 1, 2});
  CHECK(result.same_expression(
      DetExpr(3, {term(Scalar(1), {{{1, 2}, {2, 3}}}, 3)}, Relation::GeqZero)));
}

TEST_CASE("empty sequence and sequence inversion") {
  const DetExpr e = example_ge();
  CHECK(apply_sequence(e, {}).same_expression(e));

  const std::vector<OpSpec> ops{OpSpec{Axis::Row, 1, 2}, OpSpec{Axis::Col, 3, 4}};
  const std::vector<OpSpec> inv = inverse_sequence(ops);
  REQUIRE(inv.size() == 2);
  CHECK(inv[0] == OpSpec{Axis::Col, 4, 3});
  CHECK(inv[1] == OpSpec{Axis::Row, 2, 1});
}

TEST_CASE("formal inverse restores single-term expressions that shift at every step") {
  std::mt19937_64 rng(11);
  const int n = 6;
  int exercised = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::uint64_t rows = rng() & 0x3F;
    const std::uint64_t cols_needed = std::popcount(rows);
    std::uint64_t cols = rng() & 0x3F;
    while (std::popcount(cols) != static_cast<int>(cols_needed)) cols = rng() & 0x3F;
    DetExpr e(n,
              {Term{Scalar(1),
                    {Minor(IndexSet::from_mask(rows, n), IndexSet::from_mask(cols, n))}}},
              Relation::Unasserted);

    std::vector<OpSpec> ops;
    DetExpr cur = e;
    for (int step = 0; step < 4; ++step) {
      // Pick an op that actually shifts the term's sets.
      std::vector<OpSpec> candidates;
      for (int k = 1; k <= n - 1; ++k)
        for (const Axis axis : {Axis::Row, Axis::Col})
          for (const OpSpec op : {OpSpec{axis, k, k + 1}, OpSpec{axis, k + 1, k}}) {
            const Minor& m = cur.terms()[0].minors[0];
            const IndexSet& s = axis == Axis::Row ? m.rows : m.cols;
            if (s.contains(op.u) && !s.contains(op.v)) candidates.push_back(op);
          }
      if (candidates.empty()) break;
      const OpSpec op = candidates[rng() % candidates.size()];
      const auto [next, report] = apply_op(cur, op);
      REQUIRE(report.max_count == 1);
      ops.push_back(op);
      cur = next;
    }
    if (ops.empty()) continue;
    ++exercised;
    const DetExpr back = apply_sequence(cur, inverse_sequence(ops));
    CHECK(back.same_expression(e));
  }
  CHECK(exercised > 50);
}

TEST_CASE("certifiable falseness") {
  const DetExpr all_neg(
      6, {term(Scalar(-1), {{{2, 3, 6}, {1, 2, 5}}, {{2, 3, 4}, {2, 4, 5}}}, 6)},
      Relation::GeqZero);
  CHECK(is_certifiably_false(all_neg));

  const DetExpr empty(6, {}, Relation::GeqZero);
  CHECK_FALSE(is_certifiably_false(empty));

  const DetExpr mixed(2,
                      {term(Scalar(1), {{{1}, {1}}}, 2),
                       term(Scalar(-1), {{{2}, {2}}}, 2)},
                      Relation::GeqZero);
  CHECK_FALSE(is_certifiably_false(mixed));
  CHECK_THROWS_AS(is_certifiably_false(mixed.with_relation(Relation::EqZero)),
                  std::invalid_argument);
}

TEST_CASE("normalization merges equal minor multisets and drops zeros") {
  const int n = 3;
  const DetExpr e(n,
                  {term(Scalar(2), {{{1}, {2}}, {{2, 3}, {1, 3}}}, n),
                   term(Scalar(3), {{{2, 3}, {1, 3}}, {{1}, {2}}}, n),
                   term(Scalar(-1), {{{1}, {1}}}, n),
                   term(Scalar(1), {{{1}, {1}}}, n)},
                  Relation::Unasserted);
  const DetExpr norm = e.normalized();
  REQUIRE(norm.terms().size() == 1);
  CHECK(norm.terms()[0].coeff == 5);
  CHECK(e.same_expression(norm));
}

TEST_CASE("operation validation") {
  const DetExpr e = example_ge();
  CHECK_THROWS_AS(apply_op(e, OpSpec{Axis::Row, 1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(apply_op(e, OpSpec{Axis::Row, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(apply_op(e, OpSpec{Axis::Col, 6, 7}), std::invalid_argument);
}
