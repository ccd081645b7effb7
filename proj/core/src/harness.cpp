#include "tnineq/harness.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

namespace tnineq {

namespace {

bool violates(Relation relation, const Scalar& value) {
  switch (relation) {
    case Relation::GeqZero: return value < 0;
    case Relation::EqZero: return value != 0;
    case Relation::Unasserted: break;
  }
  throw std::invalid_argument("verification requires an asserted relation");
}

void track(VerifyReport& report, const Scalar& value) {
  if (!report.min_value_seen || value < *report.min_value_seen)
    report.min_value_seen = value;
  if (!report.max_value_seen || value > *report.max_value_seen)
    report.max_value_seen = value;
}

}  // namespace

VerifyReport verify(const DetExpr& e, const VerifyConfig& cfg) {
  if (e.ambient() != cfg.n)
    throw std::invalid_argument("config dimension differs from expression");
  if (cfg.samples < 1) throw std::invalid_argument("need at least one sample");
  VerifyReport report;
  for (int i = 0; i < cfg.samples; ++i) {
    BidiagFactorization f = sample_factorization(
        cfg.n, cfg.seed + static_cast<std::uint64_t>(i), cfg.weight_bound,
        cfg.nonsingular_only);
    const Matrix A = compose(f);
    const Scalar value = evaluate(e, A);
    track(report, value);
    if (violates(e.relation(), value))
      report.violations.push_back(Violation{std::move(f), value, i});
    ++report.checked;
  }
  return report;
}

VerifyReport soundness_sweep(const DetExpr& e, const SweepConfig& sweep,
                             const VerifyConfig& cfg) {
  const int n = e.ambient();
  if (n < 2)
    throw std::invalid_argument("operation sweeps need dimension >= 2");
  std::mt19937_64 rng(sweep.seed);
  std::uniform_int_distribution<int> length(0, sweep.max_length);
  std::uniform_int_distribution<int> position(1, n - 1);
  std::uniform_int_distribution<int> coin(0, 1);

  VerifyReport aggregate;
  for (int s = 0; s < sweep.sequences; ++s) {
    std::vector<OpSpec> ops;
    const int len = length(rng);
    for (int i = 0; i < len; ++i) {
      const int k = position(rng);
      const Axis axis = coin(rng) ? Axis::Row : Axis::Col;
      ops.push_back(coin(rng) ? OpSpec{axis, k, k + 1} : OpSpec{axis, k + 1, k});
    }
    const DetExpr derived = apply_sequence(e, ops);
    const VerifyReport r = verify(derived, cfg);
    aggregate.checked += r.checked;
    for (const Violation& v : r.violations) aggregate.violations.push_back(v);
    if (r.min_value_seen) track(aggregate, *r.min_value_seen);
    if (r.max_value_seen) track(aggregate, *r.max_value_seen);
  }
  return aggregate;
}

bool oracle_compare(const BidiagFactorization& f) {
  const int n = f.n();
  if (n > 5) throw std::domain_error("oracle comparison refused for n > 5");
  const Matrix A = compose(f);
  const PlanarNetwork net = build_network(f);
  for (std::uint64_t rm = 0; rm < (std::uint64_t{1} << n); ++rm) {
    for (std::uint64_t cm = 0; cm < (std::uint64_t{1} << n); ++cm) {
      if (std::popcount(rm) != std::popcount(cm)) continue;
      const IndexSet I = IndexSet::from_mask(rm, n);
      const IndexSet J = IndexSet::from_mask(cm, n);
      const Scalar by_elimination = minor(A, I, J);
      if (minor_cofactor(A, I, J) != by_elimination) return false;
      if (path_weight_sum(net, I, J) != by_elimination) return false;
    }
  }
  return true;
}

BidiagFactorization sample_scaled_factorization(int n, std::uint64_t seed,
                                                int weight_bound,
                                                int denominator) {
  if (denominator < 1) throw std::invalid_argument("denominator must be >= 1");
  const BidiagFactorization base = sample_factorization(n, seed, weight_bound);
  if (denominator == 1) return base;
  std::vector<BidiagFactor> factors = base.factors();
  for (BidiagFactor& f : factors)
    if (f.kind != BidiagFactor::Kind::Diag) f.weight /= denominator;
  return BidiagFactorization(n, std::move(factors));
}

std::optional<Violation> find_counterexample(const DetExpr& e,
                                             int samples_per_stage,
                                             std::uint64_t seed,
                                             const std::vector<HuntStage>& schedule) {
  if (e.relation() == Relation::Unasserted)
    throw std::invalid_argument("counterexample hunt requires an assertion");
  for (const HuntStage& stage : schedule) {
    for (int i = 0; i < samples_per_stage; ++i) {
      BidiagFactorization f = sample_scaled_factorization(
          e.ambient(), seed + static_cast<std::uint64_t>(i), stage.weight_bound,
          stage.denominator);
      const Scalar value = evaluate(e, compose(f));
      if (violates(e.relation(), value))
        return Violation{std::move(f), value, i};
    }
    seed += static_cast<std::uint64_t>(samples_per_stage);
  }
  return std::nullopt;
}

std::vector<SmallestMultQuery> enumerate_smallest_queries(int n) {
  if (n < 2) return {};
  std::vector<std::vector<IndexSet>> by_size(n + 1);
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m)
    by_size[std::popcount(m)].push_back(IndexSet::from_mask(m, n));

  std::vector<SmallestMultQuery> out;
  struct Side {
    IndexSet a, b, c, d;  // rows1, rows2, cols1, cols2
  };
  auto sides = [&](int first_size) {
    std::vector<Side> list;
    const int second_size = n - first_size;
    for (const IndexSet& r1 : by_size[first_size])
      for (const IndexSet& c1 : by_size[first_size])
        for (const IndexSet& r2 : by_size[second_size])
          for (const IndexSet& c2 : by_size[second_size])
            list.push_back(Side{r1, r2, c1, c2});
    return list;
  };

  for (int a = 1; a <= n - 1; ++a) {
    const std::vector<Side> lower = sides(a);
    for (int b = 1; b <= n - 1; ++b) {
      const std::vector<Side> upper = sides(b);
      for (const Side& lo : lower)
        for (const Side& up : upper)
          out.push_back(SmallestMultQuery{n, lo.a, lo.b, lo.c, lo.d, up.a,
                                          up.b, up.c, up.d});
    }
  }
  return out;
}

std::vector<OpSpec> nested_pair_ops(int n, const IndexSet& P, const IndexSet& Q,
                                    const IndexSet& X, const IndexSet& Y) {
  for (const IndexSet* s : {&P, &Q, &X, &Y})
    if (s->ambient() != n)
      throw std::invalid_argument("sets must share the ambient dimension");
  if (!X.is_subset_of(Y))
    throw std::invalid_argument("the target pair requires X to be a subset of Y");
  if (X.size() != P.size() || Y.size() != Q.size())
    throw std::invalid_argument("target sizes must match the source sizes");

  const int p = P.size();
  const int q = Q.size();
  std::vector<OpSpec> ops;

  // q downward sweeps compact ((P, Q)) onto (([1,p], [1,q])).
  for (int rep = 0; rep < q; ++rep)
    for (int u = n; u >= 2; --u) ops.push_back(OpSpec{Axis::Row, u, u - 1});

  // Place the smaller set onto the positions of X inside Y, largest first.
  const std::vector<int> y = Y.elements();
  std::vector<int> positions;  // 1-based position of each x in Y
  for (int x : X.elements())
    positions.push_back(
        static_cast<int>(std::lower_bound(y.begin(), y.end(), x) - y.begin()) +
        1);
  for (int j = p; j >= 1; --j)
    for (int t = j; t < positions[j - 1]; ++t)
      ops.push_back(OpSpec{Axis::Row, t, t + 1});

  // Place the larger set onto Y, largest first.
  for (int j = q; j >= 1; --j)
    for (int t = j; t < y[j - 1]; ++t) ops.push_back(OpSpec{Axis::Row, t, t + 1});

  return ops;
}

}  // namespace tnineq
