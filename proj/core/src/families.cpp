#include "tnineq/families.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

namespace tnineq {

namespace {

Scalar alt_sign(int exponent) { return exponent % 2 == 0 ? Scalar(1) : Scalar(-1); }

void check_range(int value, int lo, int hi, const char* what) {
  if (value < lo || value > hi)
    throw std::invalid_argument(std::string(what) + " out of range");
}

}  // namespace

DetExpr gantmacher_krein(int n, int l) {
  check_range(n, 1, IndexSet::kMaxAmbient, "dimension");
  check_range(l, 1, n, "partial-sum length");
  const IndexSet all = IndexSet::full(n);
  std::vector<Term> terms;
  for (int k = 1; k <= l; ++k)
    terms.push_back(Term{alt_sign(l + k),
                         {Minor(IndexSet({1}, n), IndexSet({k}, n)),
                          Minor(all.erased(1), all.erased(k))}});
  terms.push_back(Term{alt_sign(l), {Minor(all, all)}});
  return DetExpr(n, std::move(terms), Relation::GeqZero).normalized();
}

DetExpr laplace_refined_diag(int n, int i, int l) {
  check_range(n, 1, IndexSet::kMaxAmbient, "dimension");
  check_range(i, 1, n, "row index");
  check_range(l, 1, n, "partial-sum length");
  const IndexSet all = IndexSet::full(n);
  std::vector<Term> terms;
  for (int k = 1; k <= l; ++k) {
    terms.push_back(Term{alt_sign(l + k),
                         {Minor(IndexSet({i}, n), IndexSet({k}, n)),
                          Minor(all.erased(i), all.erased(k))}});
    if (k == i) terms.push_back(Term{alt_sign(i + l + 1), {Minor(all, all)}});
  }
  return DetExpr(n, std::move(terms), Relation::GeqZero).normalized();
}

DetExpr laplace_refined_offdiag(int n, int i, int j, int l) {
  check_range(n, 1, IndexSet::kMaxAmbient, "dimension");
  check_range(i, 1, n, "row index");
  check_range(j, 1, n, "column index");
  check_range(l, 1, n, "partial-sum length");
  if (i == j)
    throw std::invalid_argument("the mixed form requires i != j");
  const IndexSet all = IndexSet::full(n);
  std::vector<Term> terms;
  for (int k = 1; k <= l; ++k)
    terms.push_back(Term{alt_sign(l + k),
                         {Minor(IndexSet({i}, n), IndexSet({k}, n)),
                          Minor(all.erased(j), all.erased(k))}});
  return DetExpr(n, std::move(terms), Relation::GeqZero).normalized();
}

void KarlinParams::validate() const {
  check_range(n, 1, IndexSet::kMaxAmbient, "dimension");
  check_range(p, 1, n, "p");
  if (T.ambient() != n || S.ambient() != n)
    throw std::invalid_argument("parameter sets must live in [n]");
  if (S.contains(p))
    throw std::invalid_argument("S must avoid p");
  if (S.size() != T.size() + 1)
    throw std::invalid_argument("|S| must equal |T| + 1");
}

std::vector<int> KarlinParams::v_list() const { return T.complement().elements(); }

namespace {

DetExpr karlin_sum(const KarlinParams& params, int l, bool signed_prefix,
                   Relation relation) {
  params.validate();
  const int n = params.n;
  const std::vector<int> v = params.v_list();
  check_range(l, 1, static_cast<int>(v.size()), "partial-sum length");
  const IndexSet all = IndexSet::full(n);
  std::vector<Term> terms;
  for (int k = 1; k <= l; ++k) {
    const int vk = v[k - 1];
    const Scalar sign = signed_prefix ? alt_sign(l + k) : alt_sign(1 + k);
    terms.push_back(Term{sign,
                         {Minor(params.S, params.T.inserted(vk)),
                          Minor(all.erased(params.p), all.erased(vk))}});
  }
  return DetExpr(n, std::move(terms), relation).normalized();
}

}  // namespace

DetExpr karlin_partial(const KarlinParams& params, int l) {
  return karlin_sum(params, l, /*signed_prefix=*/true, Relation::GeqZero);
}

DetExpr karlin_identity(const KarlinParams& params) {
  params.validate();
  return karlin_sum(params, params.m(), /*signed_prefix=*/false,
                    Relation::EqZero);
}

void GenLaplaceParams::validate() const {
  check_range(n, 1, IndexSet::kMaxAmbient, "dimension");
  for (const IndexSet* s : {&P1, &P2, &Q1, &Q2})
    if (s->ambient() != n)
      throw std::invalid_argument("parameter sets must live in [n]");
  if (!P1.intersected(P2).empty() || !Q1.intersected(Q2).empty())
    throw std::invalid_argument("split parts must be disjoint");
  if (!P1.empty() && !P2.empty() && P1.max() >= P2.min())
    throw std::invalid_argument("P1 must precede P2");
  if (!Q1.empty() && !Q2.empty() && Q1.max() >= Q2.min())
    throw std::invalid_argument("Q1 must precede Q2");
  if (P().empty() || Q().empty())
    throw std::invalid_argument("P and Q must be nonempty");
  if (P().size() + Q().size() != n)
    throw std::invalid_argument("|P| + |Q| must equal n");
  if (!Q1.is_subset_of(P1))
    throw HypothesisError("Q1 must be contained in P1");
  if (!P2.is_subset_of(Q2))
    throw HypothesisError("P2 must be contained in Q2");
}

IndexSet gen_laplace_window(int n, int d, int l) {
  check_range(d, 1, n - 1, "d");
  check_range(l, 0, d, "window index");
  return IndexSet::interval(n - d, n, n).erased(n - d + l);
}

DetExpr gen_laplace_fluct(const GenLaplaceParams& params, int l) {
  params.validate();
  const int n = params.n;
  const int d = params.d();
  check_range(l, 0, d, "partial-sum length");
  const IndexSet P = params.P();
  const IndexSet Q = params.Q();
  std::vector<Term> terms;
  for (int k = 0; k <= l; ++k) {
    const IndexSet window = gen_laplace_window(n, d, k);
    terms.push_back(Term{alt_sign(l + k),
                         {Minor(P, window), Minor(Q, window.complement())}});
  }
  return DetExpr(n, std::move(terms), Relation::GeqZero).normalized();
}

void BJParams::validate() const {
  check_range(n, 1, IndexSet::kMaxAmbient, "dimension");
  if (lambda.empty() || lambda.size() != mu.size())
    throw std::invalid_argument("shapes must be nonempty and of equal length");
  auto check_shape = [&](const std::vector<int>& shape, const char* name) {
    int sum = 0;
    for (std::size_t k = 0; k < shape.size(); ++k) {
      if (shape[k] < 0)
        throw std::invalid_argument(std::string(name) + " must be nonnegative");
      if (k > 0 && shape[k] > shape[k - 1])
        throw std::invalid_argument(std::string(name) + " must be nonincreasing");
      sum += shape[k];
    }
    if (sum != n)
      throw std::invalid_argument(std::string(name) + " must sum to n");
  };
  check_shape(lambda, "lambda");
  check_shape(mu, "mu");
  int lam_prefix = 0, mu_prefix = 0;
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    lam_prefix += lambda[k];
    mu_prefix += mu[k];
    if (lam_prefix > mu_prefix)
      throw HypothesisError("mu's prefix sums must dominate lambda's");
  }
}

namespace {

Scalar factorial_product(const std::vector<int>& shape) {
  BigInt out(1);
  for (int part : shape)
    for (int i = 2; i <= part; ++i) out *= i;
  return Scalar(out);
}

// Ordered partitions of [n] into blocks of the given sizes, blocks emitted in
// ascending mask order per position for determinism.
void for_each_ordered_partition(
    int n, const std::vector<int>& sizes,
    const std::function<void(const std::vector<IndexSet>&)>& fn) {
  std::vector<IndexSet> blocks;
  std::function<void(std::size_t, std::uint64_t)> rec =
      [&](std::size_t k, std::uint64_t remaining) {
        if (k == sizes.size()) {
          fn(blocks);
          return;
        }
        for (std::uint64_t m = 0;; m = (m - remaining) & remaining) {
          if (std::popcount(m) == sizes[k]) {
            blocks.push_back(IndexSet::from_mask(m, n));
            rec(k + 1, remaining & ~m);
            blocks.pop_back();
          }
          if (m == remaining) break;
        }
      };
  const std::uint64_t full =
      n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  rec(0, full);
}

DetExpr barrett_johnson_impl(const BJParams& params, int u, int v,
                             bool exclude_pair) {
  params.validate();
  if (exclude_pair) {
    validate_op_pair(params.n, u, v);
    if (u == v) throw std::invalid_argument("u and v must be consecutive");
  }
  const int n = params.n;
  std::vector<Term> terms;
  auto emit_side = [&](const std::vector<int>& shape, const Scalar& coeff) {
    for_each_ordered_partition(n, shape, [&](const std::vector<IndexSet>& blocks) {
      if (exclude_pair)
        for (const IndexSet& b : blocks)
          if (b.contains(u) && b.contains(v)) return;
      Term t;
      t.coeff = coeff;
      for (const IndexSet& b : blocks) t.minors.push_back(Minor(b, b));
      terms.push_back(std::move(t));
    });
  };
  emit_side(params.lambda, factorial_product(params.lambda));
  emit_side(params.mu, -factorial_product(params.mu));
  return DetExpr(n, std::move(terms), Relation::GeqZero).normalized();
}

}  // namespace

DetExpr barrett_johnson(const BJParams& params) {
  return barrett_johnson_impl(params, 0, 0, /*exclude_pair=*/false);
}

DetExpr barrett_johnson_shifted(const BJParams& params, int u, int v) {
  return barrett_johnson_impl(params, u, v, /*exclude_pair=*/true);
}

}  // namespace tnineq
