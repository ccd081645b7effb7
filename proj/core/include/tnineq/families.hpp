#pragma once

#include <stdexcept>
#include <vector>

#include "tnineq/det_expr.hpp"
#include "tnineq/index_set.hpp"

namespace tnineq {

/// Raised when a generator's structural hypothesis on its parameters fails
/// (as opposed to a plain range error).
struct HypothesisError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Fluctuating partial sums of the Laplace expansion along the first row,
/// centered at det A:
///   (-1)^{1+l} [ sum_{k=1..l} (-1)^{1+k} det A({1}|{k}) det A([n]\{1}|[n]\{k})
///                - det A ]  >= 0.
DetExpr gantmacher_krein(int n, int l);

/// Row-i analogue via the entrywise product with the transposed adjugate:
/// partial row sums of A o (adj A)^T - (det A) I, sign-corrected.
DetExpr laplace_refined_diag(int n, int i, int l);

/// Mixed row-i / column-j partial Laplace sums, i != j:
///   (-1)^{j+l} sum_{k=1..l} (-1)^{j+k} det A({i}|{k}) det A([n]\{j}|[n]\{k}) >= 0.
DetExpr laplace_refined_offdiag(int n, int i, int j, int l);

struct KarlinParams {
  int n = 0;
  IndexSet T;  // subset of [n]
  IndexSet S;  // subset of [n] \ {p}, |S| = |T| + 1
  int p = 0;

  void validate() const;
  /// V = [n] \ T, sorted ascending.
  std::vector<int> v_list() const;
  int m() const { return n - T.size(); }
};

/// (-1)^{1+l} sum_{k=1..l} (-1)^{1+k} det A(S|T u {v_k})
///                                    det A([n]\{p}|[n]\{v_k}) >= 0.
DetExpr karlin_partial(const KarlinParams& params, int l);

/// The full alternating sum, which vanishes on every real square matrix.
DetExpr karlin_identity(const KarlinParams& params);

struct GenLaplaceParams {
  int n = 0;
  IndexSet P1, P2;  // P = P1 u P2, disjoint, P1 < P2
  IndexSet Q1, Q2;  // Q = Q1 u Q2, disjoint, Q1 < Q2

  void validate() const;  // throws HypothesisError on Q1 !<= P1 or P2 !<= Q2
  IndexSet P() const { return P1.united(P2); }
  IndexSet Q() const { return Q1.united(Q2); }
  int d() const { return P().size(); }
};

/// Column window J_{d,l} = [n-d, n] \ {n-d+l}.
IndexSet gen_laplace_window(int n, int d, int l);

/// (-1)^{1+l} sum_{k=0..l} (-1)^{1+k} det A(P|J_{dk}) det A(Q|[n]\J_{dk}) >= 0.
DetExpr gen_laplace_fluct(const GenLaplaceParams& params, int l);

struct BJParams {
  int n = 0;
  std::vector<int> lambda;  // nonincreasing, nonnegative, sums to n
  std::vector<int> mu;      // same, with prefix sums dominating lambda's

  void validate() const;
  int r() const { return static_cast<int>(lambda.size()); }
};

/// lambda!-weighted sum over ordered partitions of [n] with block sizes
/// lambda of the product of principal minors, minus the mu side, >= 0.
/// Size-zero blocks contribute an empty minor (= 1) and a 0! = 1 factor.
DetExpr barrett_johnson(const BJParams& params);

/// Same, with both partition sums restricted to partitions in which no block
/// contains both u and v (u, v consecutive).
DetExpr barrett_johnson_shifted(const BJParams& params, int u, int v);

}  // namespace tnineq
