#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tnineq/det_expr.hpp"
#include "tnineq/index_set.hpp"

namespace tnineq {

/// Raised when a query falls outside the decided class (|P1|+|P2| != n).
struct QueryScopeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The asserted inequality
///   det A(P1|Q1) det A(P2|Q2) <= det A(I1|J1) det A(I2|J2)
/// over all n x n TN matrices, with |P1|+|P2| = |I1|+|I2| = n.
struct SmallestMultQuery {
  int n = 0;
  IndexSet P1, P2, Q1, Q2, I1, I2, J1, J2;

  void validate() const;
  /// The reverse inequality (P-side >= I-side), as a query in canonical form.
  SmallestMultQuery swapped_sides() const;
  /// Rows and columns exchanged (the transposed-matrix inequality).
  SmallestMultQuery transposed() const;

  friend bool operator==(const SmallestMultQuery&,
                         const SmallestMultQuery&) = default;
};

/// The 2n principal-minor encoding:
///   R1 = P1 u (2n+1-Q2), R2 = P2 u (2n+1-Q1),
///   K1 = I1 u (2n+1-J2), K2 = I2 u (2n+1-J1), M = R1 symm-diff R2.
struct PrincipalForm {
  int ambient = 0;  // 2n
  IndexSet R1, R2, K1, K2, M;

  /// The equivalent principal-minor query over [2n].
  SmallestMultQuery as_query() const;
};

PrincipalForm to_principal_form(const SmallestMultQuery& q);

struct Verdict {
  bool holds = false;

  // FAILS evidence; exactly one of these is populated.
  bool multiset_mismatch = false;
  std::optional<std::vector<int>> violating_window;
  std::optional<std::vector<OpSpec>> violating_ops;

  // HOLDS transcript.
  int windows_checked = 0;
  std::size_t states_explored = 0;
};

/// Canonical expression of the query: I-side minus P-side >= 0.
DetExpr canonical_expr(const SmallestMultQuery& q);

/// Deterministic operation order: ROW before COL; within an axis ascending u
/// with (u, u-1) before (u, u+1).
std::vector<OpSpec> canonical_ops(int n);

/// Decides the query by the even-contiguous-window criterion on the
/// principal form: HOLDS iff the R- and K-multisets agree and every even
/// contiguous window S of M satisfies
///   max(|S n R1|, |S n R2|) >= max(|S n K1|, |S n K2|).
/// Windows are scanned by length, then by start; the first violation is the
/// witness.
Verdict decide(const SmallestMultQuery& q);

inline constexpr std::size_t kDefaultStateBudget = std::size_t{1} << 20;

/// Decides the query by exhausting the reachability graph of the coupled
/// state ((R1,R2),(K1,K2)) under simultaneous set shifts, where a transition
/// is taken only when it moves the R-pair: FAILS iff some reachable state
/// admits a shift that moves the R-pair while fixing the K-pair. Equivalent
/// to decide(); used as its independent cross-check.
Verdict decide_via_setops(const SmallestMultQuery& q,
                          std::size_t state_budget = kDefaultStateBudget);

/// Breadth-first search for an operation sequence whose application to the
/// expression is certifiably false. Expands only ops that change the
/// expression; sound but not complete. Returns the first witness in
/// canonical order, or nullopt within the depth bound.
std::optional<std::vector<OpSpec>> falsify_search(
    const DetExpr& e, int max_depth,
    std::size_t state_budget = kDefaultStateBudget);

std::optional<std::vector<OpSpec>> falsify_search(const SmallestMultQuery& q,
                                                  int max_depth);

struct ComplementaryReduction {
  SmallestMultQuery complementary;  // P2 = P1^c, Q2 = Q1^c, etc.
  std::vector<OpSpec> row_ops;
  std::vector<OpSpec> col_ops;
};

/// For a holding query, produces the complementary ancestor inequality
/// together with row and column operation sequences whose application
/// (columns first, then rows) to the ancestor reproduces the query's
/// inequality. Iteratively eliminates common indices: pull the least
/// duplicated index to position 1, open a gap at 2, split the pair, and
/// record the inverse operations.
ComplementaryReduction reduce_to_complementary(const SmallestMultQuery& q);

}  // namespace tnineq
