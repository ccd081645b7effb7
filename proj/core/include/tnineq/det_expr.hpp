#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tnineq/index_set.hpp"
#include "tnineq/rational.hpp"

namespace tnineq {

/// det A(rows | cols): both index sets in increasing order, no cofactor sign.
/// Empty rows/cols denote the scalar 1.
struct Minor {
  IndexSet rows;
  IndexSet cols;

  Minor() = default;
  Minor(IndexSet r, IndexSet c);

  friend bool operator==(const Minor&, const Minor&) = default;
};

/// coeff * product of minors. Stored coefficients are nonzero.
struct Term {
  Scalar coeff;
  std::vector<Minor> minors;

  friend bool operator==(const Term&, const Term&) = default;
};

enum class Relation { GeqZero, EqZero, Unasserted };

/// A signed linear combination of products of minors over a fixed ambient
/// dimension, optionally asserted as ">= 0" or "= 0" over all TN matrices.
/// Inequalities "LHS <= RHS" are stored in the canonical form RHS - LHS >= 0.
class DetExpr {
 public:
  DetExpr() = default;
  DetExpr(int ambient, std::vector<Term> terms, Relation relation);

  int ambient() const { return ambient_; }
  const std::vector<Term>& terms() const { return terms_; }
  Relation relation() const { return relation_; }
  bool is_zero() const { return terms_.empty(); }

  DetExpr with_relation(Relation r) const;

  /// Merges terms whose minor multisets agree and drops zero coefficients.
  /// First-seen term order and in-term minor order are preserved.
  DetExpr normalized() const;

  /// Multiset-of-terms equality of the normalized forms.
  bool same_expression(const DetExpr& other) const;

  /// Stable text form of the normalized expression; usable as a map key.
  std::string key() const;

  std::string to_string() const;

 private:
  int ambient_ = 0;
  std::vector<Term> terms_;
  Relation relation_ = Relation::Unasserted;
};

enum class Axis { Row, Col };

/// A set row/column operation: shifts u to v in every row (resp. column)
/// index set where possible, then keeps only the product terms in which the
/// maximal number of shifts occurred. u == v is the identity.
struct OpSpec {
  Axis axis = Axis::Row;
  int u = 1;
  int v = 1;

  friend bool operator==(const OpSpec&, const OpSpec&) = default;
  std::string to_string() const;
};

struct OpApplicationReport {
  std::vector<int> shift_counts;       // per input term
  int max_count = 0;
  std::vector<std::size_t> survivors;  // input-term indices attaining max
};

std::pair<DetExpr, OpApplicationReport> apply_op(const DetExpr& e,
                                                 const OpSpec& op);

/// Left-to-right composition of ops.
DetExpr apply_sequence(const DetExpr& e, std::span<const OpSpec> ops);

/// The formal inverse: reverse order, each pair swapped.
std::vector<OpSpec> inverse_sequence(std::span<const OpSpec> ops);

/// True iff the asserted ">= 0" expression has at least one term and every
/// coefficient is negative. Such expressions fail on any totally positive
/// matrix, so the assertion cannot hold over TN matrices.
bool is_certifiably_false(const DetExpr& e);

}  // namespace tnineq
