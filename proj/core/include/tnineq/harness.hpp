#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tnineq/det_expr.hpp"
#include "tnineq/matrix.hpp"
#include "tnineq/multiplicative.hpp"
#include "tnineq/planar.hpp"

namespace tnineq {

struct VerifyConfig {
  int n = 0;
  int samples = 1;
  int weight_bound = 1;
  std::uint64_t seed = 0;
  bool nonsingular_only = false;  // when set, factor weights are drawn from
                                  // {1,...,weight_bound} (totally positive
                                  // samples); diagonals are always positive
};

struct Violation {
  BidiagFactorization factorization;  // exact reproducer
  Scalar value;
  int sample_index = 0;
};

struct VerifyReport {
  int checked = 0;
  std::vector<Violation> violations;
  std::optional<Scalar> min_value_seen;
  std::optional<Scalar> max_value_seen;

  bool ok() const { return violations.empty(); }
};

/// Samples factorizations deterministically from cfg.seed, composes them and
/// evaluates the expression exactly, recording each violated assertion with
/// its reproducer factorization. Sampling cannot prove a ">= 0" assertion;
/// it can only fail to refute it.
VerifyReport verify(const DetExpr& e, const VerifyConfig& cfg);

struct SweepConfig {
  int sequences = 10;
  int max_length = 4;
  std::uint64_t seed = 0;
};

/// Applies randomly drawn valid operation sequences to the expression and
/// verifies each result. Any violation here indicates an implementation bug,
/// not a failed inequality.
VerifyReport soundness_sweep(const DetExpr& e, const SweepConfig& sweep,
                             const VerifyConfig& cfg);

/// Triple-route agreement on every (I, J) pair: fraction-free elimination,
/// cofactor expansion, and vertex-disjoint path sums. Refuses n > 5.
bool oracle_compare(const BidiagFactorization& f);

/// One escalation stage: integer weights in {0,...,weight_bound} divided by
/// the (exact) denominator. Integer stages come first; refined stages reach
/// violation regions that the integer lattice misses entirely (e.g. ratios
/// of consecutive-column entries strictly between 0 and 1).
struct HuntStage {
  int weight_bound = 1;
  int denominator = 1;
};

inline const std::vector<HuntStage> kEscalationSchedule = {
    {1, 1}, {3, 1}, {10, 1}, {3, 2}, {10, 2}, {10, 4}};

/// The integer-weight sample with every elementary factor weight divided by
/// the denominator (diagonal entries unchanged).
BidiagFactorization sample_scaled_factorization(int n, std::uint64_t seed,
                                                int weight_bound,
                                                int denominator);

/// Hunts for a sampled TN matrix violating the asserted relation, escalating
/// through the given stages. Returns the first violation found.
std::optional<Violation> find_counterexample(
    const DetExpr& e, int samples_per_stage, std::uint64_t seed,
    const std::vector<HuntStage>& schedule = kEscalationSchedule);

/// All structurally valid queries for the given dimension (nonempty sets,
/// matching minor shapes, |P1|+|P2| = |I1|+|I2| = n).
std::vector<SmallestMultQuery> enumerate_smallest_queries(int n);

/// Operation sequence carrying the row pair (P, Q) onto (X, Y) for X a
/// subset of Y with |X| = |P| and |Y| = |Q|: a downward compaction to
/// ([1,|P|], [1,|Q|]) followed by order-preserving upward placements. Valid
/// for expressions whose terms all share the row pair (P, Q).
std::vector<OpSpec> nested_pair_ops(int n, const IndexSet& P, const IndexSet& Q,
                                    const IndexSet& X, const IndexSet& Y);

}  // namespace tnineq
