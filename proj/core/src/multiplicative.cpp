#include "tnineq/multiplicative.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace tnineq {

void SmallestMultQuery::validate() const {
  if (n < 1 || 2 * n > IndexSet::kMaxAmbient)
    throw std::invalid_argument("query dimension out of range");
  for (const IndexSet* s : {&P1, &P2, &Q1, &Q2, &I1, &I2, &J1, &J2}) {
    if (s->ambient() != n)
      throw std::invalid_argument("query sets must live in [n]");
    if (s->empty()) throw std::invalid_argument("query sets must be nonempty");
  }
  if (P1.size() != Q1.size() || P2.size() != Q2.size() ||
      I1.size() != J1.size() || I2.size() != J2.size())
    throw std::invalid_argument("minor shapes require |P_k|=|Q_k|, |I_k|=|J_k|");
  if (P1.size() + P2.size() != n || I1.size() + I2.size() != n)
    throw QueryScopeError(
        "the decision procedure covers only |P1|+|P2| = |I1|+|I2| = n");
}

SmallestMultQuery SmallestMultQuery::swapped_sides() const {
  return SmallestMultQuery{n, I1, I2, J1, J2, P1, P2, Q1, Q2};
}

SmallestMultQuery SmallestMultQuery::transposed() const {
  return SmallestMultQuery{n, Q1, Q2, P1, P2, J1, J2, I1, I2};
}

SmallestMultQuery PrincipalForm::as_query() const {
  const int n2 = ambient;
  if (n2 % 2 != 0) throw std::logic_error("principal ambient must be even");
  return SmallestMultQuery{n2, R1, R2, R1, R2, K1, K2, K1, K2};
}

PrincipalForm to_principal_form(const SmallestMultQuery& q) {
  q.validate();
  const int n2 = 2 * q.n;
  auto lift = [&](const IndexSet& s) { return s.embedded(n2); };
  auto reflect = [&](const IndexSet& s) { return s.embedded(n2).reflected(); };
  PrincipalForm pf;
  pf.ambient = n2;
  pf.R1 = lift(q.P1).united(reflect(q.Q2));
  pf.R2 = lift(q.P2).united(reflect(q.Q1));
  pf.K1 = lift(q.I1).united(reflect(q.J2));
  pf.K2 = lift(q.I2).united(reflect(q.J1));
  pf.M = pf.R1.minus(pf.R2).united(pf.R2.minus(pf.R1));
  return pf;
}

DetExpr canonical_expr(const SmallestMultQuery& q) {
  q.validate();
  std::vector<Term> terms;
  terms.push_back(Term{Scalar(1), {Minor(q.I1, q.J1), Minor(q.I2, q.J2)}});
  terms.push_back(Term{Scalar(-1), {Minor(q.P1, q.Q1), Minor(q.P2, q.Q2)}});
  return DetExpr(q.n, std::move(terms), Relation::GeqZero).normalized();
}

std::vector<OpSpec> canonical_ops(int n) {
  std::vector<OpSpec> ops;
  for (Axis axis : {Axis::Row, Axis::Col}) {
    for (int u = 1; u <= n; ++u) {
      if (u - 1 >= 1) ops.push_back(OpSpec{axis, u, u - 1});
      if (u + 1 <= n) ops.push_back(OpSpec{axis, u, u + 1});
    }
  }
  return ops;
}

namespace {

bool multisets_agree(const PrincipalForm& pf) {
  return pf.R1.united(pf.R2) == pf.K1.united(pf.K2) &&
         pf.R1.intersected(pf.R2) == pf.K1.intersected(pf.K2);
}

}  // namespace

Verdict decide(const SmallestMultQuery& q) {
  const PrincipalForm pf = to_principal_form(q);
  Verdict v;
  if (!multisets_agree(pf)) {
    v.holds = false;
    v.multiset_mismatch = true;
    return v;
  }
  const std::vector<int> m = pf.M.elements();
  const int t = static_cast<int>(m.size());
  for (int len = 2; len <= t; len += 2) {
    for (int start = 0; start + len <= t; ++start) {
      std::uint64_t s_mask = 0;
      for (int i = start; i < start + len; ++i)
        s_mask |= std::uint64_t{1} << (m[i] - 1);
      ++v.windows_checked;
      const int r_max = std::max(std::popcount(s_mask & pf.R1.mask()),
                                 std::popcount(s_mask & pf.R2.mask()));
      const int k_max = std::max(std::popcount(s_mask & pf.K1.mask()),
                                 std::popcount(s_mask & pf.K2.mask()));
      if (r_max < k_max) {
        v.holds = false;
        v.violating_window =
            std::vector<int>(m.begin() + start, m.begin() + start + len);
        return v;
      }
    }
  }
  v.holds = true;
  return v;
}

namespace {

struct SetOpState {
  std::array<std::uint64_t, 4> masks;  // R1, R2, K1, K2
  friend bool operator==(const SetOpState&, const SetOpState&) = default;
};

struct SetOpStateHash {
  std::size_t operator()(const SetOpState& s) const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (std::uint64_t m : s.masks) {
      h ^= std::hash<std::uint64_t>{}(m);
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};

std::uint64_t shift_mask(std::uint64_t mask, int u, int v) {
  const std::uint64_t ub = std::uint64_t{1} << (u - 1);
  const std::uint64_t vb = std::uint64_t{1} << (v - 1);
  if ((mask & ub) && !(mask & vb)) return (mask & ~ub) | vb;
  return mask;
}

}  // namespace

Verdict decide_via_setops(const SmallestMultQuery& q, std::size_t state_budget) {
  const PrincipalForm pf = to_principal_form(q);
  Verdict v;
  if (!multisets_agree(pf)) {
    v.holds = false;
    v.multiset_mismatch = true;
    return v;
  }
  const int n2 = pf.ambient;
  const std::vector<OpSpec> ops = canonical_ops(n2);
  const std::size_t row_op_count = ops.size() / 2;  // set ops have no axis

  struct Node {
    SetOpState state;
    std::size_t parent;
    OpSpec via;
  };
  std::vector<Node> nodes;
  std::unordered_map<SetOpState, std::size_t, SetOpStateHash> seen;
  std::deque<std::size_t> frontier;

  const SetOpState root{{pf.R1.mask(), pf.R2.mask(), pf.K1.mask(), pf.K2.mask()}};
  nodes.push_back(Node{root, static_cast<std::size_t>(-1), OpSpec{}});
  seen.emplace(root, 0);
  frontier.push_back(0);

  auto witness_path = [&](std::size_t leaf, const OpSpec& last) {
    std::vector<OpSpec> path;
    for (std::size_t i = leaf; i != 0; i = nodes[i].parent)
      path.push_back(nodes[i].via);
    std::reverse(path.begin(), path.end());
    path.push_back(last);
    return path;
  };

  while (!frontier.empty()) {
    const std::size_t cur = frontier.front();
    frontier.pop_front();
    const SetOpState state = nodes[cur].state;
    for (std::size_t oi = 0; oi < row_op_count; ++oi) {
      const OpSpec& op = ops[oi];
      SetOpState next;
      for (int s = 0; s < 4; ++s)
        next.masks[s] = shift_mask(state.masks[s], op.u, op.v);
      const bool r_changed = next.masks[0] != state.masks[0] ||
                             next.masks[1] != state.masks[1];
      const bool k_changed = next.masks[2] != state.masks[2] ||
                             next.masks[3] != state.masks[3];
      if (r_changed && !k_changed) {
        v.holds = false;
        v.violating_ops = witness_path(cur, op);
        v.states_explored = nodes.size();
        return v;
      }
      // Only moves of the R-pair extend the reachable trajectories: the
      // implication constrains sequences whose every step moves that pair,
      // and such steps keep the coupled state a valid inequality.
      if (!r_changed) continue;
      if (seen.contains(next)) continue;
      if (nodes.size() >= state_budget)
        throw std::domain_error("set-op reachability exceeded the state budget");
      seen.emplace(next, nodes.size());
      frontier.push_back(nodes.size());
      nodes.push_back(Node{next, cur, op});
    }
  }
  v.holds = true;
  v.states_explored = nodes.size();
  return v;
}

std::optional<std::vector<OpSpec>> falsify_search(const DetExpr& e,
                                                  int max_depth,
                                                  std::size_t state_budget) {
  if (e.relation() != Relation::GeqZero)
    throw std::invalid_argument("falsification searches asserted >= 0 expressions");
  if (max_depth < 1) return std::nullopt;

  struct Node {
    DetExpr expr;
    std::size_t parent;
    OpSpec via;
    int depth;
  };
  std::vector<Node> nodes;
  std::unordered_set<std::string> seen;
  std::deque<std::size_t> frontier;

  const DetExpr root = e.normalized();
  nodes.push_back(Node{root, static_cast<std::size_t>(-1), OpSpec{}, 0});
  seen.insert(root.key());
  frontier.push_back(0);

  const std::vector<OpSpec> ops = canonical_ops(e.ambient());

  auto witness_path = [&](std::size_t leaf, const OpSpec& last) {
    std::vector<OpSpec> path;
    for (std::size_t i = leaf; i != 0; i = nodes[i].parent)
      path.push_back(nodes[i].via);
    std::reverse(path.begin(), path.end());
    path.push_back(last);
    return path;
  };

  while (!frontier.empty()) {
    const std::size_t cur = frontier.front();
    frontier.pop_front();
    const int depth = nodes[cur].depth;
    for (const OpSpec& op : ops) {
      auto [result, report] = apply_op(nodes[cur].expr, op);
      if (report.max_count == 0) continue;  // identity action
      if (is_certifiably_false(result)) return witness_path(cur, op);
      if (depth + 1 >= max_depth) continue;
      // A state with no negative term can never become certifiably false:
      // operations only drop terms and never change coefficient signs.
      bool has_negative = false;
      for (const Term& t : result.terms()) has_negative |= (t.coeff < 0);
      if (!has_negative) continue;
      std::string key = result.key();
      if (seen.contains(key)) continue;
      if (nodes.size() >= state_budget)
        throw std::domain_error("falsification search exceeded the state budget");
      seen.insert(std::move(key));
      frontier.push_back(nodes.size());
      nodes.push_back(Node{std::move(result), cur, op, depth + 1});
    }
  }
  return std::nullopt;
}

std::optional<std::vector<OpSpec>> falsify_search(const SmallestMultQuery& q,
                                                  int max_depth) {
  return falsify_search(canonical_expr(q), max_depth);
}

namespace {

// Shifts all four row sets simultaneously, asserting both product terms shift
// equally often (the reduction only ever chooses such operations).
void apply_balanced_shift(IndexSet& x1, IndexSet& x2, IndexSet& y1,
                          IndexSet& y2, int u, int v) {
  auto shifts = [&](const IndexSet& a, const IndexSet& b) {
    return int(a.contains(u) && !a.contains(v)) +
           int(b.contains(u) && !b.contains(v));
  };
  if (shifts(x1, x2) != shifts(y1, y2))
    throw std::logic_error("unbalanced shift during complementary reduction");
  x1 = shift_set(x1, u, v);
  x2 = shift_set(x2, u, v);
  y1 = shift_set(y1, u, v);
  y2 = shift_set(y2, u, v);
}

struct RowPhaseResult {
  IndexSet lower_first;  // the kept set of the lower side
  IndexSet upper_first;  // the kept set of the upper side
  std::vector<OpSpec> recon_ops;  // rebuild the input pair from the output
};

// One side-reduction pass: eliminates the common indices of (x1, x2) (and in
// lockstep (y1, y2)), with (c1, c2)/(d1, d2) the fixed opposite-axis sets that
// enter the principal form. Emitted ops use Axis::Row; the caller relabels.
RowPhaseResult reduce_pair(int n, IndexSet x1, IndexSet x2, IndexSet y1,
                           IndexSet y2, const IndexSet& c1, const IndexSet& c2,
                           const IndexSet& d1, const IndexSet& d2) {
  std::vector<std::vector<OpSpec>> recon_rounds;
  const int n2 = 2 * n;

  while (true) {
    const IndexSet common = x1.intersected(x2);
    const IndexSet common_y = y1.intersected(y2);
    if (common.size() != common_y.size())
      throw std::logic_error("common-index counts diverged during reduction");
    if (common.empty()) break;
    if (common.min() != common_y.min())
      throw std::logic_error("least common indices diverged during reduction");

    // Pull the least duplicated index down to position 1.
    const int u = common.min();
    std::vector<OpSpec> seq1;
    for (int t = u; t >= 2; --t) {
      seq1.push_back(OpSpec{Axis::Row, t, t - 1});
      apply_balanced_shift(x1, x2, y1, y2, t, t - 1);
    }
    if (!(x1.contains(1) && x2.contains(1) && y1.contains(1) && y2.contains(1)))
      throw std::logic_error("failed to collect the duplicated index at 1");

    // Open a gap at position 2.
    std::vector<OpSpec> seq2;
    if (x1.contains(2) || x2.contains(2)) {
      int a = 0;
      for (int t = 2; t <= n; ++t)
        if (!x1.contains(t) && !x2.contains(t)) {
          a = t;
          break;
        }
      if (a == 0) throw std::logic_error("no free slot found for the gap");
      for (int t = a; t >= 3; --t) {
        seq2.push_back(OpSpec{Axis::Row, t - 1, t});
        apply_balanced_shift(x1, x2, y1, y2, t - 1, t);
      }
    }
    if (x1.contains(2) || x2.contains(2) || y1.contains(2) || y2.contains(2))
      throw std::logic_error("failed to open a gap at 2");

    // Split the duplicated index: the term on the minority side of the
    // principal symmetric difference keeps 1, the other moves its 1 to 2.
    const IndexSet r1 = x1.embedded(n2).united(c2.embedded(n2).reflected());
    const IndexSet r2 = x2.embedded(n2).united(c1.embedded(n2).reflected());
    const IndexSet m = r1.minus(r2).united(r2.minus(r1));
    int keep_x = 1;
    int keep_y = 1;
    if (!m.empty()) {
      const int w = m.min();
      if (w <= n) {
        keep_x = x1.contains(w) ? 1 : 2;
        keep_y = y1.contains(w) ? 1 : 2;
      } else {
        const int c = n2 + 1 - w;
        keep_x = c1.contains(c) ? 1 : 2;
        keep_y = d1.contains(c) ? 1 : 2;
      }
    }
    if (keep_x == 1)
      x2 = x2.erased(1).inserted(2);
    else
      x1 = x1.erased(1).inserted(2);
    if (keep_y == 1)
      y2 = y2.erased(1).inserted(2);
    else
      y1 = y1.erased(1).inserted(2);

    std::vector<OpSpec> recon;
    recon.push_back(OpSpec{Axis::Row, 2, 1});
    for (const OpSpec& op : inverse_sequence(seq2)) recon.push_back(op);
    for (const OpSpec& op : inverse_sequence(seq1)) recon.push_back(op);
    recon_rounds.push_back(std::move(recon));
  }

  if (x2 != x1.complement() || y2 != y1.complement())
    throw std::logic_error("reduction did not reach a complementary pair");

  RowPhaseResult out;
  out.lower_first = x1;
  out.upper_first = y1;
  for (auto it = recon_rounds.rbegin(); it != recon_rounds.rend(); ++it)
    out.recon_ops.insert(out.recon_ops.end(), it->begin(), it->end());
  return out;
}

}  // namespace

ComplementaryReduction reduce_to_complementary(const SmallestMultQuery& q) {
  q.validate();
  if (!decide(q).holds)
    throw std::invalid_argument(
        "complementary reduction is defined for holding inequalities only");

  const RowPhaseResult rows =
      reduce_pair(q.n, q.P1, q.P2, q.I1, q.I2, q.Q1, q.Q2, q.J1, q.J2);
  const IndexSet P = rows.lower_first;
  const IndexSet I = rows.upper_first;

  RowPhaseResult cols = reduce_pair(q.n, q.Q1, q.Q2, q.J1, q.J2, P,
                                    P.complement(), I, I.complement());
  const IndexSet Q = cols.lower_first;
  const IndexSet J = cols.upper_first;
  for (OpSpec& op : cols.recon_ops) op.axis = Axis::Col;

  ComplementaryReduction out;
  out.complementary =
      SmallestMultQuery{q.n, P,           P.complement(), Q, Q.complement(),
                        I,   I.complement(), J,           J.complement()};
  out.complementary.validate();
  out.row_ops = rows.recon_ops;
  out.col_ops = cols.recon_ops;
  return out;
}

}  // namespace tnineq
