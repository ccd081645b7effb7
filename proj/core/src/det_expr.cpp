#include "tnineq/det_expr.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tnineq {

Minor::Minor(IndexSet r, IndexSet c) : rows(std::move(r)), cols(std::move(c)) {
  if (rows.ambient() != cols.ambient())
    throw std::invalid_argument("minor row/column ambient mismatch");
  if (rows.size() != cols.size())
    throw std::invalid_argument("minor must be square: |rows| != |cols|");
}

namespace {

// Order-insensitive term signature: sorted (rows, cols) mask pairs.
using TermKey = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

TermKey term_key(const Term& t) {
  TermKey key;
  key.reserve(t.minors.size());
  for (const Minor& m : t.minors) key.emplace_back(m.rows.mask(), m.cols.mask());
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace

DetExpr::DetExpr(int ambient, std::vector<Term> terms, Relation relation)
    : ambient_(ambient), terms_(std::move(terms)), relation_(relation) {
  if (ambient < 0 || ambient > IndexSet::kMaxAmbient)
    throw std::invalid_argument("expression ambient out of range");
  for (const Term& t : terms_) {
    if (t.minors.empty())
      throw std::invalid_argument("term must contain at least one minor");
    for (const Minor& m : t.minors) {
      if (m.rows.ambient() != ambient)
        throw std::invalid_argument("term minor ambient differs from expression");
    }
  }
}

DetExpr DetExpr::with_relation(Relation r) const {
  return DetExpr(ambient_, terms_, r);
}

DetExpr DetExpr::normalized() const {
  std::vector<Term> merged;
  std::map<TermKey, std::size_t> slot;
  for (const Term& t : terms_) {
    if (t.coeff == 0) continue;
    const TermKey key = term_key(t);
    auto it = slot.find(key);
    if (it == slot.end()) {
      slot.emplace(key, merged.size());
      merged.push_back(t);
    } else {
      merged[it->second].coeff += t.coeff;
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
  return DetExpr(ambient_, std::move(merged), relation_);
}

bool DetExpr::same_expression(const DetExpr& other) const {
  if (ambient_ != other.ambient_) return false;
  const DetExpr a = normalized();
  const DetExpr b = other.normalized();
  std::map<TermKey, Scalar> coeffs;
  for (const Term& t : a.terms()) coeffs[term_key(t)] += t.coeff;
  for (const Term& t : b.terms()) coeffs[term_key(t)] -= t.coeff;
  for (const auto& [key, c] : coeffs)
    if (c != 0) return false;
  return true;
}

std::string DetExpr::key() const {
  const DetExpr n = normalized();
  std::map<TermKey, Scalar> coeffs;
  for (const Term& t : n.terms()) coeffs[term_key(t)] += t.coeff;
  std::string out = std::to_string(ambient_) + ";";
  for (const auto& [key, c] : coeffs) {
    out += scalar_to_string(c) + ":";
    for (const auto& [rm, cm] : key)
      out += std::to_string(rm) + "|" + std::to_string(cm) + ",";
    out += ";";
  }
  return out;
}

std::string DetExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : terms_) {
    const bool neg = t.coeff < 0;
    Scalar mag = neg ? Scalar(-t.coeff) : t.coeff;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (mag != 1) out += scalar_to_string(mag) + "*";
    for (const Minor& m : t.minors)
      out += "det(" + m.rows.to_string() + "|" + m.cols.to_string() + ")";
  }
  switch (relation_) {
    case Relation::GeqZero: out += " >= 0"; break;
    case Relation::EqZero: out += " = 0"; break;
    case Relation::Unasserted: break;
  }
  return out;
}

std::string OpSpec::to_string() const {
  return std::string(axis == Axis::Row ? "R" : "C") + "(" + std::to_string(u) +
         "," + std::to_string(v) + ")";
}

std::pair<DetExpr, OpApplicationReport> apply_op(const DetExpr& e,
                                                 const OpSpec& op) {
  validate_op_pair(e.ambient(), op.u, op.v);

  OpApplicationReport report;
  report.shift_counts.assign(e.terms().size(), 0);
  if (op.u == op.v) {
    for (std::size_t i = 0; i < e.terms().size(); ++i)
      report.survivors.push_back(i);
    return {e, report};
  }

  for (std::size_t i = 0; i < e.terms().size(); ++i) {
    int count = 0;
    for (const Minor& m : e.terms()[i].minors) {
      const IndexSet& s = (op.axis == Axis::Row) ? m.rows : m.cols;
      if (s.contains(op.u) && !s.contains(op.v)) ++count;
    }
    report.shift_counts[i] = count;
  }
  report.max_count = 0;
  for (int c : report.shift_counts) report.max_count = std::max(report.max_count, c);

  std::vector<Term> out;
  for (std::size_t i = 0; i < e.terms().size(); ++i) {
    if (report.shift_counts[i] != report.max_count) continue;
    report.survivors.push_back(i);
    Term t = e.terms()[i];
    for (Minor& m : t.minors) {
      if (op.axis == Axis::Row)
        m.rows = shift_set(m.rows, op.u, op.v);
      else
        m.cols = shift_set(m.cols, op.u, op.v);
    }
    out.push_back(std::move(t));
  }
  return {DetExpr(e.ambient(), std::move(out), e.relation()).normalized(),
          report};
}

DetExpr apply_sequence(const DetExpr& e, std::span<const OpSpec> ops) {
  DetExpr cur = e;
  for (const OpSpec& op : ops) cur = apply_op(cur, op).first;
  return cur;
}

std::vector<OpSpec> inverse_sequence(std::span<const OpSpec> ops) {
  std::vector<OpSpec> out;
  out.reserve(ops.size());
  for (auto it = ops.rbegin(); it != ops.rend(); ++it)
    out.push_back(OpSpec{it->axis, it->v, it->u});
  return out;
}

bool is_certifiably_false(const DetExpr& e) {
  if (e.relation() != Relation::GeqZero)
    throw std::invalid_argument(
        "certifiable-falseness test requires an asserted >= 0 expression");
  if (e.terms().empty()) return false;
  for (const Term& t : e.terms())
    if (t.coeff >= 0) return false;
  return true;
}

}  // namespace tnineq
