#include "tnineq/json_io.hpp"

#include <stdexcept>

namespace tnineq {

using nlohmann::json;

namespace {

json set_to_json(const IndexSet& s) { return json(s.elements()); }

IndexSet set_from_json(const json& j, int ambient) {
  if (!j.is_array()) throw std::invalid_argument("index set must be an array");
  std::vector<int> elems;
  for (const auto& x : j) elems.push_back(x.get<int>());
  return IndexSet(elems, ambient);
}

}  // namespace

json expr_to_json(const DetExpr& e) {
  json j;
  j["n"] = e.ambient();
  switch (e.relation()) {
    case Relation::GeqZero: j["relation"] = "geq0"; break;
    case Relation::EqZero: j["relation"] = "eq0"; break;
    case Relation::Unasserted: j["relation"] = "none"; break;
  }
  json terms = json::array();
  for (const Term& t : e.terms()) {
    json jt;
    jt["coeff"] = scalar_to_string(t.coeff);
    json minors = json::array();
    for (const Minor& m : t.minors) {
      json jm;
      jm["rows"] = set_to_json(m.rows);
      jm["cols"] = set_to_json(m.cols);
      minors.push_back(std::move(jm));
    }
    jt["minors"] = std::move(minors);
    terms.push_back(std::move(jt));
  }
  j["terms"] = std::move(terms);
  return j;
}

DetExpr expr_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  Relation relation = Relation::Unasserted;
  if (j.contains("relation")) {
    const std::string r = j.at("relation").get<std::string>();
    if (r == "geq0")
      relation = Relation::GeqZero;
    else if (r == "eq0")
      relation = Relation::EqZero;
    else if (r == "none")
      relation = Relation::Unasserted;
    else
      throw std::invalid_argument("unknown relation: " + r);
  }
  std::vector<Term> terms;
  for (const auto& jt : j.at("terms")) {
    Term t;
    t.coeff = scalar_from_string(jt.at("coeff").get<std::string>());
    for (const auto& jm : jt.at("minors"))
      t.minors.push_back(
          Minor(set_from_json(jm.at("rows"), n), set_from_json(jm.at("cols"), n)));
    terms.push_back(std::move(t));
  }
  return DetExpr(n, std::move(terms), relation).normalized();
}

json factorization_to_json(const BidiagFactorization& f) {
  json j;
  j["n"] = f.n();
  json factors = json::array();
  for (const BidiagFactor& factor : f.factors()) {
    json jf;
    switch (factor.kind) {
      case BidiagFactor::Kind::Lower:
        jf["kind"] = "lower";
        jf["k"] = factor.k;
        jf["w"] = scalar_to_string(factor.weight);
        break;
      case BidiagFactor::Kind::Upper:
        jf["kind"] = "upper";
        jf["k"] = factor.k;
        jf["w"] = scalar_to_string(factor.weight);
        break;
      case BidiagFactor::Kind::Diag: {
        jf["kind"] = "diag";
        json d = json::array();
        for (const Scalar& x : factor.diag) d.push_back(scalar_to_string(x));
        jf["d"] = std::move(d);
        break;
      }
    }
    factors.push_back(std::move(jf));
  }
  j["factors"] = std::move(factors);
  return j;
}

BidiagFactorization factorization_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  std::vector<BidiagFactor> factors;
  for (const auto& jf : j.at("factors")) {
    const std::string kind = jf.at("kind").get<std::string>();
    if (kind == "lower" || kind == "upper") {
      const int k = jf.at("k").get<int>();
      const Scalar w = scalar_from_string(jf.at("w").get<std::string>());
      factors.push_back(kind == "lower" ? BidiagFactor::lower(k, w)
                                        : BidiagFactor::upper(k, w));
    } else if (kind == "diag") {
      std::vector<Scalar> d;
      for (const auto& x : jf.at("d"))
        d.push_back(scalar_from_string(x.get<std::string>()));
      factors.push_back(BidiagFactor::diagonal(
          std::move(d)));
    } else {
      throw std::invalid_argument("unknown factor kind: " + kind);
    }
  }
  return BidiagFactorization(n, std::move(factors));
}

json matrix_to_json(const Matrix& m) {
  json j;
  j["n"] = m.n();
  json entries = json::array();
  for (const Scalar& x : m.entries()) entries.push_back(scalar_to_string(x));
  j["entries"] = std::move(entries);
  return j;
}

Matrix matrix_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  std::vector<Scalar> entries;
  for (const auto& x : j.at("entries"))
    entries.push_back(scalar_from_string(x.get<std::string>()));
  return Matrix(n, std::move(entries));
}

json query_to_json(const SmallestMultQuery& q) {
  json j;
  j["n"] = q.n;
  j["P1"] = set_to_json(q.P1);
  j["P2"] = set_to_json(q.P2);
  j["Q1"] = set_to_json(q.Q1);
  j["Q2"] = set_to_json(q.Q2);
  j["I1"] = set_to_json(q.I1);
  j["I2"] = set_to_json(q.I2);
  j["J1"] = set_to_json(q.J1);
  j["J2"] = set_to_json(q.J2);
  j["direction"] = "le";
  return j;
}

SmallestMultQuery query_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  SmallestMultQuery q{n,
                      set_from_json(j.at("P1"), n),
                      set_from_json(j.at("P2"), n),
                      set_from_json(j.at("Q1"), n),
                      set_from_json(j.at("Q2"), n),
                      set_from_json(j.at("I1"), n),
                      set_from_json(j.at("I2"), n),
                      set_from_json(j.at("J1"), n),
                      set_from_json(j.at("J2"), n)};
  std::string direction = "le";
  if (j.contains("direction")) direction = j.at("direction").get<std::string>();
  if (direction == "ge") q = q.swapped_sides();
  else if (direction != "le")
    throw std::invalid_argument("direction must be \"le\" or \"ge\"");
  q.validate();
  return q;
}

json op_to_json(const OpSpec& op) {
  json j;
  j["axis"] = op.axis == Axis::Row ? "row" : "col";
  j["u"] = op.u;
  j["v"] = op.v;
  return j;
}

OpSpec op_from_json(const json& j) {
  const std::string axis = j.at("axis").get<std::string>();
  if (axis != "row" && axis != "col")
    throw std::invalid_argument("axis must be \"row\" or \"col\"");
  return OpSpec{axis == "row" ? Axis::Row : Axis::Col, j.at("u").get<int>(),
                j.at("v").get<int>()};
}

json ops_to_json(std::span<const OpSpec> ops) {
  json arr = json::array();
  for (const OpSpec& op : ops) arr.push_back(op_to_json(op));
  return arr;
}

std::vector<OpSpec> parse_op_string(const std::string& text) {
  std::vector<OpSpec> ops;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(';', pos);
    if (end == std::string::npos) end = text.size();
    std::string item = text.substr(pos, end - pos);
    while (!item.empty() && item.front() == ' ') item.erase(item.begin());
    while (!item.empty() && item.back() == ' ') item.pop_back();
    if (!item.empty()) {
      if (item.size() < 4 || (item[0] != 'R' && item[0] != 'C'))
        throw std::invalid_argument("bad op item: " + item);
      const std::size_t comma = item.find(',');
      if (comma == std::string::npos)
        throw std::invalid_argument("bad op item: " + item);
      const int u = std::stoi(item.substr(1, comma - 1));
      const int v = std::stoi(item.substr(comma + 1));
      ops.push_back(OpSpec{item[0] == 'R' ? Axis::Row : Axis::Col, u, v});
    }
    pos = end + 1;
  }
  return ops;
}

json verdict_to_json(const Verdict& v) {
  json j;
  j["verdict"] = v.holds ? "holds" : "fails";
  if (!v.holds) {
    json witness;
    if (v.multiset_mismatch) {
      witness["multiset_mismatch"] = true;
    } else if (v.violating_window) {
      witness["S"] = *v.violating_window;
    } else if (v.violating_ops) {
      witness["ops"] = ops_to_json(*v.violating_ops);
    }
    j["witness"] = std::move(witness);
  } else {
    json transcript;
    transcript["windows_checked"] = v.windows_checked;
    transcript["states_explored"] = v.states_explored;
    j["transcript"] = std::move(transcript);
  }
  return j;
}

json report_to_json(const VerifyReport& r) {
  json j;
  j["checked"] = r.checked;
  if (r.min_value_seen) j["min_value_seen"] = scalar_to_string(*r.min_value_seen);
  if (r.max_value_seen) j["max_value_seen"] = scalar_to_string(*r.max_value_seen);
  json violations = json::array();
  for (const Violation& v : r.violations) {
    json jv;
    jv["factorization"] = factorization_to_json(v.factorization);
    jv["value"] = scalar_to_string(v.value);
    jv["sample_index"] = v.sample_index;
    violations.push_back(std::move(jv));
  }
  j["violations"] = std::move(violations);
  return j;
}

}  // namespace tnineq
