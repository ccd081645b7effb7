// tn-ineq: represent, derive, decide, falsify and verify determinantal
// inequalities over totally nonnegative matrices with exact arithmetic.
//
// Exit codes: 0 holds/verified, 1 falsified/failed, 2 inconclusive,
// 64 bad input.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tnineq/families.hpp"
#include "tnineq/harness.hpp"
#include "tnineq/json_io.hpp"
#include "tnineq/multiplicative.hpp"

namespace {

using nlohmann::json;
using namespace tnineq;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitBadInput = 64;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write " + out_path);
    out << j.dump(2) << "\n";
  }
}

struct FamilyArgs {
  std::string name;
  int n = 0, l = 0, i = 0, j = 0, u = 0, v = 0;
  std::string params_path;
};

DetExpr make_family(const FamilyArgs& a) {
  auto params = [&]() {
    if (a.params_path.empty())
      throw std::invalid_argument("--params required for family " + a.name);
    return load_json(a.params_path);
  };
  if (a.name == "gk") return gantmacher_krein(a.n, a.l);
  if (a.name == "laplace-diag") return laplace_refined_diag(a.n, a.i, a.l);
  if (a.name == "laplace-offdiag")
    return laplace_refined_offdiag(a.n, a.i, a.j, a.l);
  if (a.name == "karlin" || a.name == "karlin-id") {
    const json p = params();
    const int n = p.at("n").get<int>();
    KarlinParams kp;
    kp.n = n;
    kp.T = IndexSet(p.at("T").get<std::vector<int>>(), n);
    kp.S = IndexSet(p.at("S").get<std::vector<int>>(), n);
    kp.p = p.at("p").get<int>();
    return a.name == "karlin" ? karlin_partial(kp, a.l) : karlin_identity(kp);
  }
  if (a.name == "genlaplace") {
    const json p = params();
    const int n = p.at("n").get<int>();
    GenLaplaceParams gp;
    gp.n = n;
    gp.P1 = IndexSet(p.at("P1").get<std::vector<int>>(), n);
    gp.P2 = IndexSet(p.at("P2").get<std::vector<int>>(), n);
    gp.Q1 = IndexSet(p.at("Q1").get<std::vector<int>>(), n);
    gp.Q2 = IndexSet(p.at("Q2").get<std::vector<int>>(), n);
    return gen_laplace_fluct(gp, a.l);
  }
  if (a.name == "bj" || a.name == "bj-shifted") {
    const json p = params();
    BJParams bp;
    bp.n = p.at("n").get<int>();
    bp.lambda = p.at("lambda").get<std::vector<int>>();
    bp.mu = p.at("mu").get<std::vector<int>>();
    return a.name == "bj" ? barrett_johnson(bp)
                          : barrett_johnson_shifted(bp, a.u, a.v);
  }
  throw std::invalid_argument("unknown family: " + a.name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"determinantal inequalities for totally nonnegative matrices"};
  app.require_subcommand(1);

  FamilyArgs fam;
  std::string expr_path, query_path, out_path, ops_text;
  int samples = 200, weight_bound = 3, max_depth = 6, trials = 100;
  std::uint64_t seed = 0;
  bool nonsingular_only = false;

  auto add_family_flags = [&](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--name", fam.name, "family name");
    if (required) opt->required();
    cmd->add_option("--n", fam.n, "dimension");
    cmd->add_option("--l", fam.l, "partial-sum length");
    cmd->add_option("--i", fam.i, "row index");
    cmd->add_option("--j", fam.j, "column index");
    cmd->add_option("--u", fam.u, "shift source");
    cmd->add_option("--v", fam.v, "shift target");
    cmd->add_option("--params", fam.params_path, "JSON parameter file");
  };

  CLI::App* family = app.add_subcommand("family", "emit a family instance");
  add_family_flags(family, true);
  family->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* verify_cmd = app.add_subcommand("verify", "sampled exact check");
  add_family_flags(verify_cmd, false);
  verify_cmd->add_option("--expr", expr_path, "expression JSON file");
  verify_cmd->add_option("--samples", samples, "sample count");
  verify_cmd->add_option("--seed", seed, "sampler seed");
  verify_cmd->add_option("--weight-bound", weight_bound, "max factor weight");
  verify_cmd->add_flag("--nonsingular-only", nonsingular_only,
                       "draw strictly positive factor weights");

  CLI::App* decide_cmd =
      app.add_subcommand("decide", "decide a smallest multiplicative query");
  decide_cmd->add_option("--query", query_path, "query JSON file")->required();

  CLI::App* falsify_cmd =
      app.add_subcommand("falsify", "search for a falsifying op sequence");
  falsify_cmd->add_option("--expr", expr_path, "expression JSON file");
  falsify_cmd->add_option("--query", query_path, "query JSON file");
  falsify_cmd->add_option("--max-depth", max_depth, "search depth bound");

  CLI::App* apply_cmd = app.add_subcommand("apply", "apply operations");
  apply_cmd->add_option("--expr", expr_path, "expression JSON file")->required();
  apply_cmd->add_option("--ops", ops_text, "e.g. \"R1,2;C3,4\"")->required();
  apply_cmd->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "triple-route minor agreement");
  oracle_cmd->add_option("--n", fam.n, "dimension")->required();
  oracle_cmd->add_option("--trials", trials, "factorization count");
  oracle_cmd->add_option("--seed", seed, "sampler seed");
  oracle_cmd->add_option("--weight-bound", weight_bound, "max factor weight");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitBadInput;
  }

  try {
    if (family->parsed()) {
      emit(expr_to_json(make_family(fam)), out_path);
      return kExitHolds;
    }

    if (verify_cmd->parsed()) {
      DetExpr e = expr_path.empty() ? make_family(fam)
                                    : expr_from_json(load_json(expr_path));
      VerifyConfig cfg;
      cfg.n = e.ambient();
      cfg.samples = samples;
      cfg.weight_bound = weight_bound;
      cfg.seed = seed;
      cfg.nonsingular_only = nonsingular_only;
      const VerifyReport report = verify(e, cfg);
      emit(report_to_json(report), "");
      return report.ok() ? kExitHolds : kExitFails;
    }

    if (decide_cmd->parsed()) {
      const SmallestMultQuery q = query_from_json(load_json(query_path));
      const Verdict v = decide(q);
      emit(verdict_to_json(v), "");
      return v.holds ? kExitHolds : kExitFails;
    }

    if (falsify_cmd->parsed()) {
      std::optional<std::vector<OpSpec>> witness;
      if (!query_path.empty())
        witness = falsify_search(query_from_json(load_json(query_path)), max_depth);
      else if (!expr_path.empty())
        witness = falsify_search(expr_from_json(load_json(expr_path)), max_depth);
      else
        throw std::invalid_argument("falsify needs --expr or --query");
      json j;
      if (witness) {
        j["falsified"] = true;
        j["ops"] = ops_to_json(*witness);
      } else {
        j["falsified"] = false;
      }
      emit(j, "");
      return witness ? kExitFails : kExitInconclusive;
    }

    if (apply_cmd->parsed()) {
      const DetExpr e = expr_from_json(load_json(expr_path));
      const std::vector<OpSpec> ops = parse_op_string(ops_text);
      emit(expr_to_json(apply_sequence(e, ops)), out_path);
      return kExitHolds;
    }

    if (oracle_cmd->parsed()) {
      for (int t = 0; t < trials; ++t) {
        const BidiagFactorization f = sample_factorization(
            fam.n, seed + static_cast<std::uint64_t>(t), weight_bound);
        if (!oracle_compare(f)) {
          std::cout << "mismatch at trial " << t << "\n"
                    << factorization_to_json(f).dump(2) << "\n";
          return kExitFails;
        }
      }
      std::cout << "all " << trials << " trials agree\n";
      return kExitHolds;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
