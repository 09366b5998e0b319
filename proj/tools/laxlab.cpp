#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <json.hpp>
#include <map>
#include <string>
#include <vector>

#include "laxlab/numeric.hpp"
#include "laxlab/report.hpp"

using namespace laxlab;
namespace num = laxlab::numeric;

namespace {

constexpr int kOk = 0, kDiscrepancy = 1, kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

num::cplx parse_complex(const std::string& s) {
  // "re" or "re,im"
  try {
    auto comma = s.find(',');
    if (comma == std::string::npos) return {std::stod(s), 0.0};
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + s + "' (expected re or re,im)");
  }
}

Params parse_params(const std::vector<std::string>& items) {
  Params p;
  for (const auto& it : items) {
    auto eq = it.find('=');
    if (eq == std::string::npos) throw UsageError("parameter '" + it + "' is not of the form name=value");
    p[it.substr(0, eq)] = it.substr(eq + 1);
  }
  return p;
}

ResidualConvention parse_convention(const std::string& s) {
  if (s == "standard") return ResidualConvention::Standard;
  if (s == "flipped") return ResidualConvention::Flipped;
  if (s == "alt") return ResidualConvention::AltCommutator;
  throw UsageError("unknown convention '" + s + "'");
}

void print_equations(const std::vector<Equation>& eqs, bool json) {
  if (json) {
    ordered_json j = ordered_json::array();
    for (const auto& e : eqs) {
      std::vector<std::string> prov;
      for (const auto& p : e.provenance) prov.push_back(p.str());
      j.push_back({{"expression", print(e.lhs)}, {"provenance", prov}});
    }
    std::cout << j.dump(2) << "\n";
    return;
  }
  for (const auto& e : eqs) {
    std::string prov;
    for (const auto& p : e.provenance) prov += (prov.empty() ? "" : "; ") + p.str();
    std::cout << print(e.lhs) << " = 0    [" << prov << "]\n";
  }
}

// verify ---------------------------------------------------------------------

struct VerifyOpts {
  std::string which = "all";
  std::string format = "text";
  std::string rules;
  std::string convention = "standard";
  bool mutate = false;
  bool timing = false;
};

int run_verify(const VerifyOpts& o) {
  std::vector<std::string> ids;
  if (o.which == "all") {
    for (const auto& c : pipeline_cases()) ids.push_back(c.id);
  } else {
    bool known = false;
    for (const auto& c : pipeline_cases()) known = known || c.id == o.which;
    if (!known) throw UsageError("unknown case '" + o.which + "'");
    ids.push_back(o.which);
  }
  if (!o.rules.empty()) make_rules(o.rules);  // reject unknown names up front
  PipelineOptions po;
  po.mutate = o.mutate;
  po.extra_rules = o.rules;
  po.convention = parse_convention(o.convention);

  std::vector<VerificationReport> reports;
  for (const auto& id : ids) reports.push_back(run_case(id, po));
  bool bad = false;
  for (const auto& r : reports) bad = bad || r.status == Status::Discrepancy;

  if (o.format == "json") {
    if (reports.size() == 1) {
      std::cout << to_json(reports[0], o.timing).dump(2) << "\n";
    } else {
      ordered_json j = ordered_json::array();
      for (const auto& r : reports) j.push_back(to_json(r, o.timing));
      std::cout << j.dump(2) << "\n";
    }
  } else {
    for (const auto& r : reports) std::cout << to_text(r, o.timing) << "\n";
    if (reports.size() > 1) std::cout << summary_table(reports);
  }
  return bad ? kDiscrepancy : kOk;
}

// derive / reduce ------------------------------------------------------------

struct DeriveOpts {
  std::string pair;
  std::vector<std::string> params;
  std::string rules = "none";
  std::string convention = "standard";
  std::string format = "text";
  bool scalar = false, classical = false, show_residual = false;
  bool v_du = false, v_u = false, v_zero = false, extract = false;
};

LaxPairSpec load_pair(const DeriveOpts& o) {
  Params p = parse_params(o.params);
  int bindings = o.v_du + o.v_u + o.v_zero;
  if (bindings > 1) throw UsageError("choose at most one of --v-du, --v-u, --v-zero");
  if (bindings) {
    if (p.count("v")) throw UsageError("v is bound twice");
    p["v"] = o.v_du ? "u'" : o.v_u ? "u" : "0";
  }
  auto spec = build_pair(o.pair, p);
  if (o.classical) {
    spec.P = classical_limit(spec.P);
    spec.Q = classical_limit(spec.Q);
  }
  if (o.scalar) {
    spec.P = scalarize(spec.P);
    spec.Q = scalarize(spec.Q);
  }
  return spec;
}

int run_derive(const DeriveOpts& o) {
  RuleSet rs = make_rules(o.rules);
  auto spec = load_pair(o);
  Mat2 R = zero_curvature_residual(spec.P, spec.Q, rs, parse_convention(o.convention));
  if (o.scalar) R = normalize(scalarize(R), rs);
  auto eqs = extract_equations(R, o.pair);
  if (o.show_residual && o.format != "json") std::cout << "residual: " << to_string(R) << "\n";
  print_equations(eqs, o.format == "json");
  return kOk;
}

int run_reduce(const DeriveOpts& o) {
  RuleSet rs = make_rules(o.rules);
  auto spec = load_pair(o);
  Mat2 P = normalize(spec.P, rs), Q = normalize(spec.Q, rs);
  if (o.format == "json") {
    ordered_json j;
    auto m = [](const Mat2& x) {
      return ordered_json::array({ordered_json::array({print(x.at(0, 0)), print(x.at(0, 1))}),
                                  ordered_json::array({print(x.at(1, 0)), print(x.at(1, 1))})});
    };
    j["pair"] = o.pair;
    j["P"] = m(P);
    j["Q"] = m(Q);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "P = " << to_string(P) << "\nQ = " << to_string(Q) << "\n";
  }
  if (o.extract) {
    Mat2 R = zero_curvature_residual(P, Q, rs, parse_convention(o.convention));
    if (o.scalar) R = normalize(scalarize(R), rs);
    print_equations(extract_equations(R, o.pair), o.format == "json");
  }
  return kOk;
}

// integrate ------------------------------------------------------------------

struct IntegrateOpts {
  std::string problem;
  std::string alpha = "0";
  std::string k;
  std::string form = "standard";
  double z0 = 1, z1 = 5;
  std::vector<std::string> u0{"0"}, du0{"0"}, ddu0{"0"};
  int n = 1, samples = 401;
  double rtol = 1e-10, atol = 1e-12;
  std::string format = "csv";
};

num::CMat diag_matrix(const std::vector<std::string>& vals, int n) {
  num::CMat m = num::CMat::Zero(n, n);
  if (static_cast<int>(vals.size()) == 1) {
    for (int i = 0; i < n; ++i) m(i, i) = parse_complex(vals[0]);
  } else if (static_cast<int>(vals.size()) == n) {
    for (int i = 0; i < n; ++i) m(i, i) = parse_complex(vals[static_cast<std::size_t>(i)]);
  } else if (static_cast<int>(vals.size()) == n * n) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = parse_complex(vals[static_cast<std::size_t>(i * n + j)]);
  } else {
    throw UsageError("initial values need 1, n or n*n entries");
  }
  return m;
}

int run_integrate(const IntegrateOpts& o) {
  num::cplx alpha = parse_complex(o.alpha);
  bool json = o.format == "json";
  if (o.problem == "p34-map") {
    auto rep = num::p34_map_check(alpha, parse_complex(o.u0[0]), parse_complex(o.du0[0]), o.z0, o.z1, o.samples);
    ordered_json j;
    j["check"] = "p34-map";
    j["ok"] = rep.ok;
    j["pii_residual"] = rep.pii_residual;
    j["residuals"] = ordered_json::array();
    for (const auto& r : rep.residuals)
      j["residuals"].push_back({{"variable", r.variable}, {"pairing", r.pairing}, {"max_residual", r.max_residual}});
    j["p_pairing"] = rep.p_pairing;
    j["q_pairing"] = rep.q_pairing;
    if (!rep.error.empty()) j["error"] = rep.error;
    std::cout << j.dump(2) << "\n";
    return rep.ok ? kOk : kDiscrepancy;
  }
  if (o.problem == "dpii-drift") {
    auto rep = num::dpii_first_integral_check(parse_complex(o.u0[0]), parse_complex(o.du0[0]),
                                              parse_complex(o.ddu0[0]), o.z0, o.z1, o.samples);
    ordered_json j;
    j["check"] = "dpii-drift";
    j["ok"] = rep.ok;
    j["integral_re"] = rep.initial_value.real();
    j["integral_im"] = rep.initial_value.imag();
    j["drift"] = rep.drift;
    j["residual"] = rep.residual;
    if (!rep.error.empty()) j["error"] = rep.error;
    std::cout << j.dump(2) << "\n";
    return rep.ok ? kOk : kDiscrepancy;
  }
  num::ODEProblem p;
  try {
    p.rhs = num::parse_rhs(o.problem);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (o.form != "standard" && o.form != "symmetric") throw UsageError("unknown form '" + o.form + "'");
  p.form = o.form == "symmetric" ? num::PiiForm::Symmetric : num::PiiForm::Standard;
  p.alpha = alpha;
  p.p34_k = o.k.empty() ? (alpha - 0.5) * (alpha - 0.5) : parse_complex(o.k);
  p.n = p.rhs == num::Rhs::MatrixPII ? o.n : 1;
  p.z0 = o.z0;
  p.z1 = o.z1;
  p.samples = o.samples;
  p.rtol = o.rtol;
  p.atol = o.atol;
  p.init = {diag_matrix(o.u0, p.n), diag_matrix(o.du0, p.n)};
  if (p.rhs == num::Rhs::DPII3) p.init.push_back(diag_matrix(o.ddu0, p.n));
  num::Trajectory t;
  try {
    t = num::integrate(p);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (json) {
    ordered_json j;
    j["problem"] = o.problem;
    j["ok"] = t.ok;
    j["samples"] = t.z.size();
    j["steps"] = t.steps;
    j["max_residual"] = t.max_residual();
    j["last_good_z"] = t.last_good_z;
    if (!t.ok) j["error"] = t.error;
    std::cout << j.dump(2) << "\n";
  } else {
    if (!t.ok) std::cerr << "integration stopped: " << t.error << " at z = " << t.last_good_z << "\n";
    num::write_csv(std::cout, t);
  }
  return t.ok ? kOk : kDiscrepancy;
}

// catalog --------------------------------------------------------------------

int run_catalog(const std::string& format) {
  auto entries = catalog_entries();
  if (format == "json") {
    ordered_json j = ordered_json::array();
    for (const auto& e : entries)
      j.push_back({{"key", e.key}, {"kind", kind_name(e.kind)}, {"citation", e.citation}, {"slots", e.slots}});
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  for (const auto& e : entries) {
    std::string slots;
    for (const auto& s : e.slots) slots += (slots.empty() ? "" : ",") + s;
    std::cout << e.key << "\t" << kind_name(e.kind) << "\t" << e.citation << "\t[" << slots << "]\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"laxlab: noncommutative Lax-pair derivations and numeric checks"};
  app.require_subcommand(1);

  VerifyOpts vo;
  auto* verify = app.add_subcommand("verify", "run verification pipelines");
  verify->add_option("--case", vo.which, "case id or 'all'");
  verify->add_option("--format", vo.format)->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--rules", vo.rules, "extra rule sets, '+'-separated");
  verify->add_option("--convention", vo.convention)->check(CLI::IsMember({"standard", "flipped", "alt"}));
  verify->add_flag("--mutate", vo.mutate, "run the negative-control twin");
  verify->add_flag("--timing", vo.timing, "include wall time");

  DeriveOpts dopt;
  auto add_pair_opts = [&](CLI::App* sub) {
    sub->add_option("--pair", dopt.pair, "catalog key of a Lax pair")->required();
    sub->add_option("--param", dopt.params, "slot binding name=value");
    sub->add_option("--rules", dopt.rules, "rule sets, '+'-separated");
    sub->add_option("--convention", dopt.convention)->check(CLI::IsMember({"standard", "flipped", "alt"}));
    sub->add_option("--format", dopt.format)->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--scalar", dopt.scalar, "all generators commute");
    sub->add_flag("--classical", dopt.classical, "hbar -> 0");
    sub->add_flag("--v-du", dopt.v_du, "bind v = u'");
    sub->add_flag("--v-u", dopt.v_u, "bind v = u");
    sub->add_flag("--v-zero", dopt.v_zero, "bind v = 0");
  };
  auto* derive = app.add_subcommand("derive", "extract equations from a Lax pair");
  add_pair_opts(derive);
  derive->add_flag("--residual", dopt.show_residual, "print the residual matrix");
  auto* reduce = app.add_subcommand("reduce", "apply reductions to a Lax pair");
  add_pair_opts(reduce);
  reduce->add_flag("--extract", dopt.extract, "also extract equations");

  IntegrateOpts io;
  auto* integ = app.add_subcommand("integrate", "numeric integration and checks");
  integ->add_option("problem", io.problem, "pii | p34 | matrix-pii | dpii3 | p34-map | dpii-drift")
      ->required()
      ->check(CLI::IsMember({"pii", "p34", "matrix-pii", "dpii3", "p34-map", "dpii-drift"}));
  integ->add_option("--alpha", io.alpha, "re or re,im");
  integ->add_option("--k", io.k, "P34 constant k (default (alpha - 1/2)^2)");
  integ->add_option("--form", io.form, "PII sign form")->check(CLI::IsMember({"standard", "symmetric"}));
  integ->add_option("--z0", io.z0);
  integ->add_option("--z1", io.z1);
  integ->add_option("--u0", io.u0, "u(z0): 1, n or n*n values");
  integ->add_option("--du0", io.du0, "u'(z0)");
  integ->add_option("--ddu0", io.ddu0, "u''(z0), dpii3 only");
  integ->add_option("--n", io.n, "matrix size")->check(CLI::PositiveNumber);
  integ->add_option("--samples", io.samples)->check(CLI::Range(7, 10000000));
  integ->add_option("--rtol", io.rtol);
  integ->add_option("--atol", io.atol);
  integ->add_option("--format", io.format)->check(CLI::IsMember({"csv", "json"}));

  std::string cat_format = "text";
  auto* cat = app.add_subcommand("catalog", "catalog operations");
  auto* list = cat->add_subcommand("list", "list catalog entries");
  list->add_option("--format", cat_format)->check(CLI::IsMember({"text", "json"}));
  cat->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (verify->parsed()) return run_verify(vo);
    if (derive->parsed()) return run_derive(dopt);
    if (reduce->parsed()) return run_reduce(dopt);
    if (integ->parsed()) return run_integrate(io);
    if (list->parsed()) return run_catalog(cat_format);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
