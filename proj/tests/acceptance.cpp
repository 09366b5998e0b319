// Acceptance runner: one PASS/FAIL line per criterion, details indented below.
// Usage: acceptance [path-to-laxlab-cli]
#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <gmpxx.h>

#include "laxlab/numeric.hpp"
#include "laxlab/verify.hpp"
#include "properties.hpp"

using namespace laxlab;
namespace num = laxlab::numeric;

namespace {

struct Criterion {
  explicit Criterion(int n) : id(n) {}
  int id;
  bool pass = true;
  std::vector<std::string> details;

  void require(bool ok, const std::string& what) {
    pass = pass && ok;
    details.push_back(std::string(ok ? "ok    " : "MISS  ") + what);
  }
  void info(const std::string& what) { details.push_back("      " + what); }
};

template <class F>
double seconds(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(3) << x;
  return os.str();
}

void require_cmp(Criterion& c, const VerificationReport& r, const std::string& label) {
  const Comparison* cmp = r.find(label);
  if (!cmp) {
    c.require(false, r.case_id + ": no comparison '" + label + "'");
    return;
  }
  c.require(cmp->matched, r.case_id + ": " + label + (cmp->matched ? "" : " (difference " + cmp->difference + ")"));
}

Criterion criterion1() {
  Criterion c{1};
  VerificationReport r;
  double t = seconds([&] { r = run_case("fn-classical"); });
  for (const auto& e : r.equations) c.info("extracted: " + e.expression + " = 0");
  require_cmp(c, r, "classical PII");
  c.info("engine form matches classical-pii-target-derived: " + std::string(r.matched("derived classical PII") ? "yes" : "no"));
  c.info("z -> -z maps it onto the printed target: " + std::string(r.matched("reflection z -> -z") ? "yes" : "no"));
  c.require(t < 1.0, "runtime " + fmt(t) + " s < 1 s");
  return c;
}

Criterion criterion2() {
  Criterion c{2};
  VerificationReport r;
  double t = seconds([&] { r = run_case("prop31"); });
  require_cmp(c, r, "commutation relation");
  require_cmp(c, r, "quantum matrix PII");
  require_cmp(c, r, "lam hbar pair cancels on adding");
  c.info("lam^1 parts: " + r.value("lam-part upper") + " and " + r.value("lam-part lower"));
  c.info("coefficient of [v,u'] derived: c = " + r.value("c"));
  c.require(r.status != Status::Discrepancy, std::string("status ") + status_name(r.status));
  c.require(t < 5.0, "runtime " + fmt(t) + " s < 5 s");
  return c;
}

Criterion criterion3() {
  Criterion c{3};
  VerificationReport v0 = run_case("case-iii-v0"), ci = run_case("case-i"), cii = run_case("case-ii");
  require_cmp(c, v0, "printed P reduces to U");
  require_cmp(c, v0, "printed Q reduces to V");
  c.info("with the Q entry read as 2i u^2: " + std::string(v0.matched("Q reduces to V") ? "equal" : "different"));
  require_cmp(c, ci, "d/dz commutation relation");
  require_cmp(c, ci, "quantum PII as printed");
  c.info("engine form quantum PII: " + std::string(ci.matched("quantum PII") ? "matched" : "missed"));
  require_cmp(c, cii, "printed equation differentiated, in nu(x)");
  require_cmp(c, cii, "difference from derivative matrix PII");
  c.info("derived third-order equation: " + std::string(cii.matched("derived third-order equation") ? "matched" : "missed"));
  c.info("display minus derivative matrix PII: " + cii.value("display minus derivative matrix PII (right-hand sides)"));
  return c;
}

Criterion criterion4() {
  Criterion c{4};
  VerificationReport g = run_case("prop41"), p = run_case("p34");
  require_cmp(c, g, "G P G^-1 as printed");
  require_cmp(c, g, "G Q G^-1 as printed");
  c.info("gauge invariance of the residual: " + std::string(g.matched("gauge invariance") ? "yes" : "no"));
  require_cmp(c, p, "quantum P34 for p as printed");
  require_cmp(c, p, "quantum P34 for q as printed");
  require_cmp(c, p, "printed quantum P34, hbar -> 0");
  c.info("chain result for p: " + p.value("P34 for p") + " = 0");
  c.info("chain result for q: " + p.value("P34 for q") + " = 0");
  c.info("chain limit for p matches classical P34 with delta = alpha - 1/2: " +
         std::string(p.matched("quantum P34 for p, hbar -> 0") ? "yes" : "no"));
  return c;
}

Criterion criterion5() {
  Criterion c{5};
  VerificationReport r = run_case("ng-compare");
  require_cmp(c, r, "difference is (beta - hbar^2) p");
  c.info("comparison minus ours: " + r.value("comparison minus ours"));
  return c;
}

Criterion criterion6() {
  Criterion c{6};
  bool exact = true;
  for (int n = 1; n <= 12; ++n) {
    mpq_class z(n, 4), u = 1 / z;
    exact = exact && (2 / (z * z * z)) - (2 * u * u * u - z * u + 1) == 0;
  }
  c.require(exact, "u = 1/z satisfies u'' = 2u^3 - zu + 1 in exact arithmetic");
  num::Trajectory t1, t0;
  double s1 = seconds([&] { t1 = num::integrate(num::pii_problem(1.0, 1, 5, 1.0, -1.0)); });
  double s0 = seconds([&] { t0 = num::integrate(num::pii_problem(0.0, 1, 5, 0.0, 0.0)); });
  double err1 = t1.ok ? 0 : 1e300, max0 = t0.ok ? 0 : 1e300;
  for (std::size_t k = 0; k < t1.z.size(); ++k) err1 = std::max(err1, std::abs(t1.state[k][0](0, 0) - 1.0 / t1.z[k]));
  for (const auto& s : t0.state) max0 = std::max(max0, std::abs(s[0](0, 0)));
  c.require(err1 < 1e-8, "alpha = 1: max |u - 1/z| on [1,5] = " + fmt(err1) + " < 1e-8");
  c.require(max0 < 1e-12, "alpha = 0: max |u| on [1,5] = " + fmt(max0) + " < 1e-12");
  c.info("finite-difference residual, alpha = 1: " + fmt(t1.max_residual()));
  c.require(s1 < 1.0 && s0 < 1.0, "runtimes " + fmt(s1) + " s and " + fmt(s0) + " s < 1 s");
  return c;
}

Criterion criterion7() {
  Criterion c{7};
  num::P34MapReport gen, a1, a0;
  double t = seconds([&] {
    gen = num::p34_map_check(0.7, 0.3, -0.2, 1, 2);
    a1 = num::p34_map_check(1.0, 1.0, -1.0, 1, 3);
    a0 = num::p34_map_check(0.0, 0.0, 0.0, 1, 3);
  });
  c.require(gen.ok, "generic data alpha = 0.7, u(1) = 0.3, u'(1) = -0.2 on [1,2]" +
                        (gen.error.empty() ? "" : ": " + gen.error));
  for (const auto& x : gen.residuals) {
    bool win = (x.variable == "p" ? gen.p_pairing : gen.q_pairing) == x.pairing;
    c.require(win ? x.max_residual < 1e-6 : x.max_residual > 1e-2,
              x.variable + " with " + x.pairing + ": " + fmt(x.max_residual) + (win ? " < 1e-6" : " > 1e-2"));
  }
  c.info("pairings found: p with " + gen.p_pairing + ", q with " + gen.q_pairing);
  // p = z/2 leaves (k - 1/4)/z, so only k = 1/4 is accepted.
  std::vector<double> z;
  std::vector<num::cplx> p;
  for (int i = 0; i <= 200; ++i) {
    z.push_back(1 + 0.01 * i);
    p.push_back(z.back() / 2);
  }
  double r_quarter = num::p34_residual(z, p, 0.25), r_other = num::p34_residual(z, p, 2.25);
  c.require(r_quarter < 1e-9 && std::abs(r_other - 2.0 / z[2]) < 1e-9,
            "p = z/2 substitution: residual " + fmt(r_quarter) + " for k = 1/4, " + fmt(r_other) + " = 2/z for k = 9/4");
  c.require(a1.p_pairing == "(alpha-1/2)^2", "alpha = 1, u = 1/z: p = z/2 pairs with " + a1.p_pairing);
  c.require(a0.p_pairing == "both", "alpha = 0, u = 0: p = z/2, both pairings coincide at 1/4 (" + a0.p_pairing + ")");
  c.require(t < 5.0, "runtime " + fmt(t) + " s < 5 s");
  return c;
}

Criterion criterion8() {
  Criterion c{8};
  std::vector<props::PropertyResult> rs;
  double t = seconds([&] { rs = props::run_all(1000); });
  for (const auto& r : rs)
    c.require(r.cases >= 1000 && r.failures == 0, r.name + ": " + std::to_string(r.cases) + " cases, " +
                                                       std::to_string(r.failures) + " failures" +
                                                       (r.first_failure.empty() ? "" : " (" + r.first_failure + ")"));
  c.require(t < 30.0, "runtime " + fmt(t) + " s < 30 s");
  return c;
}

Criterion criterion9(const char* cli) {
  Criterion c{9};
  PipelineOptions o;
  o.mutate = true;
  for (const auto& pc : pipeline_cases()) {
    if (cli) {
      std::string cmd = std::string("\"") + cli + "\" verify --mutate --case " + pc.id + " > /dev/null 2>&1";
      int st = std::system(cmd.c_str());
      int code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
      c.require(code == 1, pc.id + " mutant: exit code " + std::to_string(code));
    } else {
      VerificationReport r = run_case(pc.id, o);
      c.require(r.status == Status::Discrepancy, pc.id + " mutant: " + status_name(r.status));
    }
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  const char* cli = argc > 1 ? argv[1] : nullptr;
  std::vector<Criterion> all = {criterion1(), criterion2(), criterion3(), criterion4(), criterion5(),
                                criterion6(), criterion7(), criterion8(), criterion9(cli)};
  int failed = 0;
  for (const auto& c : all) {
    std::cout << "criterion " << c.id << ": " << (c.pass ? "PASS" : "FAIL") << "\n";
    for (const auto& d : c.details) std::cout << "    " << d << "\n";
    failed += !c.pass;
  }
  std::cout << (all.size() - failed) << "/" << all.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
