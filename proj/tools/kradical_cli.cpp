#include <chrono>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kradical/classifier.hpp"
#include "kradical/errors.hpp"
#include "kradical/families.hpp"
#include "kradical/monodromy.hpp"
#include "kradical/parse.hpp"
#include "kradical/report.hpp"

namespace {

using namespace kradical;
using Clock = std::chrono::steady_clock;

double secs_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

mpq_class parse_rational(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw DomainError("not a rational number: " + s);
  q.canonicalize();
  return q;
}

int run_analyze(const std::string& expr, int answer_k, long prec, bool json,
                unsigned seed) {
  ParseResult in = parse_poly(expr, prec);
  for (const std::string& w : in.warnings) std::cerr << "warning: " << w << "\n";
  auto t0 = Clock::now();
  KCertificate cert = decide_k(in.poly, prec, seed);
  double elapsed = secs_since(t0);
  if (json)
    std::cout << report_json(expr, cert, answer_k) << "\n";
  else
    std::cout << report_text(expr, cert, answer_k, elapsed);
  return 0;
}

void print_one(const Fixture& fx, const VerifyResult& res, double elapsed) {
  if (res.pass) {
    const FactorReport& fr = res.cert.factors[0];
    std::cout << "PASS " << fx.id << "  passport "
              << passport_str(fr.group.passport) << "  " << fr.group.name()
              << " order " << fr.group.order.get_str() << "  k "
              << res.cert.overall_k;
  } else {
    std::cout << "FAIL " << fx.id << "  " << res.divergent;
  }
  std::cout << "  (" << std::fixed << std::setprecision(1) << elapsed
            << " s)\n";
}

int run_verify(const std::string& only, const std::string& t_str, long prec) {
  std::vector<Fixture> fxs;
  for (const std::string& id : fixture_ids())
    if (only.empty() || only == id) fxs.push_back(fixture(id));
  if (only.empty() || only == "deg15") {
    std::vector<mpq_class> ts;
    if (t_str.empty()) {
      ts = {mpq_class(1), mpq_class(75, 4)};
    } else {
      ts = {parse_rational(t_str)};
    }
    for (const mpq_class& t : ts)
      for (int sign : {1, -1}) fxs.push_back(fixture_deg15(sign, t));
  } else if (!t_str.empty()) {
    std::cerr << "--t selects the deg15 parameter; use it with --only deg15\n";
    return 2;
  }
  if (fxs.empty()) {
    std::cerr << "unknown fixture id: " << only << "\n";
    return 2;
  }

  int passed = 0;
  for (const Fixture& fx : fxs) {
    auto t0 = Clock::now();
    VerifyResult res = verify_fixture(fx, prec);
    print_one(fx, res, secs_since(t0));
    if (res.pass) ++passed;
  }
  std::cout << passed << "/" << fxs.size() << " fixtures pass\n";
  return passed == static_cast<int>(fxs.size()) ? 0 : 1;
}

int run_group_info(const std::string& name) {
  std::optional<GroupInfo> gi = group_info(name);
  if (!gi) {
    std::cerr << "unknown group: " << name << "\n";
    return 2;
  }
  std::cout << "group:     " << gi->name << "\n";
  std::cout << "degree:    " << gi->degree << "\n";
  std::cout << "order:     " << gi->order.get_str() << "\n";
  std::cout << "minimal k: " << gi->minimal_k << "\n";
  if (!gi->note.empty()) std::cout << "note:      " << gi->note << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "minimal k such that the inverse of a polynomial is representable in "
      "k-radicals"};
  app.require_subcommand(1);

  std::string expr;
  int answer_k = 0;
  long prec = kPrecisionDefault;
  bool json = false;
  unsigned seed = 0;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "decompose, certify monodromy, and report the minimal k");
  analyze->add_option("expr", expr, "polynomial in z, e.g. \"z^4*(z^2+6*z+25)\"")
      ->required();
  analyze->add_option("--k", answer_k, "also answer: invertible in k-radicals?")
      ->check(CLI::PositiveNumber);
  analyze->add_option("--precision", prec, "working precision in bits")
      ->capture_default_str();
  analyze->add_flag("--json", json, "emit the JSON report");
  analyze->add_option("--seed", seed, "base-point perturbation seed")
      ->capture_default_str();

  std::string only, t_str;
  long vprec = kPrecisionDefault;
  CLI::App* verify = app.add_subcommand(
      "verify-fixtures", "run the pipeline on the pinned fixtures");
  verify->add_option("--only", only,
                     "restrict to one fixture id (deg6, deg10, deg8-plus, "
                     "deg8-minus, deg15)");
  verify->add_option("--t", t_str, "deg15 parameter, a nonzero rational");
  verify->add_option("--precision", vprec, "working precision in bits")
      ->capture_default_str();

  std::string gname;
  CLI::App* ginfo = app.add_subcommand(
      "group-info", "classification row for a recognized group name");
  ginfo->add_option("name", gname, "e.g. PGL(2,7), M23, S_9, PGammaL(2,9)")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return run_analyze(expr, answer_k, prec, json, seed);
    if (verify->parsed()) return run_verify(only, t_str, vprec);
    if (ginfo->parsed()) return run_group_info(gname);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PrecisionError& e) {
    std::cerr << "precision exhausted at the " << kPrecisionCeiling
              << "-bit ceiling: " << e.what() << "\n";
    return 3;
  } catch (const UnrecognizedGroupError& e) {
    std::cerr << "unrecognized monodromy group: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
