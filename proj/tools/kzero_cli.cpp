// kzero: certificate runner and library queries.
//
//   kzero verify data/newform_276.json --report report.json
//   kzero classgroup --d 10
//   kzero unit --d 10
//   kzero weil --p 17 --a 4 --b -1 --d 10
//   kzero principal --d 10 --a 2 --b 0

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "kzero/certificate.hpp"
#include "kzero/class_group.hpp"
#include "kzero/errors.hpp"
#include "kzero/quartic.hpp"
#include "kzero/resultant.hpp"

using namespace kzero;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

int verify(const std::string& file, unsigned bound, const std::string& report) {
  Certificate cert = run_certificate(load_certificate_input(file), bound);
  std::cout << cert.to_text();
  if (!report.empty()) {
    std::ofstream out(report);
    if (!out) throw InputError(report, "cannot write report");
    out << cert.to_json().dump(2) << "\n";
  }
  return cert.passed() ? 0 : kExitFail;
}

int classgroup(std::int64_t d) {
  auto O = maximal_order(d);
  auto g = class_group(O);
  std::cout << O.name() << ": discriminant " << O.discriminant() << ", h = " << g.class_number << ", Cl = " << g.structure()
            << "\n";
  for (const auto& P : g.generators) std::cout << "  generator " << P << "\n";
  for (const auto& c : g.elements) std::cout << "  class " << c << "\n";
  return 0;
}

int unit(std::int64_t d) {
  auto u = fundamental_unit(maximal_order(d));
  std::cout << "fundamental unit " << u << ", norm " << to_string(u.norm()) << "\n";
  return 0;
}

int weil(const Integer& p, const std::string& a, const std::string& b, std::int64_t d, unsigned bound) {
  QuadElement ap(d, parse_rational(a), parse_rational(b));
  WeilQuartic P = frobenius_charpoly(ap, p);
  std::cout << "P_" << p << "(x) = " << P.poly() << "\n";
  const bool irr = is_irreducible_monic(P.poly());
  std::cout << "  irreducible: " << (irr ? "yes" : "no") << "\n";
  std::cout << "  ordinary: " << (is_ordinary(P) ? "yes" : "no") << "\n";
  std::cout << "  roots on |x| = sqrt(p): " << (roots_on_weil_circle(P) ? "yes" : "no") << "\n";
  std::cout << "  discriminant: " << to_string(discriminant(P.poly())) << "\n";
  if (irr) std::cout << "  stability (B = " << bound << "): " << endomorphism_stability(P, bound).to_string() << "\n";
  return 0;
}

int principal(std::int64_t d, const Integer& a, const Integer& b) {
  FracIdeal I(maximal_order(d), a, b);
  auto r = is_principal(I);
  std::cout << I << (r.principal ? " is principal, generated by " + r.generator->to_string() : " is nonprincipal")
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of quadratic class groups, Weil quartics and the zero-divisor certificate"};
  app.require_subcommand(1);

  std::string file, report;
  unsigned bound = kDefaultStabilityBound;
  auto* v = app.add_subcommand("verify", "run the certificate on a dataset");
  v->add_option("file", file, "dataset JSON")->required();
  v->add_option("--bound", bound, "stability bound B")->check(CLI::Range(1u, 60u));
  v->add_option("--report", report, "write the JSON report here");

  std::int64_t d = 0;
  auto* cg = app.add_subcommand("classgroup", "class group of the maximal order of Q(sqrt d)");
  cg->add_option("--d", d)->required();

  auto* un = app.add_subcommand("unit", "fundamental unit of a real quadratic field");
  un->add_option("--d", d)->required();

  long p = 0;
  std::string ra, rb;
  auto* w = app.add_subcommand("weil", "Frobenius polynomial N(x^2 - (a + b sqrt d) x + p)");
  w->add_option("--p", p)->required();
  w->add_option("--a", ra)->required();
  w->add_option("--b", rb)->required();
  w->add_option("--d", d)->required();
  w->add_option("--bound", bound)->check(CLI::Range(1u, 60u));

  long ia = 0, ib = 0;
  auto* pr = app.add_subcommand("principal", "principality of the ideal (a, b + w)");
  pr->add_option("--d", d)->required();
  pr->add_option("--a", ia)->required();
  pr->add_option("--b", ib)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    if (*v) return verify(file, bound, report);
    if (*cg) return classgroup(d);
    if (*un) return unit(d);
    if (*w) return weil(p, ra, rb, d, bound);
    if (*pr) return principal(d, ia, ib);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
