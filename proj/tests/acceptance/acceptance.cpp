// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance <path to kzero CLI> <dataset json>

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "kzero/certificate.hpp"
#include "kzero/class_group.hpp"
#include "kzero/monoid_ring.hpp"
#include "kzero/quartic.hpp"
#include "kzero/resultant.hpp"
#include "kzero/steinitz.hpp"
#include "kzero/weil.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace kzero;
namespace fs = std::filesystem;

namespace {

// time limits, milliseconds
constexpr double kGoldenLimit = 10;
constexpr double kClassSweepLimit = 30'000;
constexpr double kPrincipalLimit = 1'000;
constexpr double kPipelineLimit = 5'000;
constexpr double kWitnessLimit = 1'000;
constexpr double kEndToEndLimit = 60'000;
constexpr double kPropertyLimit = 60'000;
constexpr int kMinPropertyCases = 500;

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

using Clock = std::chrono::steady_clock;

bool run_criterion(int id, const std::string& title, double limit_ms, const std::function<Outcome()>& body) {
  Outcome out;
  auto t0 = Clock::now();
  try {
    out = body();
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  bool in_time = ms < limit_ms;
  bool pass = out.ok && in_time;
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << (pass ? "PASS" : "FAIL") << "  [" << id << "] " << title << "  (" << ms << " ms, limit " << limit_ms
       << " ms)";
  if (!out.detail.empty()) line << "  " << out.detail;
  if (!in_time) line << "  over time limit";
  std::cout << line.str() << std::endl;
  return pass;
}

int run_cli(const std::string& cli, const std::string& args, const fs::path& log) {
  std::string cmd = "\"" + cli + "\" " + args + " > \"" + log.string() + "\" 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string read_file(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

Outcome golden_charpoly() {
  Outcome o;
  auto P = frobenius_charpoly(QuadElement(10, 4, -1), 17);
  o.require(P.poly() == IntPoly{289, -136, 40, -8, 1}, "got " + P.poly().to_string());
  o.detail = o.ok ? P.poly().to_string() : o.detail;
  return o;
}

Outcome class_numbers() {
  Outcome o;
  auto g40 = class_group(maximal_order(10));
  o.require(g40.structure() == "Z/2", "disc 40 gave " + g40.structure());
  auto g20 = class_group(maximal_order(-5));
  o.require(g20.class_number == 2, "disc -20 gave h = " + g20.class_number.get_str());
  int n = 0;
  for (std::int64_t d : oracle::squarefree_ds_with_disc_up_to(200)) {
    auto h = class_group(maximal_order(d)).class_number;
    o.require(h == oracle::brute_class_number(d), "disagreement at d = " + std::to_string(d));
    ++n;
  }
  if (o.ok) o.detail = "Z/2 for disc 40, h = 2 for disc -20, " + std::to_string(n) + " discriminants match brute force";
  return o;
}

Outcome nonprincipality() {
  Outcome o;
  auto O = maximal_order(10);
  o.require(!is_principal(FracIdeal(O, 2, 0)).principal, "(2, sqrt(10)) reported principal");
  o.require(!is_principal(FracIdeal(O, 3, 1)).principal, "(3, 1 + sqrt(10)) reported principal");
  std::vector<std::string> found;
  for (const QuadElement& g : {QuadElement(10, 3, 1), QuadElement(10, 4, 1)}) {
    FracIdeal J = FracIdeal::principal(O, g);
    auto r = is_principal(J);
    o.require(r.principal && r.generator && FracIdeal::principal(O, *r.generator) == J,
              "(" + g.to_string() + ") not recognised as principal");
    if (r.generator) found.push_back("(" + g.to_string() + ") = (" + r.generator->to_string() + ")");
  }
  if (o.ok) o.detail = found[0] + ", " + found[1];
  return o;
}

Outcome pipeline(unsigned bound) {
  Outcome o;
  WeilQuartic P17 = frobenius_charpoly(QuadElement(10, 4, -1), 17);
  WeilQuartic P19 = frobenius_charpoly(QuadElement(10, 2, 1), 19);
  for (const auto* P : {&P17, &P19}) {
    const std::string at = "p=" + P->p().get_str() + ": ";
    o.require(factor_quartic(P->poly()).irreducible(), at + "reducible");
    o.require(P->c(0) == P->p() * P->p() && P->c(1) == P->p() * P->c(3) && roots_on_weil_circle(*P), at + "not Weil");
    o.require(is_ordinary(*P), at + "not ordinary");
    o.require(endomorphism_stability(*P, bound).stable, at + "unstable");
  }
  auto dist = distinct_fields_certificate(P17, P19);
  o.require(dist.verdict == FieldComparison::distinct, "fields not certified distinct");
  auto r = deduce_endomorphism_ring(10, certify_reduction(P17, bound), certify_reduction(P19, bound), dist);
  o.require(r.conclusion == "End = Z[sqrt(10)]", "conclusion " + r.conclusion);
  if (o.ok) o.detail = r.conclusion + ", disc ratio " + to_string(dist.ratio);
  return o;
}

Outcome witness() {
  Outcome o;
  auto O = maximal_order(10);
  IdealClass c = class_of(FracIdeal(O, 2, 0));
  AVRing A = AVRing::basis(tensor_av(ModuleClass::free(O, 1), "A"));
  AVRing B = AVRing::basis(tensor_av(ModuleClass(1, c), "A"));
  auto w = zero_divisor_witness(A + B, A - B);
  o.require(w.accepted && !w.x.is_zero() && !w.y.is_zero() && w.product.is_zero(), "Z[AV] witness: " + w.reason);
  auto g = FreeMonoidRing::basis(FreeMonoidElem::generator("g"));
  auto h = FreeMonoidRing::basis(FreeMonoidElem::generator("h"));
  auto f = zero_divisor_witness(g + h, g - h);
  o.require(!f.accepted && f.reason.rfind("product is nonzero", 0) == 0, "free monoid pair not refused: " + f.reason);
  if (o.ok) o.detail = "Z[AV]: " + w.reason + "; free monoid: " + f.reason;
  return o;
}

Outcome end_to_end(const std::string& cli, const std::string& dataset) {
  Outcome o;
  fs::path dir = fs::temp_directory_path() / ("kzero_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  fs::path log = dir / "out.txt";
  int rc = run_cli(cli, "verify \"" + dataset + "\" --report \"" + (dir / "report.json").string() + "\"", log);
  o.require(rc == 0, "bundled dataset exit " + std::to_string(rc));
  o.require(read_file(log).find("overall: PASS (10/10 checks)") != std::string::npos, "bundled dataset not 10/10");
  Json report = Json::parse(read_file(dir / "report.json"));
  o.require(report["overall"]["passed"] == 10, "JSON report does not record 10 passes");

  Json base = Json::parse(read_file(dataset));
  struct Mutation {
    std::string name;
    std::function<void(Json&)> apply;
  };
  const std::vector<Mutation> mutations{
      {"a17 rational part 4 -> 5", [](Json& j) { j["eigenvalues"][0]["a"][0] = 5; }},
      {"a17 rational denominator 1 -> 2", [](Json& j) { j["eigenvalues"][0]["a"][1] = 2; }},
      {"a17 sqrt coefficient -1 -> 0", [](Json& j) { j["eigenvalues"][0]["a"][2] = 0; }},
      {"a17 sqrt denominator 1 -> 2", [](Json& j) { j["eigenvalues"][0]["a"][3] = 2; }},
      {"a19 rational part 2 -> 3", [](Json& j) { j["eigenvalues"][1]["a"][0] = 3; }},
      {"first prime 17 -> 13", [](Json& j) { j["eigenvalues"][0]["p"] = 13; }},
      {"hecke_field_d 10 -> 2", [](Json& j) { j["hecke_field_d"] = 2; }},
      {"expected_dim 2 -> 3", [](Json& j) { j["expected_dim"] = 3; }},
      {"ideal a 2 -> 1", [](Json& j) { j["ideal"]["a"] = 1; }},
      {"ideal a 2 -> 3", [](Json& j) { j["ideal"]["a"] = 3; }},
  };
  int flipped = 0;
  for (std::size_t i = 0; i < mutations.size(); ++i) {
    Json m = base;
    mutations[i].apply(m);
    fs::path file = dir / ("mutation_" + std::to_string(i) + ".json");
    std::ofstream(file) << m.dump(2);
    int mrc = run_cli(cli, "verify \"" + file.string() + "\"", log);
    o.require(mrc == 1, mutations[i].name + ": exit " + std::to_string(mrc));
    flipped += mrc == 1;
  }
  fs::remove_all(dir);
  if (o.ok) o.detail = "dataset exit 0 with 10/10; " + std::to_string(flipped) + "/10 mutations exit 1";
  return o;
}

template <class M>
bool ring_axioms(const MonoidRing<M>& x, const MonoidRing<M>& y, const MonoidRing<M>& z, const MonoidRing<M>& one) {
  return x + y == y + x && (x + y) + z == x + (y + z) && x * y == y * x && (x * y) * z == x * (y * z) &&
         x * (y + z) == x * y + x * z && x * one == x && (x - x).is_zero();
}

template <class Gen>
auto random_ring_element(testing::Rng& rng, Gen gen) {
  using M = decltype(gen());
  MonoidRing<M> x;
  for (long n = rng.uniform(0, 4); n > 0; --n) x += MonoidRing<M>::basis(gen(), rng.uniform(-5, 5));
  return x;
}

Outcome property_suites() {
  Outcome o;
  testing::Rng rng(0xacce97);
  const int N = kMinPropertyCases;
  std::vector<std::string> done;
  auto suite = [&](const std::string& name, const std::function<bool()>& one_case) {
    int failures = 0;
    for (int i = 0; i < N; ++i) failures += !one_case();
    o.require(failures == 0, name + ": " + std::to_string(failures) + " failures");
    done.push_back(name);
  };

  suite("field norm", [&] {
    auto d = rng.pick(testing::kSampleFields);
    QuadElement x(d, rng.rational(50, 9), rng.rational(50, 9)), y(d, rng.rational(50, 9), rng.rational(50, 9));
    return (x * y).norm() == x.norm() * y.norm();
  });

  auto random_ideal = [&](const QuadOrder& O) {
    auto z = [&] {
      for (;;) {
        auto e = O.element(Rational(rng.uniform(-12, 12)), Rational(rng.uniform(-12, 12)));
        if (!e.is_zero()) return e;
      }
    };
    std::vector<QuadElement> gens{z(), z()};
    return FracIdeal::from_generators(O, gens) * QuadElement(O.d(), make_rational(rng.uniform(1, 5), rng.uniform(1, 5)));
  };
  suite("ideal norm", [&] {
    auto O = maximal_order(rng.pick(testing::kSampleFields));
    FracIdeal I = random_ideal(O), J = random_ideal(O);
    return (I * J).norm() == I.norm() * J.norm();
  });

  std::vector<ClassGroup> groups;
  for (std::int64_t d : {10, -21, -23}) groups.push_back(class_group(maximal_order(d)));
  auto random_module = [&](const ClassGroup& g, long max_rank) {
    auto rank = static_cast<unsigned long>(rng.uniform(0, max_rank));
    const QuadOrder& O = g.elements.front().order();
    return rank == 0 ? ModuleClass::zero(O) : ModuleClass(rank, rng.pick(g.elements));
  };

  suite("free monoid ring axioms", [&] {
    auto word = [&] {
      FreeMonoidElem w;
      for (const char* n : {"g", "h", "k"}) w = w * FreeMonoidElem::generator(n, static_cast<unsigned>(rng.uniform(0, 2)));
      return w;
    };
    return ring_axioms(random_ring_element(rng, word), random_ring_element(rng, word), random_ring_element(rng, word),
                       FreeMonoidRing::basis(FreeMonoidElem()));
  });
  suite("Z[AV] ring axioms", [&] {
    const auto& g = rng.pick(groups);
    auto av = [&] { return tensor_av(random_module(g, 3), "A"); };
    auto one = AVRing::basis(tensor_av(ModuleClass::zero(g.elements.front().order()), "A"));
    return ring_axioms(random_ring_element(rng, av), random_ring_element(rng, av), random_ring_element(rng, av), one);
  });
  suite("direct sum monoid laws", [&] {
    const auto& g = rng.pick(groups);
    auto x = random_module(g, 5), y = random_module(g, 5), z = random_module(g, 5);
    return direct_sum(x, y) == direct_sum(y, x) && direct_sum(direct_sum(x, y), z) == direct_sum(x, direct_sum(y, z)) &&
           direct_sum(ModuleClass::zero(x.order()), x) == x;
  });
  suite("T injectivity", [&] {
    const auto& g = rng.pick(groups);
    auto x = random_module(g, 2), y = random_module(g, 2);
    return (tensor_av(x, "A") == tensor_av(y, "A")) == (x == y);
  });
  suite("discriminant vs root product", [&] {
    std::vector<Integer> roots;
    for (long k = rng.uniform(1, 4); k > 0; --k) roots.emplace_back(rng.uniform(-12, 12));
    return discriminant(oracle::from_roots(roots)) == oracle::root_product_discriminant(roots);
  });
  suite("stability monotonicity", [&] {
    for (;;) {
      auto d = rng.pick(std::vector<std::int64_t>{2, 3, 5, 6, 7, 10, 13});
      long p = rng.pick(std::vector<long>{2, 3, 5, 7, 11, 13});
      auto O = maximal_order(d);
      QuadElement a = O.element(Rational(rng.uniform(-8, 8)), Rational(rng.uniform(-4, 4)));
      if (!satisfies_weil_bound(a, p)) continue;
      WeilQuartic P = frobenius_charpoly(a, p);
      if (!is_irreducible_monic(P.poly())) continue;
      auto full = endomorphism_stability(P, 12);
      auto b = static_cast<unsigned>(rng.uniform(1, 12));
      auto part = endomorphism_stability(P, b);
      return (!full.stable || part.stable) && part.stable == (!full.unstable_at || *full.unstable_at > b);
    }
  });
  if (o.ok) o.detail = std::to_string(done.size()) + " suites x " + std::to_string(N) + " cases, 0 failures";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <kzero cli> <dataset json>\n";
    return 2;
  }
  const std::string cli = argv[1], dataset = argv[2];
  int failed = 0;
  failed += !run_criterion(1, "golden Frobenius polynomial at 17", kGoldenLimit, golden_charpoly);
  failed += !run_criterion(2, "class numbers and brute-force sweep", kClassSweepLimit, class_numbers);
  failed += !run_criterion(3, "nonprincipality in Z[sqrt(10)]", kPrincipalLimit, nonprincipality);
  failed += !run_criterion(4, "Weil quartics and End = Z[sqrt(10)]", kPipelineLimit,
                           [] { return pipeline(kDefaultStabilityBound); });
  failed += !run_criterion(5, "zero-divisor witness", kWitnessLimit, witness);
  failed += !run_criterion(6, "end-to-end verify and mutations", kEndToEndLimit,
                           [&] { return end_to_end(cli, dataset); });
  failed += !run_criterion(7, "property suites", kPropertyLimit, property_suites);
  std::cout << (failed == 0 ? "all 7 criteria pass" : std::to_string(failed) + " of 7 criteria fail") << std::endl;
  return failed == 0 ? 0 : 1;
}
