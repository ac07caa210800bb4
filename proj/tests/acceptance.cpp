// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oracles.hpp"
#include "szq/error.hpp"
#include "szq/interval_map.hpp"
#include "szq/rulegen.hpp"
#include "szq/validation.hpp"

using namespace szq;
using oracle::Random;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

int report(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_s > 0.0 && secs > budget_s) {
    o.pass = false;
    o.detail += "; over time budget " + fmt("%.0fs", budget_s);
  }
  std::printf("criterion %d %s  %s: %s [%.2fs]\n", id, o.pass ? "PASS" : "FAIL", title, o.detail.c_str(), secs);
  std::fflush(stdout);
  return o.pass ? 0 : 1;
}

double max_rel(const std::vector<double>& a, const std::vector<double>& b) {
  double w = 0.0;
  for (std::size_t s = 0; s < a.size(); ++s) w = std::max(w, std::abs(a[s] - b[s]) / std::abs(b[s]));
  return w;
}

MeasureSpec random_measure(Random& rng, std::size_t n) {
  switch (rng.index(0, 3)) {
    case 1:
      return MeasureSpec::bernstein_szego({rng.disk(0.8)});
    case 2:
      return MeasureSpec::explicit_verblunsky(VerblunskySequence(rng.disk_vector(n, 0.8)));
    case 3:
      return MeasureSpec::geronimus(rng.disk(0.5));
    default:
      return MeasureSpec::lebesgue();
  }
}

// 1. Lebesgue golden case.
Outcome lebesgue_golden() {
  double node_err = 0.0;
  double weight_err = 0.0;
  bool degree_ok = true;
  for (std::size_t n : {1u, 2u, 4u, 8u, 16u}) {
    const QuadratureRule r = generate_rule(MeasureSpec::lebesgue(), n, 0, VerblunskySequence(), 1.0);
    for (std::size_t s = 0; s < n; ++s) {
      const double want = (2.0 * static_cast<double>(s) + 1.0) * oracle::kPi / static_cast<double>(n);
      node_err = std::max(node_err, oracle::circular_gap(r.nodes[s], want));
      weight_err = std::max(weight_err, std::abs(r.weights[s] - 1.0 / static_cast<double>(n)));
    }
    const long d = check_exactness(r, moments(MeasureSpec::lebesgue(), n), n).precise_degree;
    degree_ok = degree_ok && d == static_cast<long>(n) - 1;
  }
  return {node_err <= 1e-12 && weight_err <= 1e-13 && degree_ok,
          "max node error " + fmt("%.2e", node_err) + ", max weight error " + fmt("%.2e", weight_err) +
              ", precise degree n-1 " + (degree_ok ? "for all n" : "violated")};
}

// 2. Bernstein-Szego golden case.
Outcome bernstein_szego_golden() {
  const MeasureSpec meas = MeasureSpec::bernstein_szego({0.5});
  const MomentSequence c = moments(meas, 21);
  const auto grid = oracle::grid_moments([](double p) { return oracle::bernstein_szego_density(0.5, p); }, 21);
  double moment_err = 0.0;
  for (std::size_t k = 0; k <= 21; ++k) {
    moment_err = std::max(moment_err, std::abs(c[k] - grid[k]));
    moment_err = std::max(moment_err, std::abs(c[k] - std::pow(0.5, k)));
  }
  bool degree_ok = true;
  bool positive = true;
  double agree = 0.0;
  for (std::size_t n = 1; n <= 20; ++n) {
    const ParaOrthogonalSpec spec = make_spec(meas, n, 0, VerblunskySequence(), 1.0);
    const auto nodes = find_nodes(spec);
    const auto w1 = weights_second_kind(spec, nodes);
    const auto w2 = weights_qm_formula(spec, nodes);
    const auto w3 = weights_vandermonde_oracle(nodes, c, n - 1).weights;
    agree = std::max({agree, max_rel(w2, w1), max_rel(w3, w1), max_rel(w3, w2)});
    for (double w : w1) positive = positive && w > 0.0;
    const QuadratureRule r = generate_rule(meas, n, 0, VerblunskySequence(), 1.0);
    degree_ok = degree_ok && check_exactness(r, c, n).precise_degree == static_cast<long>(n) - 1;
  }
  return {moment_err <= 1e-10 && degree_ok && positive && agree <= 1e-9,
          "moment error vs grid " + fmt("%.2e", moment_err) + ", weight agreement " + fmt("%.2e", agree) +
              (degree_ok ? ", degree n-1 for n <= 20" : ", degree check failed") +
              (positive ? ", weights positive" : ", nonpositive weight")};
}

// 3. Equivalence suite on random specs.
Outcome equivalence_suite() {
  Random rng(3001);
  std::size_t fails = 0;
  double fact = 0.0;
  double cara = 0.0;
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t n = rng.index(1, 20);
    const std::size_t m = rng.index(0, n - 1);
    const MeasureSpec meas = random_measure(rng, n);
    const VerblunskySequence tail(rng.disk_vector(m));
    const Complex eta = rng.unit();
    const ParaOrthogonalSpec spec = make_spec(meas, n, m, tail, eta);
    const QuadratureRule r = generate_rule(meas, n, m, tail, eta);
    const MomentSequence c = moments(meas, n);
    bool ok = check_exactness(r, c, n).precise_degree >= static_cast<long>(n - 1 - m);
    for (double w : r.weights) ok = ok && w > 0.0;
    const double f = factorization_residual(spec);
    const CaratheodoryReport cr = caratheodory_match(r, c);
    const CaratheodoryReport cs = caratheodory_match(spec, c);
    fact = std::max(fact, f);
    cara = std::max({cara, cr.max_error, cs.max_error});
    ok = ok && f <= 1e-11 && cr.max_error <= 1e-9 && cs.max_error <= 1e-9 && cr.zeros_in_disk && cs.zeros_in_disk;
    if (!ok) ++fails;
  }
  return {fails == 0, std::to_string(fails) + "/100 specs failing, max factorization residual " +
                          fmt("%.2e", fact) + ", max series mismatch " + fmt("%.2e", cara)};
}

// 4. S-function suite.
Outcome s_function_suite() {
  Random rng(4001);
  std::size_t fails = 0;
  double sr = 0.0;
  double rec = 0.0;
  std::size_t sep = 0;
  for (int rep = 0; rep < 50; ++rep) {
    const std::size_t n = rng.index(2, 12);
    const std::size_t m = rng.index(0, n / 2 - 1);
    const MeasureSpec meas = random_measure(rng, n);
    const QuadratureRule r = generate_rule(meas, n, m, VerblunskySequence(rng.disk_vector(m)), rng.unit());
    const SFunctionTrace tr = s_function(r, moments(meas, n), default_s_samples(n));
    sr = std::max(sr, tr.max_s_minus_r / static_cast<double>(n));
    rec = std::max(rec, tr.max_weight_recovery);
    sep += tr.separation_violations;
    if (tr.max_s_minus_r > 1e-9 * static_cast<double>(n) || tr.max_weight_recovery > 1e-10 ||
        tr.separation_violations > 0) {
      ++fails;
    }
  }
  return {fails == 0, std::to_string(fails) + "/50 rules failing, max |S-R|/n " + fmt("%.2e", sr) +
                          ", max weight recovery " + fmt("%.2e", rec) + ", separation violations " +
                          std::to_string(sep)};
}

// 5. Interlacing suite.
Outcome interlacing_suite() {
  Random rng(5001);
  std::size_t violations = 0;
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t n = rng.index(1, 20);
    const std::size_t m = rng.index(0, n - 1);
    const std::size_t l = rng.index(m, n - 1);
    const MeasureSpec meas = random_measure(rng, n);
    const QuadratureRule r = generate_rule(meas, n, m, VerblunskySequence(rng.disk_vector(m)), rng.unit());
    violations += check_interlacing(r, meas, l, rng.unit()).violations;
  }
  return {violations == 0, std::to_string(violations) + " empty arcs over 100 triples"};
}

// 6. Weight asymptotics.
Outcome asymptotics() {
  const std::vector<std::size_t> ns{8, 16, 32, 64};
  const auto zero_m = [](std::size_t) -> std::size_t { return 0; };
  const auto bs = asymptotic_report(MeasureSpec::bernstein_szego({0.5}), ns, zero_m, constant_tail(0.0));
  const auto leb = asymptotic_report(MeasureSpec::lebesgue(), ns, zero_m, constant_tail(0.0));
  double leb_max = 0.0;
  for (const auto& r : leb) leb_max = std::max(leb_max, r.max_asym_dev);
  const Trend t = deviation_trend(bs);
  const double final_dev = bs.back().max_asym_dev;
  std::string seq;
  for (const auto& r : bs) seq += (seq.empty() ? "" : " ") + fmt("%.4f", r.max_asym_dev);
  const bool pass = t == Trend::Decreasing && final_dev < 0.02 && leb_max <= 1e-12;
  return {pass, std::string("deviations ") + seq + " (" + to_string(t) + "), final " +
                    fmt("%.4f", final_dev) + " against bound 0.02, lebesgue max " + fmt("%.1e", leb_max)};
}

// 7. Interval transfer.
Outcome interval_transfer() {
  std::vector<double> cheb(40, 0.0);
  cheb[0] = 1.0;
  for (std::size_t k = 2; k < cheb.size(); k += 2) cheb[k] = cheb[k - 2] * static_cast<double>(k - 1) / static_cast<double>(k);
  double worst = 0.0;
  bool lobatto_ok = true;
  for (std::size_t n = 1; n <= 16; ++n) {
    const IntervalRule gc = circle_to_interval(generate_rule(MeasureSpec::lebesgue(), n, 0, VerblunskySequence(), 1.0));
    worst = std::max(worst, check_algebraic_exactness(gc, cheb, gc.degree));
    if (n % 2 == 0) {
      const IntervalRule lob =
          circle_to_interval(generate_rule(MeasureSpec::lebesgue(), n, 0, VerblunskySequence(), -1.0));
      worst = std::max(worst, check_algebraic_exactness(lob, cheb, lob.degree));
      const double mass = std::accumulate(lob.lambda.begin(), lob.lambda.end(), 0.0);
      lobatto_ok = lobatto_ok && lob.has_plus_one && lob.has_minus_one && lob.x.front() == 1.0 &&
                   lob.x.back() == -1.0 && std::abs(mass - 1.0) <= 1e-12;
      for (double l : lob.lambda) lobatto_ok = lobatto_ok && l > 0.0;
    }
  }
  return {worst <= 1e-11 && lobatto_ok, "max algebraic error " + fmt("%.2e", worst) +
                                            (lobatto_ok ? ", lobatto endpoints and mass ok" : ", lobatto check failed")};
}

// 8. CLI determinism and exit codes.
Outcome cli_contract(const std::string& cli) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "szq_acceptance";
  fs::create_directories(dir);
  auto run = [&](const std::string& args, const fs::path& out) {
    const std::string cmd = cli + " " + args + " > " + out.string() + " 2> /dev/null";
    const int st = std::system(cmd.c_str());
    return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  };
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  bool same = true;
  const std::vector<std::string> jobs{
      "generate --measure bernstein-szego:0.5 --n 16 --m 3 --random-tail --seed 7",
      "generate --measure geronimus:0.3,0.1 --n 9 --eta node-at:1.0 --format csv",
      "sweep --measure bernstein-szego:0.5 --n-list 8,16,32,64",
  };
  for (const std::string& job : jobs) {
    const int a = run(job, dir / "a.txt");
    const int b = run(job, dir / "b.txt");
    same = same && a == 0 && b == 0 && slurp(dir / "a.txt") == slurp(dir / "b.txt");
  }
  const fs::path rule = dir / "rule.json";
  const int gen = run("generate --measure bernstein-szego:0.5 --n 10 --m 2 --tail '0.2,0;0.1,0.3'", rule);
  const int good = run("verify --measure bernstein-szego:0.5 --rule " + rule.string(), dir / "v.txt");
  auto doc = nlohmann::json::parse(slurp(rule));
  doc["weights"][4] = doc["weights"][4].get<double>() + 1e-3;
  std::ofstream(dir / "bad.json") << doc.dump();
  const int bad = run("verify --measure bernstein-szego:0.5 --rule " + (dir / "bad.json").string(), dir / "v2.txt");
  const int usage = run("generate --n 4 --m 2 --tail 0.1", dir / "u.txt");
  fs::remove_all(dir);
  const bool pass = same && gen == 0 && good == 0 && bad == 1 && usage == 2;
  return {pass, std::string(same ? "repeated runs byte-identical" : "outputs differ") +
                    ", exit codes generate/verify/perturbed/usage = " + std::to_string(gen) + "/" +
                    std::to_string(good) + "/" + std::to_string(bad) + "/" + std::to_string(usage)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : SZQ_CLI_PATH;
  int failures = 0;
  failures += report(1, "lebesgue golden", 1.0, lebesgue_golden);
  failures += report(2, "bernstein-szego golden", 0.0, bernstein_szego_golden);
  failures += report(3, "equivalence suite", 30.0, equivalence_suite);
  failures += report(4, "s-function suite", 0.0, s_function_suite);
  failures += report(5, "interlacing suite", 0.0, interlacing_suite);
  failures += report(6, "weight asymptotics", 10.0, asymptotics);
  failures += report(7, "interval transfer", 0.0, interval_transfer);
  failures += report(8, "cli determinism and exit codes", 0.0, [&] { return cli_contract(cli); });
  std::printf("%d of 8 criteria failed\n", failures);
  return failures;
}
