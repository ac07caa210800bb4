// szq: generate, verify, sweep and transform positive quadrature rules on the
// unit circle. Talks to the library only through the C interface.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "szq/szq.h"

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Library failures raised while a check runs count as check failures (exit 1).
struct CheckError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void ok_or_usage(szq_status st) {
  if (st != SZQ_OK) throw UsageError(std::string(szq_status_name(st)) + ": " + szq_last_error());
}

struct MeasureDeleter {
  void operator()(szq_measure* m) const { szq_measure_free(m); }
};
struct RuleDeleter {
  void operator()(szq_rule* r) const { szq_rule_free(r); }
};
struct IntervalDeleter {
  void operator()(szq_interval_rule* r) const { szq_interval_rule_free(r); }
};
using MeasurePtr = std::unique_ptr<szq_measure, MeasureDeleter>;
using RulePtr = std::unique_ptr<szq_rule, RuleDeleter>;
using IntervalPtr = std::unique_ptr<szq_interval_rule, IntervalDeleter>;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_number(const std::string& s, const char* what) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
    throw UsageError(std::string("cannot parse ") + what + " '" + s + "'");
  }
  return v;
}

// Radians, or turns with a `turns` suffix.
double parse_angle(const std::string& s) {
  const std::string suffix = "turns";
  if (s.size() > suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0) {
    return kTwoPi * parse_number(s.substr(0, s.size() - suffix.size()), "angle");
  }
  return parse_number(s, "angle");
}

szq_complex parse_complex(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) return {parse_number(s, "complex literal"), 0.0};
  return {parse_number(s.substr(0, comma), "complex literal"),
          parse_number(s.substr(comma + 1), "complex literal")};
}

std::vector<szq_complex> parse_tail(const std::vector<std::string>& items) {
  std::vector<szq_complex> out;
  for (const std::string& item : items) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ';')) {
      if (!part.empty()) out.push_back(parse_complex(part));
    }
  }
  return out;
}

std::vector<std::size_t> parse_n_list(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const double v = parse_number(part, "n-list entry");
    if (v < 1.0 || v != std::floor(v)) throw UsageError("n-list entries must be positive integers");
    out.push_back(static_cast<std::size_t>(v));
  }
  if (out.empty()) throw UsageError("n-list is empty");
  return out;
}

double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// m points uniform in the disk of radius 0.9, reproducible from the seed.
std::vector<szq_complex> random_tail(std::uint64_t seed, std::size_t m) {
  std::mt19937_64 gen(seed);
  std::vector<szq_complex> out(m);
  for (auto& c : out) {
    const double r = 0.9 * std::sqrt(uniform01(gen));
    const double t = kTwoPi * uniform01(gen);
    c = {r * std::cos(t), r * std::sin(t)};
  }
  return out;
}

double tolerance_override() {
  const char* env = std::getenv("SZQ_TOL");
  if (env == nullptr || *env == '\0') return 0.0;
  const double v = parse_number(env, "SZQ_TOL");
  if (!(v > 0.0)) throw UsageError("SZQ_TOL must be positive");
  return v;
}

struct Options {
  std::string config;
  std::string measure = "lebesgue";
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<std::string> tail;
  std::string eta = "0";
  std::string format = "json";
  std::string output;
  std::uint64_t seed = 0;
  bool random_tail = false;
  std::string rule;
  std::string n_list;
  long l = -1;
  std::string kappa;
  bool m_from_config = false;
};

std::string json_scalar_string(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return fmt(v.get<double>());
  throw UsageError("config value must be a string or a number");
}

// Fills every option not given on the command line from the config file.
void apply_config(CLI::App& sub, Options& o) {
  if (o.config.empty()) return;
  std::ifstream in(o.config);
  if (!in) throw UsageError("cannot open config file '" + o.config + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("config file: ") + e.what());
  }
  if (!j.is_object()) throw UsageError("config file must hold a JSON object");
  auto unset = [&](const char* flag) {
    CLI::Option* opt = sub.get_option_no_throw(flag);
    return opt != nullptr && opt->count() == 0;
  };
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    const nlohmann::json& v = it.value();
    try {
      if (key == "measure") {
        if (unset("--measure")) o.measure = v.get<std::string>();
      } else if (key == "n") {
        if (unset("--n")) o.n = v.get<std::size_t>();
      } else if (key == "m") {
        if (unset("--m")) {
          o.m = v.get<std::size_t>();
          o.m_from_config = true;
        }
      } else if (key == "tail") {
        if (unset("--tail")) {
          o.tail.clear();
          if (v.is_array()) {
            for (const auto& e : v) o.tail.push_back(e.get<std::string>());
          } else {
            o.tail.push_back(v.get<std::string>());
          }
        }
      } else if (key == "eta") {
        if (unset("--eta")) o.eta = json_scalar_string(v);
      } else if (key == "format") {
        if (unset("--format")) o.format = v.get<std::string>();
      } else if (key == "output") {
        if (unset("--output")) o.output = v.get<std::string>();
      } else if (key == "seed") {
        if (unset("--seed")) o.seed = v.get<std::uint64_t>();
      } else if (key == "random_tail") {
        if (unset("--random-tail")) o.random_tail = v.get<bool>();
      } else if (key == "rule") {
        if (unset("--rule")) o.rule = v.get<std::string>();
      } else if (key == "n_list") {
        if (unset("--n-list")) {
          if (v.is_array()) {
            std::string s;
            for (const auto& e : v) s += (s.empty() ? "" : ",") + std::to_string(e.get<std::size_t>());
            o.n_list = s;
          } else {
            o.n_list = v.get<std::string>();
          }
        }
      } else if (key == "l") {
        if (unset("--l")) o.l = v.get<long>();
      } else if (key == "kappa") {
        if (unset("--kappa")) o.kappa = json_scalar_string(v);
      } else {
        throw UsageError("unknown config key '" + key + "'");
      }
    } catch (const nlohmann::json::exception& e) {
      throw UsageError("config key '" + key + "': " + e.what());
    }
    std::string flag = "--" + key;
    std::replace(flag.begin(), flag.end(), '_', '-');
    if (sub.get_option_no_throw(flag) == nullptr) {
      throw UsageError("config key '" + key + "' does not apply to '" + sub.get_name() + "'");
    }
  }
}

MeasurePtr load_measure(const std::string& text) {
  szq_measure* m = nullptr;
  ok_or_usage(szq_measure_parse(text.c_str(), &m));
  return MeasurePtr(m);
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + o.output + "'");
  out << text;
}

// Largest d with every e_k <= tol for k <= d, probing as far as the measure's
// moments reach (at most n).
long precise_degree(const szq_rule* rule, const szq_measure* measure, double tol,
                    std::vector<double>* errors = nullptr) {
  const std::size_t n = szq_rule_size(rule);
  for (std::size_t probe = n;; --probe) {
    std::vector<double> e(probe + 1);
    long d = -1;
    const szq_status st = szq_rule_exactness(rule, measure, probe, tol, e.data(), &d);
    if (st == SZQ_OK) {
      if (errors != nullptr) *errors = e;
      return d;
    }
    if (st != SZQ_ERR_INSUFFICIENT_MOMENTS || probe == 0) ok_or_usage(st);
  }
}

std::string json_array(const std::vector<double>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + fmt(v[i]);
  return s + "]";
}

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

// ---- generate ---------------------------------------------------------------

int cmd_generate(const Options& o) {
  if (o.n < 1) throw UsageError("--n must be at least 1");
  if (o.format != "json" && o.format != "csv") throw UsageError("--format must be json or csv");
  const MeasurePtr measure = load_measure(o.measure);
  if (o.random_tail && !o.tail.empty()) throw UsageError("--random-tail and --tail are exclusive");
  const std::vector<szq_complex> tail = o.random_tail ? random_tail(o.seed, o.m) : parse_tail(o.tail);
  if (tail.size() != o.m) throw UsageError("tail length must equal m");

  szq_complex eta{1.0, 0.0};
  const std::string node_at = "node-at:";
  if (o.eta.rfind(node_at, 0) == 0) {
    ok_or_usage(szq_eta_for_node(measure.get(), o.n, o.m, tail.data(), tail.size(),
                                 parse_angle(o.eta.substr(node_at.size())), &eta));
  } else {
    const double a = parse_angle(o.eta);
    eta = {std::cos(a), std::sin(a)};
  }

  szq_rule* raw = nullptr;
  ok_or_usage(szq_rule_generate(measure.get(), o.n, o.m, tail.data(), tail.size(), eta, &raw));
  const RulePtr rule(raw);
  std::vector<double> nodes(o.n);
  std::vector<double> weights(o.n);
  szq_rule_nodes(rule.get(), nodes.data());
  szq_rule_weights(rule.get(), weights.data());
  const long degree = precise_degree(rule.get(), measure.get(), tolerance_override());

  std::string out;
  if (o.format == "csv") {
    out = "node_rad,weight\n";
    for (std::size_t s = 0; s < o.n; ++s) out += fmt(nodes[s]) + "," + fmt(weights[s]) + "\n";
  } else {
    out = "{\n";
    out += "  \"n\": " + std::to_string(o.n) + ",\n";
    out += "  \"m\": " + std::to_string(o.m) + ",\n";
    out += "  \"eta\": " + fmt(std::atan2(eta.im, eta.re)) + ",\n";
    out += "  \"measure\": " + json_string(szq_measure_id(measure.get())) + ",\n";
    out += "  \"nodes\": " + json_array(nodes) + ",\n";
    out += "  \"weights\": " + json_array(weights) + ",\n";
    out += "  \"precise_degree\": " + std::to_string(degree) + "\n";
    out += "}\n";
  }
  emit(o, out);
  return 0;
}

// ---- verify -----------------------------------------------------------------

int cmd_verify(const Options& o, bool m_given) {
  if (o.rule.empty()) throw UsageError("--rule is required");
  const MeasurePtr measure = load_measure(o.measure);
  szq_rule* raw = nullptr;
  ok_or_usage(szq_rule_read_file(o.rule.c_str(), m_given ? static_cast<long>(o.m) : -1, &raw));
  const RulePtr rule(raw);
  const std::size_t n = szq_rule_size(rule.get());
  const std::size_t m = szq_rule_m(rule.get());
  std::vector<double> weights(n);
  szq_rule_weights(rule.get(), weights.data());

  std::vector<std::string> failures;
  auto check = [&](szq_status st, const char* what) {
    if (st != SZQ_OK) {
      failures.push_back(std::string(what) + ": " + szq_status_name(st) + ": " + szq_last_error());
      return false;
    }
    return true;
  };

  // exactness
  const double tol_env = tolerance_override();
  std::vector<double> errors;
  const long degree = precise_degree(rule.get(), measure.get(), tol_env, &errors);
  double tol = tol_env;
  if (!(tol > 0.0)) ok_or_usage(szq_default_tolerance(rule.get(), measure.get(), errors.size() - 1, &tol));
  const long required = static_cast<long>(n) - 1 - static_cast<long>(m);
  if (degree < required) {
    failures.push_back("exactness failure at k = " + std::to_string(degree + 1) + " (error " +
                       fmt(errors[static_cast<std::size_t>(degree + 1)]) + ", tolerance " + fmt(tol) + ")");
  }

  double min_weight = weights.empty() ? 0.0 : weights[0];
  for (const double w : weights) min_weight = std::min(min_weight, w);
  if (!(min_weight > 0.0)) failures.push_back("nonpositive weight " + fmt(min_weight));

  // interlacing against a second para-orthogonal family
  const std::size_t l = o.l >= 0 ? static_cast<std::size_t>(o.l) : m;
  szq_complex kappa;
  if (o.kappa.empty()) {
    const szq_complex eta = szq_rule_eta(rule.get());
    kappa = {-eta.re, -eta.im};
  } else {
    const double a = parse_angle(o.kappa);
    kappa = {std::cos(a), std::sin(a)};
  }
  std::size_t interlacing = 0;
  if (check(szq_rule_interlacing(rule.get(), measure.get(), l, kappa, &interlacing), "interlacing") &&
      interlacing > 0) {
    failures.push_back("interlacing: " + std::to_string(interlacing) + " arcs without a node");
  }

  // S-function identity, when the rule is exact enough for it
  szq_s_summary s{};
  const bool s_applicable = n >= 2 && m + 1 <= n / 2;
  if (s_applicable && check(szq_rule_s_function(rule.get(), measure.get(), &s), "s-function")) {
    if (s.max_s_minus_r > 1e-9 * static_cast<double>(n)) {
      failures.push_back("s-function: max |S - R| = " + fmt(s.max_s_minus_r));
    }
    if (s.max_weight_recovery > 1e-10) {
      failures.push_back("s-function: weight recovery error " + fmt(s.max_weight_recovery));
    }
    if (s.separation_violations > 0) {
      failures.push_back("s-function: " + std::to_string(s.separation_violations) +
                         " zero-separation violations");
    }
  }

  double cara = 0.0;
  int in_disk = 0;
  if (check(szq_rule_caratheodory(rule.get(), measure.get(), &cara, &in_disk), "caratheodory")) {
    if (cara > 1e-9) failures.push_back("caratheodory: series mismatch " + fmt(cara));
    if (!in_disk) failures.push_back("caratheodory: p_{n-1} has zeros outside the open disk");
  }

  std::string out = "{\n";
  out += "  \"n\": " + std::to_string(n) + ",\n";
  out += "  \"m\": " + std::to_string(m) + ",\n";
  out += "  \"measure\": " + json_string(szq_measure_id(measure.get())) + ",\n";
  out += "  \"tolerance\": " + fmt(tol) + ",\n";
  out += "  \"exactness\": [";
  for (std::size_t k = 0; k < errors.size(); ++k) {
    out += std::string(k ? ", " : "") + "{\"k\": " + std::to_string(k) + ", \"error\": " + fmt(errors[k]) + "}";
  }
  out += "],\n";
  out += "  \"precise_degree\": " + std::to_string(degree) + ",\n";
  out += "  \"min_weight\": " + fmt(min_weight) + ",\n";
  out += "  \"interlacing_l\": " + std::to_string(l) + ",\n";
  out += "  \"interlacing_violations\": " + std::to_string(interlacing) + ",\n";
  if (s_applicable) {
    out += "  \"max_s_minus_r\": " + fmt(s.max_s_minus_r) + ",\n";
    out += "  \"max_weight_recovery\": " + fmt(s.max_weight_recovery) + ",\n";
    out += "  \"separation_violations\": " + std::to_string(s.separation_violations) + ",\n";
  } else {
    out += "  \"max_s_minus_r\": null,\n";
  }
  out += "  \"caratheodory_error\": " + fmt(cara) + ",\n";
  out += "  \"failures\": [";
  for (std::size_t i = 0; i < failures.size(); ++i) out += (i ? ", " : "") + json_string(failures[i]);
  out += "],\n";
  out += std::string("  \"pass\": ") + (failures.empty() ? "true" : "false") + "\n}\n";
  emit(o, out);
  for (const std::string& f : failures) std::cerr << "szq verify: " << f << "\n";
  return failures.empty() ? 0 : 1;
}

// ---- sweep ------------------------------------------------------------------

int cmd_sweep(const Options& o) {
  if (o.n_list.empty()) throw UsageError("--n-list is required");
  const std::vector<std::size_t> ns = parse_n_list(o.n_list);
  const MeasurePtr measure = load_measure(o.measure);
  int dens = 0;
  ok_or_usage(szq_measure_has_density(measure.get(), &dens));
  if (!dens) throw UsageError(std::string("sweep needs a measure with a density; '") +
                              szq_measure_id(measure.get()) + "' has none");
  const std::vector<szq_complex> tail = parse_tail(o.tail);
  if (tail.size() > 1) throw UsageError("sweep takes a single constant tail value");
  const szq_complex tail_value = tail.empty() ? szq_complex{0.0, 0.0} : tail[0];
  const double a = parse_angle(o.eta);
  const szq_complex eta{std::cos(a), std::sin(a)};

  // One rule per n, generated concurrently; rows are collected in input order.
  std::vector<std::future<std::pair<szq_status, std::string>>> jobs;
  std::vector<szq_sweep_row> rows(ns.size());
  for (std::size_t i = 0; i < ns.size(); ++i) {
    jobs.push_back(std::async(std::launch::async, [&, i] {
      const szq_status st =
          szq_asymptotic_sweep(measure.get(), &ns[i], 1, o.m, tail_value, eta, &rows[i]);
      return std::make_pair(st, std::string(szq_last_error()));
    }));
  }
  for (auto& job : jobs) {
    const auto [st, msg] = job.get();
    if (st != SZQ_OK) throw UsageError(std::string(szq_status_name(st)) + ": " + msg);
  }
  std::string out = "n,max_asym_dev,precise_degree\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + "," + fmt(r.max_asym_dev) + "," + std::to_string(r.precise_degree) + "\n";
  }
  out += std::string("# trend: ") + szq_trend_name(szq_sweep_trend(rows.data(), rows.size())) + "\n";
  emit(o, out);
  return 0;
}

// ---- transform --------------------------------------------------------------

int cmd_transform(const Options& o, bool m_given, bool measure_given) {
  if (o.rule.empty()) throw UsageError("--rule is required");
  szq_rule* raw = nullptr;
  ok_or_usage(szq_rule_read_file(o.rule.c_str(), m_given ? static_cast<long>(o.m) : -1, &raw));
  const RulePtr rule(raw);
  szq_interval_rule* iraw = nullptr;
  const szq_status st = szq_rule_to_interval(rule.get(), &iraw);
  if (st == SZQ_ERR_SYMMETRY_VIOLATION) {
    std::cerr << "szq transform: " << szq_last_error() << "\n";
    return 1;
  }
  ok_or_usage(st);
  const IntervalPtr ir(iraw);
  const std::size_t k = szq_interval_rule_size(ir.get());
  std::vector<double> x(k);
  std::vector<double> lambda(k);
  szq_interval_rule_x(ir.get(), x.data());
  szq_interval_rule_lambda(ir.get(), lambda.data());
  const std::size_t degree = szq_interval_rule_degree(ir.get());

  std::string out = "x,lambda\n";
  for (std::size_t s = 0; s < k; ++s) out += fmt(x[s]) + "," + fmt(lambda[s]) + "\n";
  out += "# degree: " + std::to_string(degree) + "\n";
  int code = 0;
  const std::string prefix = "interval-moments:";
  if (measure_given && o.measure.rfind(prefix, 0) == 0) {
    const std::string path = o.measure.substr(prefix.size());
    std::size_t count = 0;
    ok_or_usage(szq_read_interval_moments(path.c_str(), nullptr, 0, &count));
    std::vector<double> mom(count);
    ok_or_usage(szq_read_interval_moments(path.c_str(), mom.data(), mom.size(), &count));
    double err = 0.0;
    ok_or_usage(szq_interval_exactness(ir.get(), mom.data(), mom.size(),
                                       std::min(degree, mom.size() - 1), &err));
    out += "# max_error: " + fmt(err) + "\n";
    if (err > 1e-10 * static_cast<double>(k + 1)) code = 1;
  }
  emit(o, out);
  return code;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--config", o.config, "JSON config; command-line flags take precedence");
  sub->add_option("--output", o.output, "write to this file instead of stdout");
}

void add_measure(CLI::App* sub, Options& o) {
  sub->add_option("--measure", o.measure,
                  "lebesgue | bernstein-szego:<re,im;...> | geronimus:<re,im> | "
                  "verblunsky:<re,im;...> | moments:<path> | density:<path> | "
                  "interval-moments:<path>");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Positive quadrature rules on the unit circle"};
  app.require_subcommand(1);
  Options o;

  CLI::App* gen = app.add_subcommand("generate", "construct a rule");
  add_common(gen, o);
  add_measure(gen, o);
  gen->add_option("--n", o.n, "number of nodes");
  gen->add_option("--m", o.m, "reduction of the degree of exactness (n-1-m)");
  gen->add_option("--tail", o.tail, "tail coefficients as re,im (repeatable or ';'-separated)");
  gen->add_option("--eta", o.eta, "boundary parameter angle: radians, <x>turns or node-at:<angle>");
  gen->add_option("--format", o.format, "json or csv");
  gen->add_option("--seed", o.seed, "seed for --random-tail");
  gen->add_flag("--random-tail", o.random_tail, "draw the tail from the seed");

  CLI::App* ver = app.add_subcommand("verify", "check a rule file against a measure");
  add_common(ver, o);
  add_measure(ver, o);
  ver->add_option("--rule", o.rule, "rule file (JSON or CSV)");
  ver->add_option("--m", o.m, "override the rule's m");
  ver->add_option("--l", o.l, "interlacing level (default m)");
  ver->add_option("--kappa", o.kappa, "interlacing parameter angle (default opposite to eta)");

  CLI::App* swp = app.add_subcommand("sweep", "weight asymptotics along a list of n");
  add_common(swp, o);
  add_measure(swp, o);
  swp->add_option("--n-list", o.n_list, "comma-separated n values");
  swp->add_option("--m", o.m, "fixed reduction m");
  swp->add_option("--tail", o.tail, "constant tail value re,im");
  swp->add_option("--eta", o.eta, "boundary parameter angle");

  CLI::App* trn = app.add_subcommand("transform", "map a symmetric rule to [-1, 1]");
  add_common(trn, o);
  add_measure(trn, o);
  trn->add_option("--rule", o.rule, "rule file (JSON or CSV)");
  trn->add_option("--m", o.m, "override the rule's m");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    apply_config(*sub, o);
    const bool m_given = sub->get_option_no_throw("--m") != nullptr &&
                         (sub->get_option("--m")->count() > 0 || o.m_from_config);
    if (sub == gen) return cmd_generate(o);
    if (sub == ver) return cmd_verify(o, m_given);
    if (sub == swp) return cmd_sweep(o);
    return cmd_transform(o, m_given, sub->get_option("--measure")->count() > 0);
  } catch (const UsageError& e) {
    std::cerr << "szq: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "szq: " << e.what() << "\n";
    return 2;
  }
}
