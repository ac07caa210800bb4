#include "szq/szq.h"

#include <algorithm>
#include <functional>
#include <new>
#include <span>
#include <string>
#include <vector>

#include "szq/error.hpp"
#include "szq/interval_map.hpp"
#include "szq/io.hpp"
#include "szq/measures.hpp"
#include "szq/rulegen.hpp"
#include "szq/validation.hpp"

struct szq_measure {
  szq::MeasureSpec spec;
};

struct szq_rule {
  szq::QuadratureRule rule;
};

struct szq_interval_rule {
  szq::IntervalRule rule;
};

namespace {

thread_local std::string g_last_error;

static_assert(static_cast<int>(szq::ErrorCode::Parse) + 1 == SZQ_ERR_PARSE,
              "status codes must mirror ErrorCode");

template <class F>
szq_status guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return SZQ_OK;
  } catch (const szq::Error& e) {
    g_last_error = e.what();
    return static_cast<szq_status>(static_cast<int>(e.code()) + 1);
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SZQ_ERR_UNKNOWN;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SZQ_ERR_UNKNOWN;
  } catch (...) {
    g_last_error = "unknown failure";
    return SZQ_ERR_UNKNOWN;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw szq::Error(szq::ErrorCode::InvalidArgument, what);
}

std::vector<szq::Complex> to_complex(const szq_complex* p, std::size_t count) {
  require(p != nullptr || count == 0, "null array with nonzero length");
  std::vector<szq::Complex> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = {p[i].re, p[i].im};
  return out;
}

szq_complex from_complex(szq::Complex c) { return {c.real(), c.imag()}; }

szq_status make_measure(szq_measure** out, const std::function<szq::MeasureSpec()>& build) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    *out = new szq_measure{build()};
  });
}

}  // namespace

extern "C" {

const char* szq_last_error(void) { return g_last_error.c_str(); }

const char* szq_status_name(szq_status status) {
  if (status == SZQ_OK) return "ok";
  if (status > SZQ_OK && status <= SZQ_ERR_PARSE) {
    return szq::to_string(static_cast<szq::ErrorCode>(static_cast<int>(status) - 1));
  }
  return "unknown";
}

// ---- measures ---------------------------------------------------------------

szq_status szq_measure_lebesgue(szq_measure** out) {
  return make_measure(out, [] { return szq::MeasureSpec::lebesgue(); });
}

szq_status szq_measure_bernstein_szego(const szq_complex* roots, size_t count, szq_measure** out) {
  return make_measure(out, [&] { return szq::MeasureSpec::bernstein_szego(to_complex(roots, count)); });
}

szq_status szq_measure_geronimus(szq_complex a, szq_measure** out) {
  return make_measure(out, [&] { return szq::MeasureSpec::geronimus({a.re, a.im}); });
}

szq_status szq_measure_verblunsky(const szq_complex* alphas, size_t count, szq_measure** out) {
  return make_measure(out, [&] {
    return szq::MeasureSpec::explicit_verblunsky(szq::VerblunskySequence(to_complex(alphas, count)));
  });
}

szq_status szq_measure_moments(const szq_complex* moments, size_t count, szq_measure** out) {
  return make_measure(out, [&] { return szq::MeasureSpec::explicit_moments(to_complex(moments, count)); });
}

szq_status szq_measure_density(const double* samples, size_t count, szq_measure** out) {
  return make_measure(out, [&] {
    require(samples != nullptr || count == 0, "null samples");
    return szq::MeasureSpec::density_samples(std::vector<double>(samples, samples + count));
  });
}

szq_status szq_measure_interval(const double* power_moments, size_t count, szq_measure** out) {
  return make_measure(out, [&] {
    require(power_moments != nullptr || count == 0, "null moments");
    return szq::interval_measure(std::span<const double>(power_moments, count));
  });
}

szq_status szq_measure_parse(const char* text, szq_measure** out) {
  return make_measure(out, [&] {
    require(text != nullptr, "measure text must not be null");
    return szq::parse_measure(text);
  });
}

void szq_measure_free(szq_measure* measure) { delete measure; }

const char* szq_measure_id(const szq_measure* measure) {
  return measure == nullptr ? "" : measure->spec.id().c_str();
}

szq_status szq_measure_has_density(const szq_measure* measure, int* out) {
  return guarded([&] {
    require(measure != nullptr && out != nullptr, "null argument");
    *out = szq::has_density(measure->spec) ? 1 : 0;
  });
}

szq_status szq_measure_get_moments(const szq_measure* measure, size_t n, szq_complex* out) {
  return guarded([&] {
    require(measure != nullptr && out != nullptr, "null argument");
    const szq::MomentSequence c = szq::moments(measure->spec, n);
    for (std::size_t k = 0; k <= n; ++k) out[k] = from_complex(c[k]);
  });
}

szq_status szq_measure_get_verblunsky(const szq_measure* measure, size_t count, szq_complex* out) {
  return guarded([&] {
    require(measure != nullptr && (out != nullptr || count == 0), "null argument");
    const szq::VerblunskySequence a = szq::verblunsky(measure->spec, count);
    for (std::size_t k = 0; k < count; ++k) out[k] = from_complex(a[k]);
  });
}

szq_status szq_measure_eval_density(const szq_measure* measure, double phi, double* out) {
  return guarded([&] {
    require(measure != nullptr && out != nullptr, "null argument");
    *out = szq::density_eval(measure->spec, phi);
  });
}

szq_status szq_read_interval_moments(const char* path, double* out, size_t capacity, size_t* count) {
  return guarded([&] {
    require(path != nullptr && count != nullptr, "null argument");
    const std::vector<double> m = szq::read_interval_moment_file(path);
    *count = m.size();
    if (out != nullptr) {
      require(capacity >= m.size(), "output buffer too small");
      std::copy(m.begin(), m.end(), out);
    }
  });
}

// ---- rules ------------------------------------------------------------------

szq_status szq_rule_generate(const szq_measure* measure, size_t n, size_t m,
                             const szq_complex* tail, size_t tail_len, szq_complex eta,
                             szq_rule** out) {
  return guarded([&] {
    require(measure != nullptr && out != nullptr, "null argument");
    szq::VerblunskySequence t(to_complex(tail, tail_len));
    *out = new szq_rule{szq::generate_rule(measure->spec, n, m, t, {eta.re, eta.im})};
  });
}

szq_status szq_rule_generate_symmetric(const szq_measure* measure, size_t n, size_t m,
                                       const double* tail, size_t tail_len, int eta_sign,
                                       szq_rule** out) {
  return guarded([&] {
    require(measure != nullptr && out != nullptr, "null argument");
    require(tail != nullptr || tail_len == 0, "null tail");
    *out = new szq_rule{szq::generate_symmetric_rule(
        measure->spec, n, m, std::span<const double>(tail, tail_len), eta_sign)};
  });
}

szq_status szq_eta_for_node(const szq_measure* measure, size_t n, size_t m,
                            const szq_complex* tail, size_t tail_len, double phi0,
                            szq_complex* out) {
  return guarded([&] {
    require(measure != nullptr && out != nullptr, "null argument");
    szq::VerblunskySequence t(to_complex(tail, tail_len));
    *out = from_complex(szq::eta_for_node(measure->spec, n, m, t, phi0));
  });
}

szq_status szq_rule_create(const double* nodes, const double* weights, size_t n, size_t m,
                           szq_rule** out) {
  return guarded([&] {
    require(nodes != nullptr && weights != nullptr && out != nullptr, "null argument");
    *out = new szq_rule{szq::make_rule(std::vector<double>(nodes, nodes + n),
                                       std::vector<double>(weights, weights + n), m)};
  });
}

szq_status szq_rule_read_file(const char* path, long m_override, szq_rule** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    szq::RuleFile rf = szq::read_rule_file(path);
    const std::size_t m = m_override >= 0 ? static_cast<std::size_t>(m_override) : rf.m.value_or(0);
    *out = new szq_rule{szq::make_rule(std::move(rf.nodes), std::move(rf.weights), m, rf.measure_id)};
  });
}

void szq_rule_free(szq_rule* rule) { delete rule; }

size_t szq_rule_size(const szq_rule* rule) { return rule == nullptr ? 0 : rule->rule.nodes.size(); }

size_t szq_rule_m(const szq_rule* rule) { return rule == nullptr ? 0 : rule->rule.m; }

szq_complex szq_rule_eta(const szq_rule* rule) {
  return rule == nullptr ? szq_complex{1.0, 0.0} : from_complex(rule->rule.eta);
}

void szq_rule_nodes(const szq_rule* rule, double* out) {
  if (rule != nullptr && out != nullptr) std::copy(rule->rule.nodes.begin(), rule->rule.nodes.end(), out);
}

void szq_rule_weights(const szq_rule* rule, double* out) {
  if (rule != nullptr && out != nullptr) {
    std::copy(rule->rule.weights.begin(), rule->rule.weights.end(), out);
  }
}

// ---- validation -------------------------------------------------------------

szq_status szq_default_tolerance(const szq_rule* rule, const szq_measure* measure, size_t k_probe,
                                 double* out) {
  return guarded([&] {
    require(rule != nullptr && measure != nullptr && out != nullptr, "null argument");
    *out = szq::default_exactness_tolerance(rule->rule.n, szq::moments(measure->spec, k_probe));
  });
}

szq_status szq_rule_exactness(const szq_rule* rule, const szq_measure* measure, size_t k_probe,
                              double tol, double* errors, long* precise_degree) {
  return guarded([&] {
    require(rule != nullptr && measure != nullptr && precise_degree != nullptr, "null argument");
    const szq::ExactnessReport rep =
        szq::check_exactness(rule->rule, szq::moments(measure->spec, k_probe), k_probe, tol);
    if (errors != nullptr) std::copy(rep.errors.begin(), rep.errors.end(), errors);
    *precise_degree = rep.precise_degree;
  });
}

szq_status szq_rule_caratheodory(const szq_rule* rule, const szq_measure* measure,
                                 double* max_error, int* zeros_in_disk) {
  return guarded([&] {
    require(rule != nullptr && measure != nullptr && max_error != nullptr, "null argument");
    const std::size_t order = rule->rule.n - rule->rule.m - 1;
    const szq::CaratheodoryReport rep =
        szq::caratheodory_match(rule->rule, szq::moments(measure->spec, order));
    *max_error = rep.max_error;
    if (zeros_in_disk != nullptr) *zeros_in_disk = rep.zeros_in_disk ? 1 : 0;
  });
}

szq_status szq_rule_orthogonality(const szq_rule* rule, const szq_measure* measure,
                                  double* max_violation) {
  return guarded([&] {
    require(rule != nullptr && measure != nullptr && max_violation != nullptr, "null argument");
    *max_violation =
        szq::check_orthogonality(rule->rule, szq::moments(measure->spec, rule->rule.n)).max_violation;
  });
}

szq_status szq_rule_interlacing(const szq_rule* rule, const szq_measure* measure, size_t l,
                                szq_complex kappa, size_t* violations) {
  return guarded([&] {
    require(rule != nullptr && measure != nullptr && violations != nullptr, "null argument");
    *violations =
        szq::check_interlacing(rule->rule, measure->spec, l, {kappa.re, kappa.im}).violations;
  });
}

szq_status szq_rule_s_function(const szq_rule* rule, const szq_measure* measure,
                               szq_s_summary* out) {
  return guarded([&] {
    require(rule != nullptr && measure != nullptr && out != nullptr, "null argument");
    const std::size_t n = rule->rule.nodes.size();
    const szq::SFunctionTrace tr = szq::s_function(
        rule->rule, szq::moments(measure->spec, (n + 1) / 2), szq::default_s_samples(n));
    out->max_s_minus_r = tr.max_s_minus_r;
    out->max_weight_recovery = tr.max_weight_recovery;
    out->separation_violations = tr.separation_violations;
    out->samples = tr.samples.size();
    out->skipped_samples = 0;
    for (const bool s : tr.skipped) out->skipped_samples += s ? 1 : 0;
    out->node_first = tr.node_first ? 1 : 0;
  });
}

szq_status szq_asymptotic_sweep(const szq_measure* measure, const size_t* n_list, size_t count,
                                size_t m, szq_complex tail_value, szq_complex eta,
                                szq_sweep_row* rows) {
  return guarded([&] {
    require(measure != nullptr && n_list != nullptr && rows != nullptr, "null argument");
    const std::vector<szq::AsymptoticRow> rep = szq::asymptotic_report(
        measure->spec, std::span<const std::size_t>(n_list, count), [m](std::size_t) { return m; },
        szq::constant_tail({tail_value.re, tail_value.im}), {eta.re, eta.im});
    for (std::size_t i = 0; i < count; ++i) {
      rows[i] = szq_sweep_row{rep[i].n, rep[i].max_asym_dev, rep[i].precise_degree};
    }
  });
}

szq_trend szq_sweep_trend(const szq_sweep_row* rows, size_t count) {
  std::vector<szq::AsymptoticRow> r(count);
  for (std::size_t i = 0; i < count; ++i) r[i].max_asym_dev = rows[i].max_asym_dev;
  return static_cast<szq_trend>(szq::deviation_trend(r));
}

const char* szq_trend_name(szq_trend trend) {
  return szq::to_string(static_cast<szq::Trend>(trend));
}

// ---- interval ---------------------------------------------------------------

szq_status szq_rule_to_interval(const szq_rule* rule, szq_interval_rule** out) {
  return guarded([&] {
    require(rule != nullptr && out != nullptr, "null argument");
    *out = new szq_interval_rule{szq::circle_to_interval(rule->rule)};
  });
}

void szq_interval_rule_free(szq_interval_rule* rule) { delete rule; }

size_t szq_interval_rule_size(const szq_interval_rule* rule) {
  return rule == nullptr ? 0 : rule->rule.x.size();
}

size_t szq_interval_rule_degree(const szq_interval_rule* rule) {
  return rule == nullptr ? 0 : rule->rule.degree;
}

void szq_interval_rule_x(const szq_interval_rule* rule, double* out) {
  if (rule != nullptr && out != nullptr) std::copy(rule->rule.x.begin(), rule->rule.x.end(), out);
}

void szq_interval_rule_lambda(const szq_interval_rule* rule, double* out) {
  if (rule != nullptr && out != nullptr) {
    std::copy(rule->rule.lambda.begin(), rule->rule.lambda.end(), out);
  }
}

szq_status szq_interval_exactness(const szq_interval_rule* rule, const double* power_moments,
                                  size_t count, size_t degree, double* max_error) {
  return guarded([&] {
    require(rule != nullptr && power_moments != nullptr && max_error != nullptr, "null argument");
    *max_error = szq::check_algebraic_exactness(
        rule->rule, std::span<const double>(power_moments, count), degree);
  });
}

}  // extern "C"
