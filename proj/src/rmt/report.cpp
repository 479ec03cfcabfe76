#include "halfperm/rmt/report.hpp"

#include <cmath>
#include <sstream>

namespace halfperm {

namespace {

using nlohmann::json;

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

// "1", "3/2".
std::string short_rational(Rational q) {
  q.canonicalize();
  return q.get_str();
}

std::string render(double v) { return number(v).dump(); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

}  // namespace

json config_to_json(const EnsembleConfig& cfg) {
  return json{{"N", cfg.N},
              {"M", cfg.M},
              {"p", cfg.p},
              {"samples", cfg.samples},
              {"seed", cfg.seed},
              {"c", short_rational(cfg.c)},
              {"c_prime", short_rational(cfg.c_prime())}};
}

json report_to_json(const MomentReport& r) {
  json stats = json::array();
  for (const auto& s : r.statistics)
    stats.push_back({{"key", s.key},
                     {"mean", number(s.mean.real())},
                     {"mean_imag", number(s.mean.imag())},
                     {"se_mean", number(s.se_mean)},
                     {"predicted_mean", s.predicted_mean ? number(*s.predicted_mean) : json(nullptr)},
                     {"pass", s.pass ? json(*s.pass) : json(nullptr)}});
  json cov = json::array();
  for (const auto& c : r.covariance)
    cov.push_back({{"key_a", c.key_a},
                   {"key_b", c.key_b},
                   {"estimator", c.estimator},
                   {"estimate", number(c.estimate.real())},
                   {"estimate_imag", number(c.estimate.imag())},
                   {"se", number(c.se)},
                   {"predicted", number(c.predicted)},
                   {"predicted_poly", c.predicted_poly},
                   {"pass", c.pass}});
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"identity", c.identity},
                      {"instance", c.instance},
                      {"pass", c.pass},
                      {"detail", c.detail},
                      {"residual", number(c.residual)}});
  return json{{"experiment", r.experiment},
              {"config", config_to_json(r.config)},
              {"statistics", stats},
              {"covariance", cov},
              {"checks", checks},
              {"seed", r.config.seed},
              {"elapsed_s", r.elapsed_s},
              {"pass", r.pass()}};
}

std::string report_csv(const MomentReport& r) {
  std::ostringstream os;
  os << "key_a,key_b,estimator,estimate,estimate_imag,se,predicted,predicted_poly,pass\n";
  for (const auto& c : r.covariance)
    os << csv_field(c.key_a) << ',' << csv_field(c.key_b) << ',' << c.estimator << ',' << render(c.estimate.real())
       << ',' << render(c.estimate.imag()) << ',' << render(c.se) << ',' << render(c.predicted) << ','
       << csv_field(c.predicted_poly) << ',' << (c.pass ? "true" : "false") << '\n';
  return os.str();
}

std::string report_text(const MomentReport& r) {
  std::ostringstream os;
  const auto& g = r.config;
  os << r.experiment << ": N=" << g.N << " M=" << g.M << " p=" << g.p << " samples=" << g.samples
     << " seed=" << g.seed << " c=" << short_rational(g.c) << " c'=" << short_rational(g.c_prime()) << "\n";
  os << "means\n";
  for (const auto& s : r.statistics) {
    os << "  " << s.key << "  mean " << render(s.mean.real());
    if (s.mean.imag() != 0) os << " + " << render(s.mean.imag()) << "i";
    os << "  se " << render(s.se_mean);
    if (s.predicted_mean) os << "  predicted " << render(*s.predicted_mean);
    if (s.pass) os << (*s.pass ? "  PASS" : "  FAIL");
    os << "\n";
  }
  if (!r.covariance.empty()) os << "covariances\n";
  for (const auto& c : r.covariance) {
    os << "  " << c.estimator << "(" << c.key_a << ", " << c.key_b << ")  " << render(c.estimate.real());
    if (c.estimate.imag() != 0) os << " + " << render(c.estimate.imag()) << "i";
    os << "  se " << render(c.se) << "  predicted " << render(c.predicted) << " [" << c.predicted_poly << "]"
       << (c.pass ? "  PASS" : "  FAIL") << "\n";
  }
  if (!r.checks.empty()) os << "checks\n";
  for (const auto& c : r.checks)
    os << "  " << c.identity << " | " << c.instance << "  " << render(c.residual) << (c.pass ? "  PASS" : "  FAIL")
       << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
  os << (r.pass() ? "PASS" : "FAIL") << "  elapsed " << render(r.elapsed_s) << " s\n";
  return os.str();
}

}  // namespace halfperm
