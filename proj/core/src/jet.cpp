#include "ncstirling/jet.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace ncs {

namespace {

void require_same_order(const Jet& a, const Jet& b) {
  if (a.order() != b.order()) throw std::invalid_argument("jets of different order");
}

void require_positive_base(const Jet& a, const char* what) {
  if (!(a[0] > 0.0)) {
    throw std::domain_error(std::string(what) + ": constant term must be positive, got " +
                            std::to_string(a[0]));
  }
}

void require_domain(double x0) {
  if (!(x0 > 1.0)) {
    throw std::domain_error("expansion point must satisfy x0 > 1, got " + std::to_string(x0));
  }
}

// Shortest round-trip decimal form.
std::string format_double(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, end};
}

}  // namespace

Jet::Jet(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("jet needs at least one coefficient");
}

double Jet::derivative(std::size_t j) const {
  double f = 1.0;
  for (std::size_t i = 2; i <= j; ++i) f *= static_cast<double>(i);
  return coeffs_.at(j) * f;
}

Jet jet_seed(double x0, std::size_t order) {
  std::vector<double> c(order + 1, 0.0);
  c[0] = x0;
  if (order >= 1) c[1] = 1.0;
  return Jet(std::move(c));
}

Jet jet_constant(double c, std::size_t order) {
  std::vector<double> v(order + 1, 0.0);
  v[0] = c;
  return Jet(std::move(v));
}

Jet jet_add(const Jet& a, const Jet& b) {
  require_same_order(a, b);
  std::vector<double> c(a.order() + 1);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[k] + b[k];
  return Jet(std::move(c));
}

Jet jet_scale(const Jet& a, double s) {
  std::vector<double> c(a.coefficients().begin(), a.coefficients().end());
  for (auto& v : c) v *= s;
  return Jet(std::move(c));
}

Jet jet_mul(const Jet& a, const Jet& b) {
  require_same_order(a, b);
  const std::size_t n = a.order();
  std::vector<double> c(n + 1, 0.0);
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::size_t j = 0; j <= k; ++j) c[k] += a[j] * b[k - j];
  }
  return Jet(std::move(c));
}

Jet jet_exp(const Jet& a) {
  // b = exp(a)  =>  b' = a' b
  const std::size_t n = a.order();
  std::vector<double> b(n + 1, 0.0);
  b[0] = std::exp(a[0]);
  for (std::size_t k = 1; k <= n; ++k) {
    double s = 0.0;
    for (std::size_t j = 1; j <= k; ++j) s += static_cast<double>(j) * a[j] * b[k - j];
    b[k] = s / static_cast<double>(k);
  }
  return Jet(std::move(b));
}

Jet jet_ln(const Jet& a) {
  // b = ln(a)  =>  a b' = a'
  require_positive_base(a, "jet_ln");
  const std::size_t n = a.order();
  std::vector<double> b(n + 1, 0.0);
  b[0] = std::log(a[0]);
  for (std::size_t k = 1; k <= n; ++k) {
    double s = 0.0;
    for (std::size_t j = 1; j < k; ++j) s += static_cast<double>(j) * b[j] * a[k - j];
    b[k] = (a[k] - s / static_cast<double>(k)) / a[0];
  }
  return Jet(std::move(b));
}

Jet jet_pow_real(const Jet& a, double p) {
  // b = a^p  =>  a b' = p a' b
  require_positive_base(a, "jet_pow_real");
  const std::size_t n = a.order();
  std::vector<double> b(n + 1, 0.0);
  b[0] = std::pow(a[0], p);
  for (std::size_t k = 1; k <= n; ++k) {
    double s = 0.0;
    for (std::size_t j = 1; j <= k; ++j) {
      s += (p * static_cast<double>(j) - static_cast<double>(k - j)) * a[j] * b[k - j];
    }
    b[k] = s / (static_cast<double>(k) * a[0]);
  }
  return Jet(std::move(b));
}

double derivative_by_jets(double x0, double alpha, double beta, std::size_t n) {
  require_domain(x0);
  if (n > kMaxJetDerivative) {
    throw std::invalid_argument("derivative_by_jets supports n <= " +
                                std::to_string(kMaxJetDerivative));
  }
  const Jet x = jet_seed(x0, n);
  const Jet f = jet_mul(jet_pow_real(x, -alpha), jet_pow_real(jet_ln(x), beta));
  return f.derivative(n);
}

double real_falling_factorial(double beta, std::size_t i) {
  double r = 1.0;
  for (std::size_t j = 0; j < i; ++j) r *= beta - static_cast<double>(j);
  return r;
}

std::vector<ExpansionTerm> expansion_terms(const NoncentralTriangle& tri, const Rational& alpha,
                                           double beta, std::size_t n) {
  std::vector<ExpansionTerm> out;
  for (std::size_t i = 0; i <= n; ++i) {
    const double falling = real_falling_factorial(beta, i);
    if (falling == 0.0) continue;
    const double s = noncentral_eval(tri, n, i, alpha).to_double();
    out.push_back({i, s * falling, beta - static_cast<double>(i)});
  }
  return out;
}

double evaluate_expansion(const NoncentralTriangle& tri, double x0, const Rational& alpha,
                          double beta, std::size_t n) {
  require_domain(x0);
  const double log_x = std::log(x0);
  double sum = 0.0;
  for (const auto& t : expansion_terms(tri, alpha, beta, n)) {
    sum += t.coefficient * std::pow(log_x, t.log_exponent);
  }
  return std::pow(x0, -alpha.to_double() - static_cast<double>(n)) * sum;
}

double log_power_derivative(const StirlingTable& table, double x0, double beta, std::size_t n) {
  require_domain(x0);
  if (n < 1) throw std::invalid_argument("log_power_derivative: n must be >= 1");
  const double log_x = std::log(x0);
  double sum = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    const double falling = real_falling_factorial(beta, i);
    if (falling == 0.0) continue;
    sum += table.at(n, i).to_double() * falling * std::pow(log_x, beta - static_cast<double>(i));
  }
  return std::pow(x0, -static_cast<double>(n)) * sum;
}

ResidualReport verify_eq1(const NoncentralTriangle& tri, double x0, const Rational& alpha,
                          double beta, std::size_t n, double rel_tol) {
  ResidualReport r;
  r.n = n;
  r.alpha = alpha;
  r.beta = beta;
  r.x0 = x0;
  r.jet_value = derivative_by_jets(x0, alpha.to_double(), beta, n);
  r.expansion_value = evaluate_expansion(tri, x0, alpha, beta, n);
  r.rel_residual =
      std::abs(r.jet_value - r.expansion_value) / std::max(std::abs(r.jet_value), kResidualFloor);
  r.pass = r.rel_residual <= rel_tol;
  return r;
}

OracleGrid OracleGrid::standard() {
  OracleGrid g;
  g.n_max = 8;
  g.alphas = {Rational(-2), Rational(-1), Rational(-1, 2), Rational(0),
              Rational(1, 2), Rational(1), Rational(2)};
  g.betas = {0.0, 0.5, 1.0, 2.0, 2.5};
  g.x0s = {1.5, 2.0, std::numbers::e, 5.0};
  return g;
}

std::vector<ResidualReport> run_oracle_grid(const NoncentralTriangle& tri, const OracleGrid& grid,
                                            double rel_tol) {
  std::vector<ResidualReport> out;
  out.reserve((grid.n_max + 1) * grid.alphas.size() * grid.betas.size() * grid.x0s.size());
  for (std::size_t n = 0; n <= grid.n_max; ++n) {
    for (const auto& alpha : grid.alphas) {
      for (double beta : grid.betas) {
        for (double x0 : grid.x0s) out.push_back(verify_eq1(tri, x0, alpha, beta, n, rel_tol));
      }
    }
  }
  return out;
}

void write_residuals_json(std::ostream& os, std::span<const ResidualReport> reports) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json e;
    e["n"] = r.n;
    e["alpha"] = r.alpha.to_string();
    e["beta"] = format_double(r.beta);
    e["x0"] = format_double(r.x0);
    e["jet_value"] = format_double(r.jet_value);
    e["expansion_value"] = format_double(r.expansion_value);
    e["rel_residual"] = format_double(r.rel_residual);
    e["pass"] = r.pass;
    arr.push_back(std::move(e));
  }
  os << arr.dump(1) << '\n';
}

void write_residuals_csv(std::ostream& os, std::span<const ResidualReport> reports) {
  os << "n,alpha,beta,x0,jet_value,expansion_value,rel_residual,pass\n";
  for (const auto& r : reports) {
    os << r.n << ',' << r.alpha << ',' << format_double(r.beta) << ',' << format_double(r.x0) << ','
       << format_double(r.jet_value) << ',' << format_double(r.expansion_value) << ','
       << format_double(r.rel_residual) << ',' << (r.pass ? "true" : "false") << '\n';
  }
}

}  // namespace ncs
