#include "ncstirling/identities.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <string>
#include <utility>

#include <json.hpp>

namespace ncs {

namespace {

Rational as_rational(std::size_t v) { return Rational(static_cast<std::int64_t>(v)); }
Rational fact(std::size_t v) { return Rational(ExactInt::factorial(v)); }
Rational sign_of_power(std::size_t e) { return Rational(e % 2 == 0 ? 1 : -1); }
Rational negated(std::size_t a) { return Rational(-static_cast<std::int64_t>(a)); }

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

// sum_{k=0}^{n-1} (k+1) w(n,k+1) x^k with w = signed or unsigned s.
Rational weighted_column_sum(const StirlingTable& table, std::size_t n, const Rational& x,
                             bool unsigned_numbers) {
  Rational sum;
  Rational power(1);
  for (std::size_t k = 0; k < n; ++k) {
    const ExactInt s = unsigned_numbers ? table.unsigned_at(n, k + 1) : table.at(n, k + 1);
    sum += Rational(s * ExactInt(static_cast<std::int64_t>(k + 1))) * power;
    power *= x;
  }
  return sum;
}

}  // namespace

IdentityReport make_report(std::string identity, std::int64_t n, std::optional<Rational> alpha,
                           Rational lhs, Rational rhs) {
  const bool holds = lhs == rhs;
  return {std::move(identity), n, std::move(alpha), std::move(lhs), std::move(rhs), holds};
}

PolyReport make_poly_report(std::string identity, std::int64_t n, std::int64_t k, AlphaPoly lhs,
                            AlphaPoly rhs) {
  const bool holds = lhs == rhs;
  return {std::move(identity), n, k, std::move(lhs), std::move(rhs), holds};
}

AlphaPoly r_polynomial(const StirlingTable& table, std::size_t n) {
  require(n >= 1, "r_polynomial: n must be >= 1");
  std::vector<ExactInt> c(n);
  for (std::size_t k = 0; k < n; ++k) {
    c[k] = ExactInt(static_cast<std::int64_t>(k + 1)) * table.at(n, k + 1);
    if (k % 2 == 1) c[k] = -c[k];
  }
  return AlphaPoly(std::move(c));
}

IdentityReport check_eq6(const StirlingTable& table, std::size_t n, const Rational& alpha) {
  require(n >= 1, "check_eq6: n must be >= 1");
  Rational sum;
  for (std::size_t k = 0; k < n; ++k) {
    sum += sign_of_power(k) * binomial_rational(-alpha, k) / as_rational(n - k);
  }
  // Rational::pow(0) is 1, so alpha = 0 follows the 0^0 = 1 convention.
  return make_report("eq6", static_cast<std::int64_t>(n), alpha, fact(n) * sum,
                     weighted_column_sum(table, n, alpha, /*unsigned_numbers=*/true));
}

IdentityReport check_factorial_identity(const StirlingTable& table, std::size_t n) {
  require(n >= 2, "check_factorial_identity: n must be >= 2");
  return make_report("factorial_identity", static_cast<std::int64_t>(n), Rational(-1),
                     sign_of_power(n) * fact(n - 2),
                     weighted_column_sum(table, n, Rational(1), /*unsigned_numbers=*/false));
}

IdentityReport check_harmonic_sum(const StirlingTable& table, std::size_t n) {
  require(n >= 1, "check_harmonic_sum: n must be >= 1");
  return make_report("harmonic_sum", static_cast<std::int64_t>(n), Rational(1),
                     fact(n) * harmonic(n),
                     weighted_column_sum(table, n, Rational(1), /*unsigned_numbers=*/true));
}

std::vector<IdentityReport> check_negative_alpha_closed_form(std::size_t n, std::size_t alpha_pos) {
  const std::size_t a = alpha_pos;
  require(a >= 1, "check_negative_alpha_closed_form: alpha_pos must be >= 1");
  require(n >= a + 1, "check_negative_alpha_closed_form: requires n >= alpha_pos + 1");
  Rational sum;
  for (std::size_t k = 0; k <= a; ++k) {
    sum += sign_of_power(a - k) * Rational(binomial(ExactInt(static_cast<std::int64_t>(a)), k)) /
           as_rational(n - k);
  }
  const auto nn = static_cast<std::int64_t>(n);
  const Rational alpha = negated(a);
  std::vector<IdentityReport> out;
  out.push_back(make_report("negative_alpha/factorial_form", nn, alpha, fact(n) * sum,
                            fact(a) * fact(n - a - 1)));
  out.push_back(make_report(
      "negative_alpha/reciprocal_binomial_form", nn, alpha, as_rational(a + 1) * sum,
      Rational(binomial(ExactInt(nn), a + 1)).reciprocal()));
  return out;
}

Rational stirling_row_value(const StirlingTable& table, std::size_t n, const Rational& x) {
  require(n <= table.n_max(), "stirling_row_value: n beyond table");
  Rational sum;
  Rational power(1);
  for (std::size_t k = 0; k <= n; ++k) {
    sum += Rational(table.at(n, k)) * power;
    power *= x;
  }
  return sum;
}

Rational harmonic_ratio_form(const StirlingTable& table, std::size_t n, const Rational& x) {
  require(n >= 1 && n <= table.n_max(), "harmonic_ratio_form: n out of range");
  const Rational den = stirling_row_value(table, n, x);
  if (den.is_zero()) {
    throw ZeroDenominatorError("harmonic_ratio_form: sum_k s(" + std::to_string(n) +
                               ",k) x^k vanishes at x = " + x.to_string());
  }
  return weighted_column_sum(table, n, x, /*unsigned_numbers=*/false) / den;
}

std::vector<IdentityReport> check_harmonic_difference(const StirlingTable& table, std::size_t n,
                                                      std::size_t alpha_pos) {
  const std::size_t a = alpha_pos;
  require(n >= 1 && n <= a, "check_harmonic_difference: requires 1 <= n <= alpha_pos");
  const Rational direct = harmonic(a) - harmonic(a - n);
  const ExactInt big_a(static_cast<std::int64_t>(a));

  Rational sum;
  for (std::size_t k = 0; k < n; ++k) {
    sum += sign_of_power(k) * Rational(binomial(big_a, k)) / as_rational(n - k);
  }
  const Rational sum_form = sign_of_power(n + 1) / Rational(binomial(big_a, n)) * sum;

  const auto nn = static_cast<std::int64_t>(n);
  const Rational alpha = negated(a);
  std::vector<IdentityReport> out;
  out.push_back(make_report("harmonic_difference/binomial_sum", nn, alpha, direct, sum_form));
  out.push_back(make_report("harmonic_difference/stirling_ratio", nn, alpha, direct,
                            harmonic_ratio_form(table, n, Rational(big_a))));
  return out;
}

std::vector<IdentityReport> check_hn_formulas(const StirlingTable& table, std::size_t n) {
  require(n >= 1, "check_hn_formulas: n must be >= 1");
  const ExactInt big_n(static_cast<std::int64_t>(n));
  Rational sum;
  for (std::size_t k = 0; k < n; ++k) {
    sum += sign_of_power(k) * Rational(binomial(big_n, k)) / as_rational(n - k);
  }
  const Rational binomial_form = sign_of_power(n + 1) * sum;
  const Rational power_form =
      weighted_column_sum(table, n, Rational(big_n), /*unsigned_numbers=*/false) / fact(n);

  const auto nn = static_cast<std::int64_t>(n);
  const Rational h = harmonic(n);
  std::vector<IdentityReport> out;
  out.push_back(make_report("harmonic_number/binomial_form", nn, Rational(big_n), h, binomial_form));
  out.push_back(make_report("harmonic_number/power_form", nn, Rational(big_n), h, power_form));
  return out;
}

IdentityReport check_q_against_triangle(const NoncentralTriangle& tri, std::size_t n,
                                        std::size_t alpha_pos) {
  const std::size_t a = alpha_pos;
  require(a >= 1 && n >= a + 1, "check_q_against_triangle: requires n >= alpha_pos + 1 >= 2");
  const Rational alpha = negated(a);
  return make_report("negative_alpha/triangle", static_cast<std::int64_t>(n), alpha,
                     noncentral_eval(tri, n, 1, alpha),
                     sign_of_power(n - a - 1) * fact(a) * fact(n - a - 1));
}

IdentityReport check_h_against_triangle(const NoncentralTriangle& tri, std::size_t n,
                                        std::size_t alpha_pos) {
  const std::size_t a = alpha_pos;
  require(n >= 1 && n <= a, "check_h_against_triangle: requires 1 <= n <= alpha_pos");
  const Rational alpha = negated(a);
  return make_report("harmonic_difference/triangle", static_cast<std::int64_t>(n), alpha,
                     noncentral_eval(tri, n, 1, alpha),
                     (harmonic(a) - harmonic(a - n)) * fact(a) / fact(a - n));
}

SuiteOptions SuiteOptions::for_order(std::size_t n_max, std::uint64_t seed) {
  SuiteOptions o;
  o.n_max = n_max;
  o.alpha_int_bound = n_max;
  o.neg_alpha_max = n_max == 0 ? 0 : n_max - 1;
  o.harmonic_alpha_max = n_max;
  o.seed = seed;
  return o;
}

std::size_t SuiteOptions::required_order() const { return std::max(n_max, harmonic_alpha_max); }

bool SuiteResult::all_hold() const { return failures() == 0; }

std::size_t SuiteResult::failures() const {
  const auto bad_poly = std::count_if(poly.begin(), poly.end(), [](const auto& r) { return !r.holds; });
  const auto bad_scalar =
      std::count_if(scalar.begin(), scalar.end(), [](const auto& r) { return !r.holds; });
  return static_cast<std::size_t>(bad_poly + bad_scalar);
}

std::vector<Rational> sample_rationals(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> num(-50, 50);
  std::uniform_int_distribution<std::int64_t> den(1, 20);
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto p = num(rng);
    const auto q = den(rng);
    out.emplace_back(ExactInt(p), ExactInt(q));
  }
  return out;
}

std::vector<PolyReport> run_triangle_checks(const NoncentralTriangle& recurrence,
                                            const NoncentralTriangle& explicit_form,
                                            const StirlingTable& table) {
  const std::size_t n_max = recurrence.n_max();
  require(explicit_form.n_max() >= n_max && table.n_max() >= n_max,
          "run_triangle_checks: triangle orders differ");
  std::vector<PolyReport> out;

  if (n_max >= 1) {
    out.push_back(make_poly_report("known_value", 1, 0, recurrence.at(1, 0), AlphaPoly{0, -1}));
    out.push_back(make_poly_report("known_value", 1, 1, recurrence.at(1, 1), AlphaPoly{1}));
  }
  if (n_max >= 2) {
    out.push_back(make_poly_report("known_value", 2, 1, recurrence.at(2, 1), AlphaPoly{-1, -2}));
  }

  for (std::size_t n = 0; n <= n_max; ++n) {
    const auto nn = static_cast<std::int64_t>(n);
    for (std::size_t k = 0; k <= n; ++k) {
      out.push_back(make_poly_report("construction_agreement", nn, static_cast<std::int64_t>(k),
                                     recurrence.at(n, k), explicit_form.at(n, k)));
    }
    out.push_back(make_poly_report("boundary_column", nn, 0, recurrence.at(n, 0),
                                   falling_factorial_poly(n)));
    out.push_back(make_poly_report("boundary_diagonal", nn, nn, recurrence.at(n, n), AlphaPoly{1}));
    const auto row = table.row(n);
    out.push_back(make_poly_report("classical_row_expansion", nn, 0,
                                   AlphaPoly(std::vector<ExactInt>(row.begin(), row.end())),
                                   AlphaPoly(stirling_expansion_oracle(n))));
    if (n >= 1) {
      out.push_back(make_poly_report("r_polynomial", nn, 1, r_polynomial(table, n),
                                     recurrence.at(n, 1)));
    }
  }
  return out;
}

SuiteResult run_suite(const NoncentralTriangle& recurrence, const NoncentralTriangle& explicit_form,
                      const StirlingTable& table, const SuiteOptions& opts) {
  const std::size_t order = opts.required_order();
  require(recurrence.n_max() >= order && explicit_form.n_max() >= order && table.n_max() >= order,
          "run_suite: tables must reach order " + std::to_string(order));

  SuiteResult result;
  result.seed = opts.seed;
  result.poly = run_triangle_checks(recurrence, explicit_form, table);
  auto& out = result.scalar;
  const std::size_t N = opts.n_max;

  for (std::size_t n = 0; n <= recurrence.n_max(); ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      out.push_back(make_report("specialization_alpha0", static_cast<std::int64_t>(n), Rational(0),
                                noncentral_eval(recurrence, n, k, Rational(0)),
                                Rational(table.at(n, k))));
    }
  }

  const auto random_alphas = sample_rationals(
      opts.seed, std::max(opts.eq6_random_alphas, opts.column_random_alphas));
  std::vector<Rational> eq6_alphas;
  const auto bound = static_cast<std::int64_t>(opts.alpha_int_bound);
  for (std::int64_t a = -bound; a <= bound; ++a) eq6_alphas.emplace_back(a);
  eq6_alphas.insert(eq6_alphas.end(), random_alphas.begin(),
                    random_alphas.begin() + static_cast<std::ptrdiff_t>(opts.eq6_random_alphas));
  for (std::size_t n = 1; n <= N; ++n) {
    for (const auto& alpha : eq6_alphas) out.push_back(check_eq6(table, n, alpha));
  }

  for (std::size_t n = 1; n <= N; ++n) {
    const auto nn = static_cast<std::int64_t>(n);
    for (std::size_t i = 0; i < opts.column_random_alphas; ++i) {
      const Rational& alpha = random_alphas[i];
      const Rational from_triangle = noncentral_eval(recurrence, n, 1, alpha);
      out.push_back(make_report("column1/sum_formula", nn, alpha, from_triangle,
                                s_n1_sum_formula(n, alpha)));
      out.push_back(make_report("column1/recurrence", nn, alpha, from_triangle,
                                s_n1_recurrence(n, alpha)));
    }
  }

  for (std::size_t n = 2; n <= N; ++n) out.push_back(check_factorial_identity(table, n));
  for (std::size_t n = 1; n <= N; ++n) out.push_back(check_harmonic_sum(table, n));

  for (std::size_t a = 1; a <= opts.neg_alpha_max; ++a) {
    for (std::size_t n = a + 1; n <= N; ++n) {
      for (auto& r : check_negative_alpha_closed_form(n, a)) out.push_back(std::move(r));
      out.push_back(check_q_against_triangle(recurrence, n, a));
    }
  }

  for (std::size_t a = 1; a <= opts.harmonic_alpha_max; ++a) {
    for (std::size_t n = 1; n <= a; ++n) {
      for (auto& r : check_harmonic_difference(table, n, a)) out.push_back(std::move(r));
      out.push_back(check_h_against_triangle(recurrence, n, a));
    }
  }

  for (std::size_t n = 1; n <= N; ++n) {
    for (auto& r : check_hn_formulas(table, n)) out.push_back(std::move(r));
  }
  return result;
}

void write_suite_json(std::ostream& os, const SuiteResult& result) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["seed"] = std::to_string(result.seed);
  doc["all_hold"] = result.all_hold();
  auto reports = ordered_json::array();
  for (const auto& r : result.poly) {
    ordered_json e;
    e["kind"] = "polynomial";
    e["identity"] = r.identity;
    e["n"] = r.n;
    e["k"] = r.k;
    e["lhs"] = r.lhs.to_strings();
    e["rhs"] = r.rhs.to_strings();
    e["holds"] = r.holds;
    reports.push_back(std::move(e));
  }
  for (const auto& r : result.scalar) {
    ordered_json e;
    e["kind"] = "scalar";
    e["identity"] = r.identity;
    e["n"] = r.n;
    e["alpha"] = r.alpha ? ordered_json(r.alpha->to_string()) : ordered_json(nullptr);
    e["lhs"] = r.lhs.to_string();
    e["rhs"] = r.rhs.to_string();
    e["holds"] = r.holds;
    reports.push_back(std::move(e));
  }
  doc["reports"] = std::move(reports);
  os << doc.dump(1) << '\n';
}

void write_suite_csv(std::ostream& os, const SuiteResult& result) {
  os << "identity,n,alpha,holds\n";
  for (const auto& r : result.poly) {
    os << r.identity << "[k=" << r.k << "]," << r.n << ",," << (r.holds ? "true" : "false") << '\n';
  }
  for (const auto& r : result.scalar) {
    os << r.identity << ',' << r.n << ',' << (r.alpha ? r.alpha->to_string() : "") << ','
       << (r.holds ? "true" : "false") << '\n';
  }
}

}  // namespace ncs
