// Truncated Taylor (jet) arithmetic in binary64, used as an independent
// numerical oracle for the derivative expansion
//
//   f(x) = x^-alpha ln^beta x
//   f^(n)(x) = x^(-alpha-n) sum_{i=0}^{n} s(n,i,alpha) (beta)_i ln^(beta-i) x
//
// A jet of order n holds c_j = f^(j)(x0) / j! for j = 0..n. Jets combined in
// one expression must share the same order.

#ifndef NCSTIRLING_JET_HPP
#define NCSTIRLING_JET_HPP

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "ncstirling/exact.hpp"
#include "ncstirling/noncentral.hpp"
#include "ncstirling/stirling.hpp"

namespace ncs {

class Jet {
 public:
  explicit Jet(std::vector<double> coeffs);

  [[nodiscard]] std::size_t order() const { return coeffs_.size() - 1; }
  [[nodiscard]] std::span<const double> coefficients() const { return coeffs_; }
  [[nodiscard]] double operator[](std::size_t j) const { return coeffs_[j]; }
  /// j! c_j, the j-th derivative at the expansion point.
  [[nodiscard]] double derivative(std::size_t j) const;

 private:
  std::vector<double> coeffs_;
};

/// Jet of the identity function at x0: [x0, 1, 0, ...].
Jet jet_seed(double x0, std::size_t order);
Jet jet_constant(double c, std::size_t order);

Jet jet_add(const Jet& a, const Jet& b);
Jet jet_scale(const Jet& a, double s);
Jet jet_mul(const Jet& a, const Jet& b);
Jet jet_exp(const Jet& a);
/// Throws std::domain_error when a[0] <= 0.
Jet jet_ln(const Jet& a);
/// a^p by the power recurrence a b' = p a' b. For integer p the
/// coefficients beyond order p come out as exact zeros. Throws
/// std::domain_error when a[0] <= 0.
Jet jet_pow_real(const Jet& a, double p);

inline constexpr std::size_t kMaxJetDerivative = 12;

/// f^(n)(x0) for f(x) = x^-alpha ln^beta x, from the order-n jet of
/// pow(x, -alpha) * pow(ln x, beta). Requires x0 > 1 and n <= 12; throws
/// std::domain_error or std::invalid_argument otherwise.
double derivative_by_jets(double x0, double alpha, double beta, std::size_t n);

/// (beta)_i = beta (beta-1) ... (beta-i+1) by direct product.
double real_falling_factorial(double beta, std::size_t i);

/// One term s(n,i,alpha) (beta)_i of the expansion, with the log exponent
/// beta - i it multiplies.
struct ExpansionTerm {
  std::size_t i = 0;
  double coefficient = 0.0;
  double log_exponent = 0.0;
};

/// Nonvanishing expansion terms; terms with (beta)_i == 0 are dropped.
std::vector<ExpansionTerm> expansion_terms(const NoncentralTriangle& tri, const Rational& alpha,
                                           double beta, std::size_t n);

/// x0^(-alpha-n) sum_i s(n,i,alpha) (beta)_i ln^(beta-i) x0.
/// Requires x0 > 1 and n <= tri.n_max().
double evaluate_expansion(const NoncentralTriangle& tri, double x0, const Rational& alpha,
                          double beta, std::size_t n);

/// d^n/dx^n ln^beta x = x^-n sum_{i=1}^{n} s(n,i) (beta)_i ln^(beta-i) x,
/// for n >= 1, from classical Stirling numbers.
double log_power_derivative(const StirlingTable& table, double x0, double beta, std::size_t n);

struct ResidualReport {
  std::size_t n = 0;
  Rational alpha;
  double beta = 0.0;
  double x0 = 0.0;
  double jet_value = 0.0;
  double expansion_value = 0.0;
  double rel_residual = 0.0;
  bool pass = false;
};

inline constexpr double kResidualFloor = 1e-300;

/// |jet - expansion| / max(|jet|, 1e-300); passes iff <= rel_tol.
ResidualReport verify_eq1(const NoncentralTriangle& tri, double x0, const Rational& alpha,
                          double beta, std::size_t n, double rel_tol);

struct OracleGrid {
  std::size_t n_max = 8;
  std::vector<Rational> alphas;
  std::vector<double> betas;
  std::vector<double> x0s;

  /// n <= 8, alpha in {-2,-1,-1/2,0,1/2,1,2}, beta in {0,1/2,1,2,5/2},
  /// x0 in {3/2, 2, e, 5}.
  static OracleGrid standard();
};

std::vector<ResidualReport> run_oracle_grid(const NoncentralTriangle& tri, const OracleGrid& grid,
                                            double rel_tol);

/// JSON array of {n, alpha, beta, x0, jet_value, expansion_value,
/// rel_residual, pass}; numbers other than n are decimal strings.
void write_residuals_json(std::ostream& os, std::span<const ResidualReport> reports);
void write_residuals_csv(std::ostream& os, std::span<const ResidualReport> reports);

}  // namespace ncs

#endif  // NCSTIRLING_JET_HPP
