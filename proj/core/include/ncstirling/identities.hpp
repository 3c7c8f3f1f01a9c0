// Exact verification of the harmonic-number and factorial identities that
// follow from the column k = 1 of the non-central triangle.
//
// Every check computes both sides in exact rational arithmetic and compares
// them with ==. There is no tolerance anywhere in this module.
//
// Sign conventions are fixed per identity, since they differ:
//   * check_eq6 and check_harmonic_sum use UNSIGNED Stirling numbers;
//   * check_factorial_identity, the ratio form of check_harmonic_difference
//     and the power form of check_hn_formulas use SIGNED ones.

#ifndef NCSTIRLING_IDENTITIES_HPP
#define NCSTIRLING_IDENTITIES_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncstirling/exact.hpp"
#include "ncstirling/noncentral.hpp"
#include "ncstirling/stirling.hpp"

namespace ncs {

/// Outcome of one scalar identity at one parameter point.
struct IdentityReport {
  std::string identity;
  std::int64_t n = 0;
  std::optional<Rational> alpha;
  Rational lhs;
  Rational rhs;
  bool holds = false;
};

/// Outcome of one polynomial identity, e.g. two constructions of s(n,k,alpha).
struct PolyReport {
  std::string identity;
  std::int64_t n = 0;
  std::int64_t k = 0;
  AlphaPoly lhs;
  AlphaPoly rhs;
  bool holds = false;
};

/// Raised by the ratio form of the harmonic difference when its
/// denominator sum_k s(n,k) alpha^k = (alpha)_n vanishes.
class ZeroDenominatorError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

IdentityReport make_report(std::string identity, std::int64_t n, std::optional<Rational> alpha,
                           Rational lhs, Rational rhs);
PolyReport make_poly_report(std::string identity, std::int64_t n, std::int64_t k, AlphaPoly lhs,
                            AlphaPoly rhs);

/// r(n,1,alpha) = sum_{k=0}^{n-1} (k+1) s(n,k+1) (-alpha)^k.
AlphaPoly r_polynomial(const StirlingTable& table, std::size_t n);

/// n! sum_k (-1)^k C(-alpha,k)/(n-k)  vs  sum_k (k+1) |s(n,k+1)| alpha^k, with 0^0 = 1.
IdentityReport check_eq6(const StirlingTable& table, std::size_t n, const Rational& alpha);

/// (-1)^n (n-2)!  vs  sum_k (k+1) s(n,k+1). Requires n >= 2.
IdentityReport check_factorial_identity(const StirlingTable& table, std::size_t n);

/// n! H_n  vs  sum_k (k+1) |s(n,k+1)|. Requires n >= 1.
IdentityReport check_harmonic_sum(const StirlingTable& table, std::size_t n);

/// For a = alpha_pos >= 1 and n >= a + 1, two reports:
///   n! sum_{k=0}^{a} (-1)^(a-k) C(a,k)/(n-k)     vs  a! (n-a-1)!
///   (a+1) sum_{k=0}^{a} (-1)^(a-k) C(a,k)/(n-k)  vs  1 / C(n,a+1)
std::vector<IdentityReport> check_negative_alpha_closed_form(std::size_t n, std::size_t alpha_pos);

/// sum_{k=0}^{n} s(n,k) x^k. Throws std::invalid_argument beyond the table.
Rational stirling_row_value(const StirlingTable& table, std::size_t n, const Rational& x);

/// [sum_k (k+1) s(n,k+1) x^k] / [sum_k s(n,k) x^k]. Throws
/// ZeroDenominatorError when the denominator vanishes.
Rational harmonic_ratio_form(const StirlingTable& table, std::size_t n, const Rational& x);

/// For 1 <= n <= a = alpha_pos, compares H_a - H_{a-n} against the binomial
/// sum form and the signed-Stirling ratio form (two reports).
std::vector<IdentityReport> check_harmonic_difference(const StirlingTable& table, std::size_t n,
                                                      std::size_t alpha_pos);

/// Compares harmonic(n) against both closed forms (two reports).
std::vector<IdentityReport> check_hn_formulas(const StirlingTable& table, std::size_t n);

/// s(n,1,-a) from the triangle vs (-1)^(n-a-1) a! (n-a-1)!, for n >= a + 1.
IdentityReport check_q_against_triangle(const NoncentralTriangle& tri, std::size_t n,
                                        std::size_t alpha_pos);

/// s(n,1,-a) from the triangle vs (H_a - H_{a-n}) a!/(a-n)!, for 1 <= n <= a.
IdentityReport check_h_against_triangle(const NoncentralTriangle& tri, std::size_t n,
                                        std::size_t alpha_pos);

/// Ranges for a full verification run.
struct SuiteOptions {
  std::size_t n_max = 20;
  /// The master identity is checked at every integer alpha in [-alpha_int_bound, alpha_int_bound].
  std::size_t alpha_int_bound = 20;
  std::size_t eq6_random_alphas = 30;
  std::size_t column_random_alphas = 20;
  /// Negative-alpha closed forms for 1 <= a <= neg_alpha_max, a+1 <= n <= n_max.
  std::size_t neg_alpha_max = 19;
  /// Harmonic difference for 1 <= n <= a <= harmonic_alpha_max.
  std::size_t harmonic_alpha_max = 20;
  std::uint64_t seed = 0;

  /// Ranges that scale with n_max alone.
  static SuiteOptions for_order(std::size_t n_max, std::uint64_t seed = 0);
  /// Largest n any check touches.
  [[nodiscard]] std::size_t required_order() const;
};

struct SuiteResult {
  std::uint64_t seed = 0;
  std::vector<PolyReport> poly;
  std::vector<IdentityReport> scalar;

  [[nodiscard]] bool all_hold() const;
  [[nodiscard]] std::size_t failures() const;
};

/// Rationals with numerators uniform in [-50,50] and denominators uniform in
/// [1,20], drawn from a seeded std::mt19937_64.
std::vector<Rational> sample_rationals(std::uint64_t seed, std::size_t count);

/// Polynomial checks on a pair of triangles: known small values, construction
/// agreement, boundary rows, classical-row expansion and r(n,1,alpha).
std::vector<PolyReport> run_triangle_checks(const NoncentralTriangle& recurrence,
                                            const NoncentralTriangle& explicit_form,
                                            const StirlingTable& table);

/// Every check in this module over the ranges in `opts`. Both triangles and
/// the table must reach opts.required_order().
SuiteResult run_suite(const NoncentralTriangle& recurrence, const NoncentralTriangle& explicit_form,
                      const StirlingTable& table, const SuiteOptions& opts);

/// JSON document {"seed": "..", "reports": [..]} with every number as a
/// decimal string.
void write_suite_json(std::ostream& os, const SuiteResult& result);
/// Header "identity,n,alpha,holds".
void write_suite_csv(std::ostream& os, const SuiteResult& result);

}  // namespace ncs

#endif  // NCSTIRLING_IDENTITIES_HPP
