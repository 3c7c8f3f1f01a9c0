#include <doctest.h>

#include <set>
#include <sstream>
#include <stdexcept>

#include "ncstirling/identities.hpp"

using namespace ncs;

namespace {

Rational q(std::int64_t p, std::int64_t d) { return {ExactInt(p), ExactInt(d)}; }

const StirlingTable& table20() {
  static const StirlingTable t = build_stirling_table(20);
  return t;
}

}  // namespace

TEST_SUITE("identity_suite") {

TEST_CASE("r_polynomial") {
  const auto& t = table20();
  CHECK(r_polynomial(t, 1) == AlphaPoly{1});
  CHECK(r_polynomial(t, 2) == AlphaPoly{-1, -2});
  CHECK(r_polynomial(t, 3) == AlphaPoly{2, 6, 3});
  CHECK_THROWS_AS(r_polynomial(t, 0), std::invalid_argument);

  const auto tri = build_by_recurrence(20);
  for (std::size_t n = 1; n <= 20; ++n) CHECK(r_polynomial(t, n) == tri.at(n, 1));
}

TEST_CASE("eq6 worked points") {
  const auto& t = table20();
  auto r = check_eq6(t, 2, Rational(1));
  CHECK(r.lhs == Rational(3));
  CHECK(r.rhs == Rational(3));
  CHECK(r.holds);

  r = check_eq6(t, 1, Rational(0));
  CHECK(r.lhs == Rational(1));
  CHECK(r.holds);

  r = check_eq6(t, 3, Rational(1));
  CHECK(r.lhs == Rational(11));
  CHECK(r.rhs == Rational(11));
  CHECK(r.identity == "eq6");
  CHECK(r.alpha == Rational(1));
}

TEST_CASE("eq6 over integers and random rationals") {
  const auto& t = table20();
  const auto randoms = sample_rationals(0, 30);
  for (std::size_t n = 1; n <= 20; ++n) {
    for (std::int64_t a = -static_cast<std::int64_t>(n); a <= static_cast<std::int64_t>(n); ++a) {
      CHECK(check_eq6(t, n, Rational(a)).holds);
    }
    for (const auto& a : randoms) CHECK(check_eq6(t, n, a).holds);
  }
}

TEST_CASE("factorial identity") {
  const auto& t = table20();
  CHECK(check_factorial_identity(t, 2).lhs == Rational(1));
  CHECK(check_factorial_identity(t, 3).lhs == Rational(-1));
  CHECK(check_factorial_identity(t, 3).rhs == Rational(-1));
  CHECK(check_factorial_identity(t, 4).rhs == Rational(2));
  for (std::size_t n = 2; n <= 20; ++n) CHECK(check_factorial_identity(t, n).holds);
  CHECK_THROWS_AS(check_factorial_identity(t, 1), std::invalid_argument);
}

TEST_CASE("harmonic sum identity") {
  const auto& t = table20();
  CHECK(check_harmonic_sum(t, 1).holds);
  CHECK(check_harmonic_sum(t, 3).lhs == Rational(11));
  CHECK(check_harmonic_sum(t, 4).lhs == Rational(50));
  CHECK(check_harmonic_sum(t, 4).rhs == Rational(50));
  for (std::size_t n = 1; n <= 20; ++n) CHECK(check_harmonic_sum(t, n).holds);
  CHECK_THROWS_AS(check_harmonic_sum(t, 0), std::invalid_argument);
}

TEST_CASE("negative alpha closed form") {
  auto r = check_negative_alpha_closed_form(2, 1);
  REQUIRE(r.size() == 2);
  CHECK(r[0].lhs == Rational(1));
  CHECK(r[0].rhs == Rational(1));
  CHECK(r[1].lhs == Rational(1));
  CHECK(r[1].rhs == Rational(1));

  r = check_negative_alpha_closed_form(3, 2);
  CHECK(r[0].lhs == Rational(2));
  CHECK(r[0].rhs == Rational(2));

  for (std::size_t a = 1; a <= 12; ++a) {
    for (std::size_t n = a + 1; n <= 20; ++n) {
      for (const auto& rep : check_negative_alpha_closed_form(n, a)) CHECK(rep.holds);
    }
  }
  CHECK_THROWS_AS(check_negative_alpha_closed_form(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(check_negative_alpha_closed_form(5, 0), std::invalid_argument);
}

TEST_CASE("triangle matches q for n >= 1 - alpha") {
  const auto tri = build_by_recurrence(20);
  for (std::size_t a = 1; a <= 19; ++a) {
    for (std::size_t n = a + 1; n <= 20; ++n) CHECK(check_q_against_triangle(tri, n, a).holds);
  }
  CHECK(check_q_against_triangle(tri, 2, 1).lhs == Rational(1));
  CHECK_THROWS_AS(check_q_against_triangle(tri, 3, 3), std::invalid_argument);
}

TEST_CASE("harmonic difference") {
  const auto& t = table20();
  auto r = check_harmonic_difference(t, 1, 2);
  REQUIRE(r.size() == 2);
  CHECK(r[0].lhs == q(1, 2));
  CHECK(r[0].rhs == q(1, 2));

  r = check_harmonic_difference(t, 2, 2);
  CHECK(r[0].lhs == q(3, 2));
  CHECK(r[0].rhs == q(3, 2));

  r = check_harmonic_difference(t, 2, 3);
  CHECK(r[1].lhs == q(5, 6));
  CHECK(r[1].rhs == q(5, 6));
  CHECK(harmonic_ratio_form(t, 2, Rational(3)) == q(5, 6));

  for (std::size_t a = 1; a <= 20; ++a) {
    for (std::size_t n = 1; n <= a; ++n) {
      for (const auto& rep : check_harmonic_difference(t, n, a)) CHECK(rep.holds);
    }
  }
  CHECK_THROWS_AS(check_harmonic_difference(t, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(check_harmonic_difference(t, 0, 2), std::invalid_argument);
}

TEST_CASE("ratio form reports a vanishing denominator distinctly") {
  const auto& t = table20();
  // sum_k s(3,k) 2^k = (2)_3 = 0
  CHECK(stirling_row_value(t, 3, Rational(2)) == Rational(0));
  CHECK_THROWS_AS(harmonic_ratio_form(t, 3, Rational(2)), ZeroDenominatorError);
  CHECK_THROWS_AS(harmonic_ratio_form(t, 21, Rational(30)), std::invalid_argument);
}

TEST_CASE("triangle matches h for 1 <= n <= -alpha") {
  const auto tri = build_by_recurrence(20);
  for (std::size_t a = 1; a <= 20; ++a) {
    for (std::size_t n = 1; n <= a; ++n) CHECK(check_h_against_triangle(tri, n, a).holds);
  }
  CHECK(check_h_against_triangle(tri, 1, 5).rhs == Rational(1));
  CHECK_THROWS_AS(check_h_against_triangle(tri, 6, 5), std::invalid_argument);
}

TEST_CASE("H_n formulas") {
  const auto& t = table20();
  auto r = check_hn_formulas(t, 2);
  REQUIRE(r.size() == 2);
  CHECK(r[0].rhs == q(3, 2));
  CHECK(r[1].rhs == q(3, 2));
  r = check_hn_formulas(t, 3);
  CHECK(r[1].rhs == q(11, 6));
  for (std::size_t n = 1; n <= 20; ++n) {
    for (const auto& rep : check_hn_formulas(t, n)) CHECK(rep.holds);
  }
  CHECK_THROWS_AS(check_hn_formulas(t, 0), std::invalid_argument);
}

TEST_CASE("the power form of H_n needs signed Stirling numbers") {
  // With unsigned numbers the n = 2 power form gives (1 + 4)/2 = 5/2, not H_2.
  const auto& t = table20();
  Rational unsigned_form;
  for (std::size_t k = 0; k < 2; ++k) {
    unsigned_form += Rational(t.unsigned_at(2, k + 1) * ExactInt(static_cast<std::int64_t>(k + 1))) *
                     Rational(2).pow(k);
  }
  unsigned_form = unsigned_form / Rational(2);
  CHECK(unsigned_form == q(5, 2));
  CHECK(unsigned_form != harmonic(2));
}

TEST_CASE("report equality is exact") {
  const auto r = make_report("x", 1, std::nullopt, q(1, 3), q(2, 6));
  CHECK(r.holds);
  CHECK_FALSE(make_report("x", 1, std::nullopt, q(1, 3), q(1, 4)).holds);
  CHECK_FALSE(make_poly_report("p", 1, 0, AlphaPoly{1}, AlphaPoly{1, 1}).holds);
}

TEST_CASE("sample_rationals is deterministic and in range") {
  const auto a = sample_rationals(42, 100);
  CHECK(a == sample_rationals(42, 100));
  CHECK(a != sample_rationals(43, 100));
  std::set<std::string> distinct;
  for (const auto& r : a) {
    // reduced p/q with |p| <= 50 and q <= 20 before reduction
    CHECK(r.denominator() <= ExactInt(20));
    CHECK(r.numerator().abs() <= ExactInt(50));
    distinct.insert(r.to_string());
  }
  CHECK(distinct.size() > 50);
}

TEST_CASE("full suite at order 12 holds and records its seed") {
  const auto opts = SuiteOptions::for_order(12, 77);
  const auto table = build_stirling_table(opts.required_order());
  const auto rec = build_by_recurrence(opts.required_order());
  const auto exp = build_by_explicit(opts.required_order(), table);
  const auto result = run_suite(rec, exp, table, opts);
  CHECK(result.seed == 77);
  CHECK(result.all_hold());
  CHECK(result.failures() == 0);

  std::set<std::string> names;
  for (const auto& r : result.poly) names.insert(r.identity);
  for (const auto& r : result.scalar) names.insert(r.identity);
  for (const char* expected :
       {"known_value", "construction_agreement", "boundary_column", "boundary_diagonal",
        "classical_row_expansion", "r_polynomial", "specialization_alpha0", "eq6",
        "column1/sum_formula", "column1/recurrence", "factorial_identity", "harmonic_sum",
        "negative_alpha/factorial_form", "negative_alpha/reciprocal_binomial_form",
        "negative_alpha/triangle", "harmonic_difference/binomial_sum",
        "harmonic_difference/stirling_ratio", "harmonic_difference/triangle",
        "harmonic_number/binomial_form", "harmonic_number/power_form"}) {
    CHECK_MESSAGE(names.count(expected) == 1, expected);
  }
}

TEST_CASE("suite detects a single corrupted coefficient") {
  const auto opts = SuiteOptions::for_order(6);
  const auto table = build_stirling_table(6);
  const auto rec = build_by_recurrence(6);
  const auto exp = build_by_explicit(6, table);
  for (std::size_t n = 0; n <= 6; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      for (std::size_t p = 0; p <= n - k; ++p) {
        const auto bad = rec.with_perturbed_coefficient(n, k, p, ExactInt(1));
        CHECK_FALSE(run_suite(bad, exp, table, opts).all_hold());
      }
    }
  }
}

TEST_CASE("suite rejects undersized tables") {
  const auto opts = SuiteOptions::for_order(8);
  const auto table = build_stirling_table(6);
  CHECK_THROWS_AS(run_suite(build_by_recurrence(6), build_by_explicit(6), table, opts),
                  std::invalid_argument);
}

TEST_CASE("report serialization") {
  SuiteResult result;
  result.seed = 3;
  result.scalar.push_back(make_report("eq6", 2, q(1, 2), q(-3, 2), q(-3, 2)));
  result.poly.push_back(make_poly_report("construction_agreement", 2, 1, AlphaPoly{-1, -2},
                                         AlphaPoly{-1, -2}));
  std::ostringstream csv;
  write_suite_csv(csv, result);
  CHECK(csv.str() ==
        "identity,n,alpha,holds\nconstruction_agreement[k=1],2,,true\neq6,2,1/2,true\n");

  std::ostringstream json;
  write_suite_json(json, result);
  const std::string s = json.str();
  CHECK(s.find(R"("seed": "3")") != std::string::npos);
  CHECK(s.find(R"("alpha": "1/2")") != std::string::npos);
  CHECK(s.find(R"("lhs": "-3/2")") != std::string::npos);
  CHECK(s.find(R"("all_hold": true)") != std::string::npos);
}

}  // TEST_SUITE
