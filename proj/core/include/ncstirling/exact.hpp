// Exact arithmetic substrate: arbitrary-precision integers, reduced
// rationals and dense integer polynomials in a single indeterminate alpha.
//
// All three types are immutable values. Operations return new values and
// never mutate their operands, so instances can be shared across threads.

#ifndef NCSTIRLING_EXACT_HPP
#define NCSTIRLING_EXACT_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace ncs {

/// Signed arbitrary-precision integer.
class ExactInt {
 public:
  ExactInt() = default;
  ExactInt(std::int64_t v);  // NOLINT(google-explicit-constructor)

  /// Parses an optionally signed decimal string. Throws std::invalid_argument.
  static ExactInt from_string(std::string_view text);

  static ExactInt factorial(std::uint64_t n);
  static ExactInt gcd(const ExactInt& a, const ExactInt& b);

  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] ExactInt abs() const;
  [[nodiscard]] ExactInt pow(std::uint64_t e) const;
  [[nodiscard]] bool fits_int64() const;
  [[nodiscard]] std::int64_t to_int64() const;
  [[nodiscard]] double to_double() const;
  [[nodiscard]] std::string to_string() const;

  friend ExactInt operator-(const ExactInt& a);
  friend ExactInt operator+(const ExactInt& a, const ExactInt& b);
  friend ExactInt operator-(const ExactInt& a, const ExactInt& b);
  friend ExactInt operator*(const ExactInt& a, const ExactInt& b);
  /// Truncating division. Throws std::domain_error on a zero divisor.
  friend ExactInt operator/(const ExactInt& a, const ExactInt& b);
  friend ExactInt operator%(const ExactInt& a, const ExactInt& b);

  ExactInt& operator+=(const ExactInt& b);
  ExactInt& operator-=(const ExactInt& b);
  ExactInt& operator*=(const ExactInt& b);

  friend bool operator==(const ExactInt& a, const ExactInt& b);
  friend std::strong_ordering operator<=>(const ExactInt& a, const ExactInt& b);

  friend std::ostream& operator<<(std::ostream& os, const ExactInt& v);

 private:
  friend class Rational;
  explicit ExactInt(mpz_class v) : value_(std::move(v)) {}

  mpz_class value_;
};

/// Exact ratio of two ExactInts, always stored reduced with a positive
/// denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t v) : num_(v), den_(1) {}  // NOLINT
  Rational(ExactInt v) : num_(std::move(v)), den_(1) {}  // NOLINT
  /// Throws std::domain_error when den is zero.
  Rational(ExactInt num, ExactInt den);

  /// Accepts "p", "-p" and "p/q". Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  [[nodiscard]] const ExactInt& numerator() const { return num_; }
  [[nodiscard]] const ExactInt& denominator() const { return den_; }
  [[nodiscard]] int sign() const { return num_.sign(); }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
  [[nodiscard]] bool is_integer() const { return den_ == ExactInt(1); }
  [[nodiscard]] Rational reciprocal() const;
  /// Integer power. pow(0) is 1 for every base, including zero.
  [[nodiscard]] Rational pow(std::uint64_t e) const;
  [[nodiscard]] double to_double() const;
  /// "p" for integers, otherwise "p/q".
  [[nodiscard]] std::string to_string() const;

  friend Rational operator-(const Rational& a);
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  /// Throws std::domain_error on a zero divisor.
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& v);

 private:
  ExactInt num_;
  ExactInt den_;
};

/// Dense polynomial in alpha with integer coefficients, stored low-to-high.
/// The highest stored coefficient is nonzero; the zero polynomial is empty.
class AlphaPoly {
 public:
  AlphaPoly() = default;
  explicit AlphaPoly(std::vector<ExactInt> coeffs);
  AlphaPoly(std::initializer_list<std::int64_t> coeffs);

  static AlphaPoly constant(ExactInt c);
  /// The monomial alpha^k.
  static AlphaPoly monomial(std::size_t k, ExactInt c = ExactInt(1));

  [[nodiscard]] std::span<const ExactInt> coefficients() const { return coeffs_; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the polynomial; -1 for zero.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of alpha^k, zero beyond the degree.
  [[nodiscard]] ExactInt coefficient(std::size_t k) const;
  [[nodiscard]] ExactInt leading() const;

  [[nodiscard]] Rational evaluate(const Rational& x) const;
  [[nodiscard]] double evaluate(double x) const;

  [[nodiscard]] AlphaPoly scaled(const ExactInt& c) const;

  friend AlphaPoly operator-(const AlphaPoly& a);
  friend AlphaPoly operator+(const AlphaPoly& a, const AlphaPoly& b);
  friend AlphaPoly operator-(const AlphaPoly& a, const AlphaPoly& b);
  friend AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b);

  friend bool operator==(const AlphaPoly& a, const AlphaPoly& b) = default;

  /// Human-readable form such as "-2a - 1", used in diagnostics.
  [[nodiscard]] std::string to_string() const;
  /// Decimal-string coefficients, low-to-high.
  [[nodiscard]] std::vector<std::string> to_strings() const;
  static AlphaPoly from_strings(std::span<const std::string> coeffs);

 private:
  void trim();

  std::vector<ExactInt> coeffs_;
};

AlphaPoly poly_add(const AlphaPoly& a, const AlphaPoly& b);
AlphaPoly poly_mul(const AlphaPoly& a, const AlphaPoly& b);
Rational poly_eval(const AlphaPoly& p, const Rational& x);

/// (-alpha)_k = (-alpha)(-alpha-1)...(-alpha-k+1) as a polynomial in alpha.
/// (-alpha)_0 = 1.
AlphaPoly falling_factorial_poly(std::size_t k);

/// Falling factorial (x)_k = x(x-1)...(x-k+1) of an exact value; (x)_0 = 1.
ExactInt falling_factorial(const ExactInt& x, std::size_t k);
Rational falling_factorial(const Rational& x, std::size_t k);

/// C(n, k) = (n)_k / k! for any integer n, including negative n.
ExactInt binomial(const ExactInt& n, std::size_t k);
/// Generalized binomial C(x, k) = (x)_k / k! at rational x.
Rational binomial_rational(const Rational& x, std::size_t k);

}  // namespace ncs

#endif  // NCSTIRLING_EXACT_HPP
