#include "ncstirling/exact.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace ncs {

// ---------------------------------------------------------------------------
// ExactInt

ExactInt::ExactInt(std::int64_t v) {
  static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 platform expected");
  value_ = static_cast<long>(v);
}

ExactInt ExactInt::from_string(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size() ||
      !std::all_of(text.begin() + static_cast<std::ptrdiff_t>(i), text.end(),
                   [](unsigned char c) { return std::isdigit(c) != 0; })) {
    throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
  }
  // mpz_class rejects a leading '+'.
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return ExactInt(mpz_class(digits, 10));
}

ExactInt ExactInt::factorial(std::uint64_t n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return ExactInt(std::move(r));
}

ExactInt ExactInt::gcd(const ExactInt& a, const ExactInt& b) {
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
  return ExactInt(std::move(r));
}

ExactInt ExactInt::abs() const { return ExactInt(mpz_class(::abs(value_))); }

ExactInt ExactInt::pow(std::uint64_t e) const {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), value_.get_mpz_t(), e);
  return ExactInt(std::move(r));
}

bool ExactInt::fits_int64() const { return value_.fits_slong_p(); }

std::int64_t ExactInt::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("ExactInt does not fit in int64: " + to_string());
  return value_.get_si();
}

double ExactInt::to_double() const { return value_.get_d(); }

std::string ExactInt::to_string() const { return value_.get_str(10); }

ExactInt operator-(const ExactInt& a) { return ExactInt(mpz_class(-a.value_)); }
ExactInt operator+(const ExactInt& a, const ExactInt& b) { return ExactInt(mpz_class(a.value_ + b.value_)); }
ExactInt operator-(const ExactInt& a, const ExactInt& b) { return ExactInt(mpz_class(a.value_ - b.value_)); }
ExactInt operator*(const ExactInt& a, const ExactInt& b) { return ExactInt(mpz_class(a.value_ * b.value_)); }

ExactInt operator/(const ExactInt& a, const ExactInt& b) {
  if (b.is_zero()) throw std::domain_error("ExactInt division by zero");
  return ExactInt(mpz_class(a.value_ / b.value_));
}

ExactInt operator%(const ExactInt& a, const ExactInt& b) {
  if (b.is_zero()) throw std::domain_error("ExactInt modulo by zero");
  return ExactInt(mpz_class(a.value_ % b.value_));
}

ExactInt& ExactInt::operator+=(const ExactInt& b) {
  value_ += b.value_;
  return *this;
}

ExactInt& ExactInt::operator-=(const ExactInt& b) {
  value_ -= b.value_;
  return *this;
}

ExactInt& ExactInt::operator*=(const ExactInt& b) {
  value_ *= b.value_;
  return *this;
}

bool operator==(const ExactInt& a, const ExactInt& b) { return cmp(a.value_, b.value_) == 0; }

std::strong_ordering operator<=>(const ExactInt& a, const ExactInt& b) {
  return cmp(a.value_, b.value_) <=> 0;
}

std::ostream& operator<<(std::ostream& os, const ExactInt& v) { return os << v.to_string(); }

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(ExactInt num, ExactInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("Rational with zero denominator");
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  ExactInt g = ExactInt::gcd(num_, den_);
  if (g != ExactInt(1)) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  // gcd(0, d) = d, so zero always lands on 0/1.
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(ExactInt::from_string(text));
  auto den = ExactInt::from_string(text.substr(slash + 1));
  if (den.is_zero()) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return {ExactInt::from_string(text.substr(0, slash)), den};
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero");
  return {den_, num_};
}

Rational Rational::pow(std::uint64_t e) const {
  // Already reduced, and powers of coprime integers stay coprime.
  Rational r;
  r.num_ = num_.pow(e);
  r.den_ = den_.pow(e);
  return r;
}

double Rational::to_double() const {
  mpq_class q(num_.value_, den_.value_);
  return q.get_d();
}

std::string Rational::to_string() const {
  if (is_integer()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

Rational operator-(const Rational& a) {
  Rational r = a;
  r.num_ = -r.num_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

Rational operator-(const Rational& a, const Rational& b) {
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

Rational operator*(const Rational& a, const Rational& b) { return {a.num_ * b.num_, a.den_ * b.den_}; }

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational division by zero");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return (a.num_ * b.den_) <=> (b.num_ * a.den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

// ---------------------------------------------------------------------------
// AlphaPoly

AlphaPoly::AlphaPoly(std::vector<ExactInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

AlphaPoly::AlphaPoly(std::initializer_list<std::int64_t> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (auto c : coeffs) coeffs_.emplace_back(c);
  trim();
}

AlphaPoly AlphaPoly::constant(ExactInt c) { return AlphaPoly(std::vector<ExactInt>{std::move(c)}); }

AlphaPoly AlphaPoly::monomial(std::size_t k, ExactInt c) {
  std::vector<ExactInt> v(k + 1);
  v[k] = std::move(c);
  return AlphaPoly(std::move(v));
}

void AlphaPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

ExactInt AlphaPoly::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : ExactInt(0);
}

ExactInt AlphaPoly::leading() const { return coeffs_.empty() ? ExactInt(0) : coeffs_.back(); }

Rational AlphaPoly::evaluate(const Rational& x) const {
  // Horner over a common denominator: p(a/b) = (sum c_k a^k b^(d-k)) / b^d.
  if (coeffs_.empty()) return {};
  const ExactInt& a = x.numerator();
  const ExactInt& b = x.denominator();
  ExactInt acc = coeffs_.back();
  ExactInt bpow(1);
  for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) {
    bpow *= b;
    acc = acc * a + *it * bpow;
  }
  return {acc, bpow};
}

double AlphaPoly::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

AlphaPoly AlphaPoly::scaled(const ExactInt& c) const {
  std::vector<ExactInt> v;
  v.reserve(coeffs_.size());
  for (const auto& x : coeffs_) v.push_back(x * c);
  return AlphaPoly(std::move(v));
}

AlphaPoly operator-(const AlphaPoly& a) { return a.scaled(ExactInt(-1)); }

AlphaPoly operator+(const AlphaPoly& a, const AlphaPoly& b) {
  const auto& longer = a.coeffs_.size() >= b.coeffs_.size() ? a : b;
  const auto& shorter = &longer == &a ? b : a;
  std::vector<ExactInt> v = longer.coeffs_;
  for (std::size_t i = 0; i < shorter.coeffs_.size(); ++i) v[i] += shorter.coeffs_[i];
  return AlphaPoly(std::move(v));
}

AlphaPoly operator-(const AlphaPoly& a, const AlphaPoly& b) { return a + (-b); }

AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<ExactInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return AlphaPoly(std::move(v));
}

std::string AlphaPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const ExactInt& c = coeffs_[k];
    if (c.is_zero()) continue;
    ExactInt mag = c.abs();
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (k == 0 || mag != ExactInt(1)) out += mag.to_string();
    if (k >= 1) out += "a";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

std::vector<std::string> AlphaPoly::to_strings() const {
  std::vector<std::string> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(c.to_string());
  return v;
}

AlphaPoly AlphaPoly::from_strings(std::span<const std::string> coeffs) {
  std::vector<ExactInt> v;
  v.reserve(coeffs.size());
  for (const auto& s : coeffs) v.push_back(ExactInt::from_string(s));
  return AlphaPoly(std::move(v));
}

AlphaPoly poly_add(const AlphaPoly& a, const AlphaPoly& b) { return a + b; }
AlphaPoly poly_mul(const AlphaPoly& a, const AlphaPoly& b) { return a * b; }
Rational poly_eval(const AlphaPoly& p, const Rational& x) { return p.evaluate(x); }

AlphaPoly falling_factorial_poly(std::size_t k) {
  AlphaPoly r{1};
  for (std::size_t j = 0; j < k; ++j) {
    // factor (-alpha - j)
    r = r * AlphaPoly(std::vector<ExactInt>{ExactInt(-static_cast<std::int64_t>(j)), ExactInt(-1)});
  }
  return r;
}

ExactInt falling_factorial(const ExactInt& x, std::size_t k) {
  ExactInt r(1);
  for (std::size_t j = 0; j < k; ++j) r *= x - ExactInt(static_cast<std::int64_t>(j));
  return r;
}

Rational falling_factorial(const Rational& x, std::size_t k) {
  // (a/b)_k = prod (a - j b) / b^k
  const ExactInt& a = x.numerator();
  const ExactInt& b = x.denominator();
  ExactInt num(1);
  for (std::size_t j = 0; j < k; ++j) num *= a - ExactInt(static_cast<std::int64_t>(j)) * b;
  return {num, b.pow(k)};
}

ExactInt binomial(const ExactInt& n, std::size_t k) {
  return falling_factorial(n, k) / ExactInt::factorial(k);
}

Rational binomial_rational(const Rational& x, std::size_t k) {
  return falling_factorial(x, k) / Rational(ExactInt::factorial(k));
}

}  // namespace ncs
