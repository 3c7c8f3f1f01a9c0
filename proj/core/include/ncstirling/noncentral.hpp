// Non-central Stirling numbers of the first kind s(n,k,alpha) as integer
// polynomials in alpha.
//
// s(n,k,alpha) is the coefficient family in
//
//   d^n/dx^n [x^-alpha ln^beta x] = x^(-alpha-n) sum_i s(n,i,alpha) (beta)_i ln^(beta-i) x
//
// Two independent constructions are provided and must agree exactly:
//
//   recurrence:  s(n+1,i,alpha) = (-alpha-n) s(n,i,alpha) + s(n,i-1,alpha)
//   explicit:    s(n,i,alpha)   = sum_{k=0}^{n-i} C(n,k) (-alpha)_k s(n-k,i)
//
// with s(0,0,alpha) = 1. At alpha = 0 both reduce to the classical s(n,k).

#ifndef NCSTIRLING_NONCENTRAL_HPP
#define NCSTIRLING_NONCENTRAL_HPP

#include <cstddef>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "ncstirling/exact.hpp"
#include "ncstirling/stirling.hpp"

namespace ncs {

enum class Construction { kRecurrence, kExplicit };

std::string_view to_string(Construction c);
/// Accepts "recurrence" or "explicit". Throws std::invalid_argument.
Construction parse_construction(std::string_view text);

class NoncentralTriangle {
 public:
  NoncentralTriangle(std::vector<std::vector<AlphaPoly>> rows, Construction construction);

  [[nodiscard]] std::size_t n_max() const { return rows_.size() - 1; }
  [[nodiscard]] Construction construction() const { return construction_; }

  /// s(n,k,alpha). Throws std::out_of_range outside 0 <= k <= n <= n_max.
  [[nodiscard]] const AlphaPoly& at(std::size_t n, std::size_t k) const;

  /// Copy of this triangle with `delta` added to the alpha^power coefficient
  /// of entry (n,k). Used to confirm that verification detects corruption.
  [[nodiscard]] NoncentralTriangle with_perturbed_coefficient(std::size_t n, std::size_t k,
                                                              std::size_t power,
                                                              const ExactInt& delta) const;

  friend bool operator==(const NoncentralTriangle& a, const NoncentralTriangle& b) {
    return a.rows_ == b.rows_;
  }

 private:
  std::vector<std::vector<AlphaPoly>> rows_;
  Construction construction_;
};

NoncentralTriangle build_by_recurrence(std::size_t n_max);
/// `classical` must reach at least n_max.
NoncentralTriangle build_by_explicit(std::size_t n_max, const StirlingTable& classical);
NoncentralTriangle build_by_explicit(std::size_t n_max);

Rational noncentral_eval(const NoncentralTriangle& t, std::size_t n, std::size_t k,
                         const Rational& alpha);

/// s(n,1,alpha) = n! sum_{k=0}^{n-1} (-1)^(n-k-1) C(-alpha,k) / (n-k).
/// Throws std::invalid_argument for n < 1.
Rational s_n1_sum_formula(std::size_t n, const Rational& alpha);

/// s(n,1,alpha) from s(1,1,alpha) = 1 and
/// s(n,1,alpha) = (-alpha-n+1) s(n-1,1,alpha) + (-alpha)_{n-1}.
/// Throws std::invalid_argument for n < 1.
Rational s_n1_recurrence(std::size_t n, const Rational& alpha);

/// {"n_max": N, "entries": [{"n": .., "k": .., "coeffs": ["..", ..]}, ..]}
/// followed by a newline. Coefficients are decimal strings, low-to-high.
void write_triangle_json(std::ostream& os, const NoncentralTriangle& t);
/// Header "n,k,power,coeff", one line per stored coefficient.
void write_triangle_csv(std::ostream& os, const NoncentralTriangle& t);
/// Inverse of write_triangle_json. Throws std::invalid_argument on a
/// malformed document or a missing entry.
NoncentralTriangle read_triangle_json(std::string_view text,
                                      Construction tag = Construction::kRecurrence);

}  // namespace ncs

#endif  // NCSTIRLING_NONCENTRAL_HPP
