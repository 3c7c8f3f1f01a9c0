// Classical Stirling numbers of the first kind, factorials and harmonic
// numbers.

#ifndef NCSTIRLING_STIRLING_HPP
#define NCSTIRLING_STIRLING_HPP

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "ncstirling/exact.hpp"

namespace ncs {

/// Triangle of signed Stirling numbers s(n,k), 0 <= k <= n <= n_max.
///
/// Built eagerly by s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k) and read-only
/// afterwards. The signed values are stored; unsigned values are derived.
class StirlingTable {
 public:
  explicit StirlingTable(std::size_t n_max);

  [[nodiscard]] std::size_t n_max() const { return rows_.size() - 1; }

  /// Signed s(n,k). Throws std::out_of_range outside 0 <= k <= n <= n_max.
  [[nodiscard]] const ExactInt& at(std::size_t n, std::size_t k) const;
  /// |s(n,k)|, the number of permutations of n elements with k cycles.
  [[nodiscard]] ExactInt unsigned_at(std::size_t n, std::size_t k) const;
  [[nodiscard]] std::span<const ExactInt> row(std::size_t n) const;

 private:
  std::vector<std::vector<ExactInt>> rows_;
};

StirlingTable build_stirling_table(std::size_t n_max);

/// Coefficients of x(x-1)...(x-n+1), low-to-high, by direct expansion.
/// Independent of StirlingTable; row n of the table must match it.
std::vector<ExactInt> stirling_expansion_oracle(std::size_t n);

ExactInt unsigned_stirling(const StirlingTable& table, std::size_t n, std::size_t k);

/// H_n = 1 + 1/2 + ... + 1/n, with H_0 = 0.
Rational harmonic(std::size_t n);

/// CSV dump with header "n,k,value", one line per entry.
void write_stirling_csv(std::ostream& os, const StirlingTable& table);

}  // namespace ncs

#endif  // NCSTIRLING_STIRLING_HPP
