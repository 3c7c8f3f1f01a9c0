#include "ncstirling/stirling.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace ncs {

StirlingTable::StirlingTable(std::size_t n_max) {
  rows_.reserve(n_max + 1);
  rows_.push_back({ExactInt(1)});
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto& prev = rows_.back();
    const ExactInt m(static_cast<std::int64_t>(n - 1));
    std::vector<ExactInt> row(n + 1);
    for (std::size_t k = 1; k <= n; ++k) {
      row[k] = prev[k - 1];
      if (k < n) row[k] -= m * prev[k];
    }
    rows_.push_back(std::move(row));
  }
}

const ExactInt& StirlingTable::at(std::size_t n, std::size_t k) const {
  if (n > n_max() || k > n) {
    throw std::out_of_range("s(" + std::to_string(n) + "," + std::to_string(k) +
                            ") outside table of order " + std::to_string(n_max()));
  }
  return rows_[n][k];
}

ExactInt StirlingTable::unsigned_at(std::size_t n, std::size_t k) const { return at(n, k).abs(); }

std::span<const ExactInt> StirlingTable::row(std::size_t n) const {
  if (n > n_max()) throw std::out_of_range("Stirling row " + std::to_string(n) + " not in table");
  return rows_[n];
}

StirlingTable build_stirling_table(std::size_t n_max) { return StirlingTable(n_max); }

std::vector<ExactInt> stirling_expansion_oracle(std::size_t n) {
  // Multiply out prod_{j<n} (x - j) one linear factor at a time.
  std::vector<ExactInt> c{ExactInt(1)};
  for (std::size_t j = 0; j < n; ++j) {
    const ExactInt root(static_cast<std::int64_t>(j));
    std::vector<ExactInt> next(c.size() + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= root * c[i];
    }
    c = std::move(next);
  }
  return c;
}

ExactInt unsigned_stirling(const StirlingTable& table, std::size_t n, std::size_t k) {
  return table.unsigned_at(n, k);
}

Rational harmonic(std::size_t n) {
  // Accumulate over the common denominator n! and reduce once.
  ExactInt num(0);
  ExactInt den(1);
  for (std::size_t k = 1; k <= n; ++k) {
    const ExactInt kk(static_cast<std::int64_t>(k));
    num = num * kk + den;
    den *= kk;
  }
  return {num, den};
}

void write_stirling_csv(std::ostream& os, const StirlingTable& table) {
  os << "n,k,value\n";
  for (std::size_t n = 0; n <= table.n_max(); ++n) {
    for (std::size_t k = 0; k <= n; ++k) os << n << ',' << k << ',' << table.at(n, k) << '\n';
  }
}

}  // namespace ncs
