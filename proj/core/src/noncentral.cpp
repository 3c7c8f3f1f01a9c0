#include "ncstirling/noncentral.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace ncs {

namespace {

// -alpha - n
AlphaPoly shift_factor(std::size_t n) {
  return AlphaPoly(std::vector<ExactInt>{ExactInt(-static_cast<std::int64_t>(n)), ExactInt(-1)});
}

void require_order_one(std::size_t n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be >= 1");
}

}  // namespace

std::string_view to_string(Construction c) {
  return c == Construction::kRecurrence ? "recurrence" : "explicit";
}

Construction parse_construction(std::string_view text) {
  if (text == "recurrence") return Construction::kRecurrence;
  if (text == "explicit") return Construction::kExplicit;
  throw std::invalid_argument("unknown construction '" + std::string(text) + "'");
}

NoncentralTriangle::NoncentralTriangle(std::vector<std::vector<AlphaPoly>> rows,
                                       Construction construction)
    : rows_(std::move(rows)), construction_(construction) {
  if (rows_.empty()) throw std::invalid_argument("triangle needs at least row 0");
  for (std::size_t n = 0; n < rows_.size(); ++n) {
    if (rows_[n].size() != n + 1) {
      throw std::invalid_argument("triangle row " + std::to_string(n) + " has " +
                                  std::to_string(rows_[n].size()) + " entries");
    }
  }
}

const AlphaPoly& NoncentralTriangle::at(std::size_t n, std::size_t k) const {
  if (n > n_max() || k > n) {
    throw std::out_of_range("s(" + std::to_string(n) + "," + std::to_string(k) +
                            ",a) outside triangle of order " + std::to_string(n_max()));
  }
  return rows_[n][k];
}

NoncentralTriangle NoncentralTriangle::with_perturbed_coefficient(std::size_t n, std::size_t k,
                                                                  std::size_t power,
                                                                  const ExactInt& delta) const {
  NoncentralTriangle copy = *this;
  copy.rows_[n][k] = at(n, k) + AlphaPoly::monomial(power, delta);
  return copy;
}

NoncentralTriangle build_by_recurrence(std::size_t n_max) {
  std::vector<std::vector<AlphaPoly>> rows;
  rows.reserve(n_max + 1);
  rows.push_back({AlphaPoly{1}});
  for (std::size_t n = 0; n < n_max; ++n) {
    const auto& prev = rows.back();
    const AlphaPoly factor = shift_factor(n);
    std::vector<AlphaPoly> row(n + 2);
    row[0] = factor * prev[0];
    for (std::size_t i = 1; i <= n; ++i) row[i] = factor * prev[i] + prev[i - 1];
    row[n + 1] = prev[n];
    rows.push_back(std::move(row));
  }
  return {std::move(rows), Construction::kRecurrence};
}

NoncentralTriangle build_by_explicit(std::size_t n_max, const StirlingTable& classical) {
  if (classical.n_max() < n_max) {
    throw std::invalid_argument("Stirling table of order " + std::to_string(classical.n_max()) +
                                " cannot back a triangle of order " + std::to_string(n_max));
  }
  std::vector<AlphaPoly> falling;
  falling.reserve(n_max + 1);
  for (std::size_t k = 0; k <= n_max; ++k) falling.push_back(falling_factorial_poly(k));

  std::vector<std::vector<AlphaPoly>> rows(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    rows[n].resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      AlphaPoly sum;
      for (std::size_t k = 0; k <= n - i; ++k) {
        const ExactInt& s = classical.at(n - k, i);
        if (s.is_zero()) continue;
        sum = sum + falling[k].scaled(binomial(ExactInt(static_cast<std::int64_t>(n)), k) * s);
      }
      rows[n][i] = std::move(sum);
    }
  }
  return {std::move(rows), Construction::kExplicit};
}

NoncentralTriangle build_by_explicit(std::size_t n_max) {
  return build_by_explicit(n_max, build_stirling_table(n_max));
}

Rational noncentral_eval(const NoncentralTriangle& t, std::size_t n, std::size_t k,
                         const Rational& alpha) {
  return t.at(n, k).evaluate(alpha);
}

Rational s_n1_sum_formula(std::size_t n, const Rational& alpha) {
  require_order_one(n, "s_n1_sum_formula");
  const Rational minus_alpha = -alpha;
  Rational sum;
  for (std::size_t k = 0; k < n; ++k) {
    Rational term = binomial_rational(minus_alpha, k) /
                    Rational(static_cast<std::int64_t>(n - k));
    if ((n - k - 1) % 2 == 1) term = -term;
    sum += term;
  }
  return Rational(ExactInt::factorial(n)) * sum;
}

Rational s_n1_recurrence(std::size_t n, const Rational& alpha) {
  require_order_one(n, "s_n1_recurrence");
  const Rational minus_alpha = -alpha;
  Rational value(1);
  Rational falling(1);  // (-alpha)_{m-1}
  for (std::size_t m = 2; m <= n; ++m) {
    falling *= minus_alpha - Rational(static_cast<std::int64_t>(m - 2));
    value = (minus_alpha - Rational(static_cast<std::int64_t>(m - 1))) * value + falling;
  }
  return value;
}

void write_triangle_json(std::ostream& os, const NoncentralTriangle& t) {
  nlohmann::ordered_json doc;
  doc["n_max"] = t.n_max();
  auto entries = nlohmann::ordered_json::array();
  for (std::size_t n = 0; n <= t.n_max(); ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      nlohmann::ordered_json e;
      e["n"] = n;
      e["k"] = k;
      e["coeffs"] = t.at(n, k).to_strings();
      entries.push_back(std::move(e));
    }
  }
  doc["entries"] = std::move(entries);
  os << doc.dump() << '\n';
}

void write_triangle_csv(std::ostream& os, const NoncentralTriangle& t) {
  os << "n,k,power,coeff\n";
  for (std::size_t n = 0; n <= t.n_max(); ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      const auto coeffs = t.at(n, k).coefficients();
      for (std::size_t p = 0; p < coeffs.size(); ++p) {
        os << n << ',' << k << ',' << p << ',' << coeffs[p] << '\n';
      }
    }
  }
}

NoncentralTriangle read_triangle_json(std::string_view text, Construction tag) {
  try {
    const auto doc = nlohmann::json::parse(text);
    const auto n_max = doc.at("n_max").get<std::size_t>();
    std::vector<std::vector<AlphaPoly>> rows(n_max + 1);
    std::vector<std::vector<bool>> seen(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
      rows[n].resize(n + 1);
      seen[n].resize(n + 1);
    }
    for (const auto& e : doc.at("entries")) {
      const auto n = e.at("n").get<std::size_t>();
      const auto k = e.at("k").get<std::size_t>();
      if (n > n_max || k > n) throw std::invalid_argument("entry index out of range");
      const auto coeffs = e.at("coeffs").get<std::vector<std::string>>();
      AlphaPoly p = AlphaPoly::from_strings(coeffs);
      if (static_cast<std::size_t>(p.degree() + 1) != coeffs.size()) {
        throw std::invalid_argument("coefficient list has trailing zeros");
      }
      rows[n][k] = std::move(p);
      seen[n][k] = true;
    }
    for (std::size_t n = 0; n <= n_max; ++n) {
      for (std::size_t k = 0; k <= n; ++k) {
        if (!seen[n][k]) {
          throw std::invalid_argument("missing entry (" + std::to_string(n) + "," +
                                      std::to_string(k) + ")");
        }
      }
    }
    return {std::move(rows), tag};
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed triangle JSON: ") + e.what());
  }
}

}  // namespace ncs
