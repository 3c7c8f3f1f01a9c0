#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "ncstirling/stirling.hpp"
#include "oracles.hpp"

using namespace ncs;

TEST_SUITE("stirling_classic") {

TEST_CASE("small values") {
  const StirlingTable t = build_stirling_table(6);
  CHECK(t.at(0, 0) == ExactInt(1));
  CHECK(t.at(1, 1) == ExactInt(1));
  CHECK(t.at(3, 1) == ExactInt(2));
  CHECK(t.at(3, 2) == ExactInt(-3));
  CHECK(t.at(3, 3) == ExactInt(1));
  CHECK(t.at(4, 2) == ExactInt(11));
  CHECK(t.at(4, 1) == ExactInt(-6));
  CHECK(t.at(4, 3) == ExactInt(-6));
  CHECK(t.at(6, 3) == ExactInt(-225));
}

TEST_CASE("expansion oracle") {
  auto as_ints = [](std::size_t n) {
    std::vector<std::int64_t> v;
    for (const auto& c : stirling_expansion_oracle(n)) v.push_back(c.to_int64());
    return v;
  };
  CHECK(as_ints(0) == std::vector<std::int64_t>{1});
  CHECK(as_ints(2) == std::vector<std::int64_t>{0, -1, 1});
  CHECK(as_ints(3) == std::vector<std::int64_t>{0, 2, -3, 1});
}

TEST_CASE("table rows equal the expansion oracle") {
  const StirlingTable t = build_stirling_table(40);
  for (std::size_t n = 0; n <= 40; ++n) {
    const auto oracle = stirling_expansion_oracle(n);
    const auto row = t.row(n);
    REQUIRE(oracle.size() == row.size());
    for (std::size_t k = 0; k <= n; ++k) CHECK(row[k] == oracle[k]);
  }
}

TEST_CASE("unsigned values count permutations by cycles") {
  const StirlingTable t = build_stirling_table(8);
  for (int n = 0; n <= 8; ++n) {
    const auto hist = testing::cycle_count_histogram(n);
    for (int k = 0; k <= n; ++k) {
      CHECK(unsigned_stirling(t, n, k) == ExactInt(hist[static_cast<std::size_t>(k)]));
    }
  }
  CHECK(unsigned_stirling(t, 3, 2) == ExactInt(3));
  CHECK(unsigned_stirling(t, 2, 1) == ExactInt(1));
  CHECK(unsigned_stirling(t, 7, 7) == ExactInt(1));
}

TEST_CASE("structural invariants") {
  const std::size_t N = 60;
  const StirlingTable t = build_stirling_table(N);
  for (std::size_t n = 0; n <= N; ++n) {
    CHECK(t.at(n, n) == ExactInt(1));
    if (n >= 1) CHECK(t.at(n, 0).is_zero());

    ExactInt unsigned_sum(0);
    ExactInt signed_sum(0);
    for (std::size_t k = 0; k <= n; ++k) {
      if (k >= 1) CHECK(t.at(n, k).sign() == ((n - k) % 2 == 0 ? 1 : -1));
      unsigned_sum += t.unsigned_at(n, k);
      signed_sum += t.at(n, k);
    }
    CHECK(unsigned_sum == ExactInt::factorial(n));
    if (n >= 2) CHECK(signed_sum.is_zero());
  }
}

TEST_CASE("index errors") {
  const StirlingTable t = build_stirling_table(4);
  CHECK_THROWS_AS((void)t.at(5, 0), std::out_of_range);
  CHECK_THROWS_AS((void)t.at(2, 3), std::out_of_range);
  CHECK_THROWS_AS(unsigned_stirling(t, 3, 4), std::out_of_range);
  CHECK_THROWS_AS((void)t.row(5), std::out_of_range);
  CHECK(build_stirling_table(0).n_max() == 0);
}

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(0) == Rational(0));
  CHECK(harmonic(1) == Rational(1));
  CHECK(harmonic(3) == Rational(ExactInt(11), ExactInt(6)));
  CHECK(harmonic(4) == Rational(ExactInt(25), ExactInt(12)));
  for (std::size_t n = 1; n <= 100; ++n) {
    CHECK(harmonic(n) - harmonic(n - 1) == Rational(ExactInt(1), ExactInt(static_cast<std::int64_t>(n))));
  }
}

TEST_CASE("CSV dump") {
  std::ostringstream os;
  write_stirling_csv(os, build_stirling_table(2));
  CHECK(os.str() == "n,k,value\n0,0,1\n1,0,0\n1,1,1\n2,0,0\n2,1,-1\n2,2,1\n");
}

}  // TEST_SUITE
