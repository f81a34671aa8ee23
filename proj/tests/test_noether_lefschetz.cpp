#include "oracles.hpp"

#include <k3bps/error.hpp>
#include <k3bps/hodge.hpp>
#include <k3bps/noether_lefschetz.hpp>
#include <k3bps/serialize.hpp>

#include <doctest.h>

using namespace k3bps;

TEST_CASE("divisor sums and Eisenstein series against trial division") {
  const auto s3 = divisor_sigma_table(3, 50);
  const auto s5 = divisor_sigma_table(5, 50);
  for (int n = 1; n <= 50; ++n) {
    CHECK(s3[static_cast<std::size_t>(n)] == oracle::sigma(3, n));
    CHECK(s5[static_cast<std::size_t>(n)] == oracle::sigma(5, n));
  }
  CHECK(eisenstein(4, 50) == oracle::e4(50));
  CHECK(eisenstein(6, 50) == oracle::e6(50));
  CHECK_THROWS_AS(eisenstein(8, 5), DomainError);
}

TEST_CASE("STU Noether-Lefschetz series") {
  const auto nl = stu_nl_series(3);
  CHECK(nl == IntSeries{-2, 528, 270864, 10393152});
  const auto a = oracle::e4(12), b = oracle::e6(12);
  const auto longer = stu_nl_series(12);
  for (int n = 0; n <= 12; ++n) {
    Integer c = 0;
    for (int i = 0; i <= n; ++i) c += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(n - i)];
    CHECK(longer[static_cast<std::size_t>(n)] == -2 * c);
  }
}

TEST_CASE("bordered Gram determinant") {
  std::mt19937 rng(2);
  std::uniform_int_distribution<long> g(-4, 4), d(0, 5);
  std::uniform_int_distribution<int> hh(0, 6);
  for (int trial = 0; trial < 40; ++trial) {
    const long a = 2 * g(rng), c = 2 * g(rng), b = g(rng);
    const std::vector<std::vector<long>> gram{{a, b}, {b, c}};
    const std::vector<long> deg{d(rng), d(rng)};
    const int h = hh(rng);
    const std::vector<std::vector<Integer>> m{
        {Integer(2 * h - 2), Integer(deg[0]), Integer(deg[1])},
        {Integer(deg[0]), Integer(a), Integer(b)},
        {Integer(deg[1]), Integer(b), Integer(c)}};
    CHECK(lattice_discriminant(gram, h, deg) == oracle::det3(m));
  }
  for (int d1 = 0; d1 <= 3; ++d1)
    for (int d2 = 0; d2 <= 3; ++d2)
      for (int h = 0; h <= 5; ++h) CHECK(stu_discriminant(h, d1, d2) == 2 * (1 + d1 * d2 - h));
}

TEST_CASE("NL profiles") {
  const auto p = stu_profile(1, 0, 1);
  CHECK(p.discriminant == 0);
  CHECK(p.nl_number == -2);
  CHECK(p.rnl_diamond == SpinTable{{{0, 1}, 1}});
  const auto q = stu_profile(0, 0, 1);
  CHECK(q.nl_number == 528);
  CHECK(q.rnl_diamond == SpinTable{{{0, 0}, 528}});
  CHECK(stu_profile(3, 0, 1).nl_number == 0);
}

TEST_CASE("refined STU tables") {
  CHECK(conjecture_d(0, 1) == SpinTable{{{0, 0}, 488}, {{1, 0}, 1}, {{1, 2}, 1}});
  CHECK(conjecture_d(0, 1).to_string() == "488[0,0] + [1/2,0] + [1/2,1]");
  const SpinTable n11{{{0, 0}, 280964}, {{0, 1}, 1}, {{1, 0}, 1}, {{1, 1}, 488},
                      {{1, 2}, 1},      {{2, 1}, 1}, {{2, 3}, 1}};
  CHECK(conjecture_d(1, 1) == n11);
  const SpinTable n21{{{0, 0}, 15928440}, {{0, 1}, 2}, {{0, 3}, 1}, {{1, 0}, 2}, {{1, 1}, 281452},
                      {{1, 2}, 2},        {{2, 1}, 2}, {{2, 2}, 488}, {{2, 3}, 1}, {{3, 2}, 1},
                      {{3, 4}, 1}};
  CHECK(conjecture_d(2, 1) == n21);
  CHECK(conjecture_d(1, 2) == n21);
  const SpinTable n31{{{0, 0}, 410133618}, {{0, 1}, 4}, {{0, 2}, 488}, {{0, 3}, 1},
                      {{1, 0}, 3},         {{1, 1}, 16209892}, {{1, 2}, 4}, {{1, 4}, 1},
                      {{2, 0}, 488},       {{2, 1}, 4}, {{2, 2}, 281452}, {{2, 3}, 3},
                      {{3, 0}, 1},         {{3, 2}, 2}, {{3, 3}, 488}, {{3, 4}, 1},
                      {{4, 3}, 1},         {{4, 5}, 1}};
  CHECK(conjecture_d(3, 1) == n31);
  CHECK_THROWS_AS(conjecture_d(0, 0), DomainError);
  CHECK_THROWS_AS(conjecture_d(-1, 2), DomainError);
  CHECK_FALSE(stu_positive(0, 0));
  CHECK(stu_positive(0, 1));
}

TEST_CASE("STU Poincare predictions") {
  const auto b = stu_betti_prediction(0, 1, 1);
  CHECK(b.at(0) == BiLaurent::u(-2) + BiLaurent(2) + BiLaurent::u(2));
  CHECK(b.at(1) == BiLaurent::u(-3) + BiLaurent::u(-1) * Rational(3) + BiLaurent(488) + BiLaurent::u(1) * Rational(3) +
                       BiLaurent::u(3));
  for (const auto& [m, p] : stu_betti_prediction(1, 1, 2)) {
    CHECK(p.is_palindromic_u());
    CHECK(p.has_integer_coefficients());
  }
}

TEST_CASE("profile invariants") {
  CHECK(stu_discriminant(1, 0, 1) == 0);
  CHECK(stu_discriminant(0, 0, 1) == 2);
  CHECK(stu_discriminant(3, 1, 1) == -2);
  for (int d1 = 0; d1 <= 3; ++d1)
    for (int h = 0; h <= 6; ++h) {
      const auto p = stu_profile(h, d1, 1);
      CHECK(p.discriminant % 2 == 0);
      CHECK(p.rnl_circ == (p.nl_number == 0 ? SpinTable{} : SpinTable{{{0, 0}, Rational(p.nl_number)}}));
      if (p.discriminant < 0) {
        CHECK(p.nl_number == 0);
        CHECK(p.rnl_circ.empty());
        CHECK(p.rnl_diamond.empty());
      }
      if (p.discriminant == 0) CHECK(p.rnl_diamond == SpinTable{{{0, 1}, 1}});
    }
  CHECK(eisenstein(4, 2) == IntSeries{1, 240, 2160});
}

TEST_CASE("pluggable profiles reproduce the STU evaluation") {
  std::vector<NLProfile> profiles;
  for (int h = 0; h <= 3; ++h) profiles.push_back(nl_profile_from_json(to_json(stu_profile(h, 1, 2))));
  CHECK(refined_pnl(profiles, refined_tables(3)) == conjecture_d(1, 2));
}

TEST_CASE("STU tables reduce to integral genus expansions") {
  for (int d1 = 0; d1 <= 3; ++d1) {
    const SpinTable t = conjecture_d(d1, 1);
    CHECK(t.is_integral());
    CHECK(t.is_nonnegative());
    CHECK_NOTHROW(unrefine(t));
  }
  const auto b = stu_betti_prediction(0, 1, 2);
  for (const auto& [e, c] : b.at(2).terms()) CHECK(c > 0);
}
