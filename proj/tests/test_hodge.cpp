#include "oracles.hpp"

#include <k3bps/hodge.hpp>

#include <doctest.h>

using namespace k3bps;

namespace {

// Keys are (2 j_L, 2 j_R).
const std::vector<SpinTable> kTable1{
    {{{0, 0}, 1}},
    {{{0, 0}, 20}, {{1, 1}, 1}},
    {{{0, 0}, 231}, {{1, 1}, 21}, {{2, 2}, 1}},
    {{{0, 0}, 1981}, {{0, 2}, 1}, {{1, 1}, 252}, {{2, 0}, 1}, {{2, 2}, 21}, {{3, 3}, 1}},
    {{{0, 0}, 13938}, {{0, 2}, 21}, {{1, 1}, 2233}, {{1, 3}, 1}, {{2, 0}, 21}, {{2, 2}, 253},
     {{3, 1}, 1}, {{3, 3}, 21}, {{4, 4}, 1}},
};

const std::vector<SpinTable> kDiamond{
    {{{0, 0}, 1}},
    {{{1, 1}, 1}},
    {{{0, 0}, 1}, {{1, 1}, 1}, {{2, 2}, 1}},
    {{{0, 0}, 1}, {{0, 2}, 1}, {{1, 1}, 2}, {{2, 0}, 1}, {{2, 2}, 1}, {{3, 3}, 1}},
    {{{0, 0}, 3}, {{0, 2}, 1}, {{1, 1}, 3}, {{1, 3}, 1}, {{2, 0}, 1}, {{2, 2}, 3}, {{3, 1}, 1},
     {{3, 3}, 1}, {{4, 4}, 1}},
};

}  // namespace

TEST_CASE("plethystic route agrees with the factor-by-factor product") {
  CHECK(plethystic_product(hodge_factor_base(), 6) == product_by_factors(hodge_factor_base(), 6));
  CHECK(plethystic_product(diamond_factor_base(), 6) == product_by_factors(diamond_factor_base(), 6));
  CHECK(plethystic_product(kkv_factor_base(), 6) == product_by_factors(kkv_factor_base(), 6));
}

TEST_CASE("Euler characteristics of Hilbert schemes") {
  const auto euler = oracle::eta_power_inverse(24, 8);
  const auto series = hodge_product(8);
  for (int h = 0; h <= 8; ++h) CHECK(series.coeff(h).evaluate(1, 1) == Rational(euler[static_cast<std::size_t>(h)]));
}

TEST_CASE("refined invariants for h <= 4") {
  const auto r = refined_invariants(4);
  REQUIRE(r.size() == 5);
  for (int h = 0; h <= 4; ++h) CHECK(r[static_cast<std::size_t>(h)] == kTable1[static_cast<std::size_t>(h)]);
}

TEST_CASE("refined invariants at h = 5, 6") {
  const auto r = refined_invariants(6);
  CHECK(r[5].at(2, 2) == 2254);
  CHECK(r[6].at(3, 3) == 2255);
  CHECK(r[5].at(0, 0) == 84777);
  CHECK(r[6].at(0, 0) == 460272);
  CHECK(refined_invariant(-1).empty());
}

TEST_CASE("structural properties of R^h") {
  const auto r = refined_invariants(7);
  for (int h = 0; h <= 7; ++h) {
    const auto& t = r[static_cast<std::size_t>(h)];
    CHECK(t.is_integral());
    CHECK(t.is_nonnegative());
    CHECK(t.at(h, h) == 1);
    CHECK(t.max_jl2() == h);
    for (const auto& [k, c] : t.entries()) {
      CHECK(t.at(k.second, k.first) == c);     // u <-> y symmetry of the product
      CHECK((k.first + k.second) % 2 == 0);  // j_L + j_R integral
    }
  }
}

TEST_CASE("diamond and circ parts") {
  const auto triples = refined_tables(6);
  for (int h = 0; h <= 4; ++h) CHECK(triples[static_cast<std::size_t>(h)].diamond == kDiamond[static_cast<std::size_t>(h)]);
  for (const auto& t : triples) {
    CHECK(t.circ.is_integral());
    CHECK(t.circ.is_nonnegative());
    SpinTable sum = t.circ;
    sum += t.diamond;
    CHECK(sum == t.full);
  }
}

TEST_CASE("KKV numbers by basis change and by direct expansion") {
  const auto reduced = kkv_reduction(refined_invariants(8), 8);
  const auto direct = kkv_from_product(8);
  CHECK(reduced == direct);
  CHECK(reduced[4].at(4) == 5);
  CHECK(reduced[3].at(2) == 88);
  CHECK(reduced[4].at(0) == 25650);
  // r^h_h = (-1)^h (h + 1)
  for (int h = 0; h <= 8; ++h) CHECK(reduced[static_cast<std::size_t>(h)].at(h) == sign_power(h) * (h + 1));
  int entries = 0;
  for (int h = 0; h <= 4; ++h) entries += static_cast<int>(reduced[static_cast<std::size_t>(h)].size());
  CHECK(entries == 15);
}

TEST_CASE("diagonal stabilization and sign pattern") {
  const auto r = refined_invariants(8);
  for (int h = 2; h <= 8; ++h) CHECK(r[static_cast<std::size_t>(h)].at(h - 1, h - 1) == 21);
  const auto kkv = kkv_reduction(r, 6);
  for (const auto& t : kkv)
    for (const auto& [g, n] : t) CHECK(sgn(n) == sign_power(g));
}

TEST_CASE("Hodge coefficients are palindromic and specialize to the chi_y product") {
  const auto hodge = hodge_product(6);
  const auto chi = plethystic_product(kkv_factor_base(), 6);
  for (int h = 0; h <= 6; ++h) {
    const BiLaurent& p = hodge.coeff(h);
    CHECK(p == p.invert_u());
    CHECK(p == p.invert_y());
    CHECK(p.has_integer_coefficients());
    CHECK(p.subs_u(-1).scale_y(-1) == chi.coeff(h));
  }
}
