#include "oracles.hpp"

#include <k3bps/error.hpp>
#include <k3bps/su2.hpp>

#include <doctest.h>

using namespace k3bps;

TEST_CASE("characters") {
  CHECK(character(0, CharVar::y) == BiLaurent(1));
  CHECK(character(1, CharVar::u) == BiLaurent::u(-1) + BiLaurent::u(1));
  CHECK(character(2, CharVar::y) == BiLaurent::y(-2) + BiLaurent(1) + BiLaurent::y(2));
  CHECK(spin_label(3) == "3/2");
  CHECK(spin_label(4) == "2");
}

TEST_CASE("decompose inverts realize") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const SpinTable t = oracle::random_spin_table(rng, 5, 6);
    CHECK(decompose(t.realize()) == t);
  }
  CHECK_THROWS_AS(decompose(BiLaurent::u(1)), DomainError);
}

TEST_CASE("tensor is multiplicative under realization") {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const SpinTable a = oracle::random_spin_table(rng, 4, 3);
    const SpinTable b = oracle::random_spin_table(rng, 4, 3);
    CHECK(tensor(a, b).realize() == a.realize() * b.realize());
  }
  const SpinTable half{{{1, 0}, 1}};
  CHECK(tensor(half, half) == SpinTable{{{0, 0}, 1}, {{2, 0}, 1}});
}

TEST_CASE("unrefine against a direct basis expansion") {
  std::mt19937 rng(8);
  const BiLaurent basis = BiLaurent::y(-1) + BiLaurent(2) + BiLaurent::y(1);
  for (int trial = 0; trial < 30; ++trial) {
    const SpinTable t = oracle::random_spin_table(rng, 4, 4);
    BiLaurent weighted;
    for (const auto& [k, c] : t.entries())
      weighted += character(k.first, CharVar::y) * (c * sign_power(k.second) * (k.second + 1));
    const GenusTable g = unrefine(t);
    BiLaurent rebuilt;
    for (const auto& [genus, n] : g) rebuilt += basis.pow(static_cast<unsigned>(genus)) * Rational(n);
    CHECK(rebuilt == weighted);
  }
  const SpinTable r1{{{0, 0}, 20}, {{1, 1}, 1}};
  CHECK(unrefine(r1) == GenusTable{{0, 24}, {1, -2}});
}

TEST_CASE("spin table text form and errors") {
  const SpinTable t{{{0, 0}, 488}, {{1, 0}, 1}, {{1, 2}, 1}};
  CHECK(t.to_string() == "488[0,0] + [1/2,0] + [1/2,1]");
  SpinTable bad;
  CHECK_THROWS_AS(bad.add(-1, 0, 1), DomainError);
  const SpinTable frac{{{0, 0}, Rational(1, 2)}};
  CHECK_FALSE(frac.is_integral());
  CHECK_THROWS_AS(unrefine(frac), Falsification);
}

TEST_CASE("Clebsch-Gordan examples and algebraic laws") {
  const SpinTable a{{{1, 1}, 1}}, b{{{0, 1}, 1}};
  CHECK(tensor(a, b) == SpinTable{{{1, 0}, 1}, {{1, 2}, 1}});
  const SpinTable unit{{{0, 0}, 1}};
  CHECK(tensor(a, unit) == a);
  CHECK(tensor(SpinTable{{{2, 0}, 1}}, SpinTable{{{2, 0}, 1}}) ==
        SpinTable{{{0, 0}, 1}, {{2, 0}, 1}, {{4, 0}, 1}});
  std::mt19937 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = oracle::random_spin_table(rng, 3, 3), y = oracle::random_spin_table(rng, 3, 3),
               z = oracle::random_spin_table(rng, 3, 3);
    CHECK(tensor(x, y) == tensor(y, x));
    CHECK(tensor(tensor(x, y), z) == tensor(x, tensor(y, z)));
  }
}

TEST_CASE("unrefine of the h = 4 table") {
  const SpinTable r4{{{0, 0}, 13938}, {{0, 2}, 21}, {{1, 1}, 2233}, {{1, 3}, 1}, {{2, 0}, 21},
                     {{2, 2}, 253},   {{3, 1}, 1},  {{3, 3}, 21},   {{4, 4}, 1}};
  CHECK(unrefine(r4) == GenusTable{{0, 25650}, {1, -8550}, {2, 1401}, {3, -126}, {4, 5}});
  CHECK(unrefine(SpinTable{{{0, 0}, 1}}) == GenusTable{{0, 1}});
}
